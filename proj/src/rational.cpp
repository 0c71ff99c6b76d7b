#include "pmcut/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pmcut {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

std::optional<BigInt> BigInt::parse(const std::string& s) {
    if (!is_integer_token(s)) return std::nullopt;
    // leading zeros are fine for mpz; reject "-0"? keep it, it canonicalizes to 0
    return BigInt(mpz_class(s, 10));
}

BigInt BigInt::div_exact(const BigInt& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    if (mpz_sgn(r.get_mpz_t()) != 0) throw std::domain_error("inexact integer division");
    return BigInt(q);
}

BigInt BigInt::div_floor(const BigInt& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return BigInt(q);
}

BigInt BigInt::pow(unsigned long e) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
    return BigInt(r);
}

BigInt BigInt::pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return BigInt(r);
}

BigInt BigInt::isqrt() const {
    if (sign() < 0) throw std::domain_error("isqrt of negative");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v_.get_mpz_t());
    return BigInt(r);
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    v_ = mpq_class(num.raw());
    v_ /= mpq_class(den.raw());
    // mpq_class division canonicalizes, including the sign of the denominator
}

std::optional<Rational> Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        auto n = BigInt::parse(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    if (den[0] == '-') return std::nullopt; // denominators are written positive
    auto n = BigInt::parse(num);
    auto d = BigInt::parse(den);
    if (!n || !d || d->is_zero()) return std::nullopt;
    return Rational(*n, *d);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace pmcut
