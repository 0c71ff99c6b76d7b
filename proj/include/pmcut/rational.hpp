#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace pmcut {

// Arbitrary-precision integer. Thin value wrapper around GMP so the rest of
// the code never sees expression templates or mpz_t plumbing.
class BigInt {
public:
    BigInt() : v_(0) {}
    BigInt(long v) : v_(v) {}
    BigInt(int v) : v_(static_cast<long>(v)) {}
    explicit BigInt(const mpz_class& v) : v_(v) {}

    static std::optional<BigInt> parse(const std::string& s);

    const mpz_class& raw() const { return v_; }

    BigInt operator-() const { return BigInt(mpz_class(-v_)); }
    BigInt operator+(const BigInt& o) const { return BigInt(mpz_class(v_ + o.v_)); }
    BigInt operator-(const BigInt& o) const { return BigInt(mpz_class(v_ - o.v_)); }
    BigInt operator*(const BigInt& o) const { return BigInt(mpz_class(v_ * o.v_)); }
    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

    // Exact quotient; throws if o does not divide *this.
    BigInt div_exact(const BigInt& o) const;
    // Floor quotient.
    BigInt div_floor(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t()) == 0; }
    std::strong_ordering operator<=>(const BigInt& o) const {
        int c = mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    int sign() const { return mpz_sgn(v_.get_mpz_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

    // Bits needed for |v|; 0 for v == 0.
    std::size_t bit_length() const {
        return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
    }

    BigInt pow(unsigned long e) const;
    static BigInt pow2(unsigned long e);
    // Floor of the square root; requires v >= 0.
    BigInt isqrt() const;

    std::string str() const { return v_.get_str(); }

    long to_long() const { return v_.get_si(); }
    bool fits_long() const { return v_.fits_slong_p(); }

private:
    mpz_class v_;
};

// Exact rational, always kept canonical: lowest terms, positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(const BigInt& v) : v_(v.raw()) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    static std::optional<Rational> parse(const std::string& s);

    BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }

    // "p" or "p/q", lowest terms, q > 0.
    std::string str() const;

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

// Three-way comparison as an int in {-1, 0, 1}.
inline int rat_cmp(const Rational& x, const Rational& y) {
    auto c = x <=> y;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

inline Rational min(const Rational& x, const Rational& y) { return x < y ? x : y; }
inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

} // namespace pmcut
