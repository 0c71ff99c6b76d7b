#include "pmcut/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace pmcut {

namespace {

struct Token {
    std::string text;
    int col; // 1-based
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return toks;
}

long parse_integer(const Token& t, int line, const char* what, long lo, long hi) {
    auto v = BigInt::parse(t.text);
    if (!v || !v->fits_long())
        throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", line, t.col);
    long x = v->to_long();
    if (x < lo || x > hi)
        throw ParseError(std::string(what) + " out of range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]",
                         line, t.col);
    return x;
}

std::uint64_t parse_mask(const Token& t, int line, int n) {
    auto v = BigInt::parse(t.text);
    if (!v || v->sign() < 0 || !mpz_fits_ulong_p(v->raw().get_mpz_t()))
        throw ParseError("expected cut bitmask, got '" + t.text + "'", line, t.col);
    std::uint64_t mask = mpz_get_ui(v->raw().get_mpz_t());
    if (n < 64 && (mask >> n) != 0)
        throw ParseError("cut bitmask mentions nodes beyond n", line, t.col);
    return mask;
}

NodeId parse_node(const Token& t, int n, int line) {
    if (t.text == "s") return NodeId::source();
    if (t.text == "t") return NodeId::sink();
    long idx = parse_integer(t, line, "node", 1, n == 0 ? 0 : n);
    return NodeId::internal(static_cast<int>(idx));
}

Rational parse_rat(const Token& t, int line) {
    auto v = Rational::parse(t.text);
    if (!v) throw ParseError("expected rational, got '" + t.text + "'", line, t.col);
    return *v;
}

// serialization order: source arcs (by head), internal arcs (by tail, head),
// sink arcs (by tail); s->t counts as a source arc ordered after internal heads
std::vector<const Arc*> canonical_arc_order(const ParamNetwork& net) {
    std::vector<const Arc*> order;
    order.reserve(net.arcs().size());
    for (const Arc& a : net.arcs()) order.push_back(&a);
    auto key = [](const Arc* a) {
        int rank;
        long k1 = 0, k2 = 0;
        if (a->tail.is_source()) {
            rank = 0;
            k1 = a->head.is_sink() ? std::numeric_limits<long>::max() : a->head.index();
        } else if (a->head.is_sink()) {
            rank = 2;
            k1 = a->tail.index();
        } else {
            rank = 1;
            k1 = a->tail.index();
            k2 = a->head.index();
        }
        return std::make_tuple(rank, k1, k2);
    };
    std::sort(order.begin(), order.end(),
              [&](const Arc* x, const Arc* y) { return key(x) < key(y); });
    return order;
}

} // namespace

ParamNetwork parse_network(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::optional<ParamNetwork> net;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::vector<Token> toks = tokenize(lines[i]);
        if (toks.empty()) continue;
        int line = static_cast<int>(i) + 1;
        if (!net) {
            if (toks[0].text != "paramnet")
                throw ParseError("expected 'paramnet <n>' header", line, toks[0].col);
            if (toks.size() != 2)
                throw ParseError("header takes exactly one argument", line, toks[0].col);
            net.emplace(static_cast<int>(parse_integer(toks[1], line, "node count", 0, 64)));
            continue;
        }
        if (toks.size() != 5)
            throw ParseError("arc line needs '<tail> <head> <a> <b> <c>'", line, toks[0].col);
        NodeId tail = parse_node(toks[0], net->n(), line);
        NodeId head = parse_node(toks[1], net->n(), line);
        AffineExpr cap{parse_rat(toks[2], line), parse_rat(toks[3], line), parse_rat(toks[4], line)};
        try {
            net->add_arc(tail, head, std::move(cap));
        } catch (const DuplicateArcError& e) {
            throw DuplicateArcError("line " + std::to_string(line) + ": " + e.what());
        } catch (const std::domain_error& e) {
            throw ParseError(e.what(), line, toks[0].col);
        }
    }
    if (!net) throw ParseError("missing 'paramnet' header");
    return *net;
}

std::string serialize_network(const ParamNetwork& net) {
    std::ostringstream out;
    out << "paramnet " << net.n() << "\n";
    for (const Arc* arc : canonical_arc_order(net))
        out << arc->tail.str() << ' ' << arc->head.str() << ' ' << arc->capacity.a.str() << ' '
            << arc->capacity.b.str() << ' ' << arc->capacity.c.str() << "\n";
    return out.str();
}

std::vector<Certificate> parse_certificates(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::vector<Certificate> certs;
    std::set<std::uint64_t> seen;
    int n = -1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::vector<Token> toks = tokenize(lines[i]);
        if (toks.empty()) continue;
        int line = static_cast<int>(i) + 1;
        if (n < 0) {
            if (toks[0].text != "paramcerts" || toks.size() != 2)
                throw ParseError("expected 'paramcerts <n>' header", line, toks[0].col);
            n = static_cast<int>(parse_integer(toks[1], line, "node count", 0, 64));
            continue;
        }
        if (toks[0].text == "cert") {
            if (toks.size() != 4)
                throw ParseError("cert line needs 'cert <mask> <lambda> <mu>'", line, toks[0].col);
            std::uint64_t mask = parse_mask(toks[1], line, n);
            if (!seen.insert(mask).second)
                throw ParseError("duplicate certificate for one cut", line, toks[1].col);
            Certificate cert;
            cert.cut = CutSet::from_mask(mask);
            cert.point = {parse_rat(toks[2], line), parse_rat(toks[3], line)};
            certs.push_back(std::move(cert));
            continue;
        }
        if (certs.empty())
            throw ParseError("flow line before any 'cert' record", line, toks[0].col);
        if (toks.size() != 3)
            throw ParseError("flow line needs '<tail> <head> <flow>'", line, toks[0].col);
        NodeId tail = parse_node(toks[0], n, line);
        NodeId head = parse_node(toks[1], n, line);
        if (certs.back().flow.find(tail, head))
            throw ParseError("duplicate flow line for one arc", line, toks[0].col);
        certs.back().flow.set(tail, head, parse_rat(toks[2], line));
    }
    if (n < 0) throw ParseError("missing 'paramcerts' header");
    return certs;
}

std::string serialize_certificates(const std::vector<Certificate>& certs,
                                   const ParamNetwork& net) {
    std::vector<const Certificate*> order;
    order.reserve(certs.size());
    for (const Certificate& c : certs) order.push_back(&c);
    std::sort(order.begin(), order.end(),
              [](const Certificate* x, const Certificate* y) { return x->cut < y->cut; });
    std::vector<const Arc*> arcs = canonical_arc_order(net);

    std::ostringstream out;
    out << "paramcerts " << net.n() << "\n";
    for (const Certificate* cert : order) {
        out << "cert " << cert->cut.mask() << ' ' << cert->point.lambda.str() << ' '
            << cert->point.mu.str() << "\n";
        for (const Arc* arc : arcs)
            out << arc->tail.str() << ' ' << arc->head.str() << ' '
                << cert->flow.at(arc->tail, arc->head).str() << "\n";
    }
    return out.str();
}

CellDiagram parse_cells(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    CellDiagram diagram;
    int n = -1;
    bool have_box = false;
    std::optional<CutSet> pending_cut;
    long pending_vertices = 0;
    std::vector<ParamPoint> pending_points;

    auto flush_pending = [&](int line) {
        if (pending_cut && pending_vertices != static_cast<long>(pending_points.size()))
            throw ParseError("cell vertex list cut short", line, 1);
        if (pending_cut) {
            diagram.cells.emplace(*pending_cut,
                                  ConvexPolygon::from_vertices(std::move(pending_points)));
            pending_cut.reset();
            pending_points.clear();
        }
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::vector<Token> toks = tokenize(lines[i]);
        if (toks.empty()) continue;
        int line = static_cast<int>(i) + 1;
        if (n < 0) {
            if (toks[0].text != "paramcells" || toks.size() != 2)
                throw ParseError("expected 'paramcells <n>' header", line, toks[0].col);
            n = static_cast<int>(parse_integer(toks[1], line, "node count", 0, 64));
            diagram.n = n;
            continue;
        }
        if (!have_box) {
            if (toks[0].text != "box" || toks.size() != 5)
                throw ParseError("expected 'box <l> <b> <r> <t>'", line, toks[0].col);
            diagram.box_lo = {parse_rat(toks[1], line), parse_rat(toks[2], line)};
            diagram.box_hi = {parse_rat(toks[3], line), parse_rat(toks[4], line)};
            if (!(diagram.box_lo.lambda < diagram.box_hi.lambda) ||
                !(diagram.box_lo.mu < diagram.box_hi.mu))
                throw ParseError("degenerate box", line, toks[0].col);
            have_box = true;
            continue;
        }
        if (toks[0].text == "cell") {
            if (pending_cut && pending_vertices != static_cast<long>(pending_points.size()))
                throw ParseError("previous cell vertex list cut short", line, toks[0].col);
            flush_pending(line);
            if (toks.size() != 3)
                throw ParseError("expected 'cell <mask> <vertex-count>'", line, toks[0].col);
            CutSet cut = CutSet::from_mask(parse_mask(toks[1], line, n));
            if (diagram.cells.count(cut))
                throw ParseError("duplicate cell record", line, toks[1].col);
            pending_cut = cut;
            pending_vertices = parse_integer(toks[2], line, "vertex count", 1, 1 << 20);
            continue;
        }
        if (toks[0].text == "empty") {
            flush_pending(line);
            if (toks.size() != 2) throw ParseError("expected 'empty <mask>'", line, toks[0].col);
            diagram.degenerate.push_back(CutSet::from_mask(parse_mask(toks[1], line, n)));
            continue;
        }
        if (!pending_cut || pending_vertices == static_cast<long>(pending_points.size()))
            throw ParseError("unexpected line in cell document", line, toks[0].col);
        if (toks.size() != 2)
            throw ParseError("vertex line needs '<lambda> <mu>'", line, toks[0].col);
        pending_points.push_back({parse_rat(toks[0], line), parse_rat(toks[1], line)});
    }
    if (n < 0) throw ParseError("missing 'paramcells' header");
    if (!have_box) throw ParseError("missing 'box' line");
    flush_pending(static_cast<int>(lines.size()));
    std::sort(diagram.degenerate.begin(), diagram.degenerate.end());
    return diagram;
}

std::string serialize_cells(const CellDiagram& diagram) {
    std::ostringstream out;
    out << "paramcells " << diagram.n << "\n";
    out << "box " << diagram.box_lo.lambda.str() << ' ' << diagram.box_lo.mu.str() << ' '
        << diagram.box_hi.lambda.str() << ' ' << diagram.box_hi.mu.str() << "\n";
    for (const auto& [cut, poly] : diagram.cells) {
        out << "cell " << cut.mask() << ' ' << poly.vertices().size() << "\n";
        for (const ParamPoint& v : poly.vertices())
            out << v.lambda.str() << ' ' << v.mu.str() << "\n";
    }
    for (const CutSet& cut : diagram.degenerate) out << "empty " << cut.mask() << "\n";
    return out.str();
}

std::string serialize_sweep(const SweepResult& result, int n) {
    std::ostringstream out;
    out << "paramsweep " << n << "\n";
    for (const SweepSegment& seg : result.segments)
        out << "segment " << seg.t_begin.str() << ' ' << seg.t_end.str() << ' ' << seg.cut.mask()
            << "\n";
    out << "distinct " << result.distinct.size() << "\n";
    return out.str();
}

std::string format_verification_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "paramreport " << report.label << "\n";
    out << "n " << report.n << "\n";
    out << "checks_run " << report.checks_run << "\n";
    char ms[64];
    std::snprintf(ms, sizeof ms, "%.3f", report.elapsed_seconds * 1000.0);
    out << "elapsed_ms " << ms << "\n";
    for (const std::string& f : report.failures) out << "failure " << f << "\n";
    for (const std::string& note : report.notes) out << "note " << note << "\n";
    out << "status " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string decimal_string(const Rational& x, int significant) {
    if (significant < 1) throw std::invalid_argument("need at least one significant digit");
    if (x.is_zero()) return "0";
    bool neg = x.sign() < 0;
    BigInt p = neg ? (-x).numerator() : x.numerator();
    BigInt q = x.denominator();

    auto pow10 = [](long k) { return BigInt(10).pow(static_cast<unsigned long>(k)); };
    // sign of p/q - 10^k
    auto cmp10 = [&](long k) {
        BigInt lhs = p, rhs = q;
        if (k >= 0)
            rhs = rhs * pow10(k);
        else
            lhs = lhs * pow10(-k);
        return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    };

    // decimal exponent: 10^e <= p/q < 10^(e+1)
    long e = static_cast<long>(std::floor((static_cast<double>(p.bit_length()) -
                                           static_cast<double>(q.bit_length())) *
                                          0.30102999566398)) -
             1;
    while (cmp10(e + 1) >= 0) ++e;
    while (cmp10(e) < 0) --e;

    // significand rounded half away from zero
    long shift = significant - 1 - e;
    BigInt num = p, den = q;
    if (shift >= 0)
        num *= pow10(shift);
    else
        den *= pow10(-shift);
    BigInt m = (BigInt(2) * num + den).div_floor(BigInt(2) * den);
    if (m == pow10(significant)) {
        m = pow10(significant - 1);
        ++e;
    }
    std::string digits = m.str();

    std::string out;
    if (e >= significant) {
        out = digits + std::string(e - significant + 1, '0');
    } else if (e >= 0) {
        std::string ip = digits.substr(0, e + 1);
        std::string fp = digits.substr(e + 1);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out = fp.empty() ? ip : ip + "." + fp;
    } else if (e >= -5) {
        std::string fp = std::string(-e - 1, '0') + digits;
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out = "0." + fp;
    } else {
        std::string fp = digits.substr(1);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out = digits.substr(0, 1) + (fp.empty() ? "" : "." + fp) + "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

} // namespace pmcut
