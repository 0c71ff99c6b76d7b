#include "doctest.h"

#include <string>
#include <vector>

#include "pmcut/cells.hpp"
#include "pmcut/certify.hpp"
#include "pmcut/io.hpp"

using namespace pmcut;

namespace {

ParamPoint pt(long ln, long ld, long mn, long md) {
    return {Rational(ln, ld), Rational(mn, md)};
}

} // namespace

TEST_CASE("network documents round-trip") {
    const std::string doc = "paramnet 1\ns 1 1 1 0\n1 t 0 0 1\n";
    ParamNetwork net = parse_network(doc);
    CHECK(net == build_family(1).net);
    CHECK(serialize_network(net) == doc);
    for (int n = 1; n <= 8; ++n) {
        ParamNetwork fam = build_family(n).net;
        CHECK(parse_network(serialize_network(fam)) == fam);
    }
}

TEST_CASE("serialization uses the canonical arc order") {
    CHECK(serialize_network(build_family(2).net) == "paramnet 2\n"
                                                    "s 1 4 4 0\n"
                                                    "s 2 4 1 0\n"
                                                    "2 1 0 0 0\n"
                                                    "1 t 0 0 4\n"
                                                    "2 t 0 0 2\n");
    // messy spacing, reordered lines, unreduced rationals -> same canonical doc
    ParamNetwork net = parse_network("paramnet 2\n\n  2   t 0 0/7 2\n"
                                     "s 2 4 1 0\r\n1 t 0 0 8/2\n2 1 0 0 0\ns 1 4 4 0\n");
    CHECK(net == build_family(2).net);
    CHECK(serialize_network(net) == serialize_network(build_family(2).net));

    // a direct s->t arc serializes after the other source arcs
    ParamNetwork st(1);
    st.add_arc(NodeId::source(), NodeId::sink(), {Rational(0), Rational(0), Rational(1)});
    st.add_arc(NodeId::source(), NodeId::internal(1), {Rational(1), Rational(1), Rational(0)});
    st.add_arc(NodeId::internal(1), NodeId::sink(), {Rational(0), Rational(0), Rational(1)});
    CHECK(serialize_network(st) == "paramnet 1\ns 1 1 1 0\ns t 0 0 1\n1 t 0 0 1\n");

    CHECK(serialize_network(ParamNetwork(0)) == "paramnet 0\n");
    CHECK(parse_network("paramnet 0\n") == ParamNetwork(0));
}

TEST_CASE("network parse errors carry positions") {
    auto line_col = [](const std::string& doc) {
        try {
            parse_network(doc);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.col());
        }
        return std::make_pair(-1, -1);
    };

    CHECK(line_col("paramnet x\n") == std::make_pair(1, 10));
    CHECK(line_col("paramnet 65\n") == std::make_pair(1, 10));
    CHECK(line_col("paramnet -1\n") == std::make_pair(1, 10));
    CHECK(line_col("nonsense 1\n") == std::make_pair(1, 1));
    CHECK(line_col("paramnet 1\ns 1 1 1\n") == std::make_pair(2, 1));       // four tokens
    CHECK(line_col("paramnet 1\ns 2 1 1 0\n") == std::make_pair(2, 3));     // node beyond n
    CHECK(line_col("paramnet 1\ns q 1 1 0\n") == std::make_pair(2, 3));     // bad node token
    CHECK(line_col("paramnet 1\ns 1 1 0.5 0\n") == std::make_pair(2, 7));   // float literal
    CHECK(line_col("paramnet 1\ns 1 1 1/0 0\n") == std::make_pair(2, 7));   // zero denominator
    CHECK(line_col("paramnet 1\n1 1 1 1 0\n") == std::make_pair(2, 1));     // self-loop
    CHECK(line_col("") == std::make_pair(0, 0));                            // missing header

    CHECK_THROWS_AS(parse_network("paramnet 1\ns 1 1 1 0\ns 1 2 2 0\n"), DuplicateArcError);
    try {
        parse_network("paramnet 1\ns 1 1 1 0\ns 1 2 2 0\n");
    } catch (const DuplicateArcError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("certificate documents round-trip") {
    BuildOptions opts;
    opts.with_certificates = true;
    FamilyInstance inst = build_family(2, opts);
    std::string doc = serialize_certificates(inst.certificates, inst.net);

    std::vector<Certificate> back = parse_certificates(doc);
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].cut == inst.certificates[i].cut);
        CHECK(back[i].point == inst.certificates[i].point);
        CHECK(back[i].flow == inst.certificates[i].flow);
    }

    // the document re-serializes identically
    CHECK(serialize_certificates(back, inst.net) == doc);

    // and starts with the expected record layout
    CHECK(doc.substr(0, doc.find('\n')) == "paramcerts 2");
    CHECK(doc.find("cert 0 1/16 13/16\n") != std::string::npos);
    CHECK(doc.find("cert 3 15/16 3/16\n") != std::string::npos);
}

TEST_CASE("certificate parse errors") {
    CHECK_THROWS_AS(parse_certificates(""), ParseError);
    CHECK_THROWS_AS(parse_certificates("paramnet 2\n"), ParseError);
    CHECK_THROWS_AS(parse_certificates("paramcerts 2\ncert 0 1/2\n"), ParseError);
    CHECK_THROWS_AS(parse_certificates("paramcerts 2\ncert 9 1/2 1/2\n"), ParseError);
    CHECK_THROWS_AS(parse_certificates("paramcerts 2\ns 1 1/2\n"), ParseError);
    CHECK_THROWS_AS(
        parse_certificates("paramcerts 2\ncert 0 1/2 1/2\ncert 0 1/3 1/3\n"), ParseError);
    CHECK_THROWS_AS(
        parse_certificates("paramcerts 2\ncert 0 1/2 1/2\ns 1 1\ns 1 2\n"), ParseError);
}

TEST_CASE("cell documents round-trip") {
    CellDiagram d = enumerate_cells(build_family(2).net, pt(0, 1, 0, 1), pt(1, 1, 1, 1));
    std::string doc = serialize_cells(d);
    CellDiagram back = parse_cells(doc);
    CHECK(back.n == d.n);
    CHECK(back.box_lo == d.box_lo);
    CHECK(back.box_hi == d.box_hi);
    CHECK(back.cells == d.cells);
    CHECK(back.degenerate == d.degenerate);
    CHECK(serialize_cells(back) == doc);
    CHECK(doc.substr(0, doc.find('\n')) == "paramcells 2");
    CHECK(doc.find("box 0 0 1 1\n") != std::string::npos);
}

TEST_CASE("cell documents record degenerate cuts") {
    ParamNetwork net = build_family(2).net;
    CellDiagram d =
        enumerate_cells(net, {Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 2)});
    std::string doc = serialize_cells(d);
    CHECK(doc.find("empty 1\n") != std::string::npos);
    CHECK(doc.find("empty 3\n") != std::string::npos);
    CellDiagram back = parse_cells(doc);
    CHECK(back.degenerate == d.degenerate);
    CHECK(back.cells == d.cells);
}

TEST_CASE("cell parse errors") {
    CHECK_THROWS_AS(parse_cells("paramcells 1\n"), ParseError); // no box
    CHECK_THROWS_AS(parse_cells("paramcells 1\nbox 1 1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cells("paramcells 1\nbox 0 0 1 1\ncell 0 3\n0 0\n1 0\n"), ParseError);
    CHECK_THROWS_AS(
        parse_cells("paramcells 1\nbox 0 0 1 1\ncell 0 1\n0 0\ncell 0 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_cells("paramcells 1\nbox 0 0 1 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cells("paramcells 1\nbox 0 0 1 1\ncell 4 1\n0 0\n"), ParseError);
}

TEST_CASE("sweep serialization") {
    ParamNetwork net = build_family(2).net;
    SweepResult r = northeast_sweep(net, {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
    CHECK(serialize_sweep(r, net.n()) == "paramsweep 2\n"
                                         "segment 0 2/5 0\n"
                                         "segment 2/5 1/2 2\n"
                                         "segment 1/2 1 3\n"
                                         "distinct 3\n");
}

TEST_CASE("verification reports format one fact per line") {
    VerificationReport report;
    report.label = "theorem-main";
    report.n = 2;
    report.checks_run = 16;
    report.elapsed_seconds = 0.0123456;
    std::string text = format_verification_report(report);
    CHECK(text == "paramreport theorem-main\nn 2\nchecks_run 16\nelapsed_ms 12.346\nstatus PASS\n");

    report.failures.push_back("cert {1}: min cut not unique at certificate point");
    report.notes.push_back("something worth knowing");
    text = format_verification_report(report);
    CHECK(text.find("failure cert {1}: min cut not unique") != std::string::npos);
    CHECK(text.find("note something worth knowing") != std::string::npos);
    CHECK(text.find("status FAIL\n") != std::string::npos);
}

TEST_CASE("decimal rendering is exact at twelve significant digits") {
    CHECK(decimal_string(Rational(0)) == "0");
    CHECK(decimal_string(Rational(1)) == "1");
    CHECK(decimal_string(Rational(-7)) == "-7");
    CHECK(decimal_string(Rational(1, 2)) == "0.5");
    CHECK(decimal_string(Rational(1, 20)) == "0.05");
    CHECK(decimal_string(Rational(100)) == "100");
    CHECK(decimal_string(Rational(1, 3)) == "0.333333333333");
    CHECK(decimal_string(Rational(2, 3)) == "0.666666666667");
    CHECK(decimal_string(Rational(-1, 3)) == "-0.333333333333");
    CHECK(decimal_string(Rational(205, 208)) == "0.985576923077");
    CHECK(decimal_string(Rational(13, 16)) == "0.8125");
    // rounding is half away from zero
    CHECK(decimal_string(Rational(1, 8), 2) == "0.13");
    CHECK(decimal_string(Rational(-1, 8), 2) == "-0.13");
    CHECK(decimal_string(Rational(15, 1000), 1) == "0.02");
    // tiny and huge magnitudes
    CHECK(decimal_string(Rational(1, 1048576)) == "9.53674316406e-7");
    CHECK(decimal_string(Rational(BigInt::pow2(50))) == "1125899906840000");
    CHECK(decimal_string(Rational(1, BigInt::pow2(50))) == "8.881784197e-16");
    // carries propagate through all digits
    CHECK(decimal_string(Rational(999999999999), 3) == "1000000000000");
    CHECK(decimal_string(Rational(99, 100), 1) == "1");
    CHECK_THROWS_AS(decimal_string(Rational(1), 0), std::invalid_argument);
}
