#pragma once

#include <string>
#include <vector>

#include "pmcut/cells.hpp"
#include "pmcut/certify.hpp"
#include "pmcut/family.hpp"
#include "pmcut/network.hpp"

namespace pmcut {

// Network document: header `paramnet <n>`, then one line per arc
// `<tail> <head> <a> <b> <c>` with node tokens s/t/index and exact rationals.
ParamNetwork parse_network(const std::string& text);

// Canonical form: source arcs sorted by head, then internal arcs by
// (tail, head), then sink arcs by tail; rationals in lowest terms.
std::string serialize_network(const ParamNetwork& net);

// Certificate document: header `paramcerts <n>`, then per cut a record
// `cert <mask> <lambda> <mu>` followed by `<tail> <head> <flow>` lines.
std::vector<Certificate> parse_certificates(const std::string& text);
std::string serialize_certificates(const std::vector<Certificate>& certs,
                                   const ParamNetwork& net);

// Cell document: header `paramcells <n>`, a `box <l> <b> <r> <t>` line, then
// `cell <mask> <k>` with k vertex lines each `<lambda> <mu>`, and an
// `empty <mask>` line per cut without a fat cell.
CellDiagram parse_cells(const std::string& text);
std::string serialize_cells(const CellDiagram& diagram);

// Sweep document: header `paramsweep <n>`, `segment <t0> <t1> <mask>` lines,
// and a trailing `distinct <count>`.
std::string serialize_sweep(const SweepResult& result, int n);

// Structured report: one fact per line, `status PASS|FAIL` last.
std::string format_verification_report(const VerificationReport& report);

// Exact decimal rendering with the given number of significant digits
// (round half away from zero). The only place rationals become decimal.
std::string decimal_string(const Rational& x, int significant = 12);

} // namespace pmcut
