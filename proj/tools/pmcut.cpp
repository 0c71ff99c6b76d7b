#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pmcut/certify.hpp"
#include "pmcut/cells.hpp"
#include "pmcut/family.hpp"
#include "pmcut/io.hpp"
#include "pmcut/maxflow.hpp"
#include "pmcut/svg.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pmcut::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::vector<pmcut::Rational> parse_rational_list(const std::string& text, std::size_t expect) {
    std::vector<pmcut::Rational> vals;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto v = pmcut::Rational::parse(part);
        if (!v) throw pmcut::ParseError("bad rational '" + part + "' in '" + text + "'");
        vals.push_back(*v);
    }
    if (expect != 0 && vals.size() != expect)
        throw pmcut::ParseError("expected " + std::to_string(expect) + " comma-separated values in '" +
                                text + "'");
    return vals;
}

std::pair<pmcut::ParamPoint, pmcut::ParamPoint> parse_box(const std::string& text) {
    auto v = parse_rational_list(text, 4);
    return {{v[0], v[1]}, {v[2], v[3]}};
}

std::vector<pmcut::ParamPoint> parse_path(const std::string& text) {
    std::vector<pmcut::ParamPoint> pts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto v = parse_rational_list(part, 2);
        pts.push_back({v[0], v[1]});
    }
    if (pts.empty()) throw pmcut::ParseError("empty path '" + text + "'");
    return pts;
}

int run(int argc, char** argv) {
    CLI::App app{"exact parametric min-cut toolkit"};
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "use the serial reference kernels");

    // build
    auto* build = app.add_subcommand("build", "emit a family network (and certificates)");
    int build_n = 0;
    std::string build_out, build_certs;
    int cert_limit = 12;
    build->add_option("-n", build_n, "family level")->required();
    build->add_option("-o", build_out, "network output file (default stdout)");
    build->add_option("--certs", build_certs, "also write the 2^n certificates here");
    build->add_option("--cert-limit", cert_limit, "max n for certificate generation");

    // verify
    auto* verify = app.add_subcommand("verify", "certificate and growth-bound verification");
    int verify_n = 0;
    int bounds_up_to = 10;
    std::string report_path;
    int verify_cert_limit = 12;
    verify->add_option("-n", verify_n, "family level to verify")->required();
    verify->add_option("--bounds-up-to", bounds_up_to, "max level for growth bounds");
    verify->add_option("--report", report_path, "write the report here (default stdout)");
    verify->add_option("--cert-limit", verify_cert_limit, "max n for certificate generation");

    // cells
    auto* cells = app.add_subcommand("cells", "enumerate min-cut cells over a box");
    std::string cells_in, cells_out, cells_box = "0,0,1,1";
    int cell_limit = 12;
    cells->add_option("-i", cells_in, "network input file")->required();
    cells->add_option("--box", cells_box, "l,b,r,t corners of the box");
    cells->add_option("-o", cells_out, "cell output file (default stdout)");
    cells->add_option("--limit", cell_limit, "max n for cell enumeration");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "northeast sweep along a monotone path");
    std::string sweep_in, sweep_out, sweep_path = "0,0;1,1";
    int sweep_limit = 20;
    sweep->add_option("-i", sweep_in, "network input file")->required();
    sweep->add_option("--path", sweep_path, "waypoints 'l,m;l,m;...'");
    sweep->add_option("-o", sweep_out, "sweep output file (default stdout)");
    sweep->add_option("--limit", sweep_limit, "max n for the sweep");

    // render
    auto* render = app.add_subcommand("render", "render a cell diagram to SVG");
    std::string render_in, render_certs, render_window, render_out;
    std::vector<std::string> render_zooms;
    bool family_zooms = false;
    int size_px = 640;
    render->add_option("-i", render_in, "cell input file")->required();
    render->add_option("--certs", render_certs, "mark certificate points from this file");
    render->add_option("--window", render_window, "main window l,b,r,t (default: the cell box)");
    render->add_option("--zoom", render_zooms, "zoom panel l,b,r,t (repeatable)");
    render->add_flag("--family-zooms", family_zooms,
                     "add the two construction-box zoom panels for level-n family diagrams");
    render->add_option("--size", size_px, "panel edge in pixels");
    render->add_option("-o", render_out, "SVG output file (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "max flow / min cut at one parameter point");
    std::string solve_in, solve_at;
    solve->add_option("-i", solve_in, "network input file")->required();
    solve->add_option("--at", solve_at, "parameter point lambda,mu")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    pmcut::Exec exec = serial ? pmcut::Exec::serial : pmcut::Exec::parallel;

    if (build->parsed()) {
        pmcut::BuildOptions opts;
        opts.with_certificates = !build_certs.empty();
        opts.certificate_limit = cert_limit;
        opts.exec = exec;
        if (!opts.with_certificates && build_n > 16)
            throw pmcut::LimitExceededError("network emission limited to n <= 16");
        pmcut::FamilyInstance inst = pmcut::build_family(build_n, opts);
        write_output(build_out, pmcut::serialize_network(inst.net));
        if (opts.with_certificates)
            write_output(build_certs, pmcut::serialize_certificates(inst.certificates, inst.net));
        return 0;
    }

    if (verify->parsed()) {
        pmcut::VerifyOptions opts;
        opts.exec = exec;
        opts.certificate_limit = verify_cert_limit;
        pmcut::VerificationReport main_report = pmcut::verify_theorem_main(verify_n, opts);
        pmcut::VerificationReport bounds_report = pmcut::verify_growth_bounds(bounds_up_to);
        std::string text = pmcut::format_verification_report(main_report) +
                           pmcut::format_verification_report(bounds_report);
        write_output(report_path, text);
        if (!report_path.empty())
            std::cout << (main_report.passed() && bounds_report.passed() ? "PASS" : "FAIL")
                      << " (report in " << report_path << ")\n";
        return main_report.passed() && bounds_report.passed() ? 0 : kExitVerifyFail;
    }

    if (cells->parsed()) {
        pmcut::ParamNetwork net = pmcut::parse_network(read_file(cells_in));
        auto [lo, hi] = parse_box(cells_box);
        pmcut::CellOptions opts;
        opts.limit = cell_limit;
        opts.exec = exec;
        pmcut::CellDiagram diagram = pmcut::enumerate_cells(net, lo, hi, opts);
        write_output(cells_out, pmcut::serialize_cells(diagram));
        return 0;
    }

    if (sweep->parsed()) {
        pmcut::ParamNetwork net = pmcut::parse_network(read_file(sweep_in));
        pmcut::SweepOptions opts;
        opts.limit = sweep_limit;
        opts.exec = exec;
        pmcut::SweepResult result = pmcut::northeast_sweep(net, parse_path(sweep_path), opts);
        write_output(sweep_out, pmcut::serialize_sweep(result, net.n()));
        return 0;
    }

    if (render->parsed()) {
        pmcut::CellDiagram diagram = pmcut::parse_cells(read_file(render_in));
        std::vector<pmcut::Certificate> certs;
        if (!render_certs.empty()) certs = pmcut::parse_certificates(read_file(render_certs));
        pmcut::Viewport vp;
        vp.size_px = size_px;
        if (render_window.empty()) {
            vp.window_lo = diagram.box_lo;
            vp.window_hi = diagram.box_hi;
        } else {
            std::tie(vp.window_lo, vp.window_hi) = parse_box(render_window);
        }
        for (const std::string& z : render_zooms) vp.zooms.push_back(parse_box(z));
        if (family_zooms) {
            if (diagram.n < 2)
                throw pmcut::ParseError("--family-zooms needs a level >= 2 diagram");
            pmcut::FamilyConstants c = pmcut::family_constants(diagram.n);
            pmcut::Rational theta(c.theta);
            pmcut::Rational frac = theta / (pmcut::Rational(1) + theta);      // theta/(1+theta)
            pmcut::Rational inv = pmcut::Rational(1) / (pmcut::Rational(1) + theta);
            vp.zooms.push_back({{pmcut::Rational(0), frac}, {pmcut::Rational(1, 4), pmcut::Rational(1)}});
            vp.zooms.push_back({{pmcut::Rational(3, 4), pmcut::Rational(0)}, {pmcut::Rational(1), inv}});
        }
        write_output(render_out, pmcut::render_svg(diagram, certs, vp));
        return 0;
    }

    if (solve->parsed()) {
        pmcut::ParamNetwork net = pmcut::parse_network(read_file(solve_in));
        auto at = parse_rational_list(solve_at, 2);
        pmcut::ParamPoint p{at[0], at[1]};
        pmcut::FlowResult r = pmcut::max_flow(net, p);
        std::ostringstream out;
        out << "value " << r.value.str() << "\n";
        out << "min_cut_minimal " << r.min_cut_minimal.str() << "\n";
        out << "min_cut_maximal " << r.min_cut_maximal.str() << "\n";
        bool unique = r.min_cut_minimal == r.min_cut_maximal;
        out << "unique " << (unique ? "yes" : "no") << "\n";
        if (unique) out << "min_cut " << r.min_cut_minimal.str() << "\n";
        std::cout << out.str();
        return 0;
    }

    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pmcut::LimitExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const pmcut::CellOverlapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
