#include "factorpoly/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "factorpoly/json_io.hpp"
#include "factorpoly/verify.hpp"

namespace fpoly {

namespace {

enum class Format { Text, Json, Csv };

struct GlobalOpts {
    RunConfig run;
    Format format = Format::Text;
    std::string fugacity;  // preset name or config file path
    int f = 0, g = 1;
    bool clip = false;
    std::string quad = "sqrt3";
    std::string part = "c";
    std::string order;  // explicit edge permutation "i,j,k"
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt_double(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

double parse_angle(const std::string& s) {
    static const std::vector<std::pair<std::string, double>> named = {
        {"pi", M_PI},         {"pi/2", M_PI_2},          {"pi/3", M_PI / 3.0},
        {"pi/4", M_PI / 4.0}, {"2pi/3", 2.0 * M_PI / 3.0}, {"3pi/4", 3.0 * M_PI / 4.0},
        {"5pi/6", 5.0 * M_PI / 6.0}};
    for (const auto& [name, value] : named)
        if (s == name) return value;
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad angle '" + s + "'");
    return v;
}

std::vector<int> parse_order(const std::string& s) {
    std::vector<int> order;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok));
    return order;
}

Multigraph load_graph(const std::string& path) { return Multigraph::parse(read_file(path)); }

DegreeBounds bounds_for(const Multigraph& G, const GlobalOpts& opts) {
    if (opts.clip) return DegreeBounds::clipped(G, opts.f, opts.g);
    return DegreeBounds::constant(G.vertex_count(), opts.f, opts.g);
}

FugacitySpec fugacity_for(const Multigraph& G, const GlobalOpts& opts) {
    const std::string& spec = opts.fugacity;
    if (spec.empty() || spec == "interval") return interval_spec(G, bounds_for(G, opts));
    if (spec == "ruelle") return ruelle_spec(G);
    if (spec == "thm26")
        return thm26_spec(G, bounds_for(G, opts), quad_kind_from_string(opts.quad));
    if (spec == "binrec") return binomial_reciprocal_spec(G);
    return parse_fugacity_config(read_file(spec), G);
}

void print_counts(const CoeffSeq& counts, Format format, std::ostream& out,
                  const std::string& method) {
    auto trimmed = counts.trimmed();
    switch (format) {
        case Format::Json: {
            json j;
            j["method"] = method;
            j["counts"] = coeffs_to_json(trimmed);
            out << j.dump() << "\n";
            break;
        }
        case Format::Csv:
            out << "j,count\n";
            for (size_t i = 0; i < trimmed.size(); ++i)
                out << i << "," << trimmed[i].to_string() << "\n";
            break;
        case Format::Text: {
            if (trimmed.empty()) {
                out << "0\n";
                break;
            }
            for (size_t i = 0; i < trimmed.size(); ++i)
                out << (i ? " " : "") << trimmed[i].to_string();
            out << "\n";
            break;
        }
    }
}

int cmd_count(const std::string& graph_path, const std::string& method, GlobalOpts& opts,
              std::ostream& out, std::ostream& err) {
    Multigraph G = load_graph(graph_path);
    FugacitySpec u = fugacity_for(G, opts);
    if (!opts.order.empty()) opts.run.enumeration.edge_order = parse_order(opts.order);

    CoeffSeq counts;
    if (method == "dp") {
        counts = dp_counts(G, u, opts.run.enumeration);
    } else if (method == "brute") {
        counts = brute_counts(G, u, opts.run.enumeration);
    } else if (method == "both") {
        counts = dp_counts(G, u, opts.run.enumeration);
        CoeffSeq check = brute_counts(G, u, opts.run.enumeration);
        if (!(counts == check)) {
            err << "internal error: dp and brute force disagree\n";
            err << "dp:    " << to_json(counts).dump() << "\n";
            err << "brute: " << to_json(check).dump() << "\n";
            return 4;
        }
    } else {
        err << "unknown --method '" << method << "' (dp|brute|both)\n";
        return 2;
    }
    print_counts(counts, opts.format, out, method);
    return 0;
}

json inequality_suite(const CoeffSeq& counts, const RunConfig& run) {
    json out = json::array();
    int d = static_cast<int>(counts.trimmed().size()) - 1;
    if (d >= 1) out.push_back(to_json(newton_check(counts, d)));
    out.push_back(to_json(log_concavity_check(counts)));
    out.push_back(to_json(strict_log_concavity_check(counts)));
    out.push_back(to_json(toeplitz_minors_check(counts, run.max_minor_order, run.minor_budget)));
    out.push_back(to_json(hurwitz_minors_check(counts, run.max_minor_order, run.minor_budget)));
    out.push_back(to_json(prop15_consequences(counts)));
    return out;
}

void render_analysis(const json& report, Format format, std::ostream& out) {
    if (format == Format::Json) {
        out << report.dump() << "\n";
        return;
    }
    if (format == Format::Csv) {
        out << "key,value\n";
        out << "coefficients,\"";
        for (const auto& c : report.at("coefficients")) out << c.get<std::string>() << " ";
        out << "\"\n";
        if (report.contains("roots")) {
            for (const auto& r : report.at("roots").at("roots"))
                out << "root," << fmt_double(r[0].get<double>(), 12) << "  "
                    << fmt_double(r[1].get<double>(), 12) << "\n";
        }
        for (const auto& rep : report.at("inequalities"))
            out << rep.at("name").get<std::string>() << "," << (rep.at("holds").get<bool>() ? "holds" : "fails")
                << "\n";
        if (report.contains("regions"))
            for (const auto& reg : report.at("regions"))
                out << "region " << reg.at("region").get<std::string>() << ","
                    << reg.at("outcome").get<std::string>() << "\n";
        return;
    }
    // text
    out << "coefficients:";
    for (const auto& c : report.at("coefficients")) out << " " << c.get<std::string>();
    out << "\n";
    if (report.contains("roots")) {
        out << "roots:";
        for (const auto& r : report.at("roots").at("roots"))
            out << " (" << fmt_double(r[0].get<double>(), 15) << ", "
                << fmt_double(r[1].get<double>(), 15) << ")";
        int om = report.at("roots").at("origin_multiplicity").get<int>();
        if (om > 0) out << " plus 0 with multiplicity " << om;
        out << "\n";
        const auto& s = report.at("summary");
        out << "real_rooted_nonpositive=" << s.at("real_rooted_nonpositive").get<bool>()
            << " hurwitz_quasi=" << s.at("hurwitz_quasi").get<bool>()
            << " max_real_part=" << fmt_double(s.at("max_real_part").get<double>(), 15)
            << " max_modulus=" << fmt_double(s.at("max_modulus").get<double>(), 15) << "\n";
    }
    for (const auto& rep : report.at("inequalities")) {
        out << rep.at("name").get<std::string>() << ": "
            << (rep.at("holds").get<bool>() ? "holds" : "FAILS");
        if (rep.contains("violation"))
            out << " at j=" << rep.at("violation").at("j").get<int>() << " ("
                << rep.at("violation").at("lhs").get<std::string>() << " < "
                << rep.at("violation").at("rhs").get<std::string>() << ")";
        out << "\n";
    }
    if (report.contains("regions"))
        for (const auto& reg : report.at("regions")) {
            out << reg.at("region").get<std::string>() << ": "
                << reg.at("outcome").get<std::string>();
            if (reg.contains("witness"))
                out << " witness (" << fmt_double(reg.at("witness")[0].get<double>(), 15) << ", "
                    << fmt_double(reg.at("witness")[1].get<double>(), 15) << ")";
            out << "\n";
        }
    if (report.contains("sampling"))
        for (const auto& reg : report.at("sampling"))
            out << "sampled " << reg.at("region").get<std::string>() << ": "
                << reg.at("outcome").get<std::string>() << " (" << reg.at("samples").get<long>()
                << " samples)\n";
}

int cmd_analyze(const std::string& graph_path, const std::string& coeffs_arg,
                const std::vector<std::string>& sectors, const std::vector<double>& discs,
                const std::vector<double>& exteriors, long samples, GlobalOpts& opts,
                std::ostream& out, std::ostream& err) {
    CoeffSeq counts;
    std::optional<Multigraph> G;
    if (!coeffs_arg.empty()) {
        std::stringstream ss(coeffs_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) counts.values.emplace_back(rat_from_string(tok));
    } else if (!graph_path.empty()) {
        G = load_graph(graph_path);
        if (!opts.order.empty()) opts.run.enumeration.edge_order = parse_order(opts.order);
        counts = dp_counts(*G, fugacity_for(*G, opts), opts.run.enumeration);
    } else {
        err << "analyze needs a graph file or --coeffs\n";
        return 2;
    }

    json report;
    report["coefficients"] = to_json(counts);
    QuadPoly poly = counts.as_poly();

    std::vector<Region> regions;
    for (const auto& s : sectors) regions.push_back(Region::sector(parse_angle(s)));
    for (double k : discs) regions.push_back(Region::disc(k));
    for (double k : exteriors) regions.push_back(Region::disc_exterior(k));

    if (!poly.is_zero_poly()) {
        RootSet rs = find_roots(poly, opts.run.roots);
        report["roots"] = to_json(rs);
        report["summary"] = to_json(classify(rs, opts.run.roots));
    } else {
        report["identically_zero"] = true;
    }
    report["inequalities"] = inequality_suite(counts, opts.run);

    if (!regions.empty()) {
        json regs = json::array();
        for (const auto& A : regions) {
            RegionVerdict v = nonvanishing_in(poly, A, opts.run.roots);
            json jv = to_json(v, &A);
            regs.push_back(jv);
        }
        report["regions"] = regs;
    }
    if (samples > 0 && G) {
        json regs = json::array();
        std::optional<FugacitySpec> u;
        if (!opts.fugacity.empty()) u = fugacity_for(*G, opts);
        for (const auto& A : regions) {
            RegionVerdict v =
                sample_nonvanishing(*G, u, A, samples, opts.run.seed, opts.run.enumeration);
            regs.push_back(to_json(v, &A));
        }
        report["sampling"] = regs;
    }

    render_analysis(report, opts.format, out);
    return 0;
}

int cmd_verify(const std::string& id, const std::string& graph_path, GlobalOpts& opts,
               std::ostream& out, std::ostream& err) {
    Multigraph G = load_graph(graph_path);
    CheckOptions copts;
    copts.bounds = bounds_for(G, opts);
    if (!opts.fugacity.empty()) copts.fugacity = fugacity_for(G, opts);
    copts.quad = quad_kind_from_string(opts.quad);
    copts.part = opts.part == "a" ? SectorCase::A : opts.part == "b" ? SectorCase::B
                                                                     : SectorCase::C;
    if (opts.part != "a" && opts.part != "b" && opts.part != "c") {
        err << "--part must be a, b, or c\n";
        return 2;
    }

    std::vector<std::string> ids;
    if (id == "all") ids = theorem_ids();
    else {
        const auto& known = theorem_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            err << "unknown theorem id '" << id << "'\n";
            return 2;
        }
        ids.push_back(id);
    }

    bool falsified = false;
    for (const auto& one : ids) {
        TheoremCheck c = run_check(one, G, copts, opts.run);
        falsified = falsified || c.verdict == TheoremCheck::Verdict::Falsified;
        if (opts.format == Format::Text) {
            out << c.id << ": " << verdict_name(c.verdict);
            if (!c.reason.empty()) out << " (" << c.reason << ")";
            out << "\n";
        } else {
            out << to_json(c).dump() << "\n";  // JSONL stream
        }
    }
    return falsified ? 1 : 0;
}

int cmd_scan(const FamilySpec& family, const std::string& report_out,
             const std::string& violations_out, GlobalOpts& opts, std::ostream& out,
             std::ostream& /*err*/) {
    ScanResult result = scan_log_concavity(family, opts.run);
    json report = result.to_report(family);

    if (!violations_out.empty()) {
        std::ofstream vf(violations_out, std::ios::binary);
        vf << json(result.violations).dump(2) << "\n";
    }
    if (!report_out.empty()) {
        std::ofstream rf(report_out, std::ios::binary);
        rf << report.dump(2) << "\n";
    }

    if (opts.format == Format::Text) {
        out << "family: " << family.describe() << "\n";
        out << "graphs=" << result.graphs << " instances=" << result.instances
            << " confirmed=" << result.confirmed << " trivial=" << result.trivial
            << " falsified=" << result.falsified << " skipped=" << result.skipped << "\n";
        for (const auto& v : result.violations) out << "VIOLATION " << v.dump() << "\n";
    } else {
        out << report.dump() << "\n";
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-constrained spanning subgraph generating polynomials: exact "
                 "enumeration, zero location, and coefficient inequalities"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts opts;
    if (const char* env = std::getenv("FACTORPOLY_THREADS")) {
        opts.run.threads = std::max(1, std::atoi(env));
    } else {
        opts.run.threads = std::max(1u, std::thread::hardware_concurrency());
    }

    std::string format = "text";
    app.add_option("--tol", opts.run.roots.residual_tol, "root residual tolerance");
    app.add_option("--boundary-tol", opts.run.roots.boundary_tol, "region boundary tolerance");
    app.add_option("--seed", opts.run.seed, "random seed");
    app.add_option("--format", format, "output format: text|json|csv");
    app.add_option("--max-minor-order", opts.run.max_minor_order, "largest minor order checked");
    app.add_option("--brute-cap", opts.run.enumeration.brute_cap, "edge cap for brute force");
    app.add_option("--state-cap", opts.run.enumeration.state_cap, "frontier DP state cap");

    // count
    auto* count = app.add_subcommand("count", "exact subgraph counting polynomial coefficients");
    std::string count_graph, count_method = "dp";
    count->add_option("graph", count_graph, "graph file")->required();
    count->add_option("--f", opts.f, "lower degree bound");
    count->add_option("--g", opts.g, "upper degree bound");
    count->add_flag("--clip", opts.clip, "clip constant bounds to vertex degrees");
    count->add_option("--fugacity", opts.fugacity,
                      "fugacity preset (interval|ruelle|thm26|binrec) or config file");
    count->add_option("--quad", opts.quad, "thm26 quadratic: sqrt3|sqrt2|2");
    count->add_option("--method", count_method, "dp|brute|both");
    count->add_option("--order", opts.order, "explicit edge order, comma separated");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "roots, classification, inequality reports");
    std::string an_graph, an_coeffs;
    std::vector<std::string> an_sectors;
    std::vector<double> an_discs, an_ext;
    long an_samples = 0;
    analyze->add_option("graph", an_graph, "graph file");
    analyze->add_option("--coeffs", an_coeffs, "explicit coefficients, comma separated");
    analyze->add_option("--f", opts.f, "lower degree bound");
    analyze->add_option("--g", opts.g, "upper degree bound");
    analyze->add_flag("--clip", opts.clip, "clip constant bounds to vertex degrees");
    analyze->add_option("--fugacity", opts.fugacity, "fugacity preset or config file");
    analyze->add_option("--quad", opts.quad, "thm26 quadratic: sqrt3|sqrt2|2");
    analyze->add_option("--sector", an_sectors, "sector half-angle (radians or pi forms)");
    analyze->add_option("--disc", an_discs, "open disc radius");
    analyze->add_option("--disc-exterior", an_ext, "open disc-exterior radius");
    analyze->add_option("--sample", an_samples,
                        "also sample the multivariate polynomial this many times per region");
    analyze->add_option("--order", opts.order, "explicit edge order, comma separated");

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem checks");
    std::string v_id, v_graph;
    verify->add_option("id", v_id, "theorem id or 'all'")->required();
    verify->add_option("graph", v_graph, "graph file")->required();
    verify->add_option("--f", opts.f, "lower degree bound");
    verify->add_option("--g", opts.g, "upper degree bound");
    verify->add_flag("--clip", opts.clip, "clip constant bounds to vertex degrees");
    verify->add_option("--fugacity", opts.fugacity, "fugacity preset or config file");
    verify->add_option("--quad", opts.quad, "thm26 quadratic: sqrt3|sqrt2|2");
    verify->add_option("--part", opts.part, "short-window case: a|b|c");

    // scan
    auto* scan = app.add_subcommand("scan", "log-concavity scan over a graph family");
    bool s_all = false, s_random = false;
    FamilySpec family;
    std::string s_named, report_out, violations_out = "violations.json";
    scan->add_flag("--all-graphs", s_all, "every multigraph up to --max-n/--max-m");
    scan->add_option("--max-n", family.max_n, "vertex cap for --all-graphs");
    scan->add_option("--max-m", family.max_m, "edge cap for --all-graphs");
    scan->add_option("--named", s_named, "cycles|paths|complete");
    scan->add_option("--max-size", family.max_size, "largest member of a named family");
    scan->add_flag("--random", s_random, "random multigraphs");
    scan->add_option("--n", family.n, "random graph vertex count");
    scan->add_option("--m", family.m, "random graph edge count");
    scan->add_option("--count", family.count, "number of random graphs");
    scan->add_option("--report-out", report_out, "write the JSON report here");
    scan->add_option("--violations-out", violations_out, "write violation witnesses here");

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (format == "json") opts.format = Format::Json;
    else if (format == "csv") opts.format = Format::Csv;
    else if (format == "text") opts.format = Format::Text;
    else {
        err << "unknown --format '" << format << "'\n";
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(count_graph, count_method, opts, out, err);
        if (analyze->parsed())
            return cmd_analyze(an_graph, an_coeffs, an_sectors, an_discs, an_ext, an_samples,
                               opts, out, err);
        if (verify->parsed()) return cmd_verify(v_id, v_graph, opts, out, err);
        if (scan->parsed()) {
            if (s_all) family.kind = FamilySpec::Kind::AllGraphs;
            else if (s_random) family.kind = FamilySpec::Kind::Random;
            else if (!s_named.empty()) {
                family.kind = FamilySpec::Kind::Named;
                family.named = s_named;
            } else {
                err << "scan needs --all-graphs, --named, or --random\n";
                return 2;
            }
            family.seed = opts.run.seed ? opts.run.seed : 1;
            return cmd_scan(family, report_out, violations_out, opts, out, err);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const RootFindingError& e) {
        err << "root finding failed: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace fpoly
