#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specfac/factor.hpp"
#include "specfac/families.hpp"
#include "specfac/graph6.hpp"
#include "specfac/spectral.hpp"
#include "specfac/thresholds.hpp"
#include "specfac/verify.hpp"

namespace {

using namespace specfac;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct GraphArgs {
    std::string g6;
    std::string file;
    std::string family;
    int n = 0;
    int s = 1;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("--g6", args.g6, "graph6 string");
    cmd->add_option("--file", args.file, "file with one graph6 string per line");
    cmd->add_option("--family", args.family,
                    "family name: complete|path|extremal|claim1|case-b1|case-b2|case-b3|case-b4");
    cmd->add_option("--n", args.n, "order for --family");
    cmd->add_option("--s", args.s, "hub size for --family case-b*");
}

Graph family_by_name(const std::string& name, int n, int s) {
    if (name == "complete") return complete(n);
    if (name == "path") return path_graph(n);
    if (name == "extremal") return extremal_graph(n).graph;
    if (name == "claim1") return claim1_graph(n).graph;
    if (name == "case-b1") return case_graph(CaseId::B1, n, s).graph;
    if (name == "case-b2") return case_graph(CaseId::B2, n, s).graph;
    if (name == "case-b3") return case_graph(CaseId::B3, n, s).graph;
    if (name == "case-b4") return case_graph(CaseId::B4, n, s).graph;
    throw std::invalid_argument("unknown family: " + name);
}

std::vector<Graph> resolve_graphs(const GraphArgs& args) {
    std::vector<Graph> graphs;
    if (!args.g6.empty()) graphs.push_back(graph6_decode(args.g6));
    if (!args.family.empty()) {
        if (args.n <= 0) throw std::invalid_argument("--family needs --n");
        graphs.push_back(family_by_name(args.family, args.n, args.s));
    }
    if (!args.file.empty()) {
        std::ifstream f(args.file);
        if (!f) throw std::runtime_error("cannot open " + args.file);
        std::string line;
        while (std::getline(f, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) graphs.push_back(graph6_decode(line));
        }
    }
    if (graphs.empty()) throw std::invalid_argument("no input graph: use --g6, --family or --file");
    return graphs;
}

int cmd_spectral(const GraphArgs& args, double alpha) {
    for (const Graph& g : resolve_graphs(args)) {
        const auto eig = eigenvalues(a_alpha(g, alpha));
        std::cout << graph6_encode(g) << "  n=" << g.order() << "  alpha=" << fmt(alpha)
                  << "  rho=" << fmt(eig.front()) << "\n  spectrum:";
        for (double v : eig) std::cout << ' ' << fmt(v);
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_check(const GraphArgs& args, bool as_json) {
    bool all_covered = true;
    for (const Graph& g : resolve_graphs(args)) {
        const auto violation = is_covered_structural(g);
        std::optional<P2FactorResult> factor;
        if (g.order() <= 26) factor = has_p2_factor(g);

        if (as_json) {
            nlohmann::json j;
            j["graph6"] = graph6_encode(g);
            j["n"] = g.order();
            if (factor) {
                j["p2_factor"] = factor->exists;
                if (factor->witness) {
                    nlohmann::json paths = nlohmann::json::array();
                    for (const auto& p : factor->witness->paths) paths.push_back(p);
                    j["witness"] = std::move(paths);
                }
            }
            j["covered"] = !violation.has_value();
            if (violation) {
                nlohmann::json v;
                v["kind"] = violation_kind_name(violation->kind);
                std::vector<int> verts;
                for (int i = 0; i < g.order(); ++i)
                    if ((violation->s >> i) & 1u) verts.push_back(i);
                v["s"] = verts;
                v["isolated"] = violation->isolated;
                v["bound"] = violation->bound;
                j["violation"] = std::move(v);
            }
            std::cout << j.dump() << '\n';
        } else {
            std::cout << graph6_encode(g) << "  n=" << g.order();
            if (factor) {
                std::cout << "  p2_factor=" << (factor->exists ? "yes" : "no");
                if (factor->witness) {
                    std::cout << "  witness=";
                    for (std::size_t i = 0; i < factor->witness->paths.size(); ++i) {
                        const auto& p = factor->witness->paths[i];
                        std::cout << (i ? " " : "") << '[';
                        for (std::size_t k = 0; k < p.size(); ++k) std::cout << (k ? "," : "") << p[k];
                        std::cout << ']';
                    }
                }
            }
            if (violation) {
                std::cout << "  covered=no  violation: kind=" << violation_kind_name(violation->kind)
                          << " S={";
                bool first = true;
                for (int i = 0; i < g.order(); ++i)
                    if ((violation->s >> i) & 1u) {
                        std::cout << (first ? "" : ",") << i;
                        first = false;
                    }
                std::cout << "} |S|=" << popcount(violation->s) << " i=" << violation->isolated
                          << " bound=" << violation->bound;
            } else {
                std::cout << "  covered=yes";
            }
            std::cout << '\n';
        }
        if (violation) all_covered = false;
    }
    return all_covered ? kExitOk : kExitNegative;
}

int cmd_verify(const CampaignConfig& cfg) {
    const CampaignResult result = run_campaign(cfg);
    write_report(result);
    std::cout << "mode=" << mode_name(cfg.mode) << " records=" << result.summary.records
              << " above_threshold=" << result.summary.above_threshold
              << " boundary=" << result.summary.boundary << " covered=" << result.summary.covered
              << " not_covered=" << result.summary.not_covered
              << " out_of_domain=" << result.summary.out_of_domain
              << " counterexamples=" << result.summary.counterexamples << '\n';
    if (result.summary.counterexamples > 0) {
        std::cout << "COUNTEREXAMPLE records present - implementation bug suspected\n";
        return kExitNegative;
    }
    return kExitOk;
}

int cmd_audit(int n_min, int n_max, std::vector<double> alphas, const std::string& out_path,
              const std::string& format) {
    if (alphas.empty()) alphas = default_alpha_grid();
    CampaignResult result = run_audit(n_min, n_max, alphas);
    result.config.out_path = out_path;
    result.config.format = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    write_report(result);

    long failed = 0;
    for (const auto& a : result.audits)
        if (!a.pass) ++failed;
    std::cout << "audits=" << result.audits.size() << " failed=" << failed << '\n';
    double worst = 0;
    for (const auto& row : result.sharpness) worst = std::max(worst, row.diff);
    std::cout << "sharpness rows=" << result.sharpness.size() << " max|eta-rho|=" << fmt(worst) << '\n';
    for (const auto& a : result.audits)
        if (!a.pass)
            std::cout << "FAIL " << a.claim << " n=" << a.n << " s=" << a.s << " alpha=" << fmt(a.alpha)
                      << " value=" << fmt(a.value) << " assert " << sign_name(a.sign) << '\n';
    return failed == 0 ? kExitOk : kExitNegative;
}

int cmd_threshold(bool use_eta, int n, double alpha) {
    const double value = use_eta ? eta(n, alpha) : theta(n, alpha);
    std::cout << fmt(value) << '\n';
    if (!threshold_in_domain(n, alpha))
        std::cerr << "warning: n=" << n << " is below f(alpha)=" << fmt(f_alpha(alpha))
                  << "; threshold computed out of domain\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectral radii, path-factor coverage checks, and threshold verification"};
    app.require_subcommand(1);

    GraphArgs spectral_args;
    double spectral_alpha = 0.0;
    auto* spectral_cmd = app.add_subcommand("spectral", "print rho_alpha and the full spectrum");
    add_graph_options(spectral_cmd, spectral_args);
    spectral_cmd->add_option("--alpha", spectral_alpha, "alpha in [0,1)")->required();

    GraphArgs check_args;
    bool check_json = false;
    auto* check_cmd = app.add_subcommand("check", "factor and coveredness status (exit 1 when not covered)");
    add_graph_options(check_cmd, check_args);
    check_cmd->add_flag("--json", check_json, "emit one JSON object per graph");

    CampaignConfig cfg;
    std::string mode_str = "random", format_str = "json";
    int verify_n = 14;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
    verify_cmd->add_option("--mode", mode_str, "exhaustive|random|families|audit");
    verify_cmd->add_option("--n", verify_n, "order (or max order for exhaustive/families)");
    verify_cmd->add_option("--alpha", cfg.alphas, "alpha values");
    verify_cmd->add_option("--trials", cfg.trials, "random trials per (n, alpha)");
    verify_cmd->add_option("--seed", cfg.seed, "campaign seed");
    verify_cmd->add_option("--p", cfg.edge_prob, "edge probability for random mode");
    verify_cmd->add_option("--out", cfg.out_path, "report output path");
    verify_cmd->add_option("--format", format_str, "json|csv");

    int audit_n_min = 14, audit_n_max = 30;
    std::vector<double> audit_alphas;
    std::string audit_out, audit_format = "json";
    auto* audit_cmd = app.add_subcommand("audit", "inequality audit and sharpness table");
    audit_cmd->add_option("--n-min", audit_n_min, "smallest order");
    audit_cmd->add_option("--n-max", audit_n_max, "largest order");
    audit_cmd->add_option("--alpha", audit_alphas, "alpha values (default: the audit grid)");
    audit_cmd->add_option("--out", audit_out, "report output path");
    audit_cmd->add_option("--format", audit_format, "json|csv");

    int thr_n = 14;
    double thr_alpha = 0.0;
    auto* eta_cmd = app.add_subcommand("eta", "largest root of the coveredness threshold cubic");
    eta_cmd->add_option("--n", thr_n, "order")->required();
    eta_cmd->add_option("--alpha", thr_alpha, "alpha in [0,1)")->required();
    auto* theta_cmd = app.add_subcommand("theta", "largest root of the factor threshold cubic");
    theta_cmd->add_option("--n", thr_n, "order")->required();
    theta_cmd->add_option("--alpha", thr_alpha, "alpha in [0,1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectral_cmd->parsed()) return cmd_spectral(spectral_args, spectral_alpha);
        if (check_cmd->parsed()) return cmd_check(check_args, check_json);
        if (verify_cmd->parsed()) {
            cfg.mode = mode_from_name(mode_str);
            cfg.format = format_str == "csv" ? ReportFormat::Csv : ReportFormat::Json;
            cfg.n_max = verify_n;
            if (cfg.mode == CampaignMode::Families)
                cfg.n_min = std::min(5, verify_n);
            else if (cfg.mode == CampaignMode::Audit)
                cfg.n_min = std::min(14, verify_n);
            else
                cfg.n_min = verify_n;
            return cmd_verify(cfg);
        }
        if (audit_cmd->parsed()) return cmd_audit(audit_n_min, audit_n_max, audit_alphas, audit_out, audit_format);
        if (eta_cmd->parsed()) return cmd_threshold(true, thr_n, thr_alpha);
        if (theta_cmd->parsed()) return cmd_threshold(false, thr_n, thr_alpha);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
