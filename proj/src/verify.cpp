#include "specfac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "specfac/families.hpp"
#include "specfac/graph6.hpp"
#include "specfac/rng.hpp"
#include "specfac/spectral.hpp"
#include "specfac/tolerances.hpp"

namespace specfac {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for (int v = 0; v < kMaxVertices; ++v)
        if ((s >> v) & 1u) out.push_back(v);
    return out;
}

void tally(CampaignSummary& sum, const VerificationRecord& r) {
    ++sum.records;
    if (r.above_threshold) ++sum.above_threshold;
    if (r.boundary) ++sum.boundary;
    if (r.covered) ++sum.covered;
    else ++sum.not_covered;
    if (!r.in_domain) ++sum.out_of_domain;
    if (r.counterexample) ++sum.counterexamples;
}

}  // namespace

const char* mode_name(CampaignMode m) {
    switch (m) {
        case CampaignMode::Exhaustive: return "exhaustive";
        case CampaignMode::Random: return "random";
        case CampaignMode::Families: return "families";
        case CampaignMode::Audit: return "audit";
    }
    return "?";
}

CampaignMode mode_from_name(const std::string& name) {
    if (name == "exhaustive") return CampaignMode::Exhaustive;
    if (name == "random") return CampaignMode::Random;
    if (name == "families") return CampaignMode::Families;
    if (name == "audit") return CampaignMode::Audit;
    throw std::invalid_argument("unknown mode: " + name);
}

VerificationRecord classify(const Graph& g, double alpha) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationRecord r;
    r.graph6 = graph6_encode(g);
    r.n = g.order();
    r.alpha = alpha;
    r.rho = spectral_radius(a_alpha(g, alpha));
    r.eta = eta(g.order(), alpha);
    r.boundary = std::abs(r.rho - r.eta) <= kTol.threshold_tie;
    r.above_threshold = !r.boundary && r.rho > r.eta;
    r.in_domain = threshold_in_domain(g.order(), alpha);
    r.violation = is_covered_structural(g);
    r.covered = !r.violation.has_value();
    r.counterexample = r.above_threshold && r.in_domain && !r.covered;
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
    return r;
}

namespace {

void run_exhaustive(const CampaignConfig& cfg, CampaignResult& out) {
    if (cfg.n_max > 9) throw std::invalid_argument("exhaustive mode supports n <= 9");
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t m = 0; m < masks; ++m) {
            const Graph g = from_upper_triangle_bits(n, m);
            if (!is_connected(g)) continue;
            for (double alpha : cfg.alphas) {
                VerificationRecord r = classify(g, alpha);
                tally(out.summary, r);
                out.records.push_back(std::move(r));
            }
        }
    }
}

// SPECFAC_THREADS caps the campaign worker pool; default is the
// hardware count. Records land at their trial index, so output bytes
// are independent of the shard count.
int worker_count() {
    if (const char* env = std::getenv("SPECFAC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min(v, 64L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void run_random(const CampaignConfig& cfg, CampaignResult& out) {
    if (cfg.n_max > 26) throw std::invalid_argument("random mode supports n <= 26");
    if (cfg.trials < 1) throw std::invalid_argument("trial count must be >= 1");
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (double alpha : cfg.alphas) {
            std::vector<VerificationRecord> slots(static_cast<std::size_t>(cfg.trials));
            const int workers = std::min(worker_count(), cfg.trials);
            std::exception_ptr error;
            std::mutex error_mutex;
            auto shard = [&](int offset) {
                try {
                    for (int k = offset; k < cfg.trials; k += workers) {
                        SplitMix64 rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
                        const Graph g = random_connected_graph(n, cfg.edge_prob, rng);
                        slots[static_cast<std::size_t>(k)] = classify(g, alpha);
                    }
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            };
            if (workers <= 1) {
                shard(0);
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < workers; ++t) pool.emplace_back(shard, t);
                for (auto& th : pool) th.join();
            }
            if (error) std::rethrow_exception(error);
            for (auto& r : slots) {
                tally(out.summary, r);
                out.records.push_back(std::move(r));
            }
        }
    }
}

void record_family(const FamilyInstance& fam, double alpha, CampaignResult& out) {
    VerificationRecord r = classify(fam.graph, alpha);
    r.family = fam.meta.family;
    r.s = fam.meta.s;
    tally(out.summary, r);
    out.records.push_back(std::move(r));
}

void run_families(const CampaignConfig& cfg, CampaignResult& out) {
    const int n_cap = std::min(cfg.n_max, 26);
    for (double alpha : cfg.alphas) {
        for (int s = 1; s <= 8; ++s) {
            for (int n = std::max(cfg.n_min, 3 * s + 2); n <= n_cap; ++n)
                record_family(case_graph(CaseId::B1, n, s), alpha, out);
            if (s >= 2) {
                for (int n = std::max(cfg.n_min, 3 * s + 1); n <= n_cap; ++n)
                    record_family(case_graph(CaseId::B2, n, s), alpha, out);
                if (3 * s - 1 >= cfg.n_min && 3 * s - 1 <= n_cap)
                    record_family(case_graph(CaseId::B3, 3 * s - 1, s), alpha, out);
                if (3 * s >= cfg.n_min && 3 * s <= n_cap)
                    record_family(case_graph(CaseId::B4, 3 * s, s), alpha, out);
            }
        }
    }
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    CampaignResult out;
    out.config = cfg;
    switch (cfg.mode) {
        case CampaignMode::Exhaustive:
            run_exhaustive(cfg, out);
            break;
        case CampaignMode::Random:
            run_random(cfg, out);
            break;
        case CampaignMode::Families:
            run_families(cfg, out);
            break;
        case CampaignMode::Audit: {
            CampaignResult audit = run_audit(cfg.n_min, cfg.n_max, cfg.alphas);
            out.audits = std::move(audit.audits);
            out.sharpness = std::move(audit.sharpness);
            break;
        }
    }
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

CampaignResult run_audit(int n_min, int n_max, const std::vector<double>& alphas) {
    CampaignResult out;
    out.config.mode = CampaignMode::Audit;
    out.config.n_min = n_min;
    out.config.n_max = n_max;
    out.config.alphas = alphas;
    for (double alpha : alphas) {
        for (int n = n_min; n <= n_max; ++n) {
            if (!threshold_in_domain(n, alpha)) continue;
            auto reports = audit_inequalities(n, alpha);
            for (int s = 2; 3 * s <= n - 2; ++s) reports.push_back(second_eig_bound(CaseId::B1, n, s, alpha));
            for (int s = 2; 3 * s <= n - 1; ++s) reports.push_back(second_eig_bound(CaseId::B2, n, s, alpha));
            out.audits.insert(out.audits.end(), reports.begin(), reports.end());
            if (n >= 5) {
                SharpnessRow row;
                row.n = n;
                row.alpha = alpha;
                row.eta = eta(n, alpha);
                row.rho = spectral_radius(a_alpha(extremal_graph(n).graph, alpha));
                row.diff = std::abs(row.rho - row.eta);
                out.sharpness.push_back(row);
            }
        }
    }
    std::sort(out.audits.begin(), out.audits.end(), [](const AuditReport& a, const AuditReport& b) {
        return std::tie(a.claim, a.n, a.s, a.alpha) < std::tie(b.claim, b.n, b.s, b.alpha);
    });
    return out;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 9; ++k) grid.push_back(k / 10.0);
    grid.push_back(2.0 / 3.0);
    grid.push_back(0.75);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

json record_to_json(const VerificationRecord& r) {
    json j;
    j["graph6"] = r.graph6;
    if (!r.family.empty()) {
        j["family"] = r.family;
        j["s"] = r.s;
    }
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    j["rho"] = r.rho;
    j["eta"] = r.eta;
    j["above_threshold"] = r.above_threshold;
    j["boundary"] = r.boundary;
    j["in_domain"] = r.in_domain;
    j["covered"] = r.covered;
    if (r.violation) {
        j["violation"] = {{"kind", violation_kind_name(r.violation->kind)},
                          {"s", set_to_list(r.violation->s)},
                          {"isolated", r.violation->isolated},
                          {"bound", r.violation->bound}};
    } else {
        j["violation"] = nullptr;
    }
    j["counterexample"] = r.counterexample;
    return j;
}

json config_to_json(const CampaignConfig& cfg) {
    json j;
    j["mode"] = mode_name(cfg.mode);
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    j["alphas"] = cfg.alphas;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["p"] = cfg.edge_prob;
    j["format"] = cfg.format == ReportFormat::Json ? "json" : "csv";
    return j;
}

}  // namespace

std::string report_json(const CampaignResult& result) {
    json j;
    j["schema"] = 1;
    j["header"] = {{"timestamp", iso_timestamp()}, {"elapsed_ms", result.elapsed_ms}};
    j["config"] = config_to_json(result.config);
    j["summary"] = {{"records", result.summary.records},
                    {"above_threshold", result.summary.above_threshold},
                    {"boundary", result.summary.boundary},
                    {"covered", result.summary.covered},
                    {"not_covered", result.summary.not_covered},
                    {"out_of_domain", result.summary.out_of_domain},
                    {"counterexamples", result.summary.counterexamples}};
    json records = json::array();
    for (const auto& r : result.records) records.push_back(record_to_json(r));
    j["records"] = std::move(records);
    if (result.config.mode == CampaignMode::Audit) {
        json audits = json::array();
        for (const auto& a : result.audits) {
            audits.push_back({{"claim", a.claim},
                              {"n", a.n},
                              {"s", a.s},
                              {"alpha", a.alpha},
                              {"value", a.value},
                              {"assert", sign_name(a.sign)},
                              {"pass", a.pass}});
        }
        j["audits"] = std::move(audits);
        json sharp = json::array();
        for (const auto& s : result.sharpness) {
            sharp.push_back(
                {{"n", s.n}, {"alpha", s.alpha}, {"eta", s.eta}, {"rho", s.rho}, {"diff", s.diff}});
        }
        j["sharpness"] = std::move(sharp);
    }
    return j.dump(2) + "\n";
}

std::string report_csv(const CampaignResult& result) {
    std::ostringstream out;
    out << "graph6,n,alpha,rho,eta,above_threshold,boundary,in_domain,covered,"
           "violation_kind,violation_s,violation_isolated,violation_bound,counterexample\n";
    for (const auto& r : result.records) {
        out << r.graph6 << ',' << r.n << ',' << format_double(r.alpha) << ',' << format_double(r.rho)
            << ',' << format_double(r.eta) << ',' << (r.above_threshold ? 1 : 0) << ','
            << (r.boundary ? 1 : 0) << ',' << (r.in_domain ? 1 : 0) << ',' << (r.covered ? 1 : 0) << ',';
        if (r.violation) {
            out << violation_kind_name(r.violation->kind) << ',';
            const auto verts = set_to_list(r.violation->s);
            for (std::size_t i = 0; i < verts.size(); ++i) out << (i ? ";" : "") << verts[i];
            out << ',' << r.violation->isolated << ',' << r.violation->bound;
        } else {
            out << ",,,";
        }
        out << ',' << (r.counterexample ? 1 : 0) << '\n';
    }
    return out.str();
}

void write_report(const CampaignResult& result) {
    if (result.config.out_path.empty()) return;
    std::ofstream f(result.config.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + result.config.out_path);
    f << (result.config.format == ReportFormat::Json ? report_json(result) : report_csv(result));
    if (!f) throw std::runtime_error("write failed: " + result.config.out_path);
}

}  // namespace specfac
