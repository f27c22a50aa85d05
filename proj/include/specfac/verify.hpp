#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specfac/factor.hpp"
#include "specfac/graph.hpp"
#include "specfac/thresholds.hpp"

namespace specfac {

/// One graph's classification against the spectral threshold. A record
/// with above_threshold, in_domain and !covered is a counterexample to
/// the theorem under test, i.e. an implementation bug.
struct VerificationRecord {
    std::string graph6;
    std::string family;  // empty outside families mode
    int s = 0;
    int n = 0;
    double alpha = 0;
    double rho = 0;
    double eta = 0;
    bool above_threshold = false;
    bool boundary = false;   // |rho - eta| within the tie tolerance
    bool in_domain = false;  // n >= f(alpha)
    bool covered = false;
    std::optional<Violation> violation;
    bool counterexample = false;
    std::chrono::microseconds elapsed{0};  // in-memory only, not serialized
};

enum class CampaignMode { Exhaustive, Random, Families, Audit };
enum class ReportFormat { Json, Csv };

struct CampaignConfig {
    CampaignMode mode = CampaignMode::Random;
    int n_min = 14;
    int n_max = 14;
    std::vector<double> alphas = {0.0};
    int trials = 100;
    std::uint64_t seed = 1;
    double edge_prob = 0.5;
    std::string out_path;  // empty: summary only
    ReportFormat format = ReportFormat::Json;
};

struct CampaignSummary {
    long records = 0;
    long above_threshold = 0;
    long boundary = 0;
    long covered = 0;
    long not_covered = 0;
    long out_of_domain = 0;
    long counterexamples = 0;
};

struct SharpnessRow {
    int n = 0;
    double alpha = 0;
    double eta = 0;
    double rho = 0;
    double diff = 0;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<VerificationRecord> records;
    CampaignSummary summary;
    std::vector<AuditReport> audits;       // audit mode
    std::vector<SharpnessRow> sharpness;   // audit mode
    double elapsed_ms = 0;
};

const char* mode_name(CampaignMode m);
CampaignMode mode_from_name(const std::string& name);

/// Classifies one graph at one alpha. Coveredness is evaluated only
/// when the order permits the subset scan.
VerificationRecord classify(const Graph& g, double alpha);

CampaignResult run_campaign(const CampaignConfig& cfg);

/// JSON (schema 1) or CSV. Identical config + seed give byte-identical
/// output except for the header's timestamp/elapsed fields.
std::string report_json(const CampaignResult& result);
std::string report_csv(const CampaignResult& result);
void write_report(const CampaignResult& result);

/// Inequality audits plus the sharpness table over a (n, alpha) grid.
CampaignResult run_audit(int n_min, int n_max, const std::vector<double>& alphas);

/// Default audit grid: alpha in {0, 0.1, ..., 0.9} plus {0.5, 2/3, 0.75},
/// deduplicated and sorted.
std::vector<double> default_alpha_grid();

}  // namespace specfac
