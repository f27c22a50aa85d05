#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "specfac/families.hpp"
#include "specfac/graph6.hpp"
#include "specfac/rng.hpp"
#include "specfac/verify.hpp"

using namespace specfac;

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
    CHECK(rng.next() == 0xF88BB8A8724C81ECULL);
    SplitMix64 rng2(1234567);
    CHECK(rng2.next() == 0x599ED017FB08FC85ULL);
    CHECK(rng2.next() == 0x2C73F08458540FA5ULL);
    CHECK(rng2.next() == 0x883EBCE5A3F27C77ULL);
    SplitMix64 rng3(42);
    CHECK(rng3.next_unit() == doctest::Approx(0.7415648787718233).epsilon(1e-15));
    CHECK(rng3.next_unit() == doctest::Approx(0.1599103928769201).epsilon(1e-15));
}

TEST_CASE("random graphs are reproducible") {
    SplitMix64 a(77), b(77);
    CHECK(random_graph(12, 0.4, a) == random_graph(12, 0.4, b));
    SplitMix64 c(1), d(2);
    CHECK(random_graph(12, 0.4, c) != random_graph(12, 0.4, d));

    SplitMix64 e(5);
    const Graph g = random_connected_graph(10, 0.5, e);
    CHECK(is_connected(g));
    CHECK_THROWS_AS(random_graph(5, 1.5, e), std::invalid_argument);
}

TEST_CASE("classification of the boundary graph") {
    const auto r = classify(extremal_graph(14).graph, 0.0);
    CHECK(r.n == 14);
    CHECK(r.boundary);
    CHECK_FALSE(r.above_threshold);
    CHECK(r.in_domain);
    CHECK_FALSE(r.covered);
    REQUIRE(r.violation.has_value());
    CHECK_FALSE(r.counterexample);  // the dead zone keeps the sharp graph out
    CHECK(graph6_decode(r.graph6) == extremal_graph(14).graph);
}

TEST_CASE("classification above the threshold") {
    const auto r = classify(complete(20), 0.0);
    CHECK(r.above_threshold);
    CHECK(r.in_domain);
    CHECK(r.covered);
    CHECK_FALSE(r.counterexample);
    CHECK(r.rho == doctest::Approx(19.0));
}

TEST_CASE("random campaign determinism and zero counterexamples") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.n_min = cfg.n_max = 8;
    cfg.alphas = {0.0, 0.5};
    cfg.trials = 40;
    cfg.seed = 99;
    cfg.edge_prob = 0.6;

    const CampaignResult r1 = run_campaign(cfg);
    const CampaignResult r2 = run_campaign(cfg);
    CHECK(r1.summary.records == 80);  // 40 trials x 2 alphas
    CHECK(r1.summary.counterexamples == 0);
    CHECK(r1.summary.out_of_domain == 80);  // n = 8 < 14

    auto j1 = nlohmann::json::parse(report_json(r1));
    auto j2 = nlohmann::json::parse(report_json(r2));
    j1.erase("header");
    j2.erase("header");
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["schema"] == 1);
    CHECK(j1["records"].size() == 80);

    // shard count must not change the bytes
    setenv("SPECFAC_THREADS", "3", 1);
    auto j3 = nlohmann::json::parse(report_json(run_campaign(cfg)));
    setenv("SPECFAC_THREADS", "1", 1);
    auto j4 = nlohmann::json::parse(report_json(run_campaign(cfg)));
    unsetenv("SPECFAC_THREADS");
    j3.erase("header");
    j4.erase("header");
    CHECK(j3.dump() == j1.dump());
    CHECK(j4.dump() == j1.dump());
}

TEST_CASE("exhaustive campaign counts connected graphs") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Exhaustive;
    cfg.n_min = cfg.n_max = 5;
    cfg.alphas = {0.0};
    const CampaignResult r = run_campaign(cfg);
    CHECK(r.summary.records == 728);  // labeled connected graphs on 5 vertices
    CHECK(r.summary.counterexamples == 0);
    for (const auto& rec : r.records) CHECK(rec.covered == !rec.violation.has_value());

    CampaignConfig bad = cfg;
    bad.n_min = bad.n_max = 10;
    CHECK_THROWS_AS(run_campaign(bad), std::invalid_argument);
}

TEST_CASE("families campaign stays below the threshold in domain") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Families;
    cfg.n_min = 5;
    cfg.n_max = 17;
    cfg.alphas = {0.0, 0.5};
    const CampaignResult r = run_campaign(cfg);
    CHECK(r.summary.records > 0);
    CHECK(r.summary.counterexamples == 0);
    long in_domain_below = 0;
    for (const auto& rec : r.records) {
        CHECK_FALSE(rec.family.empty());
        if (rec.family == "case-b1" && rec.s == 1) {
            CHECK(rec.boundary);  // the threshold graph itself
            continue;
        }
        if (rec.in_domain) {
            CHECK(rec.rho < rec.eta - 1e-9);
            ++in_domain_below;
        }
    }
    CHECK(in_domain_below > 0);
}

TEST_CASE("audit campaign") {
    const CampaignResult r = run_audit(14, 16, {0.0, 0.5});
    CHECK(!r.audits.empty());
    for (const auto& a : r.audits) {
        INFO(a.claim, " n=", a.n, " s=", a.s, " value=", a.value);
        CHECK(a.pass);
    }
    REQUIRE(!r.sharpness.empty());
    for (const auto& row : r.sharpness) CHECK(row.diff <= 1e-8);

    // out-of-domain (n, alpha) pairs are skipped entirely
    const CampaignResult none = run_audit(14, 16, {0.9});
    CHECK(none.audits.empty());
    CHECK(none.sharpness.empty());
}

TEST_CASE("report files and CSV shape") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.n_min = cfg.n_max = 7;
    cfg.alphas = {0.25};
    cfg.trials = 10;
    cfg.seed = 5;
    cfg.out_path = "test_report.json";
    CampaignResult r = run_campaign(cfg);
    write_report(r);
    {
        std::ifstream f(cfg.out_path);
        REQUIRE(f.good());
        nlohmann::json j;
        f >> j;
        CHECK(j["schema"] == 1);
        CHECK(j["config"]["seed"] == 5);
        CHECK(j["records"].size() == 10);
    }
    std::remove(cfg.out_path.c_str());

    const std::string csv = report_csv(r);
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 11);  // header + one row per record
    CHECK(csv.rfind("graph6,n,alpha,rho,eta,", 0) == 0);

    // every reported graph6 string round-trips
    for (const auto& rec : r.records) CHECK(graph6_encode(graph6_decode(rec.graph6)) == rec.graph6);

    CampaignConfig bad = cfg;
    bad.trials = 0;
    CHECK_THROWS_AS(run_campaign(bad), std::invalid_argument);
    bad = cfg;
    bad.n_min = bad.n_max = 27;
    CHECK_THROWS_AS(run_campaign(bad), std::invalid_argument);
}
