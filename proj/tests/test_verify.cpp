#include <catch2/catch_amalgamated.hpp>

#include <crystal/serialize.hpp>
#include <crystal/verify.hpp>

using namespace crystal;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

std::vector<long long> totals_of_crystal(CrystalSpec spec) {
    return analyze_crystal(spec, QQ).betti.totals;
}

std::vector<long long> totals_of_o(OLatticeSpec spec) {
    return analyze_o_lattice(spec, QQ).betti.totals;
}

using LL = std::vector<long long>;

}  // namespace

TEST_CASE("two-chain betti totals") {
    REQUIRE(totals_of_crystal({2, {1, 1}}) == LL{1, 1});
    REQUIRE(totals_of_crystal({2, {2, 1}}) == LL{1, 3, 2});
    REQUIRE(totals_of_crystal({2, {2, 2}}) == LL{1, 6, 8, 3});
    REQUIRE(totals_of_crystal({2, {3, 1}}) == LL{1, 5, 6, 2});
    REQUIRE(totals_of_crystal({2, {3, 2}}) == LL{1, 9, 17, 12, 3});
    REQUIRE(totals_of_crystal({2, {4, 1}}) == LL{1, 7, 12, 8, 2});
    REQUIRE(totals_of_crystal({2, {4, 2}}) == LL{1, 12, 29, 30, 15, 3});
    REQUIRE(totals_of_crystal({2, {5, 1}}) == LL{1, 9, 20, 20, 10, 2});
    REQUIRE(totals_of_crystal({2, {6, 1}}) == LL{1, 11, 30, 40, 30, 12, 2});
}

TEST_CASE("many-chain betti totals") {
    REQUIRE(totals_of_crystal({3, {1, 1, 1}}) == LL{1, 6, 8, 3});
    REQUIRE(totals_of_crystal({3, {2, 1, 1}}) == LL{1, 9, 17, 12, 3});
    REQUIRE(totals_of_crystal({3, {2, 2, 1}}) == LL{1, 13, 32, 33, 16, 3});
    REQUIRE(totals_of_crystal({4, {1, 1, 1, 1}}) == LL{1, 10, 20, 15, 4});
}

TEST_CASE("o-lattice betti totals") {
    REQUIRE(totals_of_o({1, {1}, {1}}) == LL{1, 1});
    REQUIRE(totals_of_o({2, {1, 1}, {1, 1}}) == LL{1, 2, 1});
    REQUIRE(totals_of_o({2, {2, 1}, {1, 1}}) == LL{1, 4, 5, 2});
    REQUIRE(totals_of_o({2, {2, 0}, {1, 1}}) == LL{1, 3, 2});
    REQUIRE(totals_of_o({2, {3, 2}, {1, 1}}) == LL{1, 8, 23, 30, 18, 4});
    REQUIRE(totals_of_o({2, {2, 2}, {2, 2}}) == LL{1, 12, 52, 102, 100, 48, 9});
}

TEST_CASE("chain lattices have trivial quotients") {
    PipelineResult p = analyze_crystal({1, {3}}, QQ);
    REQUIRE(p.generators.empty());
    REQUIRE(p.betti.totals == LL{1});
    REQUIRE(p.betti.pd == 0);
}

TEST_CASE("swap and permutation symmetry of the graded tables") {
    BettiTable a = analyze_crystal({2, {3, 2}}, QQ).betti;
    BettiTable b = analyze_crystal({2, {2, 3}}, QQ).betti;
    REQUIRE(a.same_graded_tables(b));

    BettiTable p1 = analyze_crystal({3, {2, 1, 1}}, QQ).betti;
    BettiTable p2 = analyze_crystal({3, {1, 2, 1}}, QQ).betti;
    BettiTable p3 = analyze_crystal({3, {1, 1, 2}}, QQ).betti;
    REQUIRE(p1.same_graded_tables(p2));
    REQUIRE(p1.same_graded_tables(p3));

    BettiTable o1 = analyze_o_lattice({2, {2, 1}, {1, 1}}, QQ).betti;
    BettiTable o2 = analyze_o_lattice({2, {1, 2}, {1, 1}}, QQ).betti;  // levels swapped
    BettiTable o3 = analyze_o_lattice({2, {1, 1}, {2, 1}}, QQ).betti;  // sides swapped
    REQUIRE(o1.same_graded_tables(o2));
    REQUIRE(o1.same_graded_tables(o3));
}

TEST_CASE("pipeline enforces the variable cap") {
    RunLimits lim;
    lim.max_vars = 10;
    REQUIRE_THROWS_AS(analyze_crystal({2, {5, 4}}, QQ, lim), resource_error);
    REQUIRE_NOTHROW(analyze_crystal({2, {4, 4}}, QQ, lim));
}

TEST_CASE("spec strings round-trip") {
    CrystalSpec c = parse_crystal_spec("3:2,1,1");
    REQUIRE(c.k == 3);
    REQUIRE(c.ns == std::vector<int>{2, 1, 1});
    REQUIRE(crystal_spec_str(c) == "3:2,1,1");

    OLatticeSpec o = parse_o_spec("2:2,1/0,3");
    REQUIRE(o.k == 2);
    REQUIRE(o.ms == std::vector<int>{2, 1});
    REQUIRE(o.Ms == std::vector<int>{0, 3});
    REQUIRE(o_spec_str(o) == "2:2,1/0,3");

    REQUIRE_THROWS_AS(parse_crystal_spec("nope"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_crystal_spec("2;1,1"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_o_spec("2:1,1"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_o_spec("x:y/z"), std::invalid_argument);
}

TEST_CASE("theorem1 bounds hold on a small grid") {
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2) {
            VerificationReport r = check_theorem1(n1, n2, QQ);
            INFO(r.instance);
            REQUIRE(r.status == "pass");
            REQUIRE(r.claim == "theorem1");
        }
    // auto-swap: (1,3) is checked as (3,1)
    VerificationReport swapped = check_theorem1(1, 3, QQ);
    REQUIRE(swapped.instance == "2:3,1");
    REQUIRE(swapped.status == "pass");
    REQUIRE_THROWS_AS(check_theorem1(0, 1, QQ), std::invalid_argument);
}

TEST_CASE("the smallest instance carries the flagged observation") {
    VerificationReport r = check_theorem1(1, 1, QQ);
    REQUIRE(r.status == "pass");
    REQUIRE(r.pd == 1);
    REQUIRE(r.notes.size() == 1);
    REQUIRE_THAT(r.notes[0], Catch::Matchers::ContainsSubstring("lower bound 2"));
    REQUIRE(check_theorem1(2, 1, QQ).notes.empty());
}

TEST_CASE("closed-form identities pass for the first variant only") {
    for (int n1 = 1; n1 <= 5; ++n1) {
        VerificationReport r1 = check_known_identities(n1, 1, QQ);
        INFO(r1.instance);
        REQUIRE(r1.status == "pass");
        REQUIRE(r1.totals[1] == 2 * n1 - 1);
        long long b2 = r1.totals.size() > 2 ? r1.totals[2] : 0;
        REQUIRE(b2 == static_cast<long long>(n1) * (n1 - 1));

        // the second variant's totals[2] exceeds its claimed closed form by
        // exactly C(n1+1,2) on every computed instance
        VerificationReport r2 = check_known_identities(n1, 2, QQ);
        REQUIRE(r2.status == "fail");
        REQUIRE(r2.totals[1] == 3 * n1);
        REQUIRE(r2.totals[2] == static_cast<long long>(n1) * (n1 + 1) - 1 + n1 * (n1 + 1) / 2);
        REQUIRE(r2.conditions[0].second);
        REQUIRE_FALSE(r2.conditions[1].second);
    }
    REQUIRE_THROWS_AS(check_known_identities(2, 3, QQ), std::invalid_argument);
}

TEST_CASE("corollary2 bounds hold for three and four chains") {
    for (std::vector<int> ns : {std::vector<int>{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}}) {
        VerificationReport r = check_corollary2(static_cast<int>(ns.size()), ns, QQ);
        INFO(r.instance);
        REQUIRE(r.status == "pass");
    }
    // unsorted input is sorted descending first
    REQUIRE(check_corollary2(3, {1, 2, 1}, QQ).instance == "3:2,1,1");
    REQUIRE_THROWS_AS(check_corollary2(2, {1, 1}, QQ), std::invalid_argument);
    REQUIRE_THROWS_AS(check_corollary2(3, {1, 1}, QQ), std::invalid_argument);
}

TEST_CASE("theorem4 passes where every extreme level has a partner") {
    for (const char* spec : {"1:1/1", "1:2/1", "1:3/2", "2:1,1/1,1", "2:2,1/1,1", "2:2,2/2,2"}) {
        OLatticeSpec o = parse_o_spec(spec);
        VerificationReport r = check_theorem4(o.k, o.ms, o.Ms, QQ);
        INFO(spec);
        REQUIRE(r.status == "pass");
    }
}

TEST_CASE("theorem4 lower bound fails on one-sided specs") {
    // a lone chain with an empty partner never reaches pd = its length
    VerificationReport r = check_theorem4(1, {1}, {0}, QQ);
    REQUIRE(r.status == "fail");
    REQUIRE(r.pd == 0);
    REQUIRE_FALSE(r.conditions[0].second);  // max <= pd is the broken half
    REQUIRE(r.conditions[1].second);

    VerificationReport r2 = check_theorem4(2, {2, 1}, {0, 1}, QQ);
    REQUIRE(r2.status == "fail");
    REQUIRE(r2.pd == 1);
}

TEST_CASE("lemma1 cross-check") {
    for (int n = 1; n <= 6; ++n) {
        VerificationReport r = check_lemma1(n, QQ);
        REQUIRE(r.status == "pass");
        REQUIRE(r.pd == n);
    }
}

TEST_CASE("conjecture scan is report-only and agrees low down") {
    std::vector<VerificationReport> reports = scan_conjecture(3, QQ);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        REQUIRE(r.status == "report-only");
        REQUIRE_FALSE(r.failed());
    }
    REQUIRE(reports[0].pd == 1);
    REQUIRE(reports[1].pd == 2);
    REQUIRE(reports[2].conditions[0].second);  // pd == 3 here too
}

TEST_CASE("crystal sweep covers the grid in row order") {
    SweepResult s = sweep_crystal2(2, 2, QQ);
    REQUIRE(s.rows.size() == 4);
    REQUIRE(s.rows[0].params == "2:1,1");
    REQUIRE(s.rows[1].params == "2:1,2");
    REQUIRE(s.rows[2].params == "2:2,1");
    REQUIRE(s.rows[3].params == "2:2,2");
    for (const auto& r : s.rows) REQUIRE(r.status == "pass");
    REQUIRE_FALSE(s.any_failed());
    REQUIRE(s.rows[3].totals == LL{1, 6, 8, 3});
}

TEST_CASE("o-lattice spec enumeration counts") {
    REQUIRE(enumerate_o_specs(1, 12).size() == 66);   // m + M <= 10
    REQUIRE(enumerate_o_specs(2, 12).size() == 781);  // plus the k = 2 grid
    auto specs = enumerate_o_specs(2, 12);
    bool has_empty = false;
    for (const auto& sp : specs)
        if (sp.k == 2 && sp.ms == std::vector<int>{0, 0} && sp.Ms == std::vector<int>{0, 0}) has_empty = true;
    REQUIRE(has_empty);
    for (const auto& sp : specs) {
        int vars = sp.k + 1 + std::accumulate(sp.ms.begin(), sp.ms.end(), 0) +
                   std::accumulate(sp.Ms.begin(), sp.Ms.end(), 0);
        REQUIRE(vars <= 12);
    }
}

TEST_CASE("sweep rows capture per-instance errors without aborting") {
    RunLimits lim;
    lim.max_vars = 6;
    SweepResult s = sweep_crystal2(3, 2, QQ, lim);  // 2:3,2 needs 7 variables
    REQUIRE(s.rows.size() == 6);
    REQUIRE(s.rows[5].status == "error");
    REQUIRE_THAT(s.rows[5].error, Catch::Matchers::ContainsSubstring("exceeds cap"));
    REQUIRE(s.rows[0].status == "pass");
    REQUIRE_FALSE(s.any_failed());  // errors are not assertion failures
}

TEST_CASE("csv rendering quotes and separates") {
    SweepResult s = sweep_crystal2(1, 2, QQ);
    std::string csv = sweep_to_csv(s);
    REQUIRE_THAT(csv, Catch::Matchers::StartsWith("family,params,field,pd,totals,bounds,status\n"));
    REQUIRE_THAT(csv, Catch::Matchers::ContainsSubstring("\"2:1,2\""));
    REQUIRE_THAT(csv, Catch::Matchers::ContainsSubstring("1|3|2"));
    REQUIRE_THAT(csv, Catch::Matchers::ContainsSubstring(",pass\n"));
}

TEST_CASE("reports serialize to json with stable shape") {
    VerificationReport r = check_theorem1(2, 1, QQ);
    nlohmann::json j = report_to_json(r);
    REQUIRE(j.at("claim") == "theorem1");
    REQUIRE(j.at("instance") == "2:2,1");
    REQUIRE(j.at("field") == "QQ");
    REQUIRE(j.at("pd") == 2);
    REQUIRE(j.at("totals") == nlohmann::json({1, 3, 2}));
    REQUIRE(j.at("status") == "pass");
    REQUIRE(j.contains("elapsed_ms"));
    REQUIRE_FALSE(report_to_json(r, false).contains("elapsed_ms"));
    for (const auto& c : j.at("conditions")) {
        REQUIRE(c.contains("condition"));
        REQUIRE(c.at("holds").is_boolean());
    }
}

TEST_CASE("betti json and text rendering") {
    PipelineResult p = analyze_crystal({2, {2, 1}}, QQ);
    nlohmann::json j = betti_to_json(p.betti, p.ctx.labels, true);
    REQUIRE(j.at("field") == "QQ");
    REQUIRE(j.at("pd") == 2);
    REQUIRE(j.at("totals") == nlohmann::json({1, 3, 2}));
    REQUIRE(j.at("graded").at("1").at("2") == 2);
    bool found = false;
    for (const auto& entry : j.at("multigraded"))
        if (entry.at("i") == 1 && entry.at("degree") == "x_{1,1}*x_{2,1}") found = entry.at("rank") == 1;
    REQUIRE(found);
    REQUIRE_FALSE(betti_to_json(p.betti, p.ctx.labels, false).contains("multigraded"));

    std::string text = betti_text_table(p.betti);
    REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("totals: 1 3 2"));
    REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("pd: 2"));
}

TEST_CASE("field choice flows through the pipeline") {
    BettiTable q = analyze_crystal({2, {3, 2}}, QQ).betti;
    BettiTable p = analyze_crystal({2, {3, 2}}, FieldSpec::prime(FieldSpec::default_prime)).betti;
    REQUIRE(q.same_graded_tables(p));  // these quotients are characteristic-free
    REQUIRE(p.field.str() == "GF(32003)");
}
