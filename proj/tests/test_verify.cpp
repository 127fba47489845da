#include <doctest.h>

#include "factorpoly/verify.hpp"

using namespace fpoly;

namespace {

Multigraph c3() { return Multigraph::parse("p 3 3\ne 1 2\ne 2 3\ne 1 3\n"); }
Multigraph c4() { return Multigraph::parse("p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n"); }
Multigraph k4() {
    return Multigraph::parse("p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
}
Multigraph p3() { return Multigraph::parse("p 3 2\ne 1 2\ne 2 3\n"); }

RunConfig cfg() { return RunConfig{}; }

}  // namespace

TEST_CASE("matching polynomial check") {
    auto c = check_heilmann_lieb(c3(), cfg());
    CHECK(c.confirmed());
    CHECK(c.details["counts"] == json::array({"1", "3", "0", "0"}));

    CHECK(check_heilmann_lieb(p3(), cfg()).confirmed());  // [1, 2]
    CHECK(check_heilmann_lieb(k4(), cfg()).confirmed());
    // edgeless graph: constant polynomial, vacuously confirmed
    CHECK(check_heilmann_lieb(Multigraph::parse("p 2 0\n"), cfg()).confirmed());
}

TEST_CASE("real-rootedness for unit windows") {
    auto ok = check_thm3(c3(), DegreeBounds::constant(3, 0, 1), cfg());
    CHECK(ok.confirmed());
    auto na = check_thm3(c3(), DegreeBounds::constant(3, 0, 2), cfg());
    CHECK(na.verdict == TheoremCheck::Verdict::Inapplicable);  // g > f+1
    auto perfect = check_thm3(k4(), DegreeBounds::constant(4, 1, 1), cfg());
    CHECK(perfect.confirmed());  // [0,0,3] = 3 t^2, origin roots only
}

TEST_CASE("degree bound on real parts") {
    auto c = check_ruelle_bound(c3(), cfg());
    CHECK(c.confirmed());
    CHECK(std::abs(c.details["margin"].get<double>()) <= 1e-9);  // bound attained on C3
    CHECK(c.details["bound"].get<double>() == doctest::Approx(-1.0));

    CHECK(check_ruelle_bound(c4(), cfg()).confirmed());
    auto kk = check_ruelle_bound(k4(), cfg());
    CHECK(kk.confirmed());
    CHECK(kk.details["bound"].get<double>() == doctest::Approx(-1.0 / 6.0));

    auto na = check_ruelle_bound(Multigraph::parse("p 2 1\ne 1 2\n"), cfg());
    CHECK(na.verdict == TheoremCheck::Verdict::Inapplicable);  // max degree 1
}

TEST_CASE("weighted real-rootedness at the threshold") {
    auto c = check_ruelle_fugacity(c3(), cfg());
    CHECK(c.confirmed());
    CHECK(c.details["counts"] == json::array({"1", "3", "3", "1"}));
    CHECK(check_ruelle_fugacity(k4(), cfg()).confirmed());
    CHECK(check_ruelle_fugacity(c4(), cfg()).confirmed());
}

TEST_CASE("real-rooted generating functions transfer") {
    auto G = c3();
    auto u = interval_spec(G, DegreeBounds::constant(3, 0, 1));
    auto c = check_prop6(G, u, cfg());
    CHECK(c.confirmed());

    // interval [0,1] agreement with the matching check on several graphs
    for (const auto& g : {c3(), c4(), p3(), k4()}) {
        auto hl = check_heilmann_lieb(g, cfg());
        auto p6 = check_prop6(g, interval_spec(g, DegreeBounds::constant(g.vertex_count(), 0, 1)),
                              cfg());
        CHECK(hl.confirmed() == p6.confirmed());
    }

    // a gamma with a zero strictly inside the sector pi makes it inapplicable:
    // u = (1, 0, 1) at D=2 gives 1 + y^2 with roots +-i
    auto G2 = c3();
    FugacitySpec set02;
    set02.per_vertex.resize(4);
    for (int v = 1; v <= 3; ++v)
        set02.per_vertex[static_cast<size_t>(v)] = VertexFugacity{2, set_fugacities({0, 2}, 2)};
    auto na = check_prop6(G2, set02, cfg());
    CHECK(na.verdict == TheoremCheck::Verdict::Inapplicable);
}

TEST_CASE("sector transfer with alpha from the gamma zeros") {
    auto G = c3();
    // quadratic window fugacities: gamma = 1 + 2 sqrt(3) y + y^2 with REAL
    // zeros -sqrt(3) +- sqrt(2), so alpha collapses to 0 and the conclusion
    // sharpens to the full sector
    auto u = thm26_spec(G, DegreeBounds::constant(3, 0, 2), QuadKind::Sqrt3);
    auto c = check_cor19(G, u, cfg());
    CHECK(c.confirmed());
    CHECK(c.details["alpha"].get<double>() <= 1e-6);

    // forcing gamma itself to 1 + sqrt(3) y + y^2 (zeros at angle 5pi/6)
    // needs u = (1, sqrt(3)/2, 1); that extracts alpha = pi/6
    FugacitySpec circle;
    circle.per_vertex.resize(4);
    for (int v = 1; v <= 3; ++v)
        circle.per_vertex[static_cast<size_t>(v)] = VertexFugacity{
            2, {Quadratic(1), Quadratic(Rat(0), rat_of(1, 2), 3), Quadratic(1)}};
    auto cc = check_cor19(G, circle, cfg());
    CHECK(cc.confirmed());
    CHECK(cc.details["alpha"].get<double>() == doctest::Approx(M_PI / 6.0).epsilon(1e-6));

    // interval fugacities: alpha = 0, conclusion sector pi
    auto c2 = check_cor19(G, interval_spec(G, DegreeBounds::constant(3, 0, 1)), cfg());
    CHECK(c2.confirmed());
    CHECK(c2.details["alpha"].get<double>() <= 1e-6);

    // set {0,2} gammas have zeros at +-i: alpha = pi/2, inapplicable
    FugacitySpec set02;
    set02.per_vertex.resize(4);
    for (int v = 1; v <= 3; ++v)
        set02.per_vertex[static_cast<size_t>(v)] = VertexFugacity{2, set_fugacities({0, 2}, 2)};
    CHECK(check_cor19(G, set02, cfg()).verdict == TheoremCheck::Verdict::Inapplicable);
}

TEST_CASE("exponential transfer") {
    auto G = c3();
    auto u = interval_spec(G, DegreeBounds::constant(3, 0, 1));
    // Q = 1 + y: alpha = 0, sector pi conclusion matches the matching check
    auto c = check_cor20(G, u, cfg());
    CHECK(c.confirmed());
    CHECK(c.details["alpha"].get<double>() <= 1e-6);
}

TEST_CASE("short-window hypothesis matching") {
    auto G = c3();
    // interval [0,1]: two nonzero terms, no threshold needed, case c applies
    auto u01 = interval_spec(G, DegreeBounds::constant(3, 0, 1));
    CHECK(check_prop24(G, u01, SectorCase::C, cfg()).confirmed());

    // interval [0,2] at D=2: three-term window with beta=1; case c threshold
    // is 2 sqrt(1/4) = 1, met with equality
    auto u02 = interval_spec(G, DegreeBounds::constant(3, 0, 2));
    CHECK(check_prop24(G, u02, SectorCase::C, cfg()).confirmed());
    CHECK(check_prop24(G, u02, SectorCase::A, cfg()).confirmed());

    // five consecutive ones cannot fit a four-term window
    Multigraph star = Multigraph::parse("p 5 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n");
    auto uwide = interval_spec(star, DegreeBounds::clipped(star, 0, 4));
    CHECK(check_prop24(star, uwide, SectorCase::C, cfg()).verdict ==
          TheoremCheck::Verdict::Inapplicable);

    // set {0,2} is non-consecutive
    FugacitySpec set02;
    set02.per_vertex.resize(4);
    for (int v = 1; v <= 3; ++v)
        set02.per_vertex[static_cast<size_t>(v)] = VertexFugacity{2, set_fugacities({0, 2}, 2)};
    CHECK(check_prop24(G, set02, SectorCase::C, cfg()).verdict ==
          TheoremCheck::Verdict::Inapplicable);
}

TEST_CASE("two-wide windows: sector pi/3 and the half-plane case") {
    auto G = c3();
    auto a = check_prop25(G, DegreeBounds::constant(3, 0, 2), 'a', cfg());
    CHECK(a.confirmed());
    auto b = check_prop25(G, DegreeBounds::constant(3, 0, 2), 'b', cfg());
    CHECK(b.confirmed());  // applicable via f = 0

    // g > deg fails the hypothesis
    CHECK(check_prop25(G, DegreeBounds::constant(3, 1, 3), 'a', cfg()).verdict ==
          TheoremCheck::Verdict::Inapplicable);
    // g > f + 2 fails the hypothesis
    CHECK(check_prop25(k4(), DegreeBounds::constant(4, 0, 3), 'a', cfg()).verdict ==
          TheoremCheck::Verdict::Inapplicable);
}

TEST_CASE("quadratic window theorem and unit-circle theorem") {
    auto G = c3();
    auto t26 = check_thm26(G, DegreeBounds::constant(3, 0, 2), QuadKind::Sqrt3, cfg());
    CHECK(t26.confirmed());

    auto t27 = check_thm27(G, cfg());
    CHECK(t27.confirmed());
    CHECK(t27.details["counts"] == json::array({"1", "3/4", "3/4", "1"}));
    CHECK(t27.details["max_modulus_deviation"].get<double>() <= 1e-9);

    CHECK(check_thm27(Multigraph::parse("p 2 1\ne 1 2\n"), cfg()).confirmed());
    CHECK(check_thm27(k4(), cfg()).confirmed());
    // loops and parallel edges
    CHECK(check_thm27(Multigraph::parse("p 2 3\ne 1 2\ne 1 2\ne 2 2\n"), cfg()).confirmed());
}

TEST_CASE("dispatcher and id table") {
    auto G = c3();
    CheckOptions opts;
    opts.bounds = DegreeBounds::constant(3, 0, 1);
    for (const auto& id : theorem_ids()) {
        TheoremCheck c = run_check(id, G, opts, cfg());
        CHECK(c.id == id);
        CHECK(c.verdict != TheoremCheck::Verdict::Falsified);
    }
    CHECK_THROWS_AS(run_check("thm99", G, opts, cfg()), std::invalid_argument);
}

TEST_CASE("family generation is deterministic and canonical for tiny graphs") {
    FamilySpec all;
    all.kind = FamilySpec::Kind::AllGraphs;
    all.max_n = 2;
    all.max_m = 2;
    auto graphs = generate_family(all);
    // n=1: {}, {loop}, {loop,loop}; n=2: {}, {e}, {l1}, {ee}, {el1}, {l1l1}, {l1l2}
    CHECK(graphs.size() == 10);

    FamilySpec rnd;
    rnd.kind = FamilySpec::Kind::Random;
    rnd.n = 4;
    rnd.m = 5;
    rnd.count = 3;
    rnd.seed = 99;
    auto a = generate_family(rnd), b = generate_family(rnd);
    REQUIRE(a.size() == 3);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].serialize() == b[i].serialize());

    FamilySpec named;
    named.kind = FamilySpec::Kind::Named;
    named.named = "cycles";
    named.max_size = 5;
    auto cycles = generate_family(named);
    REQUIRE(cycles.size() == 3);  // C3, C4, C5
    CHECK(cycles[2].vertex_count() == 5);
    CHECK(cycles[2].edge_count() == 5);

    named.named = "nonsense";
    CHECK_THROWS_AS(generate_family(named), std::invalid_argument);
}

TEST_CASE("log-concavity scanner on exhaustive tiny families") {
    FamilySpec fam;
    fam.kind = FamilySpec::Kind::AllGraphs;
    fam.max_n = 2;
    fam.max_m = 3;
    auto res = scan_log_concavity(fam, cfg());
    CHECK(res.falsified == 0);
    CHECK(res.violations.empty());
    CHECK(res.instances > res.graphs);
    CHECK(res.confirmed + res.trivial + res.falsified + res.skipped == res.instances);
}

TEST_CASE("scanner merge is deterministic under threads") {
    FamilySpec fam;
    fam.kind = FamilySpec::Kind::AllGraphs;
    fam.max_n = 3;
    fam.max_m = 3;
    RunConfig one = cfg(), four = cfg();
    one.threads = 1;
    four.threads = 4;
    auto a = scan_log_concavity(fam, one);
    auto b = scan_log_concavity(fam, four);
    CHECK(a.instances == b.instances);
    CHECK(a.confirmed == b.confirmed);
    CHECK(a.trivial == b.trivial);
    CHECK(a.falsified == b.falsified);
}

TEST_CASE("named cycle scan matches the closed-form matching counts") {
    // C4 matchings: [1, 4, 2]; check the scanner sees that instance cleanly
    auto counts = factor_counts(c4(), DegreeBounds::constant(4, 0, 1));
    CHECK(counts.trimmed() ==
          std::vector<Quadratic>{Quadratic(1), Quadratic(4), Quadratic(2)});
    CHECK(log_concavity_check(counts).holds);
}
