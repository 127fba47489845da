#include "factorpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace fpoly {

std::string verdict_name(TheoremCheck::Verdict v) {
    switch (v) {
        case TheoremCheck::Verdict::Confirmed: return "confirmed";
        case TheoremCheck::Verdict::Falsified: return "falsified";
        case TheoremCheck::Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

json to_json(const TheoremCheck& c) {
    json out;
    out["id"] = c.id;
    out["instance"] = c.instance;
    out["verdict"] = verdict_name(c.verdict);
    if (!c.reason.empty()) out["reason"] = c.reason;
    if (!c.details.is_null()) out["details"] = c.details;
    return out;
}

namespace {

std::string brief(const Multigraph& G) {
    std::ostringstream os;
    os << "n=" << G.vertex_count() << " m=" << G.edge_count();
    return os.str();
}

json bounds_json(const DegreeBounds& b) {
    json f = json::array(), g = json::array();
    for (size_t v = 1; v < b.f.size(); ++v) {
        f.push_back(b.f[v]);
        g.push_back(b.g[v]);
    }
    return json{{"f", f}, {"g", g}};
}

json fugacity_json(const FugacitySpec& u) {
    json out = json::object();
    for (int v = 1; v <= u.vertex_count(); ++v) {
        json uv = json::array();
        for (const auto& x : u.of(v).u) uv.push_back(x.to_string());
        out[std::to_string(v)] = json{{"D", u.of(v).D}, {"u", uv}};
    }
    return out;
}

TheoremCheck base_check(const std::string& id, const Multigraph& G) {
    TheoremCheck c;
    c.id = id;
    c.instance = brief(G);
    c.details = json::object();
    c.details["graph"] = G.serialize();
    return c;
}

void attach_sector_outcome(TheoremCheck& c, const QuadPoly& poly, double theta,
                           const RunConfig& cfg) {
    Region A = Region::sector(theta);
    RegionVerdict v;
    try {
        v = nonvanishing_in(poly, A, cfg.roots);
    } catch (const RootFindingError& ex) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = std::string("root finding failed: ") + ex.what();
        c.details["best_residuals"] = ex.best_residuals;
        return;
    }
    c.details["region"] = A.describe();
    c.details["verdict"] = to_json(v);
    if (v.outcome == Outcome::Counterexample) {
        c.verdict = TheoremCheck::Verdict::Falsified;
        c.reason = "zero strictly inside " + A.describe();
    } else {
        c.verdict = TheoremCheck::Verdict::Confirmed;
        if (v.outcome == Outcome::IdenticallyZero) c.details["identically_zero"] = true;
    }
}

// largest sector-opening deficit of the generating polynomials: the smallest
// alpha such that every nonzero root of every gamma has |arg| >= pi - alpha,
// widened by 1e-8 to keep the open-condition reading safe
struct AlphaExtraction {
    double alpha = 0.0;
    bool ok = true;
    std::string failure;
    json per_vertex = json::array();
};

AlphaExtraction extract_alpha(const std::vector<QuadPoly>& gammas, const RunConfig& cfg) {
    AlphaExtraction ax;
    for (size_t i = 0; i < gammas.size(); ++i) {
        const auto& gamma = gammas[i];
        json rec;
        rec["vertex"] = i + 1;
        if (gamma.is_zero_poly() || gamma.deflate_origin().degree() == 0) {
            rec["alpha"] = 0.0;
            ax.per_vertex.push_back(rec);
            continue;  // no nonzero roots: no constraint
        }
        RootSet rs;
        try {
            rs = find_roots(gamma, cfg.roots);
        } catch (const RootFindingError& ex) {
            ax.ok = false;
            ax.failure = "root finding failed on the generating polynomial of vertex " +
                         std::to_string(i + 1) + ": " + ex.what();
            return ax;
        }
        double min_abs_arg = M_PI;
        for (const auto& z : rs.roots)
            min_abs_arg = std::min(min_abs_arg, std::abs(std::arg(z)));
        double alpha_v = std::max(0.0, M_PI - min_abs_arg);
        rec["alpha"] = alpha_v;
        ax.per_vertex.push_back(rec);
        ax.alpha = std::max(ax.alpha, alpha_v);
    }
    ax.alpha = std::min(ax.alpha + 1e-8, M_PI);
    return ax;
}

std::vector<QuadPoly> gamma_polys_of(const FugacitySpec& u) {
    std::vector<QuadPoly> gs;
    for (int v = 1; v <= u.vertex_count(); ++v) gs.push_back(gamma_poly(u.of(v).D, u.of(v).u));
    return gs;
}

}  // namespace

TheoremCheck check_heilmann_lieb(const Multigraph& G, const RunConfig& cfg) {
    TheoremCheck c = base_check("hl", G);
    CoeffSeq counts = factor_counts(G, DegreeBounds::constant(G.vertex_count(), 0, 1),
                                    cfg.enumeration);
    c.details["counts"] = to_json(counts);
    QuadPoly poly = counts.as_poly();
    RootSummary s;
    try {
        s = classify(poly, cfg.roots);
    } catch (const RootFindingError& ex) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = std::string("root finding failed: ") + ex.what();
        return c;
    }
    c.details["summary"] = to_json(s);
    if (s.strictly_negative_real) {
        c.verdict = TheoremCheck::Verdict::Confirmed;
    } else {
        c.verdict = TheoremCheck::Verdict::Falsified;
        c.reason = "matching polynomial not real rooted with strictly negative zeros";
    }
    return c;
}

TheoremCheck check_thm3(const Multigraph& G, const DegreeBounds& b, const RunConfig& cfg) {
    TheoremCheck c = base_check("thm3", G);
    b.validate(G);
    c.details["bounds"] = bounds_json(b);
    for (int v = 1; v <= G.vertex_count(); ++v)
        if (b.g[static_cast<size_t>(v)] > b.f[static_cast<size_t>(v)] + 1) {
            c.verdict = TheoremCheck::Verdict::Inapplicable;
            c.reason = "needs g <= f+1 at every vertex, violated at vertex " + std::to_string(v);
            return c;
        }
    CoeffSeq counts = factor_counts(G, b, cfg.enumeration);
    c.details["counts"] = to_json(counts);
    attach_sector_outcome(c, counts.as_poly(), M_PI, cfg);
    return c;
}

TheoremCheck check_ruelle_bound(const Multigraph& G, const RunConfig& cfg) {
    TheoremCheck c = base_check("thm4", G);
    int delta = G.max_degree();
    if (delta < 2) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = "needs maximum degree >= 2";
        return c;
    }
    CoeffSeq counts =
        factor_counts(G, DegreeBounds::constant(G.vertex_count(), 0, 2), cfg.enumeration);
    c.details["counts"] = to_json(counts);
    RootSummary s;
    try {
        s = classify(counts.as_poly(), cfg.roots);
    } catch (const RootFindingError& ex) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = std::string("root finding failed: ") + ex.what();
        return c;
    }
    double bound = -2.0 / (static_cast<double>(delta) * (delta - 1.0) * (delta - 1.0));
    double margin = bound - s.max_real_part;  // >= 0 when the bound holds
    c.details["summary"] = to_json(s);
    c.details["bound"] = bound;
    c.details["margin"] = margin;
    if (s.max_real_part <= bound + cfg.roots.boundary_tol) {
        c.verdict = TheoremCheck::Verdict::Confirmed;
    } else {
        c.verdict = TheoremCheck::Verdict::Falsified;
        c.reason = "zero with real part above the degree bound";
    }
    return c;
}

TheoremCheck check_ruelle_fugacity(const Multigraph& G, const RunConfig& cfg) {
    TheoremCheck c = base_check("thm5", G);
    int delta = G.max_degree();
    if (delta < 1) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = "needs maximum degree >= 1";
        return c;
    }
    FugacitySpec u = ruelle_spec(G);
    c.details["fugacity"] = fugacity_json(u);
    CoeffSeq counts = dp_counts(G, u, cfg.enumeration);
    c.details["counts"] = to_json(counts);
    RootSummary s;
    try {
        s = classify(counts.as_poly(), cfg.roots);
    } catch (const RootFindingError& ex) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = std::string("root finding failed: ") + ex.what();
        return c;
    }
    c.details["summary"] = to_json(s);
    // u1 sits exactly at sqrt(2-2/delta): accept nonpositive real zeros here,
    // strict negativity only claimed above the threshold
    if (s.real_rooted_nonpositive) {
        c.verdict = TheoremCheck::Verdict::Confirmed;
        c.details["strictly_negative"] = s.strictly_negative_real;
    } else {
        c.verdict = TheoremCheck::Verdict::Falsified;
        c.reason = "weighted counting polynomial not real rooted nonpositive";
    }
    return c;
}

TheoremCheck check_prop6(const Multigraph& G, const FugacitySpec& u, const RunConfig& cfg) {
    TheoremCheck c = base_check("prop6", G);
    u.validate_against(G);
    c.details["fugacity"] = fugacity_json(u);
    auto gammas = gamma_polys_of(u);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        const auto& gamma = gammas[static_cast<size_t>(v - 1)];
        if (gamma.is_zero_poly()) continue;  // weight identically zero is allowed
        RootSummary s;
        try {
            s = classify(gamma, cfg.roots);
        } catch (const RootFindingError& ex) {
            c.verdict = TheoremCheck::Verdict::Inapplicable;
            c.reason = "root finding failed on the generating polynomial of vertex " +
                       std::to_string(v) + ": " + ex.what();
            return c;
        }
        if (!s.real_rooted_nonpositive) {
            c.verdict = TheoremCheck::Verdict::Inapplicable;
            c.reason = "generating polynomial of vertex " + std::to_string(v) +
                       " is not real rooted nonpositive (max real part " +
                       std::to_string(s.max_real_part) + ")";
            return c;
        }
    }
    CoeffSeq counts = dp_counts(G, u, cfg.enumeration);
    c.details["counts"] = to_json(counts);
    attach_sector_outcome(c, counts.as_poly(), M_PI, cfg);
    return c;
}

TheoremCheck check_cor19(const Multigraph& G, const FugacitySpec& u, const RunConfig& cfg) {
    TheoremCheck c = base_check("cor19", G);
    u.validate_against(G);
    c.details["fugacity"] = fugacity_json(u);
    AlphaExtraction ax = extract_alpha(gamma_polys_of(u), cfg);
    if (!ax.ok) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = ax.failure;
        return c;
    }
    c.details["alpha"] = ax.alpha;
    c.details["gamma_alphas"] = ax.per_vertex;
    if (ax.alpha >= M_PI_2) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = "needs alpha < pi/2; generating polynomial zeros reach angle " +
                   std::to_string(M_PI - ax.alpha);
        return c;
    }
    CoeffSeq counts = dp_counts(G, u, cfg.enumeration);
    c.details["counts"] = to_json(counts);
    attach_sector_outcome(c, counts.as_poly(), M_PI - 2.0 * ax.alpha, cfg);
    return c;
}

TheoremCheck check_cor20(const Multigraph& G, const FugacitySpec& u, const RunConfig& cfg) {
    TheoremCheck c = base_check("cor20", G);
    u.validate_against(G);
    c.details["fugacity"] = fugacity_json(u);
    std::vector<QuadPoly> qs;
    for (int v = 1; v <= G.vertex_count(); ++v) qs.push_back(exp_gen_poly(u.of(v).u));
    AlphaExtraction ax = extract_alpha(qs, cfg);
    if (!ax.ok) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = ax.failure;
        return c;
    }
    c.details["alpha"] = ax.alpha;
    c.details["q_alphas"] = ax.per_vertex;
    if (ax.alpha >= M_PI_2) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = "conclusion sector pi - 2*alpha is empty (alpha >= pi/2)";
        return c;
    }
    CoeffSeq counts = dp_counts(G, u, cfg.enumeration);
    c.details["counts"] = to_json(counts);
    attach_sector_outcome(c, counts.as_poly(), M_PI - 2.0 * ax.alpha, cfg);
    return c;
}

namespace {

// Match gamma against the displayed three- or four-term binomial windows and
// test the case threshold; r(v) <= 2 vertices carry no hypothesis.
bool window_hypothesis_ok(const QuadPoly& gamma, int D, SectorCase part, std::string& why) {
    std::vector<int> nz;
    for (int k = 0; k <= gamma.degree(); ++k)
        if (!gamma.coeff(k).is_zero()) nz.push_back(k);
    if (nz.empty()) return true;
    if (static_cast<int>(nz.size()) > 4) {
        why = "more than 4 nonzero terms";
        return false;
    }
    if (nz.back() - nz.front() + 1 != static_cast<int>(nz.size())) {
        why = "nonzero terms not of consecutive degrees";
        return false;
    }
    if (nz.size() <= 2) return true;

    auto binom_at = [&](int k) {
        return Quadratic(Rat(binomial(static_cast<unsigned>(D), static_cast<unsigned>(k))));
    };
    int k = nz[1];  // window is k-1 .. k+r-2
    Quadratic scale = gamma.coeff(k - 1) / binom_at(k - 1);

    if (nz.size() == 3) {
        if (gamma.coeff(k + 1) != scale * binom_at(k + 1)) {
            why = "outer coefficients are not a common multiple of the binomial window";
            return false;
        }
        Quadratic beta = gamma.coeff(k) / (scale * binom_at(k));
        WindowParams wp;
        wp.D = D;
        wp.k = k;
        Quadratic thr = lemma_threshold(WindowFamily::ThreeTerm, part, wp);
        if (beta < thr) {
            why = "three-term weight " + beta.to_string() + " below threshold " + thr.to_string();
            return false;
        }
        return true;
    }

    // four nonzero terms
    if (gamma.coeff(k + 2) != scale * binom_at(k + 2)) {
        why = "outer coefficients are not a common multiple of the binomial window";
        return false;
    }
    Quadratic mu1 = gamma.coeff(k) / (scale * binom_at(k));
    Quadratic mu2 = gamma.coeff(k + 1) / (scale * binom_at(k + 1));
    if (mu1 != mu2) {
        why = "middle coefficients do not share one weight mu";
        return false;
    }
    WindowParams wp;
    Quadratic thr = lemma_threshold(WindowFamily::FourTerm, part, wp);
    bool ok = mu1 >= thr;
    if (!ok && D == 2 * k + 1) {  // odd-window refinement at the centered position
        WindowParams op;
        op.p = k;
        ok = mu1 >= lemma_threshold(WindowFamily::FourTermOdd, part, op);
    }
    if (!ok) {
        why = "four-term weight " + mu1.to_string() + " below threshold";
        return false;
    }
    return true;
}

}  // namespace

TheoremCheck check_prop24(const Multigraph& G, const FugacitySpec& u, SectorCase part,
                          const RunConfig& cfg) {
    TheoremCheck c = base_check("prop24", G);
    u.validate_against(G);
    c.details["fugacity"] = fugacity_json(u);
    c.details["part"] = part == SectorCase::A ? "a" : part == SectorCase::B ? "b" : "c";
    auto gammas = gamma_polys_of(u);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        std::string why;
        if (!window_hypothesis_ok(gammas[static_cast<size_t>(v - 1)], u.of(v).D, part, why)) {
            c.verdict = TheoremCheck::Verdict::Inapplicable;
            c.reason = "vertex " + std::to_string(v) + ": " + why;
            return c;
        }
    }
    CoeffSeq counts = dp_counts(G, u, cfg.enumeration);
    c.details["counts"] = to_json(counts);

    double theta = part == SectorCase::A ? M_PI_2 : part == SectorCase::B ? 2.0 * M_PI / 3.0 : M_PI;
    attach_sector_outcome(c, counts.as_poly(), theta, cfg);
    if (c.verdict != TheoremCheck::Verdict::Confirmed) return c;

    // the implied coefficient inequalities for the concluded sector
    std::vector<IneqReport> reports;
    if (part == SectorCase::A) {
        reports.push_back(prop15_consequences(counts));
    } else if (part == SectorCase::B) {
        reports.push_back(log_concavity_check(counts));
    } else {
        int d = static_cast<int>(counts.trimmed().size()) - 1;
        if (d >= 1) reports.push_back(newton_check(counts, d));
        reports.push_back(log_concavity_check(counts));
        reports.push_back(toeplitz_minors_check(counts, std::min(cfg.max_minor_order, 4),
                                                cfg.minor_budget));
    }
    json jr = json::array();
    for (const auto& r : reports) {
        jr.push_back(to_json(r));
        if (!r.holds) {
            c.verdict = TheoremCheck::Verdict::Falsified;
            c.reason = "implied inequality " + r.name + " fails";
        }
    }
    c.details["inequalities"] = jr;
    return c;
}

TheoremCheck check_prop25(const Multigraph& G, const DegreeBounds& b, char part,
                          const RunConfig& cfg) {
    TheoremCheck c = base_check(part == 'a' ? "prop25a" : "prop25b", G);
    b.validate(G);
    c.details["bounds"] = bounds_json(b);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        size_t i = static_cast<size_t>(v);
        if (b.g[i] > b.f[i] + 2) {
            c.verdict = TheoremCheck::Verdict::Inapplicable;
            c.reason = "needs g <= f+2 at every vertex, violated at vertex " + std::to_string(v);
            return c;
        }
        if (b.g[i] > G.degree(v)) {
            c.verdict = TheoremCheck::Verdict::Inapplicable;
            c.reason = "needs g <= deg at every vertex, violated at vertex " + std::to_string(v);
            return c;
        }
        if (part == 'b') {
            bool ok = b.g[i] <= b.f[i] + 1 || b.f[i] == 0 || b.g[i] == G.degree(v) ||
                      G.degree(v) <= 5;
            if (!ok) {
                c.verdict = TheoremCheck::Verdict::Inapplicable;
                c.reason = "vertex " + std::to_string(v) +
                           " fails the per-vertex disjunction (g<=f+1 | f=0 | g=deg | deg<=5)";
                return c;
            }
        }
    }
    CoeffSeq counts = factor_counts(G, b, cfg.enumeration);
    c.details["counts"] = to_json(counts);
    attach_sector_outcome(c, counts.as_poly(), part == 'a' ? M_PI / 3.0 : M_PI_2, cfg);
    return c;
}

TheoremCheck check_thm26(const Multigraph& G, const DegreeBounds& b, QuadKind quad,
                         const RunConfig& cfg) {
    TheoremCheck c = base_check("thm26", G);
    b.validate(G);
    c.details["bounds"] = bounds_json(b);
    c.details["quad"] = quad_kind_name(quad);
    FugacitySpec u;
    try {
        u = thm26_spec(G, b, quad);
    } catch (const std::invalid_argument& ex) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = ex.what();
        return c;
    }
    c.details["fugacity"] = fugacity_json(u);
    CoeffSeq counts = dp_counts(G, u, cfg.enumeration);
    c.details["counts"] = to_json(counts);

    double theta = quad == QuadKind::Sqrt3  ? 2.0 * M_PI / 3.0
                   : quad == QuadKind::Sqrt2 ? M_PI_2
                                             : M_PI;
    attach_sector_outcome(c, counts.as_poly(), theta, cfg);
    if (c.verdict != TheoremCheck::Verdict::Confirmed) return c;

    std::vector<IneqReport> reports;
    if (quad == QuadKind::Sqrt3) {
        reports.push_back(log_concavity_check(counts));
    } else if (quad == QuadKind::Sqrt2) {
        reports.push_back(prop15_consequences(counts));
    } else {
        int d = static_cast<int>(counts.trimmed().size()) - 1;
        if (d >= 1) reports.push_back(newton_check(counts, d));
        reports.push_back(log_concavity_check(counts));
    }
    json jr = json::array();
    for (const auto& r : reports) {
        jr.push_back(to_json(r));
        if (!r.holds) {
            c.verdict = TheoremCheck::Verdict::Falsified;
            c.reason = "implied inequality " + r.name + " fails";
        }
    }
    c.details["inequalities"] = jr;
    return c;
}

TheoremCheck check_thm27(const Multigraph& G, const RunConfig& cfg) {
    TheoremCheck c = base_check("thm27", G);
    FugacitySpec u = binomial_reciprocal_spec(G);
    c.details["fugacity"] = fugacity_json(u);
    CoeffSeq counts = dp_counts(G, u, cfg.enumeration);
    c.details["counts"] = to_json(counts);
    QuadPoly poly = counts.as_poly();
    if (poly.degree() <= 0) {
        c.verdict = TheoremCheck::Verdict::Confirmed;
        c.details["identically_constant"] = true;
        return c;
    }
    RootSummary s;
    try {
        s = classify(poly, cfg.roots);
    } catch (const RootFindingError& ex) {
        c.verdict = TheoremCheck::Verdict::Inapplicable;
        c.reason = std::string("root finding failed: ") + ex.what();
        return c;
    }
    c.details["summary"] = to_json(s);
    double dev = std::max(std::abs(s.max_modulus - 1.0), std::abs(s.min_modulus - 1.0));
    c.details["max_modulus_deviation"] = dev;
    if (s.origin_multiplicity == 0 && dev <= cfg.roots.boundary_tol) {
        c.verdict = TheoremCheck::Verdict::Confirmed;
    } else {
        c.verdict = TheoremCheck::Verdict::Falsified;
        c.reason = "zero off the unit circle";
    }
    return c;
}

TheoremCheck run_check(const std::string& id, const Multigraph& G, const CheckOptions& opts,
                       const RunConfig& cfg) {
    auto fug = [&]() -> FugacitySpec {
        if (opts.fugacity) return *opts.fugacity;
        return interval_spec(G, opts.bounds);
    };
    if (id == "hl") return check_heilmann_lieb(G, cfg);
    if (id == "thm3") return check_thm3(G, opts.bounds, cfg);
    if (id == "thm4") return check_ruelle_bound(G, cfg);
    if (id == "thm5") return check_ruelle_fugacity(G, cfg);
    if (id == "prop6") return check_prop6(G, fug(), cfg);
    if (id == "cor19") return check_cor19(G, fug(), cfg);
    if (id == "cor20") return check_cor20(G, fug(), cfg);
    if (id == "prop24") return check_prop24(G, fug(), opts.part, cfg);
    if (id == "prop25a") return check_prop25(G, opts.bounds, 'a', cfg);
    if (id == "prop25b") return check_prop25(G, opts.bounds, 'b', cfg);
    if (id == "thm26") return check_thm26(G, opts.bounds, opts.quad, cfg);
    if (id == "thm27") return check_thm27(G, cfg);
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

// ---- families ----

std::string FamilySpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::AllGraphs:
            os << "all multigraphs n<=" << max_n << " m<=" << max_m;
            break;
        case Kind::Random:
            os << "random n=" << n << " m=" << m << " count=" << count << " seed=" << seed;
            break;
        case Kind::Named:
            os << named << " up to size " << max_size;
            break;
    }
    return os.str();
}

Multigraph random_multigraph(int n, int m, std::mt19937_64& rng) {
    std::vector<Multigraph::Edge> edges;
    std::uniform_int_distribution<int> pick(1, n);
    for (int e = 0; e < m; ++e) {
        int u = pick(rng), v = pick(rng);
        if (u > v) std::swap(u, v);
        edges.push_back(Multigraph::Edge{u, v, Rat(1)});
    }
    return Multigraph(n, std::move(edges));
}

namespace {

// all unordered vertex pairs including loops, lexicographic
std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u; v <= n; ++v) slots.emplace_back(u, v);
    return slots;
}

std::string canonical_code(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    std::string best;
    do {
        std::vector<std::pair<int, int>> relabeled;
        relabeled.reserve(edges.size());
        for (auto [u, v] : edges) {
            int pu = perm[static_cast<size_t>(u - 1)], pv = perm[static_cast<size_t>(v - 1)];
            relabeled.emplace_back(std::min(pu, pv), std::max(pu, pv));
        }
        std::sort(relabeled.begin(), relabeled.end());
        std::string code;
        for (auto [u, v] : relabeled) code += std::to_string(u) + "," + std::to_string(v) + ";";
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

void all_multisets(int slots, int size, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit, int from = 0) {
    if (static_cast<int>(cur.size()) == size) {
        emit(cur);
        return;
    }
    for (int s = from; s < slots; ++s) {
        cur.push_back(s);
        all_multisets(slots, size, cur, emit, s);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Multigraph> generate_family(const FamilySpec& spec) {
    std::vector<Multigraph> out;
    switch (spec.kind) {
        case FamilySpec::Kind::AllGraphs: {
            for (int n = 1; n <= spec.max_n; ++n) {
                auto slots = edge_slots(n);
                std::set<std::string> seen;  // isomorph dedupe for n <= 3 only
                for (int m = 0; m <= spec.max_m; ++m) {
                    std::vector<int> cur;
                    all_multisets(static_cast<int>(slots.size()), m, cur,
                                  [&](const std::vector<int>& pick) {
                                      std::vector<std::pair<int, int>> pairs;
                                      std::vector<Multigraph::Edge> edges;
                                      for (int s : pick) {
                                          pairs.push_back(slots[static_cast<size_t>(s)]);
                                          edges.push_back(Multigraph::Edge{
                                              slots[static_cast<size_t>(s)].first,
                                              slots[static_cast<size_t>(s)].second, Rat(1)});
                                      }
                                      if (n <= 3) {
                                          std::string code =
                                              std::to_string(n) + "|" + canonical_code(n, pairs);
                                          if (!seen.insert(code).second) return;
                                      }
                                      out.emplace_back(n, std::move(edges));
                                  });
                }
            }
            break;
        }
        case FamilySpec::Kind::Random: {
            std::mt19937_64 rng(spec.seed);
            for (long i = 0; i < spec.count; ++i)
                out.push_back(random_multigraph(spec.n, spec.m, rng));
            break;
        }
        case FamilySpec::Kind::Named: {
            if (spec.named == "cycles") {
                for (int k = 3; k <= spec.max_size; ++k) {
                    std::vector<Multigraph::Edge> edges;
                    for (int i = 1; i < k; ++i) edges.push_back({i, i + 1, Rat(1)});
                    edges.push_back({1, k, Rat(1)});
                    out.emplace_back(k, std::move(edges));
                }
            } else if (spec.named == "paths") {
                for (int k = 2; k <= spec.max_size; ++k) {
                    std::vector<Multigraph::Edge> edges;
                    for (int i = 1; i < k; ++i) edges.push_back({i, i + 1, Rat(1)});
                    out.emplace_back(k, std::move(edges));
                }
            } else if (spec.named == "complete") {
                for (int k = 2; k <= spec.max_size; ++k) {
                    std::vector<Multigraph::Edge> edges;
                    for (int u = 1; u <= k; ++u)
                        for (int v = u + 1; v <= k; ++v) edges.push_back({u, v, Rat(1)});
                    out.emplace_back(k, std::move(edges));
                }
            } else {
                throw std::invalid_argument("unknown family '" + spec.named +
                                            "' (cycles|paths|complete)");
            }
            break;
        }
    }
    return out;
}

// ---- scanner ----

namespace {

struct GraphScan {
    long instances = 0, confirmed = 0, falsified = 0, trivial = 0, skipped = 0;
    std::vector<json> violations;
};

GraphScan scan_one_graph(const Multigraph& G, const RunConfig& cfg) {
    GraphScan r;
    int n = G.vertex_count();

    // odometer over all bound assignments f <= g <= deg(G,v) per vertex
    struct Pair {
        int f, g;
    };
    std::vector<std::vector<Pair>> choices(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) {
        auto& list = choices[static_cast<size_t>(v - 1)];
        for (int f = 0; f <= G.degree(v); ++f)
            for (int g = f; g <= G.degree(v); ++g) list.push_back({f, g});
    }
    std::vector<size_t> pos(static_cast<size_t>(n), 0);

    while (true) {
        DegreeBounds b = DegreeBounds::constant(n, 0, 0);
        for (int v = 1; v <= n; ++v) {
            const Pair& p = choices[static_cast<size_t>(v - 1)][pos[static_cast<size_t>(v - 1)]];
            b.f[static_cast<size_t>(v)] = p.f;
            b.g[static_cast<size_t>(v)] = p.g;
        }
        ++r.instances;
        try {
            CoeffSeq counts = factor_counts(G, b, cfg.enumeration);
            IneqReport rep = log_concavity_check(counts);
            if (!rep.holds) {
                ++r.falsified;
                json w;
                w["graph"] = G.serialize();
                json f = json::array(), g = json::array();
                for (int v = 1; v <= n; ++v) {
                    f.push_back(b.f[static_cast<size_t>(v)]);
                    g.push_back(b.g[static_cast<size_t>(v)]);
                }
                w["f"] = f;
                w["g"] = g;
                w["counts"] = to_json(counts);
                w["violation"] = to_json(rep);
                r.violations.push_back(std::move(w));
            } else {
                int nonzero = 0;
                for (const auto& x : counts.values)
                    if (!x.is_zero()) ++nonzero;
                if (nonzero <= 2) ++r.trivial;
                else ++r.confirmed;
            }
        } catch (const CapExceeded&) {
            ++r.skipped;
        }

        // advance the odometer
        size_t i = 0;
        while (i < pos.size()) {
            if (++pos[i] < choices[i].size()) break;
            pos[i] = 0;
            ++i;
        }
        if (i == pos.size()) break;
    }
    return r;
}

}  // namespace

json ScanResult::to_report(const FamilySpec& family) const {
    json out;
    out["family"] = family.describe();
    out["graphs"] = graphs;
    out["instances"] = instances;
    out["confirmed"] = confirmed;
    out["falsified"] = falsified;
    out["trivial"] = trivial;
    out["skipped"] = skipped;
    out["violations"] = violations;
    return out;
}

ScanResult scan_log_concavity(const FamilySpec& family, const RunConfig& cfg) {
    std::vector<Multigraph> graphs = generate_family(family);
    std::vector<GraphScan> partial(graphs.size());

    int threads = std::max(1, cfg.threads);
    if (threads == 1 || graphs.size() <= 1) {
        for (size_t i = 0; i < graphs.size(); ++i) partial[i] = scan_one_graph(graphs[i], cfg);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= graphs.size()) return;
                    partial[i] = scan_one_graph(graphs[i], cfg);
                }
            });
        for (auto& th : pool) th.join();
    }

    ScanResult total;
    total.graphs = static_cast<long>(graphs.size());
    for (const auto& p : partial) {  // merged in generation order, deterministic
        total.instances += p.instances;
        total.confirmed += p.confirmed;
        total.falsified += p.falsified;
        total.trivial += p.trivial;
        total.skipped += p.skipped;
        for (const auto& v : p.violations) total.violations.push_back(v);
    }
    return total;
}

}  // namespace fpoly
