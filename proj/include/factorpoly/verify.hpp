#ifndef FACTORPOLY_VERIFY_HPP
#define FACTORPOLY_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "factorpoly/enumerate.hpp"
#include "factorpoly/inequalities.hpp"
#include "factorpoly/json_io.hpp"

namespace fpoly {

struct RunConfig {
    RootConfig roots;
    EnumConfig enumeration;
    int max_minor_order = 6;
    long minor_budget = 500'000;
    std::uint64_t seed = 0;
    int threads = 1;
};

// One runnable check per named zero-location / inequality result.
struct TheoremCheck {
    enum class Verdict { Confirmed, Falsified, Inapplicable };

    std::string id;
    std::string instance;  // short human-readable description
    Verdict verdict = Verdict::Inapplicable;
    std::string reason;  // set for Falsified / Inapplicable
    json details;        // margins, roots, serialized instance for replay

    bool confirmed() const { return verdict == Verdict::Confirmed; }
};

std::string verdict_name(TheoremCheck::Verdict v);
json to_json(const TheoremCheck& c);

// matching polynomial has only real, strictly negative zeros
TheoremCheck check_heilmann_lieb(const Multigraph& G, const RunConfig& cfg);
// g <= f+1 pointwise: factor polynomial has only real nonpositive zeros
TheoremCheck check_thm3(const Multigraph& G, const DegreeBounds& b, const RunConfig& cfg);
// degree<=2 factors: zeros have real part <= -2/(Delta(Delta-1)^2)
TheoremCheck check_ruelle_bound(const Multigraph& G, const RunConfig& cfg);
// fugacities (1, sqrt(2-2/Delta), 1): real negative zeros
TheoremCheck check_ruelle_fugacity(const Multigraph& G, const RunConfig& cfg);
// real-rooted Gamma(D,u) forces real nonpositive zeros of the counting polynomial
TheoremCheck check_prop6(const Multigraph& G, const FugacitySpec& u, const RunConfig& cfg);
// sector transfer: Gamma zeros at angle >= pi - alpha give a sector pi - 2 alpha verdict
TheoremCheck check_cor19(const Multigraph& G, const FugacitySpec& u, const RunConfig& cfg);
// same through the exponential generating function Q(u, y)
TheoremCheck check_cor20(const Multigraph& G, const FugacitySpec& u, const RunConfig& cfg);
// short-window fugacities (<= 4 consecutive nonzero terms) with case thresholds
TheoremCheck check_prop24(const Multigraph& G, const FugacitySpec& u, SectorCase part,
                          const RunConfig& cfg);
// f <= g <= min(f+2, deg): sector pi/3 (part a) or half-plane (part b)
TheoremCheck check_prop25(const Multigraph& G, const DegreeBounds& b, char part,
                          const RunConfig& cfg);
// quadratic-window fugacities: sector verdict plus the implied inequalities
TheoremCheck check_thm26(const Multigraph& G, const DegreeBounds& b, QuadKind quad,
                         const RunConfig& cfg);
// reciprocal-binomial fugacities: every zero on the unit circle
TheoremCheck check_thm27(const Multigraph& G, const RunConfig& cfg);

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"hl",    "thm3",  "thm4",    "thm5",
                                                 "prop6", "cor19", "cor20",   "prop24",
                                                 "prop25a", "prop25b", "thm26", "thm27"};
    return ids;
}

struct CheckOptions {
    DegreeBounds bounds;                  // used by thm3 / prop25 / thm26
    std::optional<FugacitySpec> fugacity; // prop6 / cor19 / cor20 / prop24; default interval
    QuadKind quad = QuadKind::Sqrt3;
    SectorCase part = SectorCase::C;      // prop24 case
};

TheoremCheck run_check(const std::string& id, const Multigraph& G, const CheckOptions& opts,
                       const RunConfig& cfg);

// ---- graph families and the log-concavity scanner ----

struct FamilySpec {
    enum class Kind { AllGraphs, Random, Named };
    Kind kind = Kind::AllGraphs;
    int max_n = 3, max_m = 4;      // AllGraphs: every multigraph up to these sizes
    int n = 5, m = 8;              // Random
    long count = 100;
    std::uint64_t seed = 1;
    std::string named = "cycles";  // cycles | paths | complete
    int max_size = 8;

    std::string describe() const;
};

// deterministic generation; AllGraphs deduplicates isomorphs for n <= 3 by
// canonical relabeling
std::vector<Multigraph> generate_family(const FamilySpec& spec);
Multigraph random_multigraph(int n, int m, std::mt19937_64& rng);

struct ScanResult {
    long graphs = 0;
    long instances = 0;
    long confirmed = 0;
    long falsified = 0;
    long trivial = 0;  // held with at most 2 nonzero coefficients
    long skipped = 0;  // over an enumeration cap
    std::vector<json> violations;

    json to_report(const FamilySpec& family) const;
};

// exhaustive log-concavity audit of factor counts over every degree-bound
// assignment f <= g <= deg(G) of every family member; violations are
// reported verbatim, never suppressed
ScanResult scan_log_concavity(const FamilySpec& family, const RunConfig& cfg);

}  // namespace fpoly

#endif
