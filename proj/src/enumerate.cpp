#include "factorpoly/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace fpoly {

std::vector<Quadratic> CoeffSeq::trimmed() const {
    std::vector<Quadratic> t(values);
    while (!t.empty() && t.back().is_zero()) t.pop_back();
    return t;
}

Quadratic CoeffSeq::mass() const {
    Quadratic s(0);
    for (const auto& v : values) s += v;
    return s;
}

bool CoeffSeq::all_rational() const {
    for (const auto& v : values)
        if (!v.is_rational()) return false;
    return true;
}

std::vector<Rat> CoeffSeq::as_rationals() const {
    std::vector<Rat> r;
    r.reserve(values.size());
    for (const auto& v : values) {
        if (!v.is_rational())
            throw std::logic_error("coefficient sequence has irrational entries");
        r.push_back(v.rational_part());
    }
    return r;
}

CoeffSeq brute_counts(const Multigraph& G, const FugacitySpec& u, const EnumConfig& cfg) {
    u.validate_against(G);
    int m = G.edge_count(), n = G.vertex_count();
    if (m > cfg.brute_cap || m > 62)
        throw CapExceeded("brute force over 2^" + std::to_string(m) +
                          " subsets exceeds the edge cap " + std::to_string(cfg.brute_cap));

    CoeffSeq out;
    out.values.assign(static_cast<size_t>(m) + 1, Quadratic(0));
    std::vector<int> deg(static_cast<size_t>(n) + 1, 0);

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        Quadratic weight(1);
        int edges_used = 0;
        for (int e = 0; e < m; ++e) {
            if (!(mask >> e & 1)) continue;
            const auto& ed = G.edge(e);
            deg[static_cast<size_t>(ed.u)] += 1;
            deg[static_cast<size_t>(ed.v)] += 1;
            if (ed.lambda != 1) weight *= Quadratic(ed.lambda);
            ++edges_used;
        }
        for (int v = 1; v <= n && !weight.is_zero(); ++v) {
            const Quadratic& uv = u.of(v).at(deg[static_cast<size_t>(v)]);
            if (!uv.is_one()) weight *= uv;
        }
        if (!weight.is_zero()) out.values[static_cast<size_t>(edges_used)] += weight;
    }
    return out;
}

std::vector<int> default_edge_order(const Multigraph& G) {
    int n = G.vertex_count(), m = G.edge_count();
    std::vector<int> remaining(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> used(static_cast<size_t>(m), false);
    for (const auto& e : G.edges()) {
        remaining[static_cast<size_t>(e.u)] += 1;
        if (e.v != e.u) remaining[static_cast<size_t>(e.v)] += 1;
    }
    std::vector<int> order;
    order.reserve(static_cast<size_t>(m));
    while (static_cast<int>(order.size()) < m) {
        // vertex with the fewest unprocessed incident edges, ties to low index
        int best = -1;
        for (int v = 1; v <= n; ++v)
            if (remaining[static_cast<size_t>(v)] > 0 &&
                (best < 0 ||
                 remaining[static_cast<size_t>(v)] < remaining[static_cast<size_t>(best)]))
                best = v;
        for (int e = 0; e < m; ++e) {
            if (used[static_cast<size_t>(e)]) continue;
            const auto& ed = G.edge(e);
            if (ed.u != best && ed.v != best) continue;
            used[static_cast<size_t>(e)] = true;
            order.push_back(e);
            remaining[static_cast<size_t>(ed.u)] -= 1;
            if (ed.v != ed.u) remaining[static_cast<size_t>(ed.v)] -= 1;
        }
    }
    return order;
}

namespace {

// degrees of active vertices packed in vertex order; small, so a sorted map
// key works and keeps merging deterministic
using DpKey = std::vector<std::uint8_t>;

struct DpValue {
    std::vector<Quadratic> by_count;  // index = edges used so far
};

}  // namespace

CoeffSeq dp_counts(const Multigraph& G, const FugacitySpec& u, const EnumConfig& cfg) {
    u.validate_against(G);
    int m = G.edge_count(), n = G.vertex_count();

    std::vector<int> order = cfg.edge_order ? *cfg.edge_order : default_edge_order(G);
    if (static_cast<int>(order.size()) != m)
        throw std::invalid_argument("edge order must be a permutation of 0..m-1");
    {
        std::vector<bool> seen(static_cast<size_t>(m), false);
        for (int e : order) {
            if (e < 0 || e >= m || seen[static_cast<size_t>(e)])
                throw std::invalid_argument("edge order must be a permutation of 0..m-1");
            seen[static_cast<size_t>(e)] = true;
        }
    }

    // remaining incident edges per vertex, in processing order
    std::vector<int> remaining(static_cast<size_t>(n) + 1, 0);
    for (const auto& e : G.edges()) {
        remaining[static_cast<size_t>(e.u)] += 1;
        if (e.v != e.u) remaining[static_cast<size_t>(e.v)] += 1;
    }

    // a vertex whose accumulated degree passes its last nonzero fugacity can
    // never recover; prune those branches immediately
    std::vector<int> degree_ceiling(static_cast<size_t>(n) + 1, 0);
    Quadratic isolated_factor(1);
    for (int v = 1; v <= n; ++v) {
        degree_ceiling[static_cast<size_t>(v)] = u.of(v).last_nonzero_index();
        if (remaining[static_cast<size_t>(v)] == 0) {
            isolated_factor *= u.of(v).at(0);  // degree stays 0 forever
        }
    }

    // active vertex list (sorted) alongside the state map
    std::vector<int> active;
    std::map<DpKey, DpValue> states;
    {
        DpValue init;
        init.by_count.assign(1, isolated_factor);
        states.emplace(DpKey{}, std::move(init));
    }
    if (isolated_factor.is_zero()) {
        CoeffSeq zero;
        zero.values.assign(static_cast<size_t>(m) + 1, Quadratic(0));
        return zero;
    }

    auto index_of = [&](int v) {
        return static_cast<size_t>(std::lower_bound(active.begin(), active.end(), v) -
                                   active.begin());
    };

    for (int step = 0; step < m; ++step) {
        const auto& ed = G.edge(order[static_cast<size_t>(step)]);
        bool loop = ed.u == ed.v;

        // activate endpoints that are new to the frontier
        std::vector<int> endpoints{ed.u};
        if (!loop) endpoints.push_back(ed.v);
        for (int v : endpoints) {
            auto it = std::lower_bound(active.begin(), active.end(), v);
            if (it != active.end() && *it == v) continue;
            size_t pos = static_cast<size_t>(it - active.begin());
            active.insert(it, v);
            std::map<DpKey, DpValue> widened;
            for (auto& [key, val] : states) {
                DpKey k(key);
                k.insert(k.begin() + static_cast<long>(pos), 0);
                widened.emplace(std::move(k), std::move(val));
            }
            states = std::move(widened);
        }

        size_t iu = index_of(ed.u), iv = index_of(ed.v);
        Quadratic lam(ed.lambda);

        std::map<DpKey, DpValue> next;
        auto add_state = [&](DpKey&& key, size_t count, const Quadratic& w) {
            auto& slot = next[std::move(key)];
            if (slot.by_count.size() <= count) slot.by_count.resize(count + 1, Quadratic(0));
            slot.by_count[count] += w;
        };

        for (auto& [key, val] : states) {
            // exclude branch
            {
                auto& slot = next[key];
                if (slot.by_count.size() < val.by_count.size())
                    slot.by_count.resize(val.by_count.size(), Quadratic(0));
                for (size_t j = 0; j < val.by_count.size(); ++j)
                    slot.by_count[j] += val.by_count[j];
            }
            // include branch
            int du = key[iu] + (loop ? 2 : 1);
            int dv = loop ? du : key[iv] + 1;
            if (du > degree_ceiling[static_cast<size_t>(ed.u)]) continue;
            if (!loop && dv > degree_ceiling[static_cast<size_t>(ed.v)]) continue;
            DpKey k(key);
            k[iu] = static_cast<std::uint8_t>(du);
            if (!loop) k[iv] = static_cast<std::uint8_t>(dv);
            for (size_t j = 0; j < val.by_count.size(); ++j) {
                if (val.by_count[j].is_zero()) continue;
                Quadratic w = val.by_count[j];
                if (!lam.is_one()) w *= lam;
                add_state(DpKey(k), j + 1, w);
            }
        }
        states = std::move(next);

        // fold fugacities of vertices that just finished
        remaining[static_cast<size_t>(ed.u)] -= 1;
        if (!loop) remaining[static_cast<size_t>(ed.v)] -= 1;
        for (int v : endpoints) {
            if (remaining[static_cast<size_t>(v)] != 0) continue;
            auto it = std::lower_bound(active.begin(), active.end(), v);
            if (it == active.end() || *it != v) continue;
            size_t pos = static_cast<size_t>(it - active.begin());
            active.erase(it);
            std::map<DpKey, DpValue> folded;
            for (auto& [key, val] : states) {
                const Quadratic& uv = u.of(v).at(key[pos]);
                if (uv.is_zero()) continue;
                DpKey k(key);
                k.erase(k.begin() + static_cast<long>(pos));
                if (!uv.is_one())
                    for (auto& w : val.by_count) w *= uv;
                auto& slot = folded[std::move(k)];
                if (slot.by_count.size() < val.by_count.size())
                    slot.by_count.resize(val.by_count.size(), Quadratic(0));
                for (size_t j = 0; j < val.by_count.size(); ++j)
                    slot.by_count[j] += val.by_count[j];
            }
            states = std::move(folded);
        }

        if (static_cast<long>(states.size()) > cfg.state_cap)
            throw CapExceeded("frontier DP exceeded the state cap (" +
                              std::to_string(states.size()) + " > " +
                              std::to_string(cfg.state_cap) +
                              "); try brute_counts or a different --order");
    }

    CoeffSeq out;
    out.values.assign(static_cast<size_t>(m) + 1, Quadratic(0));
    for (auto& [key, val] : states) {
        // all vertices finished: key must be empty
        for (size_t j = 0; j < val.by_count.size(); ++j)
            out.values[j] += val.by_count[j];
    }
    return out;
}

CoeffSeq factor_counts(const Multigraph& G, const DegreeBounds& b, const EnumConfig& cfg) {
    return dp_counts(G, interval_spec(G, b), cfg);
}

std::complex<double> evaluate_F(const Multigraph& G, const VertexAssignment& z) {
    if (static_cast<int>(z.z.size()) != G.vertex_count() + 1)
        throw std::invalid_argument("assignment sized for a different graph");
    std::complex<double> prod(1.0, 0.0);
    for (const auto& e : G.edges())
        prod *= 1.0 + to_double(e.lambda) * z.z[static_cast<size_t>(e.u)] *
                          z.z[static_cast<size_t>(e.v)];
    return prod;
}

namespace {

std::complex<double> sample_point(const Region& A, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double kMargin = 1e-3;
    switch (A.kind()) {
        case Region::Kind::Sector: {
            double theta = A.param() - kMargin;
            double phi = (2.0 * unit(rng) - 1.0) * theta;
            double r = std::pow(10.0, -2.0 + 4.0 * unit(rng));  // log scale over (1e-2, 1e2)
            return std::polar(r, phi);
        }
        case Region::Kind::Disc: {
            double r = A.param() * (1.0 - kMargin) * std::sqrt(unit(rng));  // uniform in r^2
            double phi = (2.0 * unit(rng) - 1.0) * M_PI;
            return std::polar(r, phi);
        }
        case Region::Kind::DiscExterior: {
            double r = A.param() * (1.0 + kMargin) * std::pow(10.0, 2.0 * unit(rng));
            double phi = (2.0 * unit(rng) - 1.0) * M_PI;
            return std::polar(r, phi);
        }
    }
    return {0.0, 0.0};
}

struct Monomial {
    std::vector<std::uint8_t> degv;
    double coeff;
};

}  // namespace

RegionVerdict sample_nonvanishing(const Multigraph& G, const std::optional<FugacitySpec>& u,
                                  const Region& A, long samples, std::uint64_t seed,
                                  const EnumConfig& cfg) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    int n = G.vertex_count(), m = G.edge_count();

    // fugacity-weighted path: collect monomials of sum_H lambda_H u_{deg H} z^{deg H}
    std::vector<Monomial> monomials;
    if (u) {
        u->validate_against(G);
        if (m > cfg.sample_expand_cap)
            throw CapExceeded("monomial expansion over 2^" + std::to_string(m) +
                              " subsets exceeds the sampling cap " +
                              std::to_string(cfg.sample_expand_cap));
        std::map<std::vector<std::uint8_t>, Quadratic> acc;
        std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
            std::fill(deg.begin(), deg.end(), 0);
            Quadratic w(1);
            for (int e = 0; e < m; ++e) {
                if (!(mask >> e & 1)) continue;
                const auto& ed = G.edge(e);
                deg[static_cast<size_t>(ed.u)] += 1;
                deg[static_cast<size_t>(ed.v)] += 1;
                if (ed.lambda != 1) w *= Quadratic(ed.lambda);
            }
            for (int v = 1; v <= n && !w.is_zero(); ++v) w *= u->of(v).at(deg[static_cast<size_t>(v)]);
            if (w.is_zero()) continue;
            std::vector<std::uint8_t> key(static_cast<size_t>(n));
            for (int v = 1; v <= n; ++v) key[static_cast<size_t>(v - 1)] =
                static_cast<std::uint8_t>(deg[static_cast<size_t>(v)]);
            acc[key] += w;
        }
        for (auto& [key, w] : acc)
            if (!w.is_zero()) monomials.push_back(Monomial{key, w.to_double()});
    }

    std::mt19937_64 rng(seed);
    RegionVerdict verdict;
    verdict.outcome = Outcome::Nonvanishing;
    verdict.samples = samples;

    VertexAssignment z;
    z.z.resize(static_cast<size_t>(n) + 1);
    for (long s = 0; s < samples; ++s) {
        for (int v = 1; v <= n; ++v) z.z[static_cast<size_t>(v)] = sample_point(A, rng);

        std::complex<double> value;
        double scale = 0.0;
        if (!u) {
            value = {1.0, 0.0};
            scale = 1.0;
            for (const auto& e : G.edges()) {
                auto zz = z.z[static_cast<size_t>(e.u)] * z.z[static_cast<size_t>(e.v)];
                double lam = to_double(e.lambda);
                value *= 1.0 + lam * zz;
                scale *= 1.0 + lam * std::abs(zz);
            }
        } else {
            value = {0.0, 0.0};
            for (const auto& mono : monomials) {
                std::complex<double> term(mono.coeff, 0.0);
                double aterm = std::abs(mono.coeff);
                for (int v = 1; v <= n; ++v) {
                    for (int i = 0; i < mono.degv[static_cast<size_t>(v - 1)]; ++i) {
                        term *= z.z[static_cast<size_t>(v)];
                        aterm *= std::abs(z.z[static_cast<size_t>(v)]);
                    }
                }
                value += term;
                scale += aterm;
            }
            if (scale == 0.0) {  // identically zero polynomial
                verdict.outcome = Outcome::IdenticallyZero;
                return verdict;
            }
        }

        if (std::abs(value) < 1e-12 * scale) {
            verdict.outcome = Outcome::Counterexample;
            verdict.witness = z.z[1];
            verdict.witness_assignment =
                std::vector<std::complex<double>>(z.z.begin() + 1, z.z.end());
            verdict.samples = s + 1;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace fpoly
