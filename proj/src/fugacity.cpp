#include "factorpoly/fugacity.hpp"

#include <json.hpp>

namespace fpoly {

const Quadratic& VertexFugacity::at(int k) const {
    static const Quadratic zero(0);
    if (k < 0 || k > D) return zero;
    return u[static_cast<size_t>(k)];
}

int VertexFugacity::last_nonzero_index() const {
    for (int k = D; k >= 0; --k)
        if (!u[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

void VertexFugacity::validate() const {
    if (static_cast<int>(u.size()) != D + 1)
        throw std::invalid_argument("fugacity sequence must have D+1 entries");
    for (const auto& x : u)
        if (x.sign() < 0) throw std::invalid_argument("fugacities must be nonnegative");
}

void FugacitySpec::validate_against(const Multigraph& G) const {
    if (vertex_count() != G.vertex_count())
        throw std::invalid_argument("fugacity spec sized for a different graph");
    for (int v = 1; v <= G.vertex_count(); ++v) {
        of(v).validate();
        if (of(v).D < G.degree(v))
            throw std::invalid_argument("D(" + std::to_string(v) + ") = " +
                                        std::to_string(of(v).D) + " below vertex degree " +
                                        std::to_string(G.degree(v)));
    }
}

bool FugacitySpec::all_rational() const {
    for (size_t v = 1; v < per_vertex.size(); ++v)
        for (const auto& x : per_vertex[v].u)
            if (!x.is_rational()) return false;
    return true;
}

std::vector<Quadratic> interval_fugacities(int f, int g, int D) {
    if (!(0 <= f && f <= g && g <= D))
        throw std::invalid_argument("interval fugacities need 0 <= f <= g <= D");
    std::vector<Quadratic> u(static_cast<size_t>(D) + 1, Quadratic(0));
    for (int k = f; k <= g; ++k) u[static_cast<size_t>(k)] = Quadratic(1);
    return u;
}

std::vector<Quadratic> set_fugacities(const std::set<int>& S, int D) {
    std::vector<Quadratic> u(static_cast<size_t>(D) + 1, Quadratic(0));
    for (int k : S) {
        if (k < 0 || k > D) throw std::invalid_argument("set fugacity index outside 0..D");
        u[static_cast<size_t>(k)] = Quadratic(1);
    }
    return u;
}

std::vector<Quadratic> ruelle_fugacities(int delta) {
    if (delta < 1) throw std::invalid_argument("ruelle fugacities need delta >= 1");
    // u1 = sqrt(2 - 2/delta), held exactly
    Rat inner = Rat(2) - Rat(2, delta);
    return {Quadratic(1), Quadratic::sqrt_of(inner), Quadratic(1)};
}

Quadratic quad_value(QuadKind q) {
    switch (q) {
        case QuadKind::Sqrt3: return Quadratic(Rat(0), Rat(1), 3);
        case QuadKind::Sqrt2: return Quadratic(Rat(0), Rat(1), 2);
        case QuadKind::Two: return Quadratic(2);
    }
    throw std::logic_error("bad quad kind");
}

QuadKind quad_kind_from_string(const std::string& s) {
    if (s == "sqrt3") return QuadKind::Sqrt3;
    if (s == "sqrt2") return QuadKind::Sqrt2;
    if (s == "2" || s == "two") return QuadKind::Two;
    throw std::invalid_argument("unknown quadratic kind '" + s + "' (sqrt3|sqrt2|2)");
}

std::string quad_kind_name(QuadKind q) {
    switch (q) {
        case QuadKind::Sqrt3: return "sqrt3";
        case QuadKind::Sqrt2: return "sqrt2";
        case QuadKind::Two: return "2";
    }
    return "?";
}

std::vector<Quadratic> thm26_fugacities(int f, int g, int D, QuadKind quad) {
    if (!(0 <= f && f <= g && g <= D))
        throw std::invalid_argument("thm26 fugacities need 0 <= f <= g <= D");
    int span = g - f;
    int a = span / 2, b = span % 2;
    QuadPoly q = QuadPoly::monomial(Quadratic(1), f);
    if (b) q = q * QuadPoly({Quadratic(1), Quadratic(1)});
    if (a) {
        QuadPoly quadratic({Quadratic(1), quad_value(quad), Quadratic(1)});
        q = q * quadratic.pow(static_cast<unsigned>(a));
    }
    std::vector<Quadratic> u(static_cast<size_t>(D) + 1, Quadratic(0));
    for (int k = 0; k <= D; ++k) u[static_cast<size_t>(k)] = q.coeff(k);
    return u;
}

std::vector<Quadratic> binomial_reciprocal_fugacities(int D) {
    std::vector<Quadratic> u(static_cast<size_t>(D) + 1, Quadratic(0));
    for (int k = 0; k <= D; ++k)
        u[static_cast<size_t>(k)] = Quadratic(Rat(1) / Rat(binomial(static_cast<unsigned>(D),
                                                                    static_cast<unsigned>(k))));
    return u;
}

QuadPoly gamma_poly(int D, const std::vector<Quadratic>& u) {
    if (static_cast<int>(u.size()) < D + 1)
        throw std::invalid_argument("gamma_poly needs u defined on 0..D");
    std::vector<Quadratic> c(static_cast<size_t>(D) + 1, Quadratic(0));
    for (int k = 0; k <= D; ++k) {
        if (u[static_cast<size_t>(k)].sign() < 0)
            throw std::invalid_argument("gamma_poly needs nonnegative fugacities");
        c[static_cast<size_t>(k)] =
            Quadratic(Rat(binomial(static_cast<unsigned>(D), static_cast<unsigned>(k)))) *
            u[static_cast<size_t>(k)];
    }
    return QuadPoly(std::move(c));
}

QuadPoly exp_gen_poly(const std::vector<Quadratic>& u) {
    std::vector<Quadratic> c(u.size(), Quadratic(0));
    for (size_t k = 0; k < u.size(); ++k)
        c[k] = u[k] / Quadratic(Rat(factorial(static_cast<unsigned>(k))));
    return QuadPoly(std::move(c));
}

namespace {

Rat binom_rat(int n, int k) {
    return Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

}  // namespace

QuadPoly lemma_gamma(WindowFamily kind, const WindowParams& p) {
    switch (kind) {
        case WindowFamily::ThreeTerm: {
            if (!(1 <= p.k && p.k <= p.D - 1))
                throw std::invalid_argument("three-term window needs 1 <= k <= D-1");
            if (p.beta.sign() < 0) throw std::invalid_argument("beta must be nonnegative");
            QuadPoly out = QuadPoly::monomial(Quadratic(binom_rat(p.D, p.k - 1)), p.k - 1);
            out = out + QuadPoly::monomial(p.beta * Quadratic(binom_rat(p.D, p.k)), p.k);
            out = out + QuadPoly::monomial(Quadratic(binom_rat(p.D, p.k + 1)), p.k + 1);
            return out;
        }
        case WindowFamily::FourTerm: {
            if (!(1 <= p.k && p.k <= p.D - 2))
                throw std::invalid_argument("four-term window needs 1 <= k <= D-2");
            if (p.mu.sign() < 0) throw std::invalid_argument("mu must be nonnegative");
            QuadPoly out = QuadPoly::monomial(Quadratic(binom_rat(p.D, p.k - 1)), p.k - 1);
            out = out + QuadPoly::monomial(p.mu * Quadratic(binom_rat(p.D, p.k)), p.k);
            out = out + QuadPoly::monomial(p.mu * Quadratic(binom_rat(p.D, p.k + 1)), p.k + 1);
            out = out + QuadPoly::monomial(Quadratic(binom_rat(p.D, p.k + 2)), p.k + 2);
            return out;
        }
        case WindowFamily::FourTermOdd: {
            if (p.p < 1) throw std::invalid_argument("odd four-term window needs p >= 1");
            WindowParams q;
            q.D = 2 * p.p + 1;
            q.k = p.p;
            q.mu = p.mu;
            return lemma_gamma(WindowFamily::FourTerm, q);
        }
    }
    throw std::logic_error("bad window family");
}

Quadratic lemma_threshold(WindowFamily kind, SectorCase c, const WindowParams& p) {
    switch (kind) {
        case WindowFamily::ThreeTerm: {
            if (!(1 <= p.k && p.k <= p.D - 1))
                throw std::invalid_argument("three-term window needs 1 <= k <= D-1");
            Rat R = Rat(static_cast<long>(p.k) * (p.D - p.k)) /
                    Rat(static_cast<long>(p.k + 1) * (p.D - p.k + 1));
            switch (c) {
                case SectorCase::A: return Quadratic::sqrt_of(2 * R);
                case SectorCase::B: return Quadratic::sqrt_of(3 * R);
                case SectorCase::C: return Quadratic(2) * Quadratic::sqrt_of(R);
            }
            break;
        }
        case WindowFamily::FourTerm:
            switch (c) {
                case SectorCase::A: return Quadratic(1) + Quadratic::sqrt_of(Rat(2));
                case SectorCase::B: return Quadratic(1) + Quadratic::sqrt_of(Rat(3));
                case SectorCase::C: return Quadratic(3);
            }
            break;
        case WindowFamily::FourTermOdd: {
            if (p.p < 1) throw std::invalid_argument("odd four-term window needs p >= 1");
            Quadratic scale(Rat(p.p, p.p + 2));
            switch (c) {
                case SectorCase::A:
                    return (Quadratic(1) + Quadratic::sqrt_of(Rat(2))) * scale;
                case SectorCase::B:
                    return (Quadratic(1) + Quadratic::sqrt_of(Rat(3))) * scale;
                case SectorCase::C: return Quadratic(3) * scale;
            }
            break;
        }
    }
    throw std::logic_error("bad window family");
}

FugacitySpec uniform_spec(const Multigraph& G, const std::vector<Quadratic>& u, int D) {
    FugacitySpec spec;
    spec.per_vertex.resize(static_cast<size_t>(G.vertex_count()) + 1);
    std::vector<Quadratic> padded(u);
    padded.resize(static_cast<size_t>(D) + 1, Quadratic(0));  // entries above D weigh 0
    for (int v = 1; v <= G.vertex_count(); ++v)
        spec.per_vertex[static_cast<size_t>(v)] = VertexFugacity{D, padded};
    spec.validate_against(G);
    return spec;
}

FugacitySpec interval_spec(const Multigraph& G, const DegreeBounds& b) {
    b.validate(G);
    FugacitySpec spec;
    spec.per_vertex.resize(static_cast<size_t>(G.vertex_count()) + 1);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        int D = G.degree(v);
        size_t i = static_cast<size_t>(v);
        std::vector<Quadratic> u(static_cast<size_t>(D) + 1, Quadratic(0));
        for (int k = b.f[i]; k <= std::min(b.g[i], D); ++k)
            u[static_cast<size_t>(k)] = Quadratic(1);  // f > D leaves all zero
        spec.per_vertex[i] = VertexFugacity{D, std::move(u)};
    }
    spec.validate_against(G);
    return spec;
}

FugacitySpec ruelle_spec(const Multigraph& G) {
    int delta = std::max(1, G.max_degree());
    auto u = ruelle_fugacities(delta);
    FugacitySpec spec;
    spec.per_vertex.resize(static_cast<size_t>(G.vertex_count()) + 1);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        int D = std::max(2, G.degree(v));
        std::vector<Quadratic> padded(u);
        padded.resize(static_cast<size_t>(D) + 1, Quadratic(0));
        spec.per_vertex[static_cast<size_t>(v)] = VertexFugacity{D, std::move(padded)};
    }
    spec.validate_against(G);
    return spec;
}

FugacitySpec thm26_spec(const Multigraph& G, const DegreeBounds& b, QuadKind quad) {
    b.validate(G);
    FugacitySpec spec;
    spec.per_vertex.resize(static_cast<size_t>(G.vertex_count()) + 1);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        size_t i = static_cast<size_t>(v);
        int D = G.degree(v);
        if (b.g[i] > D)
            throw std::invalid_argument("thm26 spec needs g(v) <= deg(G,v) at vertex " +
                                        std::to_string(v));
        spec.per_vertex[i] = VertexFugacity{D, thm26_fugacities(b.f[i], b.g[i], D, quad)};
    }
    spec.validate_against(G);
    return spec;
}

FugacitySpec binomial_reciprocal_spec(const Multigraph& G) {
    FugacitySpec spec;
    spec.per_vertex.resize(static_cast<size_t>(G.vertex_count()) + 1);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        int D = G.degree(v);
        spec.per_vertex[static_cast<size_t>(v)] =
            VertexFugacity{D, binomial_reciprocal_fugacities(D)};
    }
    spec.validate_against(G);
    return spec;
}

namespace {

VertexFugacity vertex_fugacity_from_json(const nlohmann::json& entry, int deg) {
    int D = entry.contains("D") ? entry.at("D").get<int>() : deg;
    if (entry.contains("u")) {
        std::vector<Quadratic> u;
        for (const auto& s : entry.at("u")) u.emplace_back(rat_from_string(s.get<std::string>()));
        if (!entry.contains("D")) D = std::max(deg, static_cast<int>(u.size()) - 1);
        u.resize(static_cast<size_t>(D) + 1, Quadratic(0));
        return VertexFugacity{D, std::move(u)};
    }
    std::string preset = entry.at("preset").get<std::string>();
    if (preset == "interval") {
        int f = entry.at("f").get<int>(), g = entry.at("g").get<int>();
        if (f > g || f < 0) throw std::invalid_argument("interval preset needs 0 <= f <= g");
        if (f > D) return VertexFugacity{D, std::vector<Quadratic>(static_cast<size_t>(D) + 1,
                                                                   Quadratic(0))};
        return VertexFugacity{D, interval_fugacities(f, std::min(g, D), D)};
    }
    if (preset == "ruelle") {
        int delta = entry.contains("delta") ? entry.at("delta").get<int>() : std::max(1, deg);
        D = std::max(D, 2);
        auto u = ruelle_fugacities(delta);
        u.resize(static_cast<size_t>(D) + 1, Quadratic(0));
        return VertexFugacity{D, std::move(u)};
    }
    if (preset == "thm26") {
        int f = entry.at("f").get<int>(), g = entry.at("g").get<int>();
        QuadKind quad = entry.contains("quad")
                            ? quad_kind_from_string(entry.at("quad").get<std::string>())
                            : QuadKind::Sqrt3;
        return VertexFugacity{D, thm26_fugacities(f, g, D, quad)};
    }
    if (preset == "binrec") return VertexFugacity{D, binomial_reciprocal_fugacities(D)};
    throw std::invalid_argument("unknown fugacity preset '" + preset + "'");
}

}  // namespace

FugacitySpec parse_fugacity_config(const std::string& json_text, const Multigraph& G) {
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::invalid_argument(std::string("fugacity config: ") + ex.what());
    }
    FugacitySpec spec;
    spec.per_vertex.resize(static_cast<size_t>(G.vertex_count()) + 1);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        std::string key = std::to_string(v);
        const nlohmann::json* entry = nullptr;
        if (cfg.contains(key)) entry = &cfg.at(key);
        else if (cfg.contains("default")) entry = &cfg.at("default");
        else
            throw std::invalid_argument("fugacity config misses vertex " + key +
                                        " and has no \"default\" entry");
        spec.per_vertex[static_cast<size_t>(v)] = vertex_fugacity_from_json(*entry, G.degree(v));
    }
    spec.validate_against(G);
    return spec;
}

}  // namespace fpoly
