#include "factorpoly/inequalities.hpp"

#include <algorithm>
#include <functional>

namespace fpoly {

namespace {

std::vector<Quadratic> trimmed_values(const CoeffSeq& N) { return N.trimmed(); }

Quadratic value_at(const std::vector<Quadratic>& v, int j) {
    if (j < 0 || j >= static_cast<int>(v.size())) return Quadratic(0);
    return v[static_cast<size_t>(j)];
}

IneqViolation make_violation(int index, const std::string& desc, const Quadratic& lhs,
                             const Quadratic& rhs) {
    return IneqViolation{index, desc, lhs.to_string(), rhs.to_string()};
}

// advance a strictly increasing index combination; false when exhausted
bool next_combination(std::vector<int>& idx, int limit) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<size_t>(i)] < limit - (k - i)) {
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Quadratic exact_determinant(std::vector<std::vector<Quadratic>> a) {
    size_t n = a.size();
    Quadratic det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Quadratic(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Quadratic inv = Quadratic(1) / a[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            Quadratic factor = a[row][col] * inv;
            for (size_t c2 = col; c2 < n; ++c2) a[row][c2] -= factor * a[col][c2];
        }
    }
    return det;
}

IneqReport newton_check(const CoeffSeq& N, int d) {
    IneqReport rep;
    rep.name = "newton";
    auto v = trimmed_values(N);
    if (d < static_cast<int>(v.size()) - 1)
        throw std::invalid_argument("newton_check degree below the sequence length");
    for (int j = 1; j <= d - 1; ++j) {
        // N(j)^2 C(d,j-1) C(d,j+1) >= N(j-1) N(j+1) C(d,j)^2
        Rat cjm = Rat(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j - 1)));
        Rat cj = Rat(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)));
        Rat cjp = Rat(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j + 1)));
        Quadratic lhs = value_at(v, j) * value_at(v, j) * Quadratic(cjm * cjp);
        Quadratic rhs = value_at(v, j - 1) * value_at(v, j + 1) * Quadratic(cj * cj);
        if (lhs < rhs) {
            rep.holds = false;
            rep.first_violation = make_violation(
                j, "N(j)^2/C(d,j)^2 >= N(j-1)N(j+1)/(C(d,j-1)C(d,j+1)) at j=" + std::to_string(j),
                lhs, rhs);
            return rep;
        }
    }
    return rep;
}

IneqReport log_concavity_check(const CoeffSeq& N) {
    IneqReport rep;
    rep.name = "log_concavity";
    auto v = trimmed_values(N);
    for (int j = 1; j + 1 < static_cast<int>(v.size()); ++j) {
        Quadratic lhs = value_at(v, j) * value_at(v, j);
        Quadratic rhs = value_at(v, j - 1) * value_at(v, j + 1);
        if (lhs < rhs) {
            rep.holds = false;
            rep.first_violation = make_violation(
                j, "N(j)^2 >= N(j-1)N(j+1) at j=" + std::to_string(j), lhs, rhs);
            return rep;
        }
    }
    return rep;
}

IneqReport strict_log_concavity_check(const CoeffSeq& N) {
    IneqReport rep;
    rep.name = "strict_log_concavity";
    auto v = trimmed_values(N);
    for (int j = 1; j + 1 < static_cast<int>(v.size()); ++j) {
        if (value_at(v, j).is_zero()) continue;
        Quadratic lhs = value_at(v, j) * value_at(v, j);
        Quadratic rhs = value_at(v, j - 1) * value_at(v, j + 1);
        if (!(lhs > rhs)) {
            rep.holds = false;
            rep.first_violation = make_violation(
                j, "N(j)^2 > N(j-1)N(j+1) at j=" + std::to_string(j) + " with N(j)>0", lhs,
                rhs);
            return rep;
        }
    }
    return rep;
}

namespace {

// shared minor sweep over an explicit matrix entry function
IneqReport minors_check(const std::string& name, int dim,
                        const std::function<Quadratic(int, int)>& entry, int max_order,
                        long budget) {
    IneqReport rep;
    rep.name = name;
    rep.max_order = std::min(max_order, dim);
    if (dim <= 0) {
        rep.completed_order = rep.max_order;
        return rep;
    }

    for (int order = 1; order <= rep.max_order; ++order) {
        std::vector<int> rows(static_cast<size_t>(order));
        for (int i = 0; i < order; ++i) rows[static_cast<size_t>(i)] = i;
        bool more_rows = true;
        while (more_rows) {
            std::vector<int> cols(static_cast<size_t>(order));
            for (int i = 0; i < order; ++i) cols[static_cast<size_t>(i)] = i;
            bool more_cols = true;
            while (more_cols) {
                if (rep.minors_checked >= budget) {
                    rep.truncated = true;
                    rep.completed_order = order - 1;
                    return rep;
                }
                std::vector<std::vector<Quadratic>> sub(
                    static_cast<size_t>(order),
                    std::vector<Quadratic>(static_cast<size_t>(order), Quadratic(0)));
                for (int r = 0; r < order; ++r)
                    for (int c = 0; c < order; ++c)
                        sub[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                            entry(rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)]);
                Quadratic det = exact_determinant(std::move(sub));
                ++rep.minors_checked;
                if (det.sign() < 0) {
                    rep.holds = false;
                    std::string desc = "minor rows{";
                    for (int r : rows) desc += std::to_string(r) + ",";
                    desc += "} cols{";
                    for (int c : cols) desc += std::to_string(c) + ",";
                    desc += "} is negative";
                    rep.first_violation = make_violation(order, desc, det, Quadratic(0));
                    rep.completed_order = order;
                    return rep;
                }
                more_cols = next_combination(cols, dim);
            }
            more_rows = next_combination(rows, dim);
        }
        rep.completed_order = order;
    }
    return rep;
}

}  // namespace

IneqReport toeplitz_minors_check(const CoeffSeq& N, int max_order, long budget) {
    auto v = trimmed_values(N);
    int dim = static_cast<int>(v.size());  // (d+1) x (d+1) truncation
    auto entry = [&v](int r, int c) { return value_at(v, c - r); };
    return minors_check("toeplitz_minors", dim, entry, max_order, budget);
}

Quadratic hurwitz_matrix_entry(const std::vector<Quadratic>& N, int r, int c) {
    return value_at(N, 2 * c - r + 1);
}

IneqReport hurwitz_minors_check(const CoeffSeq& N, int max_order, long budget) {
    auto v = trimmed_values(N);
    int d = static_cast<int>(v.size()) - 1;
    int dim = std::max(d, 0);  // d x d stability matrix
    auto entry = [&v](int r, int c) { return hurwitz_matrix_entry(v, r, c); };
    return minors_check("hurwitz_minors", dim, entry, max_order, budget);
}

IneqReport prop15_consequences(const CoeffSeq& N) {
    IneqReport rep;
    rep.name = "stability_consequences";
    auto v = trimmed_values(N);
    int d = static_cast<int>(v.size()) - 1;
    for (int j = 1; j <= d - 2; ++j) {
        Quadratic lhs = value_at(v, j) * value_at(v, j + 1);
        Quadratic rhs = value_at(v, j - 1) * value_at(v, j + 2);
        if (lhs < rhs) {
            rep.holds = false;
            rep.first_violation = make_violation(
                j, "N(j)N(j+1) >= N(j-1)N(j+2) at j=" + std::to_string(j), lhs, rhs);
            return rep;
        }
    }
    for (int j = 2; j <= d - 2; ++j) {
        Quadratic lhs = value_at(v, j) * value_at(v, j);
        Quadratic rhs = value_at(v, j - 2) * value_at(v, j + 2);
        if (lhs < rhs) {
            rep.holds = false;
            rep.first_violation = make_violation(
                j, "N(j)^2 >= N(j-2)N(j+2) at j=" + std::to_string(j), lhs, rhs);
            return rep;
        }
    }
    return rep;
}

}  // namespace fpoly
