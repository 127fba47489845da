#include "factorpoly/json_io.hpp"

namespace fpoly {

json to_json(const Quadratic& q) { return q.to_string(); }

json coeffs_to_json(const std::vector<Quadratic>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.to_string());
    return arr;
}

json to_json(const CoeffSeq& seq) { return coeffs_to_json(seq.values); }

json to_json(const RootSet& rs) {
    json arr = json::array();
    for (const auto& z : rs.roots) arr.push_back(json::array({z.real(), z.imag()}));
    json out;
    out["roots"] = arr;
    out["residuals"] = rs.residuals;
    out["origin_multiplicity"] = rs.origin_multiplicity;
    return out;
}

json to_json(const RootSummary& s) {
    json out;
    out["degree"] = s.degree;
    out["origin_multiplicity"] = s.origin_multiplicity;
    out["real_rooted_nonpositive"] = s.real_rooted_nonpositive;
    out["strictly_negative_real"] = s.strictly_negative_real;
    out["hurwitz_strict"] = s.hurwitz_strict;
    out["hurwitz_quasi"] = s.hurwitz_quasi;
    out["max_real_part"] = s.max_real_part;
    out["max_imag_abs"] = s.max_imag_abs;
    out["min_arg_margin"] = s.min_arg_margin;
    out["min_modulus"] = s.min_modulus;
    out["max_modulus"] = s.max_modulus;
    return out;
}

json to_json(const RegionVerdict& v, const Region* region) {
    json out;
    out["outcome"] = outcome_name(v.outcome);
    if (region) out["region"] = region->describe();
    if (v.witness) out["witness"] = json::array({v.witness->real(), v.witness->imag()});
    if (v.witness_assignment) {
        json arr = json::array();
        for (const auto& z : *v.witness_assignment)
            arr.push_back(json::array({z.real(), z.imag()}));
        out["witness_assignment"] = arr;
    }
    out["near_boundary"] = v.near_boundary;
    out["worst_margin"] = v.worst_margin;
    if (v.samples > 0) out["samples"] = v.samples;
    return out;
}

json to_json(const IneqReport& r) {
    json out;
    out["name"] = r.name;
    out["holds"] = r.holds;
    if (r.first_violation) {
        out["violation"] = {{"j", r.first_violation->index},
                            {"what", r.first_violation->description},
                            {"lhs", r.first_violation->lhs},
                            {"rhs", r.first_violation->rhs}};
    }
    if (r.minors_checked > 0 || r.max_order > 0) {
        out["max_order"] = r.max_order;
        out["completed_order"] = r.completed_order;
        out["minors_checked"] = r.minors_checked;
        out["truncated"] = r.truncated;
    }
    return out;
}

}  // namespace fpoly
