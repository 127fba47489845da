#ifndef FACTORPOLY_JSON_IO_HPP
#define FACTORPOLY_JSON_IO_HPP

#include <json.hpp>

#include "factorpoly/enumerate.hpp"
#include "factorpoly/inequalities.hpp"
#include "factorpoly/region.hpp"

namespace fpoly {

using json = nlohmann::json;

json to_json(const Quadratic& q);                 // exact string
json coeffs_to_json(const std::vector<Quadratic>& values);
json to_json(const CoeffSeq& seq);                // array of exact strings
json to_json(const RootSet& roots);               // arrays of [re, im]
json to_json(const RootSummary& s);
json to_json(const RegionVerdict& v, const Region* region = nullptr);
json to_json(const IneqReport& r);

}  // namespace fpoly

#endif
