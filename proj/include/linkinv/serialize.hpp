#pragma once

// JSON views of the report types. Kept out of the core headers so that the
// library itself does not depend on the JSON vendor header.

#include <json.hpp>

#include <optional>
#include <string>

#include "linkinv/linkinv.hpp"

namespace linkinv {

using json = nlohmann::json;

// Arbitrary-precision values render as JSON numbers when they fit in 64
// bits and as decimal strings otherwise (see docs/schema.md).
inline json to_json(const Integer& v) {
    if (v.fits_slong_p())
        return static_cast<long long>(v.get_si());
    return v.get_str();
}

inline json to_json(const Rational& r) {
    if (r.is_integer())
        return to_json(r.num());
    return r.str();
}

inline json to_json(const std::vector<Integer>& xs) {
    json arr = json::array();
    for (const Integer& x : xs)
        arr.push_back(to_json(x));
    return arr;
}

inline json to_json(const SphereClass& s) {
    json j;
    j["dimension"] = s.dimension;
    j["verdict"] = s.verdict();
    j["bp_group_order"] = s.bp_group_order ? to_json(*s.bp_group_order) : json(nullptr);
    j["class"] = s.bp_class ? to_json(*s.bp_class) : json(nullptr);
    j["kervaire"] = s.kervaire ? json(*s.kervaire) : json(nullptr);
    j["exotic"] = s.kervaire && *s.kervaire ? json(to_string(s.exotic)) : json(nullptr);
    if (!s.homotopy_sphere) {
        j["middle_betti"] = to_json(s.middle_betti);
        j["torsion_order"] = to_json(s.torsion_order);
    }
    return j;
}

inline json to_json(const StratumRecord& rec, bool include_meets_link) {
    json j;
    j["support"] = rec.support;
    j["isotropy_order"] = to_json(rec.isotropy_order);
    if (include_meets_link)
        j["meets_link"] = rec.meets_link;
    return j;
}

inline json to_json(const OrbifoldProfile& p) {
    json j;
    j["weights"] = to_json(p.weights);
    j["reduced"] = true;
    j["normalized"] = to_json(p.normalized);
    j["d_i"] = to_json(p.d_i);
    j["a_w"] = to_json(p.a_w);
    j["upsilon_w"] = to_json(p.upsilon_w);
    j["well_formed"] = p.well_formed;
    if (p.degree)
        j["degree"] = to_json(*p.degree);
    if (p.canonical_degree)
        j["canonical_degree"] = to_json(*p.canonical_degree);
    return j;
}

inline json to_json(const LinkDescriptor& l) {
    json j;
    j["nvars"] = l.nvars;
    j["dim"] = l.link_dim;
    j["weights"] = to_json(l.weights);
    j["degree"] = to_json(l.degree);
    json ratios = json::array();
    for (const auto& [u, v] : l.ratios)
        ratios.push_back(json::array({to_json(u), to_json(v)}));
    j["ratios"] = ratios;
    return j;
}

inline json to_json(const CoverReport& r) {
    json j;
    j["p"] = to_json(r.spec.p);
    j["base"] = to_json(r.spec.base);
    j["cover"] = to_json(r.cover_link);
    j["base_divisor"] = r.base_divisor.str();
    j["cover_divisor"] = r.cover_divisor.str();
    j["base_middle_betti"] = to_json(r.base_middle_betti);
    j["base_torsion_order"] = to_json(r.base_torsion_order);
    j["base_rational_homology_sphere"] = r.base_rational_homology_sphere;
    j["rational_homology_sphere"] = r.is_rational_homology_sphere;
    j["homotopy_sphere"] = r.is_homotopy_sphere;
    j["delta_g_at_one"] = to_json(r.delta_g_at_one);
    j["delta_g_at_minus_one"] = to_json(r.delta_g_at_minus_one);
    j["classification"] = r.sphere_class ? to_json(*r.sphere_class) : json(nullptr);
    return j;
}

} // namespace linkinv
