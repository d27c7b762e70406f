#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkinv/classify.hpp"
#include "linkinv/cyclotomic.hpp"
#include "linkinv/divisor.hpp"
#include "linkinv/errors.hpp"
#include "linkinv/links.hpp"
#include "linkinv/orbifold.hpp"

namespace linkinv {

// Branched cover g = z_0^p + f(z_1,...,z_n) over the link of f. With
// gcd(p, d) = 1 the cover link has weights (d, p w_1, ..., p w_n) and
// degree p d, and div Delta_g = (L_p - 1) div Delta_f.
struct CoverSpec {
    LinkDescriptor base;
    Integer p;
};

inline CoverSpec make_cover(const WeightVector& base_w, const Integer& base_d,
                            const Integer& p) {
    if (p < 1)
        throw domain_error("make_cover: p must be positive");
    const Integer g = igcd(p, base_d);
    if (g != 1)
        throw domain_error("make_cover: gcd(p, d) = gcd(" + p.get_str() + ", " +
                           base_d.get_str() + ") = " + g.get_str() + " != 1");
    return CoverSpec{link_from_weights(base_w, base_d), p};
}

struct CoverReport {
    CoverSpec spec;
    LinkDescriptor cover_link;
    DivisorExpr base_divisor;
    DivisorExpr cover_divisor;
    Integer base_middle_betti;
    Integer base_torsion_order;
    bool base_rational_homology_sphere = false;
    bool is_rational_homology_sphere = false; // of the cover
    bool is_homotopy_sphere = false;
    Integer delta_g_at_one;       // |Delta_g(1)|
    Integer delta_g_at_minus_one; // signed
    std::optional<SphereClass> sphere_class; // filled when the cover dimension is 4m+1
};

inline CoverReport analyze_cover(const CoverSpec& spec) {
    const LinkDescriptor& base = spec.base;
    const Integer& p = spec.p;

    // The divisor identity needs gcd(p, u_i) = 1 for every ratio;
    // gcd(p, d) = 1 is the simple sufficient condition make_cover enforces.
    for (std::size_t i = 0; i < base.ratios.size(); ++i) {
        const Integer g = igcd(p, base.ratios[i].first);
        if (g != 1)
            throw domain_error("analyze_cover: gcd(p, u_" + std::to_string(i) + ") = gcd(" +
                               p.get_str() + ", " + base.ratios[i].first.get_str() + ") = " +
                               g.get_str() + " != 1");
    }

    CoverReport r;
    r.spec = spec;

    r.base_divisor = milnor_orlik_divisor(base.ratios);
    const CyclotomicExponents base_cyc = to_cyclotomic(r.base_divisor);
    r.base_middle_betti = base_cyc.exponent(1);
    r.base_torsion_order = torsion_order(base_cyc);
    r.base_rational_homology_sphere = (r.base_middle_betti == 0);

    WeightVector cw;
    cw.push_back(base.degree);
    for (const Integer& wi : base.weights)
        cw.push_back(p * wi);
    r.cover_link = link_from_weights(cw, p * base.degree);

    r.cover_divisor = (DivisorExpr::lambda(p) - DivisorExpr::one()) * r.base_divisor;
    if (link_divisor(r.cover_link) != r.cover_divisor)
        throw consistency_error("analyze_cover: divisor from cover ratios differs from "
                                "(L_p - 1) times the base divisor");

    const CyclotomicExponents cover_cyc = to_cyclotomic(r.cover_divisor);
    if (cover_cyc.exponent(1) != 0)
        throw consistency_error("analyze_cover: cover middle Betti " +
                                cover_cyc.exponent(1).get_str() + " != 0");
    r.is_rational_homology_sphere = true;
    r.delta_g_at_one = eval_at_one(cover_cyc);
    r.delta_g_at_minus_one = eval_at_minus_one(cover_cyc);

    r.is_homotopy_sphere = r.base_rational_homology_sphere;
    if ((r.delta_g_at_one == 1) != r.is_homotopy_sphere)
        throw consistency_error("analyze_cover: |Delta_g(1)| = " + r.delta_g_at_one.get_str() +
                                " disagrees with the base rational-homology-sphere check");

    if (r.is_homotopy_sphere && r.cover_link.link_dim % 4 == 1) {
        const long m = (r.cover_link.link_dim - 1) / 4;
        if (m >= 1)
            r.sphere_class = classify_4m_plus_1(r.delta_g_at_minus_one, m);
    }
    return r;
}

// The two divisor shapes of the tabulated even-degree rational homology
// 7-spheres: type 1 is L_d - 1; type 2 is
// n(w) L_d + L_{m_3} - n(w) L_{m_2} - 1 with d = m_2 m_3 coprime (m_3 even
// and m_2 odd when d is even). |H_3| is d for type 1 and m_3^{n(w)+1} for
// type 2.
enum class BaseDivisorType { Type1, Type2, Other };

inline std::string to_string(BaseDivisorType t) {
    switch (t) {
    case BaseDivisorType::Type1: return "1";
    case BaseDivisorType::Type2: return "2";
    case BaseDivisorType::Other: return "other";
    }
    return "?";
}

struct BaseTypeResult {
    BaseDivisorType type = BaseDivisorType::Other;
    Integer n_w = 0;
    Integer m2 = 0;
    Integer m3 = 0;
};

inline BaseTypeResult base_type(const DivisorExpr& base_divisor, const Integer& d) {
    BaseTypeResult out;
    if (d < 2 || !base_divisor.integral())
        return out;
    if (base_divisor.coefficient_sum() != Rational(0))
        return out; // not a rational homology sphere divisor
    if (base_divisor.constant_term() != Rational(-1))
        return out;
    const auto& terms = base_divisor.terms();
    if (terms.size() == 2) {
        if (base_divisor.coefficient(d) == Rational(1)) {
            out.type = BaseDivisorType::Type1;
            return out;
        }
        return out;
    }
    if (terms.size() != 4)
        return out;
    const Rational cd = base_divisor.coefficient(d);
    if (!cd.is_integer() || cd.num() < 1)
        return out;
    Integer m2 = 0, m3 = 0;
    for (const auto& [j, c] : terms) {
        if (j == 1 || j == d)
            continue;
        if (c == Rational(1))
            m3 = j;
        else if (c == -cd)
            m2 = j;
    }
    if (m2 == 0 || m3 == 0 || m2 * m3 != d || igcd(m2, m3) != 1)
        return out;
    if (d % 2 == 0 && (m3 % 2 != 0 || m2 % 2 == 0))
        return out;
    out.type = BaseDivisorType::Type2;
    out.n_w = cd.num();
    out.m2 = m2;
    out.m3 = m3;
    return out;
}

// Diffeomorphism type of a 9-dimensional homotopy-sphere cover. The
// generic route evaluates Delta_g(-1) through the cyclotomic table; the
// case formulas (p odd: p^{sum of even-index base exponents}; p even:
// |H_3| of the base) must agree or the run aborts.
inline SphereClass classify_cover_9sphere(const CoverReport& report) {
    if (report.cover_link.link_dim != 9)
        throw domain_error("classify_cover_9sphere: cover dimension is " +
                           std::to_string(report.cover_link.link_dim) + ", not 9");
    if (!report.is_homotopy_sphere)
        throw domain_error("classify_cover_9sphere: cover is not a homotopy sphere");

    Integer expected;
    if (report.spec.p % 2 != 0) {
        Integer even_sum = 0;
        for (const auto& [j, c] : report.base_divisor.terms())
            if (j % 2 == 0)
                even_sum += c.as_integer();
        expected = ipow(report.spec.p,
                        static_cast<unsigned long>(checked_i64(even_sum, "even exponent sum")));
    } else {
        expected = report.base_torsion_order;
    }
    if (abs(report.delta_g_at_minus_one) != expected)
        throw consistency_error("classify_cover_9sphere: case formula gives " +
                                expected.get_str() + " but Delta_g(-1) = " +
                                report.delta_g_at_minus_one.get_str());
    return classify_4m_plus_1(report.delta_g_at_minus_one, 2);
}

} // namespace linkinv
