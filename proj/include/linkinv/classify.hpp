#pragma once

#include <optional>
#include <string>

#include "linkinv/bernoulli.hpp"
#include "linkinv/cyclotomic.hpp"
#include "linkinv/errors.hpp"
#include "linkinv/links.hpp"

namespace linkinv {

enum class ExoticFlag { No, Yes, Unknown };

inline std::string to_string(ExoticFlag f) {
    switch (f) {
    case ExoticFlag::No: return "no";
    case ExoticFlag::Yes: return "yes";
    case ExoticFlag::Unknown: return "unknown";
    }
    return "?";
}

// Classification verdict for a link. For links that are not integral
// homology spheres we record middle Betti number and torsion order; for
// homotopy spheres of dimension 4m-1 the class k in bP_{4m} (standard iff
// k = 0); for dimension 4m+1 the standard/Kervaire dichotomy with the
// exotic flag tracking the bP_{4m+2} status.
struct SphereClass {
    int dimension = 0;
    bool homotopy_sphere = false;

    Integer middle_betti = 0;
    Integer torsion_order = 1;

    std::optional<Integer> bp_class;
    std::optional<Integer> bp_group_order;

    std::optional<bool> kervaire;
    ExoticFlag exotic = ExoticFlag::No;

    bool standard() const {
        if (!homotopy_sphere)
            return false;
        if (bp_class)
            return *bp_class == 0;
        if (kervaire)
            return !*kervaire;
        return false;
    }

    std::string verdict() const {
        if (!homotopy_sphere) {
            if (middle_betti != 0)
                return "not_a_sphere";
            return "rational_homology_sphere";
        }
        if (bp_class)
            return *bp_class == 0 ? "standard" : "exotic";
        if (kervaire)
            return *kervaire ? "kervaire" : "standard";
        return "unknown";
    }
};

// Diffeomorphism class of a Brieskorn-Pham link of dimension 4m-1, m >= 2.
// The signature tau of the bounded parallelizable manifold satisfies
// tau = (-1)^m 8k, and two such spheres agree iff k matches mod |bP_{4m}|;
// the reported class is k mod |bP_{4m}| in Brieskorn's parametrization,
// with k = 0 the standard sphere.
inline SphereClass classify_4m_minus_1(const ExponentVector& a, const Integer& budget) {
    const LinkDescriptor l = link_from_exponents(a);
    SphereClass out;
    out.dimension = l.link_dim;
    if (l.link_dim % 4 != 3)
        throw domain_error("classify_4m_minus_1: dimension " + std::to_string(l.link_dim) +
                           " is not of the form 4m-1");
    const long m = (l.link_dim + 1) / 4;
    if (m < 2)
        throw domain_error("classify_4m_minus_1: needs dimension >= 7 (bP_4 is not covered)");

    if (!integral_homology_sphere(a).is_integral_homology_sphere) {
        const CyclotomicExponents cyc = to_cyclotomic(link_divisor(l));
        out.homotopy_sphere = false;
        out.middle_betti = cyc.exponent(1);
        out.torsion_order = torsion_order(cyc);
        return out;
    }

    const Integer tau = signature(a, budget);
    if (tau % 8 != 0)
        throw consistency_error("classify_4m_minus_1: signature " + tau.get_str() +
                                " of a homotopy sphere is not divisible by 8");
    const Integer order = bp_order_4m(m);
    Integer k = ((m % 2 == 0 ? tau : -tau) / 8) % order;
    if (k < 0)
        k += order;
    out.homotopy_sphere = true;
    out.bp_class = k;
    out.bp_group_order = order;
    return out;
}

// Levine's rule for a homotopy sphere of dimension 4m+1 with Alexander
// polynomial value Delta(-1): standard when |Delta(-1)| = +-1 mod 8,
// Kervaire when +-3 mod 8. Whether the Kervaire sphere is exotic is the
// bP_{4m+2} status.
inline SphereClass classify_4m_plus_1(const Integer& delta_at_minus_one, long m) {
    if (m < 1)
        throw domain_error("classify_4m_plus_1: requires m >= 1");
    const Integer ad = abs(delta_at_minus_one);
    if (ad % 2 == 0)
        throw domain_error("classify_4m_plus_1: Delta(-1) = " + delta_at_minus_one.get_str() +
                           " is even; not a homotopy-sphere input");
    SphereClass out;
    out.dimension = static_cast<int>(4 * m + 1);
    out.homotopy_sphere = true;
    const Integer r = ad % 8; // 1, 3, 5 or 7
    const bool kerv = (r == 3 || r == 5);
    out.kervaire = kerv;
    if (kerv) {
        switch (bp_status_4m2(m)) {
        case Bp4m2Status::Z2: out.exotic = ExoticFlag::Yes; break;
        case Bp4m2Status::Trivial: out.exotic = ExoticFlag::No; break;
        case Bp4m2Status::ZeroOrZ2Unknown: out.exotic = ExoticFlag::Unknown; break;
        }
    }
    return out;
}

// Homotopy classes of almost contact structures on a homotopy (2n-1)-sphere,
// pi_{2n-1}(SO(2n)/U(n)).
struct GroupDescriptor {
    enum class Form { Z, ZPlusZ2, Cyclic } form;
    Integer order; // set when form == Cyclic; order 1 is the trivial group

    std::string str() const {
        switch (form) {
        case Form::Z: return "Z";
        case Form::ZPlusZ2: return "Z + Z_2";
        case Form::Cyclic: return order == 1 ? "0" : "Z_" + order.get_str();
        }
        return "?";
    }
};

inline GroupDescriptor almost_contact_group(long n) {
    if (n < 3)
        throw domain_error("almost_contact_group: requires n >= 3");
    Integer fact = 1;
    for (long i = 2; i <= n - 1; ++i)
        fact *= i;
    switch (n % 4) {
    case 0: return {GroupDescriptor::Form::ZPlusZ2, 0};
    case 1: return {GroupDescriptor::Form::Cyclic, fact};
    case 2: return {GroupDescriptor::Form::Z, 0};
    default: return {GroupDescriptor::Form::Cyclic, fact / 2};
    }
}

// Morita invariant of a dimension-(4m+1) Brieskorn homotopy sphere: mu/2.
inline Rational morita_invariant_4m_plus_1(const Integer& mu) {
    if (mu < 0)
        throw domain_error("morita_invariant_4m_plus_1: negative Milnor number");
    return Rational(mu, 2);
}

} // namespace linkinv
