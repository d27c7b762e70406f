#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linkinv/errors.hpp"
#include "linkinv/integer.hpp"
#include "linkinv/links.hpp"

namespace linkinv {

using WeightVector = std::vector<Integer>;

inline void require_reduced(const WeightVector& w, const char* who) {
    if (w.size() < 2)
        throw domain_error(std::string(who) + ": need at least 2 weights");
    for (const Integer& x : w)
        if (x < 1)
            throw domain_error(std::string(who) + ": weights must be positive");
    if (gcd_many(w) != 1)
        throw domain_error(std::string(who) + ": weights are not reduced (common factor " +
                           gcd_many(w).get_str() + ")");
}

// d_i = gcd of all weights except w_i.
inline std::vector<Integer> complementary_gcds(const WeightVector& w) {
    const std::size_t n = w.size();
    std::vector<Integer> prefix(n + 1, Integer(0)), suffix(n + 1, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = igcd(prefix[i], w[i]);
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = igcd(suffix[i + 1], w[i]);
    std::vector<Integer> d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = igcd(prefix[i], suffix[i + 1]);
    return d;
}

// Well-formed model of P(w): while some d_i = gcd of the other weights
// exceeds 1, divide every weight except w_i by it (d_i is coprime to w_i
// by reducedness). The fixed point is well-formed; the weight product
// strictly decreases, so this terminates, and the result is independent of
// the scan order.
inline WeightVector normalize_weights(WeightVector w) {
    require_reduced(w, "normalize_weights");
    for (bool changed = true; changed;) {
        changed = false;
        const std::size_t n = w.size();
        for (std::size_t i = 0; i < n; ++i) {
            Integer q = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    q = igcd(q, w[j]);
            if (q > 1) {
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i)
                        w[j] /= q;
                changed = true;
            }
        }
    }
    return w;
}

// Integer bookkeeping of P(w) and of a degree-d hypersurface in it:
// a_w = lcm(d_i) generates Pic^orb, upsilon_w = lcm(w_i) generates Pic and
// is the orbifold order of P(w); the canonical degree of a hypersurface is
// d - |w| by adjunction.
//
// The dualizing sheaf of P(w) itself is O(-|w|) for any w, but identifying
// the anti-dualizing sheaf with O(+|w|) requires well-formedness; on a non
// well-formed space O(m) and O(n) can be isomorphic with m != n. Downstream
// consumers therefore gate the d - |w| adjunction on an explicit check (the
// hypersurface orbifold order dividing d) rather than on the profile alone.
struct OrbifoldProfile {
    WeightVector weights;
    std::vector<Integer> d_i;
    Integer a_w;
    Integer upsilon_w;
    bool well_formed = false;
    WeightVector normalized;
    std::optional<Integer> degree;
    std::optional<Integer> canonical_degree;
};

inline OrbifoldProfile orbifold_profile(const WeightVector& w,
                                        std::optional<Integer> degree = std::nullopt) {
    require_reduced(w, "orbifold_profile");
    OrbifoldProfile p;
    p.weights = w;
    p.d_i = complementary_gcds(w);
    p.a_w = lcm_many(p.d_i);
    p.upsilon_w = lcm_many(w);
    p.well_formed = std::all_of(p.d_i.begin(), p.d_i.end(),
                                [](const Integer& x) { return x == 1; });
    p.normalized = normalize_weights(w);
    if (degree) {
        if (*degree < 1)
            throw domain_error("orbifold_profile: degree must be positive");
        p.degree = *degree;
        Integer total = 0;
        for (const Integer& wi : w)
            total += wi;
        p.canonical_degree = *degree - total;
    }
    return p;
}

// Branched cover z_0^p + f = 0 over a base hypersurface of degree d in
// P(w): as an algebraic variety the cover is P(w-normalized), and its
// orbifold Fano index is the sum of the normalized weights, independent of
// the (coprime) branching order p.
struct BranchedFano {
    Integer index;
    WeightVector variety_weights; // the cover is isomorphic to P(these)
};

inline BranchedFano fano_index_branched(const WeightVector& base_w, const Integer& base_d,
                                        const Integer& p) {
    require_reduced(base_w, "fano_index_branched");
    if (base_d < 1 || p < 1)
        throw domain_error("fano_index_branched: degree and p must be positive");
    const Integer g = igcd(p, base_d);
    if (g != 1)
        throw domain_error("fano_index_branched: gcd(p, d) = " + g.get_str() + " != 1");
    BranchedFano out;
    out.variety_weights = normalize_weights(base_w);
    out.index = 0;
    for (const Integer& wi : out.variety_weights)
        out.index += wi;
    return out;
}

// A singular stratum of the orbifold: the coordinates in `support` survive,
// the rest vanish; the local uniformizing group is cyclic of order
// gcd{w_i : i in support}. For a Brieskorn-Pham hypersurface a stratum
// meets the link exactly when at least two coordinates survive.
struct StratumRecord {
    std::vector<int> support;
    Integer isotropy_order;
    bool meets_link = false;
};

struct OrbifoldOrderResult {
    Integer order;
    std::vector<StratumRecord> strata;
};

namespace detail {

// Maximal supports with a common factor: the maximal elements among
// T_p = {i : p | w_i} over primes p. These are the irreducible components
// of the singular set.
inline std::vector<std::vector<int>> maximal_supports(const std::vector<Integer>& w,
                                                      std::size_t min_size) {
    std::set<Integer> primes;
    for (const Integer& wi : w)
        for (const auto& [p, e] : factorize(wi)) {
            (void)e;
            if (p > 1)
                primes.insert(p);
        }
    std::vector<std::vector<int>> sets;
    for (const Integer& p : primes) {
        std::vector<int> t;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] % p == 0)
                t.push_back(static_cast<int>(i));
        if (t.size() >= min_size)
            sets.push_back(std::move(t));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<int>> maximal;
    for (const auto& s : sets) {
        bool contained = false;
        for (const auto& t : sets)
            if (&s != &t && s.size() < t.size() &&
                std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                contained = true;
                break;
            }
        if (!contained)
            maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

inline Integer support_gcd(const std::vector<Integer>& w, const std::vector<int>& support) {
    Integer g = 0;
    for (int i : support)
        g = igcd(g, w[static_cast<std::size_t>(i)]);
    return g;
}

// lcm of gcd(w|_S) over every subset S with |S| >= min_size and gcd > 1.
// Per prime p this is p^e with e maximal such that p^e still divides at
// least min_size of the weights, which avoids walking all 2^n subsets.
inline Integer all_strata_order(const std::vector<Integer>& w, std::size_t min_size) {
    std::set<Integer> primes;
    for (const Integer& wi : w)
        for (const auto& [p, e] : factorize(wi)) {
            (void)e;
            primes.insert(p);
        }
    Integer order = 1;
    for (const Integer& p : primes) {
        Integer pe = p;
        Integer best = 1;
        for (;;) {
            std::size_t count = 0;
            for (const Integer& wi : w)
                if (wi % pe == 0)
                    ++count;
            if (count < min_size)
                break;
            best = pe;
            pe *= p;
        }
        order *= best;
    }
    return order;
}

} // namespace detail

// Orbifold order of the leaf space of a Brieskorn-Pham link: the lcm of the
// isotropy orders over all singular strata that meet the link.
inline OrbifoldOrderResult bp_orbifold_order(const ExponentVector& a) {
    if (a.nvars() > 24)
        throw resource_error("bp_orbifold_order: more than 24 variables");
    const LinkDescriptor l = link_from_exponents(a);
    OrbifoldOrderResult out;
    out.order = detail::all_strata_order(l.weights, 2);
    for (auto& support : detail::maximal_supports(l.weights, 2)) {
        StratumRecord rec;
        rec.isotropy_order = detail::support_gcd(l.weights, support);
        rec.support = std::move(support);
        rec.meets_link = true;
        out.strata.push_back(std::move(rec));
    }
    return out;
}

// Singular strata of the ambient P(w) itself (no hypersurface): here
// single-coordinate strata count, and the order is upsilon_w.
inline OrbifoldOrderResult ambient_strata(const WeightVector& w) {
    require_reduced(w, "ambient_strata");
    OrbifoldOrderResult out;
    out.order = detail::all_strata_order(w, 1);
    for (auto& support : detail::maximal_supports(w, 1)) {
        StratumRecord rec;
        rec.isotropy_order = detail::support_gcd(w, support);
        rec.meets_link = support.size() >= 2;
        rec.support = std::move(support);
        out.strata.push_back(std::move(rec));
    }
    return out;
}

} // namespace linkinv
