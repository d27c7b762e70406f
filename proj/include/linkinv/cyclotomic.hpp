#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "linkinv/divisor.hpp"
#include "linkinv/errors.hpp"
#include "linkinv/integer.hpp"

namespace linkinv {

// Exponents of the cyclotomic factorization Delta(t) = prod_m Phi_m(t)^{e_m},
// obtained from a divisor sum c_j L_j through t^j - 1 = prod_{m|j} Phi_m(t),
// i.e. e_m = sum_{m | j} c_j. For a genuine link divisor every e_m >= 0.
class CyclotomicExponents {
public:
    using ExpMap = std::map<Integer, Integer>;

    CyclotomicExponents() = default;
    explicit CyclotomicExponents(ExpMap e) : e_(std::move(e)) {
        for (auto it = e_.begin(); it != e_.end();) {
            if (it->first < 1)
                throw domain_error("CyclotomicExponents: index must be >= 1");
            if (it->second == 0)
                it = e_.erase(it);
            else
                ++it;
        }
    }

    const ExpMap& exps() const { return e_; }

    Integer exponent(const Integer& m) const {
        auto it = e_.find(m);
        return it == e_.end() ? Integer(0) : it->second;
    }

    friend bool operator==(const CyclotomicExponents& a, const CyclotomicExponents& b) {
        return a.e_ == b.e_;
    }

private:
    ExpMap e_;
};

inline CyclotomicExponents to_cyclotomic(const DivisorExpr& d) {
    if (!d.integral())
        throw domain_error("to_cyclotomic: divisor has non-integer coefficients");
    std::set<Integer> candidates;
    for (const auto& [j, c] : d.terms()) {
        (void)c;
        for (const Integer& m : divisors(j))
            candidates.insert(m);
    }
    CyclotomicExponents::ExpMap e;
    for (const Integer& m : candidates) {
        Integer em = 0;
        for (const auto& [j, c] : d.terms())
            if (j % m == 0)
                em += c.as_integer();
        if (em < 0)
            throw domain_error("to_cyclotomic: exponent of Phi_" + m.get_str() + " is " +
                               em.get_str() + " < 0; not a polynomial (invalid link data)");
        if (em != 0)
            e.emplace(m, em);
    }
    return CyclotomicExponents(std::move(e));
}

// Phi_m(1): 0 for m = 1, p for m = p^k, 1 otherwise.
inline Integer phi_at_one(const Integer& m) {
    if (m == 1)
        return 0;
    if (auto p = prime_power_base(m))
        return *p;
    return 1;
}

// Phi_m(-1): -2 for m = 1, 0 for m = 2, 2 for m = 2^k (k >= 2),
// p for m = 2 p^k with p an odd prime, 1 otherwise.
inline Integer phi_at_minus_one(const Integer& m) {
    if (m == 1)
        return -2;
    if (m == 2)
        return 0;
    if (m % 2 != 0)
        return 1;
    const Integer half = m / 2;
    if (half % 2 == 0) { // 4 | m
        if (auto p = prime_power_base(m); p && *p == 2)
            return 2;
        return 1;
    }
    if (auto p = prime_power_base(half))
        return *p; // covers m = 2 p^k, odd p (and never p = 2 since half is odd > 1)
    return 1;
}

namespace detail {
inline unsigned long exp_ui(const Integer& em) {
    return static_cast<unsigned long>(checked_i64(em, "cyclotomic exponent"));
}
} // namespace detail

// |Delta(1)|; zero exactly when (t-1) divides Delta, i.e. e_1 > 0.
inline Integer eval_at_one(const CyclotomicExponents& e) {
    Integer r = 1;
    for (const auto& [m, em] : e.exps()) {
        const Integer v = phi_at_one(m);
        if (v == 0)
            return 0;
        if (v != 1)
            r *= ipow(v, detail::exp_ui(em));
    }
    return r;
}

// Order of the torsion part: the prime-power Phi contributions with the
// (t-1)^{e_1} factors stripped.
inline Integer torsion_order(const CyclotomicExponents& e) {
    Integer r = 1;
    for (const auto& [m, em] : e.exps()) {
        if (m == 1)
            continue;
        const Integer v = phi_at_one(m);
        if (v != 1)
            r *= ipow(v, detail::exp_ui(em));
    }
    return r;
}

// Signed Delta(-1); zero exactly when e_2 > 0. The sign comes from the
// (-2)^{e_1} contribution of Phi_1.
inline Integer eval_at_minus_one(const CyclotomicExponents& e) {
    Integer r = 1;
    for (const auto& [m, em] : e.exps()) {
        const Integer v = phi_at_minus_one(m);
        if (v == 0)
            return 0;
        if (v != 1 && v != -1)
            r *= ipow(abs(v), detail::exp_ui(em));
        if (v < 0 && em % 2 != 0)
            r = -r;
    }
    return r;
}

// Middle Betti number of the link from its divisor (-1)^n + sum_{j>1} a_j L_j
// in n variables: (-1)^n + sum a_j. Cross-checked against the multiplicity
// e_1 of (t-1) in the cyclotomic factorization, which is the same sum.
inline Integer betti_from_divisor(const DivisorExpr& d, int nvars) {
    if (nvars < 1)
        throw domain_error("betti_from_divisor: variable count must be positive");
    const Rational expected_const(nvars % 2 == 0 ? 1 : -1);
    Rational tail_sum(0);
    for (const auto& [j, c] : d.terms())
        if (j > 1)
            tail_sum += c;
    const Rational via_sum = expected_const + tail_sum;
    const Integer via_e1 = to_cyclotomic(d).exponent(1);
    if (d.constant_term() != expected_const || !via_sum.is_integer() ||
        via_sum.num() != via_e1)
        throw consistency_error("betti_from_divisor: (-1)^n + sum a_j = " + via_sum.str() +
                                " (constant term " + d.constant_term().str() +
                                ") disagrees with e_1 = " + via_e1.get_str());
    return via_e1;
}

// ---- dense integer polynomials, ascending degree ----

inline std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Exact division; throws if the division leaves a remainder.
inline std::vector<Integer> poly_divexact(std::vector<Integer> num, const std::vector<Integer>& den) {
    while (!num.empty() && num.back() == 0)
        num.pop_back();
    if (den.empty() || den.back() == 0)
        throw domain_error("poly_divexact: zero divisor");
    if (num.empty())
        return {Integer(0)};
    if (num.size() < den.size())
        throw consistency_error("poly_divexact: inexact division (degree)");
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (num[k + den.size() - 1] % den.back() != 0)
            throw consistency_error("poly_divexact: inexact division (leading term)");
        const Integer c = num[k + den.size() - 1] / den.back();
        q[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j)
                num[k + j] -= c * den[j];
    }
    for (const Integer& c : num)
        if (c != 0)
            throw consistency_error("poly_divexact: inexact division (remainder)");
    return q;
}

inline Integer poly_eval(const std::vector<Integer>& p, const Integer& t) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * t + p[i];
    return acc;
}

// Coefficients of Phi_m, ascending, via Phi_m = (t^m - 1) / prod_{d|m, d<m} Phi_d.
inline std::vector<Integer> cyclotomic_coefficients(const Integer& m) {
    if (m < 1)
        throw domain_error("cyclotomic_coefficients: index must be >= 1");
    static std::map<Integer, std::vector<Integer>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(m); it != cache.end())
            return it->second;
    }
    std::vector<Integer> result;
    if (m == 1) {
        result = {Integer(-1), Integer(1)};
    } else {
        const unsigned long mi = static_cast<unsigned long>(checked_i64(m, "cyclotomic index"));
        std::vector<Integer> num(mi + 1, Integer(0));
        num[0] = -1;
        num[mi] = 1;
        std::vector<Integer> den{Integer(1)};
        for (const Integer& d : divisors(m))
            if (d != m)
                den = poly_mul(den, cyclotomic_coefficients(d));
        result = poly_divexact(std::move(num), den);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(m, std::move(result)).first->second;
}

// Dense coefficients of prod_m Phi_m^{e_m}. Refuses when the degree
// sum e_m phi(m) exceeds max_degree, so table-scale inputs stay cheap by
// never being expanded.
inline std::vector<Integer> expand_polynomial(const CyclotomicExponents& e,
                                              const Integer& max_degree) {
    if (max_degree < 1)
        throw domain_error("expand_polynomial: max_degree must be positive");
    Integer degree = 0;
    for (const auto& [m, em] : e.exps())
        degree += euler_phi(m) * em;
    if (degree > max_degree)
        throw resource_error("expand_polynomial: degree " + degree.get_str() +
                             " exceeds bound " + max_degree.get_str());
    std::vector<Integer> acc{Integer(1)};
    for (const auto& [m, em] : e.exps()) {
        const std::vector<Integer> phi = cyclotomic_coefficients(m);
        for (Integer k = 0; k < em; ++k)
            acc = poly_mul(acc, phi);
    }
    return acc;
}

} // namespace linkinv
