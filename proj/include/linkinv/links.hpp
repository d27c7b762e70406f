#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "linkinv/cyclotomic.hpp"
#include "linkinv/divisor.hpp"
#include "linkinv/errors.hpp"
#include "linkinv/integer.hpp"
#include "linkinv/rational.hpp"

namespace linkinv {

// Brieskorn-Pham exponents a = (a_0,...,a_n) of z_0^{a_0} + ... + z_n^{a_n}.
struct ExponentVector {
    std::vector<Integer> a;

    explicit ExponentVector(std::vector<Integer> exps) : a(std::move(exps)) {
        if (a.size() < 3)
            throw domain_error("ExponentVector: need at least 3 exponents (link dimension >= 3)");
        for (const Integer& x : a)
            if (x < 2)
                throw domain_error("ExponentVector: exponents must be >= 2");
    }

    int nvars() const { return static_cast<int>(a.size()); }
};

// A weighted homogeneous link: n+1 variables, reduced weights, degree d,
// and the reduced ratios u_i/v_i = d/w_i. Input order of weights is
// preserved everywhere; nothing is sorted.
struct LinkDescriptor {
    int nvars = 0;
    std::vector<Integer> weights;
    Integer degree;
    std::vector<std::pair<Integer, Integer>> ratios; // (u_i, v_i)
    int link_dim = 0;
};

inline LinkDescriptor link_from_exponents(const ExponentVector& a) {
    LinkDescriptor l;
    l.nvars = a.nvars();
    l.degree = lcm_many(a.a);
    for (const Integer& ai : a.a) {
        l.weights.push_back(l.degree / ai);
        l.ratios.emplace_back(ai, 1);
    }
    l.link_dim = 2 * l.nvars - 3;
    return l;
}

inline LinkDescriptor link_from_weights(std::vector<Integer> w, Integer d) {
    if (w.size() < 2)
        throw domain_error("link_from_weights: need at least 2 weights");
    if (d < 1)
        throw domain_error("link_from_weights: degree must be positive");
    if (gcd_many(w) != 1)
        throw domain_error("link_from_weights: weights are not reduced (common factor " +
                           gcd_many(w).get_str() + ")");
    for (const Integer& wi : w)
        if (wi >= d)
            throw domain_error("link_from_weights: weight " + wi.get_str() +
                               " >= degree " + d.get_str() +
                               " (a linear variable; unreduced data)");
    LinkDescriptor l;
    l.nvars = static_cast<int>(w.size());
    l.degree = d;
    for (const Integer& wi : w) {
        const Integer g = igcd(d, wi);
        l.ratios.emplace_back(d / g, wi / g);
    }
    l.weights = std::move(w);
    l.link_dim = 2 * l.nvars - 3;
    return l;
}

inline DivisorExpr link_divisor(const LinkDescriptor& l) {
    return milnor_orlik_divisor(l.ratios);
}

// mu = prod_i (d - w_i)/w_i, exactly; integral for consistent data.
inline Integer milnor_number(const LinkDescriptor& l) {
    Rational mu(1);
    for (const Integer& wi : l.weights)
        mu *= Rational(l.degree - wi, wi);
    if (!mu.is_integer())
        throw domain_error("milnor_number: product " + mu.str() +
                           " is not an integer; inconsistent weighted-homogeneous data");
    return mu.num();
}

// The link of an isolated singularity in n+1 variables is (n-1)-connected,
// i.e. connectivity nvars - 2.
inline int connectivity(const LinkDescriptor& l) { return l.nvars - 2; }

// Graph on the exponents: vertices a_0..a_n, an edge when gcd(a_i,a_j) > 1.
// C_ev is the connected component holding every even exponent (all even
// vertices are pairwise connected, so there is only one such component).
struct BrieskornGraph {
    std::vector<Integer> labels;
    std::vector<int> component;   // component id per vertex
    std::vector<int> degree;      // number of graph neighbours
    std::vector<int> even_component_vertices; // indices, empty when no even label

    bool isolated(int v) const { return degree[v] == 0; }
};

inline BrieskornGraph brieskorn_graph(const ExponentVector& a) {
    const int n = a.nvars();
    BrieskornGraph g;
    g.labels = a.a;
    g.degree.assign(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (igcd(a.a[i], a.a[j]) > 1) {
                ++g.degree[i];
                ++g.degree[j];
                parent[find(i)] = find(j);
            }
    g.component.resize(n);
    for (int i = 0; i < n; ++i)
        g.component[i] = find(i);
    int even_root = -1;
    for (int i = 0; i < n; ++i)
        if (a.a[i] % 2 == 0) {
            even_root = g.component[i];
            break;
        }
    if (even_root >= 0)
        for (int i = 0; i < n; ++i)
            if (g.component[i] == even_root)
                g.even_component_vertices.push_back(i);
    return g;
}

// Brieskorn's graph criterion for L(a) being an integral homology sphere:
//   1. G(a) has at least two isolated points, or
//   2. G(a) has exactly one isolated point, lying outside C_ev, and C_ev has
//      an odd number of vertices with gcd(a_i, a_j) = 2 for all distinct
//      pairs in it.
enum class ZhsReason { Condition1, Condition2, Fails };

struct ZhsVerdict {
    bool is_integral_homology_sphere = false;
    ZhsReason reason = ZhsReason::Fails;
};

inline ZhsVerdict integral_homology_sphere(const ExponentVector& a) {
    const BrieskornGraph g = brieskorn_graph(a);
    std::vector<int> isolated;
    for (int i = 0; i < a.nvars(); ++i)
        if (g.isolated(i))
            isolated.push_back(i);
    if (isolated.size() >= 2)
        return {true, ZhsReason::Condition1};
    if (isolated.size() == 1 && !g.even_component_vertices.empty()) {
        const auto& cev = g.even_component_vertices;
        const bool isolated_in_cev =
            std::find(cev.begin(), cev.end(), isolated[0]) != cev.end();
        bool pairwise_two = true;
        for (std::size_t i = 0; i < cev.size() && pairwise_two; ++i)
            for (std::size_t j = i + 1; j < cev.size() && pairwise_two; ++j)
                if (igcd(a.a[cev[i]], a.a[cev[j]]) != 2)
                    pairwise_two = false;
        if (!isolated_in_cev && cev.size() % 2 == 1 && pairwise_two)
            return {true, ZhsReason::Condition2};
    }
    return {false, ZhsReason::Fails};
}

inline std::string to_string(ZhsReason r) {
    switch (r) {
    case ZhsReason::Condition1: return "condition1";
    case ZhsReason::Condition2: return "condition2";
    case ZhsReason::Fails: return "fails";
    }
    return "?";
}

// Signature of the Brieskorn variety bounded by L(a), by exact lattice
// enumeration:
//   tau = #{x, 0 < x_i < a_i : sum x_i/a_i mod 2 in (0,1)}
//       - #{x, ................................. in (1,2)}.
// Residues are compared via the common denominator L = lcm(a_i), so the
// count is exact; a sum landing exactly on an integer means the monodromy
// has eigenvalue 1 (the link is not a rational homology sphere) and is
// rejected rather than binned.
inline Integer signature(const ExponentVector& a, const Integer& budget) {
    if (a.nvars() % 2 == 0)
        throw domain_error("signature: link dimension " +
                           std::to_string(2 * a.nvars() - 3) +
                           " is not 3 mod 4 (need an odd variable count)");
    if (budget < 1)
        throw domain_error("signature: budget must be positive");
    Integer mu = 1;
    for (const Integer& ai : a.a)
        mu *= ai - 1;
    if (mu > budget)
        throw resource_error("signature: " + mu.get_str() +
                             " lattice points exceed budget " + budget.get_str());
    const Integer big_l = lcm_many(a.a);
    if (Integer(a.nvars()) * big_l >= pow2(62))
        throw resource_error("signature: lcm of exponents too large for exact enumeration");

    const int n = a.nvars();
    std::vector<std::int64_t> av(n), q(n);
    for (int i = 0; i < n; ++i) {
        av[i] = checked_i64(a.a[i], "signature exponent");
        q[i] = checked_i64(big_l / a.a[i], "signature quotient");
    }
    const std::int64_t l64 = checked_i64(big_l, "signature lcm");
    const std::int64_t period = 2 * l64;

    // Mixed-radix odometer over x_i in [1, a_i - 1], tracking S = sum x_i q_i.
    std::vector<std::int64_t> x(n, 1);
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i)
        s += q[i];
    std::int64_t plus = 0, minus = 0;
    for (;;) {
        const std::int64_t r = s % period;
        if (r == 0 || r == l64)
            throw domain_error("signature: sum x_i/a_i hit an integer (monodromy eigenvalue 1; "
                               "the link is not a rational homology sphere)");
        if (r < l64)
            ++plus;
        else
            ++minus;
        int i = 0;
        while (i < n) {
            if (x[i] + 1 < av[i]) {
                ++x[i];
                s += q[i];
                break;
            }
            s -= (x[i] - 1) * q[i];
            x[i] = 1;
            ++i;
        }
        if (i == n)
            break;
    }
    return Integer(plus) - Integer(minus);
}

// ---- comma-separated decimal parsing (CLI / fixtures) ----

inline std::vector<Integer> parse_integer_csv(const std::string& text, const char* what) {
    std::vector<Integer> out;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw domain_error(std::string(what) + ": empty entry in '" + text + "'");
        for (char c : token)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw domain_error(std::string(what) + ": '" + token +
                                   "' is not a nonnegative decimal integer");
        out.emplace_back(token);
        token.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            token += c;
    }
    flush();
    return out;
}

inline ExponentVector parse_exponents(const std::string& text) {
    return ExponentVector(parse_integer_csv(text, "exponents"));
}

inline std::vector<Integer> parse_weights(const std::string& text) {
    return parse_integer_csv(text, "weights");
}

} // namespace linkinv
