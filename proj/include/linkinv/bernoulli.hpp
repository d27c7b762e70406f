#pragma once

#include <string>
#include <vector>

#include "linkinv/errors.hpp"
#include "linkinv/integer.hpp"
#include "linkinv/rational.hpp"

namespace linkinv {

// Bernoulli numbers in the Kervaire-Milnor indexing: B_1 = 1/6, B_2 = 1/30,
// B_3 = 1/42, ... i.e. |B_{2m}| of the modern convention. This is the
// indexing under which |bP_8| = 2^2 (2^3 - 1) numerator(4 B_2 / 2) = 28,
// the classical order.
inline Rational bernoulli(long m) {
    if (m < 1)
        throw domain_error("bernoulli: index must be >= 1");
    // Modern-convention values via B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k.
    const unsigned long n = 2 * static_cast<unsigned long>(m);
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (unsigned long i = 1; i <= n; ++i) {
        Rational acc(0);
        for (unsigned long k = 0; k < i; ++k)
            acc += Rational(binomial(i + 1, k)) * b[k];
        b[i] = -acc / Rational(Integer(i + 1));
    }
    Rational r = b[n];
    return r.num() < 0 ? -r : r;
}

// |bP_{4m}| = 2^{2m-2} (2^{2m-1} - 1) numerator(4 B_m / m), m >= 2.
inline Integer bp_order_4m(long m) {
    if (m < 2)
        throw domain_error("bp_order_4m: requires m >= 2 (bP_{4m} is cyclic only there)");
    const Rational q = Rational(4) * bernoulli(m) / Rational(Integer(m));
    return pow2(2 * m - 2) * (pow2(2 * m - 1) - 1) * q.num();
}

// Status of bP_{4m+2}: Z_2 whenever 4m+2 != 2^i - 2 for every i >= 3;
// known trivial for m in {1,3,7,15}; open otherwise.
enum class Bp4m2Status { Trivial, Z2, ZeroOrZ2Unknown };

inline Bp4m2Status bp_status_4m2(long m) {
    if (m < 1)
        throw domain_error("bp_status_4m2: requires m >= 1");
    // 4m+2 = 2^i - 2 for some i >= 3 exactly when m = 2^{i-2} - 1.
    const Integer dim_plus_2 = Integer(4) * m + 4; // 4m+2+2 = 2^i?
    bool kervaire_dim = false;
    {
        Integer t = dim_plus_2;
        while (t % 2 == 0)
            t /= 2;
        kervaire_dim = (t == 1) && dim_plus_2 >= 8;
    }
    if (!kervaire_dim)
        return Bp4m2Status::Z2;
    if (m == 1 || m == 3 || m == 7 || m == 15)
        return Bp4m2Status::Trivial;
    return Bp4m2Status::ZeroOrZ2Unknown;
}

inline std::string to_string(Bp4m2Status s) {
    switch (s) {
    case Bp4m2Status::Trivial: return "0";
    case Bp4m2Status::Z2: return "Z2";
    case Bp4m2Status::ZeroOrZ2Unknown: return "0 or Z2 (undetermined)";
    }
    return "?";
}

// Unified view of bP_N for the CLI: cyclic with a known order for N = 4m
// (m >= 2), and the three-way status for N = 4m+2.
struct BPGroupStatus {
    enum class Tag { Cyclic, Trivial, Z2, ZeroOrZ2Unknown } tag;
    Integer order; // set when tag == Cyclic

    std::string str() const {
        switch (tag) {
        case Tag::Cyclic: return order == 1 ? "0" : "Z_" + order.get_str();
        case Tag::Trivial: return "0";
        case Tag::Z2: return "Z_2";
        case Tag::ZeroOrZ2Unknown: return "0 or Z_2 (undetermined)";
        }
        return "?";
    }
};

inline BPGroupStatus bp_group(long n) {
    if (n <= 0 || n % 2 != 0)
        throw domain_error("bp_group: only even group indices bP_{2k} are handled");
    if (n % 4 == 0)
        return {BPGroupStatus::Tag::Cyclic, bp_order_4m(n / 4)};
    switch (bp_status_4m2((n - 2) / 4)) {
    case Bp4m2Status::Trivial: return {BPGroupStatus::Tag::Trivial, 1};
    case Bp4m2Status::Z2: return {BPGroupStatus::Tag::Z2, 2};
    default: return {BPGroupStatus::Tag::ZeroOrZ2Unknown, 0};
    }
}

} // namespace linkinv
