#pragma once

#include <cctype>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "linkinv/errors.hpp"
#include "linkinv/integer.hpp"
#include "linkinv/rational.hpp"

namespace linkinv {

// Element of the Milnor-Orlik divisor ring: a finite rational combination
// sum c_j L_j, where L_j is the divisor of t^j - 1 and multiplication is
// the bilinear extension of L_a L_b = gcd(a,b) L_{lcm(a,b)}. L_1 is the
// multiplicative identity, so the "constant" of a divisor is stored as the
// coefficient of L_1 and needs no special case.
//
// Canonical text form lists terms by descending index: "L6 - L3 - L2 + 1".
class DivisorExpr {
public:
    using TermMap = std::map<Integer, Rational>;

    DivisorExpr() = default;

    static DivisorExpr constant(Rational c) {
        DivisorExpr d;
        if (!c.is_zero())
            d.terms_.emplace(Integer(1), std::move(c));
        return d;
    }

    static DivisorExpr one() { return constant(Rational(1)); }

    static DivisorExpr lambda(const Integer& j) {
        if (j < 1)
            throw domain_error("DivisorExpr: index must be >= 1, got " + j.get_str());
        DivisorExpr d;
        d.terms_.emplace(j, Rational(1));
        return d;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Integer& j) const {
        auto it = terms_.find(j);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(1); }

    bool integral() const {
        for (const auto& [j, c] : terms_) {
            (void)j;
            if (!c.is_integer())
                return false;
        }
        return true;
    }

    // Sum of all coefficients; for a link divisor this is the multiplicity
    // of (t-1) in Delta, i.e. the middle Betti number of the link.
    Rational coefficient_sum() const {
        Rational s(0);
        for (const auto& [j, c] : terms_) {
            (void)j;
            s += c;
        }
        return s;
    }

    std::size_t support_size() const { return terms_.size(); }

    friend DivisorExpr operator+(const DivisorExpr& a, const DivisorExpr& b) {
        DivisorExpr r = a;
        for (const auto& [j, c] : b.terms_)
            r.add_term(j, c);
        return r;
    }

    friend DivisorExpr operator-(const DivisorExpr& a, const DivisorExpr& b) {
        DivisorExpr r = a;
        for (const auto& [j, c] : b.terms_)
            r.add_term(j, -c);
        return r;
    }

    DivisorExpr operator-() const {
        DivisorExpr r;
        for (const auto& [j, c] : terms_)
            r.terms_.emplace(j, -c);
        return r;
    }

    friend DivisorExpr operator*(const DivisorExpr& a, const DivisorExpr& b) {
        DivisorExpr r;
        for (const auto& [ja, ca] : a.terms_)
            for (const auto& [jb, cb] : b.terms_) {
                const Integer g = igcd(ja, jb);
                r.add_term((ja / g) * jb, ca * cb * Rational(g));
            }
        return r;
    }

    friend DivisorExpr operator*(const Rational& s, const DivisorExpr& a) {
        DivisorExpr r;
        if (s.is_zero())
            return r;
        for (const auto& [j, c] : a.terms_)
            r.terms_.emplace(j, s * c);
        return r;
    }

    friend bool operator==(const DivisorExpr& a, const DivisorExpr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DivisorExpr& a, const DivisorExpr& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Integer& j = it->first;
            const Rational& c = it->second;
            const bool neg = c.num() < 0;
            const Rational mag = neg ? -c : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (j == 1) {
                out += mag.str();
            } else {
                if (mag != Rational(1))
                    out += mag.str() + " ";
                out += "L" + j.get_str();
            }
        }
        return out;
    }

    // Inverse of str(); accepts e.g. "L6 - L3 - L2 + 1", "2 L9 - 1", "1/2 L4".
    static DivisorExpr parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const DivisorExpr& d) {
        return os << d.str();
    }

private:
    void add_term(const Integer& j, const Rational& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(j, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline DivisorExpr DivisorExpr::parse(const std::string& text) {
    DivisorExpr out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto read_int = [&]() -> Integer {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw domain_error("DivisorExpr::parse: expected a number at offset " +
                               std::to_string(start) + " in '" + text + "'");
        return Integer(text.substr(start, i - start));
    };
    skip_ws();
    if (i < n && text.compare(i, 1, "0") == 0 && i + 1 == n)
        return out;
    bool first = true;
    while (i < n) {
        skip_ws();
        if (i >= n)
            break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw domain_error("DivisorExpr::parse: expected '+' or '-' at offset " +
                               std::to_string(i) + " in '" + text + "'");
        }
        first = false;
        Rational coeff(1);
        bool have_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            Integer num = read_int();
            Integer den = 1;
            if (i < n && text[i] == '/') {
                ++i;
                den = read_int();
            }
            coeff = Rational(num, den);
            have_coeff = true;
            skip_ws();
        }
        if (i < n && (text[i] == 'L' || text[i] == 'l')) {
            ++i;
            Integer j = read_int();
            out = out + coeff * Rational(sign) * DivisorExpr::lambda(j);
        } else if (have_coeff) {
            out = out + DivisorExpr::constant(coeff * Rational(sign));
        } else {
            throw domain_error("DivisorExpr::parse: stray token at offset " +
                               std::to_string(i) + " in '" + text + "'");
        }
    }
    return out;
}

// The Milnor-Orlik divisor of Delta for a link with reduced ratios
// u_i/v_i = d/w_i:  div Delta = prod_i (L_{u_i}/v_i - 1). Intermediate
// coefficients may be rational; the final result must be integral for data
// coming from a genuine isolated singularity.
inline DivisorExpr milnor_orlik_divisor(const std::vector<std::pair<Integer, Integer>>& ratios) {
    DivisorExpr acc = DivisorExpr::one();
    for (const auto& [u, v] : ratios) {
        if (u < 1 || v < 1)
            throw domain_error("milnor_orlik_divisor: ratios must be positive");
        if (igcd(u, v) != 1)
            throw domain_error("milnor_orlik_divisor: ratio " + u.get_str() + "/" +
                               v.get_str() + " is not in lowest terms");
        const DivisorExpr factor =
            Rational(Integer(1), v) * DivisorExpr::lambda(u) - DivisorExpr::one();
        acc = acc * factor;
    }
    if (!acc.integral())
        throw domain_error("milnor_orlik_divisor: non-link divisor (non-integer coefficients "
                           "in " + acc.str() + ")");
    return acc;
}

} // namespace linkinv
