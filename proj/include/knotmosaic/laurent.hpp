// Sparse integer Laurent polynomials in one variable.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace kmos {

// Exponent -> coefficient map; zero coefficients are never stored, so
// equality is plain map equality.
class LaurentPoly {
public:
    using Coeff = long long;

    LaurentPoly() = default;
    static LaurentPoly constant(Coeff c) {
        LaurentPoly p;
        p.add_term(0, c);
        return p;
    }
    static LaurentPoly monomial(int exp, Coeff c = 1) {
        LaurentPoly p;
        p.add_term(exp, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == 1;
    }

    const std::map<int, Coeff>& terms() const { return terms_; }

    Coeff coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(int exp, Coeff c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(Coeff k) const {
        LaurentPoly out;
        if (k != 0)
            for (auto [e, c] : terms_) out.terms_.emplace(e, c * k);
        return out;
    }

    LaurentPoly shifted(int dexp) const {
        LaurentPoly out;
        for (auto [e, c] : terms_) out.terms_.emplace(e + dexp, c);
        return out;
    }

    // Substitute x -> x^-1 (the mirror image of a bracket/Jones value).
    LaurentPoly mirrored() const {
        LaurentPoly out;
        for (auto [e, c] : terms_) out.terms_.emplace(-e, c);
        return out;
    }

    bool mirror_symmetric() const { return *this == mirrored(); }

    // Exact substitution x -> x^k with 1/k on exponents, i.e. re-expresses
    // a polynomial in x^k as one in x.  All exponents must divide evenly.
    LaurentPoly exponents_divided(int k) const {
        LaurentPoly out;
        for (auto [e, c] : terms_) {
            if (e % k != 0) throw std::domain_error("exponent not a multiple of " + std::to_string(k));
            out.terms_.emplace(e / k, c);
        }
        return out;
    }

    Coeff evaluated_at_minus_one() const {
        Coeff v = 0;
        for (auto [e, c] : terms_) v += (e % 2 == 0) ? c : -c;
        return v;
    }

    Coeff evaluated_at_one() const {
        Coeff v = 0;
        for (auto [e, c] : terms_) v += c;
        return v;
    }

    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    int span() const { return terms_.empty() ? 0 : max_exp() - min_exp(); }

    // Normative rendering: terms by ascending exponent as "c*VAR^e" joined
    // with " + ", negative coefficients kept inline; zero renders as "0".
    std::string to_string(const std::string& var) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += std::to_string(c);
            out += '*';
            out += var;
            out += '^';
            out += std::to_string(e);
        }
        return out;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
    }

private:
    std::map<int, Coeff> terms_;
};

}  // namespace kmos
