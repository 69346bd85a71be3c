#pragma once

// Canonical ASCII text for every value kind.  The output is valid DSL input
// and parses back to an equal value.

#include <string>
#include <vector>

#include "poles.hpp"

namespace lfac {

namespace detail {

inline std::string rational_text(const Rational& r) { return r.get_str(); }

inline std::string monomial_text(const Monomial& m) {
    std::string s;
    for (const auto& [n, e] : m.entries()) {
        if (!s.empty()) s += '*';
        s += n;
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

/// One signed term; `negative` tells the caller to emit a leading minus.
inline std::string term_text(const Monomial& m, const Rational& c, bool& negative) {
    negative = c < 0;
    const Rational mag = abs(c);
    if (m.is_one()) return rational_text(mag);
    if (mag == 1) return monomial_text(m);
    return rational_text(mag) + '*' + monomial_text(m);
}

inline std::string terms_text(const std::vector<std::pair<Monomial, Rational>>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        bool neg = false;
        std::string t = term_text(terms[i].first, terms[i].second, neg);
        if (i == 0)
            s = neg ? "-" + t : t;
        else
            s += (neg ? " - " : " + ") + t;
    }
    return s;
}

inline std::vector<std::pair<Monomial, Rational>> poly_terms(const Polynomial& p) {
    return {p.terms().begin(), p.terms().end()};
}

}  // namespace detail

inline std::string to_text(const Scalar& s) {
    if (s.is_laurent()) {
        // monic monomial denominator: fold it into the terms
        return detail::terms_text(s.laurent_terms());
    }
    std::string num = detail::terms_text(detail::poly_terms(s.numerator()));
    if (s.numerator().terms().size() > 1) num = "(" + num + ")";
    return num + "/(" + detail::terms_text(detail::poly_terms(s.denominator())) + ")";
}

/// Scalar as an operand of '*': parenthesized unless a single product.
inline std::string scalar_factor_text(const Scalar& s) {
    std::string t = to_text(s);
    if (t.front() == '-' || t.find_first_of(" /") != std::string::npos) return "(" + t + ")";
    return t;
}

/// "(1 - beta*X)", with the sign folded for single negative terms.
inline std::string linear_text(const Scalar& beta) {
    if (beta.is_laurent_monomial()) {
        auto terms = beta.laurent_terms();
        bool neg = false;
        std::string t = detail::term_text(terms[0].first, terms[0].second, neg);
        std::string coeff = t == "1" ? "X" : t + "*X";
        return std::string("(1 ") + (neg ? "+ " : "- ") + coeff + ")";
    }
    return "(1 - (" + to_text(beta) + ")*X)";
}

inline std::string to_text(const SplitRational& f) {
    std::vector<std::string> den;
    bool last_paren = false;
    std::string n;
    auto push = [&](const std::string& item, bool paren) {
        if (!n.empty() && !(paren && last_paren)) n += '*';
        n += item;
        last_paren = paren;
    };
    if (!f.unit().is_one()) push(scalar_factor_text(f.unit()), false);
    if (f.xpower() == 1) push("X", false);
    if (f.xpower() != 0 && f.xpower() != 1) push("X^" + std::to_string(f.xpower()), false);
    for (const auto& fac : f.factors()) {
        std::string lin = linear_text(fac.beta);
        int e = fac.exponent > 0 ? fac.exponent : -fac.exponent;
        if (e != 1) lin += "^" + std::to_string(e);
        if (fac.exponent > 0)
            push(lin, e == 1);
        else
            den.push_back(lin);
    }
    if (n.empty()) n = "1";
    if (den.empty()) return n;
    // "-1/(...)" and "2*a/(...)" parse as (n)/(...) since '/' is left-associative
    if (den.size() == 1) return n + "/" + den[0];
    std::string d;
    for (const auto& x : den) d += x;
    return n + "/(" + d + ")";
}

inline std::string to_text(const Character& c) {
    std::string s;
    for (const auto& [name, e] : c.tag.exponents()) {
        if (!s.empty()) s += '*';
        s += "ram(" + name + ")";
        if (e != 1) s += "^" + std::to_string(e);
    }
    if (c.is_unramified()) return "unr(" + to_text(c.satake) + ")";
    if (c.satake.is_one()) return s;
    // fold the Satake value into a single-generator ram(...)
    if (c.tag.exponents().size() == 1 && c.tag.exponents().begin()->second == 1)
        return "ram(" + c.tag.exponents().begin()->first + ", " + to_text(c.satake) + ")";
    return s + "*unr(" + to_text(c.satake) + ")";
}

inline std::string to_text(const IrredPart& p) {
    std::string s = "irr(" + std::to_string(p.dim) + ", " + p.label + ", " + to_text(p.base_det);
    if (p.base_sim && p.dim != 2) s += ", " + to_text(*p.base_sim);
    s += ")";
    if (p.dual) s = "dual(" + s + ")";
    if (!p.twist.is_trivial()) s = "twist(" + s + ", " + to_text(p.twist) + ")";
    return s;
}

inline std::string to_text(const Block& b) {
    if (const auto* c = std::get_if<Character>(&b.part)) {
        if (c->is_trivial()) return "sp(" + std::to_string(b.n) + ")";
        if (b.n == 0) return to_text(*c);
        return to_text(*c) + " x sp(" + std::to_string(b.n) + ")";
    }
    std::string s = to_text(std::get<IrredPart>(b.part));
    if (b.n > 0) s += " x sp(" + std::to_string(b.n) + ")";
    return s;
}

inline std::string to_text(const WDRep& w) {
    if (w.empty()) return "empty";
    std::string s;
    for (const auto& b : w.blocks()) {
        if (!s.empty()) s += " + ";
        s += to_text(b);
    }
    return s;
}

inline std::string to_text(const PoleEntry& e) {
    std::string s = "pole(" + to_text(e.root) + ", " + to_string(e.classification) + ", " + to_text(e.witness);
    if (e.bessel) s += ", " + to_text(e.bessel->first) + ", " + to_text(e.bessel->second);
    return s + ")";
}

inline std::string to_text(const PoleReport& r) {
    std::string s = "report(";
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (i) s += ", ";
        s += to_text(r.entries[i]);
    }
    return s + ")";
}

inline std::string to_text(const Gl2Param& p) {
    switch (p.kind) {
        case Gl2Kind::principal_series: {
            const auto& bs = p.rep.blocks();
            std::string s = "gl2.ps(" + to_text(std::get<Character>(bs[0].part)) + ", " +
                            to_text(std::get<Character>(bs[1].part));
            return s + (p.reducible ? ", reducible)" : ")");
        }
        case Gl2Kind::steinberg_twist:
            return "gl2.st(" + to_text(std::get<Character>(p.rep.blocks()[0].part)) + ")";
        case Gl2Kind::supercuspidal:
            return "gl2.sc(" + to_text(std::get<IrredPart>(p.rep.blocks()[0].part)) + ")";
    }
    return "?";
}

inline std::string to_text(const Gsp4Param& p) {
    std::string s = std::string("gsp4(") + to_string(p.st_type) + ", " + to_text(p.rep) + ", " + to_text(p.similitude);
    if (!p.annotation.empty()) s += ", \"" + p.annotation + "\"";
    return s + ")";
}

}  // namespace lfac
