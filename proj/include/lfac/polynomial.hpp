#pragma once

// Sparse multivariate polynomials over Q with exact division and gcd.
//
// Monomial order: pure lex, variables ranked by ascending name (so `a`
// outranks `b`, which outranks `v`).  Terms are kept in descending order
// and the printer emits them in that order, which is what makes rendered
// output byte-stable.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lfac {

using Rational = mpq_class;

/// Sorted (name, exponent) list with nonzero exponents.  Exponents may be
/// negative only in the Laurent views built by Scalar; Polynomial keeps them
/// nonnegative.
class Monomial {
public:
    using Entry = std::pair<std::string, int>;

    Monomial() = default;
    static Monomial var(const std::string& name, int exp = 1) {
        Monomial m;
        if (exp != 0) m.v_.emplace_back(name, exp);
        return m;
    }
    static Monomial from_entries(std::vector<Entry> es) {
        std::sort(es.begin(), es.end());
        Monomial m;
        for (auto& e : es) {
            if (!m.v_.empty() && m.v_.back().first == e.first)
                m.v_.back().second += e.second;
            else
                m.v_.push_back(std::move(e));
            if (m.v_.back().second == 0) m.v_.pop_back();
        }
        return m;
    }

    const std::vector<Entry>& entries() const { return v_; }
    bool is_one() const { return v_.empty(); }
    int degree(const std::string& x) const {
        for (const auto& [n, e] : v_)
            if (n == x) return e;
        return 0;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& e : v_) d += e.second;
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) { return combine(a, b, 1); }
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return combine(a, b, -1); }

    /// True when every exponent of `d` is <= the matching exponent here.
    bool divisible_by(const Monomial& d) const {
        for (const auto& [n, e] : d.v_)
            if (degree(n) < e) return false;
        return true;
    }

    /// Componentwise minimum (the gcd for nonnegative exponents).
    static Monomial min(const Monomial& a, const Monomial& b) {
        Monomial m;
        std::size_t i = 0, j = 0;
        while (i < a.v_.size() || j < b.v_.size()) {
            if (j == b.v_.size() || (i < a.v_.size() && a.v_[i].first < b.v_[j].first)) {
                if (a.v_[i].second < 0) m.v_.push_back(a.v_[i]);
                ++i;
            } else if (i == a.v_.size() || b.v_[j].first < a.v_[i].first) {
                if (b.v_[j].second < 0) m.v_.push_back(b.v_[j]);
                ++j;
            } else {
                int e = std::min(a.v_[i].second, b.v_[j].second);
                if (e != 0) m.v_.emplace_back(a.v_[i].first, e);
                ++i;
                ++j;
            }
        }
        return m;
    }

    /// Lex comparison: -1, 0, +1 for a < b, a == b, a > b.
    static int compare(const Monomial& a, const Monomial& b) {
        std::size_t i = 0, j = 0;
        while (i < a.v_.size() && j < b.v_.size()) {
            const auto& [na, ea] = a.v_[i];
            const auto& [nb, eb] = b.v_[j];
            if (na == nb) {
                if (ea != eb) return ea > eb ? 1 : -1;
                ++i;
                ++j;
            } else if (na < nb) {
                return ea > 0 ? 1 : -1;
            } else {
                return eb > 0 ? -1 : 1;
            }
        }
        if (i < a.v_.size()) return a.v_[i].second > 0 ? 1 : -1;
        if (j < b.v_.size()) return b.v_[j].second > 0 ? -1 : 1;
        return 0;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    static Monomial combine(const Monomial& a, const Monomial& b, int sign) {
        Monomial m;
        m.v_.reserve(a.v_.size() + b.v_.size());
        std::size_t i = 0, j = 0;
        while (i < a.v_.size() || j < b.v_.size()) {
            if (j == b.v_.size() || (i < a.v_.size() && a.v_[i].first < b.v_[j].first)) {
                m.v_.push_back(a.v_[i++]);
            } else if (i == a.v_.size() || b.v_[j].first < a.v_[i].first) {
                m.v_.emplace_back(b.v_[j].first, sign * b.v_[j].second);
                ++j;
            } else {
                int e = a.v_[i].second + sign * b.v_[j].second;
                if (e != 0) m.v_.emplace_back(a.v_[i].first, e);
                ++i;
                ++j;
            }
        }
        return m;
    }

    std::vector<Entry> v_;
};

/// Strict-weak "greater first" order so std::map iterates terms leading-first.
struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialDesc>;

    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT(implicit)
        if (c != 0) t_.emplace(Monomial{}, c);
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(implicit)
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (c != 0) p.t_.emplace(m, c);
        return p;
    }
    static Polynomial var(const std::string& name) { return term(Monomial::var(name), 1); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    bool is_monomial() const { return t_.size() == 1; }
    Rational constant_value() const {
        auto it = t_.find(Monomial{});
        return it == t_.end() ? Rational(0) : it->second;
    }
    const Monomial& leading_monomial() const { return t_.begin()->first; }
    const Rational& leading_coeff() const { return t_.begin()->second; }

    std::set<std::string> variables() const {
        std::set<std::string> s;
        for (const auto& [m, c] : t_)
            for (const auto& e : m.entries()) s.insert(e.first);
        return s;
    }
    int degree(const std::string& x) const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.degree(x));
        return d;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a += b;
        return a;
    }
    Polynomial& operator+=(const Polynomial& b) {
        for (const auto& [m, c] : b.t_) add_term(m, c);
        return *this;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        for (const auto& [m, c] : b.t_) a.add_term(m, -c);
        return a;
    }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, c] : a.t_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial scaled(const Rational& c, const Monomial& m = {}) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [mm, cc] : t_) r.t_.emplace_hint(r.t_.end(), mm * m, cc * c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }

    /// Exact quotient; throws DomainError if `d` does not divide.
    Polynomial exact_div(const Polynomial& d) const {
        if (d.is_zero()) throw DivisionByZero();
        if (d.is_monomial()) {
            const auto& [dm, dc] = *d.t_.begin();
            Polynomial q;
            for (const auto& [m, c] : t_) {
                if (!m.divisible_by(dm)) throw DomainError("inexact polynomial division");
                q.t_.emplace_hint(q.t_.end(), m / dm, c / dc);
            }
            return q;
        }
        Polynomial q, r = *this;
        const auto& [lm, lc] = *d.t_.begin();
        while (!r.is_zero()) {
            const auto& [rm, rc] = *r.t_.begin();
            if (!rm.divisible_by(lm)) throw DomainError("inexact polynomial division");
            Monomial qm = rm / lm;
            Rational qc = rc / lc;
            q.add_term(qm, qc);
            r = r - d.scaled(qc, qm);
        }
        return q;
    }

    /// Scale so the leading coefficient is 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        Rational inv = 1 / leading_coeff();
        return scaled(inv);
    }

    /// Componentwise-minimum monomial dividing every term.
    Monomial monomial_content() const {
        if (t_.empty()) return {};
        auto it = t_.begin();
        Monomial g = it->first;
        for (++it; it != t_.end() && !g.is_one(); ++it) g = Monomial::min(g, it->first);
        return g;
    }

    /// Coefficients as a polynomial in `x`: result[k] is the coefficient of x^k.
    std::vector<Polynomial> coefficients_in(const std::string& x) const {
        std::vector<Polynomial> cs(static_cast<std::size_t>(degree(x)) + 1);
        for (const auto& [m, c] : t_) {
            int k = m.degree(x);
            cs[static_cast<std::size_t>(k)].add_term(m / Monomial::var(x, k), c);
        }
        return cs;
    }

    /// Evaluate with a total assignment of rationals.
    template <class Lookup>
    Rational evaluate(Lookup&& value_of) const {
        Rational s = 0;
        for (const auto& [m, c] : t_) {
            Rational t = c;
            for (const auto& [n, e] : m.entries()) {
                Rational b = value_of(n);
                if (e < 0) {
                    if (b == 0) throw DivisionByZero("evaluation at a zero of a variable");
                    b = 1 / b;
                }
                for (int k = 0; k < std::abs(e); ++k) t *= b;
            }
            s += t;
        }
        return s;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

private:
    Terms t_;
};

namespace detail {

inline Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

/// gcd of all coefficients of `p` viewed as a polynomial in `x`.
inline Polynomial content_in(const Polynomial& p, const std::string& x) {
    auto cs = p.coefficients_in(x);
    Polynomial g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_impl(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials in `x`.
inline Polynomial pseudo_rem(Polynomial a, const Polynomial& b, const std::string& x) {
    const int db = b.degree(x);
    const Polynomial lcb = b.coefficients_in(x).back();
    for (int da = a.degree(x); !a.is_zero() && da >= db; da = a.degree(x)) {
        Polynomial lca = a.coefficients_in(x).back();
        a = lcb * a - lca * b * Polynomial::term(Monomial::var(x, da - db), 1);
    }
    return a;
}

inline Polynomial primitive_part(const Polynomial& p, const std::string& x) {
    if (p.is_zero()) return p;
    return p.exact_div(content_in(p, x)).monic();
}

inline Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a.is_monomial() || b.is_monomial()) {
        Monomial g = Monomial::min(a.monomial_content(), b.monomial_content());
        return Polynomial::term(g, 1);
    }
    const Monomial gm = Monomial::min(a.monomial_content(), b.monomial_content());
    Polynomial a1 = a.exact_div(Polynomial::term(a.monomial_content(), 1));
    Polynomial b1 = b.exact_div(Polynomial::term(b.monomial_content(), 1));
    const Polynomial mono = Polynomial::term(gm, 1);
    if (a1.is_constant() || b1.is_constant()) return mono;

    auto va = a1.variables(), vb = b1.variables();
    std::set<std::string> all = va;
    all.insert(vb.begin(), vb.end());
    const std::string& x = *all.begin();
    if (!va.count(x)) return mono * gcd_impl(a1, content_in(b1, x));
    if (!vb.count(x)) return mono * gcd_impl(content_in(a1, x), b1);

    Polynomial ca = content_in(a1, x), cb = content_in(b1, x);
    Polynomial c = gcd_impl(ca, cb);
    Polynomial p = a1.exact_div(ca), r = b1.exact_div(cb);
    if (p.degree(x) < r.degree(x)) std::swap(p, r);
    while (!r.is_zero() && r.degree(x) > 0) {
        Polynomial rem = pseudo_rem(p, r, x);
        p = std::move(r);
        r = primitive_part(rem, x);
    }
    // r constant nonzero: the x-parts are coprime.
    Polynomial g = r.is_zero() ? primitive_part(p, x) : Polynomial(1);
    return (mono * c * g).monic();
}

}  // namespace detail

/// Monic gcd over Q (gcd(0, 0) = 0).
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) { return detail::gcd_impl(a, b); }

}  // namespace lfac
