#pragma once

// Scalar: an element of Q(v, a, b, ...), kept as a canonical fraction.
//
// Canonical form: numerator and denominator coprime, denominator monic
// (leading coefficient 1 under the lex order of polynomial.hpp), zero is
// 0/1.  `v` is the formal square root of q; there is no separate `q`.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace lfac {

/// Name of the formal symbol with v^2 = q.
inline constexpr const char* kSqrtQ = "v";

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT(implicit)
    Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)

    static Scalar symbol(const std::string& name) { return Scalar(Polynomial::var(name)); }
    /// q^{k/2} = v^k.
    static Scalar sqrt_q_power(int k) { return laurent_monomial(Monomial::var(kSqrtQ, k), 1); }
    static Scalar laurent_monomial(const Monomial& m, const Rational& c) {
        std::vector<Monomial::Entry> up, down;
        for (const auto& [n, e] : m.entries()) (e > 0 ? up : down).emplace_back(n, e > 0 ? e : -e);
        Scalar s;
        s.num_ = Polynomial::term(Monomial::from_entries(up), c);
        s.den_ = Polynomial::term(Monomial::from_entries(down), 1);
        if (c == 0) s.den_ = Polynomial(1);
        return s;
    }
    /// Canonicalize num/den.  Throws DivisionByZero when den == 0.
    static Scalar fraction(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw DivisionByZero();
        Scalar s;
        if (num.is_zero()) return s;
        Polynomial g = gcd(num, den);
        Polynomial n = num.exact_div(g), d = den.exact_div(g);
        Rational lc = d.leading_coeff();
        s.num_ = n.scaled(1 / lc);
        s.den_ = d.scaled(1 / lc);
        return s;
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const {
        if (!is_rational()) throw DomainError("scalar is not a rational constant");
        return num_.constant_value() / den_.constant_value();
    }
    /// Laurent monomial c * m (possibly with negative exponents)?
    bool is_laurent_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
    /// Denominator is a monomial, so the value is a Laurent polynomial.
    bool is_laurent() const { return den_.is_monomial(); }

    /// Terms of the Laurent expansion (only valid when is_laurent()).
    std::vector<std::pair<Monomial, Rational>> laurent_terms() const {
        std::vector<std::pair<Monomial, Rational>> out;
        const Monomial& dm = den_.leading_monomial();
        for (const auto& [m, c] : num_.terms()) out.emplace_back(m / dm, c);
        return out;
    }

    std::set<std::string> symbols() const {
        auto s = num_.variables();
        auto d = den_.variables();
        s.insert(d.begin(), d.end());
        return s;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return fraction(a.num_ + b.num_, a.den_);
        return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a) {
        Scalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.is_laurent_monomial() && b.is_laurent_monomial()) return monomial_product(a, b);
        Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return fraction(a.num_.exact_div(g1) * b.num_.exact_div(g2),
                        a.den_.exact_div(g2) * b.den_.exact_div(g1));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZero();
        return a * b.inverse();
    }
    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rational lc = num_.leading_coeff();
        Scalar r;
        r.num_ = den_.scaled(1 / lc);
        r.den_ = num_.scaled(1 / lc);
        return r;
    }
    Scalar pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        Scalar r(1), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Deterministic total order used for sorting factors and blocks.
    /// Laurent polynomials come first, compared term by term in descending
    /// lex order; general fractions follow.
    static int compare(const Scalar& a, const Scalar& b) {
        const bool la = a.is_laurent(), lb = b.is_laurent();
        if (la != lb) return la ? -1 : 1;
        if (la) {
            auto ta = a.laurent_terms(), tb = b.laurent_terms();
            if (int c = compare_terms(ta, tb)) return c;
            return 0;
        }
        std::vector<std::pair<Monomial, Rational>> na(a.num_.terms().begin(), a.num_.terms().end()),
            nb(b.num_.terms().begin(), b.num_.terms().end()),
            da(a.den_.terms().begin(), a.den_.terms().end()),
            db(b.den_.terms().begin(), b.den_.terms().end());
        if (int c = compare_terms(na, nb)) return c;
        return compare_terms(da, db);
    }
    friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

    /// Substitute symbols by Scalars (symbols not in the map stay).
    Scalar substitute(const std::map<std::string, Scalar>& values) const {
        return eval_poly(num_, values) / eval_poly(den_, values);
    }
    /// Evaluate at a total rational assignment.
    Rational evaluate(const std::map<std::string, Rational>& values) const {
        auto lookup = [&](const std::string& n) {
            auto it = values.find(n);
            if (it == values.end()) throw DomainError("no value for symbol '" + n + "'");
            return it->second;
        };
        Rational d = den_.evaluate(lookup);
        if (d == 0) throw DivisionByZero("specialization hits a zero denominator");
        return num_.evaluate(lookup) / d;
    }

private:
    explicit Scalar(Polynomial p) : num_(std::move(p)), den_(1) {}

    static Scalar monomial_product(const Scalar& a, const Scalar& b) {
        const auto& [an, ac] = *a.num_.terms().begin();
        const auto& [bn, bc] = *b.num_.terms().begin();
        Monomial m = an * bn / (a.den_.leading_monomial() * b.den_.leading_monomial());
        return laurent_monomial(m, ac * bc);
    }

    static int compare_terms(const std::vector<std::pair<Monomial, Rational>>& a,
                             const std::vector<std::pair<Monomial, Rational>>& b) {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (int c = Monomial::compare(a[i].first, b[i].first)) return -c;
            if (a[i].second != b[i].second) return a[i].second > b[i].second ? -1 : 1;
        }
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        return 0;
    }

    static Scalar eval_poly(const Polynomial& p, const std::map<std::string, Scalar>& values) {
        Scalar s;
        for (const auto& [m, c] : p.terms()) {
            Scalar t(c);
            std::vector<Monomial::Entry> kept;
            for (const auto& [n, e] : m.entries()) {
                auto it = values.find(n);
                if (it == values.end())
                    kept.emplace_back(n, e);
                else
                    t = t * it->second.pow(e);
            }
            s = s + t * Scalar(Polynomial::term(Monomial::from_entries(kept), 1));
        }
        return s;
    }

    Polynomial num_;
    Polynomial den_;
};

/// Half-integers as twice-value integers, so sp(n)/2 shifts stay exact.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt whole(int n) { return {2 * n}; }
    static constexpr HalfInt halves(int h) { return {h}; }
    static HalfInt from_rational(const Rational& r) {
        Rational t = 2 * r;
        if (t.get_den() != 1 || !t.get_num().fits_sint_p())
            throw DomainError("value " + r.get_str() + " is not a half-integer");
        return {static_cast<int>(t.get_num().get_si())};
    }
    Rational value() const { return Rational(twice, 2); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) { return {-a.twice}; }
    friend constexpr bool operator==(HalfInt, HalfInt) = default;
};

}  // namespace lfac
