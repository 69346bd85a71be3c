#pragma once

// Rational functions in X = q^{-s} kept fully factored:
//
//     unit * X^xpower * prod_i (1 - beta_i X)^{e_i}
//
// Factors are sorted by Scalar::compare on beta and no two betas are equal,
// so structural equality is value equality.

#include <algorithm>
#include <map>
#include <vector>

#include "scalar.hpp"

namespace lfac {

struct Factor {
    Scalar beta;
    int exponent = 0;
    friend bool operator==(const Factor&, const Factor&) = default;
};

class SplitRational {
public:
    SplitRational() = default;  // the constant 1

    static SplitRational constant(const Scalar& unit) {
        if (unit.is_zero()) throw DomainError("a split rational function must be nonzero");
        SplitRational r;
        r.unit_ = unit;
        return r;
    }
    static SplitRational x_power(int k) {
        SplitRational r;
        r.xpower_ = k;
        return r;
    }
    /// (1 - beta X)^e.
    static SplitRational linear(const Scalar& beta, int e = 1) {
        if (beta.is_zero()) throw DomainError("factor root must be nonzero");
        SplitRational r;
        if (e != 0) r.factors_.push_back({beta, e});
        return r;
    }
    /// 1/(1 - alpha X), the L-factor of an unramified character.
    static SplitRational euler(const Scalar& alpha) { return linear(alpha, -1); }

    static SplitRational make(const Scalar& unit, int xpower, const std::vector<Factor>& fs) {
        SplitRational r = constant(unit);
        r.xpower_ = xpower;
        for (const auto& f : fs) r = r * linear(f.beta, f.exponent);
        return r;
    }

    const Scalar& unit() const { return unit_; }
    int xpower() const { return xpower_; }
    const std::vector<Factor>& factors() const { return factors_; }

    bool is_one() const { return unit_.is_one() && xpower_ == 0 && factors_.empty(); }
    /// 1/P(X) with P(0) = 1.
    bool is_lfactor() const {
        return unit_.is_one() && xpower_ == 0 &&
               std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exponent < 0; });
    }
    /// Order of vanishing at X = 1/beta (negative for poles).
    int vanishing_order(const Scalar& beta) const {
        for (const auto& f : factors_)
            if (f.beta == beta) return f.exponent;
        return 0;
    }
    /// Roots beta at which this function has a pole, in canonical order.
    std::vector<Scalar> pole_roots() const {
        std::vector<Scalar> out;
        for (const auto& f : factors_)
            if (f.exponent < 0) out.push_back(f.beta);
        return out;
    }

    friend SplitRational operator*(const SplitRational& f, const SplitRational& g) { return merge(f, g, 1); }
    friend SplitRational operator/(const SplitRational& f, const SplitRational& g) { return merge(f, g, -1); }
    SplitRational pow(int k) const {
        SplitRational r = constant(unit_.pow(k));
        r.xpower_ = xpower_ * k;
        if (k != 0)
            for (const auto& f : factors_) r.factors_.push_back({f.beta, f.exponent * k});
        return r;
    }

    /// s -> s + t, i.e. X -> v^{-2t} X.
    SplitRational shift(HalfInt t) const {
        const Scalar scale = Scalar::sqrt_q_power(-t.twice);
        SplitRational r;
        r.unit_ = unit_ * scale.pow(xpower_);
        r.xpower_ = xpower_;
        r.factors_.reserve(factors_.size());
        for (const auto& f : factors_) r.factors_.push_back({f.beta * scale, f.exponent});
        // Multiplying every beta by the same monomial keeps them distinct but
        // may reorder them.
        std::sort(r.factors_.begin(), r.factors_.end(),
                  [](const Factor& a, const Factor& b) { return Scalar::compare(a.beta, b.beta) < 0; });
        return r;
    }

    SplitRational substitute(const std::map<std::string, Scalar>& values) const {
        SplitRational r = constant(unit_.substitute(values));
        r.xpower_ = xpower_;
        for (const auto& f : factors_) r = r * linear(f.beta.substitute(values), f.exponent);
        return r;
    }

    /// Value at a rational assignment of all symbols and a rational X.
    Rational evaluate(const std::map<std::string, Rational>& values, const Rational& x) const {
        Rational r = unit_.evaluate(values);
        for (int k = 0; k < std::abs(xpower_); ++k) r = xpower_ > 0 ? Rational(r * x) : Rational(r / x);
        for (const auto& f : factors_) {
            Rational lin = 1 - f.beta.evaluate(values) * x;
            if (lin == 0 && f.exponent < 0) throw DivisionByZero("evaluation at a pole");
            for (int k = 0; k < std::abs(f.exponent); ++k) r = f.exponent > 0 ? Rational(r * lin) : Rational(r / lin);
        }
        return r;
    }

    friend bool operator==(const SplitRational& a, const SplitRational& b) {
        return a.xpower_ == b.xpower_ && a.unit_ == b.unit_ && a.factors_ == b.factors_;
    }

private:
    static SplitRational merge(const SplitRational& f, const SplitRational& g, int sign) {
        SplitRational r;
        r.unit_ = sign > 0 ? f.unit_ * g.unit_ : f.unit_ / g.unit_;
        r.xpower_ = f.xpower_ + sign * g.xpower_;
        const auto& a = f.factors_;
        const auto& b = g.factors_;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int c = i == a.size() ? 1 : j == b.size() ? -1 : Scalar::compare(a[i].beta, b[j].beta);
            if (c < 0) {
                r.factors_.push_back(a[i++]);
            } else if (c > 0) {
                r.factors_.push_back({b[j].beta, sign * b[j].exponent});
                ++j;
            } else {
                int e = a[i].exponent + sign * b[j].exponent;
                if (e != 0) r.factors_.push_back({a[i].beta, e});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Scalar unit_{1};
    int xpower_ = 0;
    std::vector<Factor> factors_;
};

/// Generator of the fractional ideal (f_1, ..., f_k) of Q(symbols)[X, 1/X].
struct IdealGen {
    SplitRational generator;
    bool is_lfactor = false;
    bool contains_units = false;
};

/// Per root, the generator carries the minimum exponent over the inputs
/// (a root missing from an input counts as exponent 0).  Units and powers of
/// X are invertible in the Laurent ring and are dropped.
inline IdealGen ideal_generator(const std::vector<SplitRational>& fs) {
    if (fs.empty()) throw DomainError("ideal_generator needs at least one input");
    std::vector<Factor> roots;
    auto find = [&](const Scalar& b) -> Factor* {
        for (auto& f : roots)
            if (f.beta == b) return &f;
        return nullptr;
    };
    for (const auto& f : fs)
        for (const auto& fac : f.factors())
            if (!find(fac.beta)) roots.push_back({fac.beta, 0});
    std::vector<Factor> out;
    for (auto& r : roots) {
        int e = fs.front().vanishing_order(r.beta);
        for (const auto& f : fs) e = std::min(e, f.vanishing_order(r.beta));
        if (e != 0) out.push_back({r.beta, e});
    }
    IdealGen g;
    g.generator = SplitRational::make(1, 0, out);
    g.contains_units = std::all_of(out.begin(), out.end(), [](const Factor& f) { return f.exponent <= 0; });
    g.is_lfactor = g.generator.is_lfactor();
    return g;
}

}  // namespace lfac
