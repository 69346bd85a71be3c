#pragma once

// Seeded, exact property checks.
//
// Trials draw parameters over formal symbols, so a passing identity holds as
// an identity of rational functions.  The optional numeric mode additionally
// specializes every symbol (and X) to random rationals and compares values.
//
// Randomness: mt19937_64 reduced by modulo.  The std distributions are
// implementation-defined, so they are avoided to keep runs identical across
// platforms.  Each trial gets its own engine seeded from (seed, trial index),
// which makes any failure replayable on its own.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "render.hpp"

namespace lfac::verify {

struct TrialProfile {
    std::uint64_t seed = 0;
    int block_budget = 4;
    int symbol_pool = 4;
    bool allow_irred = false;
    int max_n = 3;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int num, int den) { return uniform(0, den - 1) < num; }
    Rational rational(int span = 9, int den = 5) {
        int n = 0;
        while (n == 0) n = uniform(-span, span);
        return Rational(n, uniform(1, den));
    }

private:
    std::mt19937_64 g_;
};

/// splitmix64 of (seed, trial).
inline std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::string pool_symbol(int i) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    return names[i % 8];
}

inline Scalar random_satake(Rng& r, const TrialProfile& p) {
    Scalar s = Scalar::symbol(pool_symbol(r.uniform(0, std::max(1, p.symbol_pool) - 1)));
    if (r.chance(1, 3)) s = s.inverse();
    s = s * Scalar::sqrt_q_power(r.uniform(-3, 3));
    if (r.chance(1, 6)) s = -s;
    return s;
}

inline Character random_character(Rng& r, const TrialProfile& p, bool allow_ramified = true) {
    Scalar s = random_satake(r, p);
    if (allow_ramified && r.chance(1, 5)) return Character::ramified("eta" + std::to_string(r.uniform(1, 2)), s);
    return Character::unramified(s);
}

/// At most block_budget blocks, n <= max_n; characters over the symbol
/// pool with half-integer |.|-twists, plus 2-dimensional irreducibles when
/// allowed.
inline WDRep random_rep(const TrialProfile& p) {
    if (p.block_budget < 1) throw DomainError("random_rep needs block_budget >= 1");
    Rng r(p.seed);
    std::vector<Block> blocks;
    for (int k = r.uniform(1, p.block_budget); k > 0; --k) {
        WeilPart part = random_character(r, p);
        if (p.allow_irred && r.chance(1, 4))
            part = IrredPart::make(2, "rho" + std::to_string(r.uniform(1, 3)), random_character(r, p));
        blocks.push_back({part, r.uniform(0, p.max_n)});
    }
    return WDRep(std::move(blocks));
}

/// A 4-dimensional parameter with similitude mu^2, assembled from pieces
/// that are each closed under dual-twist.
inline Gsp4Param random_gsp4(Rng& r, const TrialProfile& p) {
    const Character mu = random_character(r, p);
    const Character psi = mu.pow(2);
    int labels = 0;
    auto label = [&] { return "rho" + std::to_string(++labels); };
    auto self_char = [&] { return r.chance(1, 3) ? mu * Character::unramified(-1) : mu; };
    auto line_pair = [&](int n) {
        Character a = random_character(r, p);
        return WDRep::block(a, n) + WDRep::block(psi / a, n);
    };
    auto two = [&]() -> WDRep {
        switch (r.uniform(0, p.allow_irred ? 2 : 1)) {
            case 0: return line_pair(0);
            case 1: return WDRep::block(self_char(), 1);
            default: return WDRep::block(IrredPart::make(2, label(), psi));
        }
    };
    auto four = [&]() -> WDRep {
        switch (r.uniform(0, p.allow_irred ? 3 : 1)) {
            case 0: return line_pair(1);
            case 1: return WDRep::block(self_char(), 3);
            case 2: return WDRep::block(IrredPart::make(2, label(), psi), 1);
            default: {
                IrredPart rho = IrredPart::make(2, label(), random_character(r, p));
                return WDRep::block(rho) + WDRep::block(rho.dualized().twisted(psi));
            }
        }
    };
    WDRep rep = r.chance(1, 2) ? four() : two() + two();
    return gsp4_free(rep, psi);
}

inline Gl2Param principal_series_any(const Character& a, const Character& b) {
    try {
        return gl2_principal_series(a, b);
    } catch (const TypeConstraintViolation&) {
        return gl2_principal_series(a, b, true);
    }
}

/// Non-supercuspidal sigma, biased so that exceptional poles against pi occur.
inline Gl2Param random_sigma(Rng& r, const TrialProfile& p, const Gsp4Param& pi) {
    const Character x1 = random_character(r, p);
    if (r.chance(1, 2)) return gl2_steinberg(x1);
    std::vector<Character> lines;
    for (const auto& b : pi.rep.blocks())
        if (const auto* c = std::get_if<Character>(&b.part); c && b.n == 0) lines.push_back(*c);
    if (!lines.empty() && r.chance(1, 2)) {
        const Character& l = lines[static_cast<std::size_t>(r.uniform(0, static_cast<int>(lines.size()) - 1))];
        return principal_series_any(x1, x1 * l.pow(2) / pi.similitude);
    }
    return principal_series_any(x1, random_character(r, p));
}

struct CheckReport {
    std::string name;
    int trials = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
    void merge(const CheckReport& o) {
        trials += o.trials;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

namespace detail {

inline void collect_symbols(const Scalar& s, std::set<std::string>& out) {
    auto syms = s.symbols();
    out.insert(syms.begin(), syms.end());
}

/// Values agree after specializing all symbols and X to random rationals;
/// points hitting a zero denominator are redrawn.
inline bool numeric_agree(const SplitRational& f, const SplitRational& g, Rng& r) {
    std::set<std::string> syms{kSqrtQ};
    for (const auto* h : {&f, &g}) {
        collect_symbols(h->unit(), syms);
        for (const auto& fac : h->factors()) collect_symbols(fac.beta, syms);
    }
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::map<std::string, Rational> at;
        for (const auto& s : syms) at[s] = r.rational();
        const Rational x = r.rational();
        try {
            return f.evaluate(at, x) == g.evaluate(at, x);
        } catch (const DivisionByZero&) {
        }
    }
    return false;
}

struct Checker {
    CheckReport& report;
    std::string context;
    bool numeric = false;
    Rng* rng = nullptr;

    void fail(const std::string& what) { report.failures.push_back(context + ": " + what); }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void equal(const std::string& what, const SplitRational& lhs, const SplitRational& rhs) {
        if (!(lhs == rhs)) {
            fail(what + ": " + to_text(lhs) + " != " + to_text(rhs));
        } else if (numeric && rng && !numeric_agree(lhs, rhs, *rng)) {
            fail(what + " (numeric): " + to_text(lhs) + " vs " + to_text(rhs));
        }
    }
};

inline SplitRational blocks_lfactor(const WDRep& w, int n) {
    SplitRational r;
    for (const auto& b : w.blocks())
        if (b.n == n) r = r * b.lfactor();
    return r;
}

inline bool only_simple_poles(const SplitRational& f) {
    return std::all_of(f.factors().begin(), f.factors().end(), [](const Factor& x) { return x.exponent == -1; });
}

inline bool integral(const SplitRational& f) {
    return f.unit().is_one() && f.xpower() == 0 &&
           std::all_of(f.factors().begin(), f.factors().end(), [](const Factor& x) { return x.exponent >= 0; });
}

// Univariate polynomials over Q, coefficients from X^0 upward.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}
inline UPoly urem(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}
inline UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}
/// Scale so the constant term is 1 (all polynomials here have P(0) != 0).
inline UPoly unormalize(UPoly p) {
    const Rational c = p.at(0);
    for (auto& x : p) x /= c;
    return p;
}

}  // namespace detail

/// Both line-extraction identities for a character-parted rho:
///   L(rho, s) L(rho, s+1) / L(rho x sp(1), s+1/2) = prod_{n_i = 0} L(rho_i, s),
///   and the analogue one sp(1)-step up picking out the n_i = 1 blocks.
inline CheckReport check_line_ratio(const WDRep& rho, const std::string& context = "rho", bool numeric = false,
                                    Rng* rng = nullptr) {
    CheckReport rep{"lines", 1, {}};
    detail::Checker c{rep, context + " [" + to_text(rho) + "]", numeric, rng};
    if (!rho.all_characters()) {
        c.fail("parameter is not character-parted");
        return rep;
    }
    const HalfInt half = HalfInt::halves(1);
    const SplitRational l = rho.lfactor();
    const WDRep t = tensor(rho, WDRep::sp(1));
    c.equal("identity n=0", l * l.shift(HalfInt::whole(1)) / t.lfactor().shift(half), detail::blocks_lfactor(rho, 0));
    const SplitRational lt = t.lfactor();
    c.equal("identity n=1",
            lt.shift(half) * lt.shift(HalfInt::halves(3)) / tensor(t, WDRep::sp(1)).lfactor().shift(HalfInt::whole(1)),
            detail::blocks_lfactor(rho, 1));
    return rep;
}

/// L(pi x sigma) for non-supercuspidal sigma, computed twice: through the
/// tensor product, and through twists of L(pi) alone (the line-extraction
/// identity for Steinberg twists, the product of twists for principal series).
inline CheckReport check_steinberg_factor(const Gsp4Param& pi, const Gl2Param& sigma,
                                          const std::string& context = "pi", bool numeric = false,
                                          Rng* rng = nullptr) {
    CheckReport rep{"steinberg", 1, {}};
    detail::Checker c{rep, context + " [" + to_text(pi) + " ; " + to_text(sigma) + "]", numeric, rng};
    if (sigma.is_supercuspidal()) {
        c.fail("sigma must be non-supercuspidal");
        return rep;
    }
    const SplitRational via_tensor = nov_lfactor(pi, sigma);
    SplitRational via_twists;
    if (sigma.kind == Gl2Kind::principal_series) {
        for (const auto& b : sigma.rep.blocks()) via_twists = via_twists * pi.rep.twist(std::get<Character>(b.part)).lfactor();
    } else {
        const WDRep w = pi.rep.twist(std::get<Character>(sigma.rep.blocks()[0].part));
        const SplitRational l = w.lfactor();
        via_twists = (l * l.shift(HalfInt::whole(1)) / detail::blocks_lfactor(w, 0)).shift(HalfInt::halves(-1));
    }
    c.equal("two routes", via_tensor, via_twists);

    const bool st = sigma.kind == Gl2Kind::steinberg_twist && sigma.central.is_trivial() &&
                    std::get<Character>(sigma.rep.blocks()[0].part).is_trivial();
    if (st && (pi.st_type == StType::IIIa || pi.st_type == StType::IVa)) {
        const SplitRational l = pi.rep.lfactor();
        c.equal("L(pi x St, s+1/2) = L(pi, s) L(pi, s+1)", via_tensor.shift(HalfInt::halves(1)),
                l * l.shift(HalfInt::whole(1)));
        c.expect(subregular_poles(pi).entries.empty(), "subregular report must be empty");
    }
    if (st && pi.st_type == StType::SC) c.expect(via_tensor.is_one(), "L(pi x St) must be 1, got " + to_text(via_tensor));
    return rep;
}

/// Tensor-route L(pi x PS(chi1, chi2)) against L(pi x chi1) L(pi x chi2).
inline CheckReport check_ps_product(const Gsp4Param& pi, const Gl2Param& sigma, const std::string& context = "pi",
                                    bool numeric = false, Rng* rng = nullptr) {
    CheckReport rep{"ps", 1, {}};
    detail::Checker c{rep, context + " [" + to_text(pi) + " ; " + to_text(sigma) + "]", numeric, rng};
    if (sigma.kind != Gl2Kind::principal_series) {
        c.fail("sigma must be a principal series");
        return rep;
    }
    SplitRational prod;
    for (const auto& b : sigma.rep.blocks()) prod = prod * pi.rep.twist(std::get<Character>(b.part)).lfactor();
    c.equal("product of twists", tensor(pi.rep, sigma.rep).lfactor(), prod);
    return rep;
}

/// L(theta(tau1, tau2) x sigma) = L(tau1 x sigma) L(tau2 x sigma).
inline CheckReport check_theta_product(const Gl2Param& tau1, const Gl2Param& tau2, const Gl2Param& sigma,
                                       const std::string& context = "theta", bool numeric = false,
                                       Rng* rng = nullptr) {
    CheckReport rep{"theta", 1, {}};
    detail::Checker c{rep, context + " [" + to_text(tau1) + " ; " + to_text(tau2) + " ; " + to_text(sigma) + "]",
                      numeric, rng};
    const Gsp4Param pi = theta_lift(tau1, tau2);
    c.equal("product formula", nov_lfactor(pi, sigma), rs_lfactor(tau1, sigma) * rs_lfactor(tau2, sigma));
    return rep;
}

/// ideal_generator against a gcd over Q after specializing every symbol.
inline CheckReport check_ideal_oracle(const std::vector<SplitRational>& fs, Rng& r,
                                      const std::string& context = "ideal") {
    CheckReport rep{"ideal", 1, {}};
    std::string inputs;
    for (const auto& f : fs) inputs += (inputs.empty() ? "" : " ; ") + to_text(f);
    detail::Checker c{rep, context + " [" + inputs + "]"};

    const IdealGen g = ideal_generator(fs);
    std::vector<Scalar> roots;
    std::set<std::string> syms{kSqrtQ};
    for (const auto& f : fs)
        for (const auto& fac : f.factors()) {
            if (std::none_of(roots.begin(), roots.end(), [&](const Scalar& x) { return x == fac.beta; }))
                roots.push_back(fac.beta);
            detail::collect_symbols(fac.beta, syms);
        }
    auto order = [](const SplitRational& f, const Scalar& b) { return f.vanishing_order(b); };

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::map<std::string, Rational> at;
        for (const auto& s : syms) at[s] = r.rational();
        std::vector<Rational> vals;
        try {
            for (const auto& b : roots) vals.push_back(b.evaluate(at));
        } catch (const DivisionByZero&) {
            continue;
        }
        std::set<Rational> distinct(vals.begin(), vals.end());
        if (distinct.size() != vals.size() || distinct.count(Rational(0))) continue;  // collision: redraw

        // D clears every denominator; P_i = D f_i up to Laurent units.
        std::vector<int> depth(roots.size(), 0);
        for (std::size_t k = 0; k < roots.size(); ++k)
            for (const auto& f : fs) depth[k] = std::max(depth[k], -order(f, roots[k]));
        auto expand = [&](const SplitRational& f) {
            detail::UPoly p{Rational(1)};
            for (std::size_t k = 0; k < roots.size(); ++k)
                for (int e = depth[k] + order(f, roots[k]); e > 0; --e) p = detail::umul(p, {Rational(1), -vals[k]});
            return p;
        };
        detail::UPoly gcd_all;
        for (const auto& f : fs) gcd_all = detail::ugcd(gcd_all, expand(f));
        const detail::UPoly oracle = detail::unormalize(gcd_all);
        const detail::UPoly engine = expand(g.generator);
        c.expect(oracle == engine, "generator " + to_text(g.generator) + " disagrees with the specialized gcd");
        const bool all_l = std::all_of(fs.begin(), fs.end(), [](const SplitRational& f) { return f.is_lfactor(); });
        c.expect(!all_l || g.is_lfactor, "inputs are L-factors but the generator is not");
        for (const auto& f : fs)
            for (const auto& b : roots)
                c.expect(order(f, b) >= order(g.generator, b), "generator does not divide an input");
        return rep;
    }
    c.fail("could not find a collision-free specialization");
    return rep;
}

/// exceptional_poles against direct enumeration: poles of
/// L(W) L(W, s+1) / L(W x sp(1), s+1/2), W = phi_pi (x) phi_sigma, cut by the
/// central-character condition.  Also checks both factorizations.
inline CheckReport check_pole_oracle(const Gsp4Param& pi, const Gl2Param& sigma, const std::string& context = "pi") {
    CheckReport rep{"poles", 1, {}};
    detail::Checker c{rep, context + " [" + to_text(pi) + " ; " + to_text(sigma) + "]"};
    const WDRep w = tensor(pi.rep, sigma.rep);
    const SplitRational l = w.lfactor();
    const SplitRational ratio =
        l * l.shift(HalfInt::whole(1)) / tensor(w, WDRep::sp(1)).lfactor().shift(HalfInt::halves(1));
    const Character chi = pi.similitude * sigma.central;
    std::vector<Scalar> expected;
    for (const auto& b : ratio.pole_roots())
        if (chi.is_unramified() && chi.satake == b.pow(2)) expected.push_back(b);
    const std::vector<Scalar> got = exceptional_poles(pi, sigma).roots();
    c.expect(got == expected, "exceptional roots differ from direct enumeration");
    return rep;
}

/// nov_split and ps_split recompose to their parent L-factors, with simple
/// exceptional and subregular parts; J and K are integral with K in (J).
inline CheckReport check_split_invariants(const Gsp4Param& pi, const Gl2Param& sigma,
                                          const std::string& context = "pi") {
    CheckReport rep{"splits", 1, {}};
    detail::Checker c{rep, context + " [" + to_text(pi) + " ; " + to_text(sigma) + "]"};
    const NovSplit ns = nov_split(pi, sigma);
    c.equal("nov_split recomposes", ns.regular * ns.exceptional, nov_lfactor(pi, sigma));
    c.expect(ns.regular.is_lfactor() && ns.exceptional.is_lfactor(), "nov_split parts must be L-factors");
    c.expect(detail::only_simple_poles(ns.exceptional), "L_ex must have simple poles");
    const PsSplit ps = ps_split(pi);
    c.equal("ps_split recomposes", ps.exceptional * ps.subregular * ps.kirillov, pi.rep.lfactor());
    c.expect(ps.exceptional.is_one(), "L_ex of L(pi, s) must be 1");
    c.expect(ps.kirillov.is_lfactor() && detail::only_simple_poles(ps.subregular), "ps_split shape");
    const IdealsJK jk = ideals_JK(pi);
    c.expect(detail::integral(jk.J) && detail::integral(jk.K), "J and K must be integral");
    c.expect(detail::integral(jk.K / jk.J), "K must lie in the ideal generated by J");
    return rep;
}

/// exceptional/subregular consistency on one shape: vanishing of K marks
/// exactly the subregular roots, and J, K are integral.
inline CheckReport check_subregular_vanishing(const Gsp4Param& pi, const std::string& context = "pi") {
    CheckReport rep{"vanishing", 1, {}};
    detail::Checker c{rep, context + " [" + to_text(pi) + "]"};
    const IdealsJK jk = ideals_JK(pi);
    const PoleReport sub = subregular_poles(pi);
    c.expect(detail::integral(jk.J) && detail::integral(jk.K), "J and K must be integral");
    for (const auto& f : jk.K.factors())
        c.expect((f.exponent > 0) == sub.contains(f.beta), "K vanishes at " + to_text(f.beta) +
                                                                " but the root is not subregular");
    for (const auto& e : sub.entries)
        c.expect(jk.K.vanishing_order(e.root) > 0, "subregular root " + to_text(e.root) + " is not a zero of K");
    return rep;
}

struct SuiteOptions {
    int trials = 100;
    std::uint64_t seed = 1;
    bool numeric = false;
};

inline std::vector<std::string> suite_names() { return {"lines", "steinberg", "ps", "theta", "ideal", "poles", "vanishing", "splits"}; }

namespace detail {

inline std::string trial_context(const SuiteOptions& o, int i) {
    return "seed " + std::to_string(o.seed) + " trial " + std::to_string(i);
}

template <class Body>
CheckReport run_trials(const std::string& name, const SuiteOptions& o, Body&& body) {
    CheckReport rep{name, 0, {}};
    for (int i = 0; i < o.trials; ++i) {
        Rng r(trial_seed(o.seed, i));
        const std::string ctx = trial_context(o, i);
        try {
            rep.merge(body(r, ctx));
        } catch (const Error& e) {
            rep.trials += 1;
            rep.failures.push_back(ctx + ": " + e.code() + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace detail

inline CheckReport run_lines(const SuiteOptions& o) {
    CheckReport rep = detail::run_trials("lines", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        p.seed = r.uniform(0, 1 << 30);
        return check_line_ratio(random_rep(p), ctx, o.numeric, &r);
    });
    // worked example: unr(a) + unr(b) x sp(1) gives 1/(1 - a X)
    const Scalar a = Scalar::symbol("a"), b = Scalar::symbol("b");
    const WDRep rho = WDRep::block(Character::unramified(a)) + WDRep::block(Character::unramified(b), 1);
    const SplitRational l = rho.lfactor();
    detail::Checker c{rep, "worked example"};
    c.equal("ratio", l * l.shift(HalfInt::whole(1)) / tensor(rho, WDRep::sp(1)).lfactor().shift(HalfInt::halves(1)),
            SplitRational::euler(a));
    rep.merge(check_line_ratio(rho, "worked example"));
    return rep;
}

inline CheckReport run_steinberg(const SuiteOptions& o) {
    const Character a = Character::unramified(Scalar::symbol("a")), b = Character::unramified(Scalar::symbol("b"));
    const IrredPart l2 = IrredPart::make(2, "l2", Character::trivial());
    const IrredPart l2p = IrredPart::make(2, "l2p", Character::trivial());
    CheckReport rep{"steinberg", 0, {}};
    int k = 0;
    for (const auto& pi : {gsp4_IVa(a), gsp4_IIIa(a, b), gsp4_SC("l4"), gsp4_SC(l2, l2p)})
        rep.merge(check_steinberg_factor(pi, gl2_steinberg(), "fixed shape " + std::to_string(k++), o.numeric));
    rep.merge(detail::run_trials("steinberg", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        p.allow_irred = true;
        const Gsp4Param pi = random_gsp4(r, p);
        return check_steinberg_factor(pi, random_sigma(r, p, pi), ctx, o.numeric, &r);
    }));
    return rep;
}

inline CheckReport run_ps(const SuiteOptions& o) {
    return detail::run_trials("ps", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        p.allow_irred = true;
        const Gsp4Param pi = random_gsp4(r, p);
        const Gl2Param sigma = principal_series_any(random_character(r, p), random_character(r, p));
        return check_ps_product(pi, sigma, ctx, o.numeric, &r);
    });
}

inline Gl2Param random_gl2_with_central(Rng& r, const TrialProfile& p, const Character& mu, const std::string& label) {
    const Character omega = mu.pow(2);
    switch (r.uniform(0, 2)) {
        case 0: {
            const Character x = random_character(r, p);
            return principal_series_any(x, omega / x);
        }
        case 1: return gl2_steinberg(r.chance(1, 3) ? mu * Character::unramified(-1) : mu);
        default: return gl2_supercuspidal(label, omega);
    }
}

inline CheckReport run_theta(const SuiteOptions& o) {
    return detail::run_trials("theta", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        const Character mu = random_character(r, p);
        const Gl2Param t1 = random_gl2_with_central(r, p, mu, "tau1");
        const Gl2Param t2 = random_gl2_with_central(r, p, mu, "tau2");
        const Gl2Param sigma = random_gl2_with_central(r, p, random_character(r, p), "sigma");
        return check_theta_product(t1, t2, sigma, ctx, o.numeric, &r);
    });
}

inline CheckReport run_ideal(const SuiteOptions& o) {
    return detail::run_trials("ideal", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        std::vector<Scalar> pool;
        for (int k = r.uniform(2, 5); k > 0; --k) {
            Scalar s = random_satake(r, p);
            if (r.chance(1, 4)) s = s + random_satake(r, p);
            if (s.is_zero()) s = Scalar(2);
            pool.push_back(s);
        }
        std::vector<SplitRational> fs;
        for (int k = r.uniform(1, 4); k > 0; --k) {
            SplitRational f = SplitRational::constant(r.rational()) * SplitRational::x_power(r.uniform(-2, 2));
            for (const auto& s : pool)
                if (r.chance(1, 2)) {
                    int e = 0;
                    while (e == 0) e = r.uniform(-3, 3);
                    f = f * SplitRational::linear(s, e);
                }
            fs.push_back(f);
        }
        return check_ideal_oracle(fs, r, ctx);
    });
}

inline CheckReport run_poles(const SuiteOptions& o) {
    return detail::run_trials("poles", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        p.allow_irred = true;
        const Gsp4Param pi = random_gsp4(r, p);
        Gl2Param sigma = random_sigma(r, p, pi);
        if (pi.rep.all_characters() && r.chance(1, 4)) sigma = gl2_supercuspidal("sigma", random_character(r, p));
        return check_pole_oracle(pi, sigma, ctx);
    });
}

inline CheckReport run_splits(const SuiteOptions& o) {
    return detail::run_trials("splits", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        p.allow_irred = true;
        const Gsp4Param pi = random_gsp4(r, p);
        return check_split_invariants(pi, random_sigma(r, p, pi), ctx);
    });
}

/// One instance of every catalog shape with seeded random data.
inline std::vector<Gsp4Param> catalog_shapes(Rng& r, const TrialProfile& p) {
    auto chr = [&] { return random_character(r, p); };
    auto irr = [&](const std::string& label, const Character& det) { return IrredPart::make(2, label, det); };
    const Character c1 = chr(), c2 = chr(), s = chr();
    Character c3 = chr();
    if (c3 == c1) c3 = c1 * Character::unramified(Scalar::symbol("z"));
    Character nontriv = chr();
    if (nontriv.is_trivial()) nontriv = Character::unramified(Scalar::symbol("z"));
    const IrredPart rho = irr("rho", chr());
    return {
        gsp4_I(c1, c2, s),
        gsp4_catalog("IIa", {c1, s}),
        gsp4_IIIa(c1, c3),
        gsp4_IVa(c1),
        gsp4_catalog("Va", {Character::unramified(-1), s}),
        gsp4_catalog("VIa", {s}),
        gsp4_VII(nontriv, rho),
        gsp4_VIIIa(rho),
        gsp4_IXa(rho),
        gsp4_catalog("X", {rho, s}),
        gsp4_catalog("XIa", {irr("rho", Character::trivial()), s}),
        gsp4_SC("l4", s),
        gsp4_SC(irr("l2", c2), irr("l2p", c2)),
    };
}

/// The K-vanishing criterion on every catalog shape with a nontrivial L-factor.
inline CheckReport run_vanishing(const SuiteOptions& o) {
    return detail::run_trials("vanishing", o, [&](Rng& r, const std::string& ctx) {
        TrialProfile p;
        p.allow_irred = true;
        CheckReport rep{"vanishing", 0, {}};
        for (const auto& pi : catalog_shapes(r, p))
            if (!pi.rep.lfactor().is_one()) rep.merge(check_subregular_vanishing(pi, ctx));
        return rep;
    });
}

/// Run one named suite, or "all".
inline CheckReport run_suite(const std::string& name, const SuiteOptions& o) {
    if (name == "lines") return run_lines(o);
    if (name == "steinberg") return run_steinberg(o);
    if (name == "ps") return run_ps(o);
    if (name == "theta") return run_theta(o);
    if (name == "ideal") return run_ideal(o);
    if (name == "poles") return run_poles(o);
    if (name == "splits") return run_splits(o);
    if (name == "vanishing") return run_vanishing(o);
    if (name == "all") {
        CheckReport all{"all", 0, {}};
        for (const auto& n : suite_names()) all.merge(run_suite(n, o));
        return all;
    }
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace lfac::verify
