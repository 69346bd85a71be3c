#pragma once

// Pole classification for GSp(4) and GSp(4) x GL(2) L-factors.
//
// A pole s0 is recorded by its reciprocal root beta = q^{s0}: the factor
// 1/(1 - beta X) has its pole there.  A character condition such as
// chi |.|^{2 s0 + 1} = 1 becomes "chi unramified and chi(varpi) = v^2 beta^2".
// Symbols are in generic position: "not identically equal" counts as unequal.

#include <optional>
#include <utility>
#include <vector>

#include "catalog.hpp"

namespace lfac {

enum class PoleClass { exceptional, subregular_case1, subregular_case2, regular };

inline const char* to_string(PoleClass c) {
    switch (c) {
        case PoleClass::exceptional: return "exceptional";
        case PoleClass::subregular_case1: return "subregular1";
        case PoleClass::subregular_case2: return "subregular2";
        case PoleClass::regular: return "regular";
    }
    return "?";
}
inline std::optional<PoleClass> pole_class_from_string(const std::string& s) {
    for (auto c : {PoleClass::exceptional, PoleClass::subregular_case1, PoleClass::subregular_case2,
                   PoleClass::regular})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

struct PoleEntry {
    Scalar root;
    PoleClass classification = PoleClass::regular;
    /// Summands responsible for the pole; repeated summands stay listed here
    /// while the pole itself is counted once.
    WDRep witness;
    /// Split Bessel character (lambda1, lambda2) for subregular poles.
    std::optional<std::pair<Character, Character>> bessel;

    friend bool operator==(const PoleEntry& a, const PoleEntry& b) {
        if (!(a.root == b.root) || a.classification != b.classification || !(a.witness == b.witness)) return false;
        if (a.bessel.has_value() != b.bessel.has_value()) return false;
        return !a.bessel || (a.bessel->first == b.bessel->first && a.bessel->second == b.bessel->second);
    }
};

struct PoleReport {
    std::vector<PoleEntry> entries;

    std::vector<Scalar> roots() const {
        std::vector<Scalar> r;
        for (const auto& e : entries) r.push_back(e.root);
        return r;
    }
    bool contains(const Scalar& root) const {
        for (const auto& e : entries)
            if (e.root == root) return true;
        return false;
    }
    /// Canonical order: by root, then classification.
    void normalize() {
        std::stable_sort(entries.begin(), entries.end(), [](const PoleEntry& a, const PoleEntry& b) {
            if (int c = Scalar::compare(a.root, b.root)) return c < 0;
            return a.classification < b.classification;
        });
    }
    friend bool operator==(const PoleReport&, const PoleReport&) = default;
};

namespace detail {

/// chi |.|^{2 s0 + shift} = 1 at q^{s0} = beta, with shift in {0, 1}.
inline bool central_condition(const Character& chi, const Scalar& beta, int shift) {
    return chi.is_unramified() && chi.satake == beta.pow(2) * Scalar::sqrt_q_power(2 * shift);
}

/// Blocks unr(alpha) (x) sp(n), grouped by alpha in canonical order.
inline std::vector<std::pair<Scalar, std::vector<Block>>> group_summands(const WDRep& w, int n) {
    std::vector<std::pair<Scalar, std::vector<Block>>> out;
    for (const auto& b : w.blocks()) {
        const auto* c = std::get_if<Character>(&b.part);
        if (!c || !c->is_unramified() || b.n != n) continue;
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& g) { return g.first == c->satake; });
        if (it == out.end())
            out.push_back({c->satake, {b}});
        else
            it->second.push_back(b);
    }
    return out;
}

/// Lambda = (|.|^{-1/2 - s0}, chi_pi |.|^{1/2 + s0}).
inline std::pair<Character, Character> distinguished_bessel(const Character& chi_pi, const Scalar& beta) {
    const Scalar w = beta * Scalar::sqrt_q_power(1);
    return {Character::unramified(w), chi_pi * Character::unramified(w.inverse())};
}

}  // namespace detail

/// Exceptional poles of L(pi x sigma): a root alpha qualifies iff
/// unr(alpha) (x) sp(0) is a summand of phi_pi (x) phi_sigma and
/// chi_pi chi_sigma |.|^{2 s0} = 1.
inline PoleReport exceptional_poles(const Gsp4Param& pi, const Gl2Param& sigma) {
    const WDRep w = tensor(pi.rep, sigma.rep);
    const Character chi = pi.similitude * sigma.central;
    PoleReport r;
    for (auto& [alpha, blocks] : detail::group_summands(w, 0))
        if (detail::central_condition(chi, alpha, 0))
            r.entries.push_back({alpha, PoleClass::exceptional, WDRep(blocks), std::nullopt});
    r.normalize();
    return r;
}

struct NovSplit {
    SplitRational regular;
    SplitRational exceptional;
};

/// L = L_reg * L_ex with L_ex carrying each exceptional pole once.
inline NovSplit nov_split(const Gsp4Param& pi, const Gl2Param& sigma) {
    const SplitRational full = nov_lfactor(pi, sigma);
    SplitRational ex;
    for (const auto& e : exceptional_poles(pi, sigma).entries) ex = ex * SplitRational::euler(e.root);
    return {full / ex, ex};
}

/// Subregular poles of L(pi, s) for the distinguished split Bessel character.
///
/// Case 1: unr(beta) is a line of phi_pi and chi_pi |.|^{2 s0 + 1} != 1.
/// Case 2: chi_pi |.|^{2 s0 + 1} = 1 and unr(beta v) (x) sp(1) is a summand.
inline PoleReport subregular_poles(const Gsp4Param& pi) {
    const Character& chi = pi.similitude;
    PoleReport r;
    for (auto& [beta, blocks] : detail::group_summands(pi.rep, 0))
        if (!detail::central_condition(chi, beta, 1))
            r.entries.push_back({beta, PoleClass::subregular_case1, WDRep(blocks),
                                 detail::distinguished_bessel(chi, beta)});
    for (auto& [gamma, blocks] : detail::group_summands(pi.rep, 1)) {
        const Scalar beta = gamma * Scalar::sqrt_q_power(-1);
        if (detail::central_condition(chi, beta, 1))
            r.entries.push_back({beta, PoleClass::subregular_case2, WDRep(blocks),
                                 detail::distinguished_bessel(chi, beta)});
    }
    r.normalize();
    return r;
}

struct PsSplit {
    SplitRational exceptional;  // identically 1 for generic pi
    SplitRational subregular;
    SplitRational kirillov;
};

/// L(pi, s) = L_ex * L_sub * L_Kir with L_ex = 1 and simple subregular poles.
inline PsSplit ps_split(const Gsp4Param& pi) {
    SplitRational sub;
    for (const auto& e : subregular_poles(pi).entries) sub = sub * SplitRational::euler(e.root);
    return {SplitRational{}, sub, pi.rep.lfactor() / sub};
}

/// Predicted dim Hom_H(pi (x) (|.|^{s0} [x] sigma), C) at q^{s0} = root.
inline int hom_dim(const Gsp4Param& pi, const Gl2Param& sigma, const Scalar& root) {
    return exceptional_poles(pi, sigma).contains(root) ? 1 : 0;
}

struct IdealsJK {
    SplitRational J;
    SplitRational K;
};

/// Generators of the integral ideals
///   J = (L(pi x St, s + 1/2) / (L(pi, s) L(pi, s + 1))),
///   K = (L_reg(pi x St, s + 1/2) / (L(pi, s) L(pi, s + 1))).
inline IdealsJK ideals_JK(const Gsp4Param& pi) {
    const Gl2Param st = gl2_steinberg();
    const SplitRational l = pi.rep.lfactor();
    const SplitRational denom = l * l.shift(HalfInt::whole(1));
    const NovSplit split = nov_split(pi, st);
    const HalfInt half = HalfInt::halves(1);
    return {(split.regular * split.exceptional).shift(half) / denom, split.regular.shift(half) / denom};
}

/// Substitute symbols in a parameter (the specialization hook); the
/// similitude condition is re-checked on the result.
inline Gsp4Param specialize(const Gsp4Param& pi, const std::map<std::string, Scalar>& values) {
    return detail::checked_gsp4(pi.rep.substitute(values), pi.similitude.substitute(values), StType::FREE,
                                pi.annotation);
}
inline Gl2Param specialize(const Gl2Param& tau, const std::map<std::string, Scalar>& values) {
    Gl2Param t = tau;
    t.rep = tau.rep.substitute(values);
    t.central = tau.central.substitute(values);
    return t;
}

}  // namespace lfac
