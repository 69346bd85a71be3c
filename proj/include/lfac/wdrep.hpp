#pragma once

// Weil-Deligne representations as multisets of blocks rho (x) sp(n).
//
// sp(n) is normalized with Frobenius eigenvalues q^{-n/2}, ..., q^{n/2}, so
// L(unr(alpha) (x) sp(n), s) = 1/(1 - alpha v^{-n} X).

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "character.hpp"
#include "split_rational.hpp"

namespace lfac {

/// Formal irreducible Weil representation of dimension >= 2, tracked as
/// (base representation, optional dual flag, accumulated character twist).
///
/// When a similitude character psi is known (always for dim 2, where
/// psi = det), the dual is rho (x) psi^{-1} and stays on the same label;
/// otherwise the dual flips `dual` and is a different representation.
struct IrredPart {
    int dim = 2;
    std::string label;
    bool dual = false;
    Character base_det;
    std::optional<Character> base_sim;
    Character twist;

    static IrredPart make(int dim, const std::string& label, const Character& det) {
        if (dim < 2) throw DomainError("an irreducible part needs dimension >= 2");
        if (label.empty()) throw DomainError("an irreducible part needs a label");
        IrredPart p;
        p.dim = dim;
        p.label = label;
        p.base_det = det;
        if (dim == 2) p.base_sim = det;
        return p;
    }
    /// Symplectic-type irreducible with rho^vee = rho (x) sim^{-1}; det = sim^{dim/2}.
    static IrredPart make_with_similitude(int dim, const std::string& label, const Character& sim) {
        if (dim % 2 != 0) throw DomainError("a similitude declaration needs even dimension");
        IrredPart p = make(dim, label, sim.pow(dim / 2));
        p.base_sim = sim;
        return p;
    }

    Character det() const { return (dual ? base_det.inverse() : base_det) * twist.pow(dim); }
    std::optional<Character> similitude() const {
        if (!base_sim) return std::nullopt;
        return *base_sim * twist.pow(2);
    }

    IrredPart twisted(const Character& chi) const {
        IrredPart p = *this;
        p.twist = twist * chi;
        return p;
    }
    IrredPart dualized() const {
        IrredPart p = *this;
        if (base_sim) {
            p.twist = twist.inverse() * base_sim->inverse();
        } else {
            p.dual = !dual;
            p.twist = twist.inverse();
        }
        return p;
    }
    /// Same underlying representation up to an unramified character twist.
    bool is_unramified_twist_of(const IrredPart& o) const {
        return dim == o.dim && label == o.label && dual == o.dual && base_det == o.base_det &&
               base_sim == o.base_sim && (twist / o.twist).is_unramified();
    }

    friend bool operator==(const IrredPart&, const IrredPart&) = default;
    static int compare(const IrredPart& a, const IrredPart& b) {
        if (a.label != b.label) return a.label < b.label ? -1 : 1;
        if (a.dual != b.dual) return a.dual ? 1 : -1;
        if (a.dim != b.dim) return a.dim < b.dim ? -1 : 1;
        if (int c = Character::compare(a.base_det, b.base_det)) return c;
        if (a.base_sim.has_value() != b.base_sim.has_value()) return a.base_sim ? 1 : -1;
        if (a.base_sim)
            if (int c = Character::compare(*a.base_sim, *b.base_sim)) return c;
        return Character::compare(a.twist, b.twist);
    }
};

using WeilPart = std::variant<Character, IrredPart>;

inline int part_dim(const WeilPart& p) {
    return std::holds_alternative<Character>(p) ? 1 : std::get<IrredPart>(p).dim;
}
inline WeilPart part_dual(const WeilPart& p) {
    if (auto* c = std::get_if<Character>(&p)) return c->inverse();
    return std::get<IrredPart>(p).dualized();
}
inline WeilPart part_twist(const WeilPart& p, const Character& chi) {
    if (auto* c = std::get_if<Character>(&p)) return *c * chi;
    return std::get<IrredPart>(p).twisted(chi);
}
/// Characters sort before irreducibles.
inline int part_compare(const WeilPart& a, const WeilPart& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (auto* c = std::get_if<Character>(&a)) return Character::compare(*c, std::get<Character>(b));
    return IrredPart::compare(std::get<IrredPart>(a), std::get<IrredPart>(b));
}

struct Block {
    WeilPart part;
    int n = 0;

    int dim() const { return (n + 1) * part_dim(part); }
    /// The block's own L-factor: 1/(1 - alpha v^{-n} X) for unramified
    /// characters, 1 otherwise.
    SplitRational lfactor() const {
        const auto* c = std::get_if<Character>(&part);
        if (!c || !c->is_unramified()) return {};
        return SplitRational::euler(c->satake * Scalar::sqrt_q_power(-n));
    }
    friend bool operator==(const Block&, const Block&) = default;
    static int compare(const Block& a, const Block& b) {
        if (int c = part_compare(a.part, b.part)) return c;
        return a.n == b.n ? 0 : (a.n < b.n ? -1 : 1);
    }
};

/// Clebsch-Gordan rule sp(m) (x) sp(n) = sp(m+n) + sp(m+n-2) + ... + sp(|m-n|),
/// listed from the top.
inline std::vector<int> sp_tensor(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("sp(n) needs n >= 0");
    std::vector<int> out;
    for (int k = m + n; k >= std::abs(m - n); k -= 2) out.push_back(k);
    return out;
}

enum class SummandKind { line, steinberg };

class WDRep {
public:
    WDRep() = default;
    explicit WDRep(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (const auto& b : blocks_)
            if (b.n < 0) throw DomainError("sp(n) needs n >= 0");
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const Block& a, const Block& b) { return Block::compare(a, b) < 0; });
    }
    static WDRep block(const WeilPart& part, int n = 0) { return WDRep({Block{part, n}}); }
    /// sp(n) on the trivial character.
    static WDRep sp(int n) { return block(Character::trivial(), n); }

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    int dim() const {
        int d = 0;
        for (const auto& b : blocks_) d += b.dim();
        return d;
    }
    bool all_characters() const {
        return std::all_of(blocks_.begin(), blocks_.end(),
                           [](const Block& b) { return std::holds_alternative<Character>(b.part); });
    }

    friend WDRep operator+(const WDRep& a, const WDRep& b) {
        std::vector<Block> bs = a.blocks_;
        bs.insert(bs.end(), b.blocks_.begin(), b.blocks_.end());
        return WDRep(std::move(bs));
    }
    friend bool operator==(const WDRep&, const WDRep&) = default;

    WDRep dual() const {
        std::vector<Block> bs;
        for (const auto& b : blocks_) bs.push_back({part_dual(b.part), b.n});
        return WDRep(std::move(bs));
    }
    WDRep twist(const Character& chi) const {
        std::vector<Block> bs;
        for (const auto& b : blocks_) bs.push_back({part_twist(b.part, chi), b.n});
        return WDRep(std::move(bs));
    }
    WDRep substitute(const std::map<std::string, Scalar>& values) const;

    /// L(rho, s) = prod_i L(rho_i, s + n_i / 2).
    SplitRational lfactor() const {
        SplitRational r;
        for (const auto& b : blocks_) r = r * b.lfactor();
        return r;
    }

    /// Values alpha of blocks unr(alpha) (x) sp(0) (line) or unr(alpha) (x) sp(1)
    /// (steinberg), with multiplicity, in canonical order.
    std::vector<Scalar> summands(SummandKind kind) const {
        const int want = kind == SummandKind::line ? 0 : 1;
        std::vector<Scalar> out;
        for (const auto& b : blocks_) {
            const auto* c = std::get_if<Character>(&b.part);
            if (c && c->is_unramified() && b.n == want) out.push_back(c->satake);
        }
        return out;
    }

    /// phi ~= phi^vee (x) chi as block multisets.
    bool similitude_check(const Character& chi) const { return dual().twist(chi) == *this; }

private:
    std::vector<Block> blocks_;
};

inline WeilPart part_substitute(const WeilPart& p, const std::map<std::string, Scalar>& values) {
    if (auto* c = std::get_if<Character>(&p)) return c->substitute(values);
    IrredPart ir = std::get<IrredPart>(p);
    ir.base_det = ir.base_det.substitute(values);
    if (ir.base_sim) ir.base_sim = ir.base_sim->substitute(values);
    ir.twist = ir.twist.substitute(values);
    return ir;
}

inline WDRep WDRep::substitute(const std::map<std::string, Scalar>& values) const {
    std::vector<Block> bs;
    for (const auto& b : blocks_) bs.push_back({part_substitute(b.part, values), b.n});
    return WDRep(std::move(bs));
}

namespace detail {

inline WeilPart part_product(const WeilPart& a, const WeilPart& b) {
    const auto* ca = std::get_if<Character>(&a);
    const auto* cb = std::get_if<Character>(&b);
    if (ca && cb) return *ca * *cb;
    if (ca) return std::get<IrredPart>(b).twisted(*ca);
    if (cb) return std::get<IrredPart>(a).twisted(*cb);
    throw UnsupportedTensor("tensor product of two irreducible parts (" + std::get<IrredPart>(a).label +
                            ", " + std::get<IrredPart>(b).label + ") is not decomposed");
}

}  // namespace detail

/// Blockwise tensor product; rejects irreducible (x) irreducible pairs.
inline WDRep tensor(const WDRep& a, const WDRep& b) {
    std::vector<Block> out;
    for (const auto& x : a.blocks())
        for (const auto& y : b.blocks()) {
            WeilPart p = detail::part_product(x.part, y.part);
            for (int k : sp_tensor(x.n, y.n)) out.push_back({p, k});
        }
    return WDRep(std::move(out));
}

/// L(A (x) B, s) without materializing irreducible (x) irreducible pairs.
/// Such a pair contains an unramified line only when one side is an
/// unramified twist of the other's dual; in generic position every other
/// pair contributes 1.  The twin case is rejected.
inline SplitRational tensor_lfactor(const WDRep& a, const WDRep& b) {
    SplitRational r;
    for (const auto& x : a.blocks())
        for (const auto& y : b.blocks()) {
            const auto* ix = std::get_if<IrredPart>(&x.part);
            const auto* iy = std::get_if<IrredPart>(&y.part);
            if (ix && iy) {
                if (iy->is_unramified_twist_of(ix->dualized()))
                    throw UnsupportedTensor("irreducible part " + iy->label +
                                            " is an unramified twist of the dual of " + ix->label);
                continue;
            }
            WeilPart p = detail::part_product(x.part, y.part);
            for (int k : sp_tensor(x.n, y.n)) r = r * Block{p, k}.lfactor();
        }
    return r;
}

}  // namespace lfac
