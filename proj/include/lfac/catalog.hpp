#pragma once

// Langlands-parameter shapes for GL(2) and GSp(4), theta lifts, and the
// GSp(4) x GL(2) / GL(2) x GL(2) L-factor computations.

#include <cctype>
#include <fstream>
#include <optional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wdrep.hpp"

namespace lfac {

enum class Gl2Kind { principal_series, steinberg_twist, supercuspidal };

inline const char* to_string(Gl2Kind k) {
    switch (k) {
        case Gl2Kind::principal_series: return "principal-series";
        case Gl2Kind::steinberg_twist: return "steinberg-twist";
        case Gl2Kind::supercuspidal: return "supercuspidal";
    }
    return "?";
}

struct Gl2Param {
    WDRep rep;
    Character central;
    Gl2Kind kind = Gl2Kind::principal_series;
    /// Principal series i(chi1, chi2) with chi1/chi2 = |.|^{+-1}, accepted on request.
    bool reducible = false;

    bool is_supercuspidal() const { return kind == Gl2Kind::supercuspidal; }
};

inline Gl2Param gl2_principal_series(const Character& chi1, const Character& chi2, bool reducible = false) {
    const Character ratio = chi1 / chi2;
    const bool at_reducibility = ratio.is_unramified() &&
                                 (ratio.satake == Scalar::sqrt_q_power(-2) || ratio.satake == Scalar::sqrt_q_power(2));
    if (at_reducibility && !reducible)
        throw TypeConstraintViolation("i(chi1, chi2) with chi1/chi2 = |.|^{+-1} is reducible; pass the reducible flag");
    Gl2Param p;
    p.rep = WDRep::block(chi1) + WDRep::block(chi2);
    p.central = chi1 * chi2;
    p.kind = Gl2Kind::principal_series;
    p.reducible = at_reducibility;
    return p;
}

/// chi (x) St, with parameter chi (x) sp(1) and central character chi^2.
inline Gl2Param gl2_steinberg(const Character& chi = Character::trivial()) {
    Gl2Param p;
    p.rep = WDRep::block(chi, 1);
    p.central = chi.pow(2);
    p.kind = Gl2Kind::steinberg_twist;
    return p;
}

inline Gl2Param gl2_supercuspidal(const IrredPart& rho) {
    if (rho.dim != 2) throw DomainError("a GL(2) supercuspidal parameter is 2-dimensional");
    Gl2Param p;
    p.rep = WDRep::block(rho);
    p.central = rho.det();
    p.kind = Gl2Kind::supercuspidal;
    return p;
}
inline Gl2Param gl2_supercuspidal(const std::string& label, const Character& det) {
    return gl2_supercuspidal(IrredPart::make(2, label, det));
}

/// Generic Sally-Tadic types, SC for generic supercuspidals, FREE for any
/// 4-dimensional symplectic-similitude parameter.
enum class StType { I, IIa, IIIa, IVa, Va, VIa, VII, VIIIa, IXa, X, XIa, SC, FREE };

inline const char* to_string(StType t) {
    switch (t) {
        case StType::I: return "I";
        case StType::IIa: return "IIa";
        case StType::IIIa: return "IIIa";
        case StType::IVa: return "IVa";
        case StType::Va: return "Va";
        case StType::VIa: return "VIa";
        case StType::VII: return "VII";
        case StType::VIIIa: return "VIIIa";
        case StType::IXa: return "IXa";
        case StType::X: return "X";
        case StType::XIa: return "XIa";
        case StType::SC: return "SC";
        case StType::FREE: return "FREE";
    }
    return "?";
}
inline std::optional<StType> st_type_from_string(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(StType::FREE); ++i)
        if (s == to_string(static_cast<StType>(i))) return static_cast<StType>(i);
    return std::nullopt;
}

struct Gsp4Param {
    WDRep rep;
    Character similitude;
    StType st_type = StType::FREE;
    std::string annotation;
};

namespace detail {

inline Gsp4Param checked_gsp4(WDRep rep, const Character& sim, StType type, std::string note = {}) {
    if (rep.dim() != 4)
        throw SimilitudeViolation("a GSp(4) parameter must be 4-dimensional, got dimension " +
                                  std::to_string(rep.dim()));
    if (!rep.similitude_check(sim))
        throw SimilitudeViolation(std::string("parameter of type ") + to_string(type) +
                                  " is not isomorphic to its dual twisted by the similitude character");
    return {std::move(rep), sim, type, std::move(note)};
}

inline const IrredPart& require_dim2(const IrredPart& rho, const char* who) {
    if (rho.dim != 2) throw TypeConstraintViolation(std::string(who) + " needs a 2-dimensional irreducible");
    return rho;
}

}  // namespace detail

/// Four lines chi1, chi2, sim/chi1, sim/chi2 with similitude sim.
inline Gsp4Param gsp4_I(const Character& chi1, const Character& chi2, const Character& sim) {
    return detail::checked_gsp4(WDRep::block(chi1) + WDRep::block(chi2) + WDRep::block(sim / chi1) +
                                    WDRep::block(sim / chi2),
                                sim, StType::I);
}

/// chi1 (x) sp(1) + chi2 (x) sp(1), chi1 != chi2, similitude chi1 chi2.
inline Gsp4Param gsp4_IIIa(const Character& chi1, const Character& chi2) {
    if (chi1 == chi2) throw TypeConstraintViolation("type IIIa needs two distinct characters");
    return detail::checked_gsp4(WDRep::block(chi1, 1) + WDRep::block(chi2, 1), chi1 * chi2, StType::IIIa);
}

/// chi (x) sp(3), similitude chi^2.
inline Gsp4Param gsp4_IVa(const Character& chi) {
    return detail::checked_gsp4(WDRep::block(chi, 3), chi.pow(2), StType::IVa);
}

/// rho + chi rho, similitude chi det(rho).
inline Gsp4Param gsp4_VII(const Character& chi, const IrredPart& rho) {
    detail::require_dim2(rho, "type VII");
    if (chi.is_trivial()) throw TypeConstraintViolation("type VII needs a nontrivial character");
    return detail::checked_gsp4(WDRep::block(rho) + WDRep::block(rho.twisted(chi)), chi * rho.det(), StType::VII);
}

/// rho + rho, similitude det(rho).
inline Gsp4Param gsp4_VIIIa(const IrredPart& rho) {
    detail::require_dim2(rho, "type VIIIa");
    return detail::checked_gsp4(WDRep::block(rho) + WDRep::block(rho), rho.det(), StType::VIIIa);
}

/// rho (x) sp(1), similitude det(rho).
inline Gsp4Param gsp4_IXa(const IrredPart& rho) {
    detail::require_dim2(rho, "type IXa");
    return detail::checked_gsp4(WDRep::block(rho, 1), rho.det(), StType::IXa);
}

/// Irreducible 4-dimensional parameter with similitude `sim`.
inline Gsp4Param gsp4_SC(const std::string& label, const Character& sim = Character::trivial()) {
    return detail::checked_gsp4(WDRep::block(IrredPart::make_with_similitude(4, label, sim)), sim, StType::SC);
}

/// Two distinct 2-dimensional irreducibles with the same determinant.
inline Gsp4Param gsp4_SC(const IrredPart& rho1, const IrredPart& rho2) {
    detail::require_dim2(rho1, "type SC");
    detail::require_dim2(rho2, "type SC");
    if (rho1 == rho2) throw TypeConstraintViolation("type SC needs two distinct 2-dimensional irreducibles");
    if (!(rho1.det() == rho2.det()))
        throw TypeConstraintViolation("type SC needs equal determinant characters");
    return detail::checked_gsp4(WDRep::block(rho1) + WDRep::block(rho2), rho1.det(), StType::SC);
}

inline Gsp4Param gsp4_free(const WDRep& rep, const Character& sim) {
    return detail::checked_gsp4(rep, sim, StType::FREE);
}

/// theta(tau1 [x] tau2): parameter rep(tau1) + rep(tau2).
inline Gsp4Param theta_lift(const Gl2Param& tau1, const Gl2Param& tau2) {
    if (!(tau1.central == tau2.central))
        throw CentralCharacterMismatch("theta lift needs equal central characters");
    return detail::checked_gsp4(tau1.rep + tau2.rep, tau1.central, StType::FREE, "theta");
}

/// GSp(4) x GL(2) L-factor L(phi_pi (x) phi_sigma, s).
inline SplitRational nov_lfactor(const Gsp4Param& pi, const Gl2Param& sigma) {
    return tensor_lfactor(pi.rep, sigma.rep);
}

/// GL(2) x GL(2) Rankin-Selberg L-factor.
inline SplitRational rs_lfactor(const Gl2Param& tau, const Gl2Param& sigma) {
    if (tau.is_supercuspidal() && sigma.is_supercuspidal()) {
        const auto& a = std::get<IrredPart>(tau.rep.blocks().front().part);
        const auto& b = std::get<IrredPart>(sigma.rep.blocks().front().part);
        if (b.is_unramified_twist_of(a.dualized()))
            throw UnsupportedPair("sigma is an unramified twist of the dual of tau (" + a.label + ")");
        return {};
    }
    return tensor(tau.rep, sigma.rep).lfactor();
}

// ---------------------------------------------------------------------------
// Transcribed type shapes.
//
// Types whose parameters are not pinned down in-house (IIa, Va, VIa, X, XIa)
// are data: a versioned text file of block templates.  Format, one
// directive per line, '#' starts a comment:
//
//     lfac-catalog 1
//     type NAME
//       params p1:char p2:irr2 ...
//       block MONOMIAL N          # MONOMIAL (x) sp(N)
//       similitude MONOMIAL
//       source free text
//     end
//
// MONOMIAL is a product of parameter names with optional integer powers
// (`sigma*chi^2`) and `abs(t)` factors, t a half-integer; at most one
// irr2 parameter may appear, to the first power, and only in blocks.
// When an irr2 parameter is given, `omega` names its determinant.
// ---------------------------------------------------------------------------

struct CatalogMonomial {
    std::map<std::string, int> powers;
    HalfInt abs_power{};
};

struct CatalogEntry {
    enum class ParamKind { character, irr2 };
    std::string name;
    std::vector<std::pair<std::string, ParamKind>> params;
    std::vector<std::pair<CatalogMonomial, int>> blocks;
    CatalogMonomial similitude;
    std::string source;
};

inline const char* kBuiltinCatalog = R"cat(lfac-catalog 1
# Parameter shapes transcribed from Roberts-Schmidt, "Local newforms for
# GSp(4)", Table A.7 (L-parameters of non-supercuspidal representations).
# External reference data: the engine never depends on these entries.

type IIa
  params chi:char sigma:char
  block sigma 0
  block sigma*chi 1
  block sigma*chi^2 0
  similitude sigma^2*chi^2
  source Roberts-Schmidt Table A.7, chi St_GL(2) x| sigma
end

type Va
  params xi:char sigma:char
  block sigma 1
  block sigma*xi 1
  similitude sigma^2
  source Roberts-Schmidt Table A.7, delta([xi, nu xi], nu^{-1/2} sigma), xi quadratic
end

type VIa
  params sigma:char
  block sigma 1
  block sigma 1
  similitude sigma^2
  source Roberts-Schmidt Table A.7, tau(S, nu^{-1/2} sigma)
end

type X
  params rho:irr2 sigma:char
  block sigma 0
  block sigma*rho 0
  block sigma*omega 0
  similitude sigma^2*omega
  source Roberts-Schmidt Table A.7, pi x| sigma; omega = det(rho)
end

type XIa
  params rho:irr2 sigma:char
  block sigma 1
  block sigma*rho 0
  similitude sigma^2
  source Roberts-Schmidt Table A.7, delta(nu^{1/2} pi, nu^{-1/2} sigma), det(rho) trivial
end
)cat";

class Catalog {
public:
    /// Parse catalog text; later entries with an existing name replace it.
    void load_text(const std::string& text, const std::string& origin = "<catalog>") {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        bool header = false;
        std::optional<CatalogEntry> cur;
        auto fail = [&](const std::string& msg) {
            throw CatalogError(origin + ":" + std::to_string(lineno) + ": " + msg);
        };
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ls(line);
            std::string word;
            if (!(ls >> word)) continue;
            if (!header) {
                int version = 0;
                if (word != "lfac-catalog" || !(ls >> version)) fail("missing 'lfac-catalog <version>' header");
                if (version != 1) fail("unsupported catalog version " + std::to_string(version));
                header = true;
                continue;
            }
            if (word == "type") {
                if (cur) fail("nested 'type'");
                cur.emplace();
                if (!(ls >> cur->name)) fail("'type' needs a name");
            } else if (!cur) {
                fail("directive '" + word + "' outside a type");
            } else if (word == "params") {
                std::string p;
                while (ls >> p) {
                    auto colon = p.find(':');
                    if (colon == std::string::npos) fail("parameter '" + p + "' needs a kind");
                    std::string kind = p.substr(colon + 1);
                    if (kind != "char" && kind != "irr2") fail("unknown parameter kind '" + kind + "'");
                    cur->params.emplace_back(p.substr(0, colon), kind == "char" ? CatalogEntry::ParamKind::character
                                                                                : CatalogEntry::ParamKind::irr2);
                }
            } else if (word == "block") {
                std::string mono;
                int n = -1;
                if (!(ls >> mono >> n) || n < 0) fail("'block' needs MONOMIAL N");
                cur->blocks.emplace_back(parse_monomial(mono, fail), n);
            } else if (word == "similitude") {
                std::string mono;
                if (!(ls >> mono)) fail("'similitude' needs a monomial");
                cur->similitude = parse_monomial(mono, fail);
            } else if (word == "source") {
                std::getline(ls, cur->source);
                if (!cur->source.empty() && cur->source.front() == ' ') cur->source.erase(0, 1);
            } else if (word == "end") {
                if (cur->blocks.empty()) fail("type " + cur->name + " has no blocks");
                entries_[cur->name] = std::move(*cur);
                cur.reset();
            } else {
                fail("unknown directive '" + word + "'");
            }
        }
        if (!header) throw CatalogError(origin + ": empty catalog");
        if (cur) throw CatalogError(origin + ": unterminated type " + cur->name);
    }
    void load_file(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw CatalogError("cannot open catalog file " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        load_text(ss.str(), path);
    }

    static const Catalog& builtin() {
        static const Catalog c = [] {
            Catalog k;
            k.load_text(kBuiltinCatalog, "<builtin>");
            return k;
        }();
        return c;
    }

    const CatalogEntry* find(const std::string& name) const {
        auto it = entries_.find(name);
        return it == entries_.end() ? nullptr : &it->second;
    }
    const std::map<std::string, CatalogEntry>& entries() const { return entries_; }

    /// Build the parameter of type `name` from positional arguments.
    Gsp4Param instantiate(const std::string& name, const std::vector<WeilPart>& args) const {
        const CatalogEntry* e = find(name);
        if (!e) throw CatalogError("no catalog entry for type " + name);
        if (args.size() != e->params.size())
            throw CatalogError("type " + name + " takes " + std::to_string(e->params.size()) + " arguments");
        std::map<std::string, Character> chars;
        std::map<std::string, IrredPart> irrs;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const auto& [pname, kind] = e->params[i];
            if (kind == CatalogEntry::ParamKind::character) {
                const auto* c = std::get_if<Character>(&args[i]);
                if (!c) throw CatalogError("argument " + pname + " of " + name + " must be a character");
                chars[pname] = *c;
            } else {
                const auto* r = std::get_if<IrredPart>(&args[i]);
                if (!r || r->dim != 2)
                    throw CatalogError("argument " + pname + " of " + name + " must be a 2-dimensional irreducible");
                irrs[pname] = *r;
                chars["omega"] = r->det();
            }
        }
        std::vector<Block> blocks;
        for (const auto& [mono, n] : e->blocks) blocks.push_back({evaluate(mono, chars, irrs, name), n});
        WeilPart sim = evaluate(e->similitude, chars, {}, name);
        const auto* simc = std::get_if<Character>(&sim);
        if (!simc) throw CatalogError("similitude of " + name + " must be a character");
        auto type = st_type_from_string(name);
        return detail::checked_gsp4(WDRep(std::move(blocks)), *simc, type.value_or(StType::FREE),
                                    type ? std::string() : "catalog:" + name);
    }

private:
    template <class Fail>
    static CatalogMonomial parse_monomial(const std::string& s, Fail&& fail) {
        CatalogMonomial m;
        std::size_t i = 0;
        while (i < s.size()) {
            if (s.compare(i, 4, "abs(") == 0) {
                auto close = s.find(')', i);
                if (close == std::string::npos) fail("unterminated abs(");
                std::string arg = s.substr(i + 4, close - i - 4);
                try {
                    m.abs_power = m.abs_power + HalfInt::from_rational(Rational(arg));
                } catch (const std::exception&) {
                    fail("abs() needs a half-integer, got '" + arg + "'");
                }
                i = close + 1;
            } else {
                std::size_t j = i;
                while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                if (j == i) fail("bad monomial '" + s + "'");
                std::string name = s.substr(i, j - i);
                int e = 1;
                if (j < s.size() && s[j] == '^') {
                    std::size_t k = j + 1;
                    if (k < s.size() && s[k] == '-') ++k;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    if (k == j + 1) fail("bad exponent in '" + s + "'");
                    e = std::stoi(s.substr(j + 1, k - j - 1));
                    j = k;
                }
                m.powers[name] += e;
                i = j;
            }
            if (i < s.size()) {
                if (s[i] != '*') fail("expected '*' in monomial '" + s + "'");
                ++i;
            }
        }
        return m;
    }

    static WeilPart evaluate(const CatalogMonomial& m, const std::map<std::string, Character>& chars,
                             const std::map<std::string, IrredPart>& irrs, const std::string& type) {
        Character c = Character::abs(m.abs_power);
        std::optional<IrredPart> irr;
        for (const auto& [name, e] : m.powers) {
            if (auto it = chars.find(name); it != chars.end()) {
                c = c * it->second.pow(e);
            } else if (auto jt = irrs.find(name); jt != irrs.end()) {
                if (e != 1 || irr) throw CatalogError("type " + type + ": an irr2 parameter must appear once");
                irr = jt->second;
            } else {
                throw CatalogError("type " + type + ": unknown name '" + name + "'");
            }
        }
        if (irr) return irr->twisted(c);
        return c;
    }

    std::map<std::string, CatalogEntry> entries_;
};

/// Catalog shapes (builtin data) by type name.
inline Gsp4Param gsp4_catalog(const std::string& type, const std::vector<WeilPart>& args,
                              const Catalog& cat = Catalog::builtin()) {
    return cat.instantiate(type, args);
}

}  // namespace lfac
