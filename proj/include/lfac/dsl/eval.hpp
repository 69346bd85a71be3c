#pragma once

#include <functional>
#include <map>
#include <variant>

#include "../render.hpp"
#include "parser.hpp"

namespace lfac::dsl {

using Value = std::variant<Scalar, Character, WDRep, SplitRational, PoleReport, Gl2Param, Gsp4Param>;

inline const char* kind_name(const Value& v) {
    static const char* names[] = {"scalar", "character", "wdrep", "split_rational", "pole_report", "gl2", "gsp4"};
    return names[v.index()];
}

inline std::string to_text(const Value& v) {
    return std::visit([](const auto& x) { return lfac::to_text(x); }, v);
}

inline bool operator_eq(const Gl2Param& a, const Gl2Param& b) {
    return a.rep == b.rep && a.central == b.central && a.kind == b.kind && a.reducible == b.reducible;
}
inline bool operator_eq(const Gsp4Param& a, const Gsp4Param& b) {
    return a.rep == b.rep && a.similitude == b.similitude && a.st_type == b.st_type && a.annotation == b.annotation;
}
template <class T>
bool operator_eq(const T& a, const T& b) {
    return a == b;
}

/// Equality up to the implicit embeddings the text form cannot tell apart:
/// a Scalar is a constant SplitRational and a Character is a one-block WDRep.
inline bool equivalent(const Value& a, const Value& b) {
    if (a.index() == b.index())
        return std::visit([&](const auto& x) { return operator_eq(x, std::get<std::decay_t<decltype(x)>>(b)); }, a);
    auto as_sr = [](const Value& v) -> std::optional<SplitRational> {
        if (auto* s = std::get_if<Scalar>(&v)) return s->is_zero() ? std::nullopt : std::optional(SplitRational::constant(*s));
        if (auto* f = std::get_if<SplitRational>(&v)) return *f;
        return std::nullopt;
    };
    auto as_rep = [](const Value& v) -> std::optional<WDRep> {
        if (auto* c = std::get_if<Character>(&v)) return WDRep::block(*c);
        if (auto* w = std::get_if<WDRep>(&v)) return *w;
        return std::nullopt;
    };
    if (auto x = as_sr(a), y = as_sr(b); x && y) return *x == *y;
    if (auto x = as_rep(a), y = as_rep(b); x && y) return *x == *y;
    return false;
}

namespace detail {

/// Coefficients of a SplitRational that is a polynomial in X.
inline std::optional<std::vector<Scalar>> poly_coeffs(const SplitRational& f) {
    if (f.xpower() < 0) return std::nullopt;
    std::vector<Scalar> c(static_cast<std::size_t>(f.xpower()), Scalar(0));
    c.push_back(f.unit());
    for (const auto& fac : f.factors()) {
        if (fac.exponent < 0) return std::nullopt;
        for (int k = 0; k < fac.exponent; ++k) {
            std::vector<Scalar> next(c.size() + 1, Scalar(0));
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i] = next[i] + c[i];
                next[i + 1] = next[i + 1] - fac.beta * c[i];
            }
            c = std::move(next);
        }
    }
    return c;
}

}  // namespace detail

class Evaluator {
public:
    explicit Evaluator(const Catalog& cat = Catalog::builtin()) : cat_(cat) {}

    Value eval(const std::string& src) const { return eval(*parse(src)); }

    Value eval(const Expr& e) const {
        switch (e.kind) {
            case Expr::Kind::number: return Scalar(e.number);
            case Expr::Kind::string: fail(e, "a string is only allowed as a type or note argument");
            case Expr::Kind::name: return name(e);
            case Expr::Kind::call: return call(e);
            case Expr::Kind::neg: return negate(e, eval(*e.args[0]));
            case Expr::Kind::power: return power(e, eval(*e.args[0]));
            case Expr::Kind::binary: return binary(e, eval(*e.args[0]), eval(*e.args[1]));
        }
        fail(e, "unknown expression");
    }

private:
    [[noreturn]] static void fail(const Expr& e, const std::string& msg, const char* code = "type") {
        throw DslError(code, e.line, e.col, msg);
    }
    [[noreturn]] static void type_fail(const Expr& e, const char* want, const Value& got) {
        fail(e, std::string("expected ") + want + ", got " + kind_name(got));
    }

    static bool reserved(const std::string& n) {
        return n == "X" || n == "v" || n == "q" || n == "x" || n == "St" || n == "empty";
    }

    Value name(const Expr& e) const {
        const std::string& n = e.text;
        if (n == "X") return SplitRational::x_power(1);
        if (n == "v") return Scalar::sqrt_q_power(1);
        if (n == "q") return Scalar::sqrt_q_power(2);
        if (n == "St") return gl2_steinberg();
        if (n == "empty") return WDRep();
        if (n.find('.') != std::string::npos || functions().count(n))
            fail(e, "'" + n + "' is a function and needs arguments", "name");
        return Scalar::symbol(n);
    }

    // ---- coercions -------------------------------------------------------

    Scalar scalar(const Expr& e) const {
        Value v = eval(e);
        if (auto* s = std::get_if<Scalar>(&v)) return *s;
        type_fail(e, "scalar", v);
    }
    Character character(const Expr& e) const {
        Value v = eval(e);
        if (auto* c = std::get_if<Character>(&v)) return *c;
        type_fail(e, "character", v);
    }
    static std::optional<WDRep> rep_of(const Value& v) {
        if (auto* w = std::get_if<WDRep>(&v)) return *w;
        if (auto* c = std::get_if<Character>(&v)) return WDRep::block(*c);
        if (auto* p = std::get_if<Gl2Param>(&v)) return p->rep;
        if (auto* p = std::get_if<Gsp4Param>(&v)) return p->rep;
        return std::nullopt;
    }
    WDRep rep(const Expr& e) const {
        Value v = eval(e);
        if (auto w = rep_of(v)) return *w;
        type_fail(e, "representation", v);
    }
    static std::optional<SplitRational> sr_of(const Value& v) {
        if (auto* f = std::get_if<SplitRational>(&v)) return *f;
        if (auto* s = std::get_if<Scalar>(&v)) return SplitRational::constant(*s);
        return std::nullopt;
    }
    SplitRational sr(const Expr& e) const {
        Value v = eval(e);
        if (auto f = sr_of(v)) return *f;
        type_fail(e, "rational function of X", v);
    }
    IrredPart irred(const Expr& e) const {
        Value v = eval(e);
        if (auto* w = std::get_if<WDRep>(&v))
            if (w->blocks().size() == 1 && w->blocks()[0].n == 0)
                if (auto* p = std::get_if<IrredPart>(&w->blocks()[0].part)) return *p;
        type_fail(e, "irreducible part irr(...)", v);
    }
    WeilPart weil_part(const Expr& e) const {
        Value v = eval(e);
        if (auto* c = std::get_if<Character>(&v)) return *c;
        if (auto* w = std::get_if<WDRep>(&v))
            if (w->blocks().size() == 1 && w->blocks()[0].n == 0) return w->blocks()[0].part;
        type_fail(e, "character or irreducible part", v);
    }
    Gl2Param gl2(const Expr& e) const {
        Value v = eval(e);
        if (auto* p = std::get_if<Gl2Param>(&v)) return *p;
        type_fail(e, "GL(2) parameter", v);
    }
    Gsp4Param gsp4(const Expr& e) const {
        Value v = eval(e);
        if (auto* p = std::get_if<Gsp4Param>(&v)) return *p;
        type_fail(e, "GSp(4) parameter", v);
    }
    Rational rational(const Expr& e) const {
        Scalar s = scalar(e);
        if (!s.is_rational()) fail(e, "expected a rational number");
        return s.rational_value();
    }
    int integer(const Expr& e) const {
        Rational r = rational(e);
        if (r.get_den() != 1 || !r.get_num().fits_sint_p()) fail(e, "expected an integer");
        return static_cast<int>(r.get_num().get_si());
    }
    HalfInt half_int(const Expr& e) const {
        Rational r = 2 * rational(e);
        if (r.get_den() != 1 || !r.get_num().fits_sint_p()) fail(e, "expected an integer or half-integer");
        return HalfInt::halves(static_cast<int>(r.get_num().get_si()));
    }
    static std::string raw_name(const Expr& e, const char* what) {
        if (e.kind == Expr::Kind::string) return e.text;
        if (e.kind == Expr::Kind::name && !reserved(e.text)) return e.text;
        fail(e, std::string("expected ") + what);
    }

    // ---- operators -------------------------------------------------------

    static Value negate(const Expr& e, const Value& a) {
        if (auto* s = std::get_if<Scalar>(&a)) return -*s;
        if (auto* f = std::get_if<SplitRational>(&a)) return SplitRational::constant(Scalar(-1)) * *f;
        type_fail(e, "scalar or rational function", a);
    }
    static Value power(const Expr& e, const Value& a) {
        const int k = e.exponent;
        if (auto* s = std::get_if<Scalar>(&a)) return s->pow(k);
        if (auto* f = std::get_if<SplitRational>(&a)) return f->pow(k);
        if (auto* c = std::get_if<Character>(&a)) return c->pow(k);
        type_fail(e, "scalar, character or rational function", a);
    }

    static Value poly_sum(const Expr& e, const SplitRational& f, const SplitRational& g, bool minus) {
        auto cf = detail::poly_coeffs(f), cg = detail::poly_coeffs(g);
        if (!cf || !cg) fail(e, "sums of X-expressions need polynomial operands");
        std::vector<Scalar> c(std::max(cf->size(), cg->size()), Scalar(0));
        for (std::size_t i = 0; i < cf->size(); ++i) c[i] = c[i] + (*cf)[i];
        for (std::size_t i = 0; i < cg->size(); ++i) c[i] = minus ? c[i] - (*cg)[i] : c[i] + (*cg)[i];
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        if (c.empty()) return Scalar(0);
        std::size_t low = 0;
        while (c[low].is_zero()) ++low;
        const std::size_t degree = c.size() - 1 - low;
        if (degree > 1)
            fail(e, "sum does not factor into linear terms (degree " + std::to_string(degree) + " in X)");
        SplitRational r = SplitRational::constant(c[low]) * SplitRational::x_power(static_cast<int>(low));
        if (degree == 1) r = r * SplitRational::linear(-(c[low + 1] / c[low]));
        if (r.xpower() == 0 && r.factors().empty()) return r.unit();
        return r;
    }

    static Value binary(const Expr& e, const Value& a, const Value& b) {
        const std::string& op = e.text;
        const auto* sa = std::get_if<Scalar>(&a);
        const auto* sb = std::get_if<Scalar>(&b);
        const auto* ca = std::get_if<Character>(&a);
        const auto* cb = std::get_if<Character>(&b);
        if (op == "x") {
            auto ra = rep_of(a), rb = rep_of(b);
            if (!ra) type_fail(*e.args[0], "representation", a);
            if (!rb) type_fail(*e.args[1], "representation", b);
            return tensor(*ra, *rb);
        }
        if (sa && sb) {
            if (op == "+") return *sa + *sb;
            if (op == "-") return *sa - *sb;
            if (op == "*") return *sa * *sb;
            return *sa / *sb;
        }
        if (ca && cb && (op == "*" || op == "/")) return op == "*" ? *ca * *cb : *ca / *cb;
        auto fa = sr_of(a), fb = sr_of(b);
        if (fa && fb) {
            if (op == "+" || op == "-") {
                if (sa && sa->is_zero()) return op == "+" ? b : negate(e, b);
                if (sb && sb->is_zero()) return a;
                return poly_sum(e, *fa, *fb, op == "-");
            }
            if ((sb && sb->is_zero() && op == "/")) throw DivisionByZero();
            if ((sa && sa->is_zero()) || (sb && sb->is_zero())) return Scalar(0);
            return op == "*" ? *fa * *fb : *fa / *fb;
        }
        if (op == "+") {
            auto ra = rep_of(a), rb = rep_of(b);
            if (ra && rb) return *ra + *rb;
        }
        fail(e, std::string("operator '") + op + "' does not apply to " + kind_name(a) + " and " + kind_name(b));
    }

    // ---- functions -------------------------------------------------------

    using Args = std::vector<ExprPtr>;
    using Fn = std::function<Value(const Evaluator&, const Expr&, const Args&)>;
    struct FnSpec {
        std::size_t min_args, max_args;
        Fn fn;
    };

    static const std::map<std::string, FnSpec>& functions() {
        static const std::map<std::string, FnSpec> table = build_table();
        return table;
    }

    Value call(const Expr& e) const {
        const auto& table = functions();
        auto it = table.find(e.text);
        if (it == table.end()) {
            const std::string prefix = "gsp4.";
            if (e.text.rfind(prefix, 0) == 0 && cat_.find(e.text.substr(prefix.size()))) return catalog_call(e);
            fail(e, "unknown function '" + e.text + "'", "name");
        }
        const FnSpec& s = it->second;
        if (e.args.size() < s.min_args || e.args.size() > s.max_args) {
            std::string want = s.min_args == s.max_args ? std::to_string(s.min_args)
                                                        : std::to_string(s.min_args) + " to " +
                                                              (s.max_args == SIZE_MAX ? std::string("any number of")
                                                                                      : std::to_string(s.max_args));
            fail(e, e.text + " takes " + want + " arguments, got " + std::to_string(e.args.size()), "arity");
        }
        return s.fn(*this, e, e.args);
    }

    Value catalog_call(const Expr& e) const {
        std::vector<WeilPart> parts;
        for (const auto& a : e.args) parts.push_back(weil_part(*a));
        return cat_.instantiate(e.text.substr(5), parts);
    }

    static std::map<std::string, FnSpec> build_table() {
        std::map<std::string, FnSpec> t;
        auto def = [&](const std::string& n, std::size_t lo, std::size_t hi, Fn f) { t[n] = FnSpec{lo, hi, std::move(f)}; };
        using E = Evaluator;

        def("unr", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return Character::unramified(ev.scalar(*a[0]));
        });
        def("ram", 1, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return Character::ramified(raw_name(*a[0], "a ramification tag name"),
                                       a.size() > 1 ? ev.scalar(*a[1]) : Scalar(1));
        });
        def("abs", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return Character::abs(ev.half_int(*a[0]));
        });
        def("irr", 3, 4, [](const E& ev, const Expr& e, const Args& a) -> Value {
            const int d = ev.integer(*a[0]);
            const std::string label = raw_name(*a[1], "a label");
            const Character det = ev.character(*a[2]);
            IrredPart p = IrredPart::make(d, label, det);
            if (a.size() == 4) {
                const Character sim = ev.character(*a[3]);
                if (d % 2 != 0 || !(sim.pow(d / 2) == det))
                    fail(e, "similitude character must satisfy det = sim^(dim/2)");
                p.base_sim = sim;
            }
            return WDRep::block(p);
        });
        def("sp", 1, 1, [](const E& ev, const Expr& e, const Args& a) -> Value {
            const int n = ev.integer(*a[0]);
            if (n < 0) fail(e, "sp(n) needs n >= 0");
            return WDRep::sp(n);
        });
        def("dual", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            Value v = ev.eval(*a[0]);
            if (auto* c = std::get_if<Character>(&v)) return c->inverse();
            if (auto w = rep_of(v)) return w->dual();
            type_fail(*a[0], "representation", v);
        });
        def("twist", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return ev.rep(*a[0]).twist(ev.character(*a[1]));
        });
        def("tensor", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return tensor(ev.rep(*a[0]), ev.rep(*a[1]));
        });
        Fn lfac = [](const E& ev, const Expr&, const Args& a) -> Value {
            SplitRational f = ev.rep(*a[0]).lfactor();
            return f;
        };
        def("L", 1, 1, lfac);
        def("lfactor", 1, 1, lfac);
        def("shift", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return ev.sr(*a[0]).shift(ev.half_int(*a[1]));
        });
        def("ideal", 1, SIZE_MAX, [](const E& ev, const Expr&, const Args& a) -> Value {
            std::vector<SplitRational> fs;
            for (const auto& x : a) fs.push_back(ev.sr(*x));
            return ideal_generator(fs).generator;
        });
        def("order", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return Scalar(ev.sr(*a[0]).vanishing_order(ev.scalar(*a[1])));
        });

        def("gl2.ps", 2, 3, [](const E& ev, const Expr&, const Args& a) -> Value {
            bool red = false;
            if (a.size() == 3) {
                if (raw_name(*a[2], "the flag 'reducible'") != "reducible") fail(*a[2], "expected the flag 'reducible'");
                red = true;
            }
            return gl2_principal_series(ev.character(*a[0]), ev.character(*a[1]), red);
        });
        def("gl2.st", 0, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gl2_steinberg(a.empty() ? Character::trivial() : ev.character(*a[0]));
        });
        def("gl2.sc", 1, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            if (a.size() == 2) return gl2_supercuspidal(raw_name(*a[0], "a label"), ev.character(*a[1]));
            return gl2_supercuspidal(ev.irred(*a[0]));
        });

        def("gsp4.I", 3, 3, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gsp4_I(ev.character(*a[0]), ev.character(*a[1]), ev.character(*a[2]));
        });
        def("gsp4.IIIa", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gsp4_IIIa(ev.character(*a[0]), ev.character(*a[1]));
        });
        def("gsp4.IVa", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gsp4_IVa(ev.character(*a[0]));
        });
        def("gsp4.VII", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gsp4_VII(ev.character(*a[0]), ev.irred(*a[1]));
        });
        def("gsp4.VIIIa", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gsp4_VIIIa(ev.irred(*a[0]));
        });
        def("gsp4.IXa", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gsp4_IXa(ev.irred(*a[0]));
        });
        def("gsp4.SC", 1, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            const Expr& first = *a[0];
            if (first.kind == Expr::Kind::name || first.kind == Expr::Kind::string)
                return gsp4_SC(raw_name(first, "a label"), a.size() > 1 ? ev.character(*a[1]) : Character::trivial());
            if (a.size() != 2) fail(first, "gsp4.SC takes a label or two irreducible parts");
            return gsp4_SC(ev.irred(first), ev.irred(*a[1]));
        });
        def("gsp4.FREE", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return gsp4_free(ev.rep(*a[0]), ev.character(*a[1]));
        });
        def("gsp4", 3, 4, [](const E& ev, const Expr&, const Args& a) -> Value {
            const std::string tn = raw_name(*a[0], "a type name");
            auto type = st_type_from_string(tn);
            if (!type) fail(*a[0], "unknown type '" + tn + "'", "name");
            std::string note;
            if (a.size() == 4) {
                if (a[3]->kind != Expr::Kind::string) fail(*a[3], "expected a string note");
                note = a[3]->text;
            }
            return lfac::detail::checked_gsp4(ev.rep(*a[1]), ev.character(*a[2]), *type, note);
        });
        def("rep", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value { return ev.rep(*a[0]); });
        def("sim", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return ev.gsp4(*a[0]).similitude;
        });
        def("central", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value { return ev.gl2(*a[0]).central; });

        def("theta", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return theta_lift(ev.gl2(*a[0]), ev.gl2(*a[1]));
        });
        def("nov", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return nov_lfactor(ev.gsp4(*a[0]), ev.gl2(*a[1]));
        });
        def("rs", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return rs_lfactor(ev.gl2(*a[0]), ev.gl2(*a[1]));
        });

        def("exceptional", 2, 2, [](const E& ev, const Expr&, const Args& a) -> Value {
            return exceptional_poles(ev.gsp4(*a[0]), ev.gl2(*a[1]));
        });
        def("subregular", 1, 1, [](const E& ev, const Expr&, const Args& a) -> Value {
            return subregular_poles(ev.gsp4(*a[0]));
        });
        def("pole", 3, 5, [](const E& ev, const Expr& e, const Args& a) -> Value {
            PoleEntry p;
            p.root = ev.scalar(*a[0]);
            const std::string cls = raw_name(*a[1], "a pole class");
            auto c = pole_class_from_string(cls);
            if (!c) fail(*a[1], "unknown pole class '" + cls + "'", "name");
            p.classification = *c;
            p.witness = ev.rep(*a[2]);
            if (a.size() == 4) fail(e, "pole takes either no Bessel characters or both", "arity");
            if (a.size() == 5) p.bessel = std::pair{ev.character(*a[3]), ev.character(*a[4])};
            return PoleReport{{p}};
        });
        def("report", 0, SIZE_MAX, [](const E& ev, const Expr&, const Args& a) -> Value {
            PoleReport r;
            for (const auto& x : a) {
                Value v = ev.eval(*x);
                auto* p = std::get_if<PoleReport>(&v);
                if (!p) type_fail(*x, "pole(...) entry", v);
                r.entries.insert(r.entries.end(), p->entries.begin(), p->entries.end());
            }
            return r;
        });
        return t;
    }

    const Catalog& cat_;
};

inline Value evaluate(const std::string& src, const Catalog& cat = Catalog::builtin()) {
    return Evaluator(cat).eval(src);
}

}  // namespace lfac::dsl
