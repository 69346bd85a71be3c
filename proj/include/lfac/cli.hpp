#pragma once

// Command-line surface.  run() never calls exit(); it returns the process
// exit code: 0 success, 1 failed verification or a math error, 2 usage,
// syntax, name, arity, type or catalog-file errors.

#include <CLI11.hpp>
#include <iostream>

#include "json_render.hpp"
#include "verify.hpp"

namespace lfac::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct Output {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;

    void value(const dsl::Value& v) const {
        if (as_json)
            out << to_json(v).dump(2) << "\n";
        else
            out << dsl::to_text(v) << "\n";
    }
    /// Named SplitRationals, e.g. the pieces of a factorization.
    void pieces(const std::string& kind, const std::vector<std::pair<std::string, SplitRational>>& items) const {
        if (as_json) {
            json v = json::object();
            for (const auto& [k, f] : items) v[k] = to_json(f);
            out << envelope(kind, v).dump(2) << "\n";
        } else {
            for (const auto& [k, f] : items) out << k << ": " << to_text(f) << "\n";
        }
    }
    int error(const std::string& code, const std::string& msg, int exit_code, int line = 0, int col = 0) const {
        if (as_json) {
            out << error_json(code, msg, line, col).dump(2) << "\n";
        } else {
            err << "error[" << code << "]: ";
            if (line > 0) err << line << ":" << col << ": ";
            err << msg << "\n";
        }
        return exit_code;
    }
};

namespace detail {

inline Gsp4Param as_gsp4(const dsl::Value& v) {
    if (auto* p = std::get_if<Gsp4Param>(&v)) return *p;
    throw dsl::DslError("type", 1, 1, std::string("expected a GSp(4) parameter, got ") + dsl::kind_name(v));
}
inline Gl2Param as_gl2(const dsl::Value& v) {
    if (auto* p = std::get_if<Gl2Param>(&v)) return *p;
    throw dsl::DslError("type", 1, 1, std::string("expected a GL(2) parameter, got ") + dsl::kind_name(v));
}

inline SplitRational lfactor_of(const dsl::Value& v) {
    if (auto* f = std::get_if<SplitRational>(&v)) return *f;
    if (auto* s = std::get_if<Scalar>(&v)) return SplitRational::constant(*s);
    if (auto* c = std::get_if<Character>(&v)) return WDRep::block(*c).lfactor();
    if (auto* w = std::get_if<WDRep>(&v)) return w->lfactor();
    if (auto* p = std::get_if<Gl2Param>(&v)) return p->rep.lfactor();
    if (auto* p = std::get_if<Gsp4Param>(&v)) return p->rep.lfactor();
    throw dsl::DslError("type", 1, 1, std::string("no L-factor for a ") + dsl::kind_name(v));
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Symbolic local L-factors and pole classification for GSp(4) x GL(2)", "lfac"};
    app.require_subcommand(1);
    std::string format = "text", catalog_file;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--catalog", catalog_file, "Extra catalog file loaded over the built-in one");

    std::string expr;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression and print its canonical form");
    eval_cmd->add_option("EXPR", expr)->required();
    auto* lfactor_cmd = app.add_subcommand("lfactor", "Print the L-factor of a representation or parameter");
    lfactor_cmd->add_option("EXPR", expr)->required();

    std::vector<std::string> pair_args;
    std::string single;
    auto* poles_cmd = app.add_subcommand("poles", "Pole reports");
    auto* ex_opt = poles_cmd->add_option("--exceptional", pair_args, "Exceptional poles of L(pi x sigma): PI SIGMA")
                       ->expected(2);
    auto* sub_opt = poles_cmd->add_option("--subregular", single, "Subregular poles of L(pi): PI");
    ex_opt->excludes(sub_opt);
    poles_cmd->require_option(1);

    auto* split_cmd = app.add_subcommand("split", "Factorizations into regular and exceptional parts");
    auto* nov_opt = split_cmd->add_option("--nov", pair_args, "L(pi x sigma) = L_reg * L_ex: PI SIGMA")->expected(2);
    auto* ps_opt = split_cmd->add_option("--ps", single, "L(pi) = L_ex * L_sub * L_Kir: PI");
    nov_opt->excludes(ps_opt);
    split_cmd->require_option(1);

    auto* ideals_cmd = app.add_subcommand("ideals", "Generators of the ideals J and K for a GSp(4) parameter");
    ideals_cmd->add_option("PI", single)->required();

    verify::SuiteOptions vopt;
    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run seeded property suites");
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suites));
    verify_cmd->add_option("--trials", vopt.trials)->check(CLI::Range(1, 1000000));
    verify_cmd->add_option("--seed", vopt.seed);
    verify_cmd->add_flag("--numeric", vopt.numeric, "Also re-check under random rational specialization");

    Output o{out, err, false};
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        o.as_json = format == "json";
        return o.error("usage", e.what(), kUsage);
    }
    o.as_json = format == "json";

    try {
        Catalog cat = Catalog::builtin();
        if (!catalog_file.empty()) {
            try {
                cat.load_file(catalog_file);
            } catch (const CatalogError& e) {
                return o.error(e.code(), e.what(), kUsage);
            }
        }
        dsl::Evaluator ev(cat);

        if (eval_cmd->parsed()) {
            o.value(ev.eval(expr));
        } else if (lfactor_cmd->parsed()) {
            o.value(detail::lfactor_of(ev.eval(expr)));
        } else if (poles_cmd->parsed()) {
            if (!pair_args.empty())
                o.value(exceptional_poles(detail::as_gsp4(ev.eval(pair_args[0])), detail::as_gl2(ev.eval(pair_args[1]))));
            else
                o.value(subregular_poles(detail::as_gsp4(ev.eval(single))));
        } else if (split_cmd->parsed()) {
            if (!pair_args.empty()) {
                NovSplit s = nov_split(detail::as_gsp4(ev.eval(pair_args[0])), detail::as_gl2(ev.eval(pair_args[1])));
                o.pieces("nov_split", {{"regular", s.regular}, {"exceptional", s.exceptional}});
            } else {
                PsSplit s = ps_split(detail::as_gsp4(ev.eval(single)));
                o.pieces("ps_split",
                         {{"exceptional", s.exceptional}, {"subregular", s.subregular}, {"kirillov", s.kirillov}});
            }
        } else if (ideals_cmd->parsed()) {
            IdealsJK jk = ideals_JK(detail::as_gsp4(ev.eval(single)));
            o.pieces("ideals", {{"J", jk.J}, {"K", jk.K}});
        } else if (verify_cmd->parsed()) {
            verify::CheckReport r = verify::run_suite(suite, vopt);
            if (o.as_json) {
                json v = {{"suite", suite},   {"seed", vopt.seed},          {"trials", r.trials},
                          {"pass", r.pass()}, {"failures", r.failures}};
                out << envelope("verify", v).dump(2) << "\n";
            } else {
                for (const auto& f : r.failures) out << "FAIL " << f << "\n";
                out << (r.pass() ? "PASS" : "FAIL") << " suite=" << suite << " seed=" << vopt.seed
                    << " trials=" << r.trials << " failures=" << r.failures.size() << "\n";
            }
            return r.pass() ? kOk : kFailure;
        }
        return kOk;
    } catch (const dsl::DslError& e) {
        return o.error(e.code(), e.message(), kUsage, e.line(), e.column());
    } catch (const Error& e) {
        return o.error(e.code(), e.what(), kFailure);
    }
}

}  // namespace lfac::cli
