// Acceptance run: one PASS/FAIL line per criterion on stdout, details of
// failures on stderr, exit status 0 only if every criterion passes.

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lfac/json_render.hpp"
#include "lfac/verify.hpp"

#ifndef LFAC_BINARY
#error "LFAC_BINARY must name the lfac executable"
#endif
#ifndef LFAC_GOLDEN_DIR
#error "LFAC_GOLDEN_DIR must name the golden-file directory"
#endif

namespace fs = std::filesystem;
using namespace lfac;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;
    void fail(const std::string& why) {
        pass = false;
        details.push_back(why);
    }
};

Outcome from_report(const verify::CheckReport& r) {
    Outcome o;
    o.pass = r.pass() && r.trials > 0;
    o.details = r.failures;
    o.summary = std::to_string(r.trials) + " checks, " + std::to_string(r.failures.size()) + " failures";
    return o;
}

verify::SuiteOptions opts(int trials, std::uint64_t seed) {
    verify::SuiteOptions o;
    o.trials = trials;
    o.seed = seed;
    return o;
}

struct Run {
    int code = -1;
    std::string out;
};

/// Run the lfac binary with `args` in `cwd`; stdout captured, stderr discarded.
Run run_lfac(const std::vector<std::string>& args, const fs::path& cwd) {
    int pipefd[2];
    if (pipe(pipefd) != 0) return {};
    const pid_t pid = fork();
    if (pid == 0) {
        if (chdir(cwd.c_str()) != 0) _exit(127);
        dup2(pipefd[1], STDOUT_FILENO);
        int devnull = open("/dev/null", O_WRONLY);
        dup2(devnull, STDERR_FILENO);
        close(pipefd[0]);
        std::vector<char*> argv{const_cast<char*>(LFAC_BINARY)};
        for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        execv(LFAC_BINARY, argv.data());
        _exit(127);
    }
    close(pipefd[1]);
    Run r;
    char buf[4096];
    ssize_t n;
    while ((n = read(pipefd[0], buf, sizeof buf)) > 0) r.out.append(buf, static_cast<std::size_t>(n));
    close(pipefd[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void check_goldens(Outcome& o, int& count) {
    const fs::path dir = LFAC_GOLDEN_DIR;
    std::vector<fs::path> cases;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".args") cases.push_back(e.path());
    std::sort(cases.begin(), cases.end());
    for (const auto& c : cases) {
        std::ifstream f(c);
        std::string line;
        std::getline(f, line);
        const int want = std::stoi(line.substr(line.find(' ') + 1));
        std::vector<std::string> args;
        while (std::getline(f, line)) args.push_back(line);
        const Run r = run_lfac(args, dir);
        const std::string name = c.stem().string();
        if (r.code != want) o.fail(name + ": exit " + std::to_string(r.code) + ", expected " + std::to_string(want));
        fs::path expected = c;
        expected.replace_extension(".out");
        if (r.out != slurp(expected)) o.fail(name + ": output differs from " + expected.filename().string());
        ++count;
    }
    if (count != 20) o.fail("expected 20 golden invocations, found " + std::to_string(count));
}

void check_exit_contract(Outcome& o) {
    const fs::path dir = LFAC_GOLDEN_DIR;
    const std::vector<std::pair<std::vector<std::string>, int>> contract = {
        {{"--help"}, 0},
        {{"eval", "a + b"}, 0},
        {{"verify", "--suite", "ideal", "--trials", "3"}, 0},
        {{"eval", "unr(a"}, 2},
        {{"eval", "unr(a, b)"}, 2},
        {{"eval", "twist(sp(1), a)"}, 2},
        {{"--format", "xml", "eval", "a"}, 2},
        {{"--catalog", "does-not-exist.cat", "eval", "a"}, 2},
        {{"verify", "--suite", "nope"}, 2},
        {{"ideals", "St"}, 2},
        {{"eval", "a/0"}, 1},
        {{"eval", "gsp4.IIIa(unr(a), unr(a))"}, 1},
    };
    for (const auto& [args, want] : contract) {
        const Run r = run_lfac(args, dir);
        if (r.code != want) {
            std::string cmd;
            for (const auto& a : args) cmd += " " + a;
            o.fail("lfac" + cmd + ": exit " + std::to_string(r.code) + ", expected " + std::to_string(want));
        }
    }
}

/// One seeded value of kind i % 7.
dsl::Value seeded_value(int i) {
    verify::Rng rng(verify::trial_seed(2024, static_cast<std::uint64_t>(i)));
    verify::TrialProfile p;
    p.seed = verify::trial_seed(2025, static_cast<std::uint64_t>(i));
    p.allow_irred = true;
    switch (i % 7) {
        case 0: return verify::random_satake(rng, p) + verify::random_satake(rng, p) / Scalar(rng.uniform(2, 9));
        case 1: return verify::random_character(rng, p);
        case 2: return verify::random_rep(p);
        case 3: {
            const Gsp4Param pi = verify::random_gsp4(rng, p);
            return ideals_JK(pi).K / pi.rep.lfactor();
        }
        case 4: {
            const Gsp4Param pi = verify::random_gsp4(rng, p);
            return rng.chance(1, 2) ? exceptional_poles(pi, verify::random_sigma(rng, p, pi)) : subregular_poles(pi);
        }
        case 5: return verify::random_gl2_with_central(rng, p, verify::random_character(rng, p), "tau");
        default: return verify::random_gsp4(rng, p);
    }
}

void check_round_trip(Outcome& o) {
    for (int i = 0; i < 200; ++i) {
        const dsl::Value v = seeded_value(i);
        const std::string text = dsl::to_text(v);
        try {
            const dsl::Value back = dsl::evaluate(text);
            if (!dsl::equivalent(v, back)) o.fail("round trip changed the value: " + text);
            if (dsl::to_text(back) != text) o.fail("render not idempotent: " + text + " -> " + dsl::to_text(back));
            if (dsl::equivalent(v, back) && v.index() == back.index() && to_json(v) != to_json(back))
                o.fail("json differs after round trip: " + text);
        } catch (const std::exception& e) {
            o.fail("round trip failed to parse " + text + ": " + e.what());
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "line-ratio identities and worked example", [] { return from_report(verify::run_lines(opts(200, 7))); }},
        {2, "Steinberg twist factor", [] { return from_report(verify::run_steinberg(opts(100, 11))); }},
        {3, "principal-series product formula", [] { return from_report(verify::run_ps(opts(100, 13))); }},
        {4, "theta-lift product formula", [] { return from_report(verify::run_theta(opts(100, 17))); }},
        {5, "ideal generator vs expanded gcd", [] { return from_report(verify::run_ideal(opts(100, 19))); }},
        {6, "exceptional poles vs direct enumeration", [] { return from_report(verify::run_poles(opts(100, 23))); }},
        {7, "K vanishing iff subregular, integral J and K",
         [] { return from_report(verify::run_vanishing(opts(100, 29))); }},
        {8, "factorization invariants", [] { return from_report(verify::run_splits(opts(100, 31))); }},
        {9, "CLI goldens, round trip, exit codes",
         [] {
             Outcome o;
             int goldens = 0;
             check_goldens(o, goldens);
             check_exit_contract(o);
             check_round_trip(o);
             o.summary = std::to_string(goldens) + " goldens, 200 round trips, " + std::to_string(o.details.size()) +
                         " failures";
             return o;
         }},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("uncaught: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
        if (!o.summary.empty()) std::cout << " (" << o.summary << ")";
        std::cout << "\n" << std::flush;
        for (std::size_t k = 0; k < o.details.size() && k < 10; ++k) std::cerr << "  " << o.details[k] << "\n";
    }
    return all ? 0 : 1;
}
