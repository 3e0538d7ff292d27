// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
//   alba_acceptance CORPUS_DIR            run every criterion
//   alba_acceptance CORPUS_DIR --digest F write the determinism digest to F

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "alba/classify.hpp"
#include "alba/engine.hpp"
#include "alba/fol.hpp"
#include "alba/pi2.hpp"
#include "alba/semantics.hpp"
#include "alba/syntax.hpp"
#include "gen.hpp"
#include "naive.hpp"

using namespace alba;
namespace fs = std::filesystem;

namespace {

// pinned budgets and tolerances
constexpr double kGoldenSeconds = 1.0;
constexpr double kSoundnessSeconds = 300.0;
constexpr std::size_t kQuasiCount = 100;
constexpr std::size_t kExistsCount = 30;
constexpr std::size_t kRuleCases = 30;
constexpr int kStTuples = 1000;
constexpr int kOracleSize = 3;
constexpr int kRuleFrameSize = 2;
constexpr unsigned kQuasiSeed = 20240611;
constexpr unsigned kExistsSeed = 77;
constexpr unsigned kTupleSeed = 5;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct CorpusItem {
    std::string name;
    Statement statement;
};

std::vector<CorpusItem> corpus_files(const fs::path& dir) {
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".alba") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    std::vector<CorpusItem> out;
    for (const auto& p : paths) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        out.push_back({p.filename().string(), parse_statement(ss.str())});
    }
    return out;
}

std::vector<CorpusItem> full_corpus(const fs::path& dir) {
    std::vector<CorpusItem> out = corpus_files(dir);
    auto qs = gen::inductive_quasis(kQuasiSeed, kQuasiCount);
    for (std::size_t k = 0; k < qs.size(); ++k) out.push_back({"generated-" + std::to_string(k), qs[k]});
    return out;
}

QuasiInequality as_quasi(const Statement& s) {
    if (auto* q = std::get_if<QuasiInequality>(&s)) return *q;
    if (auto* i = std::get_if<Inequality>(&s)) return normalize(QuasiInequality{{}, {*i}});
    return normalize(QuasiInequality{{}, std::get<MetaConjunction>(s).items});
}

AlbaOutcome run(const Statement& s) {
    if (auto* p = std::get_if<Pi2Statement>(&s)) return run_alba_pi2(*p);
    return run_alba(as_quasi(s));
}

bool certified(const Statement& s) {
    if (auto* p = std::get_if<Pi2Statement>(&s)) return check_inductive_pi2(*p).accepted;
    return find_certificate(as_quasi(s)).has_value();
}

bool restricted(const Statement& s) {
    VocabularyReport v = analyze_vocabulary(s);
    if (!v.nominals.empty() || v.has_black || v.has_dotted) return false;
    if (auto* p = std::get_if<Pi2Statement>(&s)) return check_inductive_pi2(*p).accepted;
    return check_restricted_inductive_quasi(as_quasi(s)).accepted;
}

struct Result {
    bool pass;
    std::string detail;
};

void report(int n, const Result& r) {
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << std::endl;
}

// 1. golden correspondents
Result golden() {
    struct G {
        const char* statement;
        const char* target;
    };
    const G goldens[] = {
        {"p prec q => p <= q", "forall w. R(w,w)"},
        {"p prec q => ~q prec ~p", "forall w v. (R(w,v) -> R(v,w))"},
        {"p prec q => dia p prec dia q", "forall w v u. (R'(v,w) & R(v,u) -> exists t. (R(w,t) & R'(u,t)))"},
        {"p prec q => E c.(p prec c & c prec q)", "forall w v u. (R(w,v) & R(v,u) -> R(w,u))"},
    };
    double worst = 0;
    std::string why;
    for (const auto& g : goldens) {
        auto t0 = Clock::now();
        Statement s = parse_statement(g.statement);
        AlbaOutcome o = run(s);
        if (!o.success) {
            why += std::string(" engine failed on ") + g.statement + ";";
            continue;
        }
        FOFormula fo = correspondent(o.pure_quasis);
        // the budget covers the engine, the translation and the library oracle on the output
        OracleVerdict self = equivalence_oracle(s, fo);
        double run_time = since(t0);
        worst = std::max(worst, run_time);
        if (!self.equivalent) why += std::string(" output not equivalent to ") + g.statement + ";";
        FOFormula target = parse_fo(g.target);
        CompiledFO compiled(fo);
        long mismatches = 0;
        naive::each_frame(kOracleSize, [&](const FiniteFrame& F) {
            if (compiled.valid_on(F) != naive::fo_valid(naive::from(F), target)) ++mismatches;
        });
        if (mismatches) why += " " + std::to_string(mismatches) + " counterexamples for " + g.statement + ";";
        if (run_time >= kGoldenSeconds) why += std::string(" too slow: ") + g.statement + ";";
    }
    return {why.empty(), "slowest run with oracle " + std::to_string(worst) + " s" + why};
}

// 2. end-to-end soundness on generated inductive quasi-inequalities
Result soundness() {
    auto t0 = Clock::now();
    auto qs = gen::inductive_quasis(kQuasiSeed, kQuasiCount);
    std::size_t ok = 0;
    std::string why;
    OracleBudget b;
    b.max_size = kOracleSize;
    for (const auto& q : qs) {
        AlbaOutcome o = run_alba(q);
        if (!o.success) {
            why += " failure on " + render(q) + ";";
            continue;
        }
        OracleVerdict v = equivalence_oracle(q, correspondent(o.pure_quasis), b);
        if (v.equivalent)
            ++ok;
        else
            why += " counterexample for " + render(q) + ": " + frame_to_json(*v.counterexample) + ";";
    }
    double t = since(t0);
    bool pass = ok == qs.size() && qs.size() >= kQuasiCount && t < kSoundnessSeconds;
    return {pass, std::to_string(ok) + "/" + std::to_string(qs.size()) + " equivalent in " + std::to_string(t) + " s" + why};
}

QuasiInequality system_quasi(const System& s) { return QuasiInequality{s.inequalities, {s.goal}}; }

bool valid_all(const naive::Frame& F, const std::vector<QuasiInequality>& qs) {
    for (const auto& q : qs)
        if (!naive::valid(F, q)) return false;
    return true;
}

// 3. per-rule soundness on the catalogue
Result rules() {
    auto cases = gen::rule_catalogue();
    std::size_t ok = 0;
    std::string why;
    for (const auto& c : cases) {
        std::vector<QuasiInequality> before, after;
        try {
            if (c.preprocess) {
                before = {c.quasi};
                after = preprocess(c.quasi);
            } else {
                before = {system_quasi(c.before)};
                System s = c.ackermann ? eliminate(c.before, c.var, c.side)
                                       : apply_rule(c.before, RuleInstance{c.rule, c.index});
                after = {system_quasi(s)};
            }
        } catch (const std::exception& e) {
            why += " " + c.name + " did not apply (" + e.what() + ");";
            continue;
        }
        bool same = true;
        naive::each_frame(kRuleFrameSize, [&](const FiniteFrame& F) {
            naive::Frame N = naive::from(F);
            if (same && valid_all(N, before) != valid_all(N, after)) same = false;
        });
        if (same)
            ++ok;
        else
            why += " " + c.name + " unsound;";
    }
    bool pass = ok == cases.size() && cases.size() == kRuleCases;
    return {pass, std::to_string(ok) + "/" + std::to_string(cases.size()) + " rule instances sound" + why};
}

// 4. certified inputs succeed; the McKinsey-like input has no certificate and fails
Result success_theorem(const std::vector<CorpusItem>& corpus) {
    std::size_t checked = 0;
    std::string why;
    for (const auto& item : corpus) {
        if (!certified(item.statement)) continue;
        ++checked;
        if (!run(item.statement).success) why += " " + item.name + " failed;";
    }
    QuasiInequality mck = parse_quasi("T <= T => box dia p <= dia box p");
    bool none = !find_certificate(mck).has_value();
    bool fails = !run_alba(mck).success;
    if (!none) why += " McKinsey-like input got a certificate;";
    if (!fails) why += " McKinsey-like input succeeded;";
    return {why.empty(), std::to_string(checked) + " certified inputs succeeded; McKinsey-like: certificate=" +
                             (none ? "none" : "found") + ", engine " + (fails ? "Failure" : "Success") + why};
}

// 5. eval_formula against eval_fo of the standard translation
Result translation() {
    gen::Rng rng(kTupleSeed);
    gen::FormulaShape shape;
    shape.depth = 3;
    shape.noms = {"i", "j"};
    shape.expanded = true;
    int agree = 0;
    for (int t = 0; t < kStTuples; ++t) {
        Formula f = gen::formula(rng, shape);
        int n = 1 + std::uniform_int_distribution<int>(0, kOracleSize - 1)(rng);
        FiniteFrame F = gen::frame(rng, n);
        std::uniform_int_distribution<int> world(0, n - 1);
        std::uniform_int_distribution<int> set(0, (1 << n) - 1);
        Valuation V;
        V.props["p"] = static_cast<WorldSet>(set(rng));
        V.props["q"] = static_cast<WorldSet>(set(rng));
        V.nominals["i"] = world(rng);
        V.nominals["j"] = world(rng);
        int w = world(rng);
        std::map<std::string, int> env{{"x", w}, {"i", V.nominals["i"]}, {"j", V.nominals["j"]}};
        FOFormula st = standard_translation(f, "x");
        std::map<std::string, int> used;
        for (const auto& v : free_vars(st)) used[v] = env.at(v);
        if (eval_formula(F, V, w, f) == eval_fo(F, st, used, &V)) ++agree;
    }
    return {agree == kStTuples, std::to_string(agree) + "/" + std::to_string(kStTuples) + " tuples agree"};
}

// 6. topological monitor on restricted inputs
Result topology(const std::vector<CorpusItem>& corpus) {
    std::size_t checked = 0, ok = 0;
    std::string why;
    for (const auto& item : corpus) {
        if (!restricted(item.statement)) continue;
        ++checked;
        AlbaOutcome o = run(item.statement);
        TopologyReport r = check_topological_correctness(o.trace);
        if (o.success && r.all_correct)
            ++ok;
        else
            why += " " + item.name + ";";
    }
    return {checked > 0 && ok == checked,
            std::to_string(ok) + "/" + std::to_string(checked) + " restricted inputs topologically correct" + why};
}

// 7. first-half soundness
Result first_half_soundness() {
    auto es = gen::first_round_good(kExistsSeed, kExistsCount);
    std::size_t ok = 0;
    std::string why;
    for (const auto& e : es) {
        FirstHalfResult fh = first_half(e);
        if (!fh.success) {
            why += " stuck on " + render(e.inequalities) + ";";
            continue;
        }
        // output => exists c. input, and input => output for every c
        BitslicedStatement forward(Pi2Statement{fh.output.items, e.bound, e.inequalities});
        BitslicedStatement backward(QuasiInequality{e.inequalities, fh.output.items});
        bool same = true;
        for (int n = 1; n <= kOracleSize && same; ++n)
            for_each_frame(n, [&](const FiniteFrame& F) {
                same = forward.valid_on(F) && backward.valid_on(F);
                return same;
            });
        if (same)
            ++ok;
        else
            why += " not equivalent: " + render(e.inequalities) + " vs " + render(fh.output.items) + ";";
    }
    bool pass = ok == es.size() && es.size() >= kExistsCount;
    return {pass, std::to_string(ok) + "/" + std::to_string(es.size()) + " exists-statements equivalent" + why};
}

std::string digest(const std::vector<CorpusItem>& corpus) {
    std::string out;
    auto add = [&](const std::string& name, const AlbaOutcome& o) {
        out += "## " + name + "\n" + o.trace.to_jsonl();
        for (const auto& q : o.pure_quasis) out += render_closed(q) + "\n";
        if (o.success) out += render(correspondent(o.pure_quasis)) + "\n";
    };
    for (const auto& item : corpus) add(item.name, run(item.statement));
    auto es = gen::first_round_good(kExistsSeed, kExistsCount);
    for (std::size_t k = 0; k < es.size(); ++k) {
        FirstHalfResult fh = first_half(es[k]);
        out += "## exists-" + std::to_string(k) + "\n" + fh.trace.to_jsonl() + render(fh.output) + "\n";
    }
    return out;
}

// 8. determinism, inside one process and across two processes
Result determinism(const std::vector<CorpusItem>& corpus, const std::string& self, const fs::path& dir) {
    std::string a = digest(corpus);
    std::string b = digest(corpus);
    if (a != b) return {false, "two runs in one process differ"};
    fs::path tmp = fs::temp_directory_path();
    std::string tag = std::to_string(static_cast<long>(std::hash<std::string>{}(self) % 100000));
    fs::path f1 = tmp / ("alba_digest_1_" + tag), f2 = tmp / ("alba_digest_2_" + tag);
    for (const auto& f : {f1, f2}) {
        std::string cmd = "\"" + self + "\" \"" + dir.string() + "\" --digest \"" + f.string() + "\"";
        if (std::system(cmd.c_str()) != 0) return {false, "digest subprocess failed"};
    }
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string c = slurp(f1), d = slurp(f2);
    fs::remove(f1);
    fs::remove(f2);
    if (c != d) return {false, "two processes produced different digests"};
    if (c != a) return {false, "subprocess digest differs from the in-process one"};
    return {true, std::to_string(a.size()) + " bytes identical across 4 runs"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: alba_acceptance CORPUS_DIR [--digest FILE]\n";
        return 2;
    }
    fs::path dir = argv[1];
    std::vector<CorpusItem> corpus = full_corpus(dir);
    if (argc == 4 && std::string(argv[2]) == "--digest") {
        std::ofstream out(argv[3], std::ios::binary);
        out << digest(corpus);
        return out ? 0 : 2;
    }
    std::cout << "kernels: " << simd::active_kernels().name << ", corpus: " << corpus.size() << " inputs" << std::endl;
    std::vector<std::function<Result()>> criteria = {
        golden,
        soundness,
        rules,
        [&] { return success_theorem(corpus); },
        translation,
        [&] { return topology(corpus); },
        first_half_soundness,
        [&] { return determinism(corpus, fs::absolute(argv[0]).string(), fs::absolute(dir)); },
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Result r;
        try {
            r = criteria[k]();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        report(static_cast<int>(k + 1), r);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
