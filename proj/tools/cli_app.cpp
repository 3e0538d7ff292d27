#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "alba/classify.hpp"
#include "alba/engine.hpp"
#include "alba/fol.hpp"
#include "alba/pi2.hpp"
#include "alba/semantics.hpp"
#include "alba/syntax.hpp"

namespace alba::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::vector<std::string> files;
    std::string inline_text;
    std::string trace;
    bool check_topo = false;
    bool translate = false;
    int max_frame = 3;
    int max_vars = 2;
    std::string format = "text";
    std::string fo;     // verify: replaces the computed correspondent
    std::string frame;  // verify: a single frame file instead of enumeration
};

struct Input {
    std::string label;
    std::string text;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QuasiInequality to_quasi(const Statement& s) {
    if (auto* i = std::get_if<Inequality>(&s)) return normalize(QuasiInequality{{}, {*i}});
    if (auto* m = std::get_if<MetaConjunction>(&s)) return normalize(QuasiInequality{{}, m->items});
    return std::get<QuasiInequality>(s);
}

const char* eps_name(Polarity p) { return p == Polarity::One ? "1" : "d"; }

std::string certificate_text(const Certificate& c) {
    std::string s;
    for (const auto& [p, e] : c.eps.assignment) s += (s.empty() ? "" : " ") + std::string("eps(") + p + ")=" + eps_name(e);
    s += "; order";
    for (std::size_t k = 0; k < c.order.size(); ++k) s += (k ? " < " : " ") + c.order[k];
    return s;
}

Json certificate_json(const Certificate& c) {
    Json j;
    j["eps"] = Json::object();
    for (const auto& [p, e] : c.eps.assignment) j["eps"][p] = eps_name(e);
    j["order"] = c.order;
    return j;
}

Json strings(const std::vector<Inequality>& is) {
    Json a = Json::array();
    for (const auto& i : is) a.push_back(render(i));
    return a;
}

struct Context {
    const Config& cfg;
    std::ostream& out;
    std::ostream& err;
    bool json() const { return cfg.format == "json"; }
};

AlbaOutcome run_engine(const Statement& s) {
    if (auto* p = std::get_if<Pi2Statement>(&s)) return run_alba_pi2(*p);
    return run_alba(to_quasi(s));
}

void write_trace(const Context& cx, const AlbaOutcome& o, std::size_t index, std::size_t count) {
    if (cx.cfg.trace.empty()) return;
    std::string path = cx.cfg.trace;
    if (count > 1) {
        // one trace per input: trace.jsonl becomes trace.1.jsonl, trace.2.jsonl, ...
        auto dot = path.rfind('.');
        std::string suffix = "." + std::to_string(index + 1);
        if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
            path += suffix;
        else
            path.insert(dot, suffix);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << o.trace.to_jsonl();
}

int cmd_classify(const Context& cx, const Input& in, const Statement& s) {
    ClassificationReport r;
    bool restricted = false;
    if (auto* p = std::get_if<Pi2Statement>(&s)) {
        r = check_inductive_pi2(*p);
    } else {
        QuasiInequality q = to_quasi(s);
        std::optional<Certificate> c = find_certificate(q);
        if (c) {
            r = check_inductive_quasi(q, *c);
        } else {
            r.diagnostic = "no order-type and dependence order make it inductive";
        }
        restricted = r.accepted && check_restricted_inductive_quasi(q).accepted;
    }
    if (cx.json()) {
        Json j;
        j["input"] = in.label;
        j["statement"] = render(s);
        j["accepted"] = r.accepted;
        j["restricted"] = restricted;
        j["certificate"] = r.certificate ? certificate_json(*r.certificate) : Json(nullptr);
        Json tags = Json::array();
        for (const auto& t : r.tags) tags.push_back({{"inequality", render(t.ineq)}, {"tag", to_string(t.tag)}});
        j["tags"] = tags;
        j["diagnostic"] = r.diagnostic;
        cx.out << j.dump() << "\n";
    } else {
        cx.out << in.label << ": " << render(s) << "\n";
        cx.out << "verdict: " << (r.accepted ? "inductive" : "not inductive") << (restricted ? " (restricted)" : "")
               << "\n";
        if (r.certificate) cx.out << "certificate: " << certificate_text(*r.certificate) << "\n";
        for (const auto& t : r.tags) cx.out << "  " << to_string(t.tag) << ": " << render(t.ineq) << "\n";
        if (!r.diagnostic.empty()) cx.out << "reason: " << r.diagnostic << "\n";
    }
    return r.accepted ? kOk : kNo;
}

Json topology_json(const TopologyReport& t) {
    Json steps = Json::array();
    for (const auto& v : t.steps)
        steps.push_back({{"step", v.step}, {"correct", v.correct}, {"offending", v.offending}});
    return {{"all_correct", t.all_correct}, {"steps", steps}};
}

int cmd_run(const Context& cx, const Input& in, const Statement& s, std::size_t index, std::size_t count) {
    AlbaOutcome o = run_engine(s);
    write_trace(cx, o, index, count);
    std::optional<TopologyReport> topo;
    if (cx.cfg.check_topo) topo = check_topological_correctness(o.trace);
    std::optional<FOFormula> fo;
    if (o.success && cx.cfg.translate) fo = correspondent(o.pure_quasis);
    if (cx.json()) {
        Json j;
        j["input"] = in.label;
        j["statement"] = render(s);
        j["success"] = o.success;
        j["certificate"] = o.certificate ? certificate_json(*o.certificate) : Json(nullptr);
        Json pure = Json::array();
        for (const auto& q : o.pure_quasis) pure.push_back(render_closed(q));
        j["pure"] = pure;
        if (fo) j["fo"] = render(*fo);
        if (topo) j["topology"] = topology_json(*topo);
        if (!o.success) {
            j["message"] = o.message;
            j["stuck"] = strings(o.stuck_system.inequalities);
            j["unresolved"] = o.unresolved;
        }
        cx.out << j.dump() << "\n";
    } else {
        cx.out << in.label << ": " << render(s) << "\n";
        if (o.success) {
            for (const auto& q : o.pure_quasis) cx.out << render_closed(q) << "\n";
            if (fo) cx.out << "fo: " << render(*fo) << "\n";
        } else {
            cx.out << "failure: " << o.message << "\n";
            for (const auto& i : o.stuck_system.inequalities) cx.out << "  " << render(i) << "\n";
            if (!o.unresolved.empty()) {
                cx.out << "unresolved:";
                for (const auto& p : o.unresolved) cx.out << " " << p;
                cx.out << "\n";
            }
        }
        if (topo) {
            cx.out << "topology: " << (topo->all_correct ? "correct" : "incorrect") << "\n";
            for (const auto& v : topo->steps)
                if (!v.correct) cx.out << "  step " << v.step << ": " << v.offending << "\n";
        }
    }
    return o.success ? kOk : kNo;
}

int cmd_translate(const Context& cx, const Input& in, const Statement& s) {
    if (std::holds_alternative<Pi2Statement>(s)) throw Error("a Pi2 statement has no first-order translation");
    FOFormula raw = std::visit(
        [](const auto& x) -> FOFormula {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Pi2Statement>)
                return FOFormula::truth();
            else
                return standard_translation(x, true);
        },
        s);
    FOFormula fo = simplify_fo(raw);
    if (cx.json()) {
        Json j;
        j["input"] = in.label;
        j["statement"] = render(s);
        j["fo"] = render(fo);
        j["sexpr"] = to_sexpr(fo);
        cx.out << j.dump() << "\n";
    } else {
        cx.out << render(fo) << "\n";
    }
    return kOk;
}

int cmd_verify(const Context& cx, const Input& in, const Statement& s) {
    const Config& cfg = cx.cfg;
    if (cfg.max_frame < 1 || cfg.max_vars < 1) throw Error("budgets must be positive");
    int vars = static_cast<int>(analyze_vocabulary(s).prop_vars.size());
    if (vars > cfg.max_vars)
        throw BudgetExceeded(std::to_string(vars) + " variables exceed --max-vars " + std::to_string(cfg.max_vars));
    if (cfg.max_frame > 4) throw BudgetExceeded("--max-frame above 4 is out of budget");
    FOFormula fo;
    if (!cfg.fo.empty()) {
        fo = parse_fo(cfg.fo);
    } else {
        AlbaOutcome o = run_engine(s);
        if (!o.success) {
            if (cx.json())
                cx.out << Json{{"input", in.label}, {"verdict", "failure"}, {"message", o.message}}.dump() << "\n";
            else
                cx.out << in.label << ": engine failure: " << o.message << "\n";
            return kNo;
        }
        fo = correspondent(o.pure_quasis);
    }
    OracleVerdict v;
    if (!cfg.frame.empty()) {
        FiniteFrame F = frame_from_json(slurp(cfg.frame));
        if (F.size > 4) throw BudgetExceeded("frame of size " + std::to_string(F.size) + " is out of budget");
        v.frames_checked = 1;
        v.statement_valid = BitslicedStatement(s).valid_on(F);
        v.fo_true = CompiledFO(fo).valid_on(F);
        if (v.statement_valid != v.fo_true) {
            v.equivalent = false;
            v.counterexample = F;
        }
    } else {
        OracleBudget b;
        b.max_size = std::min(cfg.max_frame, 3);
        if (cfg.max_frame == 4) {
            b.sampled_size = 4;
            b.samples = 2000;
        }
        v = equivalence_oracle(s, fo, b);
    }
    if (cx.json()) {
        Json j;
        j["input"] = in.label;
        j["fo"] = render(fo);
        j["verdict"] = v.equivalent ? "equivalent" : "counterexample";
        j["frames_checked"] = v.frames_checked;
        if (v.counterexample) {
            j["counterexample"] = Json::parse(frame_to_json(*v.counterexample));
            j["statement_valid"] = v.statement_valid;
            j["fo_true"] = v.fo_true;
        }
        cx.out << j.dump() << "\n";
    } else {
        cx.out << in.label << ": " << render(s) << "\n" << "fo: " << render(fo) << "\n";
        if (v.equivalent) {
            cx.out << "Equivalent (" << v.frames_checked << " frames)\n";
        } else {
            cx.out << "Counterexample: " << frame_to_json(*v.counterexample) << "\n";
            cx.out << "statement " << (v.statement_valid ? "valid" : "not valid") << ", fo "
                   << (v.fo_true ? "true" : "false") << "\n";
        }
    }
    return v.equivalent ? kOk : kNo;
}

struct DemoCase {
    const char* name;
    const char* statement;
    const char* target;
};

constexpr DemoCase kDemo[] = {
    {"reflexivity", "p prec q => p <= q", "forall w. R(w,w)"},
    {"symmetry", "p prec q => ~q prec ~p", "forall w v. (R(w,v) -> R(v,w))"},
    {"proximity", "p prec q => dia p prec dia q",
     "forall w v u. (R'(v,w) & R(v,u) -> exists t. (R(w,t) & R'(u,t)))"},
    {"transitivity", "p prec q => E c.(p prec c & c prec q)", "forall w v u. (R(w,v) & R(v,u) -> R(w,u))"},
};

int cmd_demo(const Context& cx) {
    int code = kOk;
    Json all = Json::array();
    for (const auto& d : kDemo) {
        Statement s = parse_statement(d.statement);
        AlbaOutcome o = run_engine(s);
        bool ok = o.success;
        std::string fo_text;
        OracleVerdict v;
        if (ok) {
            FOFormula fo = correspondent(o.pure_quasis);
            fo_text = render(fo);
            v = equivalence_oracle(s, parse_fo(d.target));
            OracleVerdict w = equivalence_oracle(s, fo);
            ok = v.equivalent && w.equivalent && check_topological_correctness(o.trace).all_correct;
        }
        if (!ok) code = kNo;
        if (cx.json()) {
            Json pure = Json::array();
            for (const auto& q : o.pure_quasis) pure.push_back(render_closed(q));
            all.push_back({{"name", d.name}, {"statement", d.statement}, {"pure", pure}, {"fo", fo_text},
                           {"target", d.target}, {"ok", ok}});
        } else {
            cx.out << d.name << ": " << d.statement << "\n";
            for (const auto& q : o.pure_quasis) cx.out << "  " << render_closed(q) << "\n";
            cx.out << "  fo: " << fo_text << "\n";
            cx.out << "  " << (ok ? "ok" : "FAILED") << " against " << d.target << "\n";
        }
    }
    if (cx.json()) cx.out << all.dump() << "\n";
    return code;
}

void add_common(CLI::App* sub, Config& cfg, bool engine_flags) {
    sub->add_option("files", cfg.files, "statement files, one statement each");
    sub->add_option("-e,--expr", cfg.inline_text, "inline statement");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    if (engine_flags) {
        sub->add_option("--trace", cfg.trace, "write the derivation trace as JSON lines");
        sub->add_flag("--check-topo", cfg.check_topo, "run the topological-correctness monitor");
        sub->add_flag("--translate", cfg.translate, "print the first-order correspondent");
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"ALBA correspondence engine for modal subordination algebras"};
    app.require_subcommand(1);
    auto* classify = app.add_subcommand("classify", "check inductiveness and print a certificate");
    auto* run_cmd = app.add_subcommand("run", "run the engine and print pure quasi-inequalities");
    auto* translate = app.add_subcommand("translate", "standard translation of the input, simplified");
    auto* verify = app.add_subcommand("verify", "compare the input with its correspondent on finite frames");
    auto* demo = app.add_subcommand("demo", "run the four worked examples");
    add_common(classify, cfg, false);
    add_common(run_cmd, cfg, true);
    add_common(translate, cfg, false);
    add_common(verify, cfg, false);
    verify->add_option("--max-frame", cfg.max_frame, "largest frame size (4 samples frames of size 4)");
    verify->add_option("--max-vars", cfg.max_vars, "largest number of propositional variables");
    verify->add_option("--fo", cfg.fo, "first-order formula to check instead of the computed one");
    verify->add_option("--frame", cfg.frame, "check one frame given as a JSON file");
    demo->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    Context cx{cfg, out, err};
    if (demo->parsed()) {
        try {
            return cmd_demo(cx);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kError;
        }
    }
    if (cfg.files.empty() == cfg.inline_text.empty()) {
        err << "error: give either statement files or -e, not both\n";
        return kError;
    }
    std::vector<Input> inputs;
    if (!cfg.inline_text.empty()) {
        inputs.push_back({"<expr>", cfg.inline_text});
    } else {
        for (const auto& f : cfg.files) {
            try {
                inputs.push_back({f, slurp(f)});
            } catch (const Error& e) {
                err << "error: " << e.what() << "\n";
                return kError;
            }
        }
    }
    int code = kOk;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        const Input& in = inputs[k];
        int c;
        try {
            Statement s = parse_statement(in.text);
            if (classify->parsed())
                c = cmd_classify(cx, in, s);
            else if (run_cmd->parsed())
                c = cmd_run(cx, in, s, k, inputs.size());
            else if (translate->parsed())
                c = cmd_translate(cx, in, s);
            else
                c = cmd_verify(cx, in, s);
        } catch (const ParseError& e) {
            err << in.label << ": " << e.what() << "\n";
            c = kError;
        } catch (const std::exception& e) {
            err << in.label << ": error: " << e.what() << "\n";
            c = kError;
        }
        code = std::max(code, c);
    }
    return code;
}

}  // namespace alba::cli
