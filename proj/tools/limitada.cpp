#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "limitada/analysis.hpp"
#include "limitada/binseq.hpp"
#include "limitada/errors.hpp"
#include "limitada/interchange.hpp"
#include "limitada/ops.hpp"
#include "limitada/report.hpp"
#include "limitada/run.hpp"
#include "limitada/transforms.hpp"

using namespace limitada;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Options {
    int n = 1;
    std::string what;
    std::string lang;
    std::string as;
    std::string op;
    std::vector<std::string> in;
    std::string out;
    std::optional<std::string> word;
    std::string expect;
    std::string spec;
    std::string format = "tsv";
    std::string analysis;
    int max_len = 0;
    std::size_t budget_configs = 20'000'000;
    Budgets budgets;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

AnyMachine load(const Options& o, std::size_t i = 0) {
    if (o.in.size() <= i) {
        if (i == 0) return parse_machine(slurp("-"));
        throw InputError("this operation needs " + std::to_string(i + 1) + " --in files");
    }
    return parse_machine(slurp(o.in[i]));
}

int cmd_gen_binseq(const Options& o) {
    if (o.what == "bn")
        emit(o, full_binary_sequence(o.n));
    else
        emit(o, serialize(generate_binseq(o.what, o.n)));
    return kOk;
}

int cmd_gen_witness(const Options& o) {
    emit(o, serialize(generate_witness(o.lang, o.as, o.n, o.budgets)));
    return kOk;
}

int cmd_convert(const Options& o) {
    std::vector<AnyMachine> in;
    in.push_back(load(o));
    if (o.op == "seq-intersect") in.push_back(load(o, 1));
    emit(o, serialize(convert(o.op, in, o.budgets)));
    return kOk;
}

int cmd_run(const Options& o) {
    if (o.in.empty()) throw InputError("run needs --machine");
    AnyMachine m = parse_machine(slurp(o.in[0]));
    std::vector<std::string> words;
    if (o.word) {
        words.push_back(*o.word);
    } else {
        std::string line;
        while (std::getline(std::cin, line)) words.push_back(line);
    }
    bool all = true;
    std::ostringstream os;
    for (const auto& w : words) {
        Decision v = decide(m, w, o.budgets);
        os << (v.accepted ? "accept" : "reject");
        if (!v.detail.empty()) os << '\t' << v.detail;
        os << '\n';
        bool want = o.expect != "reject";
        if (v.accepted != want) all = false;
    }
    emit(o, os.str());
    return all ? kOk : kViolation;
}

json profile_json(const UnaryProfile& p) {
    return {{"window", static_cast<long long>(p.bits.size()) - 1},
            {"preperiod", p.preperiod},
            {"period", p.period},
            {"window_consistent", p.window_consistent}};
}

int cmd_analyze(const Options& o) {
    json j;
    j["n"] = o.n;
    bool ok = true;
    if (o.analysis == "cyclicity") {
        BigInt c = primorial(k_of(o.n));
        j["analysis"] = "cyclicity";
        j["claimed_period"] = c.str();
        if (c > BigInt(o.budgets.subset_states))
            throw ResourceError("claimed period exceeds the state budget", o.budgets.subset_states);
        long long C = c.convert_to<long long>();
        long long window = o.max_len > 0 ? o.max_len : 4 * C;
        UnaryPredicate member = m_n_lengths(o.n);
        j["profile"] = profile_json(cyclic_profile(member, window));
        OneWayMachine cyc = cyclic_dfa_from_oracle(member, C);
        long long minimal = minimize_dfa(cyc).states();
        j["cycle_states"] = cyc.states();
        j["minimal_states"] = minimal;
        j["properly_cyclic"] = minimal == C;
        ok = minimal == C;
    } else if (o.analysis == "fooling") {
        auto pairs = fooling_pairs_for_complement(o.n);
        FoolingCheck f = check_extended_fooling_set(pairs, complement(m_n_oracle(o.n)));
        j["analysis"] = "fooling";
        j["pairs"] = pairs.size();
        j["ok"] = f.ok;
        j["not_in_language"] = f.not_in_language;
        j["cross_failures"] = json::array();
        for (auto [a, b] : f.cross_failures) j["cross_failures"].push_back({a, b});
        ok = f.ok;
    } else if (o.analysis == "bounds") {
        BoundReport r = bound_report(o.n);
        j["analysis"] = "bounds";
        j["k"] = r.k;
        j["prime_count"] = r.prime_count;
        j["checks"] = json::array();
        for (const auto& c : r.checks)
            j["checks"].push_back({{"name", c.name},
                                   {"lhs", c.lhs},
                                   {"relation", c.relation},
                                   {"rhs", c.rhs},
                                   {"holds", c.holds},
                                   {"required", c.required},
                                   {"note", c.note}});
        j["required_hold"] = r.required_hold();
        ok = r.required_hold();
    } else {
        throw CLI::ValidationError("analyze", "unknown analysis " + o.analysis);
    }
    emit(o, j.dump(2));
    return ok ? kOk : kViolation;
}

int cmd_report(const Options& o) {
    ExperimentSpec spec = o.spec.empty() ? default_experiment() : parse_experiment_spec(slurp(o.spec));
    auto rows = run_experiment(spec, o.budgets);
    emit(o, o.format == "json" ? report_json(spec.name, rows) : report_tsv(rows));
    for (const auto& r : rows)
        if (!r.ok) return kViolation;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-way, 1-limited and common-guess automata toolkit"};
    app.require_subcommand(1);
    Options o;

    auto shared = [&](CLI::App* c) {
        c->add_option("--out", o.out, "Output file (default stdout)");
        c->add_option("--max-len", o.max_len, "Longest word to enumerate")->check(CLI::NonNegativeNumber);
        c->add_option("--budget-configs", o.budget_configs, "Configuration/annotation budget")
            ->check(CLI::PositiveNumber);
    };

    auto* gen = app.add_subcommand("gen", "Generate machines");
    gen->require_subcommand(1);
    auto* gen_bin = gen->add_subcommand("binseq", "Binary-sequence constructions");
    gen_bin->add_option("--n", o.n)->check(CLI::Range(1, 20));
    gen_bin->add_option("--what", o.what, "bn, F, Fn, fact2dfa or family:<kind>:<length>")->required();
    shared(gen_bin);
    auto* gen_wit = gen->add_subcommand("witness", "Witness languages");
    gen_wit->add_option("--n", o.n)->check(CLI::Range(1, 20));
    gen_wit->add_option("--lang", o.lang)->required()->check(
        CLI::IsMember({"Ln", "Mn", "IFBS", "SamePrefix", "Suffixes"}));
    gen_wit->add_option("--as", o.as)->required()->check(CLI::IsMember({"cg", "d1la", "1la", "2dfa", "1nfa"}));
    shared(gen_wit);

    auto* conv = app.add_subcommand("convert", "Apply one transform");
    conv->add_option("--op", o.op)->required()->check(CLI::IsMember(convert_ops()));
    conv->add_option("--in", o.in, "Input machine(s); stdin when absent");
    shared(conv);

    auto* run = app.add_subcommand("run", "Decide membership");
    run->add_option("--machine,--in", o.in)->required()->expected(1);
    run->add_option("--word", o.word, "Word; otherwise one word per stdin line");
    run->add_option("--expect", o.expect)->check(CLI::IsMember({"accept", "reject"}));
    shared(run);

    auto* an = app.add_subcommand("analyze", "Unary-language analyses");
    an->add_option("analysis", o.analysis)->required()->check(CLI::IsMember({"cyclicity", "fooling", "bounds"}));
    an->add_option("--n", o.n)->check(CLI::Range(0, 12));
    shared(an);

    auto* rep = app.add_subcommand("report", "Run an experiment spec");
    rep->add_option("--spec", o.spec, "Experiment JSON (default experiment when absent)");
    rep->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}));
    shared(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        o.budgets = budgets_from_env();
        o.budgets.configs = o.budget_configs;
        o.budgets.max_len = o.max_len;
        if (gen_bin->parsed()) return cmd_gen_binseq(o);
        if (gen_wit->parsed()) return cmd_gen_witness(o);
        if (conv->parsed()) return cmd_convert(o);
        if (run->parsed()) return cmd_run(o);
        if (an->parsed()) return cmd_analyze(o);
        if (rep->parsed()) return cmd_report(o);
    } catch (const ResourceError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const CLI::Error& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError& e) {
        std::cerr << "not applicable: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
