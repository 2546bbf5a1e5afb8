#include "limitada/report.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "limitada/analysis.hpp"
#include "limitada/binseq.hpp"
#include "limitada/common_guess.hpp"
#include "limitada/errors.hpp"
#include "limitada/limited.hpp"
#include "limitada/run.hpp"
#include "limitada/transforms.hpp"
#include "limitada/witnesses.hpp"

namespace limitada {

using nlohmann::json;

namespace {

constexpr std::size_t kBytesPerSubsetState = 512;

Word unary(long long m) { return Word(static_cast<std::size_t>(m), 0); }

std::string agree_upto(const LanguageOracle& a, const LanguageOracle& b, int max_len) {
    Equivalence e = equivalent_upto(a, b, max_len);
    if (e.equal) return "agree<=" + std::to_string(max_len);
    return "differ at '" + a.alphabet.decode(*e.witness) + "'";
}

std::string agree_unary(const std::function<bool(long long)>& got, const UnaryPredicate& want, long long max_len) {
    for (long long m = 0; m <= max_len; ++m)
        if (got(m) != want(m)) return "differ at a^" + std::to_string(m);
    return "agree<=" + std::to_string(max_len);
}

bool blocks_in(const TwoWayMachine& block_machine, const Word& w, int dollar) {
    Word block;
    for (int s : w) {
        if (s != dollar) {
            block.push_back(s);
            continue;
        }
        if (!accepts_2way(block_machine, block)) return false;
        block.clear();
    }
    return block.empty();
}

ReportRow row_of(const char* pipeline, const char* source, const char* target, int n) {
    ReportRow r;
    r.pipeline = pipeline;
    r.source = source;
    r.target = target;
    r.n = n;
    return r;
}

using Runner = std::function<ReportRow(int n, const Budgets&)>;

ReportRow one_way_chain(ReportRow r, const OneWayMachine& nfa, const Budgets& b) {
    OneWayMachine d = powerset(nfa, b.subset_states);
    r.converted = d.states();
    r.minimal = minimize_dfa(d).states();
    return r;
}

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> reg = {
        {"mn-cg-to-1dfa",
         [](int n, const Budgets& b) {
             ReportRow r = row_of("mn-cg-to-1dfa", "cg-2dfa", "1dfa", n);
             CommonGuessMachine cg = m_n_cg(n);
             r.generated = cg.states();
             r.note = cg.underlying().note;
             OneWayMachine nfa = project_cg_to_1nfa(cg, b.subset_states);
             OneWayMachine d = powerset(nfa, b.subset_states);
             r.converted = d.states();
             OneWayMachine m = minimize_dfa(d);
             r.minimal = m.states();
             long long len = b.max_len > 0 ? b.max_len : (n == 1 ? 200 : 1000);
             r.oracle = agree_unary([&](long long k) { return accepts_1way(m, unary(k)).accepted; }, m_n_lengths(n), len);
             return r;
         }},
        {"mn-small-1nfa",
         [](int n, const Budgets& b) {
             ReportRow r = row_of("mn-small-1nfa", "1nfa", "1dfa", n);
             OneWayMachine a = m_n_small_1nfa(n, b.subset_states);
             r.generated = a.states();
             r.note = a.note;
             r = one_way_chain(r, a, b);
             long long len = b.max_len > 0 ? b.max_len : 500;
             r.oracle = agree_unary([&](long long k) { return accepts_1way(a, unary(k)).accepted; }, m_n_lengths(n), len);
             return r;
         }},
        {"mn-cg-to-1la",
         [](int n, const Budgets& b) {
             ReportRow r = row_of("mn-cg-to-1la", "cg-2dfa", "1la", n);
             CommonGuessMachine cg = m_n_cg(n);
             r.generated = cg.states();
             r.note = cg.underlying().note;
             OneLimitedMachine la = cg_to_1la(cg);
             r.converted = la.states();
             long long len = b.max_len > 0 ? b.max_len : 8;
             r.oracle = agree_unary([&](long long k) { return accepts_1la(la, unary(k), b.configs); }, m_n_lengths(n), len);
             return r;
         }},
        {"ln-cg-to-d1la",
         [](int n, const Budgets& b) {
             ReportRow r = row_of("ln-cg-to-d1la", "cg-2dfa", "d1la", n);
             WitnessBundle w = l_n_bundle(n);
             r.generated = w.cg->states();
             r.converted = w.d1la->states();
             r.note = w.cg->underlying().note;
             r.minimal = minimize_dfa(powerset(project_cg_to_1nfa(*w.cg, b.subset_states), b.subset_states)).states();
             const long long target = binseq_length(n);
             long long len = b.max_len > 0 ? b.max_len : std::max<long long>(40, target + 4);
             r.oracle = agree_unary([&](long long k) { return accepts_1la(*w.d1la, unary(k), b.configs); },
                                    [target](long long k) { return k == target; }, len);
             return r;
         }},
        {"fact-2dfa-to-1dfa",
         [](int n, const Budgets& b) {
             ReportRow r = row_of("fact-2dfa-to-1dfa", "2dfa", "1dfa", n);
             TwoWayMachine m = is_fact_binseq_2dfa(n);
             r.generated = m.states();
             r.note = m.note;
             OneWayMachine d = shepherdson(m, b.subset_states);
             r.converted = d.states();
             r.minimal = minimize_dfa(d).states();
             const std::string bn = full_binary_sequence(n);
             LanguageOracle want{m.alphabet(), [bn, al = m.alphabet()](const Word& w) {
                                     return bn.find(al.decode(w)) != std::string::npos;
                                 }};
             r.oracle = agree_upto(oracle_of(d), want, b.max_len > 0 ? b.max_len : 8);
             return r;
         }},
        {"ifbs-2dfa-to-1dfa",
         [](int n, const Budgets& b) {
             ReportRow r = row_of("ifbs-2dfa-to-1dfa", "2dfa", "1dfa", n);
             TwoWayMachine m = ifbs_2dfa(n);
             r.generated = m.states();
             r.note = m.note;
             OneWayMachine d = shepherdson(m, b.subset_states);
             r.converted = d.states();
             r.minimal = minimize_dfa(d).states();
             TwoWayMachine suff = suffixes_2dfa(n);
             const int dol = m.alphabet().id("$");
             LanguageOracle want{m.alphabet(), [suff, dol](const Word& w) {
                                     if (w.empty() || !blocks_in(suff, w, dol)) return false;
                                     std::size_t first = 0;
                                     while (w[first] != dol) ++first;
                                     for (std::size_t i = 0; i < w.size(); ++i)
                                         if (w[i] != w[i % (first + 1)]) return false;
                                     return true;
                                 }};
             r.oracle = agree_upto(oracle_of(d), want, b.max_len > 0 ? b.max_len : 7);
             return r;
         }},
        {"dollar-star",
         [](int n, const Budgets& b) {
             ReportRow r = row_of("dollar-star", "2dfa", "2dfa", n);
             // n+1 cells of 0, then the right endmarker: n+1 states.
             TwoWayMachine m(Alphabet({"0"}), n + 1);
             for (int q = 0; q < n; ++q) m.add(q, 0, q + 1, 1);
             m.set_final(n);
             m.note = "the word 0^" + std::to_string(n);
             r.generated = m.states();
             r.note = m.note;
             TwoWayMachine s = dollar_star(m);
             r.converted = s.states();
             const int dol = s.alphabet().id("$");
             LanguageOracle want{s.alphabet(), [m, dol](const Word& w) { return blocks_in(m, w, dol); }};
             r.oracle = agree_upto(oracle_of(s), want, b.max_len > 0 ? b.max_len : 10);
             return r;
         }},
    };
    return reg;
}

}  // namespace

Budgets budgets_from_env() {
    Budgets b;
    if (const char* mb = std::getenv("LIMITADA_BUDGET_MB")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(mb, &end, 10);
        if (end == mb || *end != '\0' || v == 0) throw InputError("LIMITADA_BUDGET_MB must be a positive integer");
        b.subset_states = static_cast<std::size_t>(v) * 1024 * 1024 / kBytesPerSubsetState;
    }
    return b;
}

std::vector<std::string> pipeline_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

ExperimentSpec parse_experiment_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed experiment spec at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    ExperimentSpec spec;
    try {
        spec.name = j.value("name", std::string("experiment"));
        for (const auto& r : j.value("rows", json::array())) {
            ExperimentRow row;
            row.pipeline = r.at("pipeline").get<std::string>();
            if (!registry().count(row.pipeline)) throw InputError("unknown pipeline: " + row.pipeline);
            const json& n = r.at("n");
            if (n.is_array()) {
                row.n_lo = n.at(0).get<int>();
                row.n_hi = n.at(1).get<int>();
            } else {
                row.n_lo = row.n_hi = n.get<int>();
            }
            if (row.n_lo < 1 || row.n_hi < row.n_lo) throw InputError("bad n range for " + row.pipeline);
            if (r.contains("expect")) {
                const json& e = r.at("expect");
                row.expect_generated = e.value("generated", -1LL);
                row.expect_converted = e.value("converted", -1LL);
                row.expect_minimal = e.value("minimal", -1LL);
            }
            spec.rows.push_back(row);
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad experiment spec: ") + e.what());
    }
    return spec;
}

ExperimentSpec default_experiment() {
    ExperimentSpec s;
    s.name = "default";
    s.rows.push_back({"mn-cg-to-1dfa", 1, 1, -1, -1, 30});
    s.rows.push_back({"mn-small-1nfa", 1, 2, -1, -1, -1});
    s.rows.push_back({"mn-cg-to-1la", 1, 1, -1, -1, -1});
    s.rows.push_back({"ln-cg-to-d1la", 1, 3, -1, -1, -1});
    s.rows.push_back({"fact-2dfa-to-1dfa", 1, 2, -1, -1, -1});
    s.rows.push_back({"ifbs-2dfa-to-1dfa", 1, 1, -1, -1, -1});
    s.rows.push_back({"dollar-star", 1, 1, 2, 5, -1});
    return s;
}

std::vector<ReportRow> run_experiment(const ExperimentSpec& spec, const Budgets& budgets) {
    std::vector<ReportRow> out;
    for (const auto& row : spec.rows) {
        auto it = registry().find(row.pipeline);
        if (it == registry().end()) throw InputError("unknown pipeline: " + row.pipeline);
        for (int n = row.n_lo; n <= row.n_hi; ++n) {
            ReportRow r = it->second(n, budgets);
            r.ok = r.oracle.rfind("agree", 0) == 0;
            if (row.expect_generated >= 0 && r.generated != row.expect_generated) r.ok = false;
            if (row.expect_converted >= 0 && r.converted != row.expect_converted) r.ok = false;
            if (row.expect_minimal >= 0 && r.minimal != row.expect_minimal) r.ok = false;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string report_tsv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "pipeline\tsource\ttarget\tn\tgenerated\tconverted\tminimal\toracle\tok\tnote\n";
    auto num = [](long long v) { return v < 0 ? std::string("-") : std::to_string(v); };
    for (const auto& r : rows)
        os << r.pipeline << '\t' << r.source << '\t' << r.target << '\t' << r.n << '\t' << num(r.generated) << '\t'
           << num(r.converted) << '\t' << num(r.minimal) << '\t' << r.oracle << '\t' << (r.ok ? "yes" : "no") << '\t'
           << r.note << '\n';
    return os.str();
}

std::string report_json(const std::string& name, const std::vector<ReportRow>& rows) {
    json j;
    j["name"] = name;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json x = {{"pipeline", r.pipeline}, {"source", r.source}, {"target", r.target}, {"n", r.n},
                  {"oracle", r.oracle},     {"ok", r.ok},         {"note", r.note}};
        auto put = [&](const char* k, long long v) { x[k] = v < 0 ? json(nullptr) : json(v); };
        put("generated", r.generated);
        put("converted", r.converted);
        put("minimal", r.minimal);
        j["rows"].push_back(x);
    }
    return j.dump(2);
}

}  // namespace limitada
