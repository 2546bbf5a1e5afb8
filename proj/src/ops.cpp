#include "limitada/ops.hpp"

#include "limitada/binseq.hpp"
#include "limitada/common_guess.hpp"
#include "limitada/errors.hpp"
#include "limitada/limited.hpp"
#include "limitada/run.hpp"
#include "limitada/transforms.hpp"
#include "limitada/witnesses.hpp"

namespace limitada {

namespace {

template <class T>
const T& expect_kind(const AnyMachine& m, const std::string& op, const char* wanted) {
    if (auto* p = std::get_if<T>(&m)) return *p;
    throw InputError("op " + op + " needs a " + wanted + " machine, got " + kind_of(m));
}

}  // namespace

AnyMachine generate_binseq(const std::string& what, int n) {
    if (what == "F") return f_classifier();
    if (what == "Fn") return f_n_classifier(n);
    if (what == "fact2dfa") return is_fact_binseq_2dfa(n);
    if (what.rfind("family:", 0) == 0) {
        auto rest = what.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw InputError("expected family:<kind>:<length>");
        long long ell = 0;
        try {
            std::size_t used = 0;
            ell = std::stoll(rest.substr(colon + 1), &used);
            if (used != rest.size() - colon - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InputError("bad length in " + what);
        }
        return factor_family(parse_family_kind(rest.substr(0, colon)), n, ell);
    }
    throw InputError("unknown binary-sequence machine " + what);
}

AnyMachine generate_witness(const std::string& lang, const std::string& as, int n, const Budgets& budgets) {
    WitnessBundle b;
    if (lang == "Ln") {
        b = l_n_bundle(n);
        b.la = cg_to_1la(*b.cg);
        if (as == "1nfa") b.one_way = project_cg_to_1nfa(*b.cg, budgets.subset_states);
    } else if (lang == "Mn") {
        b.cg = m_n_cg(n);
        b.two_way = b.cg->underlying();
        b.la = cg_to_1la(*b.cg);
        if (as == "1nfa") b.one_way = m_n_small_1nfa(n, budgets.subset_states);
    } else if (lang == "IFBS" || lang == "SamePrefix" || lang == "Suffixes") {
        b.two_way = lang == "IFBS" ? ifbs_2dfa(n) : lang == "SamePrefix" ? same_prefix_2dfa(n) : suffixes_2dfa(n);
        b.cg = norm_of(*b.two_way);
    } else {
        throw InputError("unknown language " + lang);
    }
    if (as == "cg" && b.cg) return *b.cg;
    if (as == "d1la" && b.d1la) return *b.d1la;
    if (as == "1la" && b.la) return *b.la;
    if (as == "2dfa" && b.two_way) return *b.two_way;
    if (as == "1nfa" && b.one_way) return *b.one_way;
    throw InputError("no " + as + " form for " + lang);
}

const std::vector<std::string>& convert_ops() {
    static const std::vector<std::string> ops = {
        "shepherdson",  "project",       "powerset", "minimize", "complete",  "trim",         "dollar-star",
        "halt-on-accept", "accept-empty", "seq-intersect", "norm", "d1la", "cg-to-1la"};
    return ops;
}

AnyMachine convert(const std::string& op, const std::vector<AnyMachine>& in, const Budgets& budgets) {
    const std::size_t arity = op == "seq-intersect" ? 2 : 1;
    if (in.size() != arity) throw InputError("op " + op + " takes " + std::to_string(arity) + " machine(s)");
    const AnyMachine& m = in[0];
    if (op == "shepherdson") return shepherdson(expect_kind<TwoWayMachine>(m, op, "2dfa"), budgets.subset_states);
    if (op == "project")
        return project_cg_to_1nfa(expect_kind<CommonGuessMachine>(m, op, "cg-2dfa"), budgets.subset_states);
    if (op == "powerset") return powerset(expect_kind<OneWayMachine>(m, op, "1nfa"), budgets.subset_states);
    if (op == "minimize") return minimize_dfa(expect_kind<OneWayMachine>(m, op, "1dfa"));
    if (op == "complete") return complete_dfa(expect_kind<OneWayMachine>(m, op, "1dfa"));
    if (op == "trim") return trim_unreachable(expect_kind<OneWayMachine>(m, op, "1dfa"));
    if (op == "dollar-star") return dollar_star(expect_kind<TwoWayMachine>(m, op, "2dfa"));
    if (op == "halt-on-accept") return halt_on_accept(expect_kind<TwoWayMachine>(m, op, "2dfa"));
    if (op == "accept-empty") return accept_empty(expect_kind<TwoWayMachine>(m, op, "2dfa"));
    if (op == "seq-intersect")
        return seq_intersect_2dfa(expect_kind<TwoWayMachine>(m, op, "2dfa"), expect_kind<TwoWayMachine>(in[1], op, "2dfa"));
    if (op == "norm") return norm_of(expect_kind<TwoWayMachine>(m, op, "2dfa"));
    if (op == "d1la") return predictive_cg_to_d1la(expect_kind<CommonGuessMachine>(m, op, "cg-2dfa"));
    if (op == "cg-to-1la") return cg_to_1la(expect_kind<CommonGuessMachine>(m, op, "cg"));
    throw InputError("unknown op " + op);
}

Decision decide(const AnyMachine& m, const std::string& text, const Budgets& budgets) {
    return std::visit(
        [&](const auto& x) -> Decision {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, OneWayMachine>) {
                OneWayResult r = accepts_1way(x, x.alphabet().encode(text));
                return {r.accepted, r.label ? "label " + *r.label : ""};
            } else if constexpr (std::is_same_v<T, TwoWayMachine>) {
                Word w = x.alphabet().encode(text);
                if (x.deterministic()) {
                    Trace t = run_2dfa_trace(x, w);
                    return {t.outcome == Outcome::Accept, to_string(t.outcome)};
                }
                return {accepts_2way(x, w), ""};
            } else if constexpr (std::is_same_v<T, OneLimitedMachine>) {
                return {accepts_1la(x, x.input().encode(text), budgets.configs), ""};
            } else {
                GuessResult g = accepts_cg(x, x.input().encode(text), budgets.configs);
                return {g.accepted, g.witness ? "annotation " + x.annotation().decode(*g.witness) : ""};
            }
        },
        m);
}

int state_count(const AnyMachine& m) {
    return std::visit([](const auto& x) { return x.states(); }, m);
}

}  // namespace limitada
