#include "limitada/common_guess.hpp"

#include <algorithm>
#include <cmath>

#include "limitada/errors.hpp"
#include "limitada/run.hpp"
#include "limitada/transforms.hpp"

namespace limitada {

GuessResult accepts_cg(const CommonGuessMachine& m, const Word& w, std::size_t max_annotations) {
    const int g = m.annotation().size();
    for (int s : w)
        if (s < 0 || s >= m.input().size()) throw InputError("word symbol outside the input alphabet");
    double total = std::pow(static_cast<double>(g), static_cast<double>(w.size()));
    if (total > static_cast<double>(max_annotations))
        throw ResourceError("annotation enumeration exceeds budget", static_cast<std::size_t>(std::min(total, 1e18)));
    GuessResult res;
    if (g == 0) {
        if (w.empty() && accepts_2way(m.underlying(), {})) {
            res.accepted = true;
            res.witness = Word{};
        }
        return res;
    }
    Word v(w.size(), 0), z(w.size());
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            z[i] = m.pair(w[i], v[i]);
            ok = z[i] >= 0;
        }
        if (ok && accepts_2way(m.underlying(), z)) {
            res.accepted = true;
            res.witness = v;
            return res;
        }
        int i = static_cast<int>(v.size()) - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == g - 1) v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return res;
}

CommonGuessMachine norm_of(const TwoWayMachine& a, const std::string& unary_symbol) {
    Alphabet unary({unary_symbol});
    std::vector<std::string> pairs;
    for (const auto& g : a.alphabet().symbols()) pairs.push_back(make_pair_symbol(unary_symbol, g));
    TwoWayMachine u(Alphabet(pairs), a.states());
    u.set_initial(a.initial());
    for (int q = 0; q < a.states(); ++q) {
        u.set_name(q, a.name(q));
        if (a.is_final(q)) u.set_final(q);
        for (int s = 0; s < a.tape_symbols(); ++s)
            for (const Step& st : a.at(q, s)) u.add(q, s, st.to, st.dir);
    }
    u.note = "language of lengths of " + (a.note.empty() ? std::string("a two-way machine") : a.note);
    return CommonGuessMachine(std::move(u), std::move(unary), a.alphabet());
}

std::set<int> predictive_states(const CommonGuessMachine& m) {
    const TwoWayMachine& a = m.underlying();
    if (!a.deterministic()) throw ContractError("predictive_states needs a deterministic machine");
    std::set<int> out;
    for (int p = 0; p < a.states(); ++p) {
        bool ok = true;
        for (int sigma = 0; sigma < m.input().size() && ok; ++sigma) {
            int options = 0;
            for (int gamma = 0; gamma < m.annotation().size(); ++gamma) {
                int s = m.pair(sigma, gamma);
                if (s >= 0 && !a.at(p, s).empty()) ++options;
            }
            ok = options <= 1;
        }
        if (ok) out.insert(p);
    }
    return out;
}

PredictiveCheck is_predictive_bounded(const CommonGuessMachine& m, int max_len, std::size_t max_words) {
    const TwoWayMachine& a = m.underlying();
    std::set<int> good = predictive_states(m);
    PredictiveCheck res;
    OneWayMachine d = shepherdson(a);
    for (const Word& z : accepted_words_upto(d, max_len, max_words)) {
        ++res.words_checked;
        Trace t = run_2dfa_trace(a, z);
        for (auto [cell, state] : t.first_visits) {
            if (cell == 0 || cell == static_cast<int>(z.size()) + 1) continue;
            if (!good.count(state)) {
                res.predictive = false;
                res.word = z;
                res.cell = cell;
                res.state = state;
                return res;
            }
        }
    }
    return res;
}

namespace {

Alphabet work_alphabet(const CommonGuessMachine& m) {
    std::vector<std::string> syms = m.input().symbols();
    for (const auto& s : m.underlying().alphabet().symbols()) syms.push_back(s);
    return Alphabet(syms);
}

}  // namespace

OneLimitedMachine predictive_cg_to_d1la(const CommonGuessMachine& m) {
    const TwoWayMachine& a = m.underlying();
    if (!a.deterministic()) throw ContractError("predictive_cg_to_d1la needs a deterministic machine");
    std::set<int> good = predictive_states(m);
    const int ni = m.input().size();
    OneLimitedMachine out(m.input(), work_alphabet(m), a.states());
    auto tape_of = [&](int underlying_symbol) {
        if (underlying_symbol == a.left()) return out.left();
        if (underlying_symbol == a.right()) return out.right();
        return ni + underlying_symbol;
    };
    out.set_initial(a.initial());
    for (int p = 0; p < a.states(); ++p) {
        out.set_name(p, a.name(p));
        if (a.is_final(p)) out.set_final(p);
        for (int s = 0; s < a.tape_symbols(); ++s)
            for (const Step& st : a.at(p, s)) out.add(p, tape_of(s), st.to, tape_of(s), st.dir);
        if (!good.count(p)) continue;
        for (int sigma = 0; sigma < ni; ++sigma)
            for (int gamma = 0; gamma < m.annotation().size(); ++gamma) {
                int s = m.pair(sigma, gamma);
                if (s < 0) continue;
                for (const Step& st : a.at(p, s)) out.add(p, sigma, st.to, tape_of(s), st.dir);
            }
    }
    out.note = "deterministic 1-LA from predictive " + (a.note.empty() ? std::string("common-guess machine") : a.note);
    return out;
}

OneLimitedMachine cg_to_1la(const CommonGuessMachine& m) {
    const TwoWayMachine& a = m.underlying();
    const int ni = m.input().size();
    OneLimitedMachine out(m.input(), work_alphabet(m), a.states() + 1);
    auto tape_of = [&](int underlying_symbol) {
        if (underlying_symbol == a.left()) return out.left();
        if (underlying_symbol == a.right()) return out.right();
        return ni + underlying_symbol;
    };
    for (int p = 0; p < a.states(); ++p) {
        out.set_name(p, a.name(p));
        if (a.is_final(p)) out.set_final(p);
        for (int s = 0; s < a.tape_symbols(); ++s)
            for (const Step& st : a.at(p, s)) out.add(p, tape_of(s), st.to, tape_of(s), st.dir);
    }
    const int qa = a.states();
    out.set_name(qa, "annotate");
    for (int sigma = 0; sigma < ni; ++sigma)
        for (int gamma = 0; gamma < m.annotation().size(); ++gamma) {
            int s = m.pair(sigma, gamma);
            if (s >= 0) out.add(qa, sigma, qa, ni + s, 1);
        }
    for (int s = 0; s < a.alphabet().size(); ++s) out.add(qa, ni + s, qa, ni + s, -1);
    out.add(qa, out.right(), qa, out.right(), -1);
    out.add(qa, out.left(), a.initial(), out.left(), 1);
    out.set_initial(qa);
    out.note = "1-LA guessing annotations for " + (a.note.empty() ? std::string("a common-guess machine") : a.note);
    return out;
}

}  // namespace limitada
