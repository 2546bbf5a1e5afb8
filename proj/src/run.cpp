#include "limitada/run.hpp"

#include <algorithm>
#include <limits>

#include "limitada/errors.hpp"

namespace limitada {

namespace {

void check_word(int alphabet_size, const Word& w) {
    for (int s : w)
        if (s < 0 || s >= alphabet_size) throw InputError("word symbol outside the alphabet");
}

// Tape cell contents of a two-way run: endmarkers around w.
int cell(const TwoWayMachine& m, const Word& w, int pos) {
    if (pos == 0) return m.left();
    if (pos == static_cast<int>(w.size()) + 1) return m.right();
    return w[static_cast<std::size_t>(pos - 1)];
}

}  // namespace

bool accepts_2way(const TwoWayMachine& m, const Word& w) {
    check_word(m.alphabet().size(), w);
    const int cells = static_cast<int>(w.size()) + 2;
    const int end = cells - 1;
    std::vector<char> seen(static_cast<std::size_t>(m.states()) * static_cast<std::size_t>(cells), 0);
    std::vector<std::pair<int, int>> stack{{m.initial(), 1}};
    seen[static_cast<std::size_t>(m.initial()) * cells + 1] = 1;
    while (!stack.empty()) {
        auto [q, pos] = stack.back();
        stack.pop_back();
        if (pos == end && m.is_final(q)) return true;
        for (const Step& st : m.at(q, cell(m, w, pos))) {
            int np = pos + st.dir;
            if (np < 0 || np >= cells) continue;
            auto key = static_cast<std::size_t>(st.to) * cells + np;
            if (!seen[key]) {
                seen[key] = 1;
                stack.emplace_back(st.to, np);
            }
        }
    }
    return false;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Accept: return "accept";
        case Outcome::RejectHalt: return "reject-halt";
        case Outcome::RejectLoop: return "reject-loop";
    }
    return "?";
}

Trace run_2dfa_trace(const TwoWayMachine& m, const Word& w) {
    if (!m.deterministic()) throw ContractError("run_2dfa_trace needs a deterministic machine");
    check_word(m.alphabet().size(), w);
    const int cells = static_cast<int>(w.size()) + 2;
    const int end = cells - 1;
    std::vector<char> seen(static_cast<std::size_t>(m.states()) * static_cast<std::size_t>(cells), 0);
    std::vector<char> visited(static_cast<std::size_t>(cells), 0);
    Trace t;
    int q = m.initial(), pos = 1;
    for (;;) {
        if (!visited[static_cast<std::size_t>(pos)]) {
            visited[static_cast<std::size_t>(pos)] = 1;
            t.first_visits.emplace_back(pos, q);
        }
        if (pos == end && m.is_final(q)) {
            t.outcome = Outcome::Accept;
            return t;
        }
        auto key = static_cast<std::size_t>(q) * cells + pos;
        if (seen[key]) {
            t.outcome = Outcome::RejectLoop;
            return t;
        }
        seen[key] = 1;
        const auto& moves = m.at(q, cell(m, w, pos));
        if (moves.empty()) {
            t.outcome = Outcome::RejectHalt;
            return t;
        }
        int np = pos + moves.front().dir;
        if (np < 0 || np >= cells) {
            t.outcome = Outcome::RejectHalt;
            return t;
        }
        q = moves.front().to;
        pos = np;
        ++t.steps;
    }
}

OneWayResult accepts_1way(const OneWayMachine& m, const Word& w) {
    check_word(m.alphabet().size(), w);
    std::vector<int> current{m.initial()};
    std::vector<char> mark(static_cast<std::size_t>(m.states()), 0);
    for (int s : w) {
        std::vector<int> next;
        for (int q : current)
            for (int r : m.at(q, s))
                if (!mark[static_cast<std::size_t>(r)]) {
                    mark[static_cast<std::size_t>(r)] = 1;
                    next.push_back(r);
                }
        for (int r : next) mark[static_cast<std::size_t>(r)] = 0;
        current.swap(next);
        if (current.empty()) break;
    }
    OneWayResult res;
    res.accepted = std::any_of(current.begin(), current.end(), [&](int q) { return m.is_final(q); });
    if (current.size() == 1 && m.deterministic()) res.label = m.label(current.front());
    return res;
}

LanguageOracle oracle_of(const TwoWayMachine& m) {
    return {m.alphabet(), [m](const Word& w) { return accepts_2way(m, w); }};
}

LanguageOracle oracle_of(const OneWayMachine& m) {
    return {m.alphabet(), [m](const Word& w) { return accepts_1way(m, w).accepted; }};
}

std::size_t count_words(int alphabet_size, int max_len) {
    std::size_t total = 0, layer = 1;
    const std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
    for (int l = 0; l <= max_len; ++l) {
        total += layer;
        if (total > cap) return cap;
        if (alphabet_size > 0 && layer > cap / static_cast<std::size_t>(alphabet_size)) return cap;
        layer *= static_cast<std::size_t>(alphabet_size);
        if (alphabet_size == 0) layer = 0;
    }
    return total;
}

void for_each_word(int alphabet_size, int max_len, std::size_t budget,
                   const std::function<void(const Word&)>& f) {
    std::size_t total = count_words(alphabet_size, max_len);
    if (total > budget) throw ResourceError("word enumeration exceeds budget", total);
    Word w;
    for (int len = 0; len <= max_len; ++len) {
        w.assign(static_cast<std::size_t>(len), 0);
        if (len > 0 && alphabet_size == 0) break;
        for (;;) {
            f(w);
            int i = len - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == alphabet_size - 1) {
                w[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
    }
}

std::vector<Word> language_upto(const LanguageOracle& o, int max_len, std::size_t budget) {
    std::vector<Word> out;
    for_each_word(o.alphabet.size(), max_len, budget, [&](const Word& w) {
        if (o.member(w)) out.push_back(w);
    });
    return out;
}

Equivalence equivalent_upto(const LanguageOracle& a, const LanguageOracle& b, int max_len,
                            std::size_t budget) {
    if (a.alphabet != b.alphabet) throw InputError("equivalence check needs identical alphabets");
    Equivalence res;
    std::size_t total = count_words(a.alphabet.size(), max_len);
    if (total > budget) throw ResourceError("word enumeration exceeds budget", total);
    Word w;
    for (int len = 0; len <= max_len; ++len) {
        w.assign(static_cast<std::size_t>(len), 0);
        if (len > 0 && a.alphabet.size() == 0) break;
        for (;;) {
            if (a.member(w) != b.member(w)) {
                res.equal = false;
                res.witness = w;
                return res;
            }
            int i = len - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == a.alphabet.size() - 1) {
                w[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
    }
    return res;
}

}  // namespace limitada
