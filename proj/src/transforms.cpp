#include "limitada/transforms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

#include "limitada/errors.hpp"

namespace limitada {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

template <class Key>
class Interner {
public:
    int intern(const Key& k, bool& fresh) {
        auto [it, inserted] = ids_.emplace(k, static_cast<int>(keys_.size()));
        fresh = inserted;
        if (inserted) keys_.push_back(k);
        return it->second;
    }
    const Key& key(int id) const { return keys_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return keys_.size(); }

private:
    std::unordered_map<Key, int, VecHash> ids_;
    std::vector<Key> keys_;
};

}  // namespace

OneWayMachine shepherdson(const TwoWayMachine& a, std::size_t max_states) {
    if (!a.deterministic()) throw ContractError("shepherdson needs a deterministic machine");
    const int n = a.states();
    const int k = a.alphabet().size();

    auto step = [&](int q, int sym) -> const Step* {
        const auto& v = a.at(q, sym);
        return v.empty() ? nullptr : &v.front();
    };
    // Exit state when the head sits on a cell holding sym in state s, and the
    // prefix to its left behaves as described by table.
    auto exit_from = [&](const std::vector<int>& table, int sym, int s) {
        for (int iter = 0; iter <= n; ++iter) {
            const Step* st = step(s, sym);
            if (!st) return -1;
            if (st->dir == 1) return st->to;
            s = table[static_cast<std::size_t>(st->to) + 1];
            if (s < 0) return -1;
        }
        return -1;
    };
    auto accepting = [&](const std::vector<int>& table) {
        int s = table[0];
        for (int iter = 0; iter <= n + 1 && s >= 0; ++iter) {
            if (a.is_final(s)) return true;
            const Step* st = step(s, a.right());
            if (!st || st->dir == 1) return false;
            s = table[static_cast<std::size_t>(st->to) + 1];
        }
        return false;
    };

    std::vector<int> start(static_cast<std::size_t>(n) + 1, -1);
    start[0] = a.initial();
    for (int q = 0; q < n; ++q) {
        const Step* st = step(q, a.left());
        start[static_cast<std::size_t>(q) + 1] = (st && st->dir == 1) ? st->to : -1;
    }
    const std::vector<int> dead(static_cast<std::size_t>(n) + 1, -1);

    Interner<std::vector<int>> tables;
    bool fresh = false;
    tables.intern(start, fresh);
    std::vector<std::vector<int>> edges;  // edges[id][sym]
    for (std::size_t id = 0; id < tables.size(); ++id) {
        std::vector<int> row(static_cast<std::size_t>(k));
        for (int sym = 0; sym < k; ++sym) {
            const std::vector<int> cur = tables.key(static_cast<int>(id));
            std::vector<int> next(static_cast<std::size_t>(n) + 1, -1);
            if (cur[0] >= 0) {
                next[0] = exit_from(cur, sym, cur[0]);
                if (next[0] >= 0)
                    for (int q = 0; q < n; ++q) next[static_cast<std::size_t>(q) + 1] = exit_from(cur, sym, q);
            }
            if (next[0] < 0) next = dead;
            row[static_cast<std::size_t>(sym)] = tables.intern(next, fresh);
            if (fresh && tables.size() > max_states)
                throw ResourceError("crossing-table construction exceeds state budget", tables.size());
        }
        edges.push_back(std::move(row));
    }

    OneWayMachine d(a.alphabet(), static_cast<int>(tables.size()));
    d.set_initial(0);
    for (std::size_t id = 0; id < tables.size(); ++id) {
        if (accepting(tables.key(static_cast<int>(id)))) d.set_final(static_cast<int>(id));
        for (int sym = 0; sym < k; ++sym) d.add(static_cast<int>(id), sym, edges[id][static_cast<std::size_t>(sym)]);
    }
    d.note = "crossing-table simulation";
    return d;
}

OneWayMachine project_cg_to_1nfa(const CommonGuessMachine& m, std::size_t max_states) {
    OneWayMachine d = shepherdson(m.underlying(), max_states);
    OneWayMachine b(m.input(), d.states());
    b.set_initial(d.initial());
    for (int q = 0; q < d.states(); ++q) {
        if (d.is_final(q)) b.set_final(q);
        for (int s = 0; s < d.alphabet().size(); ++s)
            for (int r : d.at(q, s)) b.add(q, m.first(s), r);
    }
    b.note = "annotation projection of crossing-table simulation";
    return b;
}

OneWayMachine powerset(const OneWayMachine& nfa, std::size_t max_states) {
    const int k = nfa.alphabet().size();
    // States that cannot reach a final state are dropped from every subset.
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(nfa.states()));
    for (int q = 0; q < nfa.states(); ++q)
        for (int s = 0; s < k; ++s)
            for (int r : nfa.at(q, s)) rev[static_cast<std::size_t>(r)].push_back(q);
    std::vector<char> live(static_cast<std::size_t>(nfa.states()), 0);
    std::vector<int> stack = nfa.finals();
    for (int f : stack) live[static_cast<std::size_t>(f)] = 1;
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int q : rev[static_cast<std::size_t>(r)])
            if (!live[static_cast<std::size_t>(q)]) {
                live[static_cast<std::size_t>(q)] = 1;
                stack.push_back(q);
            }
    }
    Interner<std::vector<int>> sets;
    bool fresh = false;
    if (live[static_cast<std::size_t>(nfa.initial())])
        sets.intern({nfa.initial()}, fresh);
    else
        sets.intern({}, fresh);
    std::vector<std::vector<int>> edges;
    std::vector<char> mark(static_cast<std::size_t>(nfa.states()), 0);
    for (std::size_t id = 0; id < sets.size(); ++id) {
        std::vector<int> row(static_cast<std::size_t>(k));
        for (int s = 0; s < k; ++s) {
            std::vector<int> next;
            for (int q : sets.key(static_cast<int>(id)))
                for (int r : nfa.at(q, s))
                    if (!mark[static_cast<std::size_t>(r)] && live[static_cast<std::size_t>(r)]) {
                        mark[static_cast<std::size_t>(r)] = 1;
                        next.push_back(r);
                    }
            for (int r : next) mark[static_cast<std::size_t>(r)] = 0;
            std::sort(next.begin(), next.end());
            row[static_cast<std::size_t>(s)] = sets.intern(next, fresh);
            if (fresh && sets.size() > max_states)
                throw ResourceError("subset construction exceeds state budget", sets.size());
        }
        edges.push_back(std::move(row));
    }
    OneWayMachine d(nfa.alphabet(), static_cast<int>(sets.size()));
    d.set_initial(0);
    for (std::size_t id = 0; id < sets.size(); ++id) {
        const auto& set = sets.key(static_cast<int>(id));
        if (std::any_of(set.begin(), set.end(), [&](int q) { return nfa.is_final(q); }))
            d.set_final(static_cast<int>(id));
        for (int s = 0; s < k; ++s) d.add(static_cast<int>(id), s, edges[id][static_cast<std::size_t>(s)]);
    }
    d.note = "subset construction";
    return d;
}

OneWayMachine trim_unreachable(const OneWayMachine& d) {
    const int k = d.alphabet().size();
    std::vector<int> order, id(static_cast<std::size_t>(d.states()), -1);
    id[static_cast<std::size_t>(d.initial())] = 0;
    order.push_back(d.initial());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int s = 0; s < k; ++s)
            for (int r : d.at(order[i], s))
                if (id[static_cast<std::size_t>(r)] < 0) {
                    id[static_cast<std::size_t>(r)] = static_cast<int>(order.size());
                    order.push_back(r);
                }
    OneWayMachine out(d.alphabet(), static_cast<int>(order.size()));
    out.set_initial(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int q = order[i];
        if (d.is_final(q)) out.set_final(static_cast<int>(i));
        if (auto l = d.label(q)) out.set_label(static_cast<int>(i), *l);
        out.set_name(static_cast<int>(i), d.name(q));
        for (int s = 0; s < k; ++s)
            for (int r : d.at(q, s)) out.add(static_cast<int>(i), s, id[static_cast<std::size_t>(r)]);
    }
    out.note = d.note;
    return out;
}

OneWayMachine complete_dfa(const OneWayMachine& d) {
    if (d.complete()) return d;
    OneWayMachine out = d;
    int sink = out.add_state("sink");
    for (int q = 0; q < out.states(); ++q)
        for (int s = 0; s < out.alphabet().size(); ++s)
            if (out.at(q, s).empty()) out.add(q, s, sink);
    return out;
}

OneWayMachine minimize_dfa(const OneWayMachine& input) {
    if (!input.deterministic()) throw ContractError("minimize_dfa needs a deterministic machine");
    OneWayMachine d = complete_dfa(trim_unreachable(input));
    const int n = d.states();
    const int k = d.alphabet().size();
    auto target = [&](int q, int s) { return d.at(q, s).front(); };

    // Inverse transitions in CSR form, one table per symbol.
    std::vector<std::vector<int>> inv_start(static_cast<std::size_t>(k)), inv(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
        auto& st = inv_start[static_cast<std::size_t>(s)];
        auto& lst = inv[static_cast<std::size_t>(s)];
        st.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int q = 0; q < n; ++q) ++st[static_cast<std::size_t>(target(q, s)) + 1];
        for (int q = 0; q < n; ++q) st[static_cast<std::size_t>(q) + 1] += st[static_cast<std::size_t>(q)];
        lst.assign(static_cast<std::size_t>(n), 0);
        std::vector<int> fill(st.begin(), st.end() - 1);
        for (int q = 0; q < n; ++q) lst[static_cast<std::size_t>(fill[static_cast<std::size_t>(target(q, s))]++)] = q;
    }

    // Initial partition by (final, label).
    std::map<std::pair<bool, std::string>, int> classes;
    std::vector<int> block_of(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        auto key = std::make_pair(d.is_final(q), d.label(q).value_or(""));
        auto it = classes.emplace(key, static_cast<int>(classes.size())).first;
        block_of[static_cast<std::size_t>(q)] = it->second;
    }
    int nb = static_cast<int>(classes.size());
    std::vector<int> elems(static_cast<std::size_t>(n)), loc(static_cast<std::size_t>(n));
    std::vector<int> first, end, marked;
    {
        std::vector<std::vector<int>> members(static_cast<std::size_t>(nb));
        for (int q = 0; q < n; ++q) members[static_cast<std::size_t>(block_of[static_cast<std::size_t>(q)])].push_back(q);
        int pos = 0;
        for (int b = 0; b < nb; ++b) {
            first.push_back(pos);
            for (int q : members[static_cast<std::size_t>(b)]) {
                elems[static_cast<std::size_t>(pos)] = q;
                loc[static_cast<std::size_t>(q)] = pos++;
            }
            end.push_back(pos);
            marked.push_back(0);
        }
    }
    std::vector<char> in_work;
    std::deque<std::pair<int, int>> work;
    auto in_w = [&](int b, int s) -> char& { return in_work[static_cast<std::size_t>(b * k + s)]; };
    in_work.assign(static_cast<std::size_t>(nb * k), 0);
    for (int b = 0; b < nb; ++b)
        for (int s = 0; s < k; ++s) {
            work.emplace_back(b, s);
            in_w(b, s) = 1;
        }

    std::vector<int> touched;
    while (!work.empty()) {
        auto [a, s] = work.front();
        work.pop_front();
        in_w(a, s) = 0;
        touched.clear();
        const auto& st = inv_start[static_cast<std::size_t>(s)];
        const auto& lst = inv[static_cast<std::size_t>(s)];
        // Snapshot of the splitter, since marking may reorder its own members.
        std::vector<int> splitter(elems.begin() + first[static_cast<std::size_t>(a)],
                                  elems.begin() + end[static_cast<std::size_t>(a)]);
        for (int q : splitter) {
            for (int i = st[static_cast<std::size_t>(q)]; i < st[static_cast<std::size_t>(q) + 1]; ++i) {
                int p = lst[static_cast<std::size_t>(i)];
                int b = block_of[static_cast<std::size_t>(p)];
                int mpos = first[static_cast<std::size_t>(b)] + marked[static_cast<std::size_t>(b)];
                if (loc[static_cast<std::size_t>(p)] < mpos) continue;  // already marked
                if (marked[static_cast<std::size_t>(b)] == 0) touched.push_back(b);
                int other = elems[static_cast<std::size_t>(mpos)];
                std::swap(elems[static_cast<std::size_t>(mpos)], elems[static_cast<std::size_t>(loc[static_cast<std::size_t>(p)])]);
                loc[static_cast<std::size_t>(other)] = loc[static_cast<std::size_t>(p)];
                loc[static_cast<std::size_t>(p)] = mpos;
                ++marked[static_cast<std::size_t>(b)];
            }
        }
        for (int b : touched) {
            int m = marked[static_cast<std::size_t>(b)];
            marked[static_cast<std::size_t>(b)] = 0;
            int sz = end[static_cast<std::size_t>(b)] - first[static_cast<std::size_t>(b)];
            if (m == sz) continue;
            int nbk = nb++;
            first.push_back(first[static_cast<std::size_t>(b)]);
            end.push_back(first[static_cast<std::size_t>(b)] + m);
            marked.push_back(0);
            first[static_cast<std::size_t>(b)] += m;
            for (int i = first[static_cast<std::size_t>(nbk)]; i < end[static_cast<std::size_t>(nbk)]; ++i)
                block_of[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = nbk;
            in_work.resize(static_cast<std::size_t>(nb * k), 0);
            for (int c = 0; c < k; ++c) {
                if (in_w(b, c)) {
                    work.emplace_back(nbk, c);
                    in_w(nbk, c) = 1;
                } else {
                    int pick = (m <= sz - m) ? nbk : b;
                    work.emplace_back(pick, c);
                    in_w(pick, c) = 1;
                }
            }
        }
    }

    // Canonical numbering: breadth-first from the initial block, symbols in order.
    std::vector<int> canon(static_cast<std::size_t>(nb), -1), rep;
    int b0 = block_of[static_cast<std::size_t>(d.initial())];
    canon[static_cast<std::size_t>(b0)] = 0;
    rep.push_back(d.initial());
    for (std::size_t i = 0; i < rep.size(); ++i)
        for (int s = 0; s < k; ++s) {
            int b = block_of[static_cast<std::size_t>(target(rep[i], s))];
            if (canon[static_cast<std::size_t>(b)] < 0) {
                canon[static_cast<std::size_t>(b)] = static_cast<int>(rep.size());
                rep.push_back(target(rep[i], s));
            }
        }
    OneWayMachine out(d.alphabet(), static_cast<int>(rep.size()));
    out.set_initial(0);
    for (std::size_t i = 0; i < rep.size(); ++i) {
        int q = rep[i];
        if (d.is_final(q)) out.set_final(static_cast<int>(i));
        if (auto l = d.label(q)) out.set_label(static_cast<int>(i), *l);
        for (int s = 0; s < k; ++s)
            out.add(static_cast<int>(i), s, canon[static_cast<std::size_t>(block_of[static_cast<std::size_t>(target(q, s))])]);
    }
    out.note = input.note.empty() ? "minimal DFA" : input.note + ", minimized";
    return out;
}

std::vector<Word> accepted_words_upto(const OneWayMachine& d, int max_len, std::size_t budget) {
    if (!d.deterministic()) throw ContractError("accepted_words_upto needs a deterministic machine");
    const int n = d.states(), k = d.alphabet().size();
    // Shortest distance from each state to a final state.
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        for (int s = 0; s < k; ++s)
            for (int r : d.at(q, s)) rev[static_cast<std::size_t>(r)].push_back(q);
    const int inf = 1 << 29;
    std::vector<int> dist(static_cast<std::size_t>(n), inf);
    std::deque<int> queue;
    for (int q = 0; q < n; ++q)
        if (d.is_final(q)) {
            dist[static_cast<std::size_t>(q)] = 0;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int p : rev[static_cast<std::size_t>(q)])
            if (dist[static_cast<std::size_t>(p)] == inf) {
                dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(q)] + 1;
                queue.push_back(p);
            }
    }
    std::vector<Word> out;
    Word w;
    for (int len = 0; len <= max_len; ++len) {
        std::function<void(int)> go = [&](int q) {
            int remaining = len - static_cast<int>(w.size());
            if (dist[static_cast<std::size_t>(q)] > remaining) return;
            if (remaining == 0) {
                if (d.is_final(q)) {
                    out.push_back(w);
                    if (out.size() > budget) throw ResourceError("accepted-word enumeration exceeds budget", out.size());
                }
                return;
            }
            for (int s = 0; s < k; ++s)
                for (int r : d.at(q, s)) {
                    w.push_back(s);
                    go(r);
                    w.pop_back();
                }
        };
        go(d.initial());
    }
    return out;
}

TwoWayMachine dollar_star(const TwoWayMachine& m, const std::string& dollar) {
    if (!m.deterministic()) throw ContractError("dollar_star needs a deterministic machine");
    if (m.alphabet().contains(dollar)) throw InputError("marker '" + dollar + "' already in the alphabet");
    std::vector<std::string> syms = m.alphabet().symbols();
    syms.push_back(dollar);
    const int n = m.states();
    TwoWayMachine out(Alphabet(syms), 2 * n + 1);
    const int k = m.alphabet().size();
    const int dol = k, L = out.left(), R = out.right();
    auto map_sym = [&](int s) { return s == m.left() ? L : (s == m.right() ? R : s); };
    auto copy = [&](int q, int c) { return 1 + 2 * q + (c == 1 ? 1 : 0); };
    const int init = 0;
    out.set_name(init, "i");
    for (int q = 0; q < n; ++q) {
        std::string base = m.name(q).empty() ? std::to_string(q) : m.name(q);
        out.set_name(copy(q, -1), base + "_-");
        out.set_name(copy(q, 1), base + "_+");
    }
    // F' of the intermediate machine.
    std::vector<char> fprime(static_cast<std::size_t>(2 * n + 1), 0);
    for (int q = 0; q < n; ++q)
        if (m.is_final(q)) fprime[static_cast<std::size_t>(copy(q, 1))] = 1;
    if (m.is_final(m.initial())) fprime[init] = 1;
    // delta'(p, sym) as a list of moves in the new machine.
    auto delta_prime = [&](int p, int orig_sym) {
        std::vector<Step> res;
        int q = (p == init) ? m.initial() : (p - 1) / 2;
        for (const Step& st : m.at(q, orig_sym)) res.push_back({copy(st.to, st.dir), st.dir});
        return res;
    };
    for (int p = 0; p < 2 * n + 1; ++p) {
        bool minus = p != init && (p - 1) % 2 == 0;
        for (int s = 0; s < m.tape_symbols(); ++s) {
            int ns = map_sym(s);
            if (p == init && ns == R) continue;
            for (const Step& st : delta_prime(p, s)) out.add(p, ns, st.to, st.dir);
        }
        std::vector<Step> on_dollar;
        if (minus) on_dollar = delta_prime(p, m.left());
        else if (fprime[static_cast<std::size_t>(p)]) on_dollar = {Step{init, 1}};
        else on_dollar = delta_prime(p, m.right());
        for (const Step& st : on_dollar) out.add(p, dol, st.to, st.dir);
    }
    out.set_initial(init);
    out.set_final(init);
    out.note = "dollar iteration of " + (m.note.empty() ? std::string("a two-way machine") : m.note);
    return out;
}

TwoWayMachine accept_empty(const TwoWayMachine& m) {
    TwoWayMachine out = m;
    int start = out.add_state("start");
    for (int s = 0; s < m.alphabet().size(); ++s)
        for (const Step& st : m.at(m.initial(), s)) out.add(start, s, st.to, st.dir);
    out.set_final(start);
    out.set_initial(start);
    return out;
}

TwoWayMachine halt_on_accept(const TwoWayMachine& m) {
    TwoWayMachine out = m;
    for (int q : m.finals()) out.clear(q, m.right());
    return out;
}

TwoWayMachine seq_intersect_2dfa(const TwoWayMachine& a_in, const TwoWayMachine& b) {
    if (!a_in.deterministic() || !b.deterministic())
        throw ContractError("seq_intersect_2dfa needs deterministic machines");
    const Alphabet& alpha = a_in.alphabet();
    if (alpha.size() != b.alphabet().size())
        throw InputError("seq_intersect_2dfa needs machines over the same alphabet");
    std::vector<int> bmap(static_cast<std::size_t>(b.tape_symbols()));
    for (int s = 0; s < b.alphabet().size(); ++s) {
        int t = alpha.find(b.alphabet()[s]);
        if (t < 0) throw InputError("seq_intersect_2dfa needs machines over the same alphabet");
        bmap[static_cast<std::size_t>(s)] = t;
    }
    bmap[static_cast<std::size_t>(b.left())] = a_in.left();
    bmap[static_cast<std::size_t>(b.right())] = a_in.right();

    TwoWayMachine a = halt_on_accept(a_in);
    const int na = a.states(), nb = b.states();
    const int rewind = na, boff = na + 1;
    TwoWayMachine out(alpha, na + nb + 1);
    for (int p = 0; p < na; ++p) {
        out.set_name(p, "a:" + a.name(p));
        for (int s = 0; s < a.tape_symbols(); ++s)
            for (const Step& st : a.at(p, s)) out.add(p, s, st.to, st.dir);
        if (a.is_final(p)) out.add(p, a.right(), rewind, -1);
    }
    out.set_name(rewind, "rewind");
    for (int s = 0; s < out.tape_symbols(); ++s) {
        if (s == out.left()) out.add(rewind, s, boff + b.initial(), 1);
        else out.add(rewind, s, rewind, -1);
    }
    for (int p = 0; p < nb; ++p) {
        out.set_name(boff + p, "b:" + b.name(p));
        if (b.is_final(p)) out.set_final(boff + p);
        for (int s = 0; s < b.tape_symbols(); ++s)
            for (const Step& st : b.at(p, s)) out.add(boff + p, bmap[static_cast<std::size_t>(s)], boff + st.to, st.dir);
    }
    out.set_initial(a.initial());
    out.note = "sequential intersection";
    return out;
}

OneWayMachine product_classifier(const std::vector<ClassifierComponent>& comps,
                                 const std::optional<std::string>& dead_label) {
    if (comps.empty()) throw InputError("product_classifier needs at least one machine");
    const Alphabet& alpha = comps.front().machine.alphabet();
    for (const auto& c : comps) {
        if (c.machine.alphabet() != alpha) throw InputError("product_classifier needs a common alphabet");
        if (!c.machine.deterministic()) throw ContractError("product_classifier needs deterministic machines");
    }
    const int k = alpha.size();
    const std::size_t m = comps.size();
    Interner<std::vector<int>> tuples;
    bool fresh = false;
    std::vector<int> start;
    for (const auto& c : comps) start.push_back(c.machine.initial());
    tuples.intern(start, fresh);
    const std::vector<int> all_dead(m, -1);
    std::vector<std::vector<int>> edges;
    for (std::size_t id = 0; id < tuples.size(); ++id) {
        std::vector<int> row(static_cast<std::size_t>(k), -1);
        for (int s = 0; s < k; ++s) {
            const std::vector<int> cur = tuples.key(static_cast<int>(id));
            std::vector<int> next(m, -1);
            for (std::size_t i = 0; i < m; ++i) {
                if (cur[i] < 0) continue;
                const auto& t = comps[i].machine.at(cur[i], s);
                if (!t.empty()) next[i] = t.front();
            }
            if (next == all_dead && !dead_label) continue;
            row[static_cast<std::size_t>(s)] = tuples.intern(next, fresh);
        }
        edges.push_back(std::move(row));
    }
    OneWayMachine out(alpha, static_cast<int>(tuples.size()));
    out.set_initial(0);
    for (std::size_t id = 0; id < tuples.size(); ++id) {
        const auto& t = tuples.key(static_cast<int>(id));
        std::string tag;
        for (std::size_t i = 0; i < m; ++i)
            if (t[i] >= 0 && comps[i].machine.is_final(t[i])) tag += (tag.empty() ? "" : "+") + comps[i].tag;
        if (!tag.empty()) {
            out.set_final(static_cast<int>(id));
            out.set_label(static_cast<int>(id), tag);
        } else if (t == all_dead && dead_label) {
            out.set_label(static_cast<int>(id), *dead_label);
        }
        for (int s = 0; s < k; ++s)
            if (edges[id][static_cast<std::size_t>(s)] >= 0)
                out.add(static_cast<int>(id), s, edges[id][static_cast<std::size_t>(s)]);
    }
    out.note = "product classifier";
    return out;
}

}  // namespace limitada
