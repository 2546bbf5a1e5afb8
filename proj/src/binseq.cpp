#include "limitada/binseq.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "limitada/builder.hpp"
#include "limitada/errors.hpp"
#include "limitada/transforms.hpp"

namespace limitada {

namespace {

constexpr int kMaxN = 20;

void check_n(int n) {
    if (n < 1 || n > kMaxN) throw InputError("n must lie in 1.." + std::to_string(kMaxN));
}

std::string bin(long long i, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int k = n - 1; k >= 0; --k, i >>= 1) s[static_cast<std::size_t>(k)] = (i & 1) ? '1' : '0';
    return s;
}

OneWayMachine hand_dfa(int states, const std::vector<std::tuple<int, std::string, int>>& edges,
                       const std::vector<int>& finals, const std::string& note) {
    OneWayMachine m(binseq_alphabet(), states);
    for (const auto& [p, syms, q] : edges)
        for (char c : syms) m.add(p, m.alphabet().id(std::string(1, c)), q);
    for (int f : finals) m.set_final(f);
    m.note = note;
    return m;
}

// One pass of F_n from the current cell: after n+1 reads the machine sits in
// an r state one cell past the window. On the symbol predicted by the window
// it moves back n cells and restarts; at the right endmarker it either
// accepts or moves left into at_end.
std::string add_window_loop(TwoWayBuilder& b, int n, const std::string& ns, const std::string& at_end) {
    OneWayMachine fn = f_n_classifier(n);
    const Alphabet& al = fn.alphabet();
    auto name = [&](int q) {
        auto l = fn.label(q);
        return ns + (l ? *l : "F" + std::to_string(q));
    };
    const std::string start = name(fn.initial());
    const std::string back = ns + "back";
    for (int q = 0; q < fn.states(); ++q) {
        auto l = fn.label(q);
        if (l && *l == "r_bot") continue;
        if (l) {
            std::string sigma = l->substr(2);
            if (sigma != "$") b.on(name(q), sigma, n == 1 ? start : back + std::to_string(n - 1), -1);
            if (at_end.empty())
                b.accept(name(q));
            else
                b.on(name(q), kRightMarker, at_end, -1);
            continue;
        }
        for (int s = 0; s < al.size(); ++s)
            for (int t : fn.at(q, s))
                if (!(fn.label(t) && *fn.label(t) == "r_bot")) b.on(name(q), al[s], name(t), 1);
    }
    for (int k = n - 1; k >= 1; --k) b.on_all(back + std::to_string(k), k == 1 ? start : back + std::to_string(k - 1), -1);
    b.state(start);
    return start;
}

void add_rewind(TwoWayBuilder& b, const std::string& name, const std::string& after) {
    b.on_all(name, name, -1);
    b.on(name, kRightMarker, name, -1);
    b.on(name, kLeftMarker, after, 1);
}

void add_go_right_accept(TwoWayBuilder& b, const std::string& name) {
    b.on_all(name, name, 1);
    b.accept(name);
}

// Reads the first n+1 cells. Words of length <= n are accepted iff they contain
// at most one '#'. A window 1^a # 0^b with b > 0 rejects; any other window
// rewinds and continues at after.
std::string add_precheck(TwoWayBuilder& b, int n, const std::string& ns, const std::string& after) {
    enum Phase { Ones, Hash, Zeros, Other0, Other1 };
    const char* tag[] = {"ones", "hash", "zeros", "other0", "other1"};
    auto next = [](int ph, char c) -> int {
        switch (ph) {
            case Ones: return c == '1' ? Ones : c == '#' ? Hash : Other0;
            case Hash: return c == '0' ? Zeros : c == '1' ? Other1 : -1;
            case Zeros: return c == '#' ? -1 : c == '0' ? Zeros : Other1;
            case Other0: return c == '#' ? Other1 : Other0;
            default: return c == '#' ? -1 : Other1;
        }
    };
    auto name = [&](int p, int ph) { return ns + "pc" + std::to_string(p) + tag[ph]; };
    const std::string rw = ns + "pc_rewind";
    add_rewind(b, rw, after);
    std::queue<std::pair<int, int>> work;
    std::map<std::pair<int, int>, bool> seen;
    work.push({1, Ones});
    seen[{1, Ones}] = true;
    while (!work.empty()) {
        auto [p, ph] = work.front();
        work.pop();
        b.accept(name(p, ph));
        for (char c : std::string("01#")) {
            int nph = next(ph, c);
            if (nph < 0) continue;
            std::string sym(1, c);
            if (p <= n) {
                b.on(name(p, ph), sym, name(p + 1, nph), 1);
                if (!seen[{p + 1, nph}]) {
                    seen[{p + 1, nph}] = true;
                    work.push({p + 1, nph});
                }
            } else if (nph != Zeros) {
                b.on(name(p, ph), sym, rw, -1);
            }
        }
    }
    return name(1, Ones);
}

// Checks that the tape starts with x, then rewinds to after.
std::string add_prefix_check(TwoWayBuilder& b, const std::string& x, const std::string& ns,
                             const std::string& after, long long accept_short_from = -1) {
    const std::string rw = ns + "chk_rewind";
    add_rewind(b, rw, after);
    const int len = static_cast<int>(x.size());
    for (int p = 1; p <= len; ++p) {
        std::string me = ns + "chk" + std::to_string(p);
        if (accept_short_from >= 0 && p - 1 >= accept_short_from) b.accept(me);
        b.on(me, x.substr(static_cast<std::size_t>(p - 1), 1),
                 p < len ? ns + "chk" + std::to_string(p + 1) : rw, p < len ? 1 : -1);
    }
    return ns + "chk1";
}

// Entered one cell left of the right endmarker; checks that the tape ends with y.
std::string add_suffix_check(TwoWayBuilder& b, const std::string& y, const std::string& ns,
                             const std::string& after) {
    const int len = static_cast<int>(y.size());
    for (int k = len; k >= 1; --k) {
        std::string me = ns + "sc" + std::to_string(k);
        b.on(me, y.substr(static_cast<std::size_t>(k - 1), 1), k > 1 ? ns + "sc" + std::to_string(k - 1) : after,
             k > 1 ? -1 : 1);
    }
    return ns + "sc" + std::to_string(len);
}

// Left-to-right scan for an occurrence of pattern; the cell after its first
// occurrence is entered in state after.
std::string add_kmp(TwoWayBuilder& b, const std::string& pat, const std::string& ns, const std::string& after) {
    const int len = static_cast<int>(pat.size());
    std::vector<int> fail(static_cast<std::size_t>(len), 0);
    for (int i = 1, k = 0; i < len; ++i) {
        while (k > 0 && pat[static_cast<std::size_t>(i)] != pat[static_cast<std::size_t>(k)])
            k = fail[static_cast<std::size_t>(k - 1)];
        if (pat[static_cast<std::size_t>(i)] == pat[static_cast<std::size_t>(k)]) ++k;
        fail[static_cast<std::size_t>(i)] = k;
    }
    for (int j = 0; j < len; ++j)
        for (char c : std::string("01#")) {
            int k = j;
            while (k > 0 && pat[static_cast<std::size_t>(k)] != c) k = fail[static_cast<std::size_t>(k - 1)];
            if (pat[static_cast<std::size_t>(k)] == c) ++k;
            b.on(ns + "kmp" + std::to_string(j), std::string(1, c), k == len ? after : ns + "kmp" + std::to_string(k), 1);
        }
    return ns + "kmp0";
}

TwoWayMachine chain_machine(const std::string& u, const std::string& note) {
    TwoWayBuilder b(binseq_alphabet());
    b.initial("c1");
    for (std::size_t p = 1; p <= u.size(); ++p)
        b.on("c" + std::to_string(p), u.substr(p - 1, 1), "c" + std::to_string(p + 1), 1);
    b.accept("c" + std::to_string(u.size() + 1));
    return b.build(note);
}

long long find_unique(const std::string& hay, const std::string& needle) {
    auto i = hay.find(needle);
    if (i == std::string::npos) return -1;
    return static_cast<long long>(i);
}

}  // namespace

Alphabet binseq_alphabet() { return Alphabet({"0", "1", "#"}); }

long long binseq_length(int n) { return (1LL << n) * (n + 1); }

std::string full_binary_sequence(int n) {
    check_n(n);
    std::string s;
    s.reserve(static_cast<std::size_t>(binseq_length(n)));
    for (long long i = 0; i < (1LL << n); ++i) s += bin(i, n) + "#";
    return s;
}

SuccessorSplit successor_split(long long i, int n) {
    check_n(n);
    if (i < 0 || i >= (1LL << n) - 1) throw InputError("successor_split needs 0 <= i < 2^n - 1");
    std::string s = bin(i, n);
    SuccessorSplit r;
    while (r.m < n && s[static_cast<std::size_t>(n - 1 - r.m)] == '1') ++r.m;
    r.x = s.substr(0, static_cast<std::size_t>(n - r.m - 1));
    return r;
}

std::vector<OneWayMachine> x_sigma_dfas() {
    std::vector<OneWayMachine> out;
    out.push_back(hand_dfa(7,
                           {{0, "1", 1}, {0, "0", 4}, {1, "1", 1}, {1, "#", 2}, {2, "01", 3}, {3, "01", 3},
                            {4, "1", 4}, {4, "0", 5}, {5, "01", 5}, {5, "#", 6}, {6, "01", 6}},
                           {3, 6}, "contexts followed by 0"));
    out.push_back(hand_dfa(6,
                           {{0, "0", 1}, {0, "1", 3}, {1, "1", 1}, {1, "#", 2}, {2, "01", 2}, {3, "1", 3},
                            {3, "0", 4}, {4, "01", 4}, {4, "#", 5}, {5, "01", 5}},
                           {2, 5}, "contexts followed by 1"));
    out.push_back(hand_dfa(3, {{0, "#", 1}, {1, "01", 2}, {2, "01", 2}}, {2}, "contexts followed by #"));
    out.push_back(hand_dfa(3, {{0, "1", 1}, {1, "1", 1}, {1, "#", 2}}, {2}, "contexts at the end"));
    return out;
}

OneWayMachine f_classifier() {
    auto xs = x_sigma_dfas();
    std::vector<ClassifierComponent> comps{{xs[0], "0"}, {xs[1], "1"}, {xs[2], "#"}, {xs[3], "$"}};
    OneWayMachine m = minimize_dfa(product_classifier(comps, std::string("bot")));
    m.note = "next-symbol classifier";
    return m;
}

OneWayMachine f_n_classifier(int n) {
    check_n(n);
    OneWayMachine f = f_classifier();
    const int k = f.alphabet().size();
    OneWayMachine out(f.alphabet(), 0);
    std::map<std::pair<int, int>, int> ids;
    std::map<std::string, int> rs;
    std::queue<std::pair<int, int>> work;
    auto get = [&](int q, int c) {
        auto it = ids.find({q, c});
        if (it != ids.end()) return it->second;
        int id = out.add_state("f" + std::to_string(q) + "c" + std::to_string(c));
        ids[{q, c}] = id;
        work.push({q, c});
        return id;
    };
    auto r_state = [&](const std::string& tag) {
        auto it = rs.find(tag);
        if (it != rs.end()) return it->second;
        int id = out.add_state("r_" + tag);
        out.set_label(id, "r_" + tag);
        if (tag != "bot") out.set_final(id);
        rs[tag] = id;
        return id;
    };
    out.set_initial(get(f.initial(), 0));
    while (!work.empty()) {
        auto [q, c] = work.front();
        work.pop();
        int me = ids[{q, c}];
        for (int s = 0; s < k; ++s)
            for (int t : f.at(q, s)) {
                if (c + 1 <= n) {
                    out.add(me, s, get(t, c + 1));
                } else {
                    auto l = f.label(t);
                    out.add(me, s, r_state(l ? *l : "bot"));
                }
            }
    }
    out.note = "next-symbol classifier after " + std::to_string(n + 1) + " symbols";
    return out;
}

TwoWayMachine is_fact_binseq_2dfa(int n) {
    check_n(n);
    TwoWayBuilder b(binseq_alphabet());
    std::string core = add_window_loop(b, n, "", "");
    b.initial(add_precheck(b, n, "", core));
    return b.build("factors of the binary sequence, n=" + std::to_string(n));
}

TwoWayMachine factor_machine(int n, const std::string& x, const std::string& y) {
    check_n(n);
    const std::size_t w = static_cast<std::size_t>(n + 1);
    if (x.size() != w || y.size() != w) throw InputError("x and y must have length n+1");
    std::string bn = full_binary_sequence(n);
    long long i = find_unique(bn, x), j = find_unique(bn, y);
    if (i < 0 || j < 0 || j < i) throw InputError("no factor of the binary sequence starts with x and ends with y");
    TwoWayBuilder b(binseq_alphabet());
    add_go_right_accept(b, "goR");
    std::string sc = add_suffix_check(b, y, "", "goR");
    std::string core = add_window_loop(b, n, "", sc);
    b.initial(add_prefix_check(b, x, "", core));
    return b.build("factor of the binary sequence from " + x + " to " + y + ", n=" + std::to_string(n));
}

FamilyKind parse_family_kind(const std::string& s) {
    if (s == "pref-exact") return FamilyKind::PrefExact;
    if (s == "suff-exact") return FamilyKind::SuffExact;
    if (s == "pref-atleast") return FamilyKind::PrefAtLeast;
    if (s == "suff-atleast") return FamilyKind::SuffAtLeast;
    throw InputError("unknown family kind: " + s);
}

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::PrefExact: return "pref-exact";
        case FamilyKind::SuffExact: return "suff-exact";
        case FamilyKind::PrefAtLeast: return "pref-atleast";
        default: return "suff-atleast";
    }
}

TwoWayMachine factor_family(FamilyKind kind, int n, long long ell) {
    check_n(n);
    const long long total = binseq_length(n);
    if (ell < 0 || ell > total) throw InputError("length out of range 0.." + std::to_string(total));
    const std::string bn = full_binary_sequence(n);
    const long long w = n + 1;
    const std::string note = to_string(kind) + " " + std::to_string(ell) + ", n=" + std::to_string(n);
    const std::string head = bn.substr(0, static_cast<std::size_t>(w));
    const std::string tail = bn.substr(static_cast<std::size_t>(total - w));
    auto mk = [&](const TwoWayMachine& m) {
        TwoWayMachine r = m;
        r.note = note;
        return r;
    };
    switch (kind) {
        case FamilyKind::PrefExact:
            if (ell < w) return chain_machine(bn.substr(0, static_cast<std::size_t>(ell)), note);
            return mk(factor_machine(n, head, bn.substr(static_cast<std::size_t>(ell - w), static_cast<std::size_t>(w))));
        case FamilyKind::SuffExact:
            if (ell < w) return chain_machine(bn.substr(static_cast<std::size_t>(total - ell)), note);
            return mk(factor_machine(n, bn.substr(static_cast<std::size_t>(total - ell), static_cast<std::size_t>(w)), tail));
        case FamilyKind::PrefAtLeast: {
            TwoWayBuilder b(binseq_alphabet());
            if (ell <= w) {
                std::string core = add_window_loop(b, n, "", "");
                b.initial(add_prefix_check(b, head, "", core, ell));
            } else {
                const std::string y = bn.substr(static_cast<std::size_t>(ell - w), static_cast<std::size_t>(w));
                add_go_right_accept(b, "goR");
                std::string kmp = add_kmp(b, y, "", "goR");
                add_rewind(b, "scan_rewind", kmp);
                std::string core = add_window_loop(b, n, "", "scan_rewind");
                b.initial(add_prefix_check(b, head, "", core));
            }
            return b.build(note);
        }
        case FamilyKind::SuffAtLeast: {
            TwoWayBuilder b(binseq_alphabet());
            add_go_right_accept(b, "goR");
            if (ell <= w) {
                std::string core = add_window_loop(b, n, "", "");
                std::string pc = add_precheck(b, n, "", core);
                add_rewind(b, "tail_rewind", pc);
                b.initial("tail_go");
                b.on_all("tail_go", "tail_go", 1);
                b.on("tail_go", kRightMarker, "tl1", -1);
                const long long need = ell;
                for (long long k = 1; k <= w; ++k) {
                    std::string me = "tl" + std::to_string(k);
                    std::string expect = tail.substr(static_cast<std::size_t>(w - k), 1);
                    b.on(me, expect, k < w ? "tl" + std::to_string(k + 1) : "tail_rewind", -1);
                    if (k - 1 >= need) b.on(me, kLeftMarker, "goR", 1);
                }
            } else {
                const std::string x = bn.substr(static_cast<std::size_t>(total - ell), static_cast<std::size_t>(w));
                std::string sc = add_suffix_check(b, tail, "", "goR");
                std::string core = add_window_loop(b, n, "", sc);
                std::string pc = add_precheck(b, n, "", core);
                add_rewind(b, "scan_rewind", pc);
                b.initial(add_kmp(b, x, "", "scan_rewind"));
            }
            return b.build(note);
        }
    }
    throw ContractError("unreachable family kind");
}

}  // namespace limitada
