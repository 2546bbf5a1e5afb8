#pragma once

// Brute-force ground truth used by the tests. Nothing here calls into the
// library except for reading machine tables.

#include <algorithm>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "limitada/machines.hpp"

namespace oracle {

using limitada::Word;

inline std::vector<std::string> all_bit_strings(int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& s : out) {
            next.push_back(s + "0");
            next.push_back(s + "1");
        }
        out = next;
    }
    return out;
}

inline std::string binseq(int n) {
    std::string s;
    for (const auto& b : all_bit_strings(n)) s += b + "#";
    return s;
}

inline std::set<std::string> factors(const std::string& s, std::size_t max_len) {
    std::set<std::string> out{""};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t l = 1; l <= max_len && i + l <= s.size(); ++l) out.insert(s.substr(i, l));
    return out;
}

inline std::vector<std::string> words_upto(const std::string& letters, int max_len) {
    std::vector<std::string> out{""};
    std::vector<std::string> layer{""};
    for (int l = 1; l <= max_len; ++l) {
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (char c : letters) next.push_back(w + c);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Regex semantics of the four context languages.
inline std::string x_sigma_of(const std::string& u) {
    static const std::regex x0("1+#[01]+|01*0[01]*#[01]*");
    static const std::regex x1("01*#[01]*|11*0[01]*#[01]*");
    static const std::regex xh("#[01]+");
    static const std::regex xd("1+#");
    std::string hit;
    int count = 0;
    if (std::regex_match(u, x0)) hit = "0", ++count;
    if (std::regex_match(u, x1)) hit = "1", ++count;
    if (std::regex_match(u, xh)) hit = "#", ++count;
    if (std::regex_match(u, xd)) hit = "$", ++count;
    if (count > 1) return "overlap";
    return count ? hit : "bot";
}

inline std::vector<std::string> split_blocks(const std::string& w, bool& terminated) {
    std::vector<std::string> blocks;
    std::string cur;
    for (char c : w) {
        if (c == '$') {
            blocks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    terminated = cur.empty();
    return blocks;
}

inline bool same_prefix(const std::string& w, int n) {
    bool term = false;
    auto blocks = split_blocks(w, term);
    if (!term || blocks.empty()) return false;
    const auto& u = blocks[0];
    if (!u.empty() && static_cast<int>(u.size()) < n)
        return std::all_of(blocks.begin(), blocks.end(), [&](const std::string& b) { return b == u; });
    if (static_cast<int>(u.size()) < n) return false;
    return std::all_of(blocks.begin(), blocks.end(), [&](const std::string& b) {
        return static_cast<int>(b.size()) >= n && b.compare(0, static_cast<std::size_t>(n), u, 0, static_cast<std::size_t>(n)) == 0;
    });
}

inline bool is_nonempty_suffix(const std::string& w, const std::string& b) {
    return !w.empty() && w.size() <= b.size() && b.compare(b.size() - w.size(), w.size(), w) == 0;
}

inline bool ifbs(const std::string& w, int n) {
    bool term = false;
    auto blocks = split_blocks(w, term);
    if (!term || blocks.empty()) return false;
    std::string b = binseq(n);
    return is_nonempty_suffix(blocks[0], b) &&
           std::all_of(blocks.begin(), blocks.end(), [&](const std::string& x) { return x == blocks[0]; });
}

inline long long k_of(int n) { return (1LL << n) * (n + 1) + 1; }

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// a^m is in M_n iff m = 0 or some d in [2, k_n] divides m.
inline bool m_n(int n, long long m) {
    if (m == 0) return true;
    for (long long d = 2; d <= k_of(n); ++d)
        if (m % d == 0) return true;
    return false;
}

inline boost::multiprecision::cpp_int primorial(long long k) {
    boost::multiprecision::cpp_int r = 1;
    for (long long p = 2; p <= k; ++p)
        if (is_prime(p)) r *= p;
    return r;
}

// Step simulation of a deterministic two-way machine, bounded by the number
// of configurations.
inline bool run_2dfa(const limitada::TwoWayMachine& m, const Word& w) {
    const long long limit = static_cast<long long>(m.states()) * static_cast<long long>(w.size() + 2) + 1;
    int q = m.initial();
    long long pos = 1;
    for (long long step = 0; step <= limit; ++step) {
        int sym = pos == 0 ? m.left() : (pos == static_cast<long long>(w.size()) + 1 ? m.right() : w[static_cast<std::size_t>(pos - 1)]);
        if (sym == m.right() && m.is_final(q)) return true;
        const auto& steps = m.at(q, sym);
        if (steps.empty()) return false;
        q = steps[0].to;
        pos += steps[0].dir;
    }
    return false;
}

inline limitada::TwoWayMachine random_2dfa(std::mt19937& rng, int states, const limitada::Alphabet& al) {
    limitada::TwoWayMachine m(al, states);
    std::uniform_int_distribution<int> coin(0, 9), pick(0, states - 1);
    for (int q = 0; q < states; ++q) {
        if (coin(rng) < 4) m.set_final(q);
        for (int s = 0; s < m.tape_symbols(); ++s) {
            if (coin(rng) < 2) continue;
            int dir = coin(rng) < 6 ? 1 : -1;
            if (s == m.left()) dir = 1;
            if (s == m.right()) dir = -1;
            m.add(q, s, pick(rng), dir);
        }
    }
    return m;
}

inline std::string to_text(const limitada::Alphabet& a, const Word& w) {
    std::string s;
    for (int x : w) s += a[x];
    return s;
}

}  // namespace oracle
