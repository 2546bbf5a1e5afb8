#include "limitada/witnesses.hpp"

#include "limitada/analysis.hpp"
#include "limitada/binseq.hpp"
#include "limitada/builder.hpp"
#include "limitada/common_guess.hpp"
#include "limitada/errors.hpp"
#include "limitada/transforms.hpp"

namespace limitada {

namespace {

const std::vector<std::string> kBlockSymbols{"0", "1", "#", "$"};

std::string idx(const std::string& base, const std::string& sigma, int k) {
    return base + "[" + sigma + "," + std::to_string(k) + "]";
}
std::string idx(const std::string& base, int k) { return base + std::to_string(k); }

}  // namespace

WitnessBundle l_n_bundle(int n) {
    WitnessBundle b;
    b.n = n;
    b.language = "Ln";
    b.two_way = factor_family(FamilyKind::PrefExact, n, binseq_length(n));
    b.cg = norm_of(*b.two_way);
    b.d1la = predictive_cg_to_d1la(*b.cg);
    return b;
}

TwoWayMachine suffixes_2dfa(int n) {
    TwoWayMachine m = factor_family(FamilyKind::SuffAtLeast, n, 1);
    m.note = "nonempty suffixes of the binary sequence, n=" + std::to_string(n);
    return m;
}

TwoWayMachine same_prefix_2dfa(int n) {
    if (n < 1) throw InputError("n must be positive");
    TwoWayBuilder b{Alphabet(kBlockSymbols)};
    // s: guard; L_j: back to the left endmarker; ST/SB: fetch sigma = symbol j
    // of the first block; PK: at the start of a block; CF/CB: compare symbol j
    // of the current block and return; SK: skip to the next block.
    b.initial("s");
    for (const char* c : {"0", "1", "#"}) b.on("s", c, "L1", -1);
    for (int j = 1; j <= n; ++j) {
        b.on_all(idx("L", j), idx("L", j), -1);
        b.on(idx("L", j), kRightMarker, idx("L", j), -1);
        b.on(idx("L", j), kLeftMarker, idx("ST", j - 1), 1);
    }
    for (int r = 0; r < n; ++r)
        for (const auto& t : kBlockSymbols) b.on(idx("ST", r), t, r > 0 ? idx("ST", r - 1) : idx("SB", t, 1), r > 0 ? 1 : -1);
    for (const auto& sigma : kBlockSymbols) {
        for (int c = 1; c <= n; ++c) {
            for (const char* t : {"0", "1", "#"}) {
                if (c < n) b.on(idx("SB", sigma, c), t, idx("SB", sigma, c + 1), -1);
                if (c < n) b.on(idx("CB", sigma, c), t, idx("CB", sigma, c + 1), -1);
            }
            for (const char* t : {kLeftMarker, "$"}) {
                b.on(idx("SB", sigma, c), t, idx("PK", sigma, c), 1);
                b.on(idx("CB", sigma, c), t, idx("SK", sigma, c), 1);
            }
            for (const char* t : {"0", "1", "#"}) b.on(idx("SK", sigma, c), t, idx("SK", sigma, c), 1);
            b.on(idx("SK", sigma, c), "$", idx("PK", sigma, c), 1);

            const std::string pk = idx("PK", sigma, c);
            if (sigma == "$" || c == n)
                b.accept(pk);
            else
                b.on(pk, kRightMarker, idx("L", c + 1), -1);
            for (const auto& t : kBlockSymbols) {
                if (c > 1)
                    b.on(pk, t, idx("CF", sigma, c - 2), 1);
                else if (t == sigma)
                    b.on(pk, t, idx("CB", sigma, 1), -1);
            }
        }
        for (int r = 0; r + 2 <= n; ++r)
            for (const auto& t : kBlockSymbols) {
                if (r > 0)
                    b.on(idx("CF", sigma, r), t, idx("CF", sigma, r - 1), 1);
                else if (t == sigma)
                    b.on(idx("CF", sigma, r), t, idx("CB", sigma, 1), -1);
            }
    }
    return b.build("blocks sharing a prefix of length " + std::to_string(n));
}

TwoWayMachine ifbs_2dfa(int n) {
    TwoWayMachine m = seq_intersect_2dfa(dollar_star(suffixes_2dfa(n)), same_prefix_2dfa(n + 1));
    m.note = "repetitions of one nonempty suffix of the binary sequence, n=" + std::to_string(n);
    return m;
}

CommonGuessMachine m_n_cg(int n) {
    TwoWayMachine m = accept_empty(ifbs_2dfa(n));
    m.note = "repetitions of one nonempty suffix of the binary sequence, or the empty word, n=" + std::to_string(n);
    return norm_of(m);
}

OneWayMachine m_n_small_1nfa(int n, std::size_t max_states) {
    auto primes = primes_upto(static_cast<long long>(binseq_length(n)) + 1);
    std::size_t total = 1;
    for (long long p : primes) total += static_cast<std::size_t>(p);
    if (total > max_states) throw ResourceError("prime cycles exceed the state budget", total);
    OneWayMachine m(Alphabet({"a"}), 1);
    m.set_name(0, "start");
    m.set_final(0);
    for (long long p : primes) {
        int base = m.states();
        for (long long r = 0; r < p; ++r) m.add_state("c" + std::to_string(p) + "_" + std::to_string(r));
        m.set_final(base);
        for (long long r = 0; r < p; ++r) m.add(base + static_cast<int>(r), 0, base + static_cast<int>((r + 1) % p));
        m.add(0, 0, base + static_cast<int>(1 % p));
    }
    m.note = "union of prime cycles up to " + std::to_string(binseq_length(n) + 1);
    return m;
}

WitnessBundle m_n_bundle(int n) {
    WitnessBundle b;
    b.n = n;
    b.language = "Mn";
    b.cg = m_n_cg(n);
    b.two_way = b.cg->underlying();
    b.la = cg_to_1la(*b.cg);
    b.one_way = m_n_small_1nfa(n);
    return b;
}

}  // namespace limitada
