#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "limitada/binseq.hpp"
#include "limitada/common_guess.hpp"
#include "limitada/errors.hpp"
#include "limitada/run.hpp"
#include "oracles.hpp"

using namespace limitada;

namespace {

bool acc(const TwoWayMachine& m, const std::string& w) { return accepts_2way(m, m.alphabet().encode(w)); }

std::set<std::string> language(const TwoWayMachine& m, int max_len) {
    std::set<std::string> out;
    for (const auto& w : oracle::words_upto("01#", max_len))
        if (acc(m, w)) out.insert(w);
    return out;
}

}  // namespace

TEST_CASE("full binary sequence") {
    CHECK(full_binary_sequence(3) == "000#001#010#011#100#101#110#111#");
    CHECK(full_binary_sequence(1) == "0#1#");
    CHECK(full_binary_sequence(2).size() == 12);
    for (int n = 1; n <= 6; ++n) {
        CHECK(full_binary_sequence(n) == oracle::binseq(n));
        CHECK(binseq_length(n) == static_cast<long long>(oracle::binseq(n).size()));
    }
    CHECK_THROWS_AS(full_binary_sequence(0), InputError);
}

TEST_CASE("successor split") {
    auto s = successor_split(3, 3);
    CHECK(s.x.empty());
    CHECK(s.m == 2);
    s = successor_split(0, 2);
    CHECK(s.x == "0");
    CHECK(s.m == 0);
    for (int n = 1; n <= 5; ++n) {
        auto bits = oracle::all_bit_strings(n);
        for (long long i = 0; i + 1 < (1LL << n); ++i) {
            auto sp = successor_split(i, n);
            CHECK(sp.x + "0" + std::string(static_cast<std::size_t>(sp.m), '1') == bits[static_cast<std::size_t>(i)]);
            CHECK(sp.x + "1" + std::string(static_cast<std::size_t>(sp.m), '0') == bits[static_cast<std::size_t>(i + 1)]);
        }
        CHECK_THROWS_AS(successor_split((1LL << n) - 1, n), InputError);
        CHECK_THROWS_AS(successor_split(-1, n), InputError);
    }
}

TEST_CASE("context recognizers") {
    auto xs = x_sigma_dfas();
    REQUIRE(xs.size() == 4);
    auto in = [&](int i, const std::string& w) { return accepts_1way(xs[static_cast<std::size_t>(i)], binseq_alphabet().encode(w)).accepted; };
    CHECK(in(3, "11#"));
    CHECK_FALSE(in(3, "1#1"));
    CHECK(in(2, "#01"));
    CHECK_FALSE(in(2, "#"));
    CHECK(in(0, "1#1"));
    const char* tags[] = {"0", "1", "#", "$"};
    for (const auto& w : oracle::words_upto("01#", 7)) {
        std::string expect = oracle::x_sigma_of(w);
        REQUIRE(expect != "overlap");
        for (int i = 0; i < 4; ++i) CHECK(in(i, w) == (expect == tags[i]));
        for (const auto& m : xs) CHECK(m.deterministic());
    }
}

TEST_CASE("classifier") {
    OneWayMachine f = f_classifier();
    CHECK(f.deterministic());
    CHECK(f.states() <= 16);
    MESSAGE("classifier states: " << f.states());
    auto label = [&](const std::string& w) { return accepts_1way(f, binseq_alphabet().encode(w)).label; };
    CHECK(label("10#") == std::optional<std::string>("1"));
    CHECK(label("##") == std::optional<std::string>("bot"));
    CHECK_FALSE(label("").has_value());
    for (const auto& w : oracle::words_upto("01#", 7)) {
        std::string expect = oracle::x_sigma_of(w);
        auto l = label(w);
        if (expect != "bot") {
            CHECK(l == std::optional<std::string>(expect));
        } else {
            // Unlabelled words are proper prefixes of some context.
            if (l) CHECK(*l == "bot");
        }
    }
}

TEST_CASE("length-gated classifier") {
    for (int n = 1; n <= 4; ++n) {
        OneWayMachine fn = f_n_classifier(n);
        CHECK(fn.deterministic());
        CHECK(fn.states() <= 11 * (n + 2));
        for (int q = 0; q < fn.states(); ++q)
            if (fn.label(q))
                for (int s = 0; s < 3; ++s) CHECK(fn.at(q, s).empty());
        for (const auto& w : oracle::words_upto("01#", n + 1)) {
            auto r = accepts_1way(fn, binseq_alphabet().encode(w));
            if (static_cast<int>(w.size()) <= n) {
                CHECK_FALSE(r.label.has_value());
                continue;
            }
            CHECK(r.label == std::optional<std::string>("r_" + oracle::x_sigma_of(w)));
        }
    }
    auto fn2 = f_n_classifier(2);
    CHECK(accepts_1way(fn2, binseq_alphabet().encode("#01")).label == std::optional<std::string>("r_#"));
    CHECK(accepts_1way(fn2, binseq_alphabet().encode("11#")).label == std::optional<std::string>("r_$"));
    CHECK_FALSE(accepts_1way(fn2, binseq_alphabet().encode("0#")).label.has_value());
}

TEST_CASE("contexts predict the next symbol of the sequence") {
    for (int n = 1; n <= 4; ++n) {
        std::string b = oracle::binseq(n) + "$";
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) + 1 < b.size(); ++i) {
            std::string u = b.substr(i, static_cast<std::size_t>(n + 1));
            CHECK(oracle::x_sigma_of(u) == std::string(1, b[i + static_cast<std::size_t>(n) + 1]));
        }
        // Each window occurs once.
        std::string bn = oracle::binseq(n);
        std::set<std::string> seen;
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) < bn.size(); ++i)
            CHECK(seen.insert(bn.substr(i, static_cast<std::size_t>(n + 1))).second);
    }
    // The converse fails on words that are not factors.
    CHECK(oracle::x_sigma_of("1#0") == "0");
    CHECK(oracle::binseq(2).find("1#00") == std::string::npos);
}

TEST_CASE("short words with at most one separator are factors") {
    for (int n = 1; n <= 4; ++n) {
        auto fs = oracle::factors(oracle::binseq(n), static_cast<std::size_t>(n));
        for (const auto& w : oracle::words_upto("01#", n))
            CHECK((std::count(w.begin(), w.end(), '#') <= 1) == (fs.count(w) == 1));
    }
}

TEST_CASE("factor recognizer") {
    auto m2 = is_fact_binseq_2dfa(2);
    CHECK(m2.deterministic());
    CHECK(m2.validate().empty());
    CHECK(acc(m2, "#01#1"));
    CHECK_FALSE(acc(m2, "1#00"));
    CHECK(acc(m2, ""));
    for (int n = 1; n <= 3; ++n) {
        auto m = is_fact_binseq_2dfa(n);
        auto expect = oracle::factors(oracle::binseq(n), 8);
        CHECK(language(m, 8) == expect);
    }
}

TEST_CASE("factor machine") {
    auto m = factor_machine(1, "0#", "1#");
    CHECK(language(m, 8) == std::set<std::string>{"0#1#"});
    m = factor_machine(2, "00#", "01#");
    CHECK(language(m, 8) == std::set<std::string>{"00#01#"});
    CHECK_THROWS_AS(factor_machine(1, "1#", "0#"), InputError);
    CHECK_THROWS_AS(factor_machine(1, "0#1", "1#"), InputError);
    std::string b2 = oracle::binseq(2);
    for (std::size_t i = 0; i + 3 <= b2.size(); ++i)
        for (std::size_t j = i; j + 3 <= b2.size(); ++j) {
            auto f = factor_machine(2, b2.substr(i, 3), b2.substr(j, 3));
            std::string u = b2.substr(i, j + 3 - i);
            CHECK(acc(f, u));
            CHECK_FALSE(acc(f, u + "0"));
            CHECK_FALSE(acc(f, u.substr(1)));
        }
}

TEST_CASE("prefix and suffix families") {
    CHECK(language(factor_family(FamilyKind::PrefExact, 1, 4), 8) == std::set<std::string>{"0#1#"});
    CHECK(language(factor_family(FamilyKind::SuffExact, 1, 2), 8) == std::set<std::string>{"1#"});
    CHECK(language(factor_family(FamilyKind::PrefAtLeast, 1, 3), 8) == std::set<std::string>{"0#1", "0#1#"});
    CHECK_THROWS_AS(factor_family(FamilyKind::PrefExact, 1, 5), InputError);
    CHECK_THROWS_AS(factor_family(FamilyKind::PrefExact, 1, -1), InputError);
    CHECK(parse_family_kind("suff-atleast") == FamilyKind::SuffAtLeast);
    CHECK_THROWS_AS(parse_family_kind("prefix"), InputError);

    for (int n = 1; n <= 2; ++n) {
        std::string b = oracle::binseq(n);
        const int len = static_cast<int>(b.size());
        const int max_len = std::min(len + 1, 9);
        for (int ell = 0; ell <= len; ++ell) {
            std::set<std::string> pe, se, pa, sa;
            for (int l = 0; l <= len; ++l) {
                std::string p = b.substr(0, static_cast<std::size_t>(l));
                std::string s = b.substr(static_cast<std::size_t>(len - l));
                if (l > max_len) continue;
                if (l == ell) pe.insert(p), se.insert(s);
                if (l >= ell) pa.insert(p), sa.insert(s);
            }
            INFO("n=" << n << " ell=" << ell);
            CHECK(language(factor_family(FamilyKind::PrefExact, n, ell), max_len) == pe);
            CHECK(language(factor_family(FamilyKind::SuffExact, n, ell), max_len) == se);
            CHECK(language(factor_family(FamilyKind::PrefAtLeast, n, ell), max_len) == pa);
            CHECK(language(factor_family(FamilyKind::SuffAtLeast, n, ell), max_len) == sa);
        }
    }
}

TEST_CASE("families checked on sampled words at n=3") {
    const int n = 3;
    std::string b = oracle::binseq(n);
    const int len = static_cast<int>(b.size());
    for (int ell : {0, 2, 4, 5, 9, 17, 31, 32}) {
        auto pe = factor_family(FamilyKind::PrefExact, n, ell);
        auto se = factor_family(FamilyKind::SuffExact, n, ell);
        auto pa = factor_family(FamilyKind::PrefAtLeast, n, ell);
        auto sa = factor_family(FamilyKind::SuffAtLeast, n, ell);
        for (int l = 0; l <= len; ++l) {
            std::string p = b.substr(0, static_cast<std::size_t>(l));
            std::string s = b.substr(static_cast<std::size_t>(len - l));
            std::string mid = b.substr(1, static_cast<std::size_t>(std::min(l, len - 1)));
            INFO("ell=" << ell << " l=" << l);
            CHECK(acc(pe, p) == (l == ell));
            CHECK(acc(se, s) == (l == ell));
            CHECK(acc(pa, p) == (l >= ell));
            CHECK(acc(sa, s) == (l >= ell));
            if (!mid.empty() && b.rfind(mid, 0) != 0) {
                CHECK_FALSE(acc(pa, mid));
                CHECK_FALSE(acc(pe, mid));
            }
        }
    }
}

TEST_CASE("exact and prefix families are predictive") {
    for (int n = 1; n <= 2; ++n) {
        const long long len = binseq_length(n);
        for (long long ell = 0; ell <= len; ++ell)
            for (FamilyKind k : {FamilyKind::PrefExact, FamilyKind::SuffExact, FamilyKind::PrefAtLeast}) {
                auto cg = norm_of(factor_family(k, n, ell));
                INFO(to_string(k) << " n=" << n << " ell=" << ell);
                CHECK(is_predictive_bounded(cg, static_cast<int>(len) + 2).predictive);
            }
    }
}

TEST_CASE("state counts grow linearly") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(is_fact_binseq_2dfa(n).states() <= 20 * n + 25);
        CHECK(factor_family(FamilyKind::PrefExact, n, binseq_length(n)).states() <= 25 * n + 30);
    }
}
