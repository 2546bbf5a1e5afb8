#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "limitada/analysis.hpp"
#include "limitada/errors.hpp"
#include "limitada/transforms.hpp"
#include "oracles.hpp"

using namespace limitada;

TEST_CASE("prime utilities") {
    CHECK(primorial(5) == 30);
    CHECK(primorial(13) == 30030);
    CHECK(primorial(1) == 1);
    CHECK(sum_primes(5) == 10);
    CHECK(primes_upto(1).empty());
    for (long long k = 0; k <= 400; ++k) {
        std::vector<long long> expect;
        for (long long p = 2; p <= k; ++p)
            if (oracle::is_prime(p)) expect.push_back(p);
        CHECK(primes_upto(k) == expect);
        CHECK(primorial(k) == oracle::primorial(k));
    }
}

TEST_CASE("divisor language oracle") {
    auto o = m_n_oracle(1);
    CHECK(o.member(Word(25, 0)));
    CHECK(o.member(Word{}));
    CHECK_FALSE(o.member(Word(11, 0)));
    for (int n = 0; n <= 3; ++n) {
        auto f = m_n_lengths(n);
        for (long long m = 0; m <= 2000; ++m) {
            CHECK(f(m) == oracle::m_n(n, m));
            CHECK(m_n_member(n, m) == oracle::m_n(n, m));
        }
    }
}

TEST_CASE("residues modulo the primorial decide membership") {
    for (int n = 1; n <= 2; ++n) {
        long long c = static_cast<long long>(oracle::primorial(oracle::k_of(n)));
        auto f = m_n_lengths(n);
        for (long long m = 0; m <= 3 * c; ++m) CHECK(f(m) == f(m % c));
    }
}

TEST_CASE("window profile") {
    auto p = cyclic_profile(m_n_lengths(1), 120);
    CHECK(p.window_consistent);
    CHECK(p.preperiod == 0);
    CHECK(p.period == 30);
    auto all = cyclic_profile([](long long) { return true; }, 50);
    CHECK(all.period == 1);
    auto p2 = cyclic_profile(m_n_lengths(2), 90090);
    CHECK(p2.period == 30030);
    CHECK(p2.preperiod == 0);
    auto none = cyclic_profile([](long long m) { return oracle::is_prime(m); }, 40);
    CHECK(none.period == 1);
    CHECK(none.preperiod == 38);
    CHECK_FALSE(cyclic_profile([](long long m) { return m == 5; }, 5).window_consistent);
    auto late = cyclic_profile([](long long m) { return m >= 7 && m % 3 == 0; }, 60);
    CHECK(late.period == 3);
    CHECK(late.preperiod == 7);
}

TEST_CASE("cyclic automata are minimal") {
    auto d = cyclic_dfa_from_oracle(m_n_lengths(1), 30);
    CHECK(d.states() == 30);
    CHECK(minimize_dfa(d).states() == 30);
    auto t = cyclic_dfa_from_oracle([](long long) { return true; }, 1);
    CHECK(t.states() == 1);
    CHECK(t.is_final(0));
    CHECK_THROWS_AS(cyclic_dfa_from_oracle(m_n_lengths(1), 7), InputError);
    // A non-minimal period shrinks under minimization.
    CHECK(minimize_dfa(cyclic_dfa_from_oracle(m_n_lengths(1), 60)).states() == 30);
}

TEST_CASE("fooling sets") {
    auto comp = complement(m_n_oracle(1));
    auto pairs = fooling_pairs_for_complement(1);
    CHECK(pairs.size() == 8);
    auto r = check_extended_fooling_set(pairs, comp);
    CHECK(r.ok);
    // X = {2,3} is mask 0b011 with primes in increasing order.
    CHECK(pairs[3].x.size() == 6);
    CHECK(pairs[3].y.size() == 5);
    CHECK(pairs[0].x.size() == 1);
    CHECK(pairs[0].y.size() == 30);
    auto dup = pairs;
    dup.push_back(pairs[2]);
    auto rd = check_extended_fooling_set(dup, comp);
    CHECK_FALSE(rd.ok);
    CHECK_FALSE(rd.cross_failures.empty());
    CHECK(check_extended_fooling_set({}, comp).ok);
    auto p2 = fooling_pairs_for_complement(2);
    CHECK(p2.size() == 64);
    CHECK(check_extended_fooling_set(p2, complement(m_n_oracle(2))).ok);
    CHECK_THROWS_AS(fooling_pairs_for_complement(3), ResourceError);
}

TEST_CASE("bound report") {
    for (int n = 0; n <= 6; ++n) {
        auto r = bound_report(n);
        INFO("n=" << n);
        CHECK(r.required_hold());
        CHECK(r.k == oracle::k_of(n));
        CHECK(r.checks.front().holds);
    }
    auto r1 = bound_report(1);
    CHECK(r1.checks.front().rhs.find("=4") != std::string::npos);
    auto r4 = bound_report(4);
    CHECK(r4.checks.front().lhs.rfind("primorial(81)", 0) == 0);
    for (int n : {2, 4, 6}) {
        auto r = bound_report(n);
        for (const auto& c : r.checks)
            if (c.name == "one_la_complement_literal") CHECK_FALSE(c.holds);
    }
    CHECK(bound_report(0).checks.front().note.find("direct") != std::string::npos);
}
