#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cg_corpus.hpp"
#include "limitada/common_guess.hpp"
#include "limitada/errors.hpp"
#include "limitada/limited.hpp"
#include "limitada/run.hpp"

using namespace limitada;

namespace {

Word unary(long long m) { return Word(static_cast<std::size_t>(m), 0); }

// Accepts exactly a^k: marks cells while counting, then checks the right endmarker.
OneLimitedMachine exact_length(int k) {
    OneLimitedMachine m(Alphabet({"a"}), Alphabet({"a", "x"}), k + 1);
    for (int q = 0; q < k; ++q) m.add(q, 0, q + 1, 1, 1);
    m.set_final(k);
    return m;
}

}  // namespace

TEST_CASE("rewrite discipline") {
    auto m = exact_length(3);
    CHECK(validate_1la(m).empty());
    OneLimitedMachine bad(Alphabet({"a"}), Alphabet({"a", "x"}), 1);
    bad.add(0, 0, 0, 0, 1);
    CHECK(validate_1la(bad).size() == 1);
    OneLimitedMachine bad2(Alphabet({"a"}), Alphabet({"a", "x"}), 1);
    bad2.add(0, 1, 0, 0, 1);
    bad2.add(0, bad2.left(), 0, bad2.right(), 1);
    CHECK(validate_1la(bad2).size() == 2);
    CHECK_THROWS_AS(accepts_1la(bad, {0}), ContractError);
}

TEST_CASE("membership") {
    auto m = exact_length(4);
    CHECK(accepts_1la(m, unary(4)));
    CHECK_FALSE(accepts_1la(m, unary(5)));
    CHECK_FALSE(accepts_1la(m, unary(3)));
    CHECK(is_deterministic_1la(m));
    OneLimitedMachine empty(Alphabet({"a"}), Alphabet({"a", "x"}), 1);
    CHECK(is_deterministic_1la(empty));
    OneLimitedMachine two(Alphabet({"a"}), Alphabet({"a", "x"}), 2);
    two.add(0, 0, 0, 1, 1);
    two.add(0, 0, 1, 1, 1);
    CHECK_FALSE(is_deterministic_1la(two));
    auto sz = size(m);
    CHECK(sz.states == 5);
    CHECK(sz.work_symbols == 2);
    CHECK(sz.non_input_symbols == 1);
    CHECK(sz.measure == 100);
}

TEST_CASE("rewritten cells are read back") {
    // Marks the first cell, bounces off the right end, and accepts only if it
    // reads the mark on the way back.
    OneLimitedMachine m(Alphabet({"a"}), Alphabet({"a", "x"}), 4);
    m.add(0, 0, 1, 1, 1);
    m.add(1, 0, 1, 1, 1);
    m.add(1, m.right(), 2, m.right(), -1);
    m.add(2, 1, 2, 1, -1);
    m.add(2, m.left(), 3, m.left(), 1);
    m.add(3, 1, 3, 1, 1);
    m.set_final(3);
    CHECK(validate_1la(m).empty());
    CHECK(accepts_1la(m, unary(3)));
    CHECK_FALSE(accepts_1la(m, unary(0)));
    CHECK_THROWS_AS(accepts_1la(m, unary(3), 2), ResourceError);
}

TEST_CASE("common-guess machines and their 1-LA agree") {
    for (const auto& cg : cg_corpus()) {
        OneLimitedMachine la = cg_to_1la(cg);
        CHECK(la.states() == cg.states() + 1);
        CHECK(validate_1la(la).empty());
        for_each_word(cg.input().size(), 6, 1'000'000, [&](const Word& w) {
            CHECK(accepts_cg(cg, w).accepted == accepts_1la(la, w));
        });
    }
}

TEST_CASE("predictive conversion") {
    for (int n = 1; n <= 3; ++n) {
        auto cg = norm_of(factor_family(FamilyKind::PrefExact, n, binseq_length(n)));
        auto d = predictive_cg_to_d1la(cg);
        CHECK(is_deterministic_1la(d));
        CHECK(validate_1la(d).empty());
        CHECK(d.states() == cg.states());
        for (long long m = 0; m <= 40; ++m) CHECK(accepts_1la(d, unary(m)) == (m == binseq_length(n)));
    }
}
