#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "limitada/binseq.hpp"
#include "limitada/errors.hpp"
#include "limitada/run.hpp"
#include "oracles.hpp"

using namespace limitada;

namespace {

// Nondeterministic step simulation with an explicit frontier per step count.
bool step_simulation(const TwoWayMachine& m, const Word& w) {
    const int cells = static_cast<int>(w.size()) + 2;
    std::set<std::pair<int, int>> frontier{{m.initial(), 1}}, seen = frontier;
    while (!frontier.empty()) {
        std::set<std::pair<int, int>> next;
        for (auto [q, pos] : frontier) {
            int sym = pos == 0 ? m.left() : pos == cells - 1 ? m.right() : w[static_cast<std::size_t>(pos - 1)];
            if (sym == m.right() && m.is_final(q)) return true;
            for (const Step& st : m.at(q, sym))
                if (seen.insert({st.to, pos + st.dir}).second) next.insert({st.to, pos + st.dir});
        }
        frontier = std::move(next);
    }
    return false;
}

TwoWayMachine random_2nfa(std::mt19937& rng, int states) {
    TwoWayMachine m(Alphabet({"0", "1"}), states);
    std::uniform_int_distribution<int> coin(0, 9), pick(0, states - 1);
    for (int q = 0; q < states; ++q) {
        if (coin(rng) < 3) m.set_final(q);
        for (int s = 0; s < m.tape_symbols(); ++s)
            for (int k = 0; k < 2; ++k) {
                if (coin(rng) < 4) continue;
                int dir = coin(rng) < 5 ? 1 : -1;
                if (s == m.left()) dir = 1;
                if (s == m.right()) dir = -1;
                m.add(q, s, pick(rng), dir);
            }
    }
    return m;
}

}  // namespace

TEST_CASE("alphabet") {
    Alphabet a({"0", "1", "#"});
    CHECK(a.size() == 3);
    CHECK(a.id("#") == 2);
    CHECK(a.find("$") == -1);
    CHECK_THROWS_AS(a.id("$"), InputError);
    CHECK(a.encode("0 1,#") == Word{0, 1, 2});
    CHECK(a.decode({2, 1}) == "#1");
    CHECK_THROWS_AS(a.encode("2"), InputError);
    CHECK_THROWS_AS(Alphabet({"0", "0"}), InputError);
    CHECK_THROWS_AS(Alphabet({"<"}), InputError);
    CHECK_THROWS_AS(Alphabet({""}), InputError);
    Alphabet p({"a|0", "a|1", "a"});
    CHECK(p.encode("a|1a") == Word{1, 2});
    std::string x, y;
    CHECK(split_pair_symbol(make_pair_symbol("a", "#"), x, y));
    CHECK(x == "a");
    CHECK(y == "#");
}

TEST_CASE("validation reports every violation") {
    TwoWayMachine m(Alphabet({"0"}), 2);
    CHECK(m.validate().empty());
    m.add(0, m.left(), 1, -1);
    m.add(1, m.right(), 0, 1);
    CHECK(m.validate().size() == 2);
    CHECK_THROWS_AS(m.add(0, 0, 2, 1), InputError);
    CHECK_THROWS_AS(m.add(0, 0, 1, 0), InputError);
}

TEST_CASE("empty word and trivial machines") {
    TwoWayMachine m(Alphabet({"0"}), 1);
    m.set_final(0);
    CHECK(accepts_2way(m, {}));
    CHECK_FALSE(accepts_2way(m, {0}));
    m.add(0, 0, 0, 1);
    CHECK(accepts_2way(m, {0, 0, 0}));
    CHECK(run_2dfa_trace(m, {0, 0}).outcome == Outcome::Accept);
}

TEST_CASE("loop detection") {
    TwoWayMachine m(Alphabet({"0"}), 2);
    m.add(0, 0, 1, 1);
    m.add(1, 0, 0, -1);
    Trace t = run_2dfa_trace(m, {0, 0});
    CHECK(t.outcome == Outcome::RejectLoop);
    CHECK(t.steps <= static_cast<std::size_t>(m.states() * 4));
    CHECK_FALSE(accepts_2way(m, {0, 0}));
    TwoWayMachine h(Alphabet({"0"}), 1);
    CHECK(run_2dfa_trace(h, {0}).outcome == Outcome::RejectHalt);
}

TEST_CASE("trace records first visits") {
    auto m = factor_family(FamilyKind::PrefExact, 1, 4);
    Trace t = run_2dfa_trace(m, binseq_alphabet().encode("0#1#"));
    CHECK(t.outcome == Outcome::Accept);
    std::set<int> cells;
    for (auto [cell, state] : t.first_visits) {
        CHECK(cells.insert(cell).second);
        CHECK(cell >= 0);
        CHECK(cell <= 5);
        (void)state;
    }
    CHECK(cells.size() == 6);
}

TEST_CASE("reachability agrees with step simulation on random machines") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        auto m = random_2nfa(rng, 1 + trial % 4);
        for_each_word(2, 6, 1'000'000, [&](const Word& w) { CHECK(accepts_2way(m, w) == step_simulation(m, w)); });
    }
}

TEST_CASE("deterministic trace agrees with reachability and stays on the tape") {
    std::mt19937 rng(11);
    Alphabet al({"0", "1"});
    for (int trial = 0; trial < 200; ++trial) {
        auto m = oracle::random_2dfa(rng, 1 + trial % 5, al);
        REQUIRE(m.validate().empty());
        for_each_word(2, 6, 1'000'000, [&](const Word& w) {
            Trace t = run_2dfa_trace(m, w);
            bool a = accepts_2way(m, w);
            CHECK((t.outcome == Outcome::Accept) == a);
            CHECK(a == oracle::run_2dfa(m, w));
            for (auto [cell, state] : t.first_visits) {
                CHECK(cell >= 0);
                CHECK(cell <= static_cast<int>(w.size()) + 1);
                (void)state;
            }
        });
    }
    TwoWayMachine nd(al, 2);
    nd.add(0, 0, 0, 1);
    nd.add(0, 0, 1, 1);
    CHECK_THROWS_AS(run_2dfa_trace(nd, {0}), ContractError);
}

TEST_CASE("one-way runs and labels") {
    OneWayMachine m(Alphabet({"a", "b"}), 2);
    m.add(0, 0, 1);
    m.set_final(1);
    m.set_label(1, "seen-a");
    auto r = accepts_1way(m, {0});
    CHECK(r.accepted);
    CHECK(r.label == std::optional<std::string>("seen-a"));
    CHECK_FALSE(accepts_1way(m, {1}).accepted);
    CHECK_THROWS_AS(accepts_1way(m, {5}), InputError);
    OneWayMachine n(Alphabet({"a"}), 2);
    n.add(0, 0, 0);
    n.add(0, 0, 1);
    n.set_final(1);
    CHECK(accepts_1way(n, {0, 0}).accepted);
    CHECK_FALSE(n.deterministic());
}

TEST_CASE("bounded enumeration") {
    CHECK(count_words(3, 2) == 13);
    std::vector<Word> seen;
    for_each_word(2, 2, 100, [&](const Word& w) { seen.push_back(w); });
    CHECK(seen == std::vector<Word>{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(for_each_word(3, 20, 1000, [](const Word&) {}), ResourceError);

    auto b1 = factor_family(FamilyKind::PrefExact, 2, 12);
    auto lang = language_upto(oracle_of(b1), 12);
    REQUIRE(lang.size() == 1);
    CHECK(binseq_alphabet().decode(lang[0]) == "00#01#10#11#");
    auto b2 = factor_family(FamilyKind::PrefAtLeast, 2, 12);
    CHECK(equivalent_upto(oracle_of(b1), oracle_of(b2), 12).equal);
    auto b3 = factor_family(FamilyKind::PrefAtLeast, 2, 11);
    auto e = equivalent_upto(oracle_of(b1), oracle_of(b3), 12);
    CHECK_FALSE(e.equal);
    REQUIRE(e.witness);
    CHECK(binseq_alphabet().decode(*e.witness) == "00#01#10#11");
}
