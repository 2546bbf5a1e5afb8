#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limitada/machines.hpp"

namespace limitada {

inline constexpr std::size_t kDefaultStateBudget = 5'000'000;

// Crossing-table construction for a deterministic two-way machine. Table
// layout: [entry, f(0), ..., f(n-1)], -1 meaning "never leaves rightward".
OneWayMachine shepherdson(const TwoWayMachine& a, std::size_t max_states = kDefaultStateBudget);

// Shepherdson on the underlying machine, then union over annotations.
OneWayMachine project_cg_to_1nfa(const CommonGuessMachine& m,
                                 std::size_t max_states = kDefaultStateBudget);

// Reachable subsets only; states that cannot reach a final state are left out
// of every subset, and the empty subset is the dead state.
OneWayMachine powerset(const OneWayMachine& n, std::size_t max_states = kDefaultStateBudget);

OneWayMachine trim_unreachable(const OneWayMachine& d);
// Adds a sink state only if some transition is missing.
OneWayMachine complete_dfa(const OneWayMachine& d);
// Canonical minimal complete DFA; labels refine the initial partition.
OneWayMachine minimize_dfa(const OneWayMachine& d);

// Accepted words of a DFA of length <= max_len, shortlex order.
std::vector<Word> accepted_words_upto(const OneWayMachine& d, int max_len,
                                      std::size_t budget = 1'000'000);

// Accepts (L(m) $)*; the result has 2n+1 states, state 0 being the fresh initial one.
TwoWayMachine dollar_star(const TwoWayMachine& m, const std::string& dollar = "$");

// Removes moves out of (final, right endmarker) configurations, so the machine
// halts as soon as it accepts. Adds no states.
TwoWayMachine halt_on_accept(const TwoWayMachine& m);

// Adds a fresh initial state that accepts the empty word and otherwise
// behaves as the old initial state.
TwoWayMachine accept_empty(const TwoWayMachine& m);

// Runs a, and after acceptance rewinds to the left endmarker and runs b.
TwoWayMachine seq_intersect_2dfa(const TwoWayMachine& a, const TwoWayMachine& b);

struct ClassifierComponent {
    OneWayMachine machine;
    std::string tag;
};

// Synchronous product of deterministic machines; a product state is labelled
// with the tags of its accepting components, joined by '+'. When dead_label is
// given, the all-rejecting trap is kept as a labelled sink.
OneWayMachine product_classifier(const std::vector<ClassifierComponent>& components,
                                 const std::optional<std::string>& dead_label = std::nullopt);

}  // namespace limitada
