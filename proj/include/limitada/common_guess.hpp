#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "limitada/machines.hpp"

namespace limitada {

inline constexpr std::size_t kDefaultAnnotationBudget = 20'000'000;

struct GuessResult {
    bool accepted = false;
    std::optional<Word> witness;  // annotation, lexicographically least
};

GuessResult accepts_cg(const CommonGuessMachine& m, const Word& w,
                       std::size_t max_annotations = kDefaultAnnotationBudget);

// Relabels each symbol g of a into the pair (unary_symbol, g).
CommonGuessMachine norm_of(const TwoWayMachine& a, const std::string& unary_symbol = "a");

std::set<int> predictive_states(const CommonGuessMachine& m);

struct PredictiveCheck {
    bool predictive = true;
    std::size_t words_checked = 0;
    std::optional<Word> word;  // underlying pair word with a violation
    int cell = -1;
    int state = -1;
};

// Replays every accepted underlying word of length <= max_len. Accepted words
// are enumerated through the crossing-table automaton, so the cost depends on
// the number of accepted words, not on the size of the word space.
PredictiveCheck is_predictive_bounded(const CommonGuessMachine& m, int max_len,
                                      std::size_t max_words = 1'000'000);

OneLimitedMachine predictive_cg_to_d1la(const CommonGuessMachine& m);

OneLimitedMachine cg_to_1la(const CommonGuessMachine& m);

}  // namespace limitada
