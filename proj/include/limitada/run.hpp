#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limitada/machines.hpp"

namespace limitada {

inline constexpr std::size_t kDefaultEnumerationBudget = 20'000'000;

// Configuration-graph reachability: accepts iff (final, right endmarker) is reachable.
bool accepts_2way(const TwoWayMachine& m, const Word& w);

enum class Outcome { Accept, RejectHalt, RejectLoop };
std::string to_string(Outcome o);

struct Trace {
    Outcome outcome = Outcome::RejectHalt;
    std::size_t steps = 0;
    // (cell, state) in order of first visit; cell 0 is the left endmarker.
    std::vector<std::pair<int, int>> first_visits;
};

Trace run_2dfa_trace(const TwoWayMachine& m, const Word& w);

struct OneWayResult {
    bool accepted = false;
    std::optional<std::string> label;
};

OneWayResult accepts_1way(const OneWayMachine& m, const Word& w);

// Pure membership predicate over a fixed alphabet.
struct LanguageOracle {
    Alphabet alphabet;
    std::function<bool(const Word&)> member;
};

LanguageOracle oracle_of(const TwoWayMachine& m);
LanguageOracle oracle_of(const OneWayMachine& m);

// Calls f on every word of length <= max_len in shortlex order (alphabet index
// order); throws ResourceError if the count exceeds budget.
void for_each_word(int alphabet_size, int max_len, std::size_t budget,
                   const std::function<void(const Word&)>& f);
std::size_t count_words(int alphabet_size, int max_len);

std::vector<Word> language_upto(const LanguageOracle& o, int max_len,
                                std::size_t budget = kDefaultEnumerationBudget);

struct Equivalence {
    bool equal = true;
    std::optional<Word> witness;  // shortest word in exactly one language
};

Equivalence equivalent_upto(const LanguageOracle& a, const LanguageOracle& b, int max_len,
                            std::size_t budget = kDefaultEnumerationBudget);

}  // namespace limitada
