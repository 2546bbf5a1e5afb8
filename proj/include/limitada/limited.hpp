#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "limitada/machines.hpp"

namespace limitada {

inline constexpr std::size_t kDefaultConfigBudget = 20'000'000;

std::vector<std::string> validate_1la(const OneLimitedMachine& m);

// Exhaustive search over (state, head, tape) configurations.
bool accepts_1la(const OneLimitedMachine& m, const Word& w,
                 std::size_t max_configs = kDefaultConfigBudget);

bool is_deterministic_1la(const OneLimitedMachine& m);

struct LaSize {
    int states = 0;
    int work_symbols = 0;      // |work alphabet|
    int non_input_symbols = 0; // |work alphabet \ input alphabet|
    unsigned long long measure = 0;  // states^2 * |work|^2
};

LaSize size(const OneLimitedMachine& m);

}  // namespace limitada
