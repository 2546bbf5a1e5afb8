#pragma once

#include <optional>
#include <string>

#include "limitada/machines.hpp"

namespace limitada {

// Machines for one language, keyed by role. Roles left empty are not built.
struct WitnessBundle {
    int n = 0;
    std::string language;
    std::optional<CommonGuessMachine> cg;
    std::optional<OneLimitedMachine> d1la;
    std::optional<OneLimitedMachine> la;  // nondeterministic
    std::optional<TwoWayMachine> two_way;
    std::optional<OneWayMachine> one_way;
};

// {a^{2^n(n+1)}}: the length language of the whole binary sequence.
WitnessBundle l_n_bundle(int n);

// Nonempty suffixes of b_n.
TwoWayMachine suffixes_2dfa(int n);

// Words of $-terminated blocks whose blocks agree on their first n symbols,
// or repeat one block u$ with |u| < n.
TwoWayMachine same_prefix_2dfa(int n);

// (u$)^k with k >= 1 and u a nonempty suffix of b_n.
TwoWayMachine ifbs_2dfa(int n);

// Unary words whose length has a divisor in [2, 2^n(n+1)+1], or is 0.
CommonGuessMachine m_n_cg(int n);

// One cycle per prime p <= 2^n(n+1)+1 plus an accepting initial state.
OneWayMachine m_n_small_1nfa(int n, std::size_t max_states = 5'000'000);

WitnessBundle m_n_bundle(int n);

}  // namespace limitada
