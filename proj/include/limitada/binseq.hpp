#pragma once

#include <string>
#include <vector>

#include "limitada/machines.hpp"

namespace limitada {

// Alphabet {0,1,#} shared by every machine of this module.
Alphabet binseq_alphabet();

// bin(0)#bin(1)#...#bin(2^n-1)#, n-bit big-endian counters.
std::string full_binary_sequence(int n);
long long binseq_length(int n);  // 2^n (n+1)

struct SuccessorSplit {
    std::string x;
    int m = 0;
};
// bin(i) = x 0 1^m and bin(i+1) = x 1 0^m.
SuccessorSplit successor_split(long long i, int n);

// Recognizers of X_0, X_1, X_#, X_$ in that order.
std::vector<OneWayMachine> x_sigma_dfas();

// Minimized product of the four recognizers plus the dead-context trap;
// states are labelled "0", "1", "#", "$" or "bot".
OneWayMachine f_classifier();

// Product with a length-(n+1) counter. Reaching a state labelled r_0, r_1,
// r_#, r_$ or r_bot happens exactly after n+1 symbols; these states halt.
OneWayMachine f_n_classifier(int n);

// Two-way machine for the factors of b_n.
TwoWayMachine is_fact_binseq_2dfa(int n);

// Two-way machine for the unique factor of b_n that starts with x and ends with y.
TwoWayMachine factor_machine(int n, const std::string& x, const std::string& y);

enum class FamilyKind { PrefExact, SuffExact, PrefAtLeast, SuffAtLeast };
FamilyKind parse_family_kind(const std::string& s);
std::string to_string(FamilyKind k);

// Prefixes or suffixes of b_n of length exactly ell or at least ell.
TwoWayMachine factor_family(FamilyKind kind, int n, long long ell);

}  // namespace limitada
