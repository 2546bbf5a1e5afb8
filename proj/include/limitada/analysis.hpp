#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "limitada/machines.hpp"
#include "limitada/run.hpp"

namespace limitada {

using BigInt = boost::multiprecision::cpp_int;

std::vector<long long> primes_upto(long long k);
BigInt primorial(long long k);
BigInt sum_primes(long long k);

// 2^n(n+1)+1
long long k_of(int n);

// Membership by length, for unary languages.
using UnaryPredicate = std::function<bool(long long)>;

bool m_n_member(int n, long long m);
UnaryPredicate m_n_lengths(int n);
LanguageOracle m_n_oracle(int n);
LanguageOracle complement(const LanguageOracle& o);
UnaryPredicate lengths_of(const LanguageOracle& unary);

struct UnaryProfile {
    std::vector<bool> bits;  // membership of a^0..a^N
    long long preperiod = -1;
    long long period = -1;
    bool window_consistent = false;
};

// Smallest period, then smallest preperiod, seen at least twice inside [0..N].
UnaryProfile cyclic_profile(const UnaryPredicate& member, long long N);

// C-state cycle accepting the residues in the language; the predicate must be
// purely C-periodic on [0..2C].
OneWayMachine cyclic_dfa_from_oracle(const UnaryPredicate& member, long long C);

struct FoolingPair {
    Word x;
    Word y;
};

struct FoolingCheck {
    bool ok = true;
    std::vector<std::size_t> not_in_language;                       // i with x_i y_i not in L
    std::vector<std::pair<std::size_t, std::size_t>> cross_failures;  // i<j with x_i y_j, x_j y_i both in L
};

FoolingCheck check_extended_fooling_set(const std::vector<FoolingPair>& pairs, const LanguageOracle& o);

// (a^{prod X}, a^{prod of the other primes}) for every subset X of the primes
// up to 2^n(n+1)+1.
std::vector<FoolingPair> fooling_pairs_for_complement(int n, long long max_word_length = 10'000'000);

struct BoundCheck {
    std::string name;
    std::string lhs;
    std::string relation;
    std::string rhs;
    bool holds = false;
    bool required = true;  // false for informational checks
    std::string note;
};

struct BoundReport {
    int n = 0;
    long long k = 0;
    std::size_t prime_count = 0;
    std::vector<BoundCheck> checks;
    bool required_hold() const;
};

BoundReport bound_report(int n);

}  // namespace limitada
