#pragma once

#include <string>
#include <vector>

#include "limitada/interchange.hpp"
#include "limitada/report.hpp"

namespace limitada {

// what: F, Fn, fact2dfa or family:<kind>:<length>.
AnyMachine generate_binseq(const std::string& what, int n);

// lang: Ln, Mn, IFBS, SamePrefix, Suffixes; as: cg, d1la, 1la, 2dfa, 1nfa.
AnyMachine generate_witness(const std::string& lang, const std::string& as, int n, const Budgets& budgets = {});

const std::vector<std::string>& convert_ops();

// seq-intersect takes two machines, every other op one.
AnyMachine convert(const std::string& op, const std::vector<AnyMachine>& in, const Budgets& budgets = {});

struct Decision {
    bool accepted = false;
    std::string detail;  // halting outcome, label or annotation witness
};

Decision decide(const AnyMachine& m, const std::string& word, const Budgets& budgets = {});

int state_count(const AnyMachine& m);

}  // namespace limitada
