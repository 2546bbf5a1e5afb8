#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limitada/alphabet.hpp"

namespace limitada {

struct Step {
    int to;
    int dir;  // -1 or +1
    bool operator==(const Step& o) const { return to == o.to && dir == o.dir; }
    bool operator<(const Step& o) const { return to != o.to ? to < o.to : dir < o.dir; }
};

// Two-way automaton over alphabet symbols 0..k-1 plus the endmarkers at
// indices k (left) and k+1 (right).
class TwoWayMachine {
public:
    TwoWayMachine() = default;
    TwoWayMachine(Alphabet alphabet, int states);

    const Alphabet& alphabet() const { return alphabet_; }
    int states() const { return states_; }
    int tape_symbols() const { return alphabet_.size() + 2; }
    int left() const { return alphabet_.size(); }
    int right() const { return alphabet_.size() + 1; }

    int initial() const { return initial_; }
    void set_initial(int q) { initial_ = q; }
    bool is_final(int q) const { return finals_.at(static_cast<std::size_t>(q)); }
    void set_final(int q, bool f = true) { finals_.at(static_cast<std::size_t>(q)) = f; }
    std::vector<int> finals() const;

    int add_state(const std::string& name = "");
    void add(int from, int symbol, int to, int dir);
    void clear(int from, int symbol);
    const std::vector<Step>& at(int from, int symbol) const {
        return delta_[static_cast<std::size_t>(from * tape_symbols() + symbol)];
    }
    std::size_t transition_count() const;

    bool deterministic() const;
    // Every violation of the structural invariants, empty when valid.
    std::vector<std::string> validate() const;

    const std::string& name(int q) const { return names_.at(static_cast<std::size_t>(q)); }
    void set_name(int q, std::string n) { names_.at(static_cast<std::size_t>(q)) = std::move(n); }
    std::string symbol_name(int symbol) const;

    std::string note;  // provenance, free text

private:
    Alphabet alphabet_;
    int states_ = 0;
    int initial_ = 0;
    std::vector<bool> finals_;
    std::vector<std::vector<Step>> delta_;
    std::vector<std::string> names_;
};

// One-way automaton without endmarkers; labels classify states.
class OneWayMachine {
public:
    OneWayMachine() = default;
    OneWayMachine(Alphabet alphabet, int states);

    const Alphabet& alphabet() const { return alphabet_; }
    int states() const { return states_; }
    int initial() const { return initial_; }
    void set_initial(int q) { initial_ = q; }
    bool is_final(int q) const { return finals_.at(static_cast<std::size_t>(q)); }
    void set_final(int q, bool f = true) { finals_.at(static_cast<std::size_t>(q)) = f; }
    std::vector<int> finals() const;

    int add_state(const std::string& name = "");
    void add(int from, int symbol, int to);
    const std::vector<int>& at(int from, int symbol) const {
        return delta_[static_cast<std::size_t>(from * alphabet_.size() + symbol)];
    }
    std::size_t transition_count() const;

    bool deterministic() const;
    bool complete() const;
    std::vector<std::string> validate() const;

    const std::map<int, std::string>& labels() const { return labels_; }
    void set_label(int q, std::string tag) { labels_[q] = std::move(tag); }
    std::optional<std::string> label(int q) const;

    const std::string& name(int q) const { return names_.at(static_cast<std::size_t>(q)); }
    void set_name(int q, std::string n) { names_.at(static_cast<std::size_t>(q)) = std::move(n); }

    std::string note;

private:
    Alphabet alphabet_;
    int states_ = 0;
    int initial_ = 0;
    std::vector<bool> finals_;
    std::vector<std::vector<int>> delta_;
    std::map<int, std::string> labels_;
    std::vector<std::string> names_;
};

struct LaStep {
    int to;
    int write;  // tape symbol index (work symbol or endmarker)
    int dir;
    bool operator==(const LaStep& o) const { return to == o.to && write == o.write && dir == o.dir; }
    bool operator<(const LaStep& o) const {
        if (to != o.to) return to < o.to;
        if (write != o.write) return write < o.write;
        return dir < o.dir;
    }
};

// 1-limited automaton. The work alphabet lists the input symbols first, in
// input order; tape symbols are work symbols plus endmarkers at indices
// |work| and |work|+1.
class OneLimitedMachine {
public:
    OneLimitedMachine() = default;
    OneLimitedMachine(Alphabet input, Alphabet work, int states);

    const Alphabet& input() const { return input_; }
    const Alphabet& work() const { return work_; }
    int states() const { return states_; }
    int tape_symbols() const { return work_.size() + 2; }
    int left() const { return work_.size(); }
    int right() const { return work_.size() + 1; }
    bool is_input_symbol(int tape_symbol) const { return tape_symbol < input_.size(); }

    int initial() const { return initial_; }
    void set_initial(int q) { initial_ = q; }
    bool is_final(int q) const { return finals_.at(static_cast<std::size_t>(q)); }
    void set_final(int q, bool f = true) { finals_.at(static_cast<std::size_t>(q)) = f; }
    std::vector<int> finals() const;

    int add_state(const std::string& name = "");
    void add(int from, int symbol, int to, int write, int dir);
    const std::vector<LaStep>& at(int from, int symbol) const {
        return delta_[static_cast<std::size_t>(from * tape_symbols() + symbol)];
    }
    std::size_t transition_count() const;

    std::string symbol_name(int symbol) const;
    const std::string& name(int q) const { return names_.at(static_cast<std::size_t>(q)); }
    void set_name(int q, std::string n) { names_.at(static_cast<std::size_t>(q)) = std::move(n); }

    std::string note;

private:
    Alphabet input_;
    Alphabet work_;
    int states_ = 0;
    int initial_ = 0;
    std::vector<bool> finals_;
    std::vector<std::vector<LaStep>> delta_;
    std::vector<std::string> names_;
};

// Underlying two-way machine over pair symbols "sigma|gamma".
class CommonGuessMachine {
public:
    CommonGuessMachine() = default;
    CommonGuessMachine(TwoWayMachine underlying, Alphabet input, Alphabet annotation);

    const TwoWayMachine& underlying() const { return underlying_; }
    const Alphabet& input() const { return input_; }
    const Alphabet& annotation() const { return annotation_; }
    int states() const { return underlying_.states(); }
    bool deterministic() const { return underlying_.deterministic(); }

    // Underlying symbol index of (sigma, gamma), or -1 if the pair is not in
    // the underlying alphabet.
    int pair(int sigma, int gamma) const {
        return pair_[static_cast<std::size_t>(sigma * annotation_.size() + gamma)];
    }
    int first(int pair_symbol) const { return first_[static_cast<std::size_t>(pair_symbol)]; }
    int second(int pair_symbol) const { return second_[static_cast<std::size_t>(pair_symbol)]; }

    Word zip(const Word& w, const Word& annotation) const;

private:
    TwoWayMachine underlying_;
    Alphabet input_;
    Alphabet annotation_;
    std::vector<int> pair_;
    std::vector<int> first_;
    std::vector<int> second_;
};

}  // namespace limitada
