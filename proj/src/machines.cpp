#include "limitada/machines.hpp"

#include <algorithm>

#include "limitada/errors.hpp"

namespace limitada {

namespace {

template <class T>
void insert_sorted(std::vector<T>& v, const T& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || !(*it == x)) v.insert(it, x);
}

std::vector<int> collect_finals(const std::vector<bool>& f) {
    std::vector<int> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i]) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

TwoWayMachine::TwoWayMachine(Alphabet alphabet, int states)
    : alphabet_(std::move(alphabet)),
      states_(states),
      finals_(static_cast<std::size_t>(states), false),
      delta_(static_cast<std::size_t>(states * (alphabet_.size() + 2))),
      names_(static_cast<std::size_t>(states)) {}

std::vector<int> TwoWayMachine::finals() const { return collect_finals(finals_); }

int TwoWayMachine::add_state(const std::string& name) {
    int q = states_++;
    finals_.push_back(false);
    names_.push_back(name);
    delta_.resize(static_cast<std::size_t>(states_ * tape_symbols()));
    return q;
}

void TwoWayMachine::add(int from, int symbol, int to, int dir) {
    if (from < 0 || from >= states_ || to < 0 || to >= states_)
        throw InputError("transition state out of range");
    if (symbol < 0 || symbol >= tape_symbols()) throw InputError("transition symbol out of range");
    if (dir != -1 && dir != 1) throw InputError("direction must be -1 or +1");
    insert_sorted(delta_[static_cast<std::size_t>(from * tape_symbols() + symbol)], Step{to, dir});
}

void TwoWayMachine::clear(int from, int symbol) {
    delta_[static_cast<std::size_t>(from * tape_symbols() + symbol)].clear();
}

std::size_t TwoWayMachine::transition_count() const {
    std::size_t n = 0;
    for (const auto& v : delta_) n += v.size();
    return n;
}

bool TwoWayMachine::deterministic() const {
    return std::all_of(delta_.begin(), delta_.end(), [](const auto& v) { return v.size() <= 1; });
}

std::string TwoWayMachine::symbol_name(int symbol) const {
    if (symbol == left()) return kLeftMarker;
    if (symbol == right()) return kRightMarker;
    return alphabet_[symbol];
}

std::vector<std::string> TwoWayMachine::validate() const {
    std::vector<std::string> out;
    if (states_ <= 0) out.push_back("machine has no states");
    if (initial_ < 0 || initial_ >= states_) out.push_back("initial state out of range");
    for (int p = 0; p < states_; ++p) {
        for (int s = 0; s < tape_symbols(); ++s) {
            for (const Step& st : at(p, s)) {
                if (st.to < 0 || st.to >= states_)
                    out.push_back("transition (" + std::to_string(p) + ", " + symbol_name(s) +
                                  ") targets unknown state");
                if (s == left() && st.dir == -1)
                    out.push_back("transition (" + std::to_string(p) + ", <) moves left of the left endmarker");
                if (s == right() && st.dir == 1)
                    out.push_back("transition (" + std::to_string(p) + ", >) moves right of the right endmarker");
            }
        }
    }
    return out;
}

OneWayMachine::OneWayMachine(Alphabet alphabet, int states)
    : alphabet_(std::move(alphabet)),
      states_(states),
      finals_(static_cast<std::size_t>(states), false),
      delta_(static_cast<std::size_t>(states * alphabet_.size())),
      names_(static_cast<std::size_t>(states)) {}

std::vector<int> OneWayMachine::finals() const { return collect_finals(finals_); }

int OneWayMachine::add_state(const std::string& name) {
    int q = states_++;
    finals_.push_back(false);
    names_.push_back(name);
    delta_.resize(static_cast<std::size_t>(states_ * alphabet_.size()));
    return q;
}

void OneWayMachine::add(int from, int symbol, int to) {
    if (from < 0 || from >= states_ || to < 0 || to >= states_)
        throw InputError("transition state out of range");
    if (symbol < 0 || symbol >= alphabet_.size()) throw InputError("transition symbol out of range");
    insert_sorted(delta_[static_cast<std::size_t>(from * alphabet_.size() + symbol)], to);
}

std::size_t OneWayMachine::transition_count() const {
    std::size_t n = 0;
    for (const auto& v : delta_) n += v.size();
    return n;
}

bool OneWayMachine::deterministic() const {
    return std::all_of(delta_.begin(), delta_.end(), [](const auto& v) { return v.size() <= 1; });
}

bool OneWayMachine::complete() const {
    return std::all_of(delta_.begin(), delta_.end(), [](const auto& v) { return !v.empty(); });
}

std::optional<std::string> OneWayMachine::label(int q) const {
    auto it = labels_.find(q);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> OneWayMachine::validate() const {
    std::vector<std::string> out;
    if (states_ <= 0) out.push_back("machine has no states");
    if (initial_ < 0 || initial_ >= states_) out.push_back("initial state out of range");
    for (const auto& [q, tag] : labels_)
        if (q < 0 || q >= states_) out.push_back("label '" + tag + "' on unknown state");
    return out;
}

OneLimitedMachine::OneLimitedMachine(Alphabet input, Alphabet work, int states)
    : input_(std::move(input)),
      work_(std::move(work)),
      states_(states),
      finals_(static_cast<std::size_t>(states), false),
      delta_(static_cast<std::size_t>(states * (work_.size() + 2))),
      names_(static_cast<std::size_t>(states)) {
    for (int i = 0; i < input_.size(); ++i)
        if (i >= work_.size() || work_[i] != input_[i])
            throw InputError("work alphabet must start with the input symbols in order");
}

std::vector<int> OneLimitedMachine::finals() const { return collect_finals(finals_); }

int OneLimitedMachine::add_state(const std::string& name) {
    int q = states_++;
    finals_.push_back(false);
    names_.push_back(name);
    delta_.resize(static_cast<std::size_t>(states_ * tape_symbols()));
    return q;
}

void OneLimitedMachine::add(int from, int symbol, int to, int write, int dir) {
    if (from < 0 || from >= states_ || to < 0 || to >= states_)
        throw InputError("transition state out of range");
    if (symbol < 0 || symbol >= tape_symbols() || write < 0 || write >= tape_symbols())
        throw InputError("transition symbol out of range");
    if (dir != -1 && dir != 1) throw InputError("direction must be -1 or +1");
    insert_sorted(delta_[static_cast<std::size_t>(from * tape_symbols() + symbol)], LaStep{to, write, dir});
}

std::size_t OneLimitedMachine::transition_count() const {
    std::size_t n = 0;
    for (const auto& v : delta_) n += v.size();
    return n;
}

std::string OneLimitedMachine::symbol_name(int symbol) const {
    if (symbol == left()) return kLeftMarker;
    if (symbol == right()) return kRightMarker;
    return work_[symbol];
}

CommonGuessMachine::CommonGuessMachine(TwoWayMachine underlying, Alphabet input, Alphabet annotation)
    : underlying_(std::move(underlying)), input_(std::move(input)), annotation_(std::move(annotation)) {
    const Alphabet& tape = underlying_.alphabet();
    pair_.assign(static_cast<std::size_t>(input_.size() * annotation_.size()), -1);
    first_.resize(static_cast<std::size_t>(tape.size()));
    second_.resize(static_cast<std::size_t>(tape.size()));
    for (int s = 0; s < tape.size(); ++s) {
        std::string a, b;
        if (!split_pair_symbol(tape[s], a, b))
            throw InputError("common-guess tape symbol '" + tape[s] + "' is not a pair");
        int sigma = input_.find(a), gamma = annotation_.find(b);
        if (sigma < 0 || gamma < 0)
            throw InputError("common-guess tape symbol '" + tape[s] + "' outside input x annotation");
        first_[static_cast<std::size_t>(s)] = sigma;
        second_[static_cast<std::size_t>(s)] = gamma;
        pair_[static_cast<std::size_t>(sigma * annotation_.size() + gamma)] = s;
    }
}

Word CommonGuessMachine::zip(const Word& w, const Word& annotation) const {
    if (w.size() != annotation.size()) throw InputError("annotation length differs from input length");
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int s = pair(w[i], annotation[i]);
        out[i] = s;
    }
    return out;
}

}  // namespace limitada
