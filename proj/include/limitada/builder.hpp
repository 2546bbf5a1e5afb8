#pragma once

#include <string>
#include <unordered_map>

#include "limitada/machines.hpp"

namespace limitada {

// Named-state construction of two-way machines. States are created on first
// mention; symbols are given by name, with "<" and ">" for the endmarkers.
class TwoWayBuilder {
public:
    explicit TwoWayBuilder(Alphabet alphabet) : m_(std::move(alphabet), 0) {}

    int state(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int q = m_.add_state(name);
        ids_.emplace(name, q);
        return q;
    }
    bool has(const std::string& name) const { return ids_.count(name) != 0; }

    int sym(const std::string& s) const {
        if (s == kLeftMarker) return m_.left();
        if (s == kRightMarker) return m_.right();
        return m_.alphabet().id(s);
    }

    void on(const std::string& from, const std::string& symbol, const std::string& to, int dir) {
        int p = state(from);
        int q = state(to);
        m_.add(p, sym(symbol), q, dir);
    }
    // Same move on every alphabet symbol (endmarkers excluded).
    void on_all(const std::string& from, const std::string& to, int dir) {
        for (const auto& s : m_.alphabet().symbols()) on(from, s, to, dir);
    }
    void accept(const std::string& name) { m_.set_final(state(name)); }
    void initial(const std::string& name) { m_.set_initial(state(name)); }

    TwoWayMachine build(std::string note) {
        m_.note = std::move(note);
        return m_;
    }
    const TwoWayMachine& peek() const { return m_; }

private:
    TwoWayMachine m_;
    std::unordered_map<std::string, int> ids_;
};

}  // namespace limitada
