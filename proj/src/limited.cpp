#include "limitada/limited.hpp"

#include <unordered_set>

#include "limitada/errors.hpp"

namespace limitada {

std::vector<std::string> validate_1la(const OneLimitedMachine& m) {
    std::vector<std::string> out;
    if (m.initial() < 0 || m.initial() >= m.states()) out.push_back("initial state out of range");
    for (int p = 0; p < m.states(); ++p) {
        for (int s = 0; s < m.tape_symbols(); ++s) {
            for (const LaStep& st : m.at(p, s)) {
                std::string where = "(" + std::to_string(p) + ", " + m.symbol_name(s) + ")";
                if (m.is_input_symbol(s)) {
                    if (m.is_input_symbol(st.write) || st.write == m.left() || st.write == m.right())
                        out.push_back(where + " must rewrite an input symbol with a non-input work symbol");
                } else if (st.write != s) {
                    out.push_back(where + " rewrites a symbol that may only be copied");
                }
                if (s == m.left() && st.dir == -1) out.push_back(where + " moves left of the left endmarker");
                if (s == m.right() && st.dir == 1) out.push_back(where + " moves right of the right endmarker");
            }
        }
    }
    return out;
}

bool is_deterministic_1la(const OneLimitedMachine& m) {
    for (int p = 0; p < m.states(); ++p)
        for (int s = 0; s < m.tape_symbols(); ++s)
            if (m.at(p, s).size() > 1) return false;
    return true;
}

LaSize size(const OneLimitedMachine& m) {
    LaSize r;
    r.states = m.states();
    r.work_symbols = m.work().size();
    r.non_input_symbols = m.work().size() - m.input().size();
    auto s = static_cast<unsigned long long>(r.states);
    auto d = static_cast<unsigned long long>(r.work_symbols);
    r.measure = s * s * d * d;
    return r;
}

namespace {

// Configuration key: state, head, then one byte per tape cell (endmarkers included).
std::string make_key(int state, int pos, const std::string& tape) {
    std::string key;
    key.reserve(tape.size() + 8);
    key.append(reinterpret_cast<const char*>(&state), sizeof state);
    key.append(reinterpret_cast<const char*>(&pos), sizeof pos);
    key += tape;
    return key;
}

}  // namespace

bool accepts_1la(const OneLimitedMachine& m, const Word& w, std::size_t max_configs) {
    auto violations = validate_1la(m);
    if (!violations.empty()) throw ContractError("invalid 1-LA: " + violations.front());
    if (m.tape_symbols() > 255) throw InputError("work alphabet too large for the tape encoding");
    std::string tape;
    tape.push_back(static_cast<char>(m.left()));
    for (int s : w) {
        if (s < 0 || s >= m.input().size()) throw InputError("word symbol outside the input alphabet");
        tape.push_back(static_cast<char>(s));
    }
    tape.push_back(static_cast<char>(m.right()));
    const int end = static_cast<int>(w.size()) + 1;

    struct Config {
        int state;
        int pos;
        std::string tape;
    };
    std::unordered_set<std::string> seen;
    std::vector<Config> stack;
    seen.insert(make_key(m.initial(), 1, tape));
    stack.push_back({m.initial(), 1, tape});
    while (!stack.empty()) {
        Config c = std::move(stack.back());
        stack.pop_back();
        if (c.pos == end && m.is_final(c.state)) return true;
        int sym = static_cast<unsigned char>(c.tape[static_cast<std::size_t>(c.pos)]);
        for (const LaStep& st : m.at(c.state, sym)) {
            int np = c.pos + st.dir;
            if (np < 0 || np > end) continue;
            std::string t = c.tape;
            int old = sym;
            if (!m.is_input_symbol(old) && st.write != old)
                throw ContractError("1-LA rewrote a cell after its first visit");
            t[static_cast<std::size_t>(c.pos)] = static_cast<char>(st.write);
            std::string key = make_key(st.to, np, t);
            if (seen.insert(key).second) {
                if (seen.size() > max_configs)
                    throw ResourceError("1-LA configuration budget exceeded", seen.size());
                stack.push_back({st.to, np, std::move(t)});
            }
        }
    }
    return false;
}

}  // namespace limitada
