#include "limitada/interchange.hpp"

#include <json.hpp>

#include "limitada/errors.hpp"
#include "limitada/limited.hpp"

namespace limitada {

using nlohmann::json;

namespace {

int symbol_of(const Alphabet& a, const std::string& s) {
    if (s == kLeftMarker) return a.size();
    if (s == kRightMarker) return a.size() + 1;
    return a.id(s);
}


template <class M>
void put_common(json& j, const M& m) {
    j["states"] = m.states();
    j["initial"] = m.initial();
    j["finals"] = m.finals();
    json names = json::array();
    bool any = false;
    for (int q = 0; q < m.states(); ++q) {
        names.push_back(m.name(q));
        any = any || !m.name(q).empty();
    }
    if (any) j["state_names"] = names;
    if (!m.note.empty()) j["note"] = m.note;
}

json two_way_json(const TwoWayMachine& m) {
    json j;
    j["alphabet"] = m.alphabet().symbols();
    put_common(j, m);
    json t = json::array();
    for (int p = 0; p < m.states(); ++p)
        for (int s = 0; s < m.tape_symbols(); ++s)
            for (const Step& st : m.at(p, s))
                t.push_back({{"from", p}, {"read", m.symbol_name(s)}, {"to", st.to}, {"move", st.dir}});
    j["transitions"] = t;
    return j;
}

template <class F>
void at_item(const std::string& path, F&& body) {
    try {
        body();
    } catch (const InputError& e) {
        if (std::string(e.what()).find(path) != std::string::npos) throw;
        throw InputError(path + ": " + e.what());
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct Reader {
    const json& j;
    std::string path;

    const json& at(const std::string& key) const {
        if (!j.is_object() || !j.contains(key)) throw InputError("missing field " + path + key);
        return j.at(key);
    }
    template <class T>
    T get(const std::string& key) const {
        try {
            return at(key).get<T>();
        } catch (const json::exception& e) {
            throw InputError("bad field " + path + key + ": " + e.what());
        }
    }
    bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
};

template <class M>
void read_common(const Reader& r, M& m) {
    int n = m.states();
    int init = r.get<int>("initial");
    if (init < 0 || init >= n) throw InputError("initial state out of range");
    m.set_initial(init);
    for (int f : r.get<std::vector<int>>("finals")) {
        if (f < 0 || f >= n) throw InputError("final state out of range");
        m.set_final(f);
    }
    if (r.has("state_names")) {
        auto names = r.get<std::vector<std::string>>("state_names");
        if (static_cast<int>(names.size()) != n) throw InputError("state_names has the wrong length");
        for (int q = 0; q < n; ++q) m.set_name(q, names[static_cast<std::size_t>(q)]);
    }
    if (r.has("note")) m.note = r.get<std::string>("note");
}

TwoWayMachine two_way_from(const Reader& r, const Alphabet& al) {
    int n = r.get<int>("states");
    if (n < 1) throw InputError("states must be positive");
    TwoWayMachine m(al, n);
    read_common(r, m);
    const json& ts = r.at("transitions");
    if (!ts.is_array()) throw InputError("transitions must be an array");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Reader t{ts[i], "transitions[" + std::to_string(i) + "]."};
        at_item(t.path, [&] {
            int from = t.get<int>("from"), to = t.get<int>("to"), dir = t.get<int>("move");
            if (from < 0 || from >= n || to < 0 || to >= n) throw InputError("state out of range");
            if (dir != 1 && dir != -1) throw InputError("move must be -1 or 1");
            m.add(from, symbol_of(al, t.get<std::string>("read")), to, dir);
        });
    }
    return m;
}

}  // namespace

std::string kind_of(const AnyMachine& any) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, OneWayMachine>)
                return m.deterministic() ? "1dfa" : "1nfa";
            else if constexpr (std::is_same_v<T, TwoWayMachine>)
                return m.deterministic() ? "2dfa" : "2nfa";
            else if constexpr (std::is_same_v<T, OneLimitedMachine>)
                return is_deterministic_1la(m) ? "d1la" : "1la";
            else
                return m.deterministic() ? "cg-2dfa" : "cg-2nfa";
        },
        any);
}

std::string serialize(const AnyMachine& any, int indent) {
    json j;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, OneWayMachine>) {
                j["alphabet"] = m.alphabet().symbols();
                put_common(j, m);
                if (!m.labels().empty()) {
                    json l = json::object();
                    for (const auto& [q, tag] : m.labels()) l[std::to_string(q)] = tag;
                    j["labels"] = l;
                }
                json t = json::array();
                for (int p = 0; p < m.states(); ++p)
                    for (int s = 0; s < m.alphabet().size(); ++s)
                        for (int q : m.at(p, s)) t.push_back({{"from", p}, {"read", m.alphabet()[s]}, {"to", q}});
                j["transitions"] = t;
            } else if constexpr (std::is_same_v<T, TwoWayMachine>) {
                j = two_way_json(m);
            } else if constexpr (std::is_same_v<T, OneLimitedMachine>) {
                j["input_alphabet"] = m.input().symbols();
                j["alphabet"] = m.work().symbols();
                put_common(j, m);
                json t = json::array();
                for (int p = 0; p < m.states(); ++p)
                    for (int s = 0; s < m.tape_symbols(); ++s)
                        for (const LaStep& st : m.at(p, s))
                            t.push_back({{"from", p},
                                         {"read", m.symbol_name(s)},
                                         {"to", st.to},
                                         {"write", m.symbol_name(st.write)},
                                         {"move", st.dir}});
                j["transitions"] = t;
            } else {
                j = two_way_json(m.underlying());
                j["alphabet"] = m.input().symbols();
                j["annotation_alphabet"] = m.annotation().symbols();
                j["pair_alphabet"] = m.underlying().alphabet().symbols();
            }
        },
        any);
    json out;
    out["kind"] = kind_of(any);
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value();
    return out.dump(indent);
}

AnyMachine parse_machine(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    Reader r{j, ""};
    const std::string kind = r.get<std::string>("kind");
    Alphabet al(r.get<std::vector<std::string>>("alphabet"));
    if (kind == "1dfa" || kind == "1nfa") {
        int n = r.get<int>("states");
        if (n < 1) throw InputError("states must be positive");
        OneWayMachine m(al, n);
        read_common(r, m);
        if (r.has("labels")) {
            const json& l = r.at("labels");
            if (!l.is_object()) throw InputError("labels must be an object");
            for (auto it = l.begin(); it != l.end(); ++it) {
                int q = -1;
                try {
                    q = std::stoi(it.key());
                } catch (const std::exception&) {
                    throw InputError("label key is not a state: " + it.key());
                }
                if (q < 0 || q >= n || !it.value().is_string()) throw InputError("bad label entry " + it.key());
                m.set_label(q, it.value().get<std::string>());
            }
        }
        const json& ts = r.at("transitions");
        if (!ts.is_array()) throw InputError("transitions must be an array");
        for (std::size_t i = 0; i < ts.size(); ++i) {
            Reader t{ts[i], "transitions[" + std::to_string(i) + "]."};
            at_item(t.path, [&] {
                int from = t.get<int>("from"), to = t.get<int>("to");
                if (from < 0 || from >= n || to < 0 || to >= n) throw InputError("state out of range");
                m.add(from, al.id(t.get<std::string>("read")), to);
            });
        }
        if (kind == "1dfa" && !m.deterministic()) throw InputError("kind 1dfa but transitions are nondeterministic");
        return m;
    }
    if (kind == "2dfa" || kind == "2nfa") {
        TwoWayMachine m = two_way_from(r, al);
        if (kind == "2dfa" && !m.deterministic()) throw InputError("kind 2dfa but transitions are nondeterministic");
        return m;
    }
    if (kind == "1la" || kind == "d1la") {
        Alphabet input(r.get<std::vector<std::string>>("input_alphabet"));
        int n = r.get<int>("states");
        if (n < 1) throw InputError("states must be positive");
        OneLimitedMachine m(input, al, n);
        read_common(r, m);
        const json& ts = r.at("transitions");
        if (!ts.is_array()) throw InputError("transitions must be an array");
        for (std::size_t i = 0; i < ts.size(); ++i) {
            Reader t{ts[i], "transitions[" + std::to_string(i) + "]."};
            at_item(t.path, [&] {
                int from = t.get<int>("from"), to = t.get<int>("to"), dir = t.get<int>("move");
                if (from < 0 || from >= n || to < 0 || to >= n) throw InputError("state out of range");
                if (dir != 1 && dir != -1) throw InputError("move must be -1 or 1");
                m.add(from, symbol_of(al, t.get<std::string>("read")), to, symbol_of(al, t.get<std::string>("write")), dir);
            });
        }
        if (kind == "d1la" && !is_deterministic_1la(m)) throw InputError("kind d1la but transitions are nondeterministic");
        return m;
    }
    if (kind == "cg-2dfa" || kind == "cg-2nfa") {
        Alphabet gamma(r.get<std::vector<std::string>>("annotation_alphabet"));
        Alphabet pairs;
        if (r.has("pair_alphabet")) {
            pairs = Alphabet(r.get<std::vector<std::string>>("pair_alphabet"));
        } else {
            std::vector<std::string> ps;
            for (const auto& a : al.symbols())
                for (const auto& g : gamma.symbols()) ps.push_back(make_pair_symbol(a, g));
            pairs = Alphabet(ps);
        }
        TwoWayMachine u = two_way_from(r, pairs);
        if (kind == "cg-2dfa" && !u.deterministic()) throw InputError("kind cg-2dfa but transitions are nondeterministic");
        return CommonGuessMachine(std::move(u), al, gamma);
    }
    throw InputError("unknown kind: " + kind);
}

}  // namespace limitada
