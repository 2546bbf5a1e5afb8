#include "limitada/alphabet.hpp"

#include <algorithm>

#include "limitada/errors.hpp"

namespace limitada {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const std::string& s = symbols_[i];
        if (s.empty()) throw InputError("empty symbol in alphabet");
        if (s == kLeftMarker || s == kRightMarker)
            throw InputError("endmarker '" + s + "' cannot be an alphabet symbol");
        if (!index_.emplace(s, static_cast<int>(i)).second)
            throw InputError("duplicate symbol '" + s + "' in alphabet");
        max_len_ = std::max(max_len_, s.size());
    }
}

Alphabet Alphabet::of_chars(std::string_view chars) {
    std::vector<std::string> v;
    for (char c : chars) v.emplace_back(1, c);
    return Alphabet(std::move(v));
}

Alphabet Alphabet::product(const Alphabet& left, const Alphabet& right) {
    std::vector<std::string> v;
    for (const auto& a : left.symbols())
        for (const auto& b : right.symbols()) v.push_back(make_pair_symbol(a, b));
    return Alphabet(std::move(v));
}

int Alphabet::id(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw InputError("symbol '" + s + "' not in alphabet");
    return it->second;
}

int Alphabet::find(const std::string& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

Word Alphabet::encode(std::string_view text) const {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
            ++i;
            continue;
        }
        int found = -1;
        std::size_t len = std::min(max_len_, text.size() - i);
        for (; len > 0; --len) {
            auto it = index_.find(std::string(text.substr(i, len)));
            if (it != index_.end()) {
                found = it->second;
                break;
            }
        }
        if (found < 0)
            throw InputError("cannot read a symbol at offset " + std::to_string(i) + " of '" +
                             std::string(text) + "'");
        w.push_back(found);
        i += len;
    }
    return w;
}

std::string Alphabet::decode(const Word& w) const {
    std::string out;
    for (int s : w) out += symbols_.at(static_cast<std::size_t>(s));
    return out;
}

std::string make_pair_symbol(const std::string& a, const std::string& b) {
    return a + kPairSeparator + b;
}

bool split_pair_symbol(const std::string& s, std::string& a, std::string& b) {
    auto pos = s.find(kPairSeparator);
    if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size()) return false;
    a = s.substr(0, pos);
    b = s.substr(pos + 1);
    return true;
}

}  // namespace limitada
