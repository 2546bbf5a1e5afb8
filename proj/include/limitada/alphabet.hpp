#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace limitada {

using Word = std::vector<int>;

inline constexpr const char* kLeftMarker = "<";
inline constexpr const char* kRightMarker = ">";
inline constexpr char kPairSeparator = '|';

// Ordered list of printable symbols. Endmarkers are never members; in a
// machine they occupy the two indices right after the alphabet.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    static Alphabet of_chars(std::string_view chars);
    static Alphabet product(const Alphabet& left, const Alphabet& right);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::string& operator[](int i) const { return symbols_.at(static_cast<std::size_t>(i)); }

    bool contains(const std::string& s) const { return index_.count(s) != 0; }
    int id(const std::string& s) const;  // throws InputError if absent
    int find(const std::string& s) const;  // -1 if absent

    // Splits text into symbols by greedy longest match; whitespace and commas
    // between symbols are ignored.
    Word encode(std::string_view text) const;
    std::string decode(const Word& w) const;

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, int> index_;
    std::size_t max_len_ = 0;
};

std::string make_pair_symbol(const std::string& a, const std::string& b);
// Returns false if s is not a pair symbol.
bool split_pair_symbol(const std::string& s, std::string& a, std::string& b);

}  // namespace limitada
