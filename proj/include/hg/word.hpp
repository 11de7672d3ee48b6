#ifndef HG_WORD_HPP
#define HG_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hg {

/// IFS address: a sequence of contraction indices, most significant first.
/// The empty word is the identity map.
struct Word {
    std::vector<std::uint8_t> symbols;

    Word() = default;
    explicit Word(std::vector<std::uint8_t> s) : symbols(std::move(s)) {}

    int length() const { return static_cast<int>(symbols.size()); }

    Word child(int j) const {
        Word w = *this;
        w.symbols.push_back(static_cast<std::uint8_t>(j));
        return w;
    }

    /// Lexicographic index among words of the same length over {0..N-1}.
    long index(int n_branches) const {
        long idx = 0;
        for (std::uint8_t s : symbols) idx = idx * n_branches + s;
        return idx;
    }

    static Word from_index(long index, int length, int n_branches) {
        Word w;
        w.symbols.assign(length, 0);
        for (int i = length - 1; i >= 0; --i) {
            w.symbols[i] = static_cast<std::uint8_t>(index % n_branches);
            index /= n_branches;
        }
        return w;
    }

    std::string str() const {
        if (symbols.empty()) return "-";
        std::string s;
        for (std::uint8_t v : symbols) s += static_cast<char>('0' + v);
        return s;
    }

    static Word parse(const std::string& s, int n_branches) {
        Word w;
        if (s == "-" || s.empty()) return w;
        for (char c : s) {
            int v = c - '0';
            if (v < 0 || v >= n_branches) throw std::invalid_argument("word symbol out of range: " + s);
            w.symbols.push_back(static_cast<std::uint8_t>(v));
        }
        return w;
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    bool is_prefix_of(const Word& other) const {
        if (length() > other.length()) return false;
        for (int i = 0; i < length(); ++i)
            if (symbols[i] != other.symbols[i]) return false;
        return true;
    }
};

/// Words of length up to and including max_len, ordered by (length, lex).
/// This is the canonical enumeration used for harmonic bases and pairing
/// tables.
inline std::vector<Word> words_up_to(int max_len, int n_branches) {
    std::vector<Word> out;
    for (int len = 0; len <= max_len; ++len) {
        long count = 1;
        for (int i = 0; i < len; ++i) count *= n_branches;
        for (long idx = 0; idx < count; ++idx) out.push_back(Word::from_index(idx, len, n_branches));
    }
    return out;
}

/// Vertex address (word, corner) reduced to its canonical representative.
/// Identified pairs arise from F_a q_b = F_b q_a: an address (u.a.b^j, b)
/// names the same point as (u.b.a^j, a); the lexicographically smaller one
/// is canonical. Fixed points (c^m, c) are already unique.
inline std::pair<Word, int> canonical_vertex(const Word& w, int corner) {
    int j = 0;
    int m = w.length();
    while (j < m && w.symbols[m - 1 - j] == corner) ++j;
    if (j == m) return {w, corner};  // boundary fixed point
    int d = w.symbols[m - 1 - j];
    Word alt = w;
    alt.symbols[m - 1 - j] = static_cast<std::uint8_t>(corner);
    for (int i = 0; i < j; ++i) alt.symbols[m - i - 1] = static_cast<std::uint8_t>(d);
    std::pair<Word, int> a{w, corner}, b{std::move(alt), d};
    return a < b ? a : b;
}

} // namespace hg

#endif
