#ifndef QCRYST_ALPHABET_HPP
#define QCRYST_ALPHABET_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcryst {

/// A possibly-primed integer.  The prime k' of an integer k sits just below
/// k in the total order ... < 0' < 0 < 1' < 1 < 2' < 2 < ...  Internally a
/// letter is a single integer: unprimed k is stored as 2k, primed k' as
/// 2k-1, so the half-integer order is plain integer order on codes.
struct Letter {
    int code = 0;

    Letter() = default;
    constexpr explicit Letter(int value, bool primed = false)
        : code(2 * value - (primed ? 1 : 0)) {}

    static constexpr Letter from_code(int c) {
        Letter l;
        l.code = c;
        return l;
    }

    // value() is the ceiling map: value of both k and k' is k.
    constexpr int  value() const { return (code % 2 != 0) ? (code + 1) / 2 : code / 2; }
    constexpr bool primed() const { return (code % 2) != 0; }

    constexpr Letter with_prime() const { return from_code(primed() ? code : code - 1); }
    constexpr Letter without_prime() const { return from_code(primed() ? code + 1 : code); }
    constexpr Letter toggled() const { return from_code(primed() ? code + 1 : code - 1); }

    /// Shift the value by d, keeping the prime: 4' + 1 = 5'.
    constexpr Letter shifted(int d) const { return from_code(code + 2 * d); }

    auto operator<=>(const Letter&) const = default;
};

inline int letter_value(Letter l) { return l.value(); }

inline std::string to_string(Letter l) {
    std::string s = std::to_string(letter_value(l));
    if (l.primed()) s += '\'';
    return s;
}

inline Letter make_letter(int value, bool primed = false) {
    Letter l;
    l.code = 2 * value - (primed ? 1 : 0);
    return l;
}

using Word = std::vector<Letter>;

inline Word unprime_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(l.without_prime());
    return out;
}

inline Word make_word(const std::vector<int>& values) {
    Word w;
    w.reserve(values.size());
    for (int v : values) w.push_back(make_letter(v));
    return w;
}

inline std::vector<int> word_values(const Word& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(letter_value(l));
    return out;
}

inline bool strictly_increasing(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (!(w[i - 1] < w[i])) return false;
    return true;
}

/// Des(w) = { i in [m-1] : w_i > w_{i+1} }, 1-based.
inline std::set<int> word_descents(const Word& w) {
    std::set<int> des;
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) des.insert(static_cast<int>(i));
    return des;
}

inline std::string to_string(const Word& w) {
    if (w.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += to_string(w[i]);
    }
    return s;
}

/// Parses a word: either whitespace-separated tokens ("4 1' 35") or, when the
/// string has no spaces, a run of single digits with optional primes
/// ("41'354'2").  Token form is required for multi-digit or negative letters.
inline Word parse_word(const std::string& text) {
    Word w;
    bool spaced = text.find_first_of(" \t") != std::string::npos;
    if (spaced) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            if (tok == "-") continue;
            bool primed = !tok.empty() && tok.back() == '\'';
            if (primed) tok.pop_back();
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad letter token: " + tok);
            w.push_back(make_letter(v, primed));
        }
        return w;
    }
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '-' && text.size() == 1) return w;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad compact word: " + text);
        bool primed = (i + 1 < text.size() && text[i + 1] == '\'');
        w.push_back(make_letter(c - '0', primed));
        if (primed) ++i;
    }
    return w;
}

/// Strict partition: strictly decreasing positive parts.
struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0 || (i > 0 && parts[i] >= parts[i - 1]))
                throw std::invalid_argument("not a strict partition");
        }
    }

    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }  // 1-based
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool empty() const { return parts.empty(); }

    bool contains(const StrictPartition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    auto operator<=>(const StrictPartition&) const = default;
};

/// SD_lambda = { (i, i+j-1) : 1 <= i <= l, 1 <= j <= lambda_i }, rows 1-based.
inline std::vector<std::pair<int, int>> shifted_diagram(const StrictPartition& lambda) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            cells.emplace_back(i, i + j - 1);
    return cells;
}

inline std::string to_string(const StrictPartition& lambda) {
    if (lambda.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < lambda.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda.parts[i]);
    }
    return s;
}

inline StrictPartition parse_strict_partition(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "0" || text == "-") return StrictPartition(parts);
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return StrictPartition(std::move(parts));
}

/// All strict partitions contained in `bound`.
inline std::vector<StrictPartition> strict_partitions_in(const StrictPartition& bound) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int max_part) -> void {
        out.emplace_back(StrictPartition(cur));
        if (row > bound.length()) return;
        int cap = std::min(max_part, bound.part(row));
        for (int p = cap; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, bound.empty() ? 0 : bound.part(1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

using WeightVector = std::vector<int>;

inline WeightVector add(const WeightVector& a, const WeightVector& b) {
    WeightVector c(a);
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline std::string to_string(const WeightVector& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace qcryst

#endif
