#ifndef QCRYST_INVOLUTIONS_HPP
#define QCRYST_INVOLUTIONS_HPP

#include <cassert>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcryst/alphabet.hpp"

namespace qcryst {

/// Permutation of Z fixing all but finitely many points.
class Permutation {
  public:
    Permutation() = default;

    static Permutation transposition(int i, int j) {
        Permutation p;
        if (i != j) {
            p.map_[i] = j;
            p.map_[j] = i;
        }
        return p;
    }

    static Permutation simple(int i) { return transposition(i, i + 1); }

    /// One-line notation z(start), z(start+1), ..., identity elsewhere.
    static Permutation from_one_line(const std::vector<int>& images, int start = 1) {
        Permutation p;
        for (size_t k = 0; k < images.size(); ++k) {
            int i = start + static_cast<int>(k);
            if (images[k] != i) p.map_[i] = images[k];
        }
        p.check_bijective();
        return p;
    }

    int operator()(int i) const {
        auto it = map_.find(i);
        return it == map_.end() ? i : it->second;
    }

    bool is_identity() const { return map_.empty(); }
    bool is_involution() const {
        for (auto [i, j] : map_)
            if ((*this)(j) != i) return false;
        return true;
    }

    /// this followed by... composition (a*b)(i) = a(b(i)).
    Permutation operator*(const Permutation& other) const {
        Permutation p;
        std::set<int> keys;
        for (auto [i, _] : map_) keys.insert(i);
        for (auto [i, _] : other.map_) keys.insert(i);
        for (auto [i, j] : other.map_) keys.insert(j);
        for (int i : keys) {
            int img = (*this)(other(i));
            if (img != i) p.map_[i] = img;
        }
        return p;
    }

    Permutation inverse() const {
        Permutation p;
        for (auto [i, j] : map_) p.map_[j] = i;
        return p;
    }

    bool operator==(const Permutation& other) const { return map_ == other.map_; }
    bool operator<(const Permutation& other) const { return map_ < other.map_; }

    /// Smallest interval [lo, hi] containing all non-fixed points; [1, 0] when identity.
    std::pair<int, int> support_window() const {
        if (map_.empty()) return {1, 0};
        return {map_.begin()->first, map_.rbegin()->first};
    }

    const std::map<int, int>& nonfixed() const { return map_; }

    /// Cycles {i, z(i)} with i < z(i) of an involution.
    std::vector<std::pair<int, int>> two_cycles() const {
        std::vector<std::pair<int, int>> out;
        for (auto [i, j] : map_)
            if (i < j) out.emplace_back(i, j);
        return out;
    }

    std::string cycle_string() const {
        if (map_.empty()) return "id";
        std::string s;
        std::set<int> done;
        for (auto [i, _] : map_) {
            if (done.count(i)) continue;
            s += '(';
            int j = i;
            bool first = true;
            do {
                if (!first) s += ',';
                s += std::to_string(j);
                done.insert(j);
                j = (*this)(j);
                first = false;
            } while (j != i);
            s += ')';
        }
        return s;
    }

  private:
    void check_bijective() const {
        std::set<int> imgs;
        for (auto [_, j] : map_) imgs.insert(j);
        if (imgs.size() != map_.size()) throw std::invalid_argument("not a bijection");
        for (auto [i, _] : map_)
            if (!imgs.count(i)) throw std::invalid_argument("not a bijection");
    }

    std::map<int, int> map_;  // non-fixed points only
};

/// Demazure product pi o s_i: pi s_i when pi(i) < pi(i+1), else pi.
inline Permutation demazure(const Permutation& pi, int i) {
    if (pi(i) > pi(i + 1)) return pi;
    return pi * Permutation::simple(i);
}

/// Twisted conjugation s_i o z o s_i on involutions.
inline Permutation demazure_conjugate(const Permutation& z, int i) {
    if (z(i) > z(i + 1)) return z;
    Permutation s = Permutation::simple(i);
    if (z(i) == i && z(i + 1) == i + 1) return z * s;
    return s * z * s;
}

/// Evaluates an unprimed word via prefix conjugation; delta_k after k letters.
inline Permutation evaluate_involution_word(const std::vector<int>& word) {
    Permutation z;
    for (int a : word) z = demazure_conjugate(z, a);
    return z;
}

/// Involution code c_i(z) = #{ j : z(j) <= i < j and z(i) > z(j) }, nonzero
/// entries only.  The weak inequality z(j) <= i matters: the strict variant
/// would give mu((1,5)(2,3)) = (4) instead of (4,1) and break the sum rule
/// sum c_i = common involution word length.
inline std::map<int, int> involution_code(const Permutation& z) {
    std::map<int, int> code;
    auto [lo, hi] = z.support_window();
    for (int i = lo; i <= hi; ++i) {
        int c = 0;
        for (int j = i + 1; j <= hi; ++j)
            if (z(j) <= i && z(i) > z(j)) ++c;
        if (c) code[i] = c;
    }
    return code;
}

/// Common length of all involution words for z.
inline int involution_length(const Permutation& z) {
    int total = 0;
    for (auto [_, c] : involution_code(z)) total += c;
    return total;
}

inline int absolute_length(const Permutation& z) {
    int c = 0;
    for (auto [i, j] : z.nonfixed())
        if (i < j) ++c;
    return c;
}

/// Involution shape mu(z): transpose of the partition sorting the code.
inline StrictPartition involution_shape(const Permutation& z) {
    std::vector<int> code;
    for (auto [_, c] : involution_code(z)) code.push_back(c);
    std::sort(code.rbegin(), code.rend());
    std::vector<int> mu;
    for (int r = 1; !code.empty() && code[0] >= r; ++r) {
        int count = 0;
        for (int c : code)
            if (c >= r) ++count;
        mu.push_back(count);
    }
    return StrictPartition(std::move(mu));
}

namespace detail {
inline std::string perm_key(const Permutation& z) {
    std::string s;
    for (auto [i, j] : z.nonfixed()) s += std::to_string(i) + ">" + std::to_string(j) + ";";
    return s;
}
}  // namespace detail

/// All involution words for z (unprimed), by reverse recursion on descents.
/// The memo table is guarded; returned references stay valid (node stability).
inline const std::vector<std::vector<int>>& involution_words(const Permutation& z) {
    static std::map<std::string, std::vector<std::vector<int>>> memo;
    static std::recursive_mutex memo_mutex;
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    std::string key = detail::perm_key(z);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<std::vector<int>> words;
    if (z.is_identity()) {
        words.push_back({});
    } else {
        auto [lo, hi] = z.support_window();
        for (int a = lo - 1; a <= hi; ++a) {
            if (z(a) <= z(a + 1)) continue;
            // peel the last letter a: find y with s_a o y o s_a = z shorter
            Permutation y;
            if (z(a) == a + 1) {
                y = z * Permutation::simple(a);
            } else {
                Permutation s = Permutation::simple(a);
                y = s * z * s;
            }
            for (const auto& w : involution_words(y)) {
                auto ext = w;
                ext.push_back(a);
                words.push_back(std::move(ext));
            }
        }
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
    }
    return memo.emplace(std::move(key), std::move(words)).first->second;
}

/// Indices i (1-based) where both a_i and a_i + 1 are fixed by the prefix
/// involution delta_{i-1}.
inline std::set<int> commutations(const std::vector<int>& word) {
    std::set<int> out;
    Permutation delta;
    for (size_t k = 0; k < word.size(); ++k) {
        int a = word[k];
        if (delta(a) == a && delta(a + 1) == a + 1) out.insert(static_cast<int>(k) + 1);
        delta = demazure_conjugate(delta, a);
    }
    return out;
}

inline bool is_involution_word(const std::vector<int>& word, const Permutation& z) {
    return evaluate_involution_word(word) == z &&
           static_cast<int>(word.size()) == involution_length(z);
}

/// All primed involution words: every unprimed word with every subset of its
/// commutation positions primed.
inline std::vector<Word> primed_involution_words(const Permutation& z) {
    std::vector<Word> out;
    for (const auto& w : involution_words(z)) {
        std::set<int> cs = commutations(w);
        std::vector<int> comm(cs.begin(), cs.end());
        size_t subsets = size_t{1} << comm.size();
        for (size_t mask = 0; mask < subsets; ++mask) {
            Word pw;
            pw.reserve(w.size());
            for (int a : w) pw.push_back(make_letter(a));
            for (size_t b = 0; b < comm.size(); ++b)
                if (mask & (size_t{1} << b)) pw[comm[b] - 1] = pw[comm[b] - 1].with_prime();
            out.push_back(std::move(pw));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_primed_involution_word(const Word& w, const Permutation& z) {
    std::vector<int> plain = word_values(w);
    if (!is_involution_word(plain, z)) return false;
    auto comm = commutations(plain);
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].primed() && !comm.count(static_cast<int>(i) + 1)) return false;
    return true;
}

/// BFS closure of a primed word under the relations spanning primed
/// involution words: commutations, braid moves XYX ~ YXY and X'YX ~ YXY',
/// an initial prime toggle, and an initial unprimed swap.
inline std::set<Word> hat_equivalence_class(const Word& start, size_t cap = 5'000'000) {
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    auto push = [&](Word w) {
        if (seen.insert(w).second) queue.push_back(std::move(w));
    };
    while (!queue.empty()) {
        if (seen.size() > cap) throw std::runtime_error("hat_equivalence_class: cap exceeded");
        Word w = queue.front();
        queue.pop_front();
        size_t m = w.size();
        if (m >= 1) {
            Word v = w;
            v[0] = v[0].toggled();
            push(std::move(v));
        }
        if (m >= 2 && !w[0].primed() && !w[1].primed()) {
            Word v = w;
            std::swap(v[0], v[1]);
            push(std::move(v));
        }
        for (size_t i = 0; i + 1 < m; ++i) {
            if (std::abs(w[i].value() - w[i + 1].value()) > 1) {
                Word v = w;
                std::swap(v[i], v[i + 1]);
                push(std::move(v));
            }
        }
        for (size_t i = 0; i + 2 < m; ++i) {
            Letter a = w[i], b = w[i + 1], c = w[i + 2];
            if (std::abs(a.value() - b.value()) != 1 || a.value() != c.value()) continue;
            if (b.primed()) continue;
            int X = a.value(), Y = b.value();
            Word v = w;
            if (!a.primed() && !c.primed()) {  // XYX ~ YXY
                v[i] = make_letter(Y);
                v[i + 1] = make_letter(X);
                v[i + 2] = make_letter(Y);
                push(std::move(v));
            } else if (a.primed() && !c.primed()) {  // X'YX -> YXY'
                v[i] = make_letter(Y);
                v[i + 1] = make_letter(X);
                v[i + 2] = make_letter(Y, true);
                push(std::move(v));
            } else if (!a.primed() && c.primed()) {  // YXY' -> X'YX reversed roles
                v[i] = make_letter(Y, true);
                v[i + 1] = make_letter(X);
                v[i + 2] = make_letter(Y);
                push(std::move(v));
            }
        }
    }
    return seen;
}

/// gamma_i(w): the cycle of z assigned to commutation index i of unprime(w).
inline std::pair<int, int> cycle_of_commutation(const std::vector<int>& word, int i) {
    int a = word[i - 1];
    int x = a, y = a + 1;
    for (size_t k = i; k < word.size(); ++k) {
        int s = word[k];
        auto flip = [s](int v) { return v == s ? s + 1 : (v == s + 1 ? s : v); };
        x = flip(x);
        y = flip(y);
    }
    return {std::min(x, y), std::max(x, y)};
}

/// marked(w) = { gamma_i(w) : w_i primed }.
inline std::set<std::pair<int, int>> marked_cycles(const Word& w) {
    std::set<std::pair<int, int>> out;
    std::vector<int> plain = word_values(w);
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].primed()) out.insert(cycle_of_commutation(plain, static_cast<int>(i) + 1));
    return out;
}

/// 2143-avoidance over the support window padded by one identity point.
inline bool is_vexillary(const Permutation& z) {
    auto [lo, hi] = z.support_window();
    if (lo > hi) return true;
    std::vector<int> v;
    for (int i = lo - 1; i <= hi + 1; ++i) v.push_back(z(i));
    int n = static_cast<int>(v.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (v[b] >= v[a]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (v[c] <= v[a]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (v[a] < v[d] && v[d] < v[c]) return false;
            }
        }
    return true;
}

/// y (+) z: y on [1,M], z shifted up by M.
inline Permutation direct_sum(const Permutation& y, int M, const Permutation& z) {
    std::map<int, int> m;
    for (auto [i, j] : y.nonfixed()) m[i] = j;
    for (auto [i, j] : z.nonfixed()) m[i + M] = j + M;
    std::vector<std::pair<int, int>> cycles;
    Permutation out;
    for (auto [i, j] : m)
        if (i < j) out = out * Permutation::transposition(i, j);
    return out;
}

/// Accepts "(1,5)(2,3)", "id", or one-line "5,3,2,4,1" (window starting at 1).
inline Permutation parse_involution(const std::string& text) {
    if (text.empty() || text == "id" || text == "1") return Permutation();
    if (text.find('(') != std::string::npos) {
        Permutation z;
        size_t pos = 0;
        while (pos < text.size()) {
            size_t open = text.find('(', pos);
            if (open == std::string::npos) break;
            size_t close = text.find(')', open);
            if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle: " + text);
            std::string body = text.substr(open + 1, close - open - 1);
            std::vector<int> entries;
            std::istringstream in(body);
            std::string tok;
            while (std::getline(in, tok, ',')) entries.push_back(std::stoi(tok));
            if (entries.size() != 2) throw std::invalid_argument("only 2-cycles allowed: " + text);
            z = z * Permutation::transposition(entries[0], entries[1]);
            pos = close + 1;
        }
        if (!z.is_involution()) throw std::invalid_argument("not an involution: " + text);
        return z;
    }
    std::vector<int> imgs;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) imgs.push_back(std::stoi(tok));
    Permutation z = Permutation::from_one_line(imgs);
    if (!z.is_involution()) throw std::invalid_argument("not an involution: " + text);
    return z;
}

/// All involutions in I_N (fixing Z outside [1,N]).
inline std::vector<Permutation> involutions_in(int N) {
    std::vector<Permutation> out;
    std::vector<int> oneline(N);
    for (int i = 0; i < N; ++i) oneline[i] = i + 1;
    // enumerate involutions by choosing matchings
    auto rec = [&](auto&& self, int i, Permutation acc) -> void {
        while (i <= N && acc(i) != i) ++i;
        if (i > N) {
            out.push_back(acc);
            return;
        }
        self(self, i + 1, acc);  // i fixed
        for (int j = i + 1; j <= N; ++j)
            if (acc(j) == j) self(self, i + 1, acc * Permutation::transposition(i, j));
    };
    rec(rec, 1, Permutation());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qcryst

#endif
