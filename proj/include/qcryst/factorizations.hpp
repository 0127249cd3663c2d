#ifndef QCRYST_FACTORIZATIONS_HPP
#define QCRYST_FACTORIZATIONS_HPP

#include <optional>
#include <set>
#include <vector>

#include "qcryst/crystal.hpp"
#include "qcryst/involutions.hpp"

namespace qcryst {

struct PairingResult {
    std::vector<std::pair<Letter, Letter>> pairs;
    std::vector<bool> left_paired, right_paired;
};

/// Pairs each letter of w, largest first, with the smallest unpaired letter
/// of v of strictly larger value.
inline PairingResult pair_letters(const Word& v, const Word& w) {
    PairingResult out;
    out.left_paired.assign(v.size(), false);
    out.right_paired.assign(w.size(), false);
    for (size_t j = w.size(); j-- > 0;) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (out.left_paired[i]) continue;
            if (v[i].value() > w[j].value()) {
                out.left_paired[i] = true;
                out.right_paired[j] = true;
                out.pairs.push_back({v[i], w[j]});
                break;
            }
        }
    }
    return out;
}

namespace detail {

inline void insert_sorted(Word& w, Letter l) {
    w.insert(std::upper_bound(w.begin(), w.end(), l), l);
}

inline bool erase_letter(Word& w, Letter l) {
    auto it = std::find(w.begin(), w.end(), l);
    if (it == w.end()) return false;
    w.erase(it);
    return true;
}

inline bool contains_value(const Word& w, int v) {
    for (Letter l : w)
        if (l.value() == v) return true;
    return false;
}

}  // namespace detail

/// Lowering operator f_i on increasing factorizations, i in [n-1].
inline std::optional<Factorization> factorization_f(const Factorization& a, int i) {
    const Word& ai = a[i - 1];
    const Word& aj = a[i];
    PairingResult pr = pair_letters(ai, aj);
    int xi = -1;
    for (size_t k = 0; k < ai.size(); ++k)
        if (!pr.left_paired[k]) xi = static_cast<int>(k);  // largest unpaired
    if (xi < 0) return std::nullopt;
    Letter x = ai[xi];
    int y = x.value();
    while (detail::contains_value(aj, y)) ++y;
    Factorization out = a;
    out[i - 1].erase(out[i - 1].begin() + xi);
    if (x.primed()) {  // L1
        detail::insert_sorted(out[i], make_letter(y, true));
    } else {  // L2
        detail::insert_sorted(out[i], make_letter(y));
        for (int v = x.value(); v <= y - 1; ++v) {
            bool up = std::find(out[i - 1].begin(), out[i - 1].end(), make_letter(v + 1)) !=
                      out[i - 1].end();
            bool dn = std::find(out[i].begin(), out[i].end(), make_letter(v, true)) != out[i].end();
            if (up && dn) {
                *std::find(out[i - 1].begin(), out[i - 1].end(), make_letter(v + 1)) =
                    make_letter(v + 1, true);
                *std::find(out[i].begin(), out[i].end(), make_letter(v, true)) = make_letter(v);
            }
        }
    }
    return out;
}

/// Raising operator e_i on increasing factorizations, i in [n-1].  The moved
/// letter is the smallest unpaired one in a^{i+1}: taking the largest instead
/// would break inversion against f_i (already on Incr+_2((1,2)(3,4))) and the
/// agreement with word crystals under transposition.
inline std::optional<Factorization> factorization_e(const Factorization& a, int i) {
    const Word& ai = a[i - 1];
    const Word& aj = a[i];
    PairingResult pr = pair_letters(ai, aj);
    int yi = -1;
    for (size_t k = 0; k < aj.size(); ++k)
        if (!pr.right_paired[k]) {
            yi = static_cast<int>(k);  // smallest unpaired
            break;
        }
    if (yi < 0) return std::nullopt;
    Letter y = aj[yi];
    int x = y.value();
    while (detail::contains_value(ai, x)) --x;
    Factorization out = a;
    out[i].erase(out[i].begin() + yi);
    if (y.primed()) {  // R1
        detail::insert_sorted(out[i - 1], make_letter(x, true));
    } else {  // R2
        detail::insert_sorted(out[i - 1], make_letter(x));
        for (int v = x; v <= y.value() - 1; ++v) {
            bool up = std::find(out[i - 1].begin(), out[i - 1].end(), make_letter(v + 1, true)) !=
                      out[i - 1].end();
            bool dn = std::find(out[i].begin(), out[i].end(), make_letter(v)) != out[i].end();
            if (up && dn) {
                *std::find(out[i - 1].begin(), out[i - 1].end(), make_letter(v + 1, true)) =
                    make_letter(v + 1);
                *std::find(out[i].begin(), out[i].end(), make_letter(v)) = make_letter(v, true);
            }
        }
    }
    return out;
}

/// f_bar1: moves the first letter of a^1 to the front of a^2, with a prime
/// swap when the first two letters of a^1 have mixed primes.
inline std::optional<Factorization> factorization_fbar(const Factorization& a) {
    const Word& a1 = a[0];
    const Word& a2 = a[1];
    if (a1.empty()) return std::nullopt;
    if (!a2.empty() && !(a1.front() < a2.front())) return std::nullopt;
    Factorization out = a;
    if (a1.size() >= 2 && a1[0].primed() != a1[1].primed()) {
        Letter moved = a1[0].toggled();
        out[0].erase(out[0].begin());
        out[0][0] = out[0][0].toggled();
        out[1].insert(out[1].begin(), moved);
    } else {
        Letter moved = a1[0];
        out[0].erase(out[0].begin());
        out[1].insert(out[1].begin(), moved);
    }
    return out;
}

inline std::optional<Factorization> factorization_ebar(const Factorization& a) {
    const Word& a1 = a[0];
    const Word& a2 = a[1];
    if (a2.empty()) return std::nullopt;
    if (!a1.empty() && !(a2.front() < a1.front())) return std::nullopt;
    Factorization out = a;
    if (!a1.empty() && a1[0].primed() != a2[0].primed()) {
        Letter moved = a2[0].toggled();
        out[1].erase(out[1].begin());
        out[0][0] = out[0][0].toggled();
        out[0].insert(out[0].begin(), moved);
    } else {
        Letter moved = a2[0];
        out[1].erase(out[1].begin());
        out[0].insert(out[0].begin(), moved);
    }
    return out;
}

inline std::optional<Factorization> factorization_f0(const Factorization& a) {
    if (a[0].empty() || a[0][0].primed()) return std::nullopt;
    Factorization out = a;
    out[0][0] = out[0][0].with_prime();
    return out;
}

inline std::optional<Factorization> factorization_e0(const Factorization& a) {
    if (a[0].empty() || !a[0][0].primed()) return std::nullopt;
    Factorization out = a;
    out[0][0] = out[0][0].without_prime();
    return out;
}

// ---------------------------------------------------------------------------
// Coxeter-Knuth operators

namespace detail {

inline Word ock_window(Word w) {
    // acts on 1-, 2- or 3-letter windows
    if (w.size() == 1) {
        w[0] = w[0].toggled();
        return w;
    }
    if (w.size() == 2) {
        // swap values, primes stay with the positions
        int v0 = w[0].value(), v1 = w[1].value();
        bool p0 = w[0].primed(), p1 = w[1].primed();
        return {make_letter(v1, p0), make_letter(v0, p1)};
    }
    int va = w[0].value(), vb = w[1].value(), vc = w[2].value();
    bool pa = w[0].primed(), pb = w[1].primed(), pc = w[2].primed();
    if (va == vc && va != vb) {
        if (pb) return w;
        if (!pa && !pc)  // XYX <-> YXY
            return {make_letter(vb), make_letter(va), make_letter(vb)};
        if (pa && !pc)  // X'YX -> YXY'
            return {make_letter(vb), make_letter(va), make_letter(vb, true)};
        if (!pa && pc)  // YXY' -> X'YX
            return {make_letter(vb, true), make_letter(va), make_letter(vb)};
        return w;
    }
    if (va != vb && vb != vc && va != vc) {
        // distinct values: ACB <-> CAB swaps the first two letters,
        // BCA <-> BAC swaps the last two
        int lo = std::min({va, vb, vc}), hi = std::max({va, vb, vc});
        int mid = va + vb + vc - lo - hi;
        Word out = w;
        if ((va == lo && vb == hi && vc == mid) || (va == hi && vb == lo && vc == mid)) {
            std::swap(out[0], out[1]);  // ACB or CAB
            return out;
        }
        if ((va == mid && vb == hi && vc == lo) || (va == mid && vb == lo && vc == hi)) {
            std::swap(out[1], out[2]);  // BCA or BAC
            return out;
        }
    }
    return w;
}

}  // namespace detail

/// Orthogonal Coxeter-Knuth operator ock_i: a prime toggle at i = -1, a
/// positional swap at i = 0, a braid/commutation rewrite of letters
/// i, i+1, i+2 for i >= 1; the identity when i+2 is out of range.
inline Word ock(const Word& w, int i) {
    int m = static_cast<int>(w.size());
    if (i < -1 || i + 2 > m || i + 2 < 1) return w;
    Word out = w;
    if (i == -1) {
        Word win{w[0]};
        win = detail::ock_window(win);
        out[0] = win[0];
        return out;
    }
    if (i == 0) {
        Word win{w[0], w[1]};
        win = detail::ock_window(win);
        out[0] = win[0];
        out[1] = win[1];
        return out;
    }
    Word win{w[i - 1], w[i], w[i + 1]};
    win = detail::ock_window(win);
    out[i - 1] = win[0];
    out[i] = win[1];
    out[i + 1] = win[2];
    return out;
}

// ---------------------------------------------------------------------------
// The crystal Incr+_n(z)

inline bool is_valid_factorization(const Factorization& a, const Permutation& z) {
    for (const Word& f : a)
        if (!strictly_increasing(f)) return false;
    return is_primed_involution_word(concat(a), z);
}

/// All elements of Incr+_n(z): every primed involution word cut into n
/// strictly increasing consecutive blocks.
inline std::vector<Factorization> enumerate_factorizations(const Permutation& z, int n) {
    std::vector<Factorization> out;
    for (const Word& w : primed_involution_words(z)) {
        int m = static_cast<int>(w.size());
        Factorization cur(n);
        auto rec = [&](auto&& self, int pos, int block) -> void {
            if (block == n) {
                if (pos == m) out.push_back(cur);
                return;
            }
            // empty block allowed
            self(self, pos, block + 1);
            Word& b = cur[block];
            for (int end = pos; end < m; ++end) {
                if (!b.empty() && !(b.back() < w[end])) break;
                b.push_back(w[end]);
                self(self, end + 1, block + 1);
            }
            b.clear();
        };
        rec(rec, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline CrystalModel factorization_crystal(const Permutation& z, int n) {
    CrystalModel m;
    m.n = n;
    m.cat = Category::qplus;
    m.name = "Incr+_" + std::to_string(n) + "(" + z.cycle_string() + ")";
    m.wt = [](const Element& el) { return factorization_weight(el.factorization()); };
    m.raw_f = [n](int label, const Element& el) -> std::optional<Element> {
        const Factorization& a = el.factorization();
        std::optional<Factorization> r;
        if (label >= 1) r = factorization_f(a, label);
        else if (label == 0) r = factorization_f0(a);
        else r = factorization_fbar(a);
        if (!r) return std::nullopt;
        return Element(std::move(*r));
    };
    m.raw_e = [n](int label, const Element& el) -> std::optional<Element> {
        const Factorization& a = el.factorization();
        std::optional<Factorization> r;
        if (label >= 1) r = factorization_e(a, label);
        else if (label == 0) r = factorization_e0(a);
        else r = factorization_ebar(a);
        if (!r) return std::nullopt;
        return Element(std::move(*r));
    };
    return m;
}

inline std::vector<Element> factorization_elements(const Permutation& z, int n) {
    std::vector<Element> out;
    for (auto& a : enumerate_factorizations(z, n)) out.push_back(Element(std::move(a)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qcryst

#endif
