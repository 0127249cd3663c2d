#ifndef QCRYST_WORDS_HPP
#define QCRYST_WORDS_HPP

#include <optional>
#include <vector>

#include "qcryst/crystal.hpp"

namespace qcryst {

/// 1-based indices j with w_j in {i', i, i+1', i+1} left unmatched when i-class
/// letters are read as ")" and (i+1)-class letters as "(".
inline std::vector<int> unpaired_indices(const Word& w, int i) {
    std::vector<int> stack;
    std::vector<int> unpaired;
    for (size_t k = 0; k < w.size(); ++k) {
        int v = w[k].value();
        if (v == i + 1) {
            stack.push_back(static_cast<int>(k) + 1);
        } else if (v == i) {
            if (!stack.empty()) stack.pop_back();
            else unpaired.push_back(static_cast<int>(k) + 1);
        }
    }
    // surviving right-parens collected above; surviving left-parens in stack
    for (int k : stack) unpaired.push_back(k);
    std::sort(unpaired.begin(), unpaired.end());
    return unpaired;
}

/// Lowering operator on primed words, label in {bar1, 0} u [n-1].
inline std::optional<Word> word_f(const Word& w, int label) {
    if (label >= 1) {
        int target = -1;
        for (int k : unpaired_indices(w, label))
            if (w[k - 1].value() == label) target = k;
        if (target < 0) return std::nullopt;
        Word out = w;
        out[target - 1] = out[target - 1].shifted(1);
        return out;
    }
    if (label == 0) {
        for (size_t k = 0; k < w.size(); ++k) {
            if (w[k].value() != 1) continue;
            if (w[k].primed()) return std::nullopt;
            Word out = w;
            out[k] = out[k].with_prime();
            return out;
        }
        return std::nullopt;
    }
    // bar1
    size_t j = w.size();
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k].value() == 2) return std::nullopt;  // a 2 before the first 1
        if (w[k].value() == 1) {
            j = k;
            break;
        }
    }
    if (j == w.size()) return std::nullopt;
    size_t k = w.size();
    for (size_t t = j + 1; t < w.size(); ++t)
        if (w[t].value() == 1) {
            k = t;
            break;
        }
    Word out = w;
    if (k == w.size() || w[j].primed() == w[k].primed()) {
        out[j] = out[j].shifted(1);
    } else if (!w[j].primed() && w[k].primed()) {  // w_j = 1, w_k = 1'
        out[j] = make_letter(2, true);
        out[k] = make_letter(1);
    } else {  // w_j = 1', w_k = 1
        out[j] = make_letter(2);
        out[k] = make_letter(1, true);
    }
    return out;
}

/// Raising operator on primed words.
inline std::optional<Word> word_e(const Word& w, int label) {
    if (label >= 1) {
        int target = -1;
        for (int k : unpaired_indices(w, label))
            if (w[k - 1].value() == label + 1) {
                target = k;
                break;
            }
        if (target < 0) return std::nullopt;
        Word out = w;
        out[target - 1] = out[target - 1].shifted(-1);
        return out;
    }
    if (label == 0) {
        for (size_t k = 0; k < w.size(); ++k) {
            if (w[k].value() != 1) continue;
            if (!w[k].primed()) return std::nullopt;
            Word out = w;
            out[k] = out[k].without_prime();
            return out;
        }
        return std::nullopt;
    }
    // bar1
    size_t j = w.size();
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k].value() == 1 && j == w.size()) return std::nullopt;  // a 1 before any 2
        if (w[k].value() == 2) {
            j = k;
            break;
        }
    }
    if (j == w.size()) return std::nullopt;
    size_t k = w.size();
    for (size_t t = j + 1; t < w.size(); ++t)
        if (w[t].value() == 1) {
            k = t;
            break;
        }
    Word out = w;
    if (k == w.size() || w[j].primed() == w[k].primed()) {
        out[j] = out[j].shifted(-1);
    } else if (w[j].primed() && !w[k].primed()) {  // w_j = 2', w_k = 1
        out[j] = make_letter(1);
        out[k] = make_letter(1, true);
    } else {  // w_j = 2, w_k = 1'
        out[j] = make_letter(1, true);
        out[k] = make_letter(1);
    }
    return out;
}

inline WeightVector word_weight(const Word& w, int n) {
    WeightVector wt(n, 0);
    for (Letter l : w) wt.at(l.value() - 1) += 1;
    return wt;
}

/// The crystal W+_n(m) of length-m primed words (cat = qplus), or the
/// unprimed subcrystal W_n(m) (cat = q or gl).
inline CrystalModel word_crystal(int n, int m, Category cat = Category::qplus) {
    CrystalModel model;
    model.n = n;
    model.cat = cat;
    model.name = (cat == Category::qplus ? "W+_" : "W_") + std::to_string(n) + "(" +
                 std::to_string(m) + ")";
    model.wt = [n](const Element& el) { return word_weight(el.word(), n); };
    model.raw_f = [](int label, const Element& el) -> std::optional<Element> {
        auto r = word_f(el.word(), label);
        if (!r) return std::nullopt;
        return Element(std::move(*r));
    };
    model.raw_e = [](int label, const Element& el) -> std::optional<Element> {
        auto r = word_e(el.word(), label);
        if (!r) return std::nullopt;
        return Element(std::move(*r));
    };
    return model;
}

/// All words in W+_n(m) (primed = true) or W_n(m) (primed = false).
inline std::vector<Element> all_words(int n, int m, bool primed = true) {
    std::vector<Element> out;
    Word cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(Element(cur));
            return;
        }
        for (int code = 1; code <= 2 * n; ++code) {
            Letter l = Letter::from_code(code);
            if (!primed && l.primed()) continue;
            cur.push_back(l);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

/// w_1 w_2 ... w_m  ->  w_1 (x) w_2 (x) ... (x) w_m, left-nested.
inline Element word_to_tensor(const Word& w) {
    if (w.empty()) throw std::invalid_argument("word_to_tensor: empty word");
    std::vector<Element> letters;
    for (Letter l : w) letters.push_back(Element(l));
    return tensor_element(letters);
}

}  // namespace qcryst

#endif
