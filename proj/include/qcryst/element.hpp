#ifndef QCRYST_ELEMENT_HPP
#define QCRYST_ELEMENT_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qcryst/alphabet.hpp"
#include "qcryst/tableau.hpp"

namespace qcryst {

using Factorization = std::vector<Word>;

inline Word concat(const Factorization& a) {
    Word w;
    for (const Word& f : a) w.insert(w.end(), f.begin(), f.end());
    return w;
}

inline Factorization unprime_factorization(const Factorization& a) {
    Factorization out;
    out.reserve(a.size());
    for (const Word& f : a) out.push_back(unprime_word(f));
    return out;
}

inline WeightVector factorization_weight(const Factorization& a) {
    WeightVector w;
    w.reserve(a.size());
    for (const Word& f : a) w.push_back(static_cast<int>(f.size()));
    return w;
}

inline std::string to_string(const Factorization& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += a[i - 1].empty() ? "| " : " | ";
        for (size_t j = 0; j < a[i].size(); ++j) {
            if (j) s += ' ';
            s += to_string(a[i][j]);
        }
    }
    return s;
}

inline Factorization parse_factorization(const std::string& text) {
    Factorization out;
    std::string body = text;
    while (true) {
        size_t cut = body.find('|');
        std::string part = body.substr(0, cut);
        out.push_back(parse_word(part.find_first_not_of(" \t") == std::string::npos ? "" : part));
        if (cut == std::string::npos) break;
        body = body.substr(cut + 1);
    }
    return out;
}

/// Opaque crystal vertex payload: a primed word (also covers the standard
/// crystals via one-letter words), an increasing factorization, a shifted
/// tableau, or a binary tensor of two payloads.
class Element {
  public:
    using Tensor = std::vector<Element>;  // always exactly two children

    Element() : v_(Word{}) {}
    explicit Element(Word w) : v_(std::move(w)) {}
    explicit Element(Letter l) : v_(Word{l}) {}
    explicit Element(Factorization f) : v_(std::move(f)) {}
    explicit Element(ShiftedTableau t) : v_(std::move(t)) {}
    Element(Element left, Element right) : v_(Tensor{std::move(left), std::move(right)}) {}

    bool is_word() const { return std::holds_alternative<Word>(v_); }
    bool is_factorization() const { return std::holds_alternative<Factorization>(v_); }
    bool is_tableau() const { return std::holds_alternative<ShiftedTableau>(v_); }
    bool is_tensor() const { return std::holds_alternative<Tensor>(v_); }

    const Word& word() const { return std::get<Word>(v_); }
    const Factorization& factorization() const { return std::get<Factorization>(v_); }
    const ShiftedTableau& tableau() const { return std::get<ShiftedTableau>(v_); }
    const Element& left() const { return std::get<Tensor>(v_)[0]; }
    const Element& right() const { return std::get<Tensor>(v_)[1]; }

    /// Three-way structural comparison; tensors compare recursively.
    static int compare(const Element& a, const Element& b) {
        if (a.v_.index() != b.v_.index())
            return a.v_.index() < b.v_.index() ? -1 : 1;
        switch (a.v_.index()) {
            case 0: {
                const Word &x = std::get<Word>(a.v_), &y = std::get<Word>(b.v_);
                return x < y ? -1 : (y < x ? 1 : 0);
            }
            case 1: {
                const Factorization &x = std::get<Factorization>(a.v_),
                                    &y = std::get<Factorization>(b.v_);
                return x < y ? -1 : (y < x ? 1 : 0);
            }
            case 2: {
                const ShiftedTableau &x = std::get<ShiftedTableau>(a.v_),
                                     &y = std::get<ShiftedTableau>(b.v_);
                return x < y ? -1 : (y < x ? 1 : 0);
            }
            default: {
                const Tensor &x = std::get<Tensor>(a.v_), &y = std::get<Tensor>(b.v_);
                for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
                    int c = compare(x[i], y[i]);
                    if (c != 0) return c;
                }
                return x.size() < y.size() ? -1 : (y.size() < x.size() ? 1 : 0);
            }
        }
    }

    friend bool operator==(const Element& a, const Element& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Element& a, const Element& b) { return compare(a, b) != 0; }
    friend bool operator<(const Element& a, const Element& b) { return compare(a, b) < 0; }
    friend bool operator>(const Element& a, const Element& b) { return compare(a, b) > 0; }

    std::string str() const {
        if (is_word()) return to_string(word());
        if (is_factorization()) return to_string(factorization());
        if (is_tableau()) return to_string(tableau());
        std::string l = left().is_tensor() ? "(" + left().str() + ")" : left().str();
        std::string r = right().is_tensor() ? "(" + right().str() + ")" : right().str();
        return l + " \xE2\x8A\x97 " + r;  // tensor sign
    }

  private:
    std::variant<Word, Factorization, ShiftedTableau, Tensor> v_;
};

inline std::string to_string(const Element& e) { return e.str(); }

}  // namespace qcryst

#endif
