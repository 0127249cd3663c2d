#ifndef QCRYST_INSERTION_HPP
#define QCRYST_INSERTION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcryst/element.hpp"
#include "qcryst/factorizations.hpp"
#include "qcryst/involutions.hpp"
#include "qcryst/tableau.hpp"

namespace qcryst {

struct InsertionPair {
    ShiftedTableau P, Q;
};

namespace detail {

struct InsertStep {
    Pos added{};
    bool column_flag = false;  // process ended in column insertion
};

inline void check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("insertion invariant: ") + what);
}

/// One letter of orthogonal Edelman-Greene insertion.  Bumps travel along
/// rows until they pass the diagonal, then along columns.
inline InsertStep eg_insert_letter(ShiftedTableau& P, Letter x) {
    bool column_mode = false;
    int idx = 1;  // current row (row mode) or column (column mode)
    for (;;) {
        // collect the current line
        std::vector<Pos> line;
        if (!column_mode) {
            auto [lo, len] = P.row_span(idx);
            for (int c = lo; c < lo + len; ++c) line.push_back({idx, c});
        } else {
            for (int r = 1; r <= idx; ++r)
                if (P.has(r, idx)) line.push_back({r, idx});
        }
        int yk = -1, tk = -1;  // first >= ceil(x), first > ceil(x)
        for (size_t k = 0; k < line.size(); ++k) {
            int v = P.at(line[k]).value();
            if (yk < 0 && v >= x.value()) yk = static_cast<int>(k);
            if (tk < 0 && v > x.value()) tk = static_cast<int>(k);
        }
        if (yk < 0) {
            // append at the end of the line
            Pos p;
            if (!column_mode) {
                auto [lo, len] = P.row_span(idx);
                p = {idx, len == 0 ? idx : lo + len};
            } else {
                p = {static_cast<int>(line.size()) + 1, idx};
            }
            bool diag = (p.first == p.second);
            bool col_flag = column_mode || (diag && x.primed());
            P.put(p, diag ? x.without_prime() : x);
            check(is_increasing(P), "P stays increasing");
            check(!has_diagonal_primes(P), "P has no diagonal primes");
            return {p, col_flag};
        }
        check(tk >= 0, "second bound entry exists");
        Pos ypos = line[yk];
        bool ydiag = (ypos.first == ypos.second);
        if (yk != tk) {
            // same-value entry first: interchange primes on y, ytilde and
            // carry x+1 onward
            interchange_primes(P, ypos, line[tk]);
            check(!has_diagonal_primes(P), "prime interchange avoids the diagonal");
            x = x.shifted(1);
            if (!column_mode && ydiag) {
                column_mode = true;
                idx = ypos.second + 1;
            } else {
                ++idx;
            }
        } else {
            Letter y = P.at(ypos);
            if (ydiag) {
                // the diagonal keeps an unprimed entry; the bump carries the prime
                P.put(ypos, x.without_prime());
                x = x.primed() ? y.with_prime() : y;
                if (!column_mode) column_mode = true;
                idx = ypos.second + 1;
            } else {
                P.put(ypos, x);
                x = y;
                ++idx;
            }
        }
    }
}

}  // namespace detail

/// Orthogonal Edelman-Greene insertion of an increasing factorization.
/// P is increasing with row word a primed involution word; Q is semistandard
/// with entry j (primed when the step ends in column insertion) recording the
/// box created while inserting the j-th factor.
inline InsertionPair eg_insert(const Factorization& a, bool validate = true) {
    ShiftedTableau P, Q;
    Permutation delta;
    for (size_t j = 0; j < a.size(); ++j) {
        for (Letter x : a[j]) {
            auto step = detail::eg_insert_letter(P, x);
            Q.put(step.added, make_letter(static_cast<int>(j) + 1, step.column_flag));
            if (validate) {
                delta = demazure_conjugate(delta, x.value());
                detail::check(is_primed_involution_word(row_reading_word(P), delta),
                              "row(P) is a primed involution word for the prefix");
            }
        }
    }
    if (validate) {
        detail::check(is_semistandard(Q), "Q semistandard");
        detail::check(outer_shape(P) == outer_shape(Q), "P and Q have equal shape");
    }
    return {P, Q};
}

/// A word treated as a sequence of one-letter factors.
inline InsertionPair eg_insert_word(const Word& w, bool validate = true) {
    Factorization a;
    for (Letter l : w) a.push_back(Word{l});
    return eg_insert(a, validate);
}

/// The fiber of a -> P_EG(a) over P inside Incr+_n(z).
inline std::vector<Factorization> eg_fiber(const Permutation& z, int n, const ShiftedTableau& P) {
    std::vector<Factorization> out;
    for (const Factorization& a : enumerate_factorizations(z, n))
        if (eg_insert(a, false).P == P) out.push_back(a);
    return out;
}

// ---------------------------------------------------------------------------
// Doubling and orthogonal mixed insertion

inline Word double_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(make_letter(2 * l.value(), l.primed()));
    return out;
}

inline Factorization double_factorization(const Factorization& a) {
    Factorization out;
    out.reserve(a.size());
    for (const Word& f : a) out.push_back(double_word(f));
    return out;
}

/// w^T: factor i collects the positions j with w_j = i (unprimed) or i'
/// (primed), in increasing order.
inline Factorization word_transpose(const Word& w, int n) {
    Factorization out(n);
    for (size_t j = 0; j < w.size(); ++j) {
        Letter l = w[j];
        out[l.value() - 1].push_back(make_letter(static_cast<int>(j) + 1, l.primed()));
    }
    return out;
}

/// Orthogonal mixed insertion: P_HM(w) = Q_EG(double(w^T)) and Q_HM(w) is the
/// halving of P_EG(double(w^T)).
inline InsertionPair mixed_insert(const Word& w, int n) {
    Factorization d = double_factorization(word_transpose(w, n));
    InsertionPair eg = eg_insert(d, false);
    return {eg.Q, halve_entries(eg.P)};
}

}  // namespace qcryst

#endif
