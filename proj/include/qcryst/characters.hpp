#ifndef QCRYST_CHARACTERS_HPP
#define QCRYST_CHARACTERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcryst/crystal.hpp"
#include "qcryst/factorizations.hpp"
#include "qcryst/tableau.hpp"

namespace qcryst {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in x_1..x_n with exact integer coefficients; exponent
/// vectors ordered lexicographically (first entry dominant).
class SparsePolynomial {
  public:
    explicit SparsePolynomial(int nvars = 0) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }

    BigInt coeff(const std::vector<int>& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(const std::vector<int>& mono, const BigInt& c) {
        if (static_cast<int>(mono.size()) != nvars_)
            throw std::invalid_argument("add_term: wrong arity");
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            if (c != 0) terms_[mono] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        a -= b;
        return a;
    }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        SparsePolynomial out(a.nvars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                std::vector<int> m = ma;
                for (int i = 0; i < out.nvars_; ++i) m[i] += mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }
    friend SparsePolynomial operator*(const BigInt& c, SparsePolynomial a) {
        if (c == 0) return SparsePolynomial(a.nvars_);
        for (auto& [_, v] : a.terms_) v *= c;
        return a;
    }

    bool operator==(const SparsePolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /// Lexicographically greatest exponent vector.
    std::vector<int> leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
        return terms_.rbegin()->first;
    }

    /// Swap variables i and j (0-based).
    SparsePolynomial swap_vars(int i, int j) const {
        SparsePolynomial out(nvars_);
        for (auto& [m, c] : terms_) {
            std::vector<int> mm = m;
            std::swap(mm[i], mm[j]);
            out.add_term(mm, c);
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += it->second.str();
            bool any = false;
            for (int i = 0; i < nvars_; ++i) {
                if (it->first[i] == 0) continue;
                s += any ? " " : " * ";
                s += "x" + std::to_string(i + 1);
                if (it->first[i] != 1) s += "^" + std::to_string(it->first[i]);
                any = true;
            }
        }
        return s;
    }

  private:
    int nvars_;
    std::map<std::vector<int>, BigInt> terms_;
};

inline SparsePolynomial monomial(int nvars, const std::vector<int>& mono, BigInt c = 1) {
    SparsePolynomial p(nvars);
    p.add_term(mono, c);
    return p;
}

// ---------------------------------------------------------------------------
// Schur-type generating functions

/// Schur polynomial s_lambda(x_1..x_n): sum over semistandard Young tableaux.
inline SparsePolynomial schur_s(const std::vector<int>& lambda, int n) {
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("schur_s: not a partition");
    SparsePolynomial out(n);
    std::vector<std::vector<int>> rows(lambda.size());
    auto rec = [&](auto&& self, size_t r, size_t c) -> void {
        if (r == lambda.size()) {
            std::vector<int> mono(n, 0);
            for (auto& row : rows)
                for (int v : row) ++mono[v - 1];
            out.add_term(mono, 1);
            return;
        }
        if (static_cast<int>(c) == lambda[r]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1, hi = n;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0 && static_cast<int>(c) < lambda[r - 1]) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= hi; ++v) {
            rows[r].push_back(v);
            self(self, r, c + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline SparsePolynomial tableau_generating_function(const StrictPartition& mu, int n,
                                                    bool allow_diag_primes) {
    SparsePolynomial out(n);
    for (const ShiftedTableau& t : enumerate_shifted_tableaux(mu, n, allow_diag_primes))
        out.add_term(tableau_weight(t, n), 1);
    return out;
}

namespace detail {
inline SparsePolynomial cached_tableau_gf(const StrictPartition& mu, int n, bool primes) {
    static std::map<std::tuple<std::string, int, bool>, SparsePolynomial> cache;
    static std::mutex cache_mutex;
    auto key = std::make_tuple(to_string(mu), n, primes);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SparsePolynomial p = tableau_generating_function(mu, n, primes);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(p)).first->second;
}
}  // namespace detail

inline SparsePolynomial schur_p(const StrictPartition& mu, int n) {
    return detail::cached_tableau_gf(mu, n, false);
}

inline SparsePolynomial schur_q(const StrictPartition& mu, int n) {
    return detail::cached_tableau_gf(mu, n, true);
}

/// q_lambda = Q_(lambda_1) Q_(lambda_2) ... Q_(lambda_l).
inline SparsePolynomial q_one_row_product(const StrictPartition& lambda, int n) {
    SparsePolynomial out = monomial(n, std::vector<int>(n, 0));
    for (int i = 1; i <= lambda.length(); ++i)
        out = out * schur_q(StrictPartition({lambda.part(i)}), n);
    return out;
}

// ---------------------------------------------------------------------------
// Ring membership

enum class Ring { Sym, SymP, SymQ };

inline bool is_symmetric(const SparsePolynomial& f) {
    for (int i = 0; i + 1 < f.nvars(); ++i)
        if (!(f.swap_vars(i, i + 1) == f)) return false;
    return true;
}

/// Membership in Sym, Sym_P (f(x1,-x1,x3,..) free of x1) or
/// Sym_Q (additionally f - f(0,x2,..) divisible by 2 x1).
inline bool sym_membership(const SparsePolynomial& f, Ring ring) {
    if (!is_symmetric(f)) return false;
    if (ring == Ring::Sym) return true;
    int n = f.nvars();
    if (n >= 2) {
        // substitute x2 := -x1 and demand no monomial with positive x1-degree
        std::map<std::vector<int>, BigInt> buckets;
        for (auto& [m, c] : f.terms()) {
            std::vector<int> key = m;
            key[0] = m[0] + m[1];
            key[1] = 0;
            BigInt v = (m[1] % 2 == 0) ? c : -c;
            buckets[key] += v;
        }
        for (auto& [m, c] : buckets)
            if (m[0] > 0 && c != 0) return false;
    }
    if (ring == Ring::SymP) return true;
    for (auto& [m, c] : f.terms())
        if (m[0] > 0 && c % 2 != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Schur-Q expansion by leading-term peeling

/// Expands f in the Schur-Q basis by repeatedly subtracting at the
/// lexicographically greatest exponent; throws when f is not in the span.
inline std::map<StrictPartition, BigInt> expand_in_schur_q(SparsePolynomial f) {
    std::map<StrictPartition, BigInt> out;
    int n = f.nvars();
    size_t guard = 0;
    while (!f.is_zero()) {
        if (++guard > 100000) throw std::runtime_error("expand_in_schur_q: no progress");
        std::vector<int> lead = f.leading_monomial();
        std::vector<int> parts = lead;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i] >= parts[i - 1])
                throw std::runtime_error("not Schur-Q-decomposable: leading exponent " +
                                         to_string(lead) + " is not a strict partition");
        for (int p : parts)
            if (p <= 0)
                throw std::runtime_error("not Schur-Q-decomposable: leading exponent " +
                                         to_string(lead) + " is not a strict partition");
        StrictPartition lambda(parts);
        BigInt c = f.coeff(lead);
        BigInt denom = BigInt(1) << lambda.length();
        if (c % denom != 0)
            throw std::runtime_error("not Schur-Q-decomposable: coefficient " + c.str() +
                                     " not divisible by 2^" + std::to_string(lambda.length()));
        BigInt q = c / denom;
        f -= q * schur_q(lambda, n);
        out[lambda] += q;
        if (out[lambda] == 0) out.erase(lambda);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Characters

inline SparsePolynomial character(const CrystalGraph& g) {
    SparsePolynomial out(g.model->n);
    for (const WeightVector& w : g.wts) out.add_term(w, 1);
    return out;
}

/// Involution Stanley symmetric polynomial: the character of Incr+_n(z).
inline SparsePolynomial inv_stanley(const Permutation& z, int n) {
    SparsePolynomial out(n);
    for (const Factorization& a : enumerate_factorizations(z, n))
        out.add_term(factorization_weight(a), 1);
    return out;
}

/// Schur-Q expansion of inv_stanley(z, n) by counting q+_n-highest weight
/// elements of Incr+_n(z) by weight.
inline std::map<StrictPartition, BigInt> schur_q_expansion_by_crystal(const Permutation& z, int n) {
    CrystalModel model = factorization_crystal(z, n);
    std::map<StrictPartition, BigInt> out;
    for (const Factorization& a : enumerate_factorizations(z, n)) {
        Element el(a);
        if (!model.is_highest(el, Category::qplus)) continue;
        WeightVector w = factorization_weight(a);
        std::vector<int> parts = w;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out[StrictPartition(parts)] += 1;  // throws if the weight is not strict
    }
    return out;
}

inline std::string to_string(const std::map<StrictPartition, BigInt>& expansion) {
    std::string s;
    for (auto& [lambda, c] : expansion) {
        if (!s.empty()) s += "; ";
        s += "(" + to_string(lambda) + "): " + c.str();
    }
    return s.empty() ? "0" : s;
}

}  // namespace qcryst

#endif
