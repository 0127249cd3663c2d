#ifndef QCRYST_TABLEAU_HPP
#define QCRYST_TABLEAU_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcryst/alphabet.hpp"

namespace qcryst {

using Pos = std::pair<int, int>;  // (row, col), 1-based, French convention

/// Shifted tableau: a map from shifted-diagram positions to letters.  Row r
/// occupies a contiguous interval of columns starting at r + mu_r, so both
/// straight and skew shapes are covered.
class ShiftedTableau {
  public:
    ShiftedTableau() = default;

    bool has(int r, int c) const { return cells_.count({r, c}) != 0; }
    bool has(Pos p) const { return cells_.count(p) != 0; }
    Letter at(int r, int c) const { return cells_.at({r, c}); }
    Letter at(Pos p) const { return cells_.at(p); }
    std::optional<Letter> get(int r, int c) const {
        auto it = cells_.find({r, c});
        if (it == cells_.end()) return std::nullopt;
        return it->second;
    }

    void put(int r, int c, Letter l) { cells_[{r, c}] = l; }
    void put(Pos p, Letter l) { cells_[p] = l; }
    void erase(Pos p) { cells_.erase(p); }

    bool empty() const { return cells_.empty(); }
    int box_count() const { return static_cast<int>(cells_.size()); }

    const std::map<Pos, Letter>& cells() const { return cells_; }

    int row_count() const {
        int m = 0;
        for (auto& [p, _] : cells_) m = std::max(m, p.first);
        return m;
    }
    int col_count() const {
        int m = 0;
        for (auto& [p, _] : cells_) m = std::max(m, p.second);
        return m;
    }

    /// Start column and length of row r; (r, 0) when the row is empty.
    std::pair<int, int> row_span(int r) const {
        int lo = 0, n = 0;
        for (auto& [p, _] : cells_) {
            if (p.first != r) continue;
            if (n == 0 || p.second < lo) lo = (n == 0) ? p.second : std::min(lo, p.second);
            ++n;
        }
        return n == 0 ? std::make_pair(r, 0) : std::make_pair(lo, n);
    }

    auto operator<=>(const ShiftedTableau&) const = default;

  private:
    std::map<Pos, Letter> cells_;
};

/// Checks that the domain is SD_{lambda/mu} for strict partitions mu <= lambda.
/// Empty rows are treated as wildcards (lambda_r = mu_r unknown).
inline bool has_valid_shifted_shape(const ShiftedTableau& t) {
    int rows = t.row_count();
    for (int r = 1; r <= rows; ++r) {
        auto [lo, n] = t.row_span(r);
        if (n == 0) continue;
        if (lo < r) return false;
        for (int c = lo; c < lo + n; ++c)
            if (!t.has(r, c)) return false;  // contiguous
    }
    for (int r = 1; r < rows; ++r) {
        auto [lo0, n0] = t.row_span(r);
        auto [lo1, n1] = t.row_span(r + 1);
        if (n0 == 0 || n1 == 0) continue;
        if (lo1 + n1 - 1 > lo0 + n0 - 1) return false;       // outer strictness
        if (lo1 > r + 1 && lo1 > lo0) return false;          // inner strictness
    }
    return true;
}

inline StrictPartition outer_shape(const ShiftedTableau& t) {
    std::vector<int> parts;
    for (int r = 1; r <= t.row_count(); ++r) {
        auto [lo, n] = t.row_span(r);
        parts.push_back(n == 0 ? 0 : lo - r + n);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return StrictPartition(std::move(parts));
}

inline StrictPartition inner_shape(const ShiftedTableau& t) {
    std::vector<int> parts;
    for (int r = 1; r <= t.row_count(); ++r) {
        auto [lo, n] = t.row_span(r);
        parts.push_back(n == 0 ? 0 : lo - r);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return StrictPartition(std::move(parts));
}

inline bool is_straight_shape(const ShiftedTableau& t) {
    return has_valid_shifted_shape(t) && inner_shape(t).empty();
}

/// Rows and columns weakly increase; no primed letter repeats in a row; no
/// unprimed letter repeats in a column; entries positive.
inline bool is_semistandard(const ShiftedTableau& t) {
    if (!has_valid_shifted_shape(t)) return false;
    for (auto& [p, l] : t.cells()) {
        if (l.value() <= 0) return false;
        auto right = t.get(p.first, p.second + 1);
        if (right) {
            if (*right < l) return false;
            if (*right == l && l.primed()) return false;
        }
        auto up = t.get(p.first + 1, p.second);
        if (up) {
            if (*up < l) return false;
            if (*up == l && !l.primed()) return false;
        }
    }
    return true;
}

inline bool has_diagonal_primes(const ShiftedTableau& t) {
    for (auto& [p, l] : t.cells())
        if (p.first == p.second && l.primed()) return true;
    return false;
}

/// Rows and columns strictly increase (insertion tableaux).
inline bool is_increasing(const ShiftedTableau& t) {
    if (!has_valid_shifted_shape(t)) return false;
    for (auto& [p, l] : t.cells()) {
        auto right = t.get(p.first, p.second + 1);
        if (right && !(l < *right)) return false;
        auto up = t.get(p.first + 1, p.second);
        if (up && !(l < *up)) return false;
    }
    return true;
}

inline WeightVector tableau_weight(const ShiftedTableau& t, int n) {
    WeightVector w(n, 0);
    for (auto& [_, l] : t.cells()) {
        int v = l.value();
        if (v >= 1 && v <= n) ++w[v - 1];
        else throw std::out_of_range("tableau entry out of range");
    }
    return w;
}

/// Order in which boxes contribute to the shifted reading word: for
/// k = maxindex..1, first the primed entries of column k bottom-to-top, then
/// the unprimed entries of row k left-to-right.
inline std::vector<Pos> reading_positions(const ShiftedTableau& t) {
    std::vector<Pos> out;
    int k = std::max(t.row_count(), t.col_count());
    for (int i = k; i >= 1; --i) {
        for (int r = 1; r <= i; ++r)
            if (t.has(r, i) && t.at(r, i).primed()) out.push_back({r, i});
        for (int c = i; c <= t.col_count(); ++c)
            if (t.has(i, c) && !t.at(i, c).primed()) out.push_back({i, c});
    }
    return out;
}

inline std::vector<int> shifted_reading_word(const ShiftedTableau& t) {
    std::vector<int> w;
    for (Pos p : reading_positions(t)) w.push_back(t.at(p).value());
    return w;
}

/// Restriction T|_{[lo,hi]} to entries with value in [lo, hi].
inline ShiftedTableau restrict_values(const ShiftedTableau& t, int lo, int hi) {
    ShiftedTableau out;
    for (auto& [p, l] : t.cells())
        if (l.value() >= lo && l.value() <= hi) out.put(p, l);
    return out;
}

inline ShiftedTableau unprime(const ShiftedTableau& t) {
    ShiftedTableau out;
    for (auto& [p, l] : t.cells()) out.put(p, l.without_prime());
    return out;
}

inline ShiftedTableau unprime_diagonal(const ShiftedTableau& t) {
    ShiftedTableau out = t;
    for (auto& [p, l] : t.cells())
        if (p.first == p.second) out.put(p, l.without_prime());
    return out;
}

inline ShiftedTableau double_entries(const ShiftedTableau& t) {
    ShiftedTableau out;
    for (auto& [p, l] : t.cells()) out.put(p, make_letter(2 * l.value(), l.primed()));
    return out;
}

inline ShiftedTableau halve_entries(const ShiftedTableau& t) {
    ShiftedTableau out;
    for (auto& [p, l] : t.cells()) {
        if (l.value() % 2 != 0) throw std::invalid_argument("halve_entries: odd entry");
        out.put(p, make_letter(l.value() / 2, l.primed()));
    }
    return out;
}

/// Serialization: rows bottom to top joined by " / ", inner-shape cells as ".".
inline std::string to_string(const ShiftedTableau& t) {
    if (t.empty()) return "-";
    std::string s;
    for (int r = 1; r <= t.row_count(); ++r) {
        if (r > 1) s += " / ";
        auto [lo, n] = t.row_span(r);
        if (n == 0) {
            s += ".";
            continue;
        }
        bool first = true;
        for (int c = r; c < lo; ++c) {
            if (!first) s += ' ';
            s += '.';
            first = false;
        }
        for (int c = lo; c < lo + n; ++c) {
            if (!first) s += ' ';
            s += to_string(t.at(r, c));
            first = false;
        }
    }
    return s;
}

/// Parses the row serialization above (straight or skew with "." cells).
inline ShiftedTableau parse_tableau(const std::string& text) {
    ShiftedTableau t;
    if (text == "-" || text.empty()) return t;
    std::vector<std::string> rows;
    std::string body = text;
    while (true) {
        size_t cut = body.find('/');
        rows.push_back(body.substr(0, cut));
        if (cut == std::string::npos) break;
        body = body.substr(cut + 1);
    }
    for (size_t ri = 0; ri < rows.size(); ++ri) {
        int r = static_cast<int>(ri) + 1;
        std::istringstream in(rows[ri]);
        std::string tok;
        int c = r;
        while (in >> tok) {
            if (tok != ".") {
                bool primed = tok.back() == '\'';
                if (primed) tok.pop_back();
                t.put(r, c, make_letter(std::stoi(tok), primed));
            }
            ++c;
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Ribbons

/// Connected component (under edge-adjacency) of the boxes with entry value v
/// that contains `seed`, ordered from northwest to southeast.
inline std::vector<Pos> ribbon_through(const ShiftedTableau& t, int v, Pos seed) {
    std::set<Pos> cls;
    for (auto& [p, l] : t.cells())
        if (l.value() == v) cls.insert(p);
    if (!cls.count(seed)) throw std::logic_error("ribbon_through: seed not in value class");
    std::set<Pos> comp{seed};
    std::vector<Pos> stack{seed};
    while (!stack.empty()) {
        Pos p = stack.back();
        stack.pop_back();
        for (Pos q : {Pos{p.first + 1, p.second}, Pos{p.first - 1, p.second},
                      Pos{p.first, p.second + 1}, Pos{p.first, p.second - 1}})
            if (cls.count(q) && comp.insert(q).second) stack.push_back(q);
    }
    std::vector<Pos> out(comp.begin(), comp.end());
    // northwest to southeast: higher rows first, then left to right
    std::sort(out.begin(), out.end(), [](Pos a, Pos b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Pairing and the raising/lowering operators f_i, e_i for i >= 1

/// Boxes of T|_{[i,i+1]} in reading order with matched ()-pairs removed;
/// i-boxes read as ")" and (i+1)-boxes as "(".
inline std::vector<Pos> unpaired_positions(const ShiftedTableau& t, int i) {
    ShiftedTableau sub = restrict_values(t, i, i + 1);
    std::vector<Pos> order = reading_positions(sub);
    std::vector<bool> paired(order.size(), false);
    std::vector<size_t> stack;
    for (size_t k = 0; k < order.size(); ++k) {
        int v = sub.at(order[k]).value();
        if (v == i + 1) {
            stack.push_back(k);
        } else if (!stack.empty()) {
            paired[stack.back()] = true;
            paired[k] = true;
            stack.pop_back();
        }
    }
    std::vector<Pos> out;
    for (size_t k = 0; k < order.size(); ++k)
        if (!paired[k]) out.push_back(order[k]);
    return out;
}

namespace detail {

inline bool entry_is(const ShiftedTableau& t, int r, int c, Letter l) {
    auto e = t.get(r, c);
    return e && *e == l;
}

inline bool entry_in(const ShiftedTableau& t, int r, int c, Letter a, Letter b) {
    auto e = t.get(r, c);
    return e && (*e == a || *e == b);
}

inline void interchange_primes(ShiftedTableau& t, Pos p, Pos q) {
    Letter a = t.at(p), b = t.at(q);
    if (a.primed() != b.primed()) {
        t.put(p, a.toggled());
        t.put(q, b.toggled());
    }
}

inline void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("tableau operator invariant: ") + what);
}

}  // namespace detail

/// Lowering operator f_i for i >= 1 on skew shifted tableaux.
inline std::optional<ShiftedTableau> tableau_f(const ShiftedTableau& t, int i) {
    using namespace detail;
    const Letter lo(i), lop(i, true), hi(i + 1), hip(i + 1, true);
    std::vector<Pos> unpaired = unpaired_positions(t, i);
    Pos xy{0, 0};
    bool found = false;
    for (Pos p : unpaired)
        if (t.at(p).value() == i) {
            xy = p;
            found = true;  // keep last
        }
    if (!found) return std::nullopt;
    auto [x, y] = xy;
    ShiftedTableau out = t;
    if (t.at(xy) == lo) {
        // L1
        if (entry_is(t, x, y + 1, hip)) {  // L1(a)
            require(x != y, "L1(a) forces x != y");
            out.put(xy, hip);
            out.put({x, y + 1}, hi);
        } else if (!entry_in(t, x + 1, y, hip, hi)) {  // L1(b)
            out.put(xy, hi);
        } else {
            std::vector<Pos> rib = ribbon_through(t, i + 1, {x + 1, y});
            Pos nw = rib.front();
            if (nw.first != nw.second) {  // L1(c)
                require(t.at(nw) == hip, "L1(c) northwest entry is primed");
                out.put(xy, hip);
                out.put(nw, hi);
            } else {  // L1(d)
                require(entry_in(t, nw.first - 1, nw.first - 1, lop, lo),
                        "L1(d) lower diagonal holds i");
                out.put(xy, hip);
                interchange_primes(out, nw, {nw.first - 1, nw.first - 1});
            }
        }
    } else {
        // L2, T_xy = i'
        if (entry_is(t, x + 1, y, lo)) {  // L2(a)
            require(x + 1 != y, "L2(a) forces x+1 != y");
            out.put(xy, lo);
            out.put({x + 1, y}, hip);
        } else if (!entry_in(t, x, y + 1, lo, hip)) {  // L2(b)
            out.put(xy, hip);
        } else {  // L2(c)
            require(x != y, "L2(c) forces x != y");
            std::vector<Pos> rib = ribbon_through(t, i, xy);
            Pos target{0, 0};
            bool have = false, past = false;
            for (Pos p : rib) {
                if (p == xy) {
                    past = true;
                    continue;
                }
                if (!past) continue;
                if (t.at(p) == lo && !entry_in(t, p.first, p.second + 1, lo, hip)) {
                    target = p;
                    have = true;
                    break;
                }
            }
            require(have, "L2(c) target exists");
            out.put(xy, lo);
            out.put(target, hip);
        }
    }
    require(is_semistandard(out), "f_i output semistandard");
    return out;
}

/// Raising operator e_i for i >= 1 on skew shifted tableaux.
inline std::optional<ShiftedTableau> tableau_e(const ShiftedTableau& t, int i) {
    using namespace detail;
    const Letter lo(i), lop(i, true), hi(i + 1), hip(i + 1, true);
    std::vector<Pos> unpaired = unpaired_positions(t, i);
    Pos xy{0, 0};
    bool found = false;
    for (Pos p : unpaired)
        if (t.at(p).value() == i + 1 && !found) {
            xy = p;
            found = true;  // keep first
        }
    if (!found) return std::nullopt;
    auto [x, y] = xy;
    ShiftedTableau out = t;
    if (t.at(xy) == hi) {
        // R1
        if (entry_is(t, x, y - 1, hip)) {  // R1(a)
            require(x != y - 1, "R1(a) forces x != y-1");
            out.put(xy, hip);
            out.put({x, y - 1}, lo);
        } else if (!entry_in(t, x - 1, y, lo, hip)) {  // R1(b)
            out.put(xy, lo);
        } else {  // R1(c)
            require(x != y, "R1(c) forces x != y");
            std::vector<Pos> rib = ribbon_through(t, i + 1, xy);
            Pos target{0, 0};
            bool have = false, past = false;
            for (Pos p : rib) {
                if (p == xy) {
                    past = true;
                    continue;
                }
                if (!past) continue;
                if (t.at(p) == hip && !entry_in(t, p.first - 1, p.second, lo, hip)) {
                    target = p;
                    have = true;
                    break;
                }
            }
            require(have, "R1(c) target exists");
            out.put(xy, hip);
            out.put(target, lo);
        }
    } else {
        // R2, T_xy = i+1'
        if (entry_is(t, x - 1, y, lo)) {  // R2(a)
            require(x != y, "R2(a) forces x != y");
            out.put(xy, lo);
            out.put({x - 1, y}, lop);
        } else if (!entry_in(t, x, y - 1, lop, lo)) {  // R2(b)
            out.put(xy, lop);
        } else {
            std::vector<Pos> rib = ribbon_through(t, i, {x, y - 1});
            Pos nw = rib.front();
            if (nw.first != nw.second) {  // R2(c)
                require(t.at(nw) == lo, "R2(c) northwest entry unprimed");
                out.put(xy, lo);
                out.put(nw, lop);
            } else {  // R2(d)
                require(entry_in(t, nw.first + 1, nw.first + 1, hip, hi),
                        "R2(d) upper diagonal holds i+1");
                out.put(xy, lo);
                interchange_primes(out, nw, {nw.first + 1, nw.first + 1});
            }
        }
    }
    require(is_semistandard(out), "e_i output semistandard");
    return out;
}

// ---------------------------------------------------------------------------
// Queer and zero operators (straight shapes)

inline std::optional<ShiftedTableau> tableau_fbar(const ShiftedTableau& t) {
    const Letter one(1), onep(1, true), two(2), twop(2, true);
    Pos last{0, 0};
    bool found = false;
    for (auto& [p, l] : t.cells()) {
        if (p.first != 1) continue;
        if (l == twop) return std::nullopt;
        if (l == one || l == onep) {
            if (!found || p.second > last.second) last = p;
            found = true;
        }
    }
    if (!found) return std::nullopt;
    ShiftedTableau out = t;
    Letter l = t.at(last);
    if (l == one && last.first == last.second)
        out.put(last, two);
    else
        out.put(last, twop);
    if (!is_semistandard(out)) throw std::logic_error("fbar output not semistandard");
    return out;
}

inline std::optional<ShiftedTableau> tableau_ebar(const ShiftedTableau& t) {
    const Letter one(1), two(2), twop(2, true);
    auto t11 = t.get(1, 1);
    ShiftedTableau out = t;
    if (t11 && (*t11 == two || *t11 == twop)) {
        out.put({1, 1}, make_letter(1, t11->primed()));
        if (!is_semistandard(out)) throw std::logic_error("ebar output not semistandard");
        return out;
    }
    for (auto& [p, l] : t.cells()) {
        if (p.first == 1 && l == twop) {
            out.put(p, one);
            if (!is_semistandard(out)) throw std::logic_error("ebar output not semistandard");
            return out;
        }
    }
    return std::nullopt;
}

inline std::optional<ShiftedTableau> tableau_f0(const ShiftedTableau& t) {
    auto t11 = t.get(1, 1);
    if (!t11 || *t11 != Letter(1)) return std::nullopt;
    ShiftedTableau out = t;
    out.put({1, 1}, make_letter(1, true));
    return out;
}

inline std::optional<ShiftedTableau> tableau_e0(const ShiftedTableau& t) {
    auto t11 = t.get(1, 1);
    if (!t11 || *t11 != Letter(1, true)) return std::nullopt;
    ShiftedTableau out = t;
    out.put({1, 1}, make_letter(1));
    return out;
}

// ---------------------------------------------------------------------------
// Extremal tableaux

inline ShiftedTableau highest_tableau(const StrictPartition& lambda) {
    ShiftedTableau t;
    for (auto [r, c] : shifted_diagram(lambda)) t.put(r, c, make_letter(r));
    return t;
}

/// Unique tableau without diagonal primes whose i-th ribbon (from the outer
/// rim inward) is filled with n - i.
inline ShiftedTableau lowest_tableau(const StrictPartition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("lowest_tableau: l(lambda) > n");
    auto ribbon_index = [&](int r, int c) {
        int i = 0;
        while (c - r + 1 <= lambda.part(r + i + 1)) ++i;
        return i;
    };
    ShiftedTableau t;
    for (auto [r, c] : shifted_diagram(lambda)) {
        int i = ribbon_index(r, c);
        int v = n - i;
        bool primed = false;
        if (c - (r + 1) + 1 >= 1 && c - (r + 1) + 1 <= lambda.part(r + 1))  // (r+1,c) in diagram
            primed = (ribbon_index(r + 1, c) == i);
        t.put(r, c, make_letter(v, primed));
    }
    return t;
}

inline ShiftedTableau lowest_tableau_hat(const StrictPartition& lambda, int n) {
    ShiftedTableau t = lowest_tableau(lambda, n);
    for (auto& [p, l] : t.cells())
        if (p.first == p.second) t.put(p, l.with_prime());
    return t;
}

// ---------------------------------------------------------------------------
// Standardization, dual equivalence, descents

inline ShiftedTableau standardize(const ShiftedTableau& t) {
    std::vector<Pos> order = reading_positions(t);
    std::map<Pos, int> rank;
    for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);
    std::vector<Pos> boxes;
    for (auto& [p, _] : t.cells()) boxes.push_back(p);
    std::sort(boxes.begin(), boxes.end(), [&](Pos a, Pos b) {
        if (t.at(a) != t.at(b)) return t.at(a) < t.at(b);
        return rank[a] < rank[b];
    });
    ShiftedTableau out;
    for (size_t k = 0; k < boxes.size(); ++k)
        out.put(boxes[k], make_letter(static_cast<int>(k) + 1, t.at(boxes[k]).primed()));
    return out;
}

/// Entries are 1..m, each value appearing exactly once (primed or not).
inline bool is_standard(const ShiftedTableau& t) {
    if (!is_semistandard(t)) return false;
    std::set<int> vals;
    for (auto& [_, l] : t.cells())
        if (!vals.insert(l.value()).second) return false;
    return vals.empty() || (*vals.begin() == 1 && *vals.rbegin() == t.box_count());
}

inline Pos box_of_value(const ShiftedTableau& t, int v) {
    for (auto& [p, l] : t.cells())
        if (l.value() == v) return p;
    throw std::out_of_range("box_of_value");
}

/// Dual-equivalence building block on standard shifted tableaux.
inline ShiftedTableau s_operator(const ShiftedTableau& t, int i) {
    int m = t.box_count();
    if (i < 1 || i + 1 > m) return t;
    Pos pi = box_of_value(t, i), pj = box_of_value(t, i + 1);
    ShiftedTableau out = t;
    if (pi.first == pj.first || pi.second == pj.second) {
        for (Pos p : {pi, pj})
            if (p.first != p.second) out.put(p, out.at(p).toggled());
        auto correct = [&](int a, int b) {
            if (a < 1 || b > m) return;
            Pos pa = box_of_value(t, a), pb = box_of_value(t, b);
            if (pa.first == pa.second && pb.first == pb.second)
                detail::interchange_primes(out, pa, pb);
        };
        correct(i - 1, i + 1);
        correct(i, i + 2);
    } else {
        out.put(pi, make_letter(i + 1, t.at(pi).primed()));
        out.put(pj, make_letter(i, t.at(pj).primed()));
    }
    return out;
}

/// Dual equivalence operator d_i for i in {-1, 0} union [m-2].
inline ShiftedTableau dual_equivalence(const ShiftedTableau& t, int i) {
    int m = t.box_count();
    if (i < -1 || i + 2 > m || i + 2 < 1) return t;
    if (i == -1 || i == 0) {
        Pos p = box_of_value(t, i + 2);
        ShiftedTableau out = t;
        out.put(p, out.at(p).toggled());
        return out;
    }
    std::vector<int> word = shifted_reading_word(t);
    auto pos_of = [&](int v) {
        for (size_t k = 0; k < word.size(); ++k)
            if (word[k] == v) return static_cast<int>(k);
        throw std::out_of_range("dual_equivalence");
    };
    int a = pos_of(i), b = pos_of(i + 1), c = pos_of(i + 2);
    auto between = [](int x, int u, int v) { return (u < x && x < v) || (v < x && x < u); };
    if (between(c, a, b)) return s_operator(t, i);
    if (between(a, b, c)) return s_operator(t, i + 1);
    return t;
}

/// Des(T) = { i : i+1 appears before i in the shifted reading word }.
inline std::set<int> tableau_descents(const ShiftedTableau& t) {
    std::vector<int> word = shifted_reading_word(t);
    std::map<int, int> pos;
    for (size_t k = 0; k < word.size(); ++k) pos[word[k]] = static_cast<int>(k);
    std::set<int> out;
    for (int i = 1; i + 1 <= t.box_count(); ++i)
        if (pos.at(i + 1) < pos.at(i)) out.insert(i);
    return out;
}

/// Alternative characterization of descents, used as a cross check:
/// (a) i, i+1 unprimed with i+1 in a strictly later row, or (b) i', i+1'
/// primed with i+1' in a strictly later column, or (c) i unprimed and i+1'.
inline std::set<int> tableau_descents_alt(const ShiftedTableau& t) {
    std::set<int> out;
    for (int i = 1; i + 1 <= t.box_count(); ++i) {
        Pos pi = box_of_value(t, i), pj = box_of_value(t, i + 1);
        bool iprimed = t.at(pi).primed(), jprimed = t.at(pj).primed();
        if (!iprimed && !jprimed && pj.first > pi.first) out.insert(i);
        else if (iprimed && jprimed && pj.second > pi.second) out.insert(i);
        else if (!iprimed && jprimed) out.insert(i);
    }
    return out;
}

/// Row reading word: rows left to right, top row first.
inline Word row_reading_word(const ShiftedTableau& t) {
    Word w;
    for (int r = t.row_count(); r >= 1; --r) {
        auto [lo, n] = t.row_span(r);
        for (int c = lo; c < lo + n; ++c) w.push_back(t.at(r, c));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Enumeration

/// All semistandard (skew) shifted tableaux of shape lambda/mu with entries
/// at most n, optionally restricted to unprimed diagonals.
inline std::vector<ShiftedTableau> enumerate_shifted_tableaux(const StrictPartition& lambda,
                                                              const StrictPartition& mu, int n,
                                                              bool allow_diag_primes) {
    std::vector<Pos> cells;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = r + mu.part(r); c <= r + lambda.part(r) - 1; ++c) cells.push_back({r, c});
    std::sort(cells.begin(), cells.end(), [](Pos a, Pos b) {
        int sa = a.first + a.second, sb = b.first + b.second;
        if (sa != sb) return sa < sb;
        return a.first < b.first;
    });
    std::vector<ShiftedTableau> out;
    ShiftedTableau cur;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cells.size()) {
            out.push_back(cur);
            return;
        }
        auto [r, c] = cells[k];
        for (int code = 1; code <= 2 * n; ++code) {
            Letter l = Letter::from_code(code);
            if (r == c && l.primed() && !allow_diag_primes) continue;
            auto left = cur.get(r, c - 1);
            if (left && (*left > l || (*left == l && l.primed()))) continue;
            auto below = cur.get(r - 1, c);
            if (below && (*below > l || (*below == l && !l.primed()))) continue;
            cur.put(r, c, l);
            self(self, k + 1);
            cur.erase({r, c});
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ShiftedTableau> enumerate_shifted_tableaux(const StrictPartition& lambda, int n,
                                                              bool allow_diag_primes) {
    return enumerate_shifted_tableaux(lambda, StrictPartition(), n, allow_diag_primes);
}

/// All standard shifted tableaux with m boxes of shape lambda; diagonal primes
/// excluded when allow_diag_primes is false.
inline std::vector<ShiftedTableau> enumerate_standard_shifted_tableaux(const StrictPartition& lambda,
                                                                       bool allow_diag_primes) {
    std::vector<ShiftedTableau> out;
    int m = lambda.size();
    ShiftedTableau cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > m) {
            out.push_back(cur);
            return;
        }
        for (int r = 1; r <= lambda.length(); ++r) {
            auto [lo, len] = cur.row_span(r);
            int c = (len == 0) ? r : lo + len;
            if (c > r + lambda.part(r) - 1) continue;
            if (r > 1 && c > r && !cur.has(r - 1, c)) continue;  // would break column support
            for (bool primed : {false, true}) {
                if (primed && r == c && !allow_diag_primes) continue;
                cur.put(r, c, make_letter(v, primed));
                if (has_valid_shifted_shape(cur)) self(self, v + 1);
                cur.erase({r, c});
            }
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qcryst

#endif
