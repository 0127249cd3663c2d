#ifndef QCRYST_VERIFY_HPP
#define QCRYST_VERIFY_HPP

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcryst/characters.hpp"
#include "qcryst/crystal.hpp"
#include "qcryst/factorizations.hpp"
#include "qcryst/insertion.hpp"
#include "qcryst/tableau_crystal.hpp"
#include "qcryst/words.hpp"

namespace qcryst::verify {

struct Check {
    std::string id;
    bool pass = true;
    std::string detail;
};

using Report = std::vector<Check>;

inline bool all_pass(const Report& r) {
    for (auto& c : r)
        if (!c.pass) return false;
    return true;
}

inline void print(const Report& r, std::ostream& out) {
    for (auto& c : r) {
        out << (c.pass ? "PASS " : "FAIL ") << c.id;
        if (!c.detail.empty()) out << " " << c.detail;
        out << "\n";
    }
}

namespace detail {

class Collector {
  public:
    explicit Collector(Report& r, std::string prefix) : report_(r), prefix_(std::move(prefix)) {}

    /// One aggregated line per id; the detail keeps the first counterexample.
    void require(const std::string& id, bool ok, const std::function<std::string()>& witness) {
        auto& entry = slot(id);
        if (!ok && entry.pass) {
            entry.pass = false;
            entry.detail = "counterexample: " + witness();
        }
    }

    void require(const std::string& id, bool ok, const std::string& witness) {
        require(id, ok, [&] { return witness; });
    }

    void note(const std::string& id) { slot(id); }

  private:
    Check& slot(const std::string& id) {
        std::string full = prefix_.empty() ? id : prefix_ + ":" + id;
        for (auto& c : report_)
            if (c.id == full) return c;
        report_.push_back({full, true, ""});
        return report_.back();
    }

    Report& report_;
    std::string prefix_;
};

inline bool opt_eq(const std::optional<Element>& a, const std::optional<Element>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
}

}  // namespace detail

/// The full axiom battery (S1-S2, P1-P3, Q1-Q3 plus the sigma relations, the
/// epsilon_0/phi_0 monotonicity corollary, and nu_0 consistency) on one
/// materialized graph.
inline void axiom_suite(const CrystalGraph& g, const std::string& tag, Report& report) {
    detail::Collector c(report, tag);
    const CrystalModel& m = *g.model;
    int n = m.n;
    auto compose = [&](int l1, bool up1, int l2, bool up2,
                       const Element& b) -> std::optional<Element> {
        auto mid = up1 ? m.e(l1, b) : m.f(l1, b);
        if (!mid) return std::nullopt;
        return up2 ? m.e(l2, *mid) : m.f(l2, *mid);
    };
    c.note("S1");
    c.note("S2");
    for (size_t vi = 0; vi < g.size(); ++vi) {
        const Element& b = g.verts[vi];
        const WeightVector& wb = g.wts[vi];
        std::string name = b.str();
        for (int i = 1; i < n; ++i) {
            if (auto ct = m.e(i, b)) {
                c.require("S1", detail::opt_eq(m.f(i, *ct), b), name);
                WeightVector d = m.wt(*ct);
                for (int k = 0; k < n; ++k) d[k] -= wb[k];
                WeightVector ex(n, 0);
                ex[i - 1] = 1;
                ex[i] = -1;
                c.require("S1", d == ex, name);
            }
            if (auto ct = m.f(i, b)) c.require("S1", detail::opt_eq(m.e(i, *ct), b), name);
            c.require("S2", m.phi(i, b) - m.epsilon(i, b) == wb[i - 1] - wb[i], name);
        }
        if (m.cat != Category::gl && n >= 2) {
            c.note("P1");
            c.note("P3");
            if (auto ct = m.e(kBar1, b)) {
                c.require("P1", detail::opt_eq(m.f(kBar1, *ct), b), name);
                WeightVector d = m.wt(*ct);
                for (int k = 0; k < n; ++k) d[k] -= wb[k];
                WeightVector ex(n, 0);
                ex[0] = 1;
                ex[1] = -1;
                c.require("P1", d == ex, name);
                for (int i = 3; i < n; ++i) {
                    c.require("P1", m.epsilon(i, *ct) == m.epsilon(i, b), name);
                    c.require("P1", m.phi(i, *ct) == m.phi(i, b), name);
                }
            }
            if (auto ct = m.f(kBar1, b)) c.require("P1", detail::opt_eq(m.e(kBar1, *ct), b), name);
            for (int i = 3; i < n; ++i) {
                c.note("P2");
                for (bool up1 : {false, true})
                    for (bool up2 : {false, true})
                        c.require("P2",
                                  detail::opt_eq(compose(i, up1, kBar1, up2, b),
                                                 compose(kBar1, up2, i, up1, b)),
                                  name);
            }
            int str = m.epsilon(kBar1, b) + m.phi(kBar1, b);
            c.require("P3", str == ((wb[0] == 0 && wb[1] == 0) ? 0 : 1), name);
        }
        if (m.cat == Category::qplus) {
            c.note("Q1");
            c.note("Q3");
            if (auto ct = m.e(0, b)) {
                c.require("Q1", detail::opt_eq(m.f(0, *ct), b), name);
                c.require("Q1", m.wt(*ct) == wb, name);
                for (int i = 1; i < n; ++i) {
                    c.require("Q1", m.epsilon(i, *ct) == m.epsilon(i, b), name);
                    c.require("Q1", m.phi(i, *ct) == m.phi(i, b), name);
                }
                if (n >= 2) {
                    c.require("Q1", m.epsilon(kBar1, *ct) == m.epsilon(kBar1, b), name);
                    c.require("Q1", m.phi(kBar1, *ct) == m.phi(kBar1, b), name);
                }
            }
            if (auto ct = m.f(0, b)) c.require("Q1", detail::opt_eq(m.e(0, *ct), b), name);
            for (int i = 2; i < n; ++i) {
                c.note("Q2");
                for (bool up1 : {false, true})
                    for (bool up2 : {false, true})
                        c.require("Q2",
                                  detail::opt_eq(compose(i, up1, 0, up2, b),
                                                 compose(0, up2, i, up1, b)),
                                  name);
            }
            c.require("Q3", m.epsilon(0, b) + m.phi(0, b) == (wb[0] == 0 ? 0 : 1), name);
            // epsilon_0/phi_0 monotone along e_bar1; commutation when wt_1 != 0
            if (n >= 2) {
                c.note("zero-string-monotone");
                if (auto ct = m.e(kBar1, b)) {
                    c.require("zero-string-monotone", m.epsilon(0, b) <= m.epsilon(0, *ct), name);
                    c.require("zero-string-monotone", m.phi(0, b) <= m.phi(0, *ct), name);
                }
                if (wb[0] != 0) {
                    c.require("zero-string-monotone",
                              detail::opt_eq(compose(0, true, kBar1, true, b),
                                             compose(kBar1, true, 0, true, b)),
                              name);
                    c.require("zero-string-monotone",
                              detail::opt_eq(compose(0, false, kBar1, true, b),
                                             compose(kBar1, true, 0, false, b)),
                              name);
                }
            }
        }
        // sigma relations
        c.note("sigma-involution");
        for (int i : m.cat == Category::qplus ? std::vector<int>{0, 1} : std::vector<int>{1})
            if (i == 0 || i < n)
                c.require("sigma-involution", m.sigma(i, m.sigma(i, b)) == b, name);
        for (int i = 2; i < n; ++i)
            c.require("sigma-involution", m.sigma(i, m.sigma(i, b)) == b, name);
        if (m.cat == Category::qplus)
            for (int j = 2; j < n; ++j)
                c.require("sigma-involution",
                          m.sigma(0, m.sigma(j, b)) == m.sigma(j, m.sigma(0, b)), name);
        c.require("sigma-involution", m.sigma_w0(m.sigma_w0(b)) == b, name);
    }
    if (m.cat == Category::qplus) {
        c.note("nu0-consistent");
        try {
            nu0_and_wt11(g);
        } catch (const std::exception& ex) {
            c.require("nu0-consistent", false, ex.what());
        }
    }
}

inline Report axiom_suite(const CrystalGraph& g, const std::string& tag) {
    Report r;
    axiom_suite(g, tag, r);
    return r;
}

/// Type BC braid relations for sigma_0..sigma_{n-1} on W+_n(m), pointwise.
inline Report braid_suite(int max_n, int max_m) {
    Report report;
    for (int n = 1; n <= max_n; ++n)
        for (int m = 0; m <= max_m; ++m) {
            detail::Collector c(report,
                                "braid:W+_" + std::to_string(n) + "(" + std::to_string(m) + ")");
            CrystalModel wm = word_crystal(n, m);
            c.note("order2");
            c.note("order4");
            c.note("order3");
            c.note("commute");
            for (const Element& el : all_words(n, m)) {
                std::string name = el.str();
                for (int i = 0; i < n; ++i)
                    c.require("order2", wm.sigma(i, wm.sigma(i, el)) == el, name);
                if (n >= 2) {
                    Element a = wm.sigma(0, wm.sigma(1, wm.sigma(0, wm.sigma(1, el))));
                    Element b = wm.sigma(1, wm.sigma(0, wm.sigma(1, wm.sigma(0, el))));
                    c.require("order4", a == b, name);
                }
                for (int i = 1; i + 1 < n; ++i)
                    c.require("order3",
                              wm.sigma(i, wm.sigma(i + 1, wm.sigma(i, el))) ==
                                  wm.sigma(i + 1, wm.sigma(i, wm.sigma(i + 1, el))),
                              name);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 2; j < n; ++j)
                        c.require("commute",
                                  wm.sigma(i, wm.sigma(j, el)) == wm.sigma(j, wm.sigma(i, el)),
                                  name);
            }
        }
    return report;
}

/// ((B x C) x D -> B x (C x D)) is an isomorphism on triple tensor powers of
/// the standard crystal.
inline Report tensor_assoc_suite(int max_n) {
    Report report;
    for (int n = 1; n <= max_n; ++n) {
        detail::Collector c(report, "tensor-assoc:B+_" + std::to_string(n));
        CrystalModel b = standard_crystal(n, Category::qplus);
        CrystalModel left = tensor(tensor(b, b), b);
        CrystalModel right = tensor(b, tensor(b, b));
        auto verts = standard_crystal_vertices(n, Category::qplus);
        auto relabel = [](const Element& e) {
            return Element(e.left().left(), Element(e.left().right(), e.right()));
        };
        c.note("weights");
        c.note("operators");
        for (const Element& x : verts)
            for (const Element& y : verts)
                for (const Element& z : verts) {
                    Element lab(Element(x, y), z);
                    std::string name = lab.str();
                    c.require("weights", left.wt(lab) == right.wt(relabel(lab)), name);
                    for (int l : left.labels()) {
                        auto fl = left.f(l, lab);
                        auto fr = right.f(l, relabel(lab));
                        bool ok = fl.has_value() == fr.has_value() &&
                                  (!fl || relabel(*fl) == *fr);
                        c.require("operators", ok, name);
                        auto el = left.e(l, lab);
                        auto er = right.e(l, relabel(lab));
                        ok = el.has_value() == er.has_value() && (!el || relabel(*el) == *er);
                        c.require("operators", ok, name);
                    }
                }
    }
    return report;
}

/// Connectivity, unique extremal elements, the sigma_w0 exchanges, and the
/// Schur Q character for every strict shape inside `bound` with n <= max_n.
inline Report highest_weight_suite(const StrictPartition& bound, int max_n,
                                   bool with_axioms = false) {
    Report report;
    for (const StrictPartition& lambda : strict_partitions_in(bound)) {
        for (int n = std::max(1, lambda.length()); n <= max_n; ++n) {
            std::string tag = "highest-weight:ShTab+_" + std::to_string(n) + "(" +
                              to_string(lambda) + ")";
            detail::Collector c(report, tag);
            CrystalModel tm = shifted_tableau_crystal(lambda, n);
            auto elems = shifted_tableau_elements(lambda, n);
            CrystalGraph g = materialize(tm, elems);
            c.require("enumeration-closed", g.size() == elems.size(),
                      "BFS closure added vertices");
            auto comps = split_components(g);
            c.require("connected", comps.size() == 1,
                      std::to_string(comps.size()) + " components");
            auto hi = highest_weight_elements(g, Category::qplus);
            auto lo = lowest_weight_elements(g, Category::qplus);
            c.require("unique-highest",
                      hi == std::vector<Element>{Element(highest_tableau(lambda))},
                      std::to_string(hi.size()) + " highest");
            c.require("unique-lowest",
                      lo == std::vector<Element>{Element(lowest_tableau_hat(lambda, n))},
                      std::to_string(lo.size()) + " lowest");
            SparsePolynomial ch = character(g);
            c.require("character-Q", ch == schur_q(lambda, n), "ch != Q_lambda");
            c.require("character-2P",
                      ch == (BigInt(1) << lambda.length()) * schur_p(lambda, n),
                      "ch != 2^l P_lambda");
            // sigma_w0+ and sigma_w0 exchange extremal elements pointwise
            c.note("w0plus-exchange");
            c.note("w0-exchange");
            for (const Element& b : g.verts) {
                bool low_plus = tm.is_lowest(b, Category::qplus);
                bool high_img = tm.is_highest(tm.sigma_w0_plus(b), Category::qplus);
                c.require("w0plus-exchange", low_plus == high_img, b.str());
                bool low_q = tm.is_lowest(b, Category::q);
                bool high_q = tm.is_highest(tm.sigma_w0(b), Category::q);
                c.require("w0-exchange", low_q == high_q, b.str());
            }
            if (with_axioms) axiom_suite(g, tag, report);
        }
    }
    return report;
}

/// Characters of every finite q+ (resp. q) model built here lie in Sym_Q
/// (resp. Sym_P), and the Schur-Q expansion of a normal q+ model accounts for
/// its size.
inline Report characters_suite(const StrictPartition& bound, int max_n) {
    Report report;
    detail::Collector c(report, "characters");
    c.note("symQ-membership");
    c.note("symP-membership");
    c.note("expansion-counts");
    for (const StrictPartition& lambda : strict_partitions_in(bound)) {
        for (int n = std::max(1, lambda.length()); n <= max_n; ++n) {
            CrystalGraph g = materialize(shifted_tableau_crystal(lambda, n),
                                         shifted_tableau_elements(lambda, n));
            SparsePolynomial ch = character(g);
            std::string name = "ShTab+_" + std::to_string(n) + "(" + to_string(lambda) + ")";
            c.require("symQ-membership", sym_membership(ch, Ring::SymQ), name);
            auto expansion = expand_in_schur_q(ch);
            BigInt total = 0;
            bool nonneg = true;
            for (auto& [mu, k] : expansion) {
                if (k < 0) nonneg = false;
                total += k * BigInt(enumerate_shifted_tableaux(mu, n, true).size());
            }
            c.require("expansion-counts", nonneg && total == BigInt(g.size()), name);
        }
    }
    for (int n = 1; n <= std::min(3, max_n); ++n)
        for (int m = 0; m <= 3; ++m) {
            CrystalGraph g = materialize(word_crystal(n, m), all_words(n, m));
            c.require("symQ-membership", sym_membership(character(g), Ring::SymQ),
                      "W+_" + std::to_string(n) + "(" + std::to_string(m) + ")");
            CrystalGraph gq = materialize(word_crystal(n, m, Category::q),
                                          all_words(n, m, false));
            c.require("symP-membership", sym_membership(character(gq), Ring::SymP),
                      "W_" + std::to_string(n) + "(" + std::to_string(m) + ")");
        }
    return report;
}

/// The recording tableau commutes with every raising and lowering operator
/// over Incr+_n(z) for z in I_N, and the P-fibers are the full subcrystals,
/// each isomorphic to the tableau crystal of its shape.
inline Report insertion_commute_suite(int N, int max_n, bool with_axioms = false,
                                      Report* axiom_report = nullptr) {
    Report report;
    for (const Permutation& z : involutions_in(N)) {
        for (int n = 1; n <= max_n; ++n) {
            if (involution_shape(z).length() > n) continue;
            std::string tag = "insertion-commute:Incr+_" + std::to_string(n) + "(" +
                              z.cycle_string() + ")";
            detail::Collector c(report, tag);
            CrystalModel fm = factorization_crystal(z, n);
            auto elems = factorization_elements(z, n);
            std::map<ShiftedTableau, std::set<Element>> fibers;
            std::map<ShiftedTableau, std::set<ShiftedTableau>> images;
            c.note("Q-commutes");
            c.note("weights");
            for (const Element& ea : elems) {
                const Factorization& a = ea.factorization();
                InsertionPair pq = eg_insert(a);
                fibers[pq.P].insert(ea);
                images[pq.P].insert(pq.Q);
                c.require("weights", factorization_weight(a) == tableau_weight(pq.Q, n),
                          ea.str());
                StrictPartition shape = outer_shape(pq.P);
                CrystalModel tm = shifted_tableau_crystal(shape, n);
                Element et(pq.Q);
                for (int lab : fm.labels()) {
                    auto x = fm.f(lab, ea);
                    auto y = tm.f(lab, et);
                    bool ok = x.has_value() == y.has_value();
                    if (ok && x) ok = Element(eg_insert(x->factorization()).Q) == *y &&
                                      eg_insert(x->factorization()).P == pq.P;
                    c.require("Q-commutes", ok, ea.str() + " label " + label_name(lab));
                    auto u = fm.e(lab, ea);
                    auto v = tm.e(lab, et);
                    ok = u.has_value() == v.has_value();
                    if (ok && u) ok = Element(eg_insert(u->factorization()).Q) == *v &&
                                      eg_insert(u->factorization()).P == pq.P;
                    c.require("Q-commutes", ok, ea.str() + " label " + label_name(lab));
                }
            }
            // components coincide with fibers and are isomorphic to ShTab+
            CrystalGraph g = materialize(fm, elems);
            auto comps = split_components(g);
            c.require("fibers-are-components", comps.size() == fibers.size(),
                      std::to_string(comps.size()) + " vs " + std::to_string(fibers.size()));
            for (auto& comp : comps) {
                InsertionPair pq = eg_insert(comp.verts[0].factorization(), false);
                auto it = fibers.find(pq.P);
                bool ok = it != fibers.end() &&
                          it->second == std::set<Element>(comp.verts.begin(), comp.verts.end());
                c.require("fibers-are-components", ok, to_string(pq.P));
                StrictPartition shape = outer_shape(pq.P);
                c.require("fiber-bijective",
                          images[pq.P].size() == comp.size() &&
                              comp.size() == enumerate_shifted_tableaux(shape, n, true).size(),
                          to_string(pq.P));
                CrystalGraph tg = materialize(shifted_tableau_crystal(shape, n),
                                              shifted_tableau_elements(shape, n));
                c.require("fiber-isomorphic", isomorphic(comp, tg), to_string(pq.P));
            }
            if (with_axioms && axiom_report) axiom_suite(g, tag, *axiom_report);
        }
    }
    return report;
}

/// The two Schur-Q expansions of the involution Stanley polynomial agree for
/// every z in I_N, with nonnegative coefficients; vexillary z give Q_{mu(z)}.
inline Report stanley_suite(int N) {
    Report report;
    for (const Permutation& z : involutions_in(N)) {
        int n = std::max(1, involution_length(z));
        detail::Collector c(report, "stanley:" + z.cycle_string());
        auto peel = expand_in_schur_q(inv_stanley(z, n));
        auto count = schur_q_expansion_by_crystal(z, n);
        c.require("expansions-agree", peel == count,
                  to_string(peel) + " vs " + to_string(count));
        bool nonneg = true;
        for (auto& [lam, k] : peel)
            if (k < 0) nonneg = false;
        c.require("nonnegative", nonneg, to_string(peel));
        if (is_vexillary(z)) {
            bool single = peel.size() == 1 && peel.begin()->first == involution_shape(z) &&
                          peel.begin()->second == 1;
            c.require("vexillary-single-Q", single, to_string(peel));
        }
    }
    return report;
}

}  // namespace qcryst::verify

#endif
