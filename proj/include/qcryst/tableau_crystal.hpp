#ifndef QCRYST_TABLEAU_CRYSTAL_HPP
#define QCRYST_TABLEAU_CRYSTAL_HPP

#include "qcryst/crystal.hpp"
#include "qcryst/tableau.hpp"

namespace qcryst {

/// The q+_n-crystal ShTab+_n(lambda) of semistandard shifted tableaux of
/// straight shape lambda with entries at most n.
inline CrystalModel shifted_tableau_crystal(const StrictPartition& lambda, int n) {
    CrystalModel m;
    m.n = n;
    m.cat = Category::qplus;
    m.name = "ShTab+_" + std::to_string(n) + "(" + to_string(lambda) + ")";
    m.wt = [n](const Element& el) { return tableau_weight(el.tableau(), n); };
    m.raw_f = [](int label, const Element& el) -> std::optional<Element> {
        const ShiftedTableau& t = el.tableau();
        std::optional<ShiftedTableau> r;
        if (label >= 1) r = tableau_f(t, label);
        else if (label == 0) r = tableau_f0(t);
        else r = tableau_fbar(t);
        if (!r) return std::nullopt;
        return Element(std::move(*r));
    };
    m.raw_e = [](int label, const Element& el) -> std::optional<Element> {
        const ShiftedTableau& t = el.tableau();
        std::optional<ShiftedTableau> r;
        if (label >= 1) r = tableau_e(t, label);
        else if (label == 0) r = tableau_e0(t);
        else r = tableau_ebar(t);
        if (!r) return std::nullopt;
        return Element(std::move(*r));
    };
    return m;
}

inline std::vector<Element> shifted_tableau_elements(const StrictPartition& lambda, int n) {
    std::vector<Element> out;
    for (auto& t : enumerate_shifted_tableaux(lambda, n, /*allow_diag_primes=*/true))
        out.push_back(Element(std::move(t)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qcryst

#endif
