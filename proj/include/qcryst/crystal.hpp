#ifndef QCRYST_CRYSTAL_HPP
#define QCRYST_CRYSTAL_HPP

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcryst/element.hpp"

namespace qcryst {

enum class Category { gl, q, qplus };

inline std::string to_string(Category c) {
    switch (c) {
        case Category::gl: return "gl";
        case Category::q: return "q";
        default: return "qplus";
    }
}

/// Edge labels: -1 encodes bar-1, 0 the prime-toggling operator, 1..n-1 the
/// general-linear operators.
constexpr int kBar1 = -1;

inline std::string label_name(int label) {
    return label == kBar1 ? "bar1" : std::to_string(label);
}

using PartialOp = std::function<std::optional<Element>(int, const Element&)>;

/// An abstract crystal: rank, category, weight map and the primitive raising
/// and lowering operators.  Operators are pure functions on payloads; graphs
/// are materialized separately.
struct CrystalModel {
    int n = 1;
    Category cat = Category::qplus;
    std::string name;
    std::function<WeightVector(const Element&)> wt;
    PartialOp raw_e, raw_f;

    static constexpr int kStringCap = 1 << 20;

    std::vector<int> labels() const {
        std::vector<int> out;
        if (cat != Category::gl && n >= 2) out.push_back(kBar1);
        if (cat == Category::qplus) out.push_back(0);
        for (int i = 1; i < n; ++i) out.push_back(i);
        return out;
    }

    bool has_label(int label) const {
        if (label == kBar1) return cat != Category::gl && n >= 2;
        if (label == 0) return cat == Category::qplus;
        return label >= 1 && label < n;
    }

    std::optional<Element> e(int label, const Element& b) const {
        if (!has_label(label)) throw std::invalid_argument("e: bad label " + label_name(label));
        return raw_e(label, b);
    }
    std::optional<Element> f(int label, const Element& b) const {
        if (!has_label(label)) throw std::invalid_argument("f: bad label " + label_name(label));
        return raw_f(label, b);
    }

    int epsilon(int label, const Element& b) const {
        int k = 0;
        Element cur = b;
        while (auto nxt = e(label, cur)) {
            cur = *nxt;
            if (++k > kStringCap) throw std::runtime_error("epsilon: iteration cap (malformed model)");
        }
        return k;
    }

    int phi(int label, const Element& b) const {
        int k = 0;
        Element cur = b;
        while (auto nxt = f(label, cur)) {
            cur = *nxt;
            if (++k > kStringCap) throw std::runtime_error("phi: iteration cap (malformed model)");
        }
        return k;
    }

    /// sigma_i reverses the i-string through b; defined for i in {0} u [n-1].
    Element sigma(int label, const Element& b) const {
        int k = phi(label, b) - epsilon(label, b);
        Element cur = b;
        if (k >= 0)
            for (int t = 0; t < k; ++t) cur = *f(label, cur);
        else
            for (int t = 0; t < -k; ++t) cur = *e(label, cur);
        return cur;
    }

    /// e_bar(i) = sigma_{i-1} sigma_i e_bar(i-1) sigma_i sigma_{i-1}, i >= 2.
    std::optional<Element> e_bar(int i, const Element& b) const {
        if (i == 1) return e(kBar1, b);
        Element mid = sigma(i, sigma(i - 1, b));
        auto r = e_bar(i - 1, mid);
        if (!r) return std::nullopt;
        return sigma(i - 1, sigma(i, *r));
    }

    std::optional<Element> f_bar(int i, const Element& b) const {
        if (i == 1) return f(kBar1, b);
        Element mid = sigma(i, sigma(i - 1, b));
        auto r = f_bar(i - 1, mid);
        if (!r) return std::nullopt;
        return sigma(i - 1, sigma(i, *r));
    }

    /// sigma_w0: the blocks (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1}...sigma_1)
    /// applied rightmost first.
    std::vector<int> w0_sequence() const {
        std::vector<int> seq;  // in application order
        for (int block = n - 1; block >= 1; --block)
            for (int i = 1; i <= block; ++i) seq.push_back(i);
        return seq;
    }

    Element sigma_w0(const Element& b) const {
        Element cur = b;
        for (int i : w0_sequence()) cur = sigma(i, cur);
        return cur;
    }

    Element sigma_w0_inv(const Element& b) const {
        auto seq = w0_sequence();
        Element cur = b;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) cur = sigma(*it, cur);
        return cur;
    }

    /// sigma_{w_0^+} = (sigma_0)(sigma_1 sigma_0)...(sigma_{n-1}...sigma_0),
    /// rightmost block first.
    Element sigma_w0_plus(const Element& b) const {
        Element cur = b;
        for (int block = n - 1; block >= 0; --block)
            for (int i = 0; i <= block; ++i) cur = sigma(i, cur);
        return cur;
    }

    /// e_bar'(i) = sigma_w0 f_bar(n-i) sigma_w0^{-1} and dually.
    std::optional<Element> e_bar_prime(int i, const Element& b) const {
        auto r = f_bar(n - i, sigma_w0_inv(b));
        if (!r) return std::nullopt;
        return sigma_w0(*r);
    }

    std::optional<Element> f_bar_prime(int i, const Element& b) const {
        auto r = e_bar(n - i, sigma_w0_inv(b));
        if (!r) return std::nullopt;
        return sigma_w0(*r);
    }

    /// e_0^[i] = sigma_{i-1}...sigma_1 e_0 sigma_1...sigma_{i-1}, i in [n].
    std::optional<Element> e0_bracket(int i, const Element& b) const {
        Element cur = b;
        for (int j = i - 1; j >= 1; --j) cur = sigma(j, cur);
        auto r = e(0, cur);
        if (!r) return std::nullopt;
        for (int j = 1; j <= i - 1; ++j) r = sigma(j, *r);
        return r;
    }

    std::optional<Element> f0_bracket(int i, const Element& b) const {
        Element cur = b;
        for (int j = i - 1; j >= 1; --j) cur = sigma(j, cur);
        auto r = f(0, cur);
        if (!r) return std::nullopt;
        for (int j = 1; j <= i - 1; ++j) r = sigma(j, *r);
        return r;
    }

    bool is_highest(const Element& b, Category flavor) const {
        for (int i = 1; i < n; ++i)
            if (e(i, b)) return false;
        if (flavor == Category::gl) return true;
        for (int i = 1; i < n; ++i)
            if (e_bar(i, b)) return false;
        if (flavor == Category::q) return true;
        for (int i = 1; i <= n; ++i)
            if (e0_bracket(i, b)) return false;
        return true;
    }

    bool is_lowest(const Element& b, Category flavor) const {
        for (int i = 1; i < n; ++i)
            if (f(i, b)) return false;
        if (flavor == Category::gl) return true;
        for (int i = 1; i < n; ++i)
            if (f_bar_prime(i, b)) return false;
        if (flavor == Category::q) return true;
        for (int i = 1; i <= n; ++i)
            if (f0_bracket(i, b)) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Standard crystals

/// The one-row crystals B_n (gl or q flavor) and B+_n (qplus); vertices are
/// one-letter words.
inline CrystalModel standard_crystal(int n, Category cat) {
    if (n < 1) throw std::invalid_argument("standard_crystal: n < 1");
    CrystalModel m;
    m.n = n;
    m.cat = cat;
    m.name = (cat == Category::qplus ? "B+_" : "B_") + std::to_string(n);
    m.wt = [n](const Element& el) {
        WeightVector w(n, 0);
        w.at(el.word().at(0).value() - 1) += 1;
        return w;
    };
    m.raw_f = [](int label, const Element& el) -> std::optional<Element> {
        Letter l = el.word().at(0);
        if (label == 0) {
            if (l == Letter(1)) return Element(Letter(1, true));
            return std::nullopt;
        }
        int i = (label == kBar1) ? 1 : label;
        if (l.value() != i) return std::nullopt;
        return Element(make_letter(i + 1, l.primed()));
    };
    m.raw_e = [](int label, const Element& el) -> std::optional<Element> {
        Letter l = el.word().at(0);
        if (label == 0) {
            if (l == Letter(1, true)) return Element(Letter(1));
            return std::nullopt;
        }
        int i = (label == kBar1) ? 1 : label;
        if (l.value() != i + 1) return std::nullopt;
        return Element(make_letter(i, l.primed()));
    };
    return m;
}

inline std::vector<Element> standard_crystal_vertices(int n, Category cat) {
    std::vector<Element> out;
    for (int v = 1; v <= n; ++v) {
        if (cat == Category::qplus) out.push_back(Element(make_letter(v, true)));
        out.push_back(Element(make_letter(v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Single-vertex crystal of weight zero.
inline CrystalModel trivial_crystal(int n, Category cat) {
    CrystalModel m;
    m.n = n;
    m.cat = cat;
    m.name = "1";
    m.wt = [n](const Element&) { return WeightVector(n, 0); };
    m.raw_e = [](int, const Element&) { return std::nullopt; };
    m.raw_f = [](int, const Element&) { return std::nullopt; };
    return m;
}

// ---------------------------------------------------------------------------
// Tensor product (anti-Kashiwara convention)

/// Tensor product of two crystals of equal rank.  The gl operators follow the
/// string-length rule, bar-1 the queer four-case rule, and 0 the leftmost
/// nonzero-weight rule.
inline CrystalModel tensor(const CrystalModel& A, const CrystalModel& B, Category cat) {
    if (A.n != B.n) throw std::invalid_argument("tensor: rank mismatch");
    auto need = [&](const CrystalModel& M) {
        if (cat == Category::qplus && M.cat != Category::qplus)
            throw std::invalid_argument("tensor: factor lacks qplus operators");
        if (cat == Category::q && M.cat == Category::gl)
            throw std::invalid_argument("tensor: factor lacks queer operators");
    };
    need(A);
    need(B);
    auto a = std::make_shared<const CrystalModel>(A);
    auto b = std::make_shared<const CrystalModel>(B);
    CrystalModel m;
    m.n = A.n;
    m.cat = cat;
    m.name = "(" + A.name + ") x (" + B.name + ")";
    m.wt = [a, b](const Element& el) {
        return add(a->wt(el.left()), b->wt(el.right()));
    };
    auto pack = [](std::optional<Element> l, std::optional<Element> r) -> std::optional<Element> {
        if (!l || !r) return std::nullopt;
        return Element(std::move(*l), std::move(*r));
    };
    m.raw_f = [a, b, pack](int label, const Element& el) -> std::optional<Element> {
        const Element& x = el.left();
        const Element& y = el.right();
        if (label >= 1) {
            if (a->epsilon(label, x) < b->phi(label, y)) return pack(x, b->f(label, y));
            return pack(a->f(label, x), y);
        }
        WeightVector wx = a->wt(x);
        if (label == 0) {
            if (wx[0] != 0) return pack(a->f(0, x), y);
            return pack(x, b->f(0, y));
        }
        // label == bar1
        if (wx[0] == 0 && wx[1] == 0) return pack(x, b->f(kBar1, y));
        if (wx[0] == 1) {
            if (auto fx = a->f(0, x)) {
                if (auto ffx = a->f(kBar1, *fx)) {
                    if (auto ey = b->e(0, y)) return pack(ffx, ey);
                }
            }
            if (auto ex = a->e(0, x)) {
                if (auto fex = a->f(kBar1, *ex)) {
                    if (auto fy = b->f(0, y)) return pack(fex, fy);
                }
            }
        }
        return pack(a->f(kBar1, x), y);
    };
    m.raw_e = [a, b, pack](int label, const Element& el) -> std::optional<Element> {
        const Element& x = el.left();
        const Element& y = el.right();
        if (label >= 1) {
            if (a->epsilon(label, x) <= b->phi(label, y)) return pack(x, b->e(label, y));
            return pack(a->e(label, x), y);
        }
        WeightVector wx = a->wt(x);
        if (label == 0) {
            if (wx[0] != 0) return pack(a->e(0, x), y);
            return pack(x, b->e(0, y));
        }
        if (wx[0] == 0 && wx[1] == 0) return pack(x, b->e(kBar1, y));
        if (wx[0] == 0) {
            if (auto ex = a->e(kBar1, x)) {
                if (auto fex = a->f(0, *ex)) {
                    if (auto ey = b->e(0, y)) return pack(fex, ey);
                }
                if (auto eex = a->e(0, *ex)) {
                    if (auto fy = b->f(0, y)) return pack(eex, fy);
                }
            }
        }
        return pack(a->e(kBar1, x), y);
    };
    return m;
}

inline CrystalModel tensor(const CrystalModel& A, const CrystalModel& B) {
    Category cat = std::min(A.cat, B.cat);
    return tensor(A, B, cat);
}

inline Element tensor_element(std::vector<Element> factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_element: empty");
    Element acc = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) acc = Element(std::move(acc), factors[i]);
    return acc;
}

/// Left-nested tensor power of the standard crystal with its vertex set.
inline CrystalModel tensor_power(const CrystalModel& A, int m) {
    if (m < 1) throw std::invalid_argument("tensor_power: m < 1");
    CrystalModel acc = A;
    for (int i = 1; i < m; ++i) acc = tensor(acc, A, A.cat);
    return acc;
}

// ---------------------------------------------------------------------------
// Materialized graphs

struct CrystalGraph {
    std::shared_ptr<const CrystalModel> model;
    std::vector<Element> verts;  // sorted
    std::vector<WeightVector> wts;
    std::vector<std::vector<std::pair<int, int>>> fout;  // (label, dst) per vertex
    std::vector<std::vector<std::pair<int, int>>> fin;   // (label, src) per vertex

    size_t size() const { return verts.size(); }

    int index_of(const Element& e) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), e);
        if (it == verts.end() || *it != e) return -1;
        return static_cast<int>(it - verts.begin());
    }

    bool has_edge(int src, int label, int dst) const {
        for (auto [l, d] : fout[src])
            if (l == label && d == dst) return true;
        return false;
    }

    size_t edge_count() const {
        size_t c = 0;
        for (auto& v : fout) c += v.size();
        return c;
    }
};

/// BFS closure of the seeds under all primitive raising and lowering
/// operators, returned as one canonical graph (possibly disconnected).
inline CrystalGraph materialize(const CrystalModel& model, const std::vector<Element>& seeds,
                                size_t cap = 1'000'000) {
    std::set<Element> seen(seeds.begin(), seeds.end());
    std::deque<Element> queue(seeds.begin(), seeds.end());
    if (seen.size() > cap) throw std::runtime_error("materialize: vertex cap exceeded");
    auto labels = model.labels();
    while (!queue.empty()) {
        Element cur = queue.front();
        queue.pop_front();
        for (int l : labels) {
            for (bool up : {false, true}) {
                auto nxt = up ? model.e(l, cur) : model.f(l, cur);
                if (nxt && seen.insert(*nxt).second) {
                    if (seen.size() > cap) throw std::runtime_error("materialize: vertex cap exceeded");
                    queue.push_back(*nxt);
                }
            }
        }
    }
    CrystalGraph g;
    g.model = std::make_shared<const CrystalModel>(model);
    g.verts.assign(seen.begin(), seen.end());
    g.wts.reserve(g.verts.size());
    g.fout.assign(g.verts.size(), {});
    g.fin.assign(g.verts.size(), {});
    for (size_t i = 0; i < g.verts.size(); ++i) g.wts.push_back(model.wt(g.verts[i]));
    for (size_t i = 0; i < g.verts.size(); ++i) {
        for (int l : labels) {
            if (auto nxt = model.f(l, g.verts[i])) {
                int j = g.index_of(*nxt);
                if (j < 0) throw std::logic_error("materialize: closure broken");
                g.fout[i].push_back({l, j});
                g.fin[j].push_back({l, static_cast<int>(i)});
            }
        }
    }
    for (auto& v : g.fout) std::sort(v.begin(), v.end());
    for (auto& v : g.fin) std::sort(v.begin(), v.end());
    return g;
}

/// Splits a materialized graph into weakly connected components, each again
/// canonical; components ordered by their least vertex.
inline std::vector<CrystalGraph> split_components(const CrystalGraph& g) {
    std::vector<int> comp(g.size(), -1);
    int ncomp = 0;
    for (size_t s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::deque<int> queue{static_cast<int>(s)};
        comp[s] = ncomp;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [l, v] : g.fout[u])
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    queue.push_back(v);
                }
            for (auto [l, v] : g.fin[u])
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    queue.push_back(v);
                }
        }
        ++ncomp;
    }
    std::vector<CrystalGraph> out(ncomp);
    for (int c = 0; c < ncomp; ++c) out[c].model = g.model;
    std::vector<int> newidx(g.size());
    std::vector<int> counter(ncomp, 0);
    for (size_t i = 0; i < g.size(); ++i) {  // verts already sorted, stays sorted per comp
        int c = comp[i];
        newidx[i] = counter[c]++;
        out[c].verts.push_back(g.verts[i]);
        out[c].wts.push_back(g.wts[i]);
    }
    for (int c = 0; c < ncomp; ++c) {
        out[c].fout.assign(out[c].verts.size(), {});
        out[c].fin.assign(out[c].verts.size(), {});
    }
    for (size_t i = 0; i < g.size(); ++i) {
        int c = comp[i];
        for (auto [l, j] : g.fout[i]) {
            out[c].fout[newidx[i]].push_back({l, newidx[j]});
            out[c].fin[newidx[j]].push_back({l, newidx[i]});
        }
    }
    for (auto& gc : out) {
        for (auto& v : gc.fout) std::sort(v.begin(), v.end());
        for (auto& v : gc.fin) std::sort(v.begin(), v.end());
    }
    std::sort(out.begin(), out.end(),
              [](const CrystalGraph& a, const CrystalGraph& b) { return a.verts[0] < b.verts[0]; });
    return out;
}

inline std::vector<CrystalGraph> components(const CrystalModel& model,
                                            const std::vector<Element>& seeds,
                                            size_t cap = 1'000'000) {
    return split_components(materialize(model, seeds, cap));
}

/// Highest-weight elements of a materialized graph for the given flavor.
inline std::vector<Element> highest_weight_elements(const CrystalGraph& g, Category flavor) {
    std::vector<Element> out;
    for (const Element& v : g.verts)
        if (g.model->is_highest(v, flavor)) out.push_back(v);
    return out;
}

inline std::vector<Element> lowest_weight_elements(const CrystalGraph& g, Category flavor) {
    std::vector<Element> out;
    for (const Element& v : g.verts)
        if (g.model->is_lowest(v, flavor)) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

/// Local invariant used to anchor and prune the isomorphism search.
inline std::string vertex_signature(const CrystalGraph& g, int v) {
    std::string s = to_string(g.wts[v]) + "|";
    for (auto [l, _] : g.fout[v]) s += "f" + label_name(l) + ",";
    s += "|";
    for (auto [l, _] : g.fin[v]) s += "e" + label_name(l) + ",";
    return s;
}

inline bool component_iso(const CrystalGraph& a, const CrystalGraph& b, std::vector<int>& map_out) {
    if (a.size() != b.size()) return false;
    // anchor at the least source vertex (no incoming edges), else vertex 0
    int anchor = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.fin[i].empty()) {
            anchor = static_cast<int>(i);
            break;
        }
    std::string sig = vertex_signature(a, anchor);
    for (size_t cand = 0; cand < b.size(); ++cand) {
        if (vertex_signature(b, cand) != sig) continue;
        std::vector<int> map(a.size(), -1), rmap(b.size(), -1);
        std::deque<int> queue{anchor};
        map[anchor] = static_cast<int>(cand);
        rmap[cand] = anchor;
        bool ok = true;
        while (ok && !queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            int v = map[u];
            if (a.wts[u] != b.wts[v] || a.fout[u].size() != b.fout[v].size() ||
                a.fin[u].size() != b.fin[v].size()) {
                ok = false;
                break;
            }
            auto extend = [&](int uu, int vv) {
                if (map[uu] < 0 && rmap[vv] < 0) {
                    map[uu] = vv;
                    rmap[vv] = uu;
                    queue.push_back(uu);
                    return true;
                }
                return map[uu] == vv;
            };
            for (size_t k = 0; ok && k < a.fout[u].size(); ++k) {
                if (a.fout[u][k].first != b.fout[v][k].first) ok = false;
                else ok = extend(a.fout[u][k].second, b.fout[v][k].second);
            }
            for (size_t k = 0; ok && k < a.fin[u].size(); ++k) {
                if (a.fin[u][k].first != b.fin[v][k].first) ok = false;
                else ok = extend(a.fin[u][k].second, b.fin[v][k].second);
            }
        }
        if (!ok) continue;
        bool complete = std::all_of(map.begin(), map.end(), [](int x) { return x >= 0; });
        if (!complete) continue;
        map_out = map;
        return true;
    }
    return false;
}

}  // namespace detail

/// Weight-preserving labeled-digraph isomorphism; returns the vertex map
/// a.verts[i] -> b.verts[iso[i]] when one exists.
inline std::optional<std::vector<int>> isomorphism(const CrystalGraph& a, const CrystalGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
    auto ca = split_components(a);
    auto cb = split_components(b);
    if (ca.size() != cb.size()) return std::nullopt;
    // match components by backtracking over same-size candidates
    size_t k = ca.size();
    std::vector<int> assign(k, -1);
    std::vector<bool> used(k, false);
    std::vector<std::vector<int>> maps(k);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == k) return true;
        for (size_t j = 0; j < k; ++j) {
            if (used[j] || ca[i].size() != cb[j].size()) continue;
            std::vector<int> m;
            if (detail::component_iso(ca[i], cb[j], m)) {
                used[j] = true;
                assign[i] = static_cast<int>(j);
                maps[i] = std::move(m);
                if (self(self, i + 1)) return true;
                used[j] = false;
            }
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<int> out(a.size());
    for (size_t i = 0; i < k; ++i)
        for (size_t u = 0; u < ca[i].verts.size(); ++u) {
            int gu = a.index_of(ca[i].verts[u]);
            int gv = b.index_of(cb[assign[i]].verts[maps[i][u]]);
            out[gu] = gv;
        }
    return out;
}

inline bool isomorphic(const CrystalGraph& a, const CrystalGraph& b) {
    return isomorphism(a, b).has_value();
}

// ---------------------------------------------------------------------------
// nu_0 and the gl(1|1) weight

struct Nu0Result {
    std::vector<int> nu0;                            // per vertex
    std::vector<std::pair<int, int>> wt11;           // per vertex
};

/// Propagates nu_0 from the q+-lowest weight elements (value 0 there) along
/// edges, adding 1 across raising 0-edges; throws when two paths disagree.
inline Nu0Result nu0_and_wt11(const CrystalGraph& g) {
    const auto& model = *g.model;
    std::vector<int> nu(g.size(), INT_MIN);
    std::vector<int> lows;
    for (size_t i = 0; i < g.size(); ++i)
        if (model.is_lowest(g.verts[i], Category::qplus)) lows.push_back(static_cast<int>(i));
    if (lows.empty()) throw std::runtime_error("nu0: no qplus-lowest element (non-normal crystal?)");
    std::deque<int> queue;
    for (int i : lows) {
        nu[i] = 0;
        queue.push_back(i);
    }
    auto relax = [&](int from, int to, int delta) {
        int val = nu[from] + delta;
        if (nu[to] == INT_MIN) {
            nu[to] = val;
            queue.push_back(to);
        } else if (nu[to] != val) {
            throw std::runtime_error("nu0: inconsistent propagation (non-normal crystal?)");
        }
    };
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [l, v] : g.fout[u]) relax(u, v, l == 0 ? -1 : 0);   // u -f-> v, so nu(u) = nu(v)+d
        for (auto [l, v] : g.fin[u]) relax(u, v, l == 0 ? 1 : 0);     // v -f-> u, nu(v) = nu(u)+d
    }
    for (size_t i = 0; i < g.size(); ++i) {
        if (nu[i] == INT_MIN) throw std::runtime_error("nu0: component without qplus-lowest element");
        if (nu[i] < 0) throw std::runtime_error("nu0: negative value (non-normal crystal?)");
    }
    Nu0Result res;
    res.nu0 = nu;
    res.wt11.reserve(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        int e0 = model.epsilon(0, g.verts[i]);
        int p0 = model.phi(0, g.verts[i]);
        res.wt11.push_back({nu[i] + e0 + p0, -nu[i]});
    }
    return res;
}

// ---------------------------------------------------------------------------
// Exports

/// DOT export: dashed dark-red bar1 arrows, dotted blue 0-arrows, solid
/// numeric arrows, per the usual drawing convention for these graphs.
inline std::string to_dot(const CrystalGraph& g, const std::string& name = "crystal") {
    std::string s = "digraph \"" + name + "\" {\n  rankdir=BT;\n";
    for (size_t i = 0; i < g.size(); ++i)
        s += "  n" + std::to_string(i) + " [label=\"" + g.verts[i].str() + "\"];\n";
    for (size_t i = 0; i < g.size(); ++i)
        for (auto [l, j] : g.fout[i]) {
            s += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + " [label=\"" +
                 label_name(l) + "\"";
            if (l == kBar1) s += ", style=dashed, color=darkred";
            else if (l == 0) s += ", style=dotted, color=blue";
            s += "];\n";
        }
    s += "}\n";
    return s;
}

}  // namespace qcryst

#endif
