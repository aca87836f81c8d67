#include "prestable/normal_form.hpp"

#include "prestable/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace prestable {

bool is_normal_form(const DecoratedGraph& s) {
    const auto& g = s.graph;
    const auto& d = s.deco;
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto hv = g.halves_at(v);
        int m = (int)hv.size();
        if (m == 0) {
            for (auto& [a, e] : d.kappa[v])
                if (a != 2) return false;
        } else {
            if (!d.kappa[v].empty()) return false;
        }
        if (m == 1) continue;  // any psi power at the unique half is fine
        if (m == 2) {
            // a power of one of the two halves
            if (d.psi[hv[0]] > 0 && d.psi[hv[1]] > 0) return false;
            continue;
        }
        if (m >= 3) {
            for (int h : hv)
                if (d.psi[h] != 0) return false;
        }
    }
    return true;
}

namespace {

// per-vertex decoration slots for the normal form
struct Slot {
    int vertex;
    enum Kind { Kappa2, Psi1, Binom2 } kind;
    int half_a = -1, half_b = -1;  // for Psi1 / Binom2
};

// enumerate weights: Kappa2 takes even degree 2a, others any c >= 0
void enumerate_weights(const std::vector<Slot>& slots, size_t i, int remaining,
                       std::vector<int>& acc, const std::function<void(const std::vector<int>&)>& f) {
    if (i == slots.size()) {
        if (remaining == 0) f(acc);
        return;
    }
    const Slot& s = slots[i];
    int step = (s.kind == Slot::Kappa2) ? 2 : 1;
    for (int w = 0; w <= remaining; w += step) {
        acc.push_back(w);
        enumerate_weights(slots, i + 1, remaining - w, acc, f);
        acc.pop_back();
    }
}

// expand a slot assignment into signed monomial strata
TautClass expand_assignment(Ambient amb, const PrestableGraph& g, const std::vector<Slot>& slots,
                            const std::vector<int>& weights) {
    // binomial slots with weight >= 1 contribute two signed monomials
    std::vector<size_t> binoms;
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i].kind == Slot::Binom2 && weights[i] >= 1) binoms.push_back(i);
    TautClass out(amb);
    for (long mask = 0; mask < (1L << binoms.size()); ++mask) {
        Decoration d = Decoration::trivial(g);
        Rat coeff = 1;
        for (size_t i = 0; i < slots.size(); ++i) {
            const Slot& s = slots[i];
            int w = weights[i];
            if (w == 0) continue;
            switch (s.kind) {
                case Slot::Kappa2:
                    d.set_kappa(s.vertex, 2, w / 2);
                    break;
                case Slot::Psi1:
                    d.psi[s.half_a] = w;
                    break;
                case Slot::Binom2: {
                    size_t bi = std::find(binoms.begin(), binoms.end(), i) - binoms.begin();
                    if (mask & (1L << bi)) {
                        d.psi[s.half_b] = w;
                        if (w % 2) coeff = -coeff;
                    } else {
                        d.psi[s.half_a] = w;
                    }
                    break;
                }
            }
        }
        out.add_term(g, d, coeff);
    }
    return out;
}

} // namespace

NormalFormBasis enumerate_normal_form_basis(int n, int d, const SubstackSpec& spec) {
    validate_spec(spec, n, d);
    NormalFormBasis basis;
    basis.amb = Ambient{n, false};
    basis.degree = d;
    for (int p = 0; p <= d; ++p) {
        std::vector<BasisElement> level;
        std::map<CanonicalKey, bool> seen;  // leading keys
        for (const auto& g : enumerate_graphs(n, p)) {
            if (!spec.allows(g)) continue;
            std::vector<Slot> slots;
            bool decorations_possible = true;
            for (int v = 0; v < g.num_vertices(); ++v) {
                auto hv = g.halves_at(v);
                if (hv.size() == 0) slots.push_back({v, Slot::Kappa2, -1, -1});
                if (hv.size() == 1) slots.push_back({v, Slot::Psi1, hv[0], -1});
                if (hv.size() == 2) slots.push_back({v, Slot::Binom2, hv[0], hv[1]});
            }
            int r = d - p;
            if (r > 0 && slots.empty()) decorations_possible = false;
            if (!decorations_possible) continue;
            std::vector<int> acc;
            enumerate_weights(slots, 0, r, acc, [&](const std::vector<int>& weights) {
                TautClass cls = expand_assignment(basis.amb, g, slots, weights);
                if (cls.empty()) return;  // odd-degree symmetric binomial orbit
                // sign/scale normalize: leading key gets coefficient of fixed sign
                const auto& first = *cls.terms().begin();
                Rat lead = first.second.coeff;
                cls.scale(1 / lead);
                CanonicalKey leading = first.first;
                if (seen.count(leading)) return;
                seen.emplace(leading, true);
                level.push_back({cls, leading, p});
            });
        }
        std::sort(level.begin(), level.end(),
                  [](const BasisElement& a, const BasisElement& b) { return a.leading < b.leading; });
        for (auto& e : level) basis.elems.push_back(std::move(e));
    }
    for (int i = 0; i < (int)basis.elems.size(); ++i) {
        for (auto& [k, t] : basis.elems[i].cls.terms()) {
            auto [it, fresh] = basis.key_index.emplace(k, std::make_pair(i, t.coeff));
            if (!fresh) throw std::logic_error("basis orbits are not disjoint");
        }
    }
    return basis;
}

SparseVec coordinates(const NormalFormBasis& basis, const TautClass& c) {
    if (!(c.ambient() == basis.amb)) throw std::invalid_argument("ambient mismatch");
    std::map<int, Rat> coords;
    std::map<int, TautClass> grouped;
    for (auto& [k, t] : c.terms()) {
        auto it = basis.key_index.find(k);
        if (it == basis.key_index.end())
            throw std::invalid_argument("class has a term outside the basis span");
        auto [idx, e] = it->second;
        auto [git, fresh] = grouped.emplace(idx, TautClass(basis.amb));
        git->second.add_term(t.rep.graph, t.rep.deco, t.coeff);
    }
    for (auto& [idx, part] : grouped) {
        // coordinate determined by the leading key; verify full proportionality
        const auto& elem = basis.elems[idx];
        const auto& first = *part.terms().begin();
        auto [eidx, ecoeff] = basis.key_index.at(first.first);
        Rat r = first.second.coeff / ecoeff;
        TautClass check = elem.cls * r;
        if (!(check == part))
            throw std::invalid_argument("class is not in the normal-form span");
        coords[idx] = r;
    }
    return sparse_normalize(std::move(coords));
}

TautClass restrict_to_spec(const TautClass& c, const SubstackSpec& spec) {
    TautClass out(c.ambient());
    for (auto& [k, t] : c.terms()) {
        if (spec.allows(t.rep.graph)) out.add_term(t.rep.graph, t.rep.deco, t.coeff);
    }
    return out;
}

} // namespace prestable
