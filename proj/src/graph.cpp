#include "prestable/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace prestable {

int PrestableGraph::num_edges() const {
    int fixed = 0;
    for (int h = 0; h < num_half_edges(); ++h)
        if (involution[h] == h) ++fixed;
    return (num_half_edges() - fixed) / 2;
}

int PrestableGraph::leg_label_at(int h) const {
    for (int i = 0; i < (int)leg_half.size(); ++i)
        if (leg_half[i] == h) return i + 1;
    return 0;
}

std::vector<int> PrestableGraph::halves_at(int v) const {
    std::vector<int> hs;
    for (int h = 0; h < num_half_edges(); ++h)
        if (vertex_of[h] == v) hs.push_back(h);
    return hs;
}

int PrestableGraph::valence(int v) const {
    int c = 0;
    for (int h = 0; h < num_half_edges(); ++h)
        if (vertex_of[h] == v) ++c;
    return c;
}

bool PrestableGraph::any_rigid() const {
    for (auto r : rigid)
        if (r) return true;
    return false;
}

PrestableGraph PrestableGraph::trivial(int n, int g) {
    PrestableGraph gr;
    gr.genus = {g};
    gr.rigid = {0};
    gr.vertex_of.assign(n, 0);
    gr.involution.resize(n);
    gr.leg_half.resize(n);
    for (int i = 0; i < n; ++i) {
        gr.involution[i] = i;
        gr.leg_half[i] = i;
    }
    return gr;
}

PrestableGraph PrestableGraph::one_edge(int n, const std::vector<int>& side1) {
    PrestableGraph gr;
    gr.genus = {0, 0};
    gr.rigid = {0, 0};
    std::vector<char> on1(n + 1, 0);
    for (int m : side1) {
        if (m < 1 || m > n) throw std::invalid_argument("marking out of range");
        on1[m] = 1;
    }
    gr.leg_half.resize(n);
    for (int m = 1; m <= n; ++m) {
        gr.vertex_of.push_back(on1[m] ? 0 : 1);
        gr.involution.push_back((int)gr.involution.size());
        gr.leg_half[m - 1] = (int)gr.vertex_of.size() - 1;
    }
    int h1 = (int)gr.vertex_of.size();
    gr.vertex_of.push_back(0);
    gr.vertex_of.push_back(1);
    gr.involution.push_back(h1 + 1);
    gr.involution.push_back(h1);
    return gr;
}

std::optional<Violation> validate(const PrestableGraph& g) {
    int nv = g.num_vertices();
    int nh = g.num_half_edges();
    if ((int)g.rigid.size() != nv) return Violation{"rigid flags size mismatch"};
    if ((int)g.involution.size() != nh) return Violation{"involution size mismatch"};
    for (int h = 0; h < nh; ++h) {
        if (g.vertex_of[h] < 0 || g.vertex_of[h] >= nv) return Violation{"half-edge with bad vertex"};
        int p = g.involution[h];
        if (p < 0 || p >= nh || g.involution[p] != h)
            return Violation{"involution is not an involution"};
    }
    // legs: exactly the fixed points, labels 1..n each exactly once
    std::vector<char> is_assigned(nh, 0);
    for (int i = 0; i < (int)g.leg_half.size(); ++i) {
        int h = g.leg_half[i];
        if (h < 0 || h >= nh) return Violation{"leg half out of range"};
        if (g.involution[h] != h) return Violation{"marking assigned to an edge half"};
        if (is_assigned[h]) return Violation{"half-edge carries two markings"};
        is_assigned[h] = 1;
    }
    for (int h = 0; h < nh; ++h) {
        if (g.involution[h] == h && !is_assigned[h])
            return Violation{"unmarked fixed point of the involution"};
    }
    for (int v = 0; v < nv; ++v)
        if (g.genus[v] < 0) return Violation{"negative genus"};
    // connectivity over (vertices, edges)
    if (nv == 0) return Violation{"empty vertex set"};
    std::vector<char> seen(nv, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h = 0; h < nh; ++h) {
            if (g.vertex_of[h] != v || g.involution[h] == h) continue;
            int w = g.vertex_of[g.involution[h]];
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < nv; ++v)
        if (!seen[v]) return Violation{"graph is not connected"};
    for (int v = 0; v < nv; ++v)
        if (g.rigid[v] && g.genus[v] != 0) return Violation{"rigid vertex with positive genus"};
    return std::nullopt;
}

bool is_valid(const PrestableGraph& g) { return !validate(g).has_value(); }

bool is_genus_zero_tree(const PrestableGraph& g) {
    for (int gv : g.genus)
        if (gv != 0) return false;
    // connected with E = V - 1 and no self-edges
    for (int h = 0; h < g.num_half_edges(); ++h) {
        int p = g.involution[h];
        if (p != h && g.vertex_of[p] == g.vertex_of[h]) return false;
    }
    return g.num_edges() == g.num_vertices() - 1;
}

bool is_stable_graph(const PrestableGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.genus[v] == 0 && g.valence(v) < 3) return false;
    return true;
}

bool is_semistable_graph(const PrestableGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.genus[v] == 0 && g.valence(v) < 2) return false;
    return true;
}

Decoration Decoration::trivial(const PrestableGraph& g) {
    Decoration d;
    d.psi.assign(g.num_half_edges(), 0);
    d.kappa.resize(g.num_vertices());
    return d;
}

bool Decoration::is_trivial() const {
    for (int e : psi)
        if (e) return false;
    for (auto& ks : kappa)
        if (!ks.empty()) return false;
    return true;
}

bool Decoration::trivial_at(int v, const PrestableGraph& g) const {
    if (!kappa[v].empty()) return false;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.vertex_of[h] == v && psi[h]) return false;
    return true;
}

int Decoration::degree() const {
    int d = std::accumulate(psi.begin(), psi.end(), 0);
    for (auto& ks : kappa)
        for (auto& [a, e] : ks) d += a * e;
    return d;
}

void Decoration::set_kappa(int v, int a, int e) {
    auto& ks = kappa[v];
    for (auto it = ks.begin(); it != ks.end(); ++it) {
        if (it->first == a) {
            if (e == 0)
                ks.erase(it);
            else
                it->second = e;
            return;
        }
    }
    if (e != 0) {
        ks.emplace_back(a, e);
        std::sort(ks.begin(), ks.end());
    }
}

int Decoration::kappa_exp(int v, int a) const {
    for (auto& [idx, e] : kappa[v])
        if (idx == a) return e;
    return 0;
}

void Decoration::sort_kappa() {
    for (auto& ks : kappa) std::sort(ks.begin(), ks.end());
}

} // namespace prestable
