#include "prestable/graph_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace prestable {

namespace {

// rebuild a graph keeping the half-edges for which keep[h], renumbering densely
SurgeryResult compact(const PrestableGraph& g, const std::vector<char>& keep_half,
                      const std::vector<int>& new_vertex_of, int new_nv,
                      const std::vector<int>& vertex_map) {
    SurgeryResult r;
    r.vertex_map = vertex_map;
    r.half_map.assign(g.num_half_edges(), -1);
    int next = 0;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (keep_half[h]) r.half_map[h] = next++;
    r.graph.genus.assign(new_nv, 0);
    r.graph.rigid.assign(new_nv, 0);
    r.graph.vertex_of.assign(next, -1);
    r.graph.involution.assign(next, -1);
    for (int h = 0; h < g.num_half_edges(); ++h) {
        if (!keep_half[h]) continue;
        r.graph.vertex_of[r.half_map[h]] = new_vertex_of[h];
        int p = g.involution[h];
        r.graph.involution[r.half_map[h]] = keep_half[p] ? r.half_map[p] : r.half_map[h];
    }
    r.graph.leg_half.resize(g.num_legs());
    for (int i = 0; i < g.num_legs(); ++i) {
        int h = g.leg_half[i];
        if (!keep_half[h]) throw std::logic_error("marking half removed");
        r.graph.leg_half[i] = r.half_map[h];
    }
    return r;
}

} // namespace

SurgeryResult contract_edge(const PrestableGraph& g, int h) {
    int p = g.involution[h];
    if (p == h) throw std::invalid_argument("cannot contract a leg");
    int va = g.vertex_of[h], vb = g.vertex_of[p];
    std::vector<int> vertex_map(g.num_vertices());
    int new_nv;
    bool self_edge = (va == vb);
    if (self_edge) {
        for (int v = 0; v < g.num_vertices(); ++v) vertex_map[v] = v;
        new_nv = g.num_vertices();
    } else {
        int lo = std::min(va, vb), hi = std::max(va, vb);
        new_nv = g.num_vertices() - 1;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (v == hi)
                vertex_map[v] = lo;
            else
                vertex_map[v] = v - (v > hi ? 1 : 0);
        }
    }
    std::vector<char> keep(g.num_half_edges(), 1);
    keep[h] = keep[p] = 0;
    std::vector<int> nvo(g.num_half_edges(), -1);
    for (int x = 0; x < g.num_half_edges(); ++x)
        if (keep[x]) nvo[x] = vertex_map[g.vertex_of[x]];
    auto r = compact(g, keep, nvo, new_nv, vertex_map);
    for (int v = 0; v < g.num_vertices(); ++v) {
        int w = vertex_map[v];
        r.graph.genus[w] += 0;  // accumulate below
    }
    // genus: merged vertex gets the sum; self-edge adds one
    std::vector<int> genus_acc(new_nv, 0);
    std::vector<char> seen(new_nv, 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        int w = vertex_map[v];
        if (self_edge) {
            genus_acc[w] = g.genus[v];
        } else {
            genus_acc[w] += g.genus[v];
        }
        r.graph.rigid[w] |= g.rigid[v];
        seen[w] = 1;
    }
    if (self_edge) genus_acc[vertex_map[va]] += 1;
    r.graph.genus = genus_acc;
    return r;
}

SurgeryResult split_vertex(const PrestableGraph& g, int v, const std::vector<int>& side1) {
    std::vector<char> on1(g.num_half_edges(), 0);
    for (int h : side1) {
        if (h < 0 || h >= g.num_half_edges() || g.vertex_of[h] != v)
            throw std::invalid_argument("split side contains a foreign half-edge");
        on1[h] = 1;
    }
    SurgeryResult r;
    int nv = g.num_vertices();
    int v2 = nv;  // new vertex
    r.vertex_map.resize(nv);
    for (int w = 0; w < nv; ++w) r.vertex_map[w] = w;
    r.graph.genus = g.genus;
    r.graph.genus[v] = 0;
    r.graph.genus.push_back(0);
    r.graph.rigid = g.rigid;
    r.graph.rigid.push_back(0);
    r.graph.vertex_of = g.vertex_of;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.vertex_of[h] == v && !on1[h]) r.graph.vertex_of[h] = v2;
    r.graph.involution = g.involution;
    r.graph.leg_half = g.leg_half;
    r.half_map.resize(g.num_half_edges());
    for (int h = 0; h < g.num_half_edges(); ++h) r.half_map[h] = h;
    int ha = g.num_half_edges(), hb = ha + 1;
    r.graph.vertex_of.push_back(v);
    r.graph.vertex_of.push_back(v2);
    r.graph.involution.push_back(hb);
    r.graph.involution.push_back(ha);
    return r;
}

InsertResult insert_graph_at_vertex(const PrestableGraph& outer, int v,
                                    const PrestableGraph& inner,
                                    const std::vector<int>& inner_marking_to_half) {
    if ((int)inner_marking_to_half.size() != inner.num_legs())
        throw std::invalid_argument("marking/half-edge arity mismatch");
    auto hv = outer.halves_at(v);
    if ((int)hv.size() != inner.num_legs())
        throw std::invalid_argument("vertex valence does not match inner markings");
    {
        std::vector<char> used(outer.num_half_edges(), 0);
        for (int h : inner_marking_to_half) {
            if (h < 0 || h >= outer.num_half_edges() || outer.vertex_of[h] != v || used[h])
                throw std::invalid_argument("bad half-edge matching");
            used[h] = 1;
        }
    }
    InsertResult r;
    int onv = outer.num_vertices();
    int inv_count = inner.num_vertices();
    // new vertices: outer vertices except v keep slots (shifted), inner appended
    r.outer_vertex_map.assign(onv, -1);
    int next_v = 0;
    for (int w = 0; w < onv; ++w)
        if (w != v) r.outer_vertex_map[w] = next_v++;
    r.inner_vertex_map.resize(inv_count);
    for (int w = 0; w < inv_count; ++w) r.inner_vertex_map[w] = next_v++;
    r.graph.genus.assign(next_v, 0);
    r.graph.rigid.assign(next_v, 0);
    for (int w = 0; w < onv; ++w) {
        if (w == v) continue;
        r.graph.genus[r.outer_vertex_map[w]] = outer.genus[w];
        r.graph.rigid[r.outer_vertex_map[w]] = outer.rigid[w];
    }
    for (int w = 0; w < inv_count; ++w) {
        r.graph.genus[r.inner_vertex_map[w]] = inner.genus[w];
        r.graph.rigid[r.inner_vertex_map[w]] = inner.rigid[w];
    }
    // half-edges: outer halves not at v keep identity-ish slots; halves at v are
    // replaced by the inner leg halves they match; inner non-leg halves appended
    r.outer_half_map.assign(outer.num_half_edges(), -1);
    r.inner_half_map.assign(inner.num_half_edges(), -1);
    int next_h = 0;
    for (int h = 0; h < outer.num_half_edges(); ++h)
        if (outer.vertex_of[h] != v) r.outer_half_map[h] = next_h++;
    for (int h = 0; h < inner.num_half_edges(); ++h) r.inner_half_map[h] = next_h++;
    // matched pairs: outer half o (at v) is glued to inner leg half; the glued
    // half-edge lives at the inner leg's vertex and inherits o's pairing
    // identify: new id of outer-half-at-v = new id of the inner leg half
    for (int m = 0; m < inner.num_legs(); ++m) {
        int o = inner_marking_to_half[m];
        int ih = inner.leg_half[m];
        r.outer_half_map[o] = r.inner_half_map[ih];
    }
    r.graph.vertex_of.assign(next_h, -1);
    r.graph.involution.assign(next_h, -1);
    for (int h = 0; h < inner.num_half_edges(); ++h) {
        r.graph.vertex_of[r.inner_half_map[h]] = r.inner_vertex_map[inner.vertex_of[h]];
        int p = inner.involution[h];
        if (p != h) r.graph.involution[r.inner_half_map[h]] = r.inner_half_map[p];
    }
    for (int h = 0; h < outer.num_half_edges(); ++h) {
        if (outer.vertex_of[h] != v) {
            r.graph.vertex_of[r.outer_half_map[h]] = r.outer_vertex_map[outer.vertex_of[h]];
        }
        int p = outer.involution[h];
        if (p == h) {
            // outer leg (possibly re-seated on an inner vertex via matching)
            if (outer.vertex_of[h] != v) r.graph.involution[r.outer_half_map[h]] = r.outer_half_map[h];
            else r.graph.involution[r.outer_half_map[h]] = r.outer_half_map[h];
        } else {
            r.graph.involution[r.outer_half_map[h]] = r.outer_half_map[p];
        }
    }
    r.graph.leg_half.resize(outer.num_legs());
    for (int i = 0; i < outer.num_legs(); ++i)
        r.graph.leg_half[i] = r.outer_half_map[outer.leg_half[i]];
    return r;
}

SurgeryResult add_leg(const PrestableGraph& g, int v) {
    SurgeryResult r;
    r.graph = g;
    r.vertex_map.resize(g.num_vertices());
    for (int w = 0; w < g.num_vertices(); ++w) r.vertex_map[w] = w;
    r.half_map.resize(g.num_half_edges());
    for (int h = 0; h < g.num_half_edges(); ++h) r.half_map[h] = h;
    int h = g.num_half_edges();
    r.graph.vertex_of.push_back(v);
    r.graph.involution.push_back(h);
    r.graph.leg_half.push_back(h);
    return r;
}

SurgeryResult forget_last_leg(const PrestableGraph& g) {
    if (g.num_legs() == 0) throw std::invalid_argument("no marking to forget");
    int h = g.leg_half.back();
    std::vector<char> keep(g.num_half_edges(), 1);
    keep[h] = 0;
    std::vector<int> vm(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) vm[v] = v;
    std::vector<int> nvo(g.num_half_edges(), -1);
    for (int x = 0; x < g.num_half_edges(); ++x)
        if (keep[x]) nvo[x] = g.vertex_of[x];
    PrestableGraph tmp = g;
    tmp.leg_half.pop_back();
    auto r = compact(tmp, keep, nvo, g.num_vertices(), vm);
    r.graph.genus = g.genus;
    r.graph.rigid = g.rigid;
    return r;
}

} // namespace prestable
