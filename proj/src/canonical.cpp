#include "prestable/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace prestable {

namespace {

// encoding built as int sequence, serialized 2 bytes per value
std::string serialize(const std::vector<int>& xs) {
    std::string s;
    s.reserve(xs.size() * 2);
    for (int x : xs) {
        if (x < 0 || x > 0xffff) throw std::runtime_error("encoding value out of range");
        s.push_back((char)(x >> 8));
        s.push_back((char)(x & 0xff));
    }
    return s;
}

struct Searcher {
    const PrestableGraph& g;
    const Decoration& d;
    const std::vector<int>& vtags;
    const std::vector<int>& htags;
    int nv, nh;
    std::vector<std::vector<int>> adj_halves;

    std::string best_enc;
    bool have_best = false;
    std::vector<std::vector<int>> best_orders;

    Searcher(const PrestableGraph& g_, const Decoration& d_, const std::vector<int>& vt,
             const std::vector<int>& ht)
        : g(g_), d(d_), vtags(vt), htags(ht) {
        nv = g.num_vertices();
        nh = g.num_half_edges();
        adj_halves.resize(nv);
        for (int h = 0; h < nh; ++h) adj_halves[g.vertex_of[h]].push_back(h);
    }

    std::vector<int> initial_colors() const {
        std::vector<std::string> tags(nv);
        for (int v = 0; v < nv; ++v) {
            std::ostringstream os;
            os << g.genus[v] << '|' << (int)g.rigid[v] << '|' << vtags[v] << '|'
               << adj_halves[v].size() << '|';
            std::vector<std::array<int, 3>> legs;
            int edge_halves = 0;
            for (int h : adj_halves[v]) {
                if (g.is_leg_half(h))
                    legs.push_back({g.leg_label_at(h), d.psi[h], htags[h]});
                else
                    ++edge_halves;
            }
            std::sort(legs.begin(), legs.end());
            for (auto& l : legs) os << l[0] << ',' << l[1] << ',' << l[2] << ';';
            os << '|' << edge_halves << '|';
            for (auto& [a, e] : d.kappa[v]) os << a << ',' << e << ';';
            tags[v] = os.str();
        }
        return intern(tags);
    }

    static std::vector<int> intern(const std::vector<std::string>& tags) {
        std::map<std::string, int> ids;
        for (auto& t : tags) ids.emplace(t, 0);
        int next = 0;
        for (auto& [t, id] : ids) id = next++;
        std::vector<int> out(tags.size());
        for (size_t i = 0; i < tags.size(); ++i) out[i] = ids.at(tags[i]);
        return out;
    }

    std::vector<int> refine(std::vector<int> colors) const {
        for (;;) {
            std::vector<std::string> tags(nv);
            for (int v = 0; v < nv; ++v) {
                std::vector<std::string> nbr;
                for (int h : adj_halves[v]) {
                    int p = g.involution[h];
                    if (p == h) continue;
                    std::ostringstream os;
                    os << d.psi[h] << ',' << htags[h] << ',' << d.psi[p] << ',' << htags[p] << ','
                       << colors[g.vertex_of[p]];
                    nbr.push_back(os.str());
                }
                std::sort(nbr.begin(), nbr.end());
                std::ostringstream os;
                os << colors[v] << '#';
                for (auto& s : nbr) os << s << ';';
                tags[v] = os.str();
            }
            auto next = intern(tags);
            int old_count = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
            int new_count = next.empty() ? 0 : *std::max_element(next.begin(), next.end()) + 1;
            if (new_count == old_count) return next;
            colors = std::move(next);
        }
    }

    std::string encode(const std::vector<int>& pos) const {
        std::vector<int> enc;
        enc.push_back(nv);
        enc.push_back(nh);
        enc.push_back(g.num_legs());
        std::vector<int> vert_at(nv);
        for (int v = 0; v < nv; ++v) vert_at[pos[v]] = v;
        for (int p = 0; p < nv; ++p) {
            int v = vert_at[p];
            enc.push_back(g.genus[v]);
            enc.push_back(g.rigid[v]);
            enc.push_back(vtags[v]);
            enc.push_back((int)d.kappa[v].size());
            for (auto& [a, e] : d.kappa[v]) {
                enc.push_back(a);
                enc.push_back(e);
            }
        }
        for (int i = 0; i < g.num_legs(); ++i) {
            int h = g.leg_half[i];
            enc.push_back(pos[g.vertex_of[h]]);
            enc.push_back(d.psi[h]);
            enc.push_back(htags[h]);
        }
        std::vector<std::array<int, 6>> edges;
        for (int h = 0; h < nh; ++h) {
            int p = g.involution[h];
            if (p <= h) continue;
            std::array<int, 3> sa = {pos[g.vertex_of[h]], d.psi[h], htags[h]};
            std::array<int, 3> sb = {pos[g.vertex_of[p]], d.psi[p], htags[p]};
            if (sb < sa) std::swap(sa, sb);
            edges.push_back({sa[0], sb[0], sa[1], sb[1], sa[2], sb[2]});
        }
        std::sort(edges.begin(), edges.end());
        for (auto& e : edges)
            for (int x : e) enc.push_back(x);
        return serialize(enc);
    }

    void search(std::vector<int> colors) {
        colors = refine(std::move(colors));
        std::vector<int> count(nv, 0);
        for (int c : colors) ++count[c];
        int target = -1;
        for (int c = 0; c < nv; ++c) {
            if (count[c] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            std::string enc = encode(colors);
            if (!have_best || enc < best_enc) {
                best_enc = enc;
                best_orders.clear();
                best_orders.push_back(colors);
                have_best = true;
            } else if (enc == best_enc) {
                best_orders.push_back(colors);
            }
            return;
        }
        for (int v = 0; v < nv; ++v) {
            if (colors[v] != target) continue;
            auto next = colors;
            for (int w = 0; w < nv; ++w)
                if (next[w] >= target) next[w] += 1;
            next[v] = target;
            search(std::move(next));
        }
    }
};

std::vector<int> canonical_half_order(const PrestableGraph& g, const Decoration& d,
                                      const std::vector<int>& htags,
                                      const std::vector<int>& pos) {
    std::vector<int> order;
    for (int i = 0; i < g.num_legs(); ++i) order.push_back(g.leg_half[i]);
    struct E {
        std::array<int, 6> rec;
        int first_half, second_half;
    };
    std::vector<E> edges;
    for (int h = 0; h < g.num_half_edges(); ++h) {
        int p = g.involution[h];
        if (p <= h) continue;
        std::array<int, 3> sa = {pos[g.vertex_of[h]], d.psi[h], htags[h]};
        std::array<int, 3> sb = {pos[g.vertex_of[p]], d.psi[p], htags[p]};
        int h1 = h, h2 = p;
        if (sb < sa) {
            std::swap(sa, sb);
            std::swap(h1, h2);
        }
        edges.push_back({{sa[0], sb[0], sa[1], sb[1], sa[2], sb[2]}, h1, h2});
    }
    std::stable_sort(edges.begin(), edges.end(), [](const E& x, const E& y) { return x.rec < y.rec; });
    for (auto& e : edges) {
        order.push_back(e.first_half);
        order.push_back(e.second_half);
    }
    return order;
}

DecoratedGraph build_canonical(const PrestableGraph& g, const Decoration& d,
                               const std::vector<int>& htags, const std::vector<int>& pos,
                               GraphIso& iso) {
    auto horder = canonical_half_order(g, d, htags, pos);
    std::vector<int> hpos(g.num_half_edges());
    for (int i = 0; i < (int)horder.size(); ++i) hpos[horder[i]] = i;

    DecoratedGraph out;
    int nv = g.num_vertices();
    out.graph.genus.resize(nv);
    out.graph.rigid.resize(nv);
    for (int v = 0; v < nv; ++v) {
        out.graph.genus[pos[v]] = g.genus[v];
        out.graph.rigid[pos[v]] = g.rigid[v];
    }
    out.graph.vertex_of.resize(g.num_half_edges());
    out.graph.involution.resize(g.num_half_edges());
    out.graph.leg_half.resize(g.num_legs());
    out.deco.psi.assign(g.num_half_edges(), 0);
    out.deco.kappa.resize(nv);
    for (int h = 0; h < g.num_half_edges(); ++h) {
        out.graph.vertex_of[hpos[h]] = pos[g.vertex_of[h]];
        out.graph.involution[hpos[h]] = hpos[g.involution[h]];
        out.deco.psi[hpos[h]] = d.psi[h];
    }
    for (int i = 0; i < g.num_legs(); ++i) out.graph.leg_half[i] = hpos[g.leg_half[i]];
    for (int v = 0; v < nv; ++v) out.deco.kappa[pos[v]] = d.kappa[v];
    iso.vertex_map = pos;
    iso.half_map = hpos;
    return out;
}

// vertex-fixing half-edge automorphisms: permutations of identical parallel
// edges and flips/permutations of self-loops with matching decorations
std::vector<std::vector<int>> residual_half_autos(const PrestableGraph& g, const Decoration& d,
                                                  const std::vector<int>& htags) {
    std::vector<std::vector<int>> maps;
    std::vector<int> id(g.num_half_edges());
    for (int h = 0; h < g.num_half_edges(); ++h) id[h] = h;
    maps.push_back(id);

    auto same_half = [&](int x, int y) { return d.psi[x] == d.psi[y] && htags[x] == htags[y]; };

    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> pairs;
    for (int h = 0; h < g.num_half_edges(); ++h) {
        int p = g.involution[h];
        if (p <= h) continue;
        int va = g.vertex_of[h], vb = g.vertex_of[p];
        int ha = h, hb = p;
        if (va > vb) {
            std::swap(va, vb);
            std::swap(ha, hb);
        }
        pairs[{va, vb}].push_back({ha, hb});
    }
    for (auto& [vp, es] : pairs) {
        bool self_loop = vp.first == vp.second;
        int m = (int)es.size();
        if (m < 2 && !self_loop) continue;
        std::vector<std::vector<int>> bundle_maps;
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        do {
            int flips_max = self_loop ? (1 << m) : 1;
            for (int fl = 0; fl < flips_max; ++fl) {
                bool ok = true;
                bool nontrivial = false;
                std::vector<std::pair<int, int>> out(m);
                for (int i = 0; i < m && ok; ++i) {
                    auto [a, b] = es[perm[i]];
                    if (fl & (1 << i)) std::swap(a, b);
                    if (!same_half(a, es[i].first) || !same_half(b, es[i].second)) ok = false;
                    out[i] = {a, b};
                    if (out[i] != es[i]) nontrivial = true;
                }
                if (!ok || !nontrivial) continue;
                std::vector<int> hm = id;
                for (int i = 0; i < m; ++i) {
                    hm[es[i].first] = out[i].first;
                    hm[es[i].second] = out[i].second;
                }
                bundle_maps.push_back(hm);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (bundle_maps.empty()) continue;
        std::vector<std::vector<int>> grown;
        for (auto& base : maps) {
            grown.push_back(base);
            for (auto& bm : bundle_maps) {
                std::vector<int> comp(g.num_half_edges());
                for (int h = 0; h < g.num_half_edges(); ++h) comp[h] = bm[base[h]];
                grown.push_back(comp);
            }
        }
        maps = std::move(grown);
    }
    return maps;
}

std::vector<int> zero_tags_v(const PrestableGraph& g) { return std::vector<int>(g.num_vertices(), 0); }
std::vector<int> zero_tags_h(const PrestableGraph& g) { return std::vector<int>(g.num_half_edges(), 0); }

} // namespace

CanonicalForm canonicalize_tagged(const PrestableGraph& g, const Decoration& d,
                                  const std::vector<int>& vertex_tags,
                                  const std::vector<int>& half_tags) {
    Searcher s(g, d, vertex_tags, half_tags);
    s.search(s.initial_colors());
    CanonicalForm cf;
    GraphIso iso;
    cf.canon = build_canonical(g, d, half_tags, s.best_orders.front(), iso);
    cf.key = s.best_enc;
    cf.to_canonical = iso;
    long residual = (long)residual_half_autos(g, d, half_tags).size();
    cf.aut_order = (long)s.best_orders.size() * residual;
    return cf;
}

CanonicalForm canonicalize(const PrestableGraph& g, const Decoration& d) {
    return canonicalize_tagged(g, d, zero_tags_v(g), zero_tags_h(g));
}

CanonicalForm canonicalize(const PrestableGraph& g) {
    return canonicalize(g, Decoration::trivial(g));
}

std::vector<GraphIso> automorphisms(const PrestableGraph& g, const Decoration& d) {
    auto vt = zero_tags_v(g);
    auto ht = zero_tags_h(g);
    Searcher s(g, d, vt, ht);
    s.search(s.initial_colors());
    std::vector<GraphIso> autos;
    GraphIso iso0;
    build_canonical(g, d, ht, s.best_orders.front(), iso0);
    auto res = residual_half_autos(g, d, ht);
    for (auto& order : s.best_orders) {
        GraphIso isoi;
        build_canonical(g, d, ht, order, isoi);
        std::vector<int> v_inv0(g.num_vertices()), h_inv0(g.num_half_edges());
        for (int v = 0; v < g.num_vertices(); ++v) v_inv0[iso0.vertex_map[v]] = v;
        for (int h = 0; h < g.num_half_edges(); ++h) h_inv0[iso0.half_map[h]] = h;
        GraphIso sigma;
        sigma.vertex_map.resize(g.num_vertices());
        sigma.half_map.resize(g.num_half_edges());
        for (int v = 0; v < g.num_vertices(); ++v) sigma.vertex_map[v] = v_inv0[isoi.vertex_map[v]];
        for (int h = 0; h < g.num_half_edges(); ++h) sigma.half_map[h] = h_inv0[isoi.half_map[h]];
        for (auto& r : res) {
            GraphIso full = sigma;
            for (int h = 0; h < g.num_half_edges(); ++h) full.half_map[h] = sigma.half_map[r[h]];
            autos.push_back(full);
        }
    }
    return autos;
}

std::vector<GraphIso> isomorphisms(const PrestableGraph& a, const Decoration& da,
                                   const PrestableGraph& b, const Decoration& db) {
    auto ca = canonicalize(a, da);
    auto cb = canonicalize(b, db);
    std::vector<GraphIso> out;
    if (ca.key != cb.key) return out;
    auto autos = automorphisms(ca.canon.graph, ca.canon.deco);
    std::vector<int> vb_inv(b.num_vertices()), hb_inv(b.num_half_edges());
    for (int v = 0; v < b.num_vertices(); ++v) vb_inv[cb.to_canonical.vertex_map[v]] = v;
    for (int h = 0; h < b.num_half_edges(); ++h) hb_inv[cb.to_canonical.half_map[h]] = h;
    for (auto& s : autos) {
        GraphIso m;
        m.vertex_map.resize(a.num_vertices());
        m.half_map.resize(a.num_half_edges());
        for (int v = 0; v < a.num_vertices(); ++v)
            m.vertex_map[v] = vb_inv[s.vertex_map[ca.to_canonical.vertex_map[v]]];
        for (int h = 0; h < a.num_half_edges(); ++h)
            m.half_map[h] = hb_inv[s.half_map[ca.to_canonical.half_map[h]]];
        out.push_back(m);
    }
    return out;
}

std::string key_to_hex(const CanonicalKey& k) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(k.size() * 2);
    for (unsigned char c : k) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 15]);
    }
    return s;
}

} // namespace prestable
