#include "prestable/substack.hpp"

#include "prestable/enumerate.hpp"
#include "prestable/graph_ops.hpp"

#include <stdexcept>

namespace prestable {

SubstackSpec SubstackSpec::all() {
    return {"all", [](const PrestableGraph&) { return true; }};
}

SubstackSpec SubstackSpec::max_edges(int e) {
    return {"max-edges:" + std::to_string(e),
            [e](const PrestableGraph& g) { return g.num_edges() <= e; }};
}

SubstackSpec SubstackSpec::stable_only() {
    return {"stable", [](const PrestableGraph& g) { return is_stable_graph(g); }};
}

SubstackSpec SubstackSpec::semistable() {
    return {"chains", [](const PrestableGraph& g) { return is_semistable_graph(g); }};
}

SubstackSpec SubstackSpec::oesinghaus_chains() {
    // the allowed graphs are chains: all vertices of valence <= 3 arranged in a
    // path, legs 2 and 3 on one end vertex, leg 1 on the other (n = 3); for the
    // trivial graph the single vertex carries all legs
    return {"oesinghaus", [](const PrestableGraph& g) {
                if (g.num_legs() != 3) return false;
                if (!is_genus_zero_tree(g)) return false;
                int v23 = g.vertex_of[g.leg_half[1]];
                if (g.vertex_of[g.leg_half[2]] != v23) return false;
                int v1 = g.vertex_of[g.leg_half[0]];
                if (g.num_vertices() == 1) return true;
                // path shape: every vertex has at most 2 edge-halves, ends are v1 and v23
                for (int v = 0; v < g.num_vertices(); ++v) {
                    int edge_halves = 0;
                    int legs = 0;
                    for (int h = 0; h < g.num_half_edges(); ++h) {
                        if (g.vertex_of[h] != v) continue;
                        if (g.is_leg_half(h))
                            ++legs;
                        else
                            ++edge_halves;
                    }
                    if (edge_halves > 2) return false;
                    if (edge_halves == 2 && legs > 0) return false;  // interior vertices bare
                    if (edge_halves == 1) {
                        // an end: must be v1 (one leg) or v23 (two legs)
                        if (v == v1 && legs == 1) continue;
                        if (v == v23 && legs == 2) continue;
                        return false;
                    }
                }
                return v1 != v23;
            }};
}

SubstackSpec SubstackSpec::by_name(const std::string& name) {
    if (name == "all") return all();
    if (name == "stable") return stable_only();
    if (name == "chains" || name == "semistable") return semistable();
    if (name == "oesinghaus") return oesinghaus_chains();
    const std::string prefix = "max-edges:";
    if (name.rfind(prefix, 0) == 0) {
        int e = std::stoi(name.substr(prefix.size()));
        if (e < 0) throw std::invalid_argument("max-edges must be nonnegative");
        return max_edges(e);
    }
    throw std::invalid_argument("unknown substack spec: " + name);
}

void validate_spec(const SubstackSpec& spec, int n, int max_edges) {
    for (int p = 1; p <= max_edges; ++p) {
        for (const auto& g : enumerate_graphs(n, p)) {
            if (!spec.allows(g)) continue;
            for (int h = 0; h < g.num_half_edges(); ++h) {
                if (g.involution[h] <= h) continue;
                auto c = contract_edge(g, h);
                if (!spec.allows(c.graph))
                    throw std::invalid_argument("substack spec is not contraction-closed: " +
                                                spec.name);
            }
        }
    }
}

} // namespace prestable
