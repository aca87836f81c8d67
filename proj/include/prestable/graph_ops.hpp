#pragma once

#include "prestable/graph.hpp"

#include <vector>

namespace prestable {

// Structural surgery. All functions return fresh graphs; inputs are untouched.
// Maps from old to new indices are reported where callers need to transport
// decorations.

struct SurgeryResult {
    PrestableGraph graph;
    std::vector<int> half_map;    // old half -> new half (-1 if removed)
    std::vector<int> vertex_map;  // old vertex -> new vertex (-1 if removed)
};

// Contract the edge containing half-edge h (h must be an edge half). The two
// endpoints merge; a self-edge raises the genus of its vertex by one, which
// genus-0 callers must reject beforehand.
SurgeryResult contract_edge(const PrestableGraph& g, int h);

// Replace vertex v by two genus-0 vertices joined by a new edge, with the
// half-edges in `side1` on the first vertex and the rest of H(v) on the
// second. The two new edge halves are the last two of the result; vertex v
// keeps its index (side 1), side 2 becomes a new vertex at the end.
SurgeryResult split_vertex(const PrestableGraph& g, int v, const std::vector<int>& side1);

// Glue `inner` (with n(v) markings) into vertex v of `outer`.
// inner_marking_to_half[i] = the half-edge of H(v) that marking i+1 of the
// inner graph attaches to. Decorations transport via the returned maps.
struct InsertResult {
    PrestableGraph graph;
    std::vector<int> outer_half_map;   // old outer half -> new (-1 for removed halves of v)
    std::vector<int> outer_vertex_map; // old outer vertex -> new (-1 for v)
    std::vector<int> inner_half_map;   // inner half -> new (leg halves map to the glued halves)
    std::vector<int> inner_vertex_map; // inner vertex -> new
};
InsertResult insert_graph_at_vertex(const PrestableGraph& outer, int v,
                                    const PrestableGraph& inner,
                                    const std::vector<int>& inner_marking_to_half);

// Add a new marking with the next label at vertex v.
SurgeryResult add_leg(const PrestableGraph& g, int v);

// Remove the marking with the highest label (no contraction).
SurgeryResult forget_last_leg(const PrestableGraph& g);

} // namespace prestable
