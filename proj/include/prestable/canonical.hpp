#pragma once

#include "prestable/graph.hpp"

#include <string>
#include <vector>

namespace prestable {

// Total-order-comparable encoding of a decorated graph in canonical labeling.
// Equal keys <=> isomorphic as marked decorated graphs (rigid flags included).
using CanonicalKey = std::string;

struct GraphIso {
    std::vector<int> vertex_map;  // input vertex -> image vertex
    std::vector<int> half_map;    // input half-edge -> image half-edge
};

struct CanonicalForm {
    CanonicalKey key;
    DecoratedGraph canon;    // the canonical representative
    GraphIso to_canonical;   // relabeling input -> canon
    long aut_order;          // |Aut| of the decorated marked graph
};

CanonicalForm canonicalize(const PrestableGraph& g);
CanonicalForm canonicalize(const PrestableGraph& g, const Decoration& d);

// Canonicalization with extra integer colors on vertices and half-edges;
// used to dedup auxiliary structures (maps into fixed graphs) up to
// isomorphism. Keys are only comparable within one tagging scheme.
CanonicalForm canonicalize_tagged(const PrestableGraph& g, const Decoration& d,
                                  const std::vector<int>& vertex_tags,
                                  const std::vector<int>& half_tags);

// All automorphisms (vertex+half maps) of a decorated graph onto itself.
std::vector<GraphIso> automorphisms(const PrestableGraph& g, const Decoration& d);

// All isomorphisms a -> b (empty when none).
std::vector<GraphIso> isomorphisms(const PrestableGraph& a, const Decoration& da,
                                   const PrestableGraph& b, const Decoration& db);

std::string key_to_hex(const CanonicalKey& k);

} // namespace prestable
