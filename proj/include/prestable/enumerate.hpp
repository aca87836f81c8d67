#pragma once

#include "prestable/canonical.hpp"
#include "prestable/graph.hpp"

#include <functional>
#include <vector>

namespace prestable {

// All genus-0 n-marked trees with exactly p edges, one canonical representative
// per isomorphism class, sorted by canonical key. No stability condition.
std::vector<PrestableGraph> enumerate_graphs(int n, int p);

// The subset of enumerate_graphs(n, p) passing `filter` at every contraction
// level is not needed; plain filter of the full list.
std::vector<PrestableGraph> enumerate_graphs_filtered(
    int n, int p, const std::function<bool(const PrestableGraph&)>& filter);

// Stable genus-0 graphs (every vertex >= 3 half-edges), canonical reps.
std::vector<PrestableGraph> enumerate_stable_graphs(int n, int p);

} // namespace prestable
