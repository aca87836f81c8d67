#pragma once

#include "prestable/graph.hpp"

#include <functional>
#include <memory>
#include <string>

namespace prestable {

// An open union of strata, described by the set of allowed graphs. Openness is
// equivalent to closure under edge contraction, which validate_spec checks
// exhaustively up to a given edge count.
struct SubstackSpec {
    std::string name;
    std::function<bool(const PrestableGraph&)> allows;

    static SubstackSpec all();
    static SubstackSpec max_edges(int e);
    static SubstackSpec stable_only();
    static SubstackSpec semistable();  // every vertex with >= 2 half-edges
    // chains with legs 2,3 together on one end and leg 1 on the other (n = 3),
    // and plain marked chains for n = 2
    static SubstackSpec oesinghaus_chains();
    // named lookup: all | max-edges:E | stable | chains (= semistable) | oesinghaus
    static SubstackSpec by_name(const std::string& name);
};

// throws std::invalid_argument when some allowed graph with <= max_edges edges
// has a disallowed contraction
void validate_spec(const SubstackSpec& spec, int n, int max_edges);

} // namespace prestable
