#include "prestable/enumerate.hpp"

#include "prestable/graph_ops.hpp"

#include <map>
#include <stdexcept>

namespace prestable {

namespace {

// children of g under one vertex split, deduped by caller
void emit_splits(const PrestableGraph& g, const std::function<void(PrestableGraph&&)>& sink) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto hv = g.halves_at(v);
        int k = (int)hv.size();
        // subsets of H(v) for side 1; complement-symmetric duplicates are
        // harmless because the caller dedups by canonical key
        for (long mask = 0; mask < (1L << k); ++mask) {
            std::vector<int> side1;
            for (int i = 0; i < k; ++i)
                if (mask & (1L << i)) side1.push_back(hv[i]);
            auto r = split_vertex(g, v, side1);
            sink(std::move(r.graph));
        }
    }
}

std::vector<PrestableGraph> grow(const std::vector<PrestableGraph>& level,
                                 const std::function<bool(const PrestableGraph&)>& keep) {
    std::map<CanonicalKey, PrestableGraph> out;
    for (const auto& g : level) {
        emit_splits(g, [&](PrestableGraph&& child) {
            if (!keep(child)) return;
            auto cf = canonicalize(child);
            out.emplace(cf.key, cf.canon.graph);
        });
    }
    std::vector<PrestableGraph> v;
    v.reserve(out.size());
    for (auto& [k, g] : out) v.push_back(g);
    return v;
}

} // namespace

std::vector<PrestableGraph> enumerate_graphs(int n, int p) {
    if (n < 0 || p < 0) throw std::invalid_argument("negative arguments");
    std::vector<PrestableGraph> level = {PrestableGraph::trivial(n)};
    for (int e = 1; e <= p; ++e)
        level = grow(level, [](const PrestableGraph&) { return true; });
    return level;
}

std::vector<PrestableGraph> enumerate_graphs_filtered(
    int n, int p, const std::function<bool(const PrestableGraph&)>& filter) {
    auto all = enumerate_graphs(n, p);
    std::vector<PrestableGraph> out;
    for (auto& g : all)
        if (filter(g)) out.push_back(g);
    return out;
}

std::vector<PrestableGraph> enumerate_stable_graphs(int n, int p) {
    // growing within the stable world is complete: contracting an edge of a
    // stable graph is stable, so every stable (n,p) graph arises by splitting
    // a stable (n,p-1) graph into two stable sides
    std::vector<PrestableGraph> level = {PrestableGraph::trivial(n)};
    if (!is_stable_graph(level[0])) {
        if (p == 0) return {};
        // n < 3: no stable graphs at all in genus 0
        return {};
    }
    for (int e = 1; e <= p; ++e)
        level = grow(level, [](const PrestableGraph& g) { return is_stable_graph(g); });
    return level;
}

} // namespace prestable
