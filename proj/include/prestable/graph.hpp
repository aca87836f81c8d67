#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prestable {

// Dual graph of a nodal marked curve. Half-edges are paired by an involution;
// fixed points are legs carrying the marking labels 1..n. Vertices carry a
// genus label. The `rigid` flag marks vertices whose moduli factor is the
// stable space rather than the prestable stack; such vertices appear only
// inside the universal-curve calculus (section and node bubbles) and always
// have exactly three half-edges, one of them the moving marking.
struct PrestableGraph {
    std::vector<int> genus;          // per vertex
    std::vector<uint8_t> rigid;      // per vertex, 0 or 1
    std::vector<int> vertex_of;      // per half-edge: incident vertex
    std::vector<int> involution;     // per half-edge: partner (self if leg)
    std::vector<int> leg_half;       // leg_half[i] = half-edge of marking i+1

    int num_vertices() const { return (int)genus.size(); }
    int num_half_edges() const { return (int)vertex_of.size(); }
    int num_legs() const { return (int)leg_half.size(); }
    int num_edges() const;

    bool is_leg_half(int h) const { return involution[h] == h; }
    // marking label (1-based) at half-edge h, or 0 if h is an edge half
    int leg_label_at(int h) const;
    // half-edges at vertex v, in index order
    std::vector<int> halves_at(int v) const;
    int valence(int v) const;

    bool any_rigid() const;

    static PrestableGraph trivial(int n, int g = 0);
    // one-edge graph: markings in `side1` on vertex 0, the rest on vertex 1
    static PrestableGraph one_edge(int n, const std::vector<int>& side1);
};

struct Violation {
    std::string what;
};

// ok iff all invariants hold: involution consistency, legs exactly {1..n},
// connectivity, genus condition, and in genus-0 mode tree-ness.
std::optional<Violation> validate(const PrestableGraph& g);
bool is_valid(const PrestableGraph& g);

// genus-0 check used by the algorithms: all vertex genera 0 and the graph a tree
bool is_genus_zero_tree(const PrestableGraph& g);

bool is_stable_graph(const PrestableGraph& g);      // every genus-0 vertex >= 3 half-edges
bool is_semistable_graph(const PrestableGraph& g);  // every genus-0 vertex >= 2 half-edges

// psi exponents per half-edge, kappa exponents per vertex as sorted (index, exp) lists
struct Decoration {
    std::vector<int> psi;                                  // size = num_half_edges
    std::vector<std::vector<std::pair<int, int>>> kappa;   // size = num_vertices

    static Decoration trivial(const PrestableGraph& g);
    bool is_trivial() const;
    bool trivial_at(int v, const PrestableGraph& g) const;
    int degree() const;  // sum of psi exponents + sum a*exp over kappa
    void set_kappa(int v, int a, int e);
    int kappa_exp(int v, int a) const;
    void sort_kappa();
};

struct DecoratedGraph {
    PrestableGraph graph;
    Decoration deco;

    int codim() const { return graph.num_edges() + deco.degree(); }
};

} // namespace prestable
