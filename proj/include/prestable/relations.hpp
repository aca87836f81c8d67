#pragma once

#include "prestable/linalg.hpp"
#include "prestable/normal_form.hpp"

#include <vector>

namespace prestable {

// Relation obtained by splitting vertex v of (g, d) along the WDVV exchange of
// the four half-edges (h1 h2 | h3 h4) - (h1 h3 | h2 h4), summed over all
// distributions of the remaining half-edges of v. Every term is normal form.
TautClass wdvv_on_vertex(const PrestableGraph& g, const Decoration& d, int v,
                         const std::array<int, 4>& quad);

struct RelationSet {
    NormalFormBasis basis;            // not owned conceptually, copied for simplicity
    SparseRationalMatrix matrix;      // rows = relation vectors over the basis
};

// All WDVV relations in degree d over the given basis, deduplicated.
SparseRationalMatrix enumerate_wdvv_relations(int n, int d, const SubstackSpec& spec,
                                              const NormalFormBasis& basis);

int chow_rank(int n, int d, const SubstackSpec& spec);

// Hilbert coefficients h_0..h_D of the open substack.
std::vector<long> hilbert_coefficients(int n, const SubstackSpec& spec, int D);

// True iff the class vanishes in the Chow group of the substack: its
// normalization lies in the WDVV span at its degree.
bool is_zero(const TautClass& c, const SubstackSpec& spec);
bool is_zero(const TautClass& c);

} // namespace prestable
