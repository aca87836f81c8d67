#pragma once

#include "prestable/taut_class.hpp"

#include <vector>

namespace prestable {

// ---- products -------------------------------------------------------------

// A common degeneration of A and B in which every edge comes from A or B,
// together with the two structure maps and the shared edges.
struct GenericStructure {
    PrestableGraph gamma;               // includes the valuation's rigid flags
    std::vector<int> a_vertex_image;    // V(gamma) -> V(A)
    std::vector<int> b_vertex_image;    // V(gamma) -> V(B)
    std::vector<int> a_half_source;     // H(gamma) -> half of A or -1
    std::vector<int> b_half_source;     // H(gamma) -> half of B or -1
    std::vector<std::pair<int, int>> shared_edges;  // half pairs (h, iota h) from both
};

// One representative per isomorphism class of generic (A,B)-structure. In a
// moving-point ambient the admissible rigid valuations are enumerated and
// inconsistent ones discarded.
std::vector<GenericStructure> generic_structures(const PrestableGraph& a,
                                                 const PrestableGraph& b, bool moving);

TautClass product(const TautClass& c1, const TautClass& c2);

// Push classes at the vertices of `outer` forward along the gluing map.
// at_vertex[v] lives on ambient (0, n(v)); its marking j corresponds to the
// j-th element of outer.halves_at(v).
TautClass gluing_pushforward(const PrestableGraph& outer,
                             const std::vector<TautClass>& at_vertex);

// ---- forgetful maps (universal curve) --------------------------------------

// reinterpret a plain class on n markings as a class on the universal curve
// over n-1 markings (the last marking becomes the moving point)
TautClass as_curve_class(const TautClass& c);

// pullback along the universal curve; output ambient has a moving marking
TautClass forgetful_pullback(const TautClass& c);

// pushforward along the universal curve; input must have a moving marking
TautClass forgetful_pushforward(const TautClass& c);

// pullback along the forgetful chart F_1 (no stabilization): psi classes are
// unchanged, kappa_a picks up -psi_new^a, graphs gain the new leg vertex-wise
TautClass chart_pullback(const TautClass& c);
TautClass chart_pullback(const TautClass& c, int m);

// ---- psi/kappa boundary expressions ----------------------------------------

// boundary expression of psi_i (n >= 3) resp. of psi_1 + psi_2 (n = 2)
TautClass psi_to_boundary(int n, int i);

// class equal to kappa_a, supported on preferred generators plus boundary
TautClass kappa_to_preferred(int n, int a);

// rewrite every term into monomial normal form (kappa_2 powers at bare
// vertices, one- or two-sided psi data resolved, nothing at >= 3-valent)
TautClass normalize(const TautClass& c);

// ---- stabilization pullback -------------------------------------------------

// st^* of a stable pure-boundary-with-decorations class; kappa factors use the
// exponential-series formula truncated at the class degree
TautClass stabilization_pullback(const TautClass& c);

// st^* kappa_a and st^* psi_i on the n-marked ambient
TautClass st_pullback_kappa(int n, int a);
TautClass st_pullback_psi(int n, int i);

} // namespace prestable
