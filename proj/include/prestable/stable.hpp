#pragma once

#include "prestable/linalg.hpp"
#include "prestable/taut_class.hpp"

#include <optional>
#include <vector>

namespace prestable {

// The stable-curve side: Kontsevich-Manin strata basis and WDVV relations on
// the moduli of stable curves, restriction of prestable classes, and the rank
// of the image of the forgetful-chart pullback.

// canonical stable N-marked genus-0 graphs with d edges, sorted by key
std::vector<PrestableGraph> stable_basis_graphs(int N, int d);

struct StableBasis {
    int N = 0, d = 0;
    std::vector<PrestableGraph> graphs;
    std::map<CanonicalKey, int> index;
};
StableBasis stable_basis(int N, int d);

SparseRationalMatrix stable_wdvv_relations(const StableBasis& basis);

// Drop unstable-graph terms and rewrite psi/kappa decorations into boundary
// strata; the result is a pure boundary combination on the stable space.
TautClass restrict_to_stable(const TautClass& c);

// F_m^* then restriction: the stable class of the chart pullback.
TautClass forgetful_chart_pullback(const TautClass& c, int m);

SparseVec stable_coordinates(const StableBasis& basis, const TautClass& c);

// zero in CH(stable space) modulo the KM relations
bool stable_is_zero(const TautClass& c);

// rank of F_m^*(CH^d of the n-marked prestable stack) inside the stable Chow
// group, computed modulo stable WDVV relations; nullopt when the target Chow
// group vanishes for dimension reasons (n+m < 3 or d > n+m-3)
std::optional<int> image_rank(int n, int d, int m);

// classical forgetful pullback on the stable spaces (forget-and-stabilize),
// used for two-route comparisons; input and output are stable classes
TautClass stable_forgetful_pullback(const TautClass& c);

// kappa_a on the N-marked stable space as a pure boundary class
TautClass stable_kappa_boundary(int N, int a);
// psi_i likewise
TautClass stable_psi_boundary(int N, int i);

} // namespace prestable
