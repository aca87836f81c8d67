#pragma once

#include "prestable/linalg.hpp"
#include "prestable/substack.hpp"
#include "prestable/taut_class.hpp"

#include <map>
#include <vector>

namespace prestable {

// Monomial-level normal form test: kappa_2 powers at bare vertices, psi powers
// at 1- and 2-valent vertices (one side only for 2-valent), nothing at
// vertices with >= 3 half-edges.
bool is_normal_form(const DecoratedGraph& s);

// One additive generator: the expansion of an Aut-orbit of normal-form
// decorations on one graph, with 2-valent vertices carrying the signed
// binomials; sign-normalized so the smallest key has a positive coefficient.
struct BasisElement {
    TautClass cls;
    CanonicalKey leading;
    int edges = 0;
};

struct NormalFormBasis {
    Ambient amb;
    int degree = 0;
    std::vector<BasisElement> elems;
    // monomial key -> (element index, coefficient of that key inside the element)
    std::map<CanonicalKey, std::pair<int, Rat>> key_index;

    int size() const { return (int)elems.size(); }
};

NormalFormBasis enumerate_normal_form_basis(int n, int d, const SubstackSpec& spec);

// Coordinates of a class whose terms are all monomial-normal-form and allowed
// by the basis' spec. Throws when the class is not in the span.
SparseVec coordinates(const NormalFormBasis& basis, const TautClass& c);

// Drop terms not allowed by the spec (quotient by classes supported outside).
TautClass restrict_to_spec(const TautClass& c, const SubstackSpec& spec);

} // namespace prestable
