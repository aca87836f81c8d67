#pragma once

#include "prestable/canonical.hpp"
#include "prestable/graph.hpp"
#include "prestable/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace prestable {

// Ambient of a tautological class: genus 0 with n markings. When `moving` is
// set the highest marking is the moving point of the universal curve over the
// (n-1)-marked stack; rigid vertices may then appear in terms.
struct Ambient {
    int n = 0;
    bool moving = false;

    bool operator==(const Ambient&) const = default;
};

struct Term {
    Rat coeff;
    DecoratedGraph rep;  // canonical representative
};

// Finite rational linear combination of canonical decorated strata.
class TautClass {
public:
    TautClass() = default;
    explicit TautClass(Ambient a) : amb_(a) {}

    static TautClass zero(Ambient a) { return TautClass(a); }
    static TautClass fundamental(Ambient a);
    // single psi class at marking i (1-based)
    static TautClass psi(Ambient a, int i, int exp = 1);
    static TautClass kappa(Ambient a, int idx, int exp = 1);
    // boundary divisor with `side1` markings split off
    static TautClass divisor(Ambient a, const std::vector<int>& side1);
    // universal-curve section divisor D_{i,n}: rigid bubble with markings i and
    // the moving point. Requires amb.moving.
    static TautClass section_divisor(Ambient a, int i);

    const Ambient& ambient() const { return amb_; }
    const std::map<CanonicalKey, Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // canonicalizes, merges, drops zeros and point-supported decorations
    void add_term(const PrestableGraph& g, const Decoration& d, const Rat& c);
    void add(const TautClass& other);
    void sub(const TautClass& other);
    void scale(const Rat& c);

    TautClass operator+(const TautClass& o) const;
    TautClass operator-(const TautClass& o) const;
    TautClass operator*(const Rat& c) const;
    bool operator==(const TautClass& o) const;

    // pure codimension if all terms agree; nullopt for mixed or zero class
    std::optional<int> pure_codim() const;
    TautClass graded_part(int d) const;
    bool has_rigid_terms() const;

    // forget rigid markers is not allowed; this drops rigid-supported terms
    // (restriction from the universal curve to the open locus of plain curves)
    TautClass drop_rigid_terms() const;

private:
    Ambient amb_;
    std::map<CanonicalKey, Term> terms_;
};

TautClass make_class(Ambient a, const std::vector<std::pair<DecoratedGraph, Rat>>& parts);

} // namespace prestable
