#include "prestable/taut_class.hpp"

#include <stdexcept>

namespace prestable {

TautClass TautClass::fundamental(Ambient a) {
    TautClass c(a);
    auto g = PrestableGraph::trivial(a.n);
    c.add_term(g, Decoration::trivial(g), 1);
    return c;
}

TautClass TautClass::psi(Ambient a, int i, int exp) {
    if (i < 1 || i > a.n) throw std::invalid_argument("psi marking out of range");
    TautClass c(a);
    auto g = PrestableGraph::trivial(a.n);
    auto d = Decoration::trivial(g);
    d.psi[g.leg_half[i - 1]] = exp;
    c.add_term(g, d, 1);
    return c;
}

TautClass TautClass::kappa(Ambient a, int idx, int exp) {
    if (idx < 0) throw std::invalid_argument("kappa index negative");
    TautClass c(a);
    auto g = PrestableGraph::trivial(a.n);
    auto d = Decoration::trivial(g);
    if (idx == 0) {
        // kappa_0 = 2g-2+n is a scalar
        c.add_term(g, d, a.n - 2);
        return c;
    }
    d.set_kappa(0, idx, exp);
    c.add_term(g, d, 1);
    return c;
}

TautClass TautClass::divisor(Ambient a, const std::vector<int>& side1) {
    TautClass c(a);
    auto g = PrestableGraph::one_edge(a.n, side1);
    c.add_term(g, Decoration::trivial(g), 1);
    return c;
}

TautClass TautClass::section_divisor(Ambient a, int i) {
    if (!a.moving) throw std::invalid_argument("section divisor needs a moving marking");
    if (i < 1 || i >= a.n) throw std::invalid_argument("section marking out of range");
    TautClass c(a);
    auto g = PrestableGraph::one_edge(a.n, {i, a.n});
    g.rigid[0] = 1;
    c.add_term(g, Decoration::trivial(g), 1);
    return c;
}

namespace {

// decorated rigid vertices are supported on a point: any nontrivial local
// decoration kills the term
bool rigid_kills(const PrestableGraph& g, const Decoration& d) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!g.rigid[v]) continue;
        if (!d.trivial_at(v, g)) return true;
    }
    return false;
}

} // namespace

void TautClass::add_term(const PrestableGraph& g, const Decoration& d, const Rat& c) {
    if (c == 0) return;
    if (g.num_legs() != amb_.n) throw std::invalid_argument("term has wrong marking count");
    if (g.any_rigid()) {
        if (!amb_.moving) throw std::invalid_argument("rigid vertex outside the curve calculus");
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.rigid[v] && g.valence(v) != 3)
                throw std::invalid_argument("rigid vertex must be trivalent");
        if (rigid_kills(g, d)) return;
    }
    auto cf = canonicalize(g, d);
    auto it = terms_.find(cf.key);
    if (it == terms_.end()) {
        terms_.emplace(cf.key, Term{c, cf.canon});
    } else {
        it->second.coeff += c;
        if (it->second.coeff == 0) terms_.erase(it);
    }
}

void TautClass::add(const TautClass& other) {
    if (!(other.amb_ == amb_)) throw std::invalid_argument("ambient mismatch");
    for (auto& [k, t] : other.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, t);
        } else {
            it->second.coeff += t.coeff;
            if (it->second.coeff == 0) terms_.erase(it);
        }
    }
}

void TautClass::sub(const TautClass& other) {
    TautClass neg = other;
    neg.scale(-1);
    add(neg);
}

void TautClass::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [k, t] : terms_) t.coeff *= c;
}

TautClass TautClass::operator+(const TautClass& o) const {
    TautClass r = *this;
    r.add(o);
    return r;
}

TautClass TautClass::operator-(const TautClass& o) const {
    TautClass r = *this;
    r.sub(o);
    return r;
}

TautClass TautClass::operator*(const Rat& c) const {
    TautClass r = *this;
    r.scale(c);
    return r;
}

bool TautClass::operator==(const TautClass& o) const {
    if (!(amb_ == o.amb_) || terms_.size() != o.terms_.size()) return false;
    for (auto& [k, t] : terms_) {
        auto it = o.terms_.find(k);
        if (it == o.terms_.end() || it->second.coeff != t.coeff) return false;
    }
    return true;
}

std::optional<int> TautClass::pure_codim() const {
    std::optional<int> d;
    for (auto& [k, t] : terms_) {
        int c = t.rep.codim();
        if (!d)
            d = c;
        else if (*d != c)
            return std::nullopt;
    }
    return d;
}

TautClass TautClass::graded_part(int d) const {
    TautClass out(amb_);
    for (auto& [k, t] : terms_)
        if (t.rep.codim() == d) out.terms_.emplace(k, t);
    return out;
}

bool TautClass::has_rigid_terms() const {
    for (auto& [k, t] : terms_)
        if (t.rep.graph.any_rigid()) return true;
    return false;
}

TautClass TautClass::drop_rigid_terms() const {
    TautClass out(amb_);
    for (auto& [k, t] : terms_)
        if (!t.rep.graph.any_rigid()) out.terms_.emplace(k, t);
    return out;
}

TautClass make_class(Ambient a, const std::vector<std::pair<DecoratedGraph, Rat>>& parts) {
    TautClass c(a);
    for (auto& [dg, coeff] : parts) c.add_term(dg.graph, dg.deco, coeff);
    return c;
}

} // namespace prestable
