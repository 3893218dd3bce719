#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "leavitt/poly.hpp"
#include "leavitt/session.hpp"

namespace leavitt {

/// Monomial p q* with r(p) = r(q); a vertex is the monomial with both parts
/// empty at that vertex.
class Monomial {
public:
    Monomial(Path real, Path ghost);
    static Monomial vertex(GraphPtr g, int v);

    const Path& real() const { return real_; }
    const Path& ghost() const { return ghost_; }
    bool is_vertex() const { return real_.empty() && ghost_.empty(); }
    int range_vertex() const { return real_.range(); }
    int source_vertex() const { return real_.source(); }
    int degree() const { return real_.length() - ghost_.length(); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.real_ == b.real_ && a.ghost_ == b.ghost_;
    }

private:
    Path real_;
    Path ghost_;
};

// (|p|+|q|, then edge-name sequence of p, then of q, then vertex name)
bool monomial_less(const Monomial& a, const Monomial& b);
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

using RawTerm = std::pair<Monomial, Scalar>;
using TermMap = std::map<Monomial, Scalar, MonomialLess>;

enum class ReduceStrategy { DepthFirst, BreadthFirst };

/// Element of L_K(E) in canonical normal form: a finite map from seam-free
/// monomials to nonzero scalars. Immutable value; all operations are pure.
class AlgebraElement {
public:
    static AlgebraElement zero(SessionPtr s);
    static AlgebraElement vertex(SessionPtr s, int v);
    static AlgebraElement edge(SessionPtr s, int e);
    static AlgebraElement ghost(SessionPtr s, int e);
    static AlgebraElement path(SessionPtr s, const Path& p);
    static AlgebraElement ghost_path(SessionPtr s, const Path& q); // the element q*
    static AlgebraElement monomial(SessionPtr s, const Monomial& m, const Scalar& k);
    static AlgebraElement identity(SessionPtr s); // sum of all vertices

    const SessionPtr& session() const { return session_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    Scalar coeff(const Monomial& m) const;

    AlgebraElement operator-() const;
    AlgebraElement scaled(const Scalar& k) const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement& operator+=(const AlgebraElement& b) { return *this = *this + b; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

private:
    friend AlgebraElement reduce_terms(const SessionPtr&, const std::vector<RawTerm>&,
                                       std::span<const int>, ReduceStrategy);
    AlgebraElement(SessionPtr s, TermMap t) : session_(std::move(s)), terms_(std::move(t)) {}
    SessionPtr session_;
    TermMap terms_;
};

// Canonical reduction of a raw combination: every special junction g g* at
// the p|q* seam is rewritten to v - sum over the other edges at v, recursively;
// like monomials merge, zero coefficients drop. The table gives the special
// edge per vertex; the strategy fixes the rewrite processing order.
AlgebraElement reduce_terms(const SessionPtr& s, const std::vector<RawTerm>& raw,
                            std::span<const int> special_table, ReduceStrategy strategy);
AlgebraElement normal_form(const SessionPtr& s, const std::vector<RawTerm>& raw);

// Term-by-term products of a and b after CK1 cancellation, before the seam
// rewriting (the oracle feeds these to different reduction procedures).
std::vector<RawTerm> product_raw_terms(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement involution(const AlgebraElement& x);
std::map<int, AlgebraElement> graded_parts(const AlgebraElement& x);

// a_0 v + a_1 c + ... + a_n c^n for a closed path c based at v
AlgebraElement eval_poly_at_cycle(const SessionPtr& s, const Poly& f, const Path& c);
// f(x) with x an arbitrary element; x^0 is the algebra identity
AlgebraElement eval_poly_at_element(const Poly& f, const AlgebraElement& x);

// Membership in the fixed subalgebra A_E(e1, e2) (generated by all vertices,
// all edges but e2, and all ghosts but e1*).
bool in_fixed_subalgebra(const AlgebraElement& x, int e1, int e2);
// The rose form A_{R_n}(e1, e2) with e1, e2 the first two declared petals;
// errors when the session graph is not the rose with n petals.
bool in_A_subalgebra(const AlgebraElement& x, int n);

} // namespace leavitt
