#pragma once

#include <map>
#include <memory>
#include <optional>

#include "leavitt/morphism.hpp"

namespace leavitt {

/// The pair (c, f) defining the simple module S^f_c: c a simple closed path
/// based at v, f irreducible in the normalized form 1 - a_1 x - ... - a_n x^n.
/// The generator z satisfies z = c f_1(c) z, equivalently f(c) z = 0.
class SfcSpec {
public:
    SfcSpec(SessionPtr s, Path cycle, IrrPoly f);

    const SessionPtr& session() const { return session_; }
    const Path& cycle() const { return cycle_; }
    int base_vertex() const { return cycle_.source(); }
    const IrrPoly& f() const { return qf_->modulus(); }
    const QfPtr& qf() const { return qf_; }
    // c acts as x on the K[c]/(f) line; x is invertible since f(0) = 1
    const Residue& x_residue() const { return x_; }
    const Residue& x_inverse() const { return xinv_; }

    friend bool operator==(const SfcSpec& a, const SfcSpec& b) {
        return *a.session_ == *b.session_ && a.cycle_ == b.cycle_ && a.f() == b.f();
    }

private:
    SessionPtr session_;
    Path cycle_;
    QfPtr qf_;
    Residue x_, xinv_;
};

using SfcSpecPtr = std::shared_ptr<const SfcSpec>;

inline SfcSpecPtr make_sfc(SessionPtr s, Path cycle, IrrPoly f) {
    return std::make_shared<const SfcSpec>(std::move(s), std::move(cycle), std::move(f));
}

/// Element of S^f_c: finite map from canonical index paths alpha (r(alpha) =
/// s(c), no trailing full copy of c) to nonzero residues in K[x]/(f).
class SfcElement {
public:
    using Terms = std::map<Path, Residue, PathLess>;

    static SfcElement zero(SfcSpecPtr spec);
    static SfcElement generator(SfcSpecPtr spec); // z = {vertex path -> 1}
    static SfcElement unit(SfcSpecPtr spec, const Path& alpha, const Residue& u);

    const SfcSpecPtr& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SfcElement operator-() const;
    friend SfcElement operator+(const SfcElement& a, const SfcElement& b);
    friend SfcElement operator-(const SfcElement& a, const SfcElement& b);
    friend bool operator==(const SfcElement& a, const SfcElement& b);
    friend bool operator!=(const SfcElement& a, const SfcElement& b) { return !(a == b); }

private:
    friend SfcElement sfc_canonicalize(const SfcSpecPtr&, const std::map<Path, Residue, PathLess>&);
    friend SfcElement sfc_act(const AlgebraElement&, const SfcElement&);
    friend SfcElement sfc_endo(const Residue&, const SfcElement&);
    SfcElement(SfcSpecPtr spec, Terms t) : spec_(std::move(spec)), terms_(std::move(t)) {}
    SfcSpecPtr spec_;
    Terms terms_;
};

// Strip trailing copies of c from every index, multiplying the residue by x
// per stripped copy; merge like indices; drop zeros.
SfcElement sfc_canonicalize(const SfcSpecPtr& spec, const std::map<Path, Residue, PathLess>& raw);

// Left action of an algebra element. Edges prepend, ghosts strip, and on the
// generator line e* z unrolls through z = c f_1(c) z (the residue picks up
// x^{-1} per unrolled period).
SfcElement sfc_act(const AlgebraElement& r, const SfcElement& m);

// The twisted module S^{f,p}_c: r * m = sfc_act(sigma_p(r), m). Rose sessions
// only, with p in A_{R_n}(e1,e2) and c in C_s(R_n).
SfcElement sfc_act_twisted(const AlgebraElement& p, const AlgebraElement& r, const SfcElement& m);

// r z = 0; decides r in L_K(E) f(c) for r with rv = r
bool sfc_annihilates(const AlgebraElement& r, const SfcSpecPtr& spec);

// p == q mod L_K(R_n) f(c); operands must lie in A_{R_n}(e1,e2)
bool sfc_equiv(const AlgebraElement& p, const AlgebraElement& q, const SfcSpecPtr& spec);

// Constructive simplicity: an r with sfc_act(r, y) = z, built as
// g(c) tau_{<=t}(beta_1 c^infty)* per the simplicity proof; verified before
// return. y must be nonzero.
AlgebraElement sfc_witness(const SfcElement& y);

// z -> u(c) z extended L-linearly: multiplies every stored residue by u
SfcElement sfc_endo(const Residue& u, const SfcElement& m);

/// Chen module V_[c^infty] of a rational tail class.
class ChenSpec {
public:
    ChenSpec(SessionPtr s, const Path& cycle);
    const SessionPtr& session() const { return session_; }
    const RationalInfinitePath& tail() const { return tail_; }

    friend bool operator==(const ChenSpec& a, const ChenSpec& b) {
        return *a.session_ == *b.session_ && a.tail_ == b.tail_;
    }

private:
    SessionPtr session_;
    RationalInfinitePath tail_;
};

using ChenSpecPtr = std::shared_ptr<const ChenSpec>;

inline ChenSpecPtr make_chen(SessionPtr s, const Path& cycle) {
    return std::make_shared<const ChenSpec>(std::move(s), cycle);
}

class ChenElement {
public:
    using Terms = std::map<RationalInfinitePath, Scalar, RipLess>;

    static ChenElement zero(ChenSpecPtr spec);
    static ChenElement basis(ChenSpecPtr spec, const RationalInfinitePath& q);

    const ChenSpecPtr& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ChenElement scaled(const Scalar& k) const;
    friend ChenElement operator+(const ChenElement& a, const ChenElement& b);
    friend bool operator==(const ChenElement& a, const ChenElement& b);
    friend bool operator!=(const ChenElement& a, const ChenElement& b) { return !(a == b); }

private:
    friend ChenElement chen_act(const AlgebraElement&, const ChenElement&);
    ChenElement(ChenSpecPtr spec, Terms t) : spec_(std::move(spec)), terms_(std::move(t)) {}
    ChenSpecPtr spec_;
    Terms terms_;
};

// v.q = q iff v = s(q); e.q = eq iff r(e) = s(q); e*.q = tau_{>1}(q) iff q
// starts with e; extended linearly
ChenElement chen_act(const AlgebraElement& r, const ChenElement& m);

// For f = 1 - x: checks that alpha z <-> alpha c^infty intertwines sfc_act
// and chen_act for every generator on all indices of length <= max_len.
bool sfc_to_chen_compat_check(const SfcSpecPtr& spec, int max_len = 4);

// canonical S^f_c index paths (r(alpha) = s(c), no trailing copy of c) up to
// the given length, in index order
std::vector<Path> sfc_basis_indices(const SfcSpecPtr& spec, int max_len);

} // namespace leavitt
