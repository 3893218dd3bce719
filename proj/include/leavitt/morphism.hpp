#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leavitt/element.hpp"

namespace leavitt {

/// Square matrix over L_K(E).
class AlgMatrix {
public:
    AlgMatrix(SessionPtr s, int n); // n x n of zeros
    static AlgMatrix identity(SessionPtr s, int n);

    int size() const { return n_; }
    const SessionPtr& session() const { return session_; }
    const AlgebraElement& at(int i, int j) const;
    void set(int i, int j, AlgebraElement x);

    friend AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b);
    friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b);
    friend bool operator==(const AlgMatrix& a, const AlgMatrix& b);
    friend bool operator!=(const AlgMatrix& a, const AlgMatrix& b) { return !(a == b); }

private:
    SessionPtr session_;
    int n_;
    std::vector<AlgebraElement> data_;
};

struct RelationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Endomorphism described by generator images; immutable. `verified` means
/// check_relations has passed, which the Universal Property turns into a
/// well-defined algebra homomorphism.
class GenMap {
public:
    GenMap(SessionPtr s, std::vector<AlgebraElement> vertex_images,
           std::vector<AlgebraElement> edge_images, std::vector<AlgebraElement> ghost_images);
    static GenMap identity(SessionPtr s);

    const SessionPtr& session() const { return session_; }
    const AlgebraElement& vertex_image(int v) const { return vimg_[static_cast<std::size_t>(v)]; }
    const AlgebraElement& edge_image(int e) const { return eimg_[static_cast<std::size_t>(e)]; }
    const AlgebraElement& ghost_image(int e) const { return gimg_[static_cast<std::size_t>(e)]; }
    bool verified() const { return verified_; }
    GenMap mark_verified() const;

    // generator images determine the endomorphism
    friend bool operator==(const GenMap& a, const GenMap& b);
    friend bool operator!=(const GenMap& a, const GenMap& b) { return !(a == b); }

private:
    SessionPtr session_;
    std::vector<AlgebraElement> vimg_, eimg_, gimg_;
    bool verified_ = false;
};

// Checks relations (1)-(4) on the images: all vertex pairs, all edges, all
// edge pairs, all regular vertices. Empty report = homomorphism.
RelationReport check_relations(const GenMap& m);
// mark_verified when the report is empty, relation_error otherwise
GenMap verify(const GenMap& m);

// wP = Pw, wQ = Qw and wPQ = wQP = wI_n, as entrywise identities
bool validate_pq(const AlgMatrix& P, const AlgMatrix& Q, int w);

// The homomorphism fixing every generator except the listed edges (distinct,
// common source v and range w) and their ghosts:
//   phi(e_i) = sum_k e_k p_{k,i},   phi(e_i*) = sum_k q_{i,k} e_k*.
// Requires validate_pq; the result is verified.
GenMap build_phi_pq(const std::vector<int>& edges, const AlgMatrix& P, const AlgMatrix& Q);

// multiplicative-linear extension of the generator images; m must be verified
AlgebraElement apply_hom(const GenMap& m, const AlgebraElement& x);

// generator-wise f after g; both verified; verified status recomputed
GenMap compose_homs(const GenMap& f, const GenMap& g);

// w phi(p_ij) = w p_ij for all i,j, or the same for Q
bool iso_condition(const GenMap& m, const AlgMatrix& P, const AlgMatrix& Q, int w);

// The generator-level automorphism pair (sigma_p, sigma_p^{-1}):
//   sigma_p(e2) = e2 + e1 p, sigma_p(e1*) = e1* - p e2*, all else fixed.
// Requires s(e1)=s(e2), r(e1)=r(e2), wp = pw and p in A_E(e1, e2).
std::pair<GenMap, GenMap> build_anick(const AlgebraElement& p, int e1, int e2);

} // namespace leavitt
