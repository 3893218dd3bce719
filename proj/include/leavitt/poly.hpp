#pragma once

#include <initializer_list>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "leavitt/scalar.hpp"

namespace leavitt {

/// Dense univariate polynomial over a session field.
class Poly {
public:
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Scalar& s);
    static Poly x(Field f);
    static Poly from_ints(Field f, std::initializer_list<long long> coeffs);

    Field field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    Scalar coeff(int i) const;
    Scalar leading() const;
    Scalar eval(const Scalar& at) const;

    Poly operator-() const;
    Poly scaled(const Scalar& k) const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // (q, r) with a = q*b + r and deg r < deg b; b must be nonzero
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    Poly monic() const;
    static Poly gcd(Poly a, Poly b);
    // (g, u, v) with u*a + v*b == g == gcd(a, b), g monic when nonzero
    static std::tuple<Poly, Poly, Poly> egcd(const Poly& a, const Poly& b);

private:
    void trim();
    static void check_same(const Poly& a, const Poly& b);

    Field field_;
    std::vector<Scalar> c_;
};

enum class Irreducibility { Yes, No, Undecided };

// Exact over F_p for any degree; over Q exact up to degree 3 (degree >= 4
// returns Undecided). Constant polynomials are a domain_error.
Irreducibility is_irreducible(const Poly& f);

/// Irreducible polynomial in the normalized shape 1 - a_1 x - ... - a_n x^n,
/// together with its companion f_1 satisfying f = 1 - x*f_1.
class IrrPoly {
public:
    // Validates f(0) == 1 and deg >= 1; runs the irreducibility test.
    // Undecided needs assume=true and is recorded via asserted().
    static IrrPoly make(const Poly& f, bool assume = false);

    const Poly& poly() const { return f_; }
    const Poly& f1() const { return f1_; }
    int degree() const { return f_.degree(); }
    bool asserted() const { return asserted_; }
    Scalar a(int i) const; // a_i = -coeff_i(f), 1 <= i <= degree
    Field field() const { return f_.field(); }

    friend bool operator==(const IrrPoly& a, const IrrPoly& b) { return a.f_ == b.f_; }

private:
    IrrPoly(Poly f, Poly f1, bool asserted)
        : f_(std::move(f)), f1_(std::move(f1)), asserted_(asserted) {}
    Poly f_;
    Poly f1_;
    bool asserted_;
};

// f = 1 - x*f_1; read off f_1 = a_1 + a_2 x + ... + a_n x^{n-1}.
// Throws domain_error when f(0) != 1.
Poly split_f1(const Poly& f);

/// The quotient field K[x]/(f); shared by all residues of one module.
class QuotientField {
public:
    explicit QuotientField(IrrPoly f) : modulus_(std::move(f)) {}
    static std::shared_ptr<const QuotientField> make(IrrPoly f);
    const IrrPoly& modulus() const { return modulus_; }
    Field field() const { return modulus_.field(); }

private:
    IrrPoly modulus_;
};

using QfPtr = std::shared_ptr<const QuotientField>;

/// Element of K[x]/(f), stored as the reduced representative.
class Residue {
public:
    Residue(QfPtr qf, const Poly& rep);
    static Residue zero(QfPtr qf);
    static Residue one(QfPtr qf);
    static Residue x(QfPtr qf);
    static Residue constant(QfPtr qf, const Scalar& s);

    const Poly& lift() const { return rep_; }
    const QfPtr& qf() const { return qf_; }
    bool is_zero() const { return rep_.is_zero(); }

    Residue operator-() const;
    Residue scaled(const Scalar& k) const;
    Residue inverse() const; // zero -> domain_error
    Residue pow(int k) const; // k may be negative
    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    Residue& operator+=(const Residue& b) { return *this = *this + b; }
    friend bool operator==(const Residue& a, const Residue& b);
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    static void check_same(const Residue& a, const Residue& b);
    QfPtr qf_;
    Poly rep_;
};

} // namespace leavitt
