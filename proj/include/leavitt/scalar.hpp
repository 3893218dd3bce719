#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "leavitt/errors.hpp"

namespace leavitt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Coefficient field of a session: the rationals or a prime field F_p.
class Field {
public:
    Field() : p_(0) {}
    static Field rationals() { return Field(); }
    static Field fp(std::uint64_t p); // p must be prime

    bool is_rationals() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    std::string str() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_; // 0 = rationals
};

/// Exact field element: a reduced big rational, or a residue in [0, p).
class Scalar {
public:
    Scalar() : field_(), v_(0) {}
    explicit Scalar(Field f) : field_(f), v_(0) {}

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return of_int(f, 1); }
    static Scalar of_int(Field f, long long n);
    static Scalar of_integer(Field f, const BigInt& n);
    // den must be nonzero; over F_p this is num * den^{-1}.
    static Scalar of_fraction(Field f, const BigInt& num, const BigInt& den);

    Field field() const { return field_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    // true for negative rationals; F_p residues are unsigned
    bool is_negative() const { return field_.is_rationals() && v_ < 0; }

    Scalar operator-() const;
    Scalar abs() const { return is_negative() ? -*this : *this; }
    Scalar inverse() const; // zero -> domain_error

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    const BigRat& value() const { return v_; }
    std::string str() const;

private:
    Scalar(Field f, BigRat v) : field_(f), v_(std::move(v)) { reduce(); }
    void reduce();
    static void check_same(const Scalar& a, const Scalar& b);

    Field field_;
    BigRat v_; // for F_p: an integer in [0, p)
};

} // namespace leavitt
