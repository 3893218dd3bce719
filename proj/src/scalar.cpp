#include "leavitt/scalar.hpp"

namespace leavitt {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// returns x with a*x == gcd(a,m) mod m, for m > 0
BigInt mod_inverse(BigInt a, const BigInt& m) {
    BigInt old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
    }
    if (old_r != 1) throw domain_error("element not invertible mod " + m.str());
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

} // namespace

Field Field::fp(std::uint64_t p) {
    if (!is_prime(p)) throw domain_error("field characteristic must be prime, got " + std::to_string(p));
    return Field(p);
}

std::string Field::str() const {
    return is_rationals() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

void Scalar::reduce() {
    if (field_.is_rationals()) return;
    BigInt p = field_.characteristic();
    BigInt num = numerator(v_);
    BigInt den = denominator(v_);
    num %= p;
    if (num < 0) num += p;
    if (den != 1) num = num * mod_inverse(den, p) % p;
    v_ = BigRat(num);
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
        throw domain_error("scalar field mismatch: " + a.field_.str() + " vs " + b.field_.str());
}

Scalar Scalar::of_int(Field f, long long n) { return Scalar(f, BigRat(n)); }

Scalar Scalar::of_integer(Field f, const BigInt& n) { return Scalar(f, BigRat(n)); }

Scalar Scalar::of_fraction(Field f, const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("zero denominator");
    return Scalar(f, BigRat(num, den));
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero scalar");
    return Scalar(field_, 1 / v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    return Scalar(a.field_, a.v_ + b.v_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    return Scalar(a.field_, a.v_ - b.v_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    return Scalar(a.field_, a.v_ * b.v_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    if (b.is_zero()) throw domain_error("division by zero scalar");
    if (a.field_.is_rationals()) return Scalar(a.field_, a.v_ / b.v_);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
}

std::string Scalar::str() const {
    if (field_.is_rationals()) {
        BigInt num = numerator(v_), den = denominator(v_);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }
    return numerator(v_).str();
}

} // namespace leavitt
