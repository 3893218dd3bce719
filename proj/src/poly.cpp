#include "leavitt/poly.hpp"

#include <algorithm>

namespace leavitt {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_)
        throw domain_error("polynomial field mismatch: " + a.field_.str() + " vs " + b.field_.str());
}

Poly Poly::constant(const Scalar& s) { return Poly(s.field(), {s}); }

Poly Poly::x(Field f) { return Poly(f, {Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::from_ints(Field f, std::initializer_list<long long> coeffs) {
    std::vector<Scalar> c;
    for (long long v : coeffs) c.push_back(Scalar::of_int(f, v));
    return Poly(f, std::move(c));
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(field_);
    return c_[static_cast<std::size_t>(i)];
}

Scalar Poly::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Scalar Poly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Scalar> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(-s);
    return Poly(field_, std::move(c));
}

Poly Poly::scaled(const Scalar& k) const {
    if (k.is_zero()) return Poly(field_);
    std::vector<Scalar> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(s * k);
    return Poly(field_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    Poly r = a;
    Field f = a.field_;
    int db = b.degree();
    Scalar lead_inv = b.leading().inverse();
    std::vector<Scalar> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0,
                          Scalar::zero(f));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Scalar c = r.leading() * lead_inv;
        q[static_cast<std::size_t>(k)] = c;
        // r -= c * x^k * b
        std::vector<Scalar> sub(static_cast<std::size_t>(k), Scalar::zero(f));
        for (const Scalar& bc : b.c_) sub.push_back(bc * c);
        r = r - Poly(f, std::move(sub));
    }
    return {Poly(f, std::move(q)), r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::egcd(const Poly& a, const Poly& b) {
    Field f = a.field_;
    Poly old_r = a, r = b;
    Poly old_u = Poly::constant(Scalar::one(f)), u = Poly(f);
    Poly old_v = Poly(f), v = Poly::constant(Scalar::one(f));
    while (!r.is_zero()) {
        auto [q, rem] = divmod(old_r, r);
        old_r = std::move(r); r = std::move(rem);
        Poly nu = old_u - q * u;
        old_u = std::move(u); u = std::move(nu);
        Poly nv = old_v - q * v;
        old_v = std::move(v); v = std::move(nv);
    }
    if (!old_r.is_zero()) {
        Scalar inv = old_r.leading().inverse();
        old_r = old_r.scaled(inv);
        old_u = old_u.scaled(inv);
        old_v = old_v.scaled(inv);
    }
    return {old_r, old_u, old_v};
}

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) {
    return Poly::divmod(a * b, mod).second;
}

Poly powmod(Poly base, BigInt exp, const Poly& mod) {
    Poly acc = Poly::constant(Scalar::one(base.field()));
    base = Poly::divmod(base, mod).second;
    while (exp > 0) {
        if (bit_test(exp, 0)) acc = mulmod(acc, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return acc;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test: f of degree n over F_p is irreducible iff x^{p^n} == x mod f
// and gcd(x^{p^{n/q}} - x, f) is constant for every prime q | n.
Irreducibility irreducible_fp(const Poly& f) {
    Poly g = f.monic();
    int n = g.degree();
    BigInt p = g.field().characteristic();
    Poly x = Poly::x(g.field());
    for (int q : prime_factors(n)) {
        BigInt e = pow(p, static_cast<unsigned>(n / q));
        Poly h = powmod(x, e, g) - Poly::divmod(x, g).second;
        if (Poly::gcd(h, g).degree() > 0) return Irreducibility::No;
    }
    BigInt e = pow(p, static_cast<unsigned>(n));
    if (powmod(x, e, g) != Poly::divmod(x, g).second) return Irreducibility::No;
    return Irreducibility::Yes;
}

// trial-division divisors; |n| expected small
std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// scale to a primitive integer-coefficient polynomial
std::vector<BigInt> integer_coeffs(const Poly& f) {
    BigInt l = 1;
    for (int i = 0; i <= f.degree(); ++i)
        l = lcm(l, denominator(f.coeff(i).value()));
    std::vector<BigInt> c;
    BigInt content = 0;
    for (int i = 0; i <= f.degree(); ++i) {
        BigRat v = f.coeff(i).value() * l;
        c.push_back(numerator(v));
        content = gcd(content, c.back());
    }
    if (content > 1)
        for (auto& v : c) v /= content;
    return c;
}

Irreducibility irreducible_q(const Poly& f) {
    int n = f.degree();
    if (n == 1) return Irreducibility::Yes;
    if (n > 3) return Irreducibility::Undecided;
    auto c = integer_coeffs(f);
    if (c[0] == 0) return Irreducibility::No; // x divides f
    if (n == 2) {
        // reducible over Q iff the discriminant is a perfect square
        BigInt disc = c[1] * c[1] - 4 * c[2] * c[0];
        if (disc < 0) return Irreducibility::Yes;
        BigInt s = sqrt(disc);
        return s * s == disc ? Irreducibility::No : Irreducibility::Yes;
    }
    // degree 3: reducible iff it has a rational root u/w, u | c0, w | c3
    const BigInt limit = BigInt("1000000000000000");
    if (abs(c[0]) > limit || abs(c[3]) > limit) return Irreducibility::Undecided;
    Field q = Field::rationals();
    for (const BigInt& u : divisors(c[0])) {
        for (const BigInt& w : divisors(c[3])) {
            for (int sign : {1, -1}) {
                Scalar root = Scalar::of_fraction(q, sign * u, w);
                if (f.eval(root).is_zero()) return Irreducibility::No;
            }
        }
    }
    return Irreducibility::Yes;
}

} // namespace

Irreducibility is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw domain_error("irreducibility of a constant polynomial");
    if (f.field().is_rationals()) return irreducible_q(f);
    return irreducible_fp(f);
}

Poly split_f1(const Poly& f) {
    if (!f.coeff(0).is_one())
        throw domain_error("polynomial not in the form 1 - a_1 x - ... - a_n x^n (constant term must be 1)");
    std::vector<Scalar> c;
    for (int i = 1; i <= f.degree(); ++i) c.push_back(-f.coeff(i));
    return Poly(f.field(), std::move(c));
}

IrrPoly IrrPoly::make(const Poly& f, bool assume) {
    if (f.degree() < 1) throw domain_error("modulus must have degree >= 1");
    Poly f1 = split_f1(f); // also checks f(0) == 1
    bool asserted = false;
    switch (is_irreducible(f)) {
    case Irreducibility::Yes:
        break;
    case Irreducibility::No:
        throw domain_error("polynomial is reducible over " + f.field().str());
    case Irreducibility::Undecided:
        if (!assume)
            throw domain_error("irreducibility undecided over " + f.field().str() +
                               "; pass --assume-irreducible to proceed");
        asserted = true;
        break;
    }
    return IrrPoly(f, std::move(f1), asserted);
}

Scalar IrrPoly::a(int i) const {
    if (i < 1 || i > degree()) throw domain_error("coefficient index out of range");
    return -f_.coeff(i);
}

std::shared_ptr<const QuotientField> QuotientField::make(IrrPoly f) {
    return std::make_shared<const QuotientField>(std::move(f));
}

Residue::Residue(QfPtr qf, const Poly& rep) : qf_(std::move(qf)), rep_(rep.field()) {
    if (rep.field() != qf_->field()) throw domain_error("residue field mismatch");
    rep_ = Poly::divmod(rep, qf_->modulus().poly()).second;
}

Residue Residue::zero(QfPtr qf) {
    Field f = qf->field();
    return Residue(std::move(qf), Poly(f));
}

Residue Residue::one(QfPtr qf) {
    Field f = qf->field();
    return Residue(std::move(qf), Poly::constant(Scalar::one(f)));
}

Residue Residue::x(QfPtr qf) {
    Field f = qf->field();
    return Residue(std::move(qf), Poly::x(f));
}

Residue Residue::constant(QfPtr qf, const Scalar& s) {
    return Residue(std::move(qf), Poly::constant(s));
}

void Residue::check_same(const Residue& a, const Residue& b) {
    if (a.qf_ != b.qf_ && !(a.qf_->modulus() == b.qf_->modulus() && a.qf_->field() == b.qf_->field()))
        throw domain_error("residues over different moduli");
}

Residue Residue::operator-() const { return Residue(qf_, -rep_); }

Residue Residue::scaled(const Scalar& k) const { return Residue(qf_, rep_.scaled(k)); }

Residue Residue::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero residue");
    auto [g, u, v] = Poly::egcd(rep_, qf_->modulus().poly());
    if (g.degree() != 0)
        throw domain_error("modulus is not irreducible (asserted irreducibility was wrong)");
    return Residue(qf_, u.scaled(g.coeff(0).inverse()));
}

Residue Residue::pow(int k) const {
    Residue base = k >= 0 ? *this : inverse();
    int e = k >= 0 ? k : -k;
    Residue acc = Residue::one(qf_);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

Residue operator+(const Residue& a, const Residue& b) {
    Residue::check_same(a, b);
    return Residue(a.qf_, a.rep_ + b.rep_);
}

Residue operator-(const Residue& a, const Residue& b) {
    Residue::check_same(a, b);
    return Residue(a.qf_, a.rep_ - b.rep_);
}

Residue operator*(const Residue& a, const Residue& b) {
    Residue::check_same(a, b);
    return Residue(a.qf_, a.rep_ * b.rep_);
}

bool operator==(const Residue& a, const Residue& b) {
    Residue::check_same(a, b);
    return a.rep_ == b.rep_;
}

} // namespace leavitt
