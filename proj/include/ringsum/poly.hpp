#ifndef RINGSUM_POLY_HPP
#define RINGSUM_POLY_HPP

#include "ringsum/constant.hpp"

#include <map>
#include <set>

namespace ringsum {

// Sparse univariate polynomial in the base variable k over Const.
// deg(0) = -1 stands in for the -infinity sentinel.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr k, const Rat& r) { set_coeff(0, Const(k, r)); K_ = std::move(k); }
    explicit Poly(Const c) : K_(c.field()) { set_coeff(0, std::move(c)); }
    static Poly zero(const FieldPtr& k) { Poly p; p.K_ = k; return p; }
    static Poly one(const FieldPtr& k) { return Poly(k, Rat(1)); }
    static Poly var(const FieldPtr& k); // the polynomial k

    const FieldPtr& field() const { return K_; }
    const std::map<long, Const>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    Const constant_value() const;
    long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    long ldegree() const { return c_.empty() ? 0 : c_.begin()->first; }
    Const coeff(long d) const;
    const Const& lead_coeff() const;

    void set_coeff(long d, Const v);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Const& c) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return c_ < o.c_; }

    void divmod(const Poly& den, Poly& q, Poly& r) const;
    Poly div_exact(const Poly& den) const;
    Poly monic() const;
    bool is_monic() const { return !is_zero() && lead_coeff().is_one(); }

    // p(k + j*step)
    Poly shifted(long j, long step = 1) const;
    Const eval(const Const& point) const;
    Poly shift_param(size_t index, long delta) const;

    std::string str(const std::string& varName = "k") const;

private:
    FieldPtr K_;
    std::map<long, Const> c_;
};

// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);
Poly shift_poly(const Poly& p, long j, long step = 1);

// { j >= 0 : deg gcd(p(k), q(k+j)) >= 1 }, via integer roots of
// Res_k(p(k), q(k+j)) as a polynomial in j.  p, q nonzero.
std::set<long> dispersion(const Poly& p, const Poly& q);

// Field of fractions of Poly; reduced, monic denominator.
class RatFun {
public:
    RatFun() = default;
    RatFun(FieldPtr k, const Rat& r) : num_(k, r), den_(Poly::one(k)) {}
    explicit RatFun(Const c) : num_(Poly(std::move(c))), den_(Poly::one(num_.field())) {}
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
    RatFun(Poly num, Poly den);
    static RatFun zero(const FieldPtr& k) { return RatFun(k, Rat(0)); }
    static RatFun one(const FieldPtr& k) { return RatFun(k, Rat(1)); }
    static RatFun var(const FieldPtr& k) { return RatFun(Poly::var(k)); }

    const FieldPtr& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Const constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inverse() const;
    RatFun pow(long e) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }
    bool operator<(const RatFun& o) const;

    RatFun shifted(long j, long step = 1) const;
    Const eval(const Const& point) const; // throws on pole
    RatFun shift_param(size_t index, long delta) const;

    std::string str(const std::string& varName = "k") const;

private:
    Poly num_, den_;
};

} // namespace ringsum

#endif
