#ifndef RINGSUM_CONSTANT_HPP
#define RINGSUM_CONSTANT_HPP

#include "ringsum/mpoly.hpp"

namespace ringsum {

// Element of the constant field K = Q(zeta_N)(n_1,...,n_r), stored as a
// reduced fraction of parameter polynomials.  The denominator is nonzero and
// has lead coefficient 1 under lex order.
class Const {
public:
    Const() = default;
    Const(FieldPtr k, const Rat& r) : num_(k, r), den_(MPoly::one(k)) {}
    Const(FieldPtr k, Cyc c) : num_(k, std::move(c)), den_(MPoly::one(k)) {}
    Const(MPoly num, MPoly den);
    explicit Const(MPoly num) : num_(std::move(num)), den_(MPoly::one(num_.field())) {}

    static Const zero(const FieldPtr& k) { return Const(k, Rat(0)); }
    static Const one(const FieldPtr& k) { return Const(k, Rat(1)); }
    static Const param(const FieldPtr& k, size_t i) { return Const(MPoly::param(k, i)); }
    static Const zeta(const FieldPtr& k, long pow = 1) { return Const(k, Cyc::zeta_pow(k, pow)); }

    const FieldPtr& field() const { return num_.field(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const;
    Rat rational_value() const;
    bool is_cyc() const;       // free of the parameters
    Cyc cyc_value() const;
    // Nonnegative rational integer test, used by degree-bound candidates.
    bool is_integer() const;
    long integer_value() const;

    Const operator-() const;
    Const operator+(const Const& o) const;
    Const operator-(const Const& o) const;
    Const operator*(const Const& o) const;
    Const operator/(const Const& o) const;
    Const inverse() const;
    Const pow(long e) const;
    bool operator==(const Const& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Const& o) const { return !(*this == o); }
    bool operator<(const Const& o) const;

    Const shift_param(size_t index, long delta) const;
    Const eval_param(size_t index, const Rat& value) const; // may throw on pole

    std::string str() const;

private:
    MPoly num_, den_;
    void normalize();
};

} // namespace ringsum

#endif
