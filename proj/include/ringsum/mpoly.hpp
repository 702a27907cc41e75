#ifndef RINGSUM_MPOLY_HPP
#define RINGSUM_MPOLY_HPP

#include "ringsum/cyclotomic.hpp"

#include <map>
#include <vector>

namespace ringsum {

// Sparse multivariate polynomial in the session parameters with Q(zeta_N)
// coefficients.  Keys are exponent vectors of length paramCount(); the zero
// polynomial has an empty term map.
class MPoly {
public:
    using Key = std::vector<int>;
    using Terms = std::map<Key, Cyc>;

    MPoly() = default;
    MPoly(FieldPtr k, Cyc scalar);
    MPoly(FieldPtr k, const Rat& scalar) : MPoly(k, Cyc(k, scalar)) {}
    static MPoly zero(const FieldPtr& k) { return MPoly(k, Cyc::zero(k)); }
    static MPoly one(const FieldPtr& k) { return MPoly(k, Cyc::one(k)); }
    // The monomial n_index^1.
    static MPoly param(const FieldPtr& k, size_t index);

    const FieldPtr& field() const { return K_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const;        // element of Q(zeta), no parameter part
    Cyc scalar_value() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Cyc& c) const;
    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const { return t_ < o.t_; }

    // Leading term under lex order on exponent vectors.
    const Key& lead_key() const;
    const Cyc& lead_coeff() const;
    long total_degree() const;
    long degree_in(size_t var) const;

    // Exact division; throws when o does not divide *this.
    MPoly div_exact(const MPoly& o) const;
    bool divides(const MPoly& o) const; // *this | o

    // n_index -> n_index + delta
    MPoly shift_param(size_t index, long delta) const;
    // n_index -> value
    MPoly eval_param(size_t index, const Rat& value) const;

    void set_term(Key k, Cyc c);
    std::string str() const;

private:
    FieldPtr K_;
    Terms t_;
};

// Monic (lead coefficient 1) gcd via primitive PRS recursion; gcd(0,0) = 0.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

} // namespace ringsum

#endif
