#ifndef RINGSUM_CYCLOTOMIC_HPP
#define RINGSUM_CYCLOTOMIC_HPP

#include "ringsum/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringsum {

// Description of the constant field K = Q(zeta_N)(n_1,...,n_r).  One such
// descriptor is created per engine session and shared by every value built in
// it; it is immutable, so sharing across threads is safe.
struct FieldDesc {
    unsigned zetaOrder = 1;            // N
    std::vector<Rat> cyclo;            // monic Phi_N, low-to-high, size deg+1
    std::vector<std::string> params;   // n_1,...,n_r

    unsigned degree() const { return static_cast<unsigned>(cyclo.size()) - 1; }
    // Order of the group of roots of unity in Q(zeta_N): lcm(2, N).
    long rootGroupOrder() const { return lcm_long(2, static_cast<long>(zetaOrder)); }
    size_t paramCount() const { return params.size(); }
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

FieldPtr make_field(unsigned zetaOrder, std::vector<std::string> params = {});

// Monic coefficients of the N-th cyclotomic polynomial, low-to-high.
std::vector<Rat> cyclotomic_poly(unsigned n);

// Element of Q(zeta_N), reduced modulo Phi_N.  coeffs has fixed length
// deg(Phi_N); index i is the coefficient of zeta^i.
class Cyc {
public:
    Cyc() = default;
    Cyc(FieldPtr k, Rat value);
    static Cyc zero(const FieldPtr& k) { return Cyc(k, Rat(0)); }
    static Cyc one(const FieldPtr& k) { return Cyc(k, Rat(1)); }
    // zeta^power for the session's primitive root zeta_N.
    static Cyc zeta_pow(const FieldPtr& k, long power);
    static Cyc from_coeffs(FieldPtr k, std::vector<Rat> raw);

    const FieldPtr& field() const { return K_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // True when the element lies in Q; value() is then valid.
    bool is_rational() const;
    Rat value() const;

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc inverse() const;
    Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    bool operator<(const Cyc& o) const { return c_ < o.c_; }

    Cyc pow(long e) const;

    // Minimal n > 0 with (*this)^n = 1, or 0 if no such n exists.
    long root_of_unity_order() const;

    std::string str() const;

private:
    FieldPtr K_;
    std::vector<Rat> c_;
    void reduce(std::vector<Rat>& raw) const;
};

// Generator of the full group of roots of unity in Q(zeta_N); its order is
// rootGroupOrder() = lcm(2, N).
Cyc root_group_generator(const FieldPtr& k);

// Writes z as g^a for g = root_group_generator, or returns -1 when z is not a
// root of unity.
long root_of_unity_log(const Cyc& z);

} // namespace ringsum

#endif
