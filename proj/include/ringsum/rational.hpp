#ifndef RINGSUM_RATIONAL_HPP
#define RINGSUM_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace ringsum {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

// Floor division quotient, used when reducing entries above an HNF pivot.
inline Int int_fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool int_divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Divisors of n in increasing order (n > 0).
std::vector<long> divisors_of(long n);

} // namespace ringsum

#endif
