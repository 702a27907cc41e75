#ifndef RINGSUM_PMT_HPP
#define RINGSUM_PMT_HPP

#include "ringsum/lattice.hpp"
#include "ringsum/tower.hpp"

namespace ringsum {

// Z-basis of M(f, E) = { m : sigma(g) = f_1^{m_1}...f_n^{m_n} g for some
// nonzero g }, together with a verifying witness per basis row.
struct MBasis {
    Lattice lattice;
    std::vector<TowerElem> witnesses;
};

MBasis pmt_solve(const Tower& t, const std::vector<PGElem>& f);

// Base case over F = K(k): units split into content and monic part, monic
// parts into shift orbits, and a vector is admissible iff every orbit's
// exponent sum vanishes and the contents multiply to one.
struct RatMBasis {
    Lattice lattice;
    std::vector<RatFun> witnesses;
};
RatMBasis pmt_base_rational(const FieldPtr& K, const std::vector<RatFun>& f, long shiftStep);

// Incremental Hermite scan over the finite exponent box for a tower of R
// generators with constant quotients (M_2 of the nested reduction).
MBasis pmt_base_roots(const Tower& t, const std::vector<PGElem>& f);

struct MtResult {
    bool solvable = false;
    long m = 0;         // minimal positive exponent when solvable
    TowerElem witness;  // g with sigma(g) = alpha^m g
};
MtResult mt_decide(const Tower& t, const PGElem& alpha);

// sigma(g) - (prod f_i^{m_i}) g must normalize to zero for every row.
void verify_mbasis(const Tower& t, const std::vector<PGElem>& f, const MBasis& mb);

TowerElem elem_pow_signed(const Tower& t, const TowerElem& e, const Int& n);

} // namespace ringsum

#endif
