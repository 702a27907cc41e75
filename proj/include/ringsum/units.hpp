#ifndef RINGSUM_UNITS_HPP
#define RINGSUM_UNITS_HPP

#include "ringsum/lattice.hpp"
#include "ringsum/poly.hpp"

namespace ringsum {

// HNF basis of { m : prod units_i^{m_i} = 1 } for nonzero rational functions.
// Rational contents go through an integer coprime base, polynomial parts
// through gcd-free bases, and the root-of-unity part through order arithmetic
// in Q(zeta_N).
Lattice unit_relations(const std::vector<RatFun>& units);

// Pairwise-coprime monic polynomials generating all inputs multiplicatively.
std::vector<Poly> gcd_free_basis(std::vector<Poly> in);
// Same refinement, additionally splitting at common factors between shifted
// copies (shift multiples of `step`), so that distinct atoms of one shift
// orbit never share a factor.  Backs the orbit decomposition of the PMT and
// PFLDE base cases.
std::vector<Poly> shift_refine(std::vector<Poly> in, long step);

// Exponents of `p` (monic) over a generating set from gcd_free_basis /
// shift_refine; throws when p does not factor over the atoms.
std::vector<long> factor_over_atoms(const Poly& p, const std::vector<Poly>& atoms);

} // namespace ringsum

#endif
