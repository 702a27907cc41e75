#ifndef RINGSUM_LATTICE_HPP
#define RINGSUM_LATTICE_HPP

#include "ringsum/rational.hpp"

#include <optional>
#include <vector>

namespace ringsum {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Z-module of integer row vectors, kept in row Hermite normal form: positive
// pivots, entries above each pivot reduced into [0, pivot), zero rows dropped.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(size_t ambient) : cols_(ambient) {}
    // Canonicalizes the row span of `rows`.
    static Lattice from_rows(IntMat rows, size_t ambient);
    static Lattice full(size_t ambient);

    size_t ambient() const { return cols_; }
    size_t rank() const { return rows_.size(); }
    const IntMat& rows() const { return rows_; }
    bool contains(const IntVec& v) const;
    bool operator==(const Lattice& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    // Coefficients c with c * rows = v, when v lies in the span.
    std::optional<IntVec> solve(const IntVec& v) const;

private:
    size_t cols_ = 0;
    IntMat rows_;
};

// H = U * A with U unimodular; H in HNF including its zero rows (so that the
// rows of U aligned with them span the left kernel of A).
void hnf_transform(const IntMat& a, size_t cols, IntMat& h, IntMat& u);

Lattice lattice_hnf(const IntMat& rows, size_t ambient);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
// { m : m . e = 0 }
Lattice annihilator(const IntVec& e);
// Left kernel { x : x * a = 0 } as a lattice in Z^rows(a).
Lattice left_kernel(const IntMat& a, size_t cols);
// Drop all but the first n coordinates of each basis row, then re-canonicalize.
Lattice lattice_project(const Lattice& l, size_t firstN);

// Coefficients c with c * rows = target for an arbitrary (non-HNF) generating
// set; empty when target is outside the span.
std::optional<IntVec> integer_solve(const IntMat& rows, size_t cols, const IntVec& target);

} // namespace ringsum

#endif
