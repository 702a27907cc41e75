#ifndef RINGSUM_LINSYS_HPP
#define RINGSUM_LINSYS_HPP

#include "ringsum/tower.hpp"

namespace ringsum {

using KVec = std::vector<Const>;
using KMat = std::vector<KVec>;

// Kernel basis of { x : rows * x = 0 } over the constant field.
KMat k_kernel(KMat rows, const FieldPtr& K, size_t cols);

// Reduced row echelon form (in place); returns pivot column per row.
std::vector<size_t> k_rref(KMat& rows, const FieldPtr& K);

// All y with sum_j y_j * gens_j = 0 in the tower ring: the element equation is
// expanded monomial-by-monomial and k-power-by-k-power into K-linear rows.
KMat elem_linear_kernel(const Tower& t, const std::vector<TowerElem>& gens);

// Linear-span membership of (c, g) rows over K, the shape both solution
// spaces of the engine use.
struct SpanRow {
    KVec c;
    TowerElem g;
};
bool span_contains(const Tower& t, const std::vector<SpanRow>& basis, const SpanRow& row);
bool span_equal(const Tower& t, const std::vector<SpanRow>& a, const std::vector<SpanRow>& b);

} // namespace ringsum

#endif
