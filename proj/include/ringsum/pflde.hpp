#ifndef RINGSUM_PFLDE_HPP
#define RINGSUM_PFLDE_HPP

#include "ringsum/linsys.hpp"
#include "ringsum/pmt.hpp"

namespace ringsum {

// K-basis of V(u, f, E) = { (c_1..c_n, g) : sigma(g) - u g = sum c_i f_i }.
struct VBasis {
    std::vector<SpanRow> rows;
    size_t dim() const { return rows.size(); }
};

struct Limits {
    long lambdaCap = 4096;
};

// Degree window [a, b] with V(u, f, E_{a,b}) = V(u, f, E); empty when b < a.
struct DegreeWindow {
    long a = 0;
    long b = -1;
    bool satisfiedTechnicalCond = true;
    bool empty() const { return b < a; }
};

DegreeWindow degree_bound_sigma(const Tower& t, const std::vector<TowerElem>& f);
DegreeWindow degree_bound_pi(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f);

// Coefficient recursion below a Pi/Sigma/R generator inside its window.
VBasis degree_reduce(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                     const DegreeWindow& w, const Limits& lim);

// Diagnostics of the sigma^lambda lift, recorded when requested.
struct NestedTrace {
    long lambda = 0;
    RatFun w;
    std::map<TowerElem::Key, std::vector<std::pair<KVec, RatFun>>> subBases;
};

VBasis pflde_root_single(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                         const Limits& lim);
VBasis pflde_root_nested(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                         const Limits& lim, NestedTrace* trace = nullptr);

// Full rational-solution basis of sigma_s(g) - u g = sum c_i f_i over K(k).
struct RatVBasis {
    std::vector<std::pair<KVec, RatFun>> rows;
};
RatVBasis pflde_base_rational(const FieldPtr& K, const RatFun& u, const std::vector<RatFun>& f,
                              long shiftStep);

VBasis pflde_solve(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                   const Limits& lim = {});

std::optional<TowerElem> telescope(const Tower& t, const TowerElem& f, const Limits& lim = {});

struct PTResult {
    bool found = false;
    KVec c;
    TowerElem g;
};
PTResult para_telescope(const Tower& t, const std::vector<TowerElem>& f, const Limits& lim = {});

void verify_vbasis(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                   const VBasis& v);

} // namespace ringsum

#endif
