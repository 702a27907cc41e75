#include "ringsum/lattice.hpp"

#include <stdexcept>

namespace ringsum {

void hnf_transform(const IntMat& a, size_t cols, IntMat& h, IntMat& u) {
    size_t n = a.size();
    h = a;
    for (auto& r : h) r.resize(cols, Int(0));
    u.assign(n, IntVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    size_t pivotRow = 0;
    for (size_t col = 0; col < cols && pivotRow < n; ++col) {
        // Gcd elimination in this column below pivotRow.
        while (true) {
            size_t best = n;
            for (size_t r = pivotRow; r < n; ++r)
                if (h[r][col] != 0 &&
                    (best == n || cmp(abs(h[r][col]), abs(h[best][col])) < 0))
                    best = r;
            if (best == n) break;
            if (best != pivotRow) {
                std::swap(h[best], h[pivotRow]);
                std::swap(u[best], u[pivotRow]);
            }
            bool reducedAll = true;
            for (size_t r = pivotRow + 1; r < n; ++r) {
                if (h[r][col] == 0) continue;
                Int q = int_fdiv(h[r][col], h[pivotRow][col]);
                if (q != 0) {
                    for (size_t c = 0; c < cols; ++c) h[r][c] -= q * h[pivotRow][c];
                    for (size_t c = 0; c < n; ++c) u[r][c] -= q * u[pivotRow][c];
                }
                if (h[r][col] != 0) reducedAll = false;
            }
            if (reducedAll) break;
        }
        if (h[pivotRow][col] == 0) continue;
        if (h[pivotRow][col] < 0) {
            for (auto& x : h[pivotRow]) x = -x;
            for (auto& x : u[pivotRow]) x = -x;
        }
        for (size_t r = 0; r < pivotRow; ++r) {
            Int q = int_fdiv(h[r][col], h[pivotRow][col]);
            if (q != 0) {
                for (size_t c = 0; c < cols; ++c) h[r][c] -= q * h[pivotRow][c];
                for (size_t c = 0; c < n; ++c) u[r][c] -= q * u[pivotRow][c];
            }
        }
        ++pivotRow;
    }
}

Lattice Lattice::from_rows(IntMat rows, size_t ambient) {
    IntMat h, u;
    hnf_transform(rows, ambient, h, u);
    Lattice l(ambient);
    for (auto& r : h) {
        bool zero = true;
        for (const Int& x : r)
            if (x != 0) {
                zero = false;
                break;
            }
        if (!zero) l.rows_.push_back(std::move(r));
    }
    return l;
}

Lattice Lattice::full(size_t ambient) {
    IntMat rows(ambient, IntVec(ambient, Int(0)));
    for (size_t i = 0; i < ambient; ++i) rows[i][i] = 1;
    return from_rows(std::move(rows), ambient);
}

std::optional<IntVec> Lattice::solve(const IntVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("lattice dimension mismatch");
    IntVec rem = v;
    IntVec c(rows_.size(), Int(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t p = 0;
        while (rows_[i][p] == 0) ++p;
        if (rem[p] == 0) continue;
        if (!int_divisible(rem[p], rows_[i][p])) return std::nullopt;
        Int q = rem[p] / rows_[i][p];
        c[i] = q;
        for (size_t j = 0; j < cols_; ++j) rem[j] -= q * rows_[i][j];
    }
    for (const Int& x : rem)
        if (x != 0) return std::nullopt;
    return c;
}

bool Lattice::contains(const IntVec& v) const { return solve(v).has_value(); }

Lattice lattice_hnf(const IntMat& rows, size_t ambient) {
    return Lattice::from_rows(rows, ambient);
}

Lattice left_kernel(const IntMat& a, size_t cols) {
    IntMat h, u;
    hnf_transform(a, cols, h, u);
    IntMat ker;
    for (size_t r = 0; r < h.size(); ++r) {
        bool zero = true;
        for (const Int& x : h[r])
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) ker.push_back(u[r]);
    }
    return Lattice::from_rows(std::move(ker), a.size());
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("lattice_intersect: ambient dimension mismatch");
    // z = (x, y) with x*A − y*B = 0; the intersection is spanned by the x*A.
    IntMat stacked;
    for (const auto& r : a.rows()) stacked.push_back(r);
    for (const auto& r : b.rows()) {
        IntVec neg = r;
        for (Int& v : neg) v = -v;
        stacked.push_back(std::move(neg));
    }
    Lattice ker = left_kernel(stacked, a.ambient());
    IntMat rows;
    for (const auto& z : ker.rows()) {
        IntVec v(a.ambient(), Int(0));
        for (size_t i = 0; i < a.rank(); ++i)
            for (size_t j = 0; j < a.ambient(); ++j) v[j] += z[i] * a.rows()[i][j];
        rows.push_back(std::move(v));
    }
    return Lattice::from_rows(std::move(rows), a.ambient());
}

Lattice annihilator(const IntVec& e) {
    IntMat a(e.size(), IntVec(1, Int(0)));
    for (size_t i = 0; i < e.size(); ++i) a[i][0] = e[i];
    return left_kernel(a, 1);
}

Lattice lattice_project(const Lattice& l, size_t firstN) {
    IntMat rows;
    for (const auto& r : l.rows()) rows.emplace_back(r.begin(), r.begin() + firstN);
    return Lattice::from_rows(std::move(rows), firstN);
}

std::optional<IntVec> integer_solve(const IntMat& rows, size_t cols, const IntVec& target) {
    IntMat h, u;
    hnf_transform(rows, cols, h, u);
    IntVec rem = target;
    IntVec chnf(h.size(), Int(0));
    for (size_t i = 0; i < h.size(); ++i) {
        size_t p = 0;
        while (p < cols && h[i][p] == 0) ++p;
        if (p == cols) continue;
        if (rem[p] == 0) continue;
        if (!int_divisible(rem[p], h[i][p])) return std::nullopt;
        Int q = rem[p] / h[i][p];
        chnf[i] = q;
        for (size_t j = 0; j < cols; ++j) rem[j] -= q * h[i][j];
    }
    for (const Int& x : rem)
        if (x != 0) return std::nullopt;
    IntVec c(rows.size(), Int(0));
    for (size_t i = 0; i < h.size(); ++i)
        if (chnf[i] != 0)
            for (size_t j = 0; j < rows.size(); ++j) c[j] += chnf[i] * u[i][j];
    return c;
}

} // namespace ringsum
