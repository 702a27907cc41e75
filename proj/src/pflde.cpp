#include "ringsum/pflde.hpp"

#include <algorithm>
#include <mutex>

namespace ringsum {

namespace {

long gen_degree(const TowerElem& e, size_t pos) {
    long d = std::numeric_limits<long>::min();
    for (const auto& [k, v] : e.terms()) d = std::max<long>(d, k[pos]);
    return d; // min() stands in for -infinity on the zero element
}

long gen_ldegree(const TowerElem& e, size_t pos) {
    long d = std::numeric_limits<long>::max();
    for (const auto& [k, v] : e.terms()) d = std::min<long>(d, k[pos]);
    return d;
}

// coefficient of tau^deg in f, as an element of the sub-tower
TowerElem gen_coeff(const TowerElem& f, size_t pos, long deg) {
    TowerElem::Terms out;
    for (const auto& [k, v] : f.terms()) {
        if (k[pos] != deg) continue;
        TowerElem::Key key(k.begin(), k.begin() + pos);
        out.emplace(std::move(key), v);
    }
    return raw_terms(std::move(out));
}

} // namespace

void verify_vbasis(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                   const VBasis& v) {
    TowerElem ue = t.pg_to_elem(u);
    for (const SpanRow& row : v.rows) {
        if (row.c.size() != f.size()) throw std::logic_error("VBasis: c length mismatch");
        TowerElem rhs = t.zero();
        for (size_t i = 0; i < f.size(); ++i) rhs = t.add(rhs, t.scale(f[i], row.c[i]));
        TowerElem delta = t.sub(t.sub(t.sigma(row.g), t.mul(ue, row.g)), rhs);
        if (!delta.is_zero()) throw std::logic_error("VBasis: row fails verification");
        bool allZero = row.g.is_zero();
        for (const Const& c : row.c)
            if (!c.is_zero()) allZero = false;
        if (allZero) throw std::logic_error("VBasis: zero row");
    }
}

// ------------------------------------------------------------ degree bounds

DegreeWindow degree_bound_sigma(const Tower& t, const std::vector<TowerElem>& f) {
    size_t pos = t.size() - 1;
    long bt = std::numeric_limits<long>::min();
    for (const TowerElem& fi : f) bt = std::max(bt, gen_degree(fi, pos));
    DegreeWindow w;
    w.a = 0;
    w.b = bt == std::numeric_limits<long>::min() ? 0 : std::max(bt + 1, 0L);
    return w;
}

namespace {

// nu with sigma(gamma) = alpha^{-nu} u gamma, from a basis of M((alpha, u), A)
std::optional<long> nu_search(const Tower& sub, const PGElem& alpha, const PGElem& v) {
    static std::mutex mtx;
    static std::map<std::pair<long, std::string>, std::optional<long>> memo;
    std::string key = sub.pg_str(alpha) + "|" + sub.pg_str(v);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find({sub.id(), key});
        if (it != memo.end()) return it->second;
    }
    MBasis mb = pmt_solve(sub, {alpha, v});
    // need a lattice vector (w, 1); achievable second coordinates form gZ
    std::optional<long> result;
    Int g(0), wAcc(0);
    for (const auto& row : mb.lattice.rows()) {
        if (row[1] == 0) continue;
        if (g == 0) {
            g = row[1];
            wAcc = row[0];
        } else {
            Int s, x, y;
            mpz_gcdext(s.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t(),
                       row[1].get_mpz_t());
            wAcc = x * wAcc + y * row[0];
            g = s;
        }
    }
    if (g != 0 && (g == 1 || g == -1)) {
        Int w = wAcc * g; // scale to second coordinate exactly 1
        if (!w.fits_slong_p()) throw CapExceeded("nu exponent overflow");
        result = -w.get_si();
    }
    {
        std::lock_guard<std::mutex> lock(mtx);
        memo[{sub.id(), key}] = result;
    }
    return result;
}

} // namespace

DegreeWindow degree_bound_pi(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f) {
    size_t pos = t.size() - 1;
    long m = u.exps[pos];
    long bt = std::numeric_limits<long>::min();
    long at = std::numeric_limits<long>::max();
    for (const TowerElem& fi : f) {
        if (fi.is_zero()) continue;
        bt = std::max(bt, gen_degree(fi, pos));
        at = std::min(at, gen_ldegree(fi, pos));
    }
    bool noF = bt == std::numeric_limits<long>::min();
    DegreeWindow w;
    if (m != 0) {
        if (noF) {
            w.a = 0;
            w.b = -1;
            return w;
        }
        w.a = std::max(at, at - m);
        w.b = std::min(bt, bt - m);
        return w;
    }
    Tower sub = t.prefix(pos);
    PGElem alpha = sub.pg_normalize(t.gen(pos).alpha);
    PGElem v = sub.pg_normalize(t.restrict_pg(u, pos));
    std::optional<long> nu = nu_search(sub, alpha, v);
    if (nu) {
        w.a = noF ? *nu : std::min(at, *nu);
        w.b = noF ? *nu : std::max(bt, *nu);
    } else {
        w.a = noF ? 0 : std::min(at, 0L);
        w.b = noF ? -1 : std::max(bt, -1L);
    }
    return w;
}

// -------------------------------------------------------------- base: K(k)

namespace {

// Abramov-style universal denominator for a1 sigma(y) + a0 y = psi.
Poly universal_denominator(const FieldPtr& K, Poly a1, Poly a0, long step) {
    Poly A = a1.shifted(-1, step).monic();
    Poly B = a0.monic();
    Poly D = Poly::one(K);
    while (A.degree() >= 1 && B.degree() >= 1) {
        long h = -1;
        for (long j : dispersion(A, B))
            if (j % step == 0) h = std::max(h, j / step);
        if (h < 0) break;
        Poly d = poly_gcd(A, B.shifted(h, step));
        if (d.degree() < 1) break;
        A = A.div_exact(d);
        B = B.div_exact(d.shifted(-h, step));
        for (long i = 0; i <= h; ++i) D = D * d.shifted(-i, step);
    }
    return D;
}

} // namespace

RatVBasis pflde_base_rational(const FieldPtr& K, const RatFun& u, const std::vector<RatFun>& f,
                              long shiftStep) {
    if (u.is_zero()) throw std::invalid_argument("pflde_base_rational: u must be nonzero");
    size_t n = f.size();
    // clear denominators: q sigma(g) - p g = sum c_i (q E f_i) with E = lcm den(f)
    Poly q = u.den(), p = u.num();
    Poly E = Poly::one(K);
    for (const RatFun& fi : f)
        if (!fi.is_zero()) E = E.div_exact(poly_gcd(E, fi.den())) * fi.den();
    Poly a1 = q * E;
    Poly a0 = -(p * E);
    std::vector<Poly> psi;
    for (const RatFun& fi : f)
        psi.push_back(fi.is_zero() ? Poly::zero(K) : fi.num() * (q * E.div_exact(fi.den())));
    Poly D = universal_denominator(K, a1, a0, shiftStep);
    // substitute g = y/D and clear: As sigma(y) + Bs y = sum c_i psis_i
    Poly As = a1 * D;
    Poly Bs = a0 * D.shifted(1, shiftStep);
    Poly DD = D * D.shifted(1, shiftStep);
    std::vector<Poly> psis;
    for (Poly& ps : psi) psis.push_back(ps * DD);
    // degree bound for y
    long maxPsi = -1;
    for (const Poly& ps : psis) maxPsi = std::max(maxPsi, ps.degree());
    long dA = As.degree(), dB = Bs.degree();
    long bound;
    if (dA != dB) {
        bound = maxPsi - std::max(dA, dB);
    } else {
        Const s = As.lead_coeff() + Bs.lead_coeff();
        if (!s.is_zero()) {
            bound = maxPsi - dA;
        } else {
            bound = maxPsi - dA + 1;
            Const sub = As.coeff(dA - 1) + Bs.coeff(dA - 1);
            Const dstar = -sub / (As.lead_coeff() * Const(K, Rat(shiftStep)));
            if (dstar.is_integer() && dstar.integer_value() >= 0)
                bound = std::max(bound, dstar.integer_value());
        }
    }
    RatVBasis out;
    // linear system over K in y_0..y_bound, c_1..c_n
    long ny = std::max(bound + 1, 0L);
    size_t nUnk = static_cast<size_t>(ny) + n;
    std::vector<Poly> cols(nUnk, Poly::zero(K));
    for (long d = 0; d < ny; ++d) {
        Poly mono = Poly::zero(K);
        mono.set_coeff(d, Const::one(K));
        cols[static_cast<size_t>(d)] = As * mono.shifted(1, shiftStep) + Bs * mono;
    }
    for (size_t i = 0; i < n; ++i) cols[static_cast<size_t>(ny) + i] = -psis[i];
    long maxDeg = -1;
    for (const Poly& c : cols) maxDeg = std::max(maxDeg, c.degree());
    KMat rows;
    for (long d = 0; d <= maxDeg; ++d) {
        KVec row;
        bool nz = false;
        for (const Poly& c : cols) {
            row.push_back(c.coeff(d));
            if (!row.back().is_zero()) nz = true;
        }
        if (nz) rows.push_back(std::move(row));
    }
    KMat ker = k_kernel(std::move(rows), K, nUnk);
    for (const KVec& v : ker) {
        Poly y = Poly::zero(K);
        for (long d = 0; d < ny; ++d) y.set_coeff(d, v[static_cast<size_t>(d)]);
        KVec c(v.begin() + ny, v.end());
        out.rows.push_back({std::move(c), RatFun(y, D)});
    }
    return out;
}

// ------------------------------------------------- coefficient recursion

namespace {

VBasis pflde_rec(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                 const Limits& lim);

// kernel-only solution space { (c, 0) : sum c_i f_i = 0 }
VBasis constants_kernel(const Tower& t, const std::vector<TowerElem>& f) {
    VBasis v;
    if (f.empty()) return v;
    KMat ker = elem_linear_kernel(t, f);
    for (KVec& c : ker) v.rows.push_back({std::move(c), t.zero()});
    return v;
}

} // namespace

VBasis degree_reduce(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                     const DegreeWindow& w, const Limits& lim) {
    size_t n = f.size();
    if (w.empty()) return constants_kernel(t, f);
    size_t pos = t.size() - 1;
    const Generator& top = t.gen(pos);
    long m = u.exps[pos];
    long b = w.b;
    long lambda = std::max(b, b + m);
    Tower sub = t.prefix(pos);
    PGElem v = sub.pg_normalize(t.restrict_pg([&] {
        PGElem r = u;
        r.exps[pos] = 0;
        return r;
    }(), pos));
    PGElem alpha = top.kind == GenKind::Sigma ? sub.pg_one() : sub.pg_normalize(top.alpha);
    std::vector<TowerElem> ft;
    for (const TowerElem& fi : f) ft.push_back(gen_coeff(fi, pos, lambda));
    // top-coefficient solution space over the sub-tower: rows (c, gamma)
    std::vector<SpanRow> topRows;
    if (m > 0) {
        TowerElem vinv = sub.pg_to_elem(sub.pg_invert(v));
        for (size_t i = 0; i < n; ++i) {
            KVec c(n, Const::zero(t.field()));
            c[i] = Const::one(t.field());
            topRows.push_back({std::move(c), sub.neg(sub.mul(vinv, ft[i]))});
        }
    } else if (m < 0) {
        TowerElem abinv = sub.pg_to_elem(sub.pg_pow(alpha, -b));
        for (size_t i = 0; i < n; ++i) {
            KVec c(n, Const::zero(t.field()));
            c[i] = Const::one(t.field());
            topRows.push_back({std::move(c), sub.sigma(sub.mul(abinv, ft[i]), -1)});
        }
    } else {
        PGElem u2 = sub.pg_mul(v, sub.pg_pow(alpha, -b));
        TowerElem abinv = sub.pg_to_elem(sub.pg_pow(alpha, -b));
        std::vector<TowerElem> f2;
        for (const TowerElem& fi : ft) f2.push_back(sub.mul(abinv, fi));
        VBasis vb = pflde_rec(sub, u2, f2, lim);
        topRows = vb.rows;
    }
    // plug gamma tau^b back in and recurse on the reduced window
    TowerElem ue = t.pg_to_elem(u);
    TowerElem::Key bkey(t.size(), 0);
    bkey[pos] = static_cast<int>(b);
    TowerElem taub = t.monomial(RatFun::one(t.field()), bkey);
    std::vector<TowerElem> fNext;
    std::vector<TowerElem> gTop;
    for (const SpanRow& row : topRows) {
        TowerElem gt = t.mul(t.lift(row.g, pos), taub);
        gTop.push_back(gt);
        TowerElem F = t.zero();
        for (size_t i = 0; i < n; ++i) F = t.add(F, t.scale(f[i], row.c[i]));
        F = t.sub(F, t.sub(t.sigma(gt), t.mul(ue, gt)));
        fNext.push_back(std::move(F));
    }
    DegreeWindow wNext{w.a, b - 1, true};
    VBasis inner = degree_reduce(t, u, fNext, wNext, lim);
    VBasis out;
    for (const SpanRow& ir : inner.rows) {
        KVec c(n, Const::zero(t.field()));
        TowerElem g = ir.g;
        for (size_t j = 0; j < topRows.size(); ++j) {
            if (ir.c[j].is_zero()) continue;
            for (size_t i = 0; i < n; ++i) c[i] = c[i] + ir.c[j] * topRows[j].c[i];
            g = t.add(g, t.scale(gTop[j], ir.c[j]));
        }
        bool allZero = g.is_zero();
        for (const Const& ci : c)
            if (!ci.is_zero()) allZero = false;
        if (!allZero) out.rows.push_back({std::move(c), std::move(g)});
    }
    return out;
}

// --------------------------------------------- R-extension reductions

VBasis pflde_root_single(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                         const Limits& lim) {
    size_t pos = t.size() - 1;
    if (t.gen(pos).kind != GenKind::Root || u.exps[pos] != 0)
        throw std::invalid_argument("pflde_root_single: R generator with u free of it expected");
    DegreeWindow w{0, t.gen(pos).order - 1, true};
    return degree_reduce(t, u, f, w, lim);
}

VBasis pflde_root_nested(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                         const Limits& lim, NestedTrace* trace) {
    const FieldPtr& K = t.field();
    size_t n = f.size();
    for (const Generator& g : t.gens())
        if (g.kind != GenKind::Root)
            throw NotSimpleTower("pflde_root_nested needs a pure R-block");
    // lambda = lcm(ford(alpha), per(x_1), ..., per(x_r)); any lambda with
    // (alpha)_lambda constant and sigma^lambda fixing the x_i would do, which
    // can be smaller, but the plain lcm keeps the invariants simple
    PGElem alpha{RatFun::one(K), u.exps};
    long lambda = t.ford_pg(alpha);
    if (lambda == 0) throw NotSimpleTower("monomial part of u has no factorial order");
    for (const Generator& g : t.gens()) {
        if (g.per == 0) throw NotSimpleTower("R generator without period");
        lambda = lcm_long(lambda, g.per);
    }
    if (lambda > lim.lambdaCap)
        throw LambdaOverflow("sigma^lambda lift exceeds the configured cap (lambda = " +
                             std::to_string(lambda) + ")");
    PGElem wPg = t.sigma_factorial(u, lambda);
    for (size_t i = 0; i < wPg.exps.size(); ++i)
        if (wPg.exps[i] != 0) throw std::logic_error("sigma-factorial of u is not a unit");
    RatFun wUnit = wPg.unit;
    // f~_i = sum_j (u)_lambda / (u)_{j+1} sigma^j(f_i)
    std::vector<TowerElem> fTilde(n, t.zero());
    for (long j = 0; j < lambda; ++j) {
        PGElem ratio = t.pg_mul(wPg, t.pg_invert(t.sigma_factorial(u, j + 1)));
        TowerElem re = t.pg_to_elem(ratio);
        for (size_t i = 0; i < n; ++i)
            fTilde[i] = t.add(fTilde[i], t.mul(re, t.sigma(f[i], j)));
    }
    // per-monomial solves over (K(k), sigma^lambda)
    std::vector<TowerElem::Key> box;
    {
        TowerElem::Key cur(t.size(), 0);
        std::function<void(size_t)> rec = [&](size_t d) {
            if (d == t.size()) {
                box.push_back(cur);
                return;
            }
            for (long e = 0; e < t.gen(d).order; ++e) {
                cur[d] = static_cast<int>(e);
                rec(d + 1);
            }
            cur[d] = 0;
        };
        rec(0);
    }
    if (trace) {
        trace->lambda = lambda;
        trace->w = wUnit;
    }
    std::vector<std::vector<std::pair<KVec, RatFun>>> vi;
    for (const TowerElem::Key& s : box) {
        std::vector<RatFun> fs;
        for (size_t i = 0; i < n; ++i)
            fs.push_back(fTilde[i].is_zero() ? RatFun::zero(K) : fTilde[i].coeff_at(s));
        RatVBasis basis = pflde_base_rational(K, wUnit, fs, t.shift_step() * lambda);
        if (trace) trace->subBases[s] = basis.rows;
        vi.push_back(std::move(basis.rows));
    }
    // combine: unknowns d_{s,row}; c-parts must agree across monomials.
    // TODO: solve one V_i, substitute, and shrink the remaining right-hand
    // sides instead of this single global recombination; shortens the f~
    // vectors step by step on towers with many root monomials.
    std::vector<size_t> offset(box.size() + 1, 0);
    for (size_t s = 0; s < box.size(); ++s) offset[s + 1] = offset[s] + vi[s].size();
    size_t nUnk = offset[box.size()];
    KMat rows;
    for (size_t s = 1; s < box.size(); ++s)
        for (size_t i = 0; i < n; ++i) {
            KVec row(nUnk, Const::zero(K));
            bool nz = false;
            for (size_t r = 0; r < vi[0].size(); ++r) {
                row[offset[0] + r] = vi[0][r].first[i];
                if (!row[offset[0] + r].is_zero()) nz = true;
            }
            for (size_t r = 0; r < vi[s].size(); ++r) {
                row[offset[s] + r] = -vi[s][r].first[i];
                if (!row[offset[s] + r].is_zero()) nz = true;
            }
            if (nz) rows.push_back(std::move(row));
        }
    KMat ker = k_kernel(std::move(rows), K, nUnk);
    // tilde-V rows
    std::vector<SpanRow> tildeRows;
    for (const KVec& d : ker) {
        KVec c(n, Const::zero(K));
        for (size_t i = 0; i < n; ++i)
            for (size_t r = 0; r < vi[0].size(); ++r)
                c[i] = c[i] + d[offset[0] + r] * vi[0][r].first[i];
        TowerElem g = t.zero();
        for (size_t s = 0; s < box.size(); ++s) {
            RatFun gs = RatFun::zero(K);
            for (size_t r = 0; r < vi[s].size(); ++r)
                if (!d[offset[s] + r].is_zero())
                    gs = gs + RatFun(d[offset[s] + r]) * vi[s][r].second;
            if (!gs.is_zero()) g = t.add(g, t.monomial(gs, box[s]));
        }
        tildeRows.push_back({std::move(c), std::move(g)});
    }
    // plug the generic combination back into the order-1 equation
    TowerElem ue = t.pg_to_elem(u);
    std::vector<TowerElem> cols;
    for (const SpanRow& row : tildeRows) {
        TowerElem E = t.sub(t.sigma(row.g), t.mul(ue, row.g));
        for (size_t i = 0; i < n; ++i) E = t.sub(E, t.scale(f[i], row.c[i]));
        cols.push_back(std::move(E));
    }
    VBasis out;
    if (cols.empty()) return out;
    KMat dker = elem_linear_kernel(t, cols);
    for (const KVec& d : dker) {
        KVec c(n, Const::zero(K));
        TowerElem g = t.zero();
        for (size_t j = 0; j < tildeRows.size(); ++j) {
            if (d[j].is_zero()) continue;
            for (size_t i = 0; i < n; ++i) c[i] = c[i] + d[j] * tildeRows[j].c[i];
            g = t.add(g, t.scale(tildeRows[j].g, d[j]));
        }
        bool allZero = g.is_zero();
        for (const Const& ci : c)
            if (!ci.is_zero()) allZero = false;
        if (!allZero) out.rows.push_back({std::move(c), std::move(g)});
    }
    return out;
}

// --------------------------------------------------------------- orchestra

namespace {

VBasis pflde_rec(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                 const Limits& lim) {
    if (t.size() == 0) {
        std::vector<RatFun> rf;
        for (const TowerElem& fi : f)
            rf.push_back(fi.is_zero() ? RatFun::zero(t.field()) : fi.coefficient_value());
        RatVBasis rb = pflde_base_rational(t.field(), u.unit, rf, t.shift_step());
        VBasis out;
        for (auto& [c, g] : rb.rows) out.rows.push_back({c, t.from_ratfun(g)});
        return out;
    }
    size_t pos = t.size() - 1;
    const Generator& top = t.gen(pos);
    if (top.kind == GenKind::Sigma)
        return degree_reduce(t, u, f, degree_bound_sigma(t, f), lim);
    if (top.kind == GenKind::Pi)
        return degree_reduce(t, u, f, degree_bound_pi(t, u, f), lim);
    if (u.exps[pos] == 0) return pflde_root_single(t, u, f, lim);
    return pflde_root_nested(t, u, f, lim);
}

} // namespace

VBasis pflde_solve(const Tower& t, const PGElem& u, const std::vector<TowerElem>& f,
                   const Limits& lim) {
    auto [rt, perm] = reorder_r_first(t);
    PGElem ru = rt.pg_normalize(remap_pg(u, perm, rt.size()));
    std::vector<TowerElem> rf;
    for (const TowerElem& fi : f) rf.push_back(remap_elem(fi, perm, rt.size()));
    VBasis vb = pflde_rec(rt, ru, rf, lim);
    std::vector<size_t> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    for (SpanRow& row : vb.rows) row.g = remap_elem(row.g, inv, t.size());
    verify_vbasis(t, u, f, vb);
    return vb;
}

std::optional<TowerElem> telescope(const Tower& t, const TowerElem& f, const Limits& lim) {
    VBasis vb = pflde_solve(t, t.pg_one(), {f}, lim);
    for (const SpanRow& row : vb.rows)
        if (!row.c[0].is_zero()) return t.scale(row.g, row.c[0].inverse());
    return std::nullopt;
}

PTResult para_telescope(const Tower& t, const std::vector<TowerElem>& f, const Limits& lim) {
    VBasis vb = pflde_solve(t, t.pg_one(), f, lim);
    PTResult best;
    size_t bestNonzero = 0;
    bool bestFirst = false;
    for (const SpanRow& row : vb.rows) {
        size_t nz = 0;
        bool touchesInput = false;
        for (size_t i = 0; i < row.c.size(); ++i)
            if (!row.c[i].is_zero()) {
                ++nz;
                if (!f[i].is_zero()) touchesInput = true;
            }
        // rows supported entirely on zero inputs are vacuous
        if (nz == 0 || !touchesInput) continue;
        bool first = !row.c[0].is_zero();
        bool better = !best.found || (first && !bestFirst) ||
                      (first == bestFirst && nz < bestNonzero);
        if (better) {
            best.found = true;
            best.c = row.c;
            best.g = row.g;
            bestNonzero = nz;
            bestFirst = first;
        }
    }
    return best;
}

} // namespace ringsum
