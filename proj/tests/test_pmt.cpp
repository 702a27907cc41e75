#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringsum/linsys.hpp"
#include "ringsum/pmt.hpp"
#include "ringsum/units.hpp"

#include <random>

using namespace ringsum;

namespace {

std::mt19937 rng(4242);

Lattice L(std::initializer_list<std::initializer_list<long>> r, size_t n) {
    IntMat m;
    for (auto& row : r) {
        IntVec v;
        for (long x : row) v.push_back(Int(x));
        m.push_back(std::move(v));
    }
    return Lattice::from_rows(std::move(m), n);
}

// Q(i)(k)[x] with sigma(x) = i x, order 4
Tower qi_x() {
    Tower t(make_field(4));
    return t.with_root_gen("x", t.pg_from_unit(RatFun{Const::zeta(t.field())}), 4);
}

// Q(k)[x] with sigma(x) = -x, order 2
Tower q_x() {
    Tower t(make_field(1));
    return t.with_root_gen("x", t.pg_from_unit(RatFun(t.field(), Rat(-1))), 2);
}

RatFun rf_c(const FieldPtr& K, long v) { return RatFun(K, Rat(v)); }

} // namespace

TEST_CASE("pmt_base_rational over the Gaussian rationals") {
    auto K = make_field(4);
    RatFun k = RatFun::var(K);
    RatFun f2(Poly(Const(K, Rat(-1))), Poly::var(K) + Poly::one(K)); // -1/(k+1)
    RatFun iota{Const::zeta(K)};
    RatMBasis mb = pmt_base_rational(K, {k, f2, iota}, 1);
    CHECK(mb.lattice == L({{1, 1, 2}, {0, 0, 4}}, 3));
    // every witness satisfies sigma(g) = (prod f^m) g
    for (size_t r = 0; r < mb.lattice.rank(); ++r) {
        RatFun prod = RatFun::one(K);
        std::vector<RatFun> f{k, f2, iota};
        for (size_t i = 0; i < 3; ++i)
            prod = prod * f[i].pow(mb.lattice.rows()[r][i].get_si());
        CHECK(mb.witnesses[r].shifted(1) == prod * mb.witnesses[r]);
    }
}

TEST_CASE("pmt_base_rational simple cases") {
    auto K = make_field(1);
    CHECK(pmt_base_rational(K, {RatFun::one(K)}, 1).lattice == L({{1}}, 1));
    // (k+1)/k telescopes with witness k
    RatFun q(Poly::var(K) + Poly::one(K), Poly::var(K));
    RatMBasis mb = pmt_base_rational(K, {q}, 1);
    CHECK(mb.lattice == L({{1}}, 1));
    CHECK(mb.witnesses[0] == RatFun::var(K));
    // k admits no relation
    CHECK(pmt_base_rational(K, {RatFun::var(K)}, 1).lattice.rank() == 0);
    // shift-orbit interplay: both quotients telescope independently
    RatFun a(Poly::var(K), Poly::var(K) + Poly::one(K));
    RatFun b(Poly::var(K) + Poly::one(K), Poly::var(K) + Poly(Const(K, Rat(2))));
    CHECK(pmt_base_rational(K, {a, b}, 1).lattice == Lattice::full(2));
}

TEST_CASE("pmt_base_roots incremental Hermite scan") {
    Tower t = qi_x();
    const FieldPtr& K = t.field();
    PGElem x{RatFun::one(K), {1}};
    PGElem iota = t.pg_from_unit(RatFun{Const::zeta(K)});
    MBasis mb = pmt_base_roots(t, {x, x, iota});
    CHECK(mb.lattice == L({{1, 1, 0}, {0, 2, 0}, {0, 0, 1}}, 3));
    // sigma(g) = x^2 g has the solution class of x + i x^3
    MBasis sq = pmt_base_roots(t, {t.pg_normalize(PGElem{RatFun::one(K), {2}})});
    CHECK(sq.lattice == L({{1}}, 1));
    CHECK(!sq.witnesses[0].is_zero());
    // f = (i) over plain K (no generators)
    Tower base(K);
    MBasis mi = pmt_base_roots(base, {base.pg_from_unit(RatFun{Const::zeta(K)})});
    CHECK(mi.lattice == L({{4}}, 1));
}

TEST_CASE("pmt_solve nested R example (degree-bound basis)") {
    Tower t = qi_x();
    const FieldPtr& K = t.field();
    PGElem kx{RatFun::var(K), {1}};
    PGElem f2{RatFun(Poly(Const(K, Rat(-1))), Poly::var(K) + Poly::one(K)), {1}};
    MBasis mb = pmt_solve(t, {kx, f2});
    CHECK(mb.lattice == L({{1, 1}}, 2));
}

TEST_CASE("pmt_solve single-rooted and sigma shortcut") {
    // f = (-1) over Q(k)[x] with sigma(x) = -x: basis {(1)} with witness x
    Tower t = q_x();
    MBasis mb = pmt_solve(t, {t.pg_from_unit(rf_c(t.field(), -1))});
    CHECK(mb.lattice == L({{1}}, 1));
    CHECK(mb.witnesses[0] == t.gen_elem(0));
    // a Sigma layer on top must not change the answer
    Tower ts = t.with_sigma_gen("s", t.one());
    MBasis mbs = pmt_solve(ts, {ts.pg_from_unit(rf_c(t.field(), -1))});
    CHECK(mbs.lattice == mb.lattice);
    // and over the bare field the answer is {(2)} with witness 1
    Tower q(make_field(1));
    CHECK(pmt_solve(q, {q.pg_from_unit(rf_c(q.field(), -1))}).lattice == L({{2}}, 1));
}

TEST_CASE("pmt_solve rank bound and empty input") {
    Tower t = qi_x();
    MBasis mb = pmt_solve(t, {});
    CHECK(mb.lattice.rank() == 0);
    std::uniform_int_distribution<int> dc(1, 3);
    for (int it = 0; it < 10; ++it) {
        std::vector<PGElem> f;
        size_t n = static_cast<size_t>(dc(rng));
        for (size_t i = 0; i < n; ++i) {
            PGElem a{RatFun{Const::zeta(t.field(), dc(rng))}, {dc(rng)}};
            f.push_back(t.pg_normalize(a));
        }
        CHECK(pmt_solve(t, f).lattice.rank() <= n);
    }
}

TEST_CASE("pmt_solve pi reduction") {
    // Q(i)(k)[x]<t> with sigma(t) = k x t; f = (t) forces m = 0
    Tower t = qi_x();
    PGElem a{RatFun::var(t.field()), {1}};
    Tower tt = t.with_pi_gen("t", a);
    PGElem tmon{RatFun::one(tt.field()), {0, 1}};
    CHECK(pmt_solve(tt, {tmon}).lattice.rank() == 0);
    // -1 = i^2 is hit by x^2 here, so the minimal exponent drops to 1
    PGElem c2 = tt.pg_from_unit(rf_c(tt.field(), -1));
    MBasis m1 = pmt_solve(tt, {c2});
    CHECK(m1.lattice == L({{1}}, 1));
    CHECK(m1.witnesses[0] == tt.pow(tt.gen_elem(0), 2));
    // with t in the ring both quotients telescope on their own: (1,0) has
    // witness t itself and (0,1) recovers the x(i+x^2)/(k t) solution
    PGElem kx{RatFun::var(tt.field()), {1, 0}};
    PGElem f2{RatFun(Poly(Const(tt.field(), Rat(-1))), Poly::var(tt.field()) + Poly::one(tt.field())),
              {1, 0}};
    CHECK(pmt_solve(tt, {kx, f2}).lattice == Lattice::full(2));
}

TEST_CASE("pmt_base_rational with a wider shift step") {
    // sigma_4: k and k+4 fall in one orbit, k and k+1 do not
    auto K = make_field(1);
    Poly k = Poly::var(K);
    RatFun q(k, k + Poly(Const(K, Rat(4))));
    RatMBasis mb = pmt_base_rational(K, {q}, 4);
    CHECK(mb.lattice == L({{1}}, 1));
    CHECK(mb.witnesses[0].shifted(1, 4) == q * mb.witnesses[0]);
    RatFun q1(k, k + Poly::one(K));
    CHECK(pmt_base_rational(K, {q1}, 4).lattice.rank() == 0);
}

TEST_CASE("lattices over larger cyclotomic orders") {
    auto K8 = make_field(8);
    RatMBasis mb = pmt_base_rational(K8, {RatFun{Const::zeta(K8)}}, 1);
    CHECK(mb.lattice == L({{8}}, 1));
    // zeta_8^2 = i has order 4
    RatMBasis mb2 = pmt_base_rational(K8, {RatFun{Const::zeta(K8, 2)}}, 1);
    CHECK(mb2.lattice == L({{4}}, 1));
    // mixed: 2 and zeta_8 are independent; (1+zeta_8^2) pairs with 2
    auto Ki = make_field(4);
    std::vector<RatFun> units{RatFun(Ki, Rat(2)),
                              RatFun{Const(Ki, Cyc::one(Ki) + Cyc::zeta_pow(Ki, 1))}};
    Lattice rel = unit_relations(units);
    CHECK(rel.rank() == 1);
    CHECK(rel.contains({Int(-4), Int(8)})); // (1+i)^8 = 16
    CHECK(!rel.contains({Int(-2), Int(4)})); // (1+i)^4 = -4, not +4
}

TEST_CASE("mt_decide") {
    Tower base(make_field(4));
    // alpha = i over Q(i)(k): minimal m = 4 = ord(i): R-extension constructible
    MtResult r = mt_decide(base, base.pg_from_unit(RatFun{Const::zeta(base.field())}));
    CHECK(r.solvable);
    CHECK(r.m == 4);
    // alpha = x k over Q(i)(k)[x]: no solution: Pi-extension constructible
    Tower t = qi_x();
    MtResult r2 = mt_decide(t, PGElem{RatFun::var(t.field()), {1}});
    CHECK(!r2.solvable);
    MtResult r3 = mt_decide(t, t.pg_one());
    CHECK(r3.solvable);
    CHECK(r3.m == 1);
    // alpha = (k+1)/k collapses with m = 1, witness k
    Tower q(make_field(1));
    MtResult r4 = mt_decide(q, q.pg_from_unit(RatFun(Poly::var(q.field()) + Poly::one(q.field()),
                                                     Poly::var(q.field()))));
    CHECK(r4.solvable);
    CHECK(r4.m == 1);
}

// ---- brute-force box equivalence over Q(k)[x] ----

namespace {

// dense Q[k] helpers for the independent oracle
using QP = std::vector<Rat>;
QP qp_mul(const QP& a, const QP& b) {
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
QP qp_shift1(const QP& a) { // p(k+1)
    QP r(a.size(), Rat(0));
    for (size_t d = 0; d < a.size(); ++d) {
        Rat binom(1);
        for (size_t i = 0; i <= d; ++i) { // C(d, i) k^i
            r[d - i] += a[d] * binom;
            binom = binom * Rat(static_cast<long>(d - i)) / Rat(static_cast<long>(i + 1));
        }
    }
    return r;
}
QP to_qp(const Poly& p) {
    QP r(static_cast<size_t>(std::max<long>(p.degree(), 0)) + 1, Rat(0));
    for (const auto& [d, c] : p.coeffs()) r[static_cast<size_t>(d)] = c.rational_value();
    return r;
}

// decide sigma(g) = F g over Q(k)[x] by a bounded linear Ansatz
// g = (p0(k) + p1(k) x) / D(k), D = prod_{j in hull} (k+j)^R
bool brute_force_solvable(const PGElem& F, long R, long lo, long hi, long degN) {
    QP D{Rat(1)};
    for (long j = lo; j <= hi; ++j)
        for (long r = 0; r < R; ++r) D = qp_mul(D, {Rat(j), Rat(1)});
    QP Ds = qp_shift1(D);
    QP fnum = to_qp(F.unit.num()), fden = to_qp(F.unit.den());
    size_t nUnk = 2 * static_cast<size_t>(degN + 1);
    long xExp = F.exps[0] & 1;
    size_t maxLen = static_cast<size_t>(degN) + D.size() + fnum.size() + fden.size() + 2;
    auto idx = [&](int v, long d) { return static_cast<size_t>(v) * (degN + 1) + d; };
    // eq[v][u] = polynomial coefficient of unknown u in the x^v identity
    std::vector<std::vector<QP>> eq(2, std::vector<QP>(nUnk));
    QP DF = qp_mul(D, fden), DsF = qp_mul(Ds, fnum);
    for (int v = 0; v < 2; ++v)
        for (long d = 0; d <= degN; ++d) {
            QP mono(static_cast<size_t>(d) + 1, Rat(0));
            mono[static_cast<size_t>(d)] = 1;
            QP sp = qp_mul(qp_shift1(mono), DF); // sigma(g) * den-clearing
            if (v == 1)
                for (Rat& x : sp) x = -x;
            QP& dst = eq[v][idx(v, d)];
            if (dst.size() < sp.size()) dst.resize(sp.size(), Rat(0));
            for (size_t i = 0; i < sp.size(); ++i) dst[i] += sp[i];
            int vv = static_cast<int>((v + xExp) % 2);
            QP fp = qp_mul(mono, DsF);
            QP& dst2 = eq[vv][idx(v, d)];
            if (dst2.size() < fp.size()) dst2.resize(fp.size(), Rat(0));
            for (size_t i = 0; i < fp.size(); ++i) dst2[i] -= fp[i];
        }
    std::vector<std::vector<Rat>> rows;
    for (int v = 0; v < 2; ++v)
        for (size_t d = 0; d < maxLen; ++d) {
            std::vector<Rat> row(nUnk, Rat(0));
            bool nz = false;
            for (size_t u = 0; u < nUnk; ++u)
                if (d < eq[v][u].size() && eq[v][u][d] != 0) {
                    row[u] = eq[v][u][d];
                    nz = true;
                }
            if (nz) rows.push_back(std::move(row));
        }
    // rational Gaussian elimination; solvable iff rank < nUnk
    size_t rank = 0;
    for (size_t c = 0; c < nUnk && rank < rows.size(); ++c) {
        size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Rat inv = Rat(1) / rows[rank][c];
        for (size_t j = c; j < nUnk; ++j) rows[rank][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (size_t j = c; j < nUnk; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank < nUnk;
}

} // namespace

TEST_CASE("pmt box equivalence over Q(k)[x]") {
    Tower t = q_x();
    const FieldPtr& K = t.field();
    std::uniform_int_distribution<int> da(0, 1), de(0, 1), dx(0, 1), dc(0, 3);
    const long B = 3;
    int checked = 0;
    for (int inst = 0; inst < 3; ++inst) {
        std::vector<PGElem> f;
        for (size_t i = 0; i < 2; ++i) {
            Poly atom = Poly::var(K) + Poly(Const(K, Rat(da(rng))));
            RatFun u = RatFun(atom).pow(de(rng) == 0 ? -1 : 1);
            long cs[] = {1, -1, 2, -2};
            u = u * RatFun(K, Rat(cs[dc(rng)]));
            f.push_back(t.pg_normalize(PGElem{u, {dx(rng)}}));
        }
        MBasis mb = pmt_solve(t, f);
        for (long m1 = -B; m1 <= B; ++m1)
            for (long m2 = -B; m2 <= B; ++m2) {
                IntVec m{Int(m1), Int(m2)};
                PGElem F = t.pg_mul(t.pg_pow(f[0], m1), t.pg_pow(f[1], m2));
                bool brute = brute_force_solvable(F, 7, -1, 2, 36);
                CHECK(mb.lattice.contains(m) == brute);
                ++checked;
            }
    }
    CHECK(checked == 3 * 49);
}
