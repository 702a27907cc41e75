#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringsum/cyclotomic.hpp"
#include "ringsum/lattice.hpp"
#include "ringsum/units.hpp"

#include <random>

using namespace ringsum;

namespace {

FieldPtr Q() { return make_field(1); }
FieldPtr Qi() { return make_field(4); }

Poly P(const FieldPtr& K, std::initializer_list<long> coeffsLowToHigh) {
    Poly p = Poly::zero(K);
    long d = 0;
    for (long c : coeffsLowToHigh) p.set_coeff(d++, Const(K, Rat(c)));
    return p;
}

Lattice L(IntMat rows, size_t n) { return Lattice::from_rows(std::move(rows), n); }

IntMat rows_of(std::initializer_list<std::initializer_list<long>> r) {
    IntMat m;
    for (auto& row : r) {
        IntVec v;
        for (long x : row) v.push_back(Int(x));
        m.push_back(std::move(v));
    }
    return m;
}

// brute-force dispersion: scan shifts up to a cap
std::set<long> dispersion_scan(const Poly& p, const Poly& q, long cap) {
    std::set<long> out;
    for (long j = 0; j <= cap; ++j)
        if (poly_gcd(p, q.shifted(j)).degree() >= 1) out.insert(j);
    return out;
}

std::mt19937 rng(20240817);

Poly random_poly(const FieldPtr& K, int maxDeg) {
    std::uniform_int_distribution<int> dd(0, maxDeg), dc(-4, 4);
    Poly p = Poly::zero(K);
    int d = dd(rng);
    for (int i = 0; i <= d; ++i) p.set_coeff(i, Const(K, Rat(dc(rng))));
    if (p.is_zero()) p.set_coeff(0, Const(K, Rat(1)));
    return p;
}

} // namespace

TEST_CASE("cyclotomic field basics") {
    auto K = Qi();
    CHECK(K->degree() == 2); // Phi_4 = z^2 + 1
    Cyc i = Cyc::zeta_pow(K, 1);
    CHECK((i * i) == Cyc(K, Rat(-1)));
    CHECK(i.pow(4).is_one());
    CHECK(i.root_of_unity_order() == 4);
    CHECK((-Cyc::one(K)).root_of_unity_order() == 2);
    CHECK(Cyc(K, Rat(2)).root_of_unity_order() == 0);
    Cyc z = Cyc(K, Rat(3)) + i;
    CHECK((z * z.inverse()).is_one());
    // odd order: root group has order 2N
    auto K3 = make_field(3);
    CHECK(root_group_generator(K3).root_of_unity_order() == 6);
}

TEST_CASE("mpoly gcd over parameters") {
    auto K = make_field(1, {"n", "m"});
    MPoly n = MPoly::param(K, 0), m = MPoly::param(K, 1);
    MPoly one = MPoly::one(K);
    MPoly a = (n + one) * (n - m);
    MPoly b = (n + one) * (n + m);
    MPoly g = mpoly_gcd(a, b);
    CHECK(g == n + one);
    CHECK(mpoly_gcd(a, MPoly::zero(K)) == (n + one) * (n - m));
    // random products share the planted factor
    MPoly c = n * n + m;
    CHECK(mpoly_gcd(a * c, b * c).divides(a * c));
}

TEST_CASE("poly_gcd examples") {
    auto K = Q();
    Poly k2m1 = P(K, {-1, 0, 1});
    Poly km1 = P(K, {-1, 1});
    CHECK(poly_gcd(k2m1, km1) == km1.monic());
    CHECK(poly_gcd(P(K, {0, 1}), P(K, {1, 1})) == Poly::one(K));
    CHECK(poly_gcd(Poly::zero(K), Poly::zero(K)).is_zero());

    // over Q(i): gcd(k^2+1, k-i) = k-i, after checking (k-i)(k+i) = k^2+1
    auto Ki = Qi();
    Poly kmi = Poly::var(Ki) - Poly(Const::zeta(Ki));
    Poly kpi = Poly::var(Ki) + Poly(Const::zeta(Ki));
    Poly k2p1 = P(Ki, {1, 0, 1});
    CHECK(kmi * kpi == k2p1);
    CHECK(poly_gcd(k2p1, kmi) == kmi);
}

TEST_CASE("poly_gcd divides both and cofactors are coprime") {
    auto K = Q();
    for (int it = 0; it < 120; ++it) {
        Poly p = random_poly(K, 4), q = random_poly(K, 4);
        Poly g = poly_gcd(p, q);
        if (g.is_zero()) continue;
        Poly qp, rp, qq, rq;
        p.divmod(g, qp, rp);
        q.divmod(g, qq, rq);
        CHECK(rp.is_zero());
        CHECK(rq.is_zero());
        CHECK(poly_gcd(qp, qq).degree() == 0);
    }
}

TEST_CASE("shift_poly") {
    auto K = Q();
    Poly k = Poly::var(K);
    CHECK(shift_poly(k * k, 1) == P(K, {1, 2, 1}));
    CHECK(shift_poly(k, -1) == P(K, {-1, 1}));
    CHECK(shift_poly(k * k + k, 2) == P(K, {6, 5, 1}));
    std::uniform_int_distribution<long> ds(-5, 5);
    for (int it = 0; it < 60; ++it) {
        Poly p = random_poly(K, 5);
        long a = ds(rng), b = ds(rng);
        CHECK(shift_poly(shift_poly(p, a), b) == shift_poly(p, a + b));
    }
}

TEST_CASE("dispersion examples and scan equivalence") {
    auto K = Q();
    Poly k = Poly::var(K);
    Poly kp2 = P(K, {2, 1});
    CHECK(dispersion(k * kp2, k) == std::set<long>{0, 2});
    CHECK(dispersion(k, P(K, {1, 1})).empty());
    CHECK(dispersion(k, k) == std::set<long>{0});
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<int> da(0, 4);
        Poly p = P(K, {da(rng), 1}) * P(K, {da(rng), 1});
        Poly q = P(K, {da(rng), 1});
        CHECK(dispersion(p, q) == dispersion_scan(p, q, 16));
    }
}

TEST_CASE("dispersion with parameters") {
    auto K = make_field(1, {"n"});
    Poly kmn = Poly::var(K) - Poly(Const::param(K, 0)); // k - n
    CHECK(dispersion(kmn, kmn) == std::set<long>{0});
    Poly q = kmn.shifted(-3); // k - 3 - n
    CHECK(dispersion(kmn, q) == std::set<long>{3});
    CHECK(dispersion(q, kmn).empty()); // only reachable by a negative shift
}

TEST_CASE("lattice_hnf") {
    CHECK(L(rows_of({{2, 0}, {0, 2}, {1, 1}}), 2) == L(rows_of({{1, 1}, {0, 2}}), 2));
    CHECK(L({}, 3).rank() == 0);
    // incremental basis update: adding (2,0,0) to 4*I3
    CHECK(L(rows_of({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {2, 0, 0}}), 3) ==
          L(rows_of({{2, 0, 0}, {0, 4, 0}, {0, 0, 4}}), 3));
    std::uniform_int_distribution<long> d(-6, 6);
    for (int it = 0; it < 80; ++it) {
        IntMat m(3, IntVec(4));
        for (auto& r : m)
            for (auto& x : r) x = d(rng);
        Lattice l = L(m, 4);
        Lattice l2 = L(l.rows(), 4);
        CHECK(l == l2); // idempotent
        for (const auto& r : m) CHECK(l.contains(r));
        for (const auto& r : l.rows()) CHECK(integer_solve(m, 4, r).has_value());
    }
}

TEST_CASE("lattice_intersect") {
    Lattice a = L(rows_of({{1, 1, 2}, {0, 0, 4}}), 3);
    Lattice b = L(rows_of({{1, 1, 0}, {0, 2, 0}, {0, 0, 1}}), 3);
    CHECK(lattice_intersect(a, b) == a); // the first lattice is contained in the second
    CHECK(lattice_intersect(a, a) == a);
    Lattice x = L(rows_of({{1, 0}}), 2), y = L(rows_of({{0, 1}}), 2);
    CHECK(lattice_intersect(x, y).rank() == 0);
    CHECK_THROWS_AS(lattice_intersect(x, a), std::invalid_argument);
}

TEST_CASE("annihilator") {
    CHECK(annihilator({Int(2), Int(-1)}) == L(rows_of({{1, 2}}), 2));
    CHECK(annihilator({Int(0), Int(0)}) == Lattice::full(2));
    CHECK(annihilator({Int(1), Int(1)}) == L(rows_of({{1, -1}}), 2));
}

TEST_CASE("unit_relations") {
    auto K = Qi();
    auto U = [&](std::initializer_list<RatFun> us) { return std::vector<RatFun>(us); };
    RatFun two(K, Rat(2)), mone(K, Rat(-1)), four(K, Rat(4));
    Lattice rel = unit_relations(U({two, mone, four}));
    CHECK(rel == L(rows_of({{2, 0, -1}, {0, 2, 0}}), 3));
    CHECK(unit_relations(U({RatFun::one(K)})) == L(rows_of({{1}}), 1));
    RatFun iota{Const::zeta(K)};
    CHECK(unit_relations(U({iota})) == L(rows_of({{4}}), 1));
    // mixed rational-function relation: k, k^2, content
    RatFun k = RatFun::var(K);
    Lattice rel2 = unit_relations(U({k, k * k}));
    CHECK(rel2 == L(rows_of({{2, -1}}), 2));
    // 1+i is exceptional: (1+i)^2 = 2i
    RatFun onePlusI{Const(K, Cyc::one(K) + Cyc::zeta_pow(K, 1))};
    Lattice rel3 = unit_relations(U({onePlusI, two, iota}));
    // (1+i)^4 = -4 = 4 * i^2: expect (4, -2, -2)-type row in the lattice
    CHECK(rel3.contains({Int(4), Int(-2), Int(-2)}));
}

TEST_CASE("unit_relations rows multiply to one") {
    auto K = Qi();
    std::vector<RatFun> units{RatFun(K, Rat(2)),  RatFun(K, Rat(-1)), RatFun(K, Rat(4)),
                              RatFun(K, Rat(-6)), RatFun{Const::zeta(K)},
                              RatFun(Poly::var(K) + Poly(Const(K, Rat(1)))),
                              RatFun(Poly::var(K))};
    Lattice rel = unit_relations(units);
    for (const auto& row : rel.rows()) {
        RatFun prod = RatFun::one(K);
        for (size_t i = 0; i < units.size(); ++i)
            prod = prod * units[i].pow(static_cast<long>(row[i].get_si()));
        CHECK(prod.is_one());
    }
    // and some vectors outside the lattice do not multiply to one
    CHECK(!unit_relations(units).contains({Int(1), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0)}));
}

TEST_CASE("gcd_free_basis and shift_refine") {
    auto K = Q();
    Poly k = Poly::var(K), kp1 = P(K, {1, 1}), kp2 = P(K, {2, 1});
    std::vector<Poly> atoms = gcd_free_basis({k * kp1, k * k, kp1 * kp2});
    for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t j = i + 1; j < atoms.size(); ++j)
            CHECK(poly_gcd(atoms[i], atoms[j]).degree() == 0);
    for (const Poly& p : {k * kp1, k * k, kp1 * kp2}) {
        auto e = factor_over_atoms(p, atoms); // must not throw
        Poly prod = Poly::one(K);
        for (size_t i = 0; i < atoms.size(); ++i)
            for (long c = 0; c < e[i]; ++c) prod = prod * atoms[i];
        CHECK(prod == p.monic());
    }
    // k(k+2) splits at its self-overlap
    std::vector<Poly> sr = shift_refine({k * kp2}, 1);
    CHECK(sr.size() == 2);
    CHECK(std::find(sr.begin(), sr.end(), k) != sr.end());
    CHECK(std::find(sr.begin(), sr.end(), kp2) != sr.end());
    // with step 4 the self-overlap of k(k+1) is unreachable and the second
    // atom is exactly one 4-step shift of the first, so nothing splits
    std::vector<Poly> sr4 = shift_refine({k * kp1, P(K, {4, 1}) * P(K, {5, 1})}, 4);
    CHECK(std::find(sr4.begin(), sr4.end(), k * kp1) != sr4.end());
    CHECK(sr4.size() == 2);
    // with step 1 the same input splits into linear atoms
    std::vector<Poly> sr1 = shift_refine({k * kp1, P(K, {4, 1}) * P(K, {5, 1})}, 1);
    CHECK(sr1.size() == 4);
}
