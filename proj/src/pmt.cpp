#include "ringsum/pmt.hpp"

#include "ringsum/linsys.hpp"
#include "ringsum/units.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ringsum {

namespace {

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw CapExceeded("exponent does not fit a machine word");
    return n.get_si();
}

PGElem pg_product(const Tower& t, const std::vector<PGElem>& f, const IntVec& m) {
    PGElem acc = t.pg_one();
    for (size_t i = 0; i < f.size(); ++i)
        if (m[i] != 0) acc = t.pg_mul(acc, t.pg_pow(f[i], to_long(m[i])));
    return acc;
}

} // namespace

TowerElem elem_pow_signed(const Tower& t, const TowerElem& e, const Int& n) {
    long p = to_long(n);
    if (p >= 0) return t.pow(e, p);
    auto inv = t.try_inverse(e);
    if (!inv) throw std::logic_error("witness combination hit a non-invertible element");
    return t.pow(*inv, -p);
}

void verify_mbasis(const Tower& t, const std::vector<PGElem>& f, const MBasis& mb) {
    if (mb.lattice.rank() != mb.witnesses.size())
        throw std::logic_error("MBasis: one witness per basis row expected");
    for (size_t r = 0; r < mb.lattice.rank(); ++r) {
        const TowerElem& g = mb.witnesses[r];
        if (g.is_zero()) throw std::logic_error("MBasis: zero witness");
        PGElem rhs = pg_product(t, f, mb.lattice.rows()[r]);
        TowerElem delta = t.sub(t.sigma(g), t.mul(t.pg_to_elem(rhs), g));
        if (!delta.is_zero()) throw std::logic_error("MBasis: witness fails verification");
    }
}

// ---------------------------------------------------------------- base: K(k)

namespace {

struct OrbitData {
    // per input i, per orbit o: offset -> exponent
    std::vector<std::vector<std::map<long, long>>> exps;
    std::vector<Poly> reps;
    size_t orbitCount = 0;
};

OrbitData orbit_decompose(const std::vector<RatFun>& f, long step) {
    std::vector<Poly> polys;
    for (const RatFun& u : f) {
        polys.push_back(u.num());
        polys.push_back(u.den());
    }
    std::vector<Poly> atoms = shift_refine(std::move(polys), step);
    // orbit partition: atom b joins the orbit of rep a when b = a(k + j*step)
    std::vector<long> orbitOf(atoms.size(), -1);
    std::vector<long> offset(atoms.size(), 0);
    OrbitData od;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (orbitOf[i] >= 0) continue;
        long o = static_cast<long>(od.reps.size());
        orbitOf[i] = o;
        offset[i] = 0;
        od.reps.push_back(atoms[i]);
        for (size_t j = i + 1; j < atoms.size(); ++j) {
            if (orbitOf[j] >= 0 || atoms[j].degree() != atoms[i].degree()) continue;
            for (long d : dispersion(atoms[i], atoms[j]))
                if (d % step == 0 && atoms[j].shifted(d / step, step) == atoms[i]) {
                    orbitOf[j] = o;
                    offset[j] = -d / step;
                    break;
                }
            if (orbitOf[j] >= 0) continue;
            for (long d : dispersion(atoms[j], atoms[i]))
                if (d % step == 0 && atoms[i].shifted(d / step, step) == atoms[j]) {
                    orbitOf[j] = o;
                    offset[j] = d / step;
                    break;
                }
        }
    }
    od.orbitCount = od.reps.size();
    od.exps.assign(f.size(), std::vector<std::map<long, long>>(od.orbitCount));
    for (size_t i = 0; i < f.size(); ++i) {
        std::vector<long> en = factor_over_atoms(f[i].num(), atoms);
        std::vector<long> ed = factor_over_atoms(f[i].den(), atoms);
        for (size_t a = 0; a < atoms.size(); ++a) {
            long e = en[a] - ed[a];
            if (e != 0) od.exps[i][static_cast<size_t>(orbitOf[a])][offset[a]] += e;
        }
    }
    return od;
}

} // namespace

RatMBasis pmt_base_rational(const FieldPtr& K, const std::vector<RatFun>& f, long shiftStep) {
    size_t n = f.size();
    RatMBasis out;
    if (n == 0) {
        out.lattice = Lattice(0);
        return out;
    }
    for (const RatFun& u : f)
        if (u.is_zero()) throw std::invalid_argument("pmt_base_rational: zero entry");
    OrbitData od = orbit_decompose(f, shiftStep);
    // orbit-sum condition: m * E = 0
    Lattice orbitKernel = Lattice::full(n);
    if (od.orbitCount > 0) {
        IntMat emat(n, IntVec(od.orbitCount, Int(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t o = 0; o < od.orbitCount; ++o) {
                long s = 0;
                for (const auto& [off, e] : od.exps[i][o]) s += e;
                emat[i][o] = s;
            }
        orbitKernel = left_kernel(emat, od.orbitCount);
    }
    // unit condition on the contents
    std::vector<RatFun> contents;
    for (const RatFun& u : f)
        contents.push_back(RatFun{u.num().lead_coeff() / u.den().lead_coeff()});
    Lattice unitKernel = unit_relations(contents);
    out.lattice = lattice_intersect(orbitKernel, unitKernel);
    // witnesses: telescoping products per orbit
    for (const IntVec& m : out.lattice.rows()) {
        RatFun g = RatFun::one(K);
        for (size_t o = 0; o < od.orbitCount; ++o) {
            std::map<long, long> e;
            for (size_t i = 0; i < n; ++i)
                for (const auto& [off, ei] : od.exps[i][o]) e[off] += to_long(m[i]) * ei;
            if (e.empty()) continue;
            long acc = 0;
            long lo = e.begin()->first, hi = e.rbegin()->first;
            for (long j = lo; j < hi; ++j) {
                auto it = e.find(j);
                if (it != e.end()) acc += it->second;
                if (acc != 0) g = g * RatFun(od.reps[o].shifted(j, shiftStep)).pow(-acc);
            }
        }
        out.witnesses.push_back(g);
    }
    return out;
}

// --------------------------------------------------- base: K[x_1]...[x_e]

MBasis pmt_base_roots(const Tower& t, const std::vector<PGElem>& f) {
    const FieldPtr& K = t.field();
    size_t n = f.size();
    for (const Generator& g : t.gens())
        if (g.kind != GenKind::Root || !g.alpha.unit.is_constant())
            throw NotSimpleTower("pmt_base_roots expects an R-tower with constant quotients");
    std::vector<long> lambda;
    for (const PGElem& fi : f) {
        long o = t.ord_pg(fi);
        if (o == 0) throw std::invalid_argument("pmt_base_roots: entry of order zero");
        lambda.push_back(o);
    }
    // generating set, starting from lambda_i * b_i (witness 1 since f^ord = 1)
    IntMat gensV;
    std::vector<TowerElem> gensW;
    for (size_t i = 0; i < n; ++i) {
        IntVec v(n, Int(0));
        v[i] = lambda[i];
        gensV.push_back(std::move(v));
        gensW.push_back(t.one());
    }
    Lattice current = Lattice::from_rows(gensV, n);

    // monomial box of the R-tower
    std::vector<TowerElem::Key> box;
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
    std::map<TowerElem::Key, size_t> boxIndex;
    for (size_t i = 0; i < box.size(); ++i) boxIndex[box[i]] = i;

    // sigma(g) = F g by Ansatz g = sum c_v x^v over the box
    auto try_witness = [&](const PGElem& F) -> std::optional<TowerElem> {
        size_t nb = box.size();
        KMat rows(nb, KVec(nb, Const::zero(K)));
        for (size_t v = 0; v < nb; ++v) {
            PGElem xv{RatFun::one(K), std::vector<long>(box[v].begin(), box[v].end())};
            PGElem sxv = t.pg_sigma(xv);
            TowerElem::Key pv(sxv.exps.begin(), sxv.exps.end());
            rows[boxIndex.at(pv)][v] = rows[boxIndex.at(pv)][v] + sxv.unit.constant_value();
            PGElem fv = t.pg_mul(F, xv);
            TowerElem::Key qv(fv.exps.begin(), fv.exps.end());
            rows[boxIndex.at(qv)][v] = rows[boxIndex.at(qv)][v] - fv.unit.constant_value();
        }
        KMat ker = k_kernel(std::move(rows), K, nb);
        if (ker.empty()) return std::nullopt;
        TowerElem g = t.zero();
        for (size_t v = 0; v < box.size(); ++v)
            if (!ker[0][v].is_zero()) g = t.add(g, t.monomial(RatFun(ker[0][v]), box[v]));
        return g;
    };

    // lexicographic scan of the exponent box of the f's
    if (n > 0) {
        std::vector<long> m(n, 0);
        while (true) {
            IntVec mv(n);
            for (size_t i = 0; i < n; ++i) mv[i] = m[i];
            bool allZero = std::all_of(m.begin(), m.end(), [](long x) { return x == 0; });
            if (!allZero && !current.contains(mv)) {
                if (auto g = try_witness(pg_product(t, f, mv))) {
                    gensV.push_back(mv);
                    gensW.push_back(*g);
                    current = Lattice::from_rows(gensV, n);
                }
            }
            size_t pos = n;
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++m[pos] < lambda[pos]) {
                    done = false;
                    break;
                }
                m[pos] = 0;
            }
            if (done) break;
        }
    }

    MBasis out;
    out.lattice = current;
    for (const IntVec& row : out.lattice.rows()) {
        auto c = integer_solve(gensV, n, row);
        if (!c) throw std::logic_error("pmt_base_roots: basis row outside generators");
        TowerElem w = t.one();
        for (size_t j = 0; j < gensW.size(); ++j)
            if ((*c)[j] != 0) w = t.mul(w, elem_pow_signed(t, gensW[j], (*c)[j]));
        out.witnesses.push_back(std::move(w));
    }
    verify_mbasis(t, f, out);
    return out;
}

// ------------------------------------------------------------- reductions

namespace {

MBasis pmt_rec(const Tower& t, const std::vector<PGElem>& f);

MBasis lift_mbasis(const Tower& t, const Tower& sub, MBasis mb) {
    for (TowerElem& w : mb.witnesses) w = t.lift(w, sub.size());
    return mb;
}

// Solve over the sub-tower with f augmented by 1/alpha, project away the last
// coordinate, optionally intersect, and attach the peeled generator's power
// (the lifted last coordinate) to each witness.
MBasis peel_monomial(const Tower& t, const std::vector<PGElem>& f, const Lattice* extra) {
    size_t n = f.size();
    size_t last = t.size() - 1;
    Tower sub = t.prefix(last);
    std::vector<PGElem> sf;
    for (const PGElem& fi : f) {
        PGElem r = fi;
        r.exps[last] = 0;
        sf.push_back(sub.pg_normalize(t.restrict_pg(r, last)));
    }
    sf.push_back(sub.pg_invert(sub.pg_normalize(t.gen(last).alpha)));
    MBasis msub = pmt_rec(sub, sf);
    IntMat projRows;
    for (const auto& r : msub.lattice.rows()) projRows.emplace_back(r.begin(), r.begin() + n);
    Lattice result = Lattice::from_rows(projRows, n);
    if (extra) result = lattice_intersect(result, *extra);
    MBasis out;
    out.lattice = result;
    for (const IntVec& row : result.rows()) {
        auto c = integer_solve(projRows, n, row);
        if (!c) throw std::logic_error("pmt reduction: projection lift failed");
        TowerElem w = t.one();
        Int mu(0);
        for (size_t j = 0; j < msub.witnesses.size(); ++j) {
            if ((*c)[j] == 0) continue;
            w = t.mul(w, elem_pow_signed(t, t.lift(msub.witnesses[j], last), (*c)[j]));
            mu += (*c)[j] * msub.lattice.rows()[j][n];
        }
        TowerElem::Key key(t.size(), 0);
        key[last] = static_cast<int>(to_long(mu));
        out.witnesses.push_back(t.mul(w, t.monomial(RatFun::one(t.field()), key)));
    }
    return out;
}

// nested R-block over the field base
MBasis pmt_root_nested(const Tower& t, const std::vector<PGElem>& f) {
    const FieldPtr& K = t.field();
    size_t n = f.size();
    long r = 1;
    for (const Generator& g : t.gens()) {
        if (g.kind != GenKind::Root) throw NotSimpleTower("nested R-reduction needs a pure R-block");
        if (!g.alpha.unit.is_constant())
            throw NotSimpleTower("R-generator quotient unit must be constant");
        long fordU = t.ord_const(g.alpha.unit.constant_value());
        if (fordU == 0 || g.ford == 0)
            throw NotSimpleTower("R-generator without positive factorial order");
        r = lcm_long(r, lcm_long(fordU, g.ford));
    }
    // generator of the r-th roots of unity inside K
    long L = K->rootGroupOrder();
    long d = std::gcd(r, L);
    std::vector<Cyc> rootGens;
    if (d > 1) rootGens.push_back(root_group_generator(K).pow(L / d));
    size_t s = rootGens.size();

    std::vector<RatFun> fTilde;
    std::vector<PGElem> h;
    for (const PGElem& fi : f) {
        fTilde.push_back(fi.unit);
        h.push_back(PGElem{RatFun::one(K), fi.exps});
    }
    for (const Cyc& a : rootGens) {
        fTilde.push_back(RatFun{Const(K, a)});
        h.push_back(t.pg_from_unit(RatFun{Const(K, a).inverse()}));
    }
    RatMBasis m1 = pmt_base_rational(K, fTilde, t.shift_step());
    MBasis m2 = pmt_base_roots(t, h);
    Lattice inter = lattice_intersect(m1.lattice, m2.lattice);
    std::vector<TowerElem> interW;
    for (const IntVec& v : inter.rows()) {
        auto c1 = integer_solve(m1.lattice.rows(), n + s, v);
        auto c2 = integer_solve(m2.lattice.rows(), n + s, v);
        if (!c1 || !c2) throw std::logic_error("nested R-reduction: intersection lift failed");
        RatFun gt = RatFun::one(K);
        for (size_t j = 0; j < m1.witnesses.size(); ++j)
            if ((*c1)[j] != 0) gt = gt * m1.witnesses[j].pow(to_long((*c1)[j]));
        TowerElem hh = t.one();
        for (size_t j = 0; j < m2.witnesses.size(); ++j)
            if ((*c2)[j] != 0) hh = t.mul(hh, elem_pow_signed(t, m2.witnesses[j], (*c2)[j]));
        interW.push_back(t.scale(hh, gt));
    }
    MBasis out;
    IntMat projRows;
    for (const auto& v : inter.rows()) projRows.emplace_back(v.begin(), v.begin() + n);
    out.lattice = Lattice::from_rows(projRows, n);
    for (const IntVec& row : out.lattice.rows()) {
        auto c = integer_solve(projRows, n, row);
        if (!c) throw std::logic_error("nested R-reduction: projection lift failed");
        TowerElem w = t.one();
        for (size_t j = 0; j < interW.size(); ++j)
            if ((*c)[j] != 0) w = t.mul(w, elem_pow_signed(t, interW[j], (*c)[j]));
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

MBasis pmt_rec(const Tower& t, const std::vector<PGElem>& f) {
    size_t n = f.size();
    if (t.size() == 0) {
        std::vector<RatFun> rf;
        for (const PGElem& fi : f) rf.push_back(fi.unit);
        RatMBasis rb = pmt_base_rational(t.field(), rf, t.shift_step());
        MBasis out;
        out.lattice = rb.lattice;
        for (const RatFun& w : rb.witnesses) out.witnesses.push_back(t.from_ratfun(w));
        return out;
    }
    size_t last = t.size() - 1;
    const Generator& top = t.gen(last);
    if (top.kind == GenKind::Sigma) {
        Tower sub = t.prefix(last);
        std::vector<PGElem> sf;
        for (const PGElem& fi : f) sf.push_back(t.restrict_pg(fi, last));
        return lift_mbasis(t, sub, pmt_rec(sub, sf));
    }
    if (top.kind == GenKind::Pi) {
        IntVec e(n);
        for (size_t i = 0; i < n; ++i) e[i] = f[i].exps[last];
        Lattice ann = annihilator(e);
        return peel_monomial(t, f, &ann);
    }
    // R generator on top: single-rooted shortcut when no f touches it,
    // otherwise the nested reduction over the whole block.
    bool touched = false;
    for (const PGElem& fi : f)
        if (fi.exps[last] != 0) touched = true;
    if (!touched) return peel_monomial(t, f, nullptr);
    return pmt_root_nested(t, f);
}

} // namespace

MBasis pmt_solve(const Tower& t, const std::vector<PGElem>& f) {
    for (const PGElem& fi : f)
        if (fi.unit.is_zero()) throw std::invalid_argument("pmt_solve: zero entry");
    auto [rt, perm] = reorder_r_first(t);
    std::vector<PGElem> rf;
    for (const PGElem& fi : f) rf.push_back(rt.pg_normalize(remap_pg(fi, perm, rt.size())));
    MBasis mb = pmt_rec(rt, rf);
    // map witnesses back to the original generator order
    std::vector<size_t> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    for (TowerElem& w : mb.witnesses) w = remap_elem(w, inv, t.size());
    verify_mbasis(t, f, mb);
    return mb;
}

MtResult mt_decide(const Tower& t, const PGElem& alpha) {
    MBasis mb = pmt_solve(t, {alpha});
    MtResult r;
    if (mb.lattice.rank() == 0) return r;
    r.solvable = true;
    r.m = to_long(mb.lattice.rows()[0][0]);
    r.witness = mb.witnesses[0];
    return r;
}

} // namespace ringsum
