#include "ringsum/units.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringsum {

std::vector<Poly> gcd_free_basis(std::vector<Poly> in) {
    std::vector<Poly> atoms;
    for (Poly& p : in)
        if (p.degree() >= 1) atoms.push_back(p.monic());
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < atoms.size() && !changed; ++i)
            for (size_t j = i + 1; j < atoms.size() && !changed; ++j) {
                Poly g = poly_gcd(atoms[i], atoms[j]);
                if (g.degree() < 1) continue;
                std::vector<Poly> repl{g};
                if (g != atoms[i]) repl.push_back(atoms[i].div_exact(g).monic());
                if (g != atoms[j]) repl.push_back(atoms[j].div_exact(g).monic());
                if (repl.size() == 1) continue; // both equal g already
                atoms.erase(atoms.begin() + j);
                atoms.erase(atoms.begin() + i);
                for (Poly& r : repl)
                    if (r.degree() >= 1) atoms.push_back(r);
                std::sort(atoms.begin(), atoms.end());
                atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
                changed = true;
            }
    }
    return atoms;
}

std::vector<Poly> shift_refine(std::vector<Poly> in, long step) {
    std::vector<Poly> atoms = gcd_free_basis(std::move(in));
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < atoms.size() && !changed; ++i)
            for (size_t j = 0; j < atoms.size() && !changed; ++j) {
                // common factor between atoms[i](k) and atoms[j](k + t*step)?
                for (long d : dispersion(atoms[i], atoms[j])) {
                    if (d % step != 0) continue;
                    if (i == j && d == 0) continue;
                    Poly shifted = atoms[j].shifted(d / step, step);
                    Poly g = poly_gcd(atoms[i], shifted);
                    if (g.degree() < 1) continue;
                    if (g == atoms[i] && g == shifted) continue; // full shift match
                    Poly gBack = g.shifted(-d / step, step).monic();
                    std::vector<Poly> repl{g, gBack};
                    if (g != atoms[i]) repl.push_back(atoms[i].div_exact(g).monic());
                    if (gBack != atoms[j]) repl.push_back(atoms[j].div_exact(gBack).monic());
                    size_t hi = std::max(i, j), lo = std::min(i, j);
                    atoms.erase(atoms.begin() + hi);
                    if (hi != lo) atoms.erase(atoms.begin() + lo);
                    for (Poly& r : repl)
                        if (r.degree() >= 1) atoms.push_back(r);
                    // restore pairwise coprimality before the next pass
                    atoms = gcd_free_basis(std::move(atoms));
                    changed = true;
                    break;
                }
            }
    }
    return atoms;
}

std::vector<long> factor_over_atoms(const Poly& p, const std::vector<Poly>& atoms) {
    std::vector<long> e(atoms.size(), 0);
    Poly rem = p.monic();
    for (size_t i = 0; i < atoms.size(); ++i) {
        while (rem.degree() >= atoms[i].degree()) {
            Poly q, r;
            rem.divmod(atoms[i], q, r);
            if (!r.is_zero()) break;
            rem = q;
            ++e[i];
        }
    }
    if (rem.degree() != 0) throw std::logic_error("polynomial does not factor over atoms");
    return e;
}

namespace {

std::vector<MPoly> mpoly_gcd_free_basis(std::vector<MPoly> in) {
    std::vector<MPoly> atoms;
    for (MPoly& p : in)
        if (!p.is_scalar()) atoms.push_back(p.scaled(p.lead_coeff().inverse()));
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < atoms.size() && !changed; ++i)
            for (size_t j = i + 1; j < atoms.size() && !changed; ++j) {
                MPoly g = mpoly_gcd(atoms[i], atoms[j]);
                if (g.is_scalar()) continue;
                std::vector<MPoly> repl{g};
                if (g != atoms[i]) repl.push_back(atoms[i].div_exact(g));
                if (g != atoms[j]) repl.push_back(atoms[j].div_exact(g));
                if (repl.size() == 1) continue;
                atoms.erase(atoms.begin() + j);
                atoms.erase(atoms.begin() + i);
                for (MPoly& r : repl)
                    if (!r.is_scalar()) atoms.push_back(r.scaled(r.lead_coeff().inverse()));
                std::sort(atoms.begin(), atoms.end());
                atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
                changed = true;
            }
    }
    return atoms;
}

// exponents of p over the atom set; the remaining scalar is returned in lead
Cyc mpoly_factor(const MPoly& p, const std::vector<MPoly>& atoms, std::vector<long>& e) {
    e.assign(atoms.size(), 0);
    MPoly rem = p;
    for (size_t i = 0; i < atoms.size(); ++i)
        while (!rem.is_scalar() && atoms[i].divides(rem)) {
            rem = rem.div_exact(atoms[i]);
            ++e[i];
        }
    if (!rem.is_scalar()) throw std::logic_error("parameter polynomial does not factor over atoms");
    return rem.scalar_value();
}

std::vector<Int> int_coprime_base(std::vector<Int> in) {
    std::vector<Int> atoms;
    for (Int& x : in) {
        Int a = abs(x);
        if (a > 1) atoms.push_back(a);
    }
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < atoms.size() && !changed; ++i)
            for (size_t j = i + 1; j < atoms.size() && !changed; ++j) {
                Int g = int_gcd(atoms[i], atoms[j]);
                if (g == 1) continue;
                std::vector<Int> repl{g, atoms[i] / g, atoms[j] / g};
                atoms.erase(atoms.begin() + j);
                atoms.erase(atoms.begin() + i);
                for (Int& r : repl)
                    if (r > 1) atoms.push_back(r);
                std::sort(atoms.begin(), atoms.end());
                atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
                changed = true;
            }
    }
    return atoms;
}

void int_factor(const Int& x, const std::vector<Int>& atoms, std::vector<long>& e) {
    Int rem = abs(x);
    for (size_t i = 0; i < atoms.size(); ++i)
        while (int_divisible(rem, atoms[i])) {
            rem /= atoms[i];
            ++e[i];
        }
    if (rem != 1) throw std::logic_error("integer does not factor over coprime base");
}

struct ScalarPart {
    long torsion = 0;  // exponent of the root-of-unity group generator
    Rat rational{1};   // positive rational
    int excIndex = -1; // index into exceptional atoms, exponent 1
};

struct ExcRelation {
    int excIndex;
    long power;   // atom^power = g0^torsion * rational
    long torsion;
    Rat rational;
};

struct ScalarCtx {
    FieldPtr K;
    std::vector<Cyc> excAtoms;
    std::vector<ExcRelation> excRels;
};

ScalarPart decompose_scalar(ScalarCtx& ctx, Cyc gamma) {
    ScalarPart out;
    long L = ctx.K->rootGroupOrder();
    if (gamma.is_rational()) {
        Rat q = gamma.value();
        if (q < 0) {
            out.torsion = L / 2;
            q = -q;
        }
        out.rational = q;
        return out;
    }
    long a = root_of_unity_log(gamma);
    if (a >= 0) {
        out.torsion = a;
        return out;
    }
    Cyc g0 = root_group_generator(ctx.K);
    // quotient against an existing exceptional atom?
    for (size_t i = 0; i < ctx.excAtoms.size(); ++i) {
        Cyc q = gamma / ctx.excAtoms[i];
        Cyc acc = Cyc::one(ctx.K);
        for (long t = 0; t < L; ++t) {
            Cyc r = q / acc; // gamma / (atom * g0^t)
            if (r.is_rational()) {
                out.excIndex = static_cast<int>(i);
                out.torsion = t;
                Rat rv = r.value();
                if (rv < 0) {
                    out.torsion = (out.torsion + L / 2) % L;
                    rv = -rv;
                }
                out.rational = rv;
                return out;
            }
            acc = acc * g0;
        }
    }
    // fresh atom; look for a power relation atom^d = g0^t * rational
    int idx = static_cast<int>(ctx.excAtoms.size());
    ctx.excAtoms.push_back(gamma);
    for (long d : divisors_of(L)) {
        if (d == 1) continue;
        Cyc pw = gamma.pow(d);
        Cyc acc = Cyc::one(ctx.K);
        bool found = false;
        for (long t = 0; t < L && !found; ++t) {
            Cyc r = pw / acc;
            if (r.is_rational()) {
                ctx.excRels.push_back({idx, d, t, r.value()});
                found = true;
            }
            acc = acc * g0;
        }
        if (found) break;
    }
    out.excIndex = idx;
    return out;
}

} // namespace

Lattice unit_relations(const std::vector<RatFun>& units) {
    size_t n = units.size();
    if (n == 0) return Lattice(0);
    FieldPtr K = units[0].field();
    long L = K->rootGroupOrder();
    for (const RatFun& u : units)
        if (u.is_zero()) throw std::invalid_argument("unit_relations: zero entry");

    // k-polynomial atoms
    std::vector<Poly> kpolys;
    for (const RatFun& u : units) {
        kpolys.push_back(u.num());
        kpolys.push_back(u.den());
    }
    std::vector<Poly> kAtoms = gcd_free_basis(std::move(kpolys));

    // per-unit: k-atom exponents and Const content
    std::vector<std::vector<long>> kExp(n);
    std::vector<Const> contents;
    for (size_t i = 0; i < n; ++i) {
        std::vector<long> en = factor_over_atoms(units[i].num(), kAtoms);
        std::vector<long> ed = factor_over_atoms(units[i].den(), kAtoms);
        for (size_t j = 0; j < en.size(); ++j) en[j] -= ed[j];
        kExp[i] = std::move(en);
        contents.push_back(units[i].num().lead_coeff() / units[i].den().lead_coeff());
    }

    // parameter-polynomial atoms
    std::vector<MPoly> ppolys;
    for (const Const& c : contents) {
        ppolys.push_back(c.num());
        ppolys.push_back(c.den());
    }
    std::vector<MPoly> pAtoms = mpoly_gcd_free_basis(std::move(ppolys));

    ScalarCtx sctx{K, {}, {}};
    std::vector<std::vector<long>> pExp(n);
    std::vector<ScalarPart> scal(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<long> en, ed;
        Cyc gn = mpoly_factor(contents[i].num(), pAtoms, en);
        Cyc gd = mpoly_factor(contents[i].den(), pAtoms, ed);
        for (size_t j = 0; j < en.size(); ++j) en[j] -= ed[j];
        pExp[i] = std::move(en);
        scal[i] = decompose_scalar(sctx, gn / gd);
    }

    // integer coprime base over all rational parts (units and relations)
    std::vector<Int> ints;
    auto push_rat = [&ints](const Rat& q) {
        ints.push_back(rat_num(q));
        ints.push_back(rat_den(q));
    };
    for (const ScalarPart& s : scal) push_rat(s.rational);
    for (const ExcRelation& r : sctx.excRels) push_rat(r.rational);
    std::vector<Int> iAtoms = int_coprime_base(std::move(ints));

    // columns: [iAtoms | pAtoms | kAtoms | excAtoms | torsion]
    size_t ni = iAtoms.size(), np = pAtoms.size(), nk = kAtoms.size(),
           ne = sctx.excAtoms.size();
    size_t cols = ni + np + nk + ne + 1;
    auto rat_exps = [&](const Rat& q, IntVec& row, long mult) {
        std::vector<long> en(ni, 0), ed(ni, 0);
        int_factor(rat_num(q), iAtoms, en);
        int_factor(rat_den(q), iAtoms, ed);
        for (size_t j = 0; j < ni; ++j) row[j] += Int(mult) * Int(en[j] - ed[j]);
    };
    IntMat mat;
    for (size_t i = 0; i < n; ++i) {
        IntVec row(cols, Int(0));
        rat_exps(scal[i].rational, row, 1);
        for (size_t j = 0; j < np; ++j) row[ni + j] = pExp[i][j];
        for (size_t j = 0; j < nk; ++j) row[ni + np + j] = kExp[i][j];
        if (scal[i].excIndex >= 0) row[ni + np + nk + scal[i].excIndex] = 1;
        row[cols - 1] = scal[i].torsion;
        mat.push_back(std::move(row));
    }
    size_t nUnits = mat.size();
    // known relations: torsion order, exceptional power relations
    {
        IntVec row(cols, Int(0));
        row[cols - 1] = L;
        mat.push_back(std::move(row));
    }
    for (const ExcRelation& r : sctx.excRels) {
        // atom^power * g0^{-torsion} * rational^{-1} = 1
        IntVec row(cols, Int(0));
        row[ni + np + nk + r.excIndex] = r.power;
        row[cols - 1] = -r.torsion;
        rat_exps(r.rational, row, -1);
        mat.push_back(std::move(row));
    }
    Lattice ker = left_kernel(mat, cols);
    IntMat proj;
    for (const auto& z : ker.rows()) proj.emplace_back(z.begin(), z.begin() + nUnits);
    return Lattice::from_rows(std::move(proj), nUnits);
}

} // namespace ringsum
