#include "ringsum/builder.hpp"

#include <tuple>

namespace ringsum {

AdjoinOutcome adjoin_sigma(const Tower& t, const TowerElem& beta, const std::string& name,
                           const Limits& lim) {
    AdjoinOutcome out{AdjoinOutcome::Kind::Extended, t, name, TowerElem(), 0};
    if (auto g = telescope(t, beta, lim)) {
        out.kind = AdjoinOutcome::Kind::Collapsed;
        out.witness = *g;
        return out;
    }
    out.tower = t.with_sigma_gen(name, beta);
    return out;
}

AdjoinOutcome adjoin_product(const Tower& t, const PGElem& alpha, const std::string& name,
                             const Limits&) {
    AdjoinOutcome out{AdjoinOutcome::Kind::Extended, t, name, TowerElem(), 0};
    long lambda = t.ord_pg(alpha);
    MtResult mt = mt_decide(t, alpha);
    if (lambda == 0) {
        if (!mt.solvable) {
            out.tower = t.with_pi_gen(name, alpha);
            return out;
        }
    } else {
        if (mt.m == lambda) {
            out.tower = t.with_root_gen(name, alpha, lambda);
            return out;
        }
    }
    out.kind = mt.m == 1 ? AdjoinOutcome::Kind::Collapsed : AdjoinOutcome::Kind::Rejected;
    out.witness = mt.witness;
    out.rejectedPower = mt.m;
    return out;
}

std::optional<TowerElem> rewrite_product(const Tower& t, const PGElem& alpha, const Limits& lim) {
    VBasis vb = pflde_solve(t, alpha, {t.zero()}, lim);
    for (const SpanRow& row : vb.rows)
        if (!row.g.is_zero() && row.c[0].is_zero()) return row.g;
    // a row may mix the homogeneous part with the vacuous c-slot; split it
    for (const SpanRow& row : vb.rows)
        if (!row.g.is_zero()) return row.g;
    return std::nullopt;
}

std::optional<Recurrence> creative_telescope(const FieldPtr& K, const HypergeomFamily& F,
                                             long maxOrder, const Limits& lim) {
    Tower base(K);
    PGElem q = base.pg_from_unit(F.kQuotient);
    AdjoinOutcome reg = adjoin_product(base, q, "t", lim);
    Tower t = reg.tower;
    TowerElem rep; // representation of F(n, k)
    if (reg.kind == AdjoinOutcome::Kind::Extended) {
        rep = t.gen_elem(t.size() - 1);
    } else if (reg.kind == AdjoinOutcome::Kind::Collapsed) {
        rep = reg.witness;
    } else {
        throw NotRepresentable("summand quotient collapses only at a higher power",
                               reg.rejectedPower);
    }
    for (long order = 1; order <= maxOrder; ++order) {
        std::vector<TowerElem> f;
        RatFun ratio = RatFun::one(K);
        for (long i = 0; i <= order; ++i) {
            f.push_back(t.scale(rep, ratio));
            // F(n+i+1)/F(n+i) = nQuotient with n -> n+i
            RatFun step = F.paramIndex < K->paramCount()
                              ? F.nQuotient.shift_param(F.paramIndex, i)
                              : F.nQuotient;
            ratio = ratio * step;
        }
        // a usable order-`order` recurrence needs a nonzero leading
        // coefficient (else the relation is a lower-order statement), and a
        // relation between S(n) and S(n+order) needs c_1 != 0 as well
        VBasis vb = pflde_solve(t, t.pg_one(), f, lim);
        std::vector<SpanRow> cands;
        for (const SpanRow& row : vb.rows) {
            bool touches = false;
            for (size_t i = 0; i < row.c.size(); ++i)
                if (!row.c[i].is_zero() && !f[i].is_zero()) touches = true;
            if (touches) cands.push_back(row);
        }
        // pure K-linear dependences among the f_i give homogeneous
        // recurrences (zero certificate) that may not appear as basis rows
        for (KVec& c : elem_linear_kernel(t, f)) cands.push_back({std::move(c), t.zero()});
        // both-ends rows may also hide in combinations of two basis rows
        {
            SpanRow lead, first;
            bool haveLead = false, haveFirst = false;
            for (const SpanRow& row : cands) {
                if (!row.c.back().is_zero() && !haveLead) {
                    lead = row;
                    haveLead = true;
                }
                if (!row.c[0].is_zero() && !haveFirst) {
                    first = row;
                    haveFirst = true;
                }
            }
            if (haveLead && haveFirst &&
                (lead.c[0].is_zero() || first.c.back().is_zero())) {
                for (long tscale : {1, -1, 2}) {
                    SpanRow v;
                    v.c = lead.c;
                    Const tc(K, Rat(tscale));
                    for (size_t i = 0; i < v.c.size(); ++i) v.c[i] = v.c[i] + tc * first.c[i];
                    v.g = t.add(lead.g, t.scale(first.g, tc));
                    if (!v.c[0].is_zero() && !v.c.back().is_zero()) {
                        cands.push_back(std::move(v));
                        break;
                    }
                }
            }
        }
        auto score = [&](const SpanRow& row) {
            size_t nz = 0;
            for (const Const& c : row.c)
                if (!c.is_zero()) ++nz;
            bool bothEnds = !row.c[0].is_zero() && !row.c.back().is_zero();
            // lower is better: full-window relations first, then small
            // support, homogeneous certificates breaking ties
            return std::tuple<int, size_t, int>(bothEnds ? 0 : 1, nz, row.g.is_zero() ? 0 : 1);
        };
        const SpanRow* pick = nullptr;
        for (const SpanRow& row : cands) {
            if (row.c.back().is_zero()) continue;
            if (!pick || score(row) < score(*pick)) pick = &row;
        }
        if (!pick) continue;
        Recurrence rec;
        rec.order = order;
        rec.coeffs = pick->c;
        rec.tower = t;
        rec.certificate = pick->g;
        rec.inputs = f;
        return rec;
    }
    return std::nullopt;
}

TowerReport verify_tower(const Tower& t, const Limits& lim) {
    TowerReport report;
    for (size_t i = 0; i < t.size(); ++i) {
        const Generator& g = t.gen(i);
        Tower sub = t.prefix(i);
        TowerReport::Entry e{g.name, true, ""};
        try {
            if (g.kind == GenKind::Sigma) {
                if (auto w = telescope(sub, g.beta, lim)) {
                    e.ok = false;
                    e.note = "telescoper exists: " + sub.elem_str(*w) + " (new constant " +
                             g.name + " - g)";
                }
            } else {
                MtResult mt = mt_decide(sub, sub.pg_normalize(g.alpha));
                if (g.kind == GenKind::Pi && mt.solvable) {
                    e.ok = false;
                    e.note = "sigma(g) = alpha^" + std::to_string(mt.m) + " g has a solution";
                } else if (g.kind == GenKind::Root && mt.m != g.order) {
                    e.ok = false;
                    e.note = "minimal exponent " + std::to_string(mt.m) + " below the order " +
                             std::to_string(g.order);
                }
            }
        } catch (const Error& err) {
            e.ok = false;
            e.note = err.what();
        }
        report.entries.push_back(std::move(e));
    }
    // constants check: V(1, (), E) must be exactly the constants line
    TowerReport::Entry c{"constants", true, ""};
    try {
        VBasis vb = pflde_solve(t, t.pg_one(), {}, lim);
        if (vb.dim() != 1) {
            c.ok = false;
            c.note = "constant space has dimension " + std::to_string(vb.dim());
        } else {
            const TowerElem& g = vb.rows[0].g;
            if (!(g.is_coefficient() && g.coefficient_value().is_constant())) {
                c.ok = false;
                c.note = "non-trivial constant: " + t.elem_str(g);
            }
        }
    } catch (const Error& err) {
        c.ok = false;
        c.note = err.what();
    }
    report.entries.push_back(std::move(c));
    return report;
}

} // namespace ringsum
