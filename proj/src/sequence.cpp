#include "ringsum/sequence.hpp"

namespace ringsum {

namespace {

struct SeqState {
    const Tower& t;
    long index; // current base-variable value
    std::vector<Const> genVal;

    Const const_pow(const Const& b, long e, long atIndex) const {
        if (e < 0 && b.is_zero())
            throw PoleAtPoint("zero generator value raised to negative power", atIndex);
        return b.pow(e);
    }

    Const eval_coeff(const RatFun& f, long k) const {
        Const point(t.field(), Rat(k));
        Const den = f.den().eval(point);
        if (den.is_zero()) throw PoleAtPoint("denominator vanishes at k=" + std::to_string(k), k);
        return f.num().eval(point) / den;
    }

    // value of an element over the prefix of the first `nGens` generators
    Const eval_elem(const TowerElem& e, size_t nGens) const {
        Const acc = Const::zero(t.field());
        for (const auto& [key, coeff] : e.terms()) {
            Const term = eval_coeff(coeff, index);
            for (size_t i = 0; i < key.size() && i < nGens; ++i)
                if (key[i] != 0) term = term * const_pow(genVal[i], key[i], index);
            acc = acc + term;
        }
        return acc;
    }

    Const eval_pg(const PGElem& a, size_t nGens) const {
        Const acc = eval_coeff(a.unit, index);
        for (size_t i = 0; i < a.exps.size() && i < nGens; ++i)
            if (a.exps[i] != 0) acc = acc * const_pow(genVal[i], a.exps[i], index);
        return acc;
    }

    void step_forward() {
        // beta/alpha reference lower generators at the *old* index, so all
        // updates read from a snapshot
        std::vector<Const> next = genVal;
        for (size_t i = 0; i < t.size(); ++i) {
            const Generator& g = t.gen(i);
            if (g.kind == GenKind::Sigma)
                next[i] = genVal[i] + eval_elem(g.beta, i);
            else
                next[i] = genVal[i] * eval_pg(g.alpha, i);
        }
        genVal = std::move(next);
        index += t.shift_step();
    }

    void step_backward() {
        long s = t.shift_step();
        index -= s;
        for (size_t i = 0; i < t.size(); ++i) {
            const Generator& g = t.gen(i);
            if (g.kind == GenKind::Sigma) {
                genVal[i] = genVal[i] - eval_elem(g.beta, i);
            } else {
                Const q = eval_pg(g.alpha, i);
                if (q.is_zero())
                    throw PoleAtPoint("generator quotient vanishes while unrolling backwards",
                                      index);
                genVal[i] = genVal[i] / q;
            }
        }
    }
};

} // namespace

std::vector<Const> eval_sequence(const Tower& t, const TowerElem& e, const SeqContext& ctx,
                                 long a, long b) {
    long s = t.shift_step();
    if (s <= 0) throw std::invalid_argument("eval_sequence needs a positive shift step");
    if ((a - ctx.startIndex) % s != 0)
        throw std::invalid_argument("evaluation range must align with the shift step");
    SeqState st{t, ctx.startIndex, {}};
    st.genVal.reserve(t.size());
    for (const Generator& g : t.gens()) {
        auto it = ctx.initialValues.find(g.name);
        if (it != ctx.initialValues.end())
            st.genVal.push_back(it->second);
        else
            st.genVal.push_back(g.kind == GenKind::Sigma ? Const::zero(t.field())
                                                         : Const::one(t.field()));
    }
    while (st.index > a) st.step_backward();
    while (st.index < a) st.step_forward();
    std::vector<Const> out;
    for (long k = a; k <= b; k += s) {
        out.push_back(st.eval_elem(e, t.size()));
        if (k + s <= b) st.step_forward();
    }
    return out;
}

Const eval_at(const Tower& t, const TowerElem& e, const SeqContext& ctx, long k) {
    return eval_sequence(t, e, ctx, k, k).front();
}

} // namespace ringsum
