#include "ringsum/compile.hpp"

#include <functional>

namespace ringsum {

long upper_bound_offset(const ExprPtr& hi, const std::string& baseVar) {
    if (hi->kind == Expr::Kind::Ident && hi->name == baseVar) return 0;
    if (hi->kind == Expr::Kind::Sub && hi->args[0]->kind == Expr::Kind::Ident &&
        hi->args[0]->name == baseVar && hi->args[1]->kind == Expr::Kind::Number &&
        hi->args[1]->number == 1)
        return -1;
    throw NotRepresentable("summation upper bound must be " + baseVar + " or " + baseVar + "-1",
                           0);
}

ExprPtr substitute_ident(const ExprPtr& e, const std::string& from, const ExprPtr& to) {
    if (e->kind == Expr::Kind::Ident) return e->name == from ? to : e;
    if ((e->kind == Expr::Kind::Sum || e->kind == Expr::Kind::Prod) && e->name == from)
        return e; // shadowed
    auto copy = std::make_shared<Expr>(*e);
    for (ExprPtr& a : copy->args) a = substitute_ident(a, from, to);
    return copy;
}

Compiler::Compiler(FieldPtr K, Limits lim, std::string baseVar)
    : K_(K), lim_(lim), baseVar_(std::move(baseVar)), t_(K) {}

std::map<std::string, Const> Compiler::param_env() const {
    std::map<std::string, Const> env;
    for (size_t i = 0; i < K_->paramCount(); ++i)
        env.emplace(K_->params[i], Const::param(K_, i));
    return env;
}

Const Compiler::object_value(const ExprPtr& object, long v) const {
    std::map<std::string, Const> env = param_env();
    env[baseVar_] = Const(K_, Rat(v));
    return eval_expr(object, K_, env);
}

void Compiler::ensure_start(long minStart) {
    if (minStart <= ctx_.startIndex) return;
    ctx_.startIndex = minStart;
    for (auto& [gen, obj] : genObjects_) ctx_.initialValues[gen] = object_value(obj, minStart);
}

void Compiler::set_anchor(const std::string& gen, const ExprPtr& object) {
    genObjects_[gen] = object;
    ctx_.initialValues[gen] = object_value(object, ctx_.startIndex);
}

TowerElem Compiler::lift_to_current(const TowerElem& e) const {
    if (e.is_zero()) return e;
    size_t len = e.terms().begin()->first.size();
    return t_.lift(e, len);
}

TowerElem Compiler::compile(const ExprPtr& e) { return rec(e); }

TowerElem Compiler::rec(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Number: return t_.from_const(Const(K_, e->number));
        case Expr::Kind::ImagUnit: {
            if (K_->zetaOrder % 4 != 0)
                throw Error("the imaginary unit needs a cyclotomic order divisible by 4 "
                            "(use --zeta 4)");
            return t_.from_const(Const(K_, Cyc::zeta_pow(K_, K_->zetaOrder / 4)));
        }
        case Expr::Kind::Zeta: return t_.from_const(Const::zeta(K_));
        case Expr::Kind::Ident: {
            if (e->name == baseVar_) return t_.from_ratfun(RatFun::var(K_));
            auto env = param_env();
            auto it = env.find(e->name);
            if (it == env.end()) throw Error("unbound identifier '" + e->name + "'");
            return t_.from_const(it->second);
        }
        case Expr::Kind::Add: {
            TowerElem a = rec(e->args[0]);
            TowerElem b = rec(e->args[1]);
            return t_.add(lift_to_current(a), b);
        }
        case Expr::Kind::Sub: {
            TowerElem a = rec(e->args[0]);
            TowerElem b = rec(e->args[1]);
            return t_.sub(lift_to_current(a), b);
        }
        case Expr::Kind::Mul: {
            TowerElem a = rec(e->args[0]);
            TowerElem b = rec(e->args[1]);
            return t_.mul(lift_to_current(a), b);
        }
        case Expr::Kind::Div: {
            TowerElem a = rec(e->args[0]);
            TowerElem b = rec(e->args[1]);
            auto inv = t_.try_inverse(b);
            if (!inv) throw Error("division by a non-invertible element");
            return t_.mul(lift_to_current(a), *inv);
        }
        case Expr::Kind::Neg: return t_.neg(rec(e->args[0]));
        case Expr::Kind::Pow: {
            TowerElem b = rec(e->args[0]);
            return t_.pow(b, e->intExp);
        }
        case Expr::Kind::PowBinom: return compile_pow_binom(e);
        case Expr::Kind::Sum: return compile_sum(e);
        case Expr::Kind::Prod: return compile_prod(e);
        case Expr::Kind::Binom: return compile_binom(e);
    }
    throw std::logic_error("unhandled expression node");
}

TowerElem Compiler::adjoin_product_anchored(const PGElem& alpha, const ExprPtr& object,
                                            long minStart) {
    std::string key = "prod|" + t_.pg_str(alpha);
    auto it = memo_.find(key);
    if (it != memo_.end()) return t_.lift(it->second.first, it->second.second);
    ensure_start(minStart);
    AdjoinOutcome out = adjoin_product(t_, alpha, "", lim_);
    TowerElem elem;
    if (out.kind == AdjoinOutcome::Kind::Extended) {
        long lambda = t_.ord_pg(alpha);
        std::string name =
            (lambda > 0 ? "x" + std::to_string(++xCount_) : "t" + std::to_string(++tCount_));
        out = adjoin_product(t_, alpha, name, lim_);
        t_ = out.tower;
        genDocs_[name] = expr_str(object);
        set_anchor(name, object);
        elem = t_.gen_elem(t_.size() - 1);
    } else if (out.kind == AdjoinOutcome::Kind::Collapsed) {
        // object = c * witness with c fixed at the anchor index
        Const w0 = eval_at(t_, out.witness, ctx_, ctx_.startIndex);
        if (w0.is_zero()) throw Error("collapsed product witness vanishes at the anchor");
        elem = t_.scale(out.witness, object_value(object, ctx_.startIndex) / w0);
    } else {
        throw NotInProductGroup("product collapses only at power " +
                                std::to_string(out.rejectedPower) +
                                "; neither an R- nor a Pi-extension exists for " +
                                expr_str(object));
    }
    memo_[key] = {elem, t_.size()};
    return elem;
}

TowerElem Compiler::compile_sum(const ExprPtr& e) {
    long offset = upper_bound_offset(e->args[1], baseVar_);
    ExprPtr body = substitute_ident(e->args[2], e->name, parse(baseVar_));
    std::string key = "sum|" + std::to_string(offset) + "|" + expr_str(e->args[0]) + "|" +
                      expr_str(body);
    auto it = memo_.find(key);
    if (it != memo_.end()) return t_.lift(it->second.first, it->second.second);
    TowerElem b = rec(body);
    TowerElem beta = offset == 0 ? t_.sigma(b) : b;
    // the recurrence consumes the term at k+1+offset, which must be >= lo
    Const loC = eval_expr(e->args[0], K_, param_env());
    if (!loC.is_integer()) throw NotRepresentable("summation lower bound must be an integer", 0);
    long minStart = loC.integer_value() - 1 - offset;
    ensure_start(minStart);
    AdjoinOutcome out = adjoin_sigma(t_, beta, "", lim_);
    TowerElem elem;
    if (out.kind == AdjoinOutcome::Kind::Extended) {
        std::string name = "s" + std::to_string(++sCount_);
        out = adjoin_sigma(t_, beta, name, lim_);
        t_ = out.tower;
        genDocs_[name] = expr_str(e);
        set_anchor(name, e);
    } else {
        // sum = witness + c with c fixed at the anchor index
        Const w0 = eval_at(t_, out.witness, ctx_, ctx_.startIndex);
        elem = t_.add(out.witness,
                      t_.from_const(object_value(e, ctx_.startIndex) - w0));
        memo_[key] = {elem, t_.size()};
        return elem;
    }
    elem = t_.gen_elem(t_.size() - 1);
    memo_[key] = {elem, t_.size()};
    return elem;
}

TowerElem Compiler::compile_prod(const ExprPtr& e) {
    long offset = upper_bound_offset(e->args[1], baseVar_);
    ExprPtr body = substitute_ident(e->args[2], e->name, parse(baseVar_));
    TowerElem b = rec(body);
    auto bpg = t_.elem_to_pg(b);
    if (!bpg)
        throw NotInProductGroup("product body is not a product-group element: " + expr_str(body));
    PGElem alpha = offset == 0 ? t_.pg_sigma(*bpg) : *bpg;
    Const loC = eval_expr(e->args[0], K_, param_env());
    if (!loC.is_integer()) throw NotRepresentable("product lower bound must be an integer", 0);
    // the factor consumed stepping k -> k+1 sits at k+1+offset
    return adjoin_product_anchored(alpha, e, loC.integer_value() - 1 - offset);
}

TowerElem Compiler::compile_pow_binom(const ExprPtr& e) {
    // base^Binom(k + c, m), built as the product chain of the triangular family
    TowerElem baseElem = rec(e->args[0]);
    if (!baseElem.is_coefficient() || !baseElem.coefficient_value().is_constant())
        throw NotRepresentable("triangular-exponent base must be constant", 0);
    Const rho = baseElem.coefficient_value().constant_value();
    if (t_.ord_const(rho) == 0)
        throw NotRepresentable("triangular-exponent base must be a root of unity", 0);
    // inner must be k + c
    ExprPtr inner = e->args[1];
    long c = 0;
    if (inner->kind == Expr::Kind::Ident && inner->name == baseVar_) {
        c = 0;
    } else if (inner->kind == Expr::Kind::Add && inner->args[0]->kind == Expr::Kind::Ident &&
               inner->args[0]->name == baseVar_ &&
               inner->args[1]->kind == Expr::Kind::Number) {
        c = static_cast<long>(inner->args[1]->number.get_num().get_si());
    } else if (inner->kind == Expr::Kind::Sub && inner->args[0]->kind == Expr::Kind::Ident &&
               inner->args[0]->name == baseVar_ &&
               inner->args[1]->kind == Expr::Kind::Number) {
        c = -static_cast<long>(inner->args[1]->number.get_num().get_si());
    } else {
        throw NotRepresentable("triangular exponent must be Binom(" + baseVar_ + "+c, m)", 0);
    }
    // rep(m): rho^Binom(k+c, m); rep(0) = rho
    std::function<TowerElem(long)> rep = [&](long m) -> TowerElem {
        if (m == 0) return t_.from_const(rho);
        if (m == 1) {
            // rho^{k+c} = rho^c * (rho^k)
            auto kIdent = Expr::make(Expr::Kind::Ident);
            const_cast<Expr*>(kIdent.get())->name = baseVar_;
            auto obj = Expr::make(Expr::Kind::PowBinom);
            Expr* w = const_cast<Expr*>(obj.get());
            w->args = {e->args[0], kIdent};
            w->intExp = 1;
            TowerElem xr = adjoin_product_anchored(t_.pg_from_unit(RatFun{rho}), obj, 0);
            return t_.scale(xr, rho.pow(c));
        }
        TowerElem quot = rep(m - 1); // rho^Binom(k+c, m-1)
        auto qpg = t_.elem_to_pg(quot);
        if (!qpg) throw NotRepresentable("triangular chain left the product group", 0);
        ExprPtr obj = std::make_shared<Expr>(
            Expr{Expr::Kind::PowBinom, Rat(0), "", {e->args[0], inner}, m});
        return adjoin_product_anchored(*qpg, obj, 0);
    };
    return rep(e->intExp);
}

TowerElem Compiler::compile_binom(const ExprPtr& e) {
    // Binom(a, m) with literal m: a polynomial in the compiled a
    if (e->args[1]->kind == Expr::Kind::Number) {
        if (rat_den(e->args[1]->number) != 1 || e->args[1]->number < 0)
            throw NotRepresentable("binomial with non-integer literal index", 0);
        long m = static_cast<long>(e->args[1]->number.get_num().get_si());
        TowerElem a = rec(e->args[0]);
        TowerElem acc = t_.one();
        for (long i = 1; i <= m; ++i) {
            TowerElem fac = t_.sub(a, t_.from_const(Const(K_, Rat(i - 1))));
            acc = t_.mul(acc, t_.scale(fac, Const(K_, Rat(1, i))));
        }
        return acc;
    }
    // Binom(a, k) with a free of k: hypergeometric product generator
    if (e->args[1]->kind == Expr::Kind::Ident && e->args[1]->name == baseVar_) {
        TowerElem a = rec(e->args[0]);
        if (!a.is_coefficient() || !a.coefficient_value().is_constant())
            throw NotRepresentable("Binom(a, " + baseVar_ + ") needs a free of " + baseVar_, 0);
        Const A = a.coefficient_value().constant_value();
        Poly k = Poly::var(K_);
        RatFun q(Poly(A) - k, k + Poly::one(K_)); // Binom(A,k+1)/Binom(A,k)
        return adjoin_product_anchored(t_.pg_from_unit(q), e, 0);
    }
    throw NotRepresentable("unsupported binomial shape: " + expr_str(e), 0);
}

// ------------------------------------------------------------ family slice

namespace {

struct Quotients {
    RatFun qk, qn;
};

Quotients extract(const ExprPtr& e, const FieldPtr& K, size_t paramIndex,
                  const std::string& baseVar);

bool is_rational_slice(const ExprPtr& e, const std::string& baseVar) {
    switch (e->kind) {
        case Expr::Kind::Number:
        case Expr::Kind::ImagUnit:
        case Expr::Kind::Zeta:
        case Expr::Kind::Ident: return true;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
        case Expr::Kind::Neg: {
            for (const ExprPtr& a : e->args)
                if (!is_rational_slice(a, baseVar)) return false;
            return true;
        }
        case Expr::Kind::Pow: return is_rational_slice(e->args[0], baseVar);
        default: return false;
    }
}

Quotients extract(const ExprPtr& e, const FieldPtr& K, size_t paramIndex,
                  const std::string& baseVar) {
    if (is_rational_slice(e, baseVar)) {
        RatFun r = expr_to_ratfun(e, K, baseVar);
        if (r.is_zero()) throw NotRepresentable("zero factor in hypergeometric family", 0);
        return {r.shifted(1) / r, r.shift_param(paramIndex, 1) / r};
    }
    switch (e->kind) {
        case Expr::Kind::Binom: {
            if (!(e->args[1]->kind == Expr::Kind::Ident && e->args[1]->name == baseVar))
                throw NotRepresentable("binomial must be Binom(param-linear, " + baseVar + ")", 0);
            RatFun Af = expr_to_ratfun(e->args[0], K, baseVar);
            if (!Af.is_constant())
                throw NotRepresentable("Binom(a, " + baseVar + ") needs a free of " + baseVar, 0);
            Const A = Af.constant_value();
            Const d = A.shift_param(paramIndex, 1) - A;
            if (!d.is_integer() || d.integer_value() < 0)
                throw NotRepresentable("binomial top argument must shift by a fixed integer", 0);
            Poly k = Poly::var(K);
            RatFun qk(Poly(A) - k, k + Poly::one(K));
            RatFun qn = RatFun::one(K);
            for (long j = 1; j <= d.integer_value(); ++j) {
                Const Aj = A + Const(K, Rat(j));
                qn = qn * RatFun(Poly(Aj), Poly(Aj) - k);
            }
            return {qk, qn};
        }
        case Expr::Kind::Mul: {
            Quotients a = extract(e->args[0], K, paramIndex, baseVar);
            Quotients b = extract(e->args[1], K, paramIndex, baseVar);
            return {a.qk * b.qk, a.qn * b.qn};
        }
        case Expr::Kind::Div: {
            Quotients a = extract(e->args[0], K, paramIndex, baseVar);
            Quotients b = extract(e->args[1], K, paramIndex, baseVar);
            return {a.qk / b.qk, a.qn / b.qn};
        }
        case Expr::Kind::Neg: return extract(e->args[0], K, paramIndex, baseVar);
        case Expr::Kind::Pow: {
            Quotients a = extract(e->args[0], K, paramIndex, baseVar);
            return {a.qk.pow(e->intExp), a.qn.pow(e->intExp)};
        }
        case Expr::Kind::Prod: {
            // Prod(j, lo, k, c) with constant body: geometric part c^k
            ExprPtr body = substitute_ident(e->args[2], e->name, parse(baseVar));
            RatFun c = expr_to_ratfun(body, K, baseVar);
            if (!c.is_constant())
                throw NotRepresentable("only constant-body products in families", 0);
            return {c, RatFun::one(K)};
        }
        default:
            throw NotRepresentable("unsupported node in hypergeometric family: " + expr_str(e),
                                   0);
    }
}

} // namespace

RatFun expr_to_ratfun(const ExprPtr& e, const FieldPtr& K, const std::string& baseVar) {
    switch (e->kind) {
        case Expr::Kind::Number: return RatFun(K, e->number);
        case Expr::Kind::ImagUnit:
            if (K->zetaOrder % 4 != 0)
                throw Error("the imaginary unit needs a cyclotomic order divisible by 4");
            return RatFun{Const(K, Cyc::zeta_pow(K, K->zetaOrder / 4))};
        case Expr::Kind::Zeta: return RatFun{Const::zeta(K)};
        case Expr::Kind::Ident: {
            if (e->name == baseVar) return RatFun::var(K);
            for (size_t i = 0; i < K->paramCount(); ++i)
                if (K->params[i] == e->name) return RatFun{Const::param(K, i)};
            throw Error("unbound identifier '" + e->name + "'");
        }
        case Expr::Kind::Add:
            return expr_to_ratfun(e->args[0], K, baseVar) + expr_to_ratfun(e->args[1], K, baseVar);
        case Expr::Kind::Sub:
            return expr_to_ratfun(e->args[0], K, baseVar) - expr_to_ratfun(e->args[1], K, baseVar);
        case Expr::Kind::Mul:
            return expr_to_ratfun(e->args[0], K, baseVar) * expr_to_ratfun(e->args[1], K, baseVar);
        case Expr::Kind::Div:
            return expr_to_ratfun(e->args[0], K, baseVar) / expr_to_ratfun(e->args[1], K, baseVar);
        case Expr::Kind::Neg: return -expr_to_ratfun(e->args[0], K, baseVar);
        case Expr::Kind::Pow: return expr_to_ratfun(e->args[0], K, baseVar).pow(e->intExp);
        default: throw NotRepresentable("not a rational expression: " + expr_str(e), 0);
    }
}

HypergeomFamily extract_family(const ExprPtr& f, const FieldPtr& K, size_t paramIndex,
                               const std::string& baseVar) {
    Quotients q = extract(f, K, paramIndex, baseVar);
    return HypergeomFamily{q.qk, q.qn, paramIndex};
}

VerifyResult verify_identity(const ExprPtr& lhs, const ExprPtr& rhs, const FieldPtr& K,
                             const std::string& var, long lo, long hi) {
    VerifyResult out;
    std::map<std::string, Const> env;
    for (size_t i = 0; i < K->paramCount(); ++i) env.emplace(K->params[i], Const::param(K, i));
    for (long v = lo; v <= hi; ++v) {
        env[var] = Const(K, Rat(v));
        Const l = eval_expr(lhs, K, env);
        Const r = eval_expr(rhs, K, env);
        if (l != r) {
            out.pass = false;
            out.failIndex = v;
            out.lhs = l.str();
            out.rhs = r.str();
            return out;
        }
    }
    return out;
}

} // namespace ringsum
