#include "ringsum/commands.hpp"

#include <chrono>
#include <sstream>

namespace ringsum {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json base_doc(const std::string& command, const std::string& input) {
    Json doc;
    doc["command"] = command;
    doc["input"] = input;
    return doc;
}

FieldPtr session_field(const CommandOptions& opt) { return make_field(opt.zeta, opt.params); }

} // namespace

CommandResult cmd_telescope(const CommandOptions& opt, const std::string& input) {
    auto t0 = Clock::now();
    Json doc = base_doc("telescope", input);
    FieldPtr K = session_field(opt);
    Compiler comp(K, Limits{opt.lambdaCap});
    std::vector<ExprPtr> extraExprs;
    for (const std::string& x : opt.extra) {
        extraExprs.push_back(parse(x));
        comp.compile(extraExprs.back());
    }
    ExprPtr summand = parse(input);
    TowerElem f = comp.lift_to_current(comp.compile(summand));
    double parseMs = ms_since(t0);
    const Tower& t = comp.tower();
    doc["tower"] = tower_json(t, comp.gen_docs());

    t0 = Clock::now();
    auto g = telescope(t, f, Limits{opt.lambdaCap});
    double solveMs = ms_since(t0);

    t0 = Clock::now();
    Json verification;
    long lo = opt.verifyLo, hi = opt.verifyHi;
    if (!g) {
        doc["solution"] = nullptr;
        verification["status"] = "skipped";
        doc["verification"] = verification;
        doc["timings"] = {{"parse_ms", parseMs}, {"solve_ms", solveMs}, {"verify_ms", 0.0}};
        return {doc, 1};
    }
    Json sol;
    sol["certificate"] = print_elem(t, *g);
    sol["identity"] = "Sum(k," + std::to_string(lo) + ",b, f(k)) = g(b+1) - g(" +
                      std::to_string(lo) + ")";
    sol["certificate_terms"] = elem_json(t, *g)["terms"];
    doc["solution"] = sol;
    // numeric check of the telescoped identity and of the compilation itself
    verification["range"] = {lo, hi};
    verification["status"] = "pass";
    try {
        auto fv = eval_sequence(t, f, comp.context(), lo, hi);
        auto gv = eval_sequence(t, *g, comp.context(), lo, hi + 1);
        std::map<std::string, Const> env;
        for (size_t i = 0; i < K->paramCount(); ++i)
            env.emplace(K->params[i], Const::param(K, i));
        Const sum = Const::zero(K);
        for (long b = lo; b <= hi; ++b) {
            env["k"] = Const(K, Rat(b));
            if (eval_expr(summand, K, env) != fv[b - lo])
                throw Error("compiled summand disagrees with the expression at k=" +
                            std::to_string(b));
            sum = sum + fv[b - lo];
            if (sum != gv[b - lo + 1] - gv[0]) {
                verification["status"] = "fail";
                verification["first_mismatch"] = b;
                break;
            }
        }
    } catch (const PoleAtPoint& p) {
        verification["status"] = "pole";
        verification["at"] = p.index;
    }
    doc["verification"] = verification;
    doc["timings"] = {{"parse_ms", parseMs}, {"solve_ms", solveMs}, {"verify_ms", ms_since(t0)}};
    return {doc, verification["status"] == "pass" ? 0 : 2};
}

CommandResult cmd_rewrite_product(const CommandOptions& opt, const std::string& input) {
    auto t0 = Clock::now();
    Json doc = base_doc("rewrite-product", input);
    FieldPtr K = session_field(opt);
    ExprPtr e = parse(input);
    if (e->kind != Expr::Kind::Prod) throw Error("rewrite-product expects a Prod(...) expression");
    Compiler comp(K, Limits{opt.lambdaCap});
    for (const std::string& x : opt.extra) comp.compile(parse(x));
    // body as a function of k; the product runs prod_{k=lo}^{b} body(k)
    ExprPtr body = substitute_ident(e->args[2], e->name, parse("k"));
    Const loC = eval_expr(e->args[0], K, {});
    if (!loC.is_integer()) throw Error("product lower bound must be an integer");
    long lo = loC.integer_value();
    TowerElem bodyElem = comp.compile(body);
    const Tower& t = comp.tower();
    auto upg = t.elem_to_pg(bodyElem);
    if (!upg) throw NotInProductGroup("product body is not a product-group element");
    double parseMs = ms_since(t0);
    doc["tower"] = tower_json(t, comp.gen_docs());

    t0 = Clock::now();
    auto g = rewrite_product(t, *upg, Limits{opt.lambdaCap});
    double solveMs = ms_since(t0);

    t0 = Clock::now();
    Json verification;
    long rlo = opt.verifyLo, rhi = opt.verifyHi;
    if (!g) {
        doc["solution"] = nullptr;
        verification["status"] = "skipped";
        doc["verification"] = verification;
        doc["timings"] = {{"parse_ms", parseMs}, {"solve_ms", solveMs}, {"verify_ms", 0.0}};
        return {doc, 1};
    }
    Json sol;
    sol["g"] = print_elem(t, *g);
    sol["identity"] = "Prod(k," + std::to_string(lo) + ",b, u(k)) = g(b+1)/g(" +
                      std::to_string(lo) + ")";
    sol["g_terms"] = elem_json(t, *g)["terms"];
    doc["solution"] = sol;
    verification["range"] = {rlo, rhi};
    verification["status"] = "pass";
    try {
        long start = std::min(lo, rlo);
        auto uv = eval_sequence(t, t.pg_to_elem(*upg), comp.context(), start, rhi);
        auto gv = eval_sequence(t, *g, comp.context(), start, rhi + 1);
        Const g0 = gv[lo - start];
        if (g0.is_zero()) throw PoleAtPoint("g vanishes at the lower bound", lo);
        Const prod = Const::one(K);
        for (long b = lo; b <= rhi; ++b) {
            prod = prod * uv[b - start];
            if (b < rlo) continue;
            if (prod != gv[b - start + 1] / g0) {
                verification["status"] = "fail";
                verification["first_mismatch"] = b;
                break;
            }
        }
    } catch (const PoleAtPoint& p) {
        verification["status"] = "pole";
        verification["at"] = p.index;
    }
    doc["verification"] = verification;
    doc["timings"] = {{"parse_ms", parseMs}, {"solve_ms", solveMs}, {"verify_ms", ms_since(t0)}};
    return {doc, verification["status"] == "pass" ? 0 : 2};
}

CommandResult cmd_zeilberger(const CommandOptions& opt, const std::string& input) {
    auto t0 = Clock::now();
    Json doc = base_doc("zeilberger", input);
    if (opt.params.empty()) throw Error("zeilberger needs --params with the recurrence variable");
    FieldPtr K = session_field(opt);
    ExprPtr e = parse(input);
    HypergeomFamily fam = extract_family(e, K, 0);
    double parseMs = ms_since(t0);

    t0 = Clock::now();
    auto rec = creative_telescope(K, fam, opt.maxOrder, Limits{opt.lambdaCap});
    double solveMs = ms_since(t0);
    if (!rec) {
        doc["solution"] = nullptr;
        doc["verification"] = {{"status", "skipped"}};
        doc["timings"] = {{"parse_ms", parseMs}, {"solve_ms", solveMs}, {"verify_ms", 0.0}};
        return {doc, 1};
    }
    doc["tower"] = tower_json(rec->tower);
    Json sol;
    sol["order"] = rec->order;
    Json cs = Json::array();
    std::ostringstream recStr;
    for (size_t i = 0; i < rec->coeffs.size(); ++i) {
        cs.push_back(rec->coeffs[i].str());
        if (i) recStr << " + ";
        recStr << "(" << rec->coeffs[i].str() << ")*S(" << opt.params[0]
               << (i ? "+" + std::to_string(i) : "") << ")";
    }
    recStr << " = boundary(g)";
    sol["coefficients"] = cs;
    sol["recurrence"] = recStr.str();
    sol["certificate"] = print_elem(rec->tower, rec->certificate);
    doc["solution"] = sol;

    // numeric verification of the certificate identity for small n
    t0 = Clock::now();
    Json verification;
    verification["status"] = "pass";
    try {
        const Tower& t = rec->tower;
        SeqContext ctx;
        for (long nv = 0; nv <= 6; ++nv) {
            long M = nv + rec->order + 2;
            auto gv = eval_sequence(t, rec->certificate, ctx, 0, M + 1);
            Const lhs = Const::zero(K);
            for (long kk = 0; kk <= M; ++kk)
                for (size_t i = 0; i < rec->inputs.size(); ++i)
                    lhs = lhs + rec->coeffs[i] * eval_at(t, rec->inputs[i], ctx, kk);
            Const rhs = gv[static_cast<size_t>(M + 1)] - gv[0];
            if (lhs.eval_param(0, Rat(nv)) != rhs.eval_param(0, Rat(nv))) {
                verification["status"] = "fail";
                verification["first_mismatch"] = nv;
                break;
            }
        }
        verification["checked_parameter_values"] = 7;
    } catch (const Error& err) {
        verification["status"] = "pole";
        verification["note"] = err.what();
    }
    doc["verification"] = verification;
    doc["timings"] = {{"parse_ms", parseMs}, {"solve_ms", solveMs}, {"verify_ms", ms_since(t0)}};
    return {doc, verification["status"] == "pass" ? 0 : 2};
}

CommandResult cmd_order(const CommandOptions& opt, const std::string& input) {
    Json doc = base_doc("order", input);
    FieldPtr K = session_field(opt);
    Compiler comp(K, Limits{opt.lambdaCap});
    for (const std::string& x : opt.extra) comp.compile(parse(x));
    TowerElem e = comp.compile(parse(input));
    const Tower& t = comp.tower();
    auto pg = t.elem_to_pg(e);
    if (!pg) throw Error("order is defined for product-group elements");
    Json sol;
    long o = t.ord_pg(*pg);
    sol["order"] = o;
    sol["period"] = t.per_pg(*pg);
    sol["factorial_order"] = t.ford_pg(*pg);
    doc["tower"] = tower_json(t, comp.gen_docs());
    doc["solution"] = sol;
    doc["verification"] = {{"status", "pass"}};
    doc["timings"] = {{"parse_ms", 0.0}, {"solve_ms", 0.0}, {"verify_ms", 0.0}};
    return {doc, 0};
}

CommandResult cmd_verify(const CommandOptions& opt, const std::string& lhs,
                         const std::string& rhs, const std::string& var) {
    Json doc = base_doc("verify", lhs + " == " + rhs);
    FieldPtr K = session_field(opt);
    ExprPtr l = parse(lhs), r = parse(rhs);
    std::string v = var;
    if (v.empty()) {
        std::set<std::string> params(opt.params.begin(), opt.params.end());
        for (const std::string& id : free_idents(l))
            if (!params.count(id)) v = id;
        if (v.empty())
            for (const std::string& id : free_idents(r))
                if (!params.count(id)) v = id;
    }
    long lo = opt.verifyLo, hi = opt.verifyHi;
    VerifyResult res = verify_identity(l, r, K, v.empty() ? "b" : v, lo, hi);
    Json verification;
    verification["range"] = {lo, hi};
    verification["status"] = res.pass ? "pass" : "fail";
    if (!res.pass) {
        verification["first_mismatch"] = res.failIndex;
        verification["lhs"] = res.lhs;
        verification["rhs"] = res.rhs;
    }
    doc["verification"] = verification;
    doc["timings"] = {{"parse_ms", 0.0}, {"solve_ms", 0.0}, {"verify_ms", 0.0}};
    return {doc, res.pass ? 0 : 1};
}

CommandResult cmd_describe(const CommandOptions& opt, const std::string& input) {
    Json doc = base_doc("describe-tower", input);
    FieldPtr K = session_field(opt);
    Compiler comp(K, Limits{opt.lambdaCap});
    for (const std::string& x : opt.extra) comp.compile(parse(x));
    TowerElem e = comp.lift_to_current(comp.compile(parse(input)));
    const Tower& t = comp.tower();
    doc["tower"] = tower_json(t, comp.gen_docs());
    Json sol;
    sol["element"] = print_elem(t, e);
    doc["solution"] = sol;
    TowerReport rep = verify_tower(t, Limits{opt.lambdaCap});
    Json checks = Json::array();
    for (const auto& entry : rep.entries) {
        Json c;
        c["name"] = entry.name;
        c["ok"] = entry.ok;
        if (!entry.note.empty()) c["note"] = entry.note;
        checks.push_back(c);
    }
    doc["verification"] = {{"status", rep.all_ok() ? "pass" : "fail"}, {"checks", checks}};
    doc["timings"] = {{"parse_ms", 0.0}, {"solve_ms", 0.0}, {"verify_ms", 0.0}};
    return {doc, rep.all_ok() ? 0 : 2};
}



} // namespace ringsum
