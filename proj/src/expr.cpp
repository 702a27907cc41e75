#include "ringsum/expr.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace ringsum {

namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void where(size_t p, size_t& line, size_t& col) const {
        line = 1;
        col = 1;
        for (size_t i = 0; i < p && i < src.size(); ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }

    [[noreturn]] void fail(const std::string& expected) {
        size_t line, col;
        where(pos, line, col);
        std::ostringstream os;
        os << "syntax error at " << line << ":" << col << ", expected " << expected;
        throw SyntaxError(os.str(), line, col, expected);
    }

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool accept(char c) {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    bool peek(char c) {
        skip();
        return pos < src.size() && src[pos] == c;
    }

    bool done() {
        skip();
        return pos == src.size();
    }

    std::string ident() {
        skip();
        size_t s = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (s == pos) fail("identifier");
        return src.substr(s, pos - s);
    }

    Rat number() {
        skip();
        size_t s = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (s == pos) fail("number");
        return Rat(src.substr(s, pos - s));
    }

    long integer() {
        skip();
        bool paren = accept('(');
        bool neg = accept('-');
        Rat n = number();
        if (paren) expect(')');
        long v = static_cast<long>(n.get_num().get_si());
        return neg ? -v : v;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            if (accept('+')) {
                auto e = Expr::make(Expr::Kind::Add);
                const_cast<Expr*>(e.get())->args = {lhs, term()};
                lhs = e;
            } else if (accept('-')) {
                auto e = Expr::make(Expr::Kind::Sub);
                const_cast<Expr*>(e.get())->args = {lhs, term()};
                lhs = e;
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (true) {
            if (accept('*')) {
                auto e = Expr::make(Expr::Kind::Mul);
                const_cast<Expr*>(e.get())->args = {lhs, factor()};
                lhs = e;
            } else if (accept('/')) {
                auto e = Expr::make(Expr::Kind::Div);
                const_cast<Expr*>(e.get())->args = {lhs, factor()};
                lhs = e;
            } else {
                return lhs;
            }
        }
    }

    ExprPtr factor() {
        skip();
        if (accept('-')) {
            auto e = Expr::make(Expr::Kind::Neg);
            const_cast<Expr*>(e.get())->args = {factor()};
            return e;
        }
        ExprPtr b = base();
        if (!accept('^')) return b;
        skip();
        // exponent := integer | ident | Binom(expr, m) with m in {1, 2, 3};
        // an identifier exponent is the m = 1 case of the triangular family
        if (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos])) &&
            src.compare(pos, 6, "Binom(") != 0) {
            std::string id = ident();
            auto inner = Expr::make(Expr::Kind::Ident);
            const_cast<Expr*>(inner.get())->name = id;
            auto e = Expr::make(Expr::Kind::PowBinom);
            Expr* w = const_cast<Expr*>(e.get());
            w->args = {b, inner};
            w->intExp = 1;
            return e;
        }
        if (pos < src.size() && src.compare(pos, 6, "Binom(") == 0) {
            pos += 6;
            ExprPtr inner = expr();
            expect(',');
            long m = integer();
            expect(')');
            if (m < 1 || m > 3) fail("Binom exponent order in {1,2,3}");
            auto e = Expr::make(Expr::Kind::PowBinom);
            Expr* w = const_cast<Expr*>(e.get());
            w->args = {b, inner};
            w->intExp = m;
            return e;
        }
        long v = integer();
        auto e = Expr::make(Expr::Kind::Pow);
        Expr* w = const_cast<Expr*>(e.get());
        w->args = {b};
        w->intExp = v;
        return e;
    }

    ExprPtr base() {
        skip();
        if (accept('(')) {
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            auto e = Expr::make(Expr::Kind::Number);
            const_cast<Expr*>(e.get())->number = number();
            return e;
        }
        std::string id = ident();
        if ((id == "Sum" || id == "Prod") && peek('(')) {
            expect('(');
            std::string var = ident();
            expect(',');
            ExprPtr lo = expr();
            expect(',');
            ExprPtr hi = expr();
            expect(',');
            ExprPtr body = expr();
            expect(')');
            auto e = Expr::make(id == "Sum" ? Expr::Kind::Sum : Expr::Kind::Prod);
            Expr* w = const_cast<Expr*>(e.get());
            w->name = var;
            w->args = {lo, hi, body};
            return e;
        }
        if (id == "Binom" && peek('(')) {
            expect('(');
            ExprPtr a = expr();
            expect(',');
            ExprPtr b = expr();
            expect(')');
            auto e = Expr::make(Expr::Kind::Binom);
            const_cast<Expr*>(e.get())->args = {a, b};
            return e;
        }
        if (id == "I") return Expr::make(Expr::Kind::ImagUnit);
        if (id == "zeta") return Expr::make(Expr::Kind::Zeta);
        auto e = Expr::make(Expr::Kind::Ident);
        const_cast<Expr*>(e.get())->name = id;
        return e;
    }
};

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow:
        case Expr::Kind::PowBinom: return 4;
        default: return 5;
    }
}

void print(const ExprPtr& e, std::ostringstream& os, int parentPrec) {
    int prec = precedence(e->kind);
    bool paren = prec < parentPrec;
    if (paren) os << "(";
    switch (e->kind) {
        case Expr::Kind::Number: os << rat_str(e->number); break;
        case Expr::Kind::ImagUnit: os << "I"; break;
        case Expr::Kind::Zeta: os << "zeta"; break;
        case Expr::Kind::Ident: os << e->name; break;
        case Expr::Kind::Add:
            print(e->args[0], os, prec);
            os << " + ";
            print(e->args[1], os, prec + 1);
            break;
        case Expr::Kind::Sub:
            print(e->args[0], os, prec);
            os << " - ";
            print(e->args[1], os, prec + 1);
            break;
        case Expr::Kind::Mul:
            print(e->args[0], os, prec);
            os << "*";
            print(e->args[1], os, prec + 1);
            break;
        case Expr::Kind::Div:
            print(e->args[0], os, prec);
            os << "/";
            print(e->args[1], os, prec + 1);
            break;
        case Expr::Kind::Neg:
            os << "-";
            print(e->args[0], os, prec + 1);
            break;
        case Expr::Kind::Pow:
            print(e->args[0], os, prec + 1);
            os << "^";
            if (e->intExp < 0)
                os << "(" << e->intExp << ")";
            else
                os << e->intExp;
            break;
        case Expr::Kind::PowBinom:
            print(e->args[0], os, prec + 1);
            if (e->intExp == 1 && e->args[1]->kind == Expr::Kind::Ident) {
                os << "^" << e->args[1]->name;
            } else {
                os << "^Binom(";
                print(e->args[1], os, 0);
                os << "," << e->intExp << ")";
            }
            break;
        case Expr::Kind::Sum:
        case Expr::Kind::Prod:
            os << (e->kind == Expr::Kind::Sum ? "Sum(" : "Prod(") << e->name << ",";
            print(e->args[0], os, 0);
            os << ",";
            print(e->args[1], os, 0);
            os << ",";
            print(e->args[2], os, 0);
            os << ")";
            break;
        case Expr::Kind::Binom:
            os << "Binom(";
            print(e->args[0], os, 0);
            os << ",";
            print(e->args[1], os, 0);
            os << ")";
            break;
    }
    if (paren) os << ")";
}

void collect_free(const ExprPtr& e, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (e->kind) {
        case Expr::Kind::Ident:
            if (!bound.count(e->name)) out.insert(e->name);
            break;
        case Expr::Kind::Sum:
        case Expr::Kind::Prod: {
            collect_free(e->args[0], bound, out);
            collect_free(e->args[1], bound, out);
            bool was = bound.count(e->name) > 0;
            bound.insert(e->name);
            collect_free(e->args[2], bound, out);
            if (!was) bound.erase(e->name);
            break;
        }
        default:
            for (const ExprPtr& a : e->args) collect_free(a, bound, out);
    }
}

long to_integer(const Const& c, const char* what) {
    if (!c.is_integer()) throw Error(std::string(what) + " does not evaluate to an integer");
    return c.integer_value();
}

Const binom_const(const FieldPtr& K, const Const& a, long b) {
    if (b < 0) return Const::zero(K);
    Const acc = Const::one(K);
    for (long i = 1; i <= b; ++i)
        acc = acc * (a - Const(K, Rat(i - 1))) / Const(K, Rat(i));
    return acc;
}

} // namespace

ExprPtr parse(const std::string& src) {
    Parser p(src);
    ExprPtr e = p.expr();
    if (!p.done()) p.fail("end of input");
    return e;
}

std::string expr_str(const ExprPtr& e) {
    std::ostringstream os;
    print(e, os, 0);
    return os.str();
}

std::vector<std::string> free_idents(const ExprPtr& e) {
    std::set<std::string> bound, out;
    collect_free(e, bound, out);
    return {out.begin(), out.end()};
}

Const eval_expr(const ExprPtr& e, const FieldPtr& K, const std::map<std::string, Const>& env) {
    switch (e->kind) {
        case Expr::Kind::Number: return Const(K, e->number);
        case Expr::Kind::ImagUnit:
            if (K->zetaOrder % 4 != 0)
                throw Error("the imaginary unit needs a cyclotomic order divisible by 4");
            return Const(K, Cyc::zeta_pow(K, K->zetaOrder / 4));
        case Expr::Kind::Zeta: return Const::zeta(K);
        case Expr::Kind::Ident: {
            auto it = env.find(e->name);
            if (it == env.end()) throw Error("unbound identifier '" + e->name + "'");
            return it->second;
        }
        case Expr::Kind::Add: return eval_expr(e->args[0], K, env) + eval_expr(e->args[1], K, env);
        case Expr::Kind::Sub: return eval_expr(e->args[0], K, env) - eval_expr(e->args[1], K, env);
        case Expr::Kind::Mul: return eval_expr(e->args[0], K, env) * eval_expr(e->args[1], K, env);
        case Expr::Kind::Div: {
            Const d = eval_expr(e->args[1], K, env);
            if (d.is_zero()) throw Error("division by zero while evaluating");
            return eval_expr(e->args[0], K, env) / d;
        }
        case Expr::Kind::Neg: return -eval_expr(e->args[0], K, env);
        case Expr::Kind::Pow: return eval_expr(e->args[0], K, env).pow(e->intExp);
        case Expr::Kind::PowBinom: {
            Const inner = eval_expr(e->args[1], K, env);
            Const b = binom_const(K, inner, e->intExp);
            return eval_expr(e->args[0], K, env).pow(to_integer(b, "binomial exponent"));
        }
        case Expr::Kind::Binom: {
            Const a = eval_expr(e->args[0], K, env);
            Const b = eval_expr(e->args[1], K, env);
            return binom_const(K, a, to_integer(b, "binomial argument"));
        }
        case Expr::Kind::Sum:
        case Expr::Kind::Prod: {
            long lo = to_integer(eval_expr(e->args[0], K, env), "summation bound");
            long hi = to_integer(eval_expr(e->args[1], K, env), "summation bound");
            bool isSum = e->kind == Expr::Kind::Sum;
            Const acc = isSum ? Const::zero(K) : Const::one(K);
            std::map<std::string, Const> inner = env;
            for (long j = lo; j <= hi; ++j) {
                inner[e->name] = Const(K, Rat(j));
                Const v = eval_expr(e->args[2], K, inner);
                acc = isSum ? acc + v : acc * v;
            }
            return acc;
        }
    }
    throw std::logic_error("unhandled expression node");
}

} // namespace ringsum
