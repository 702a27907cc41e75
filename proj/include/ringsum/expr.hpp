#ifndef RINGSUM_EXPR_HPP
#define RINGSUM_EXPR_HPP

#include "ringsum/constant.hpp"
#include "ringsum/errors.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ringsum {

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, size_t line, size_t col, std::string expected)
        : Error(msg), line(line), col(col), expected(std::move(expected)) {}
    size_t line, col;
    std::string expected;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        Number,   // rational literal
        ImagUnit, // I
        Zeta,     // primitive session root of unity
        Ident,    // parameter, bound variable or the base variable k
        Add,
        Sub,
        Mul,
        Div,
        Neg,
        Pow,      // base ^ integer
        PowBinom, // base ^ Binom(expr, m), m in {1,2,3}
        Sum,      // Sum(var, lo, hi, body)
        Prod,
        Binom,    // Binom(a, b) as a value
    };
    Kind kind;
    Rat number;              // Number
    std::string name;        // Ident; Sum/Prod bound variable
    std::vector<ExprPtr> args;
    long intExp = 0;         // Pow exponent; PowBinom second argument

    static ExprPtr make(Kind k) { return std::make_shared<Expr>(Expr{k, Rat(0), "", {}, 0}); }
};

ExprPtr parse(const std::string& src);
std::string expr_str(const ExprPtr& e);

// free identifiers (excluding bound sum/product variables)
std::vector<std::string> free_idents(const ExprPtr& e);

// Exact evaluation with an identifier environment; Sum/Prod bounds must
// evaluate to integers.  The independent numeric oracle of the engine.
Const eval_expr(const ExprPtr& e, const FieldPtr& K, const std::map<std::string, Const>& env);

} // namespace ringsum

#endif
