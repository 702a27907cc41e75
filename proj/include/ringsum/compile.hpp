#ifndef RINGSUM_COMPILE_HPP
#define RINGSUM_COMPILE_HPP

#include "ringsum/builder.hpp"
#include "ringsum/expr.hpp"

namespace ringsum {

// Compiles expressions in the base variable k into tower elements, adjoining
// generators as needed.  Every adjoined generator gets an anchor value at
// k0 = 0 (computed with the independent expression evaluator), so compiled
// elements agree with their expressions as sequences.
class Compiler {
public:
    Compiler(FieldPtr K, Limits lim = {}, std::string baseVar = "k");

    // Represents the expression over the (growing) tower; returns the element
    // over the final tower state.  Use after all calls via tower()/context().
    TowerElem compile(const ExprPtr& e);
    // Lifts a previously compiled element to the current tower.
    TowerElem lift_to_current(const TowerElem& e) const;

    const Tower& tower() const { return t_; }
    const SeqContext& context() const { return ctx_; }
    const FieldPtr& field() const { return K_; }
    const std::string& base_var() const { return baseVar_; }
    // Expression recorded for each generator, for result documents.
    const std::map<std::string, std::string>& gen_docs() const { return genDocs_; }

private:
    FieldPtr K_;
    Limits lim_;
    std::string baseVar_;
    Tower t_;
    SeqContext ctx_;
    std::map<std::string, std::pair<TowerElem, size_t>> memo_; // def string -> (elem, #gens)
    std::map<std::string, std::string> genDocs_;
    std::map<std::string, ExprPtr> genObjects_; // generator -> sequence it models
    int xCount_ = 0, tCount_ = 0, sCount_ = 0;

    std::map<std::string, Const> param_env() const;
    TowerElem rec(const ExprPtr& e);
    TowerElem compile_sum(const ExprPtr& e);
    TowerElem compile_prod(const ExprPtr& e);
    TowerElem compile_pow_binom(const ExprPtr& e);
    TowerElem compile_binom(const ExprPtr& e);
    TowerElem adjoin_product_anchored(const PGElem& alpha, const ExprPtr& object,
                                      long minStart);
    // value of a generator's sequence at index v, via the expression oracle
    Const object_value(const ExprPtr& object, long v) const;
    // raise the global anchor index and recompute every generator's value
    void ensure_start(long minStart);
    void set_anchor(const std::string& gen, const ExprPtr& object);
};

// hi-bound shapes accepted for Sum/Prod bodies: k or k-1
long upper_bound_offset(const ExprPtr& hi, const std::string& baseVar);

// AST clone with an identifier renamed (bound variables become the base var)
ExprPtr substitute_ident(const ExprPtr& e, const std::string& from, const ExprPtr& to);

// Hypergeometric family extraction for creative telescoping: F built from
// Binom(param-linear, k), rational functions of (params, k), powers, products
// and constants.  Throws NotRepresentable outside this slice.
HypergeomFamily extract_family(const ExprPtr& f, const FieldPtr& K, size_t paramIndex,
                               const std::string& baseVar = "k");

struct VerifyResult {
    bool pass = true;
    long failIndex = 0;
    std::string lhs, rhs;
};
VerifyResult verify_identity(const ExprPtr& lhs, const ExprPtr& rhs, const FieldPtr& K,
                             const std::string& var, long lo, long hi);

// expression -> rational function of k (and parameters); rational slice only
RatFun expr_to_ratfun(const ExprPtr& e, const FieldPtr& K, const std::string& baseVar);

} // namespace ringsum

#endif
