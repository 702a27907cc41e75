#ifndef RINGSUM_TOWER_HPP
#define RINGSUM_TOWER_HPP

#include "ringsum/errors.hpp"
#include "ringsum/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ringsum {

class Tower;

// Canonical element of the difference ring E = F<t_1>...<t_e>: a sparse map
// from generator exponent vectors to K(k) coefficients.  Sigma exponents are
// >= 0, R exponents reduced into [0, order), Pi exponents unrestricted; no
// zero coefficients are stored.  Keys always have length = #generators of the
// tower the element belongs to.
class TowerElem {
public:
    using Key = std::vector<int>;
    using Terms = std::map<Key, RatFun>;

    TowerElem() = default;
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool operator==(const TowerElem& o) const { return t_ == o.t_; }
    bool operator!=(const TowerElem& o) const { return !(*this == o); }
    bool operator<(const TowerElem& o) const { return t_ < o.t_; }

    bool is_coefficient() const; // lies in F = K(k)
    RatFun coefficient_value() const;
    RatFun coeff_at(const Key& k) const;

    friend class Tower;
    friend TowerElem raw_terms(Terms t);

private:
    Terms t_;
};

inline TowerElem raw_terms(TowerElem::Terms t) {
    TowerElem e;
    e.t_ = std::move(t);
    return e;
}

// Element of the product group [G]_F^E: a nonzero unit of F times a monomial
// in the Pi/R generators.  Sigma positions are identically zero; R positions
// reduced into [0, order).
struct PGElem {
    RatFun unit;
    std::vector<long> exps;

    bool operator==(const PGElem& o) const { return unit == o.unit && exps == o.exps; }
    bool operator!=(const PGElem& o) const { return !(*this == o); }
};

enum class GenKind { Sigma, Pi, Root };

struct Generator {
    std::string name;
    GenKind kind;
    TowerElem beta;  // Sigma: sigma(t) = t + beta, over the strictly lower tower
    PGElem alpha;    // Pi/R: sigma(t) = alpha * t, over the strictly lower tower
    long order = 0;  // R only: lambda with t^lambda = 1
    // cached stats for Pi/R generators (0 = none)
    long ord = 0, per = 0, ford = 0;
};

// Immutable RPiSigma-generator tower over F = K(k) with sigma(k) = k + step.
class Tower {
public:
    Tower() = default;
    Tower(FieldPtr k, long shiftStep = 1);

    const FieldPtr& field() const { return K_; }
    long shift_step() const { return step_; }
    const std::vector<Generator>& gens() const { return gens_; }
    size_t size() const { return gens_.size(); }
    const Generator& gen(size_t i) const { return gens_[i]; }
    long find_gen(const std::string& name) const;
    Tower prefix(size_t nGens) const;

    // Raw structural extension; the builder layers the constant-preservation
    // tests on top of these.
    Tower with_sigma_gen(const std::string& name, TowerElem beta) const;
    Tower with_pi_gen(const std::string& name, PGElem alpha) const;
    Tower with_root_gen(const std::string& name, PGElem alpha, long order) const;

    // ---- element construction ----
    TowerElem zero() const { return TowerElem(); }
    TowerElem one() const { return from_ratfun(RatFun::one(K_)); }
    TowerElem from_ratfun(RatFun f) const;
    TowerElem from_const(Const c) const { return from_ratfun(RatFun(std::move(c))); }
    TowerElem gen_elem(size_t i) const;
    TowerElem monomial(RatFun coeff, TowerElem::Key exps) const;
    // Re-keys an element of the length-`fromGens` prefix into this tower.
    TowerElem lift(const TowerElem& e, size_t fromGens) const;
    PGElem lift_pg(const PGElem& a, size_t fromGens) const;
    // Restriction onto the length-`toGens` prefix; trailing exponents must
    // vanish in every term.
    TowerElem restrict(const TowerElem& e, size_t toGens) const;
    PGElem restrict_pg(const PGElem& a, size_t toGens) const;

    // ---- ring operations ----
    TowerElem add(const TowerElem& a, const TowerElem& b) const;
    TowerElem sub(const TowerElem& a, const TowerElem& b) const;
    TowerElem neg(const TowerElem& a) const;
    TowerElem mul(const TowerElem& a, const TowerElem& b) const;
    TowerElem mul_term(const TowerElem& a, const RatFun& coeff, const TowerElem::Key& exps) const;
    TowerElem scale(const TowerElem& a, const RatFun& c) const;
    TowerElem scale(const TowerElem& a, const Const& c) const;
    TowerElem pow(const TowerElem& a, long e) const; // e < 0 needs invertibility
    // Canonical form of raw term data: R exponents reduced, zeros dropped.
    TowerElem normalize(TowerElem::Terms raw) const;
    std::optional<TowerElem> try_inverse(const TowerElem& a) const;

    // ---- automorphism ----
    TowerElem sigma(const TowerElem& e, long power = 1) const;
    RatFun sigma_coeff(const RatFun& f, long power = 1) const;

    // ---- product group ----
    PGElem pg_one() const { return PGElem{RatFun::one(K_), std::vector<long>(size(), 0)}; }
    PGElem pg_from_unit(RatFun u) const;
    PGElem pg_normalize(PGElem a) const;
    PGElem pg_mul(const PGElem& a, const PGElem& b) const;
    PGElem pg_invert(const PGElem& a) const;
    PGElem pg_pow(const PGElem& a, long e) const;
    PGElem pg_sigma(const PGElem& a, long power = 1) const;
    TowerElem pg_to_elem(const PGElem& a) const;
    // Succeeds exactly on single-term elements with invertible coefficient
    // and Sigma-free monomial.
    std::optional<PGElem> elem_to_pg(const TowerElem& e) const;
    PGElem sigma_factorial(const PGElem& a, long n) const;

    // ---- order / period / factorial order ----
    long ord_pg(const PGElem& a) const;
    long per_pg(const PGElem& a) const;
    long ford_pg(const PGElem& a) const;
    long ord_const(const Const& c) const;

    std::string describe() const;
    std::string elem_str(const TowerElem& e) const;
    std::string pg_str(const PGElem& a) const;

    long id() const { return id_; }

private:
    FieldPtr K_;
    long step_ = 1;
    std::vector<Generator> gens_;
    long id_ = 0;

    void reduce_key(TowerElem::Key& k) const;
    // sigma^{+-1}(t_i) images used while applying sigma termwise
    TowerElem sigma_gen_image(size_t i, int dir) const;
    PGElem sigma_pg_gen(size_t i, int dir) const;
};

// Reordered copy with all R generators first, then Pi, then Sigma (relative
// order preserved); perm[i] = position of old generator i in the new tower.
std::pair<Tower, std::vector<size_t>> reorder_r_first(const Tower& t);
TowerElem remap_elem(const TowerElem& e, const std::vector<size_t>& perm, size_t newLen);
PGElem remap_pg(const PGElem& a, const std::vector<size_t>& perm, size_t newLen);

} // namespace ringsum

#endif
