#include "ringsum/tower.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>

namespace ringsum {

namespace {
std::atomic<long> towerIds{1};
}

Tower::Tower(FieldPtr k, long shiftStep) : K_(std::move(k)), step_(shiftStep), id_(towerIds++) {
    if (step_ == 0) throw std::invalid_argument("shift step must be nonzero");
}

long Tower::find_gen(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<long>(i);
    return -1;
}

Tower Tower::prefix(size_t nGens) const {
    Tower t(K_, step_);
    t.gens_.assign(gens_.begin(), gens_.begin() + nGens);
    return t;
}

Tower Tower::with_sigma_gen(const std::string& name, TowerElem beta) const {
    Tower t(K_, step_);
    t.gens_ = gens_;
    Generator g;
    g.name = name;
    g.kind = GenKind::Sigma;
    g.beta = std::move(beta);
    t.gens_.push_back(std::move(g));
    return t;
}

Tower Tower::with_pi_gen(const std::string& name, PGElem alpha) const {
    Tower t(K_, step_);
    t.gens_ = gens_;
    Generator g;
    g.name = name;
    g.kind = GenKind::Pi;
    g.alpha = pg_normalize(std::move(alpha));
    g.ord = 0; // a Pi-monomial's quotient has no order
    t.gens_.push_back(std::move(g));
    return t;
}

Tower Tower::with_root_gen(const std::string& name, PGElem alpha, long order) const {
    if (order < 2) throw std::invalid_argument("R-generator order must be > 1");
    Tower t(K_, step_);
    t.gens_ = gens_;
    Generator g;
    g.name = name;
    g.kind = GenKind::Root;
    g.alpha = pg_normalize(std::move(alpha));
    g.order = order;
    g.ord = order;
    // per(x) = ford(alpha), ford(x) via the minimal-multiple scan; both are
    // positive here because alpha is a constant unit times lower R-monomials.
    g.per = ford_pg(g.alpha);
    t.gens_.push_back(std::move(g));
    Generator& gn = t.gens_.back();
    if (gn.per > 0) {
        PGElem x = t.pg_normalize(PGElem{RatFun::one(K_), std::vector<long>(t.size(), 0)});
        x.exps[t.size() - 1] = 1;
        gn.ford = t.ford_pg(x);
    }
    return t;
}

bool TowerElem::is_coefficient() const {
    for (const auto& [k, v] : t_)
        for (int e : k)
            if (e != 0) return false;
    return true;
}

RatFun TowerElem::coefficient_value() const {
    if (t_.empty()) throw std::logic_error("coefficient_value of zero needs a field; use coeff_at");
    if (!is_coefficient()) throw std::logic_error("element does not lie in the base field");
    return t_.begin()->second;
}

RatFun TowerElem::coeff_at(const Key& k) const {
    auto it = t_.find(k);
    if (it == t_.end()) {
        if (t_.empty()) throw std::logic_error("coeff_at of zero element");
        return RatFun::zero(t_.begin()->second.field());
    }
    return it->second;
}

void Tower::reduce_key(TowerElem::Key& k) const {
    for (size_t i = 0; i < k.size(); ++i)
        if (gens_[i].kind == GenKind::Root) {
            long o = gens_[i].order;
            k[i] = static_cast<int>(((k[i] % o) + o) % o);
        }
}

TowerElem Tower::normalize(TowerElem::Terms raw) const {
    TowerElem::Terms out;
    for (auto& [k, v] : raw) {
        if (v.is_zero()) continue;
        TowerElem::Key key = k;
        if (key.size() != size()) throw std::invalid_argument("exponent key length mismatch");
        for (size_t i = 0; i < key.size(); ++i)
            if (gens_[i].kind == GenKind::Sigma && key[i] < 0)
                throw std::invalid_argument("negative Sigma exponent");
        reduce_key(key);
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(std::move(key), v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return raw_terms(std::move(out));
}

TowerElem Tower::from_ratfun(RatFun f) const {
    TowerElem e;
    if (!f.is_zero()) e = raw_terms({{TowerElem::Key(size(), 0), std::move(f)}});
    return e;
}

TowerElem Tower::gen_elem(size_t i) const {
    TowerElem::Key k(size(), 0);
    k[i] = 1;
    return raw_terms({{std::move(k), RatFun::one(K_)}});
}

TowerElem Tower::monomial(RatFun coeff, TowerElem::Key exps) const {
    if (coeff.is_zero()) return TowerElem();
    reduce_key(exps);
    return raw_terms({{std::move(exps), std::move(coeff)}});
}

TowerElem Tower::lift(const TowerElem& e, size_t fromGens) const {
    TowerElem::Terms out;
    for (const auto& [k, v] : e.terms()) {
        TowerElem::Key key = k;
        if (key.size() != fromGens) throw std::invalid_argument("lift: key length mismatch");
        key.resize(size(), 0);
        out.emplace(std::move(key), v);
    }
    return raw_terms(std::move(out));
}

PGElem Tower::lift_pg(const PGElem& a, size_t fromGens) const {
    PGElem r = a;
    if (r.exps.size() != fromGens) throw std::invalid_argument("lift_pg: length mismatch");
    r.exps.resize(size(), 0);
    return r;
}

TowerElem Tower::restrict(const TowerElem& e, size_t toGens) const {
    TowerElem::Terms out;
    for (const auto& [k, v] : e.terms()) {
        for (size_t i = toGens; i < k.size(); ++i)
            if (k[i] != 0) throw std::logic_error("restrict: element depends on upper generators");
        out.emplace(TowerElem::Key(k.begin(), k.begin() + toGens), v);
    }
    return raw_terms(std::move(out));
}

PGElem Tower::restrict_pg(const PGElem& a, size_t toGens) const {
    for (size_t i = toGens; i < a.exps.size(); ++i)
        if (a.exps[i] != 0) throw std::logic_error("restrict_pg: depends on upper generators");
    PGElem r = a;
    r.exps.resize(toGens);
    return r;
}

TowerElem Tower::add(const TowerElem& a, const TowerElem& b) const {
    TowerElem::Terms out = a.terms();
    for (const auto& [k, v] : b.terms()) {
        auto it = out.find(k);
        if (it == out.end()) {
            out.emplace(k, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return raw_terms(std::move(out));
}

TowerElem Tower::neg(const TowerElem& a) const {
    TowerElem::Terms out = a.terms();
    for (auto& [k, v] : out) v = -v;
    return raw_terms(std::move(out));
}

TowerElem Tower::sub(const TowerElem& a, const TowerElem& b) const { return add(a, neg(b)); }

TowerElem Tower::mul_term(const TowerElem& a, const RatFun& coeff, const TowerElem::Key& exps) const {
    TowerElem::Terms out;
    if (coeff.is_zero()) return TowerElem();
    for (const auto& [k, v] : a.terms()) {
        TowerElem::Key key = k;
        for (size_t i = 0; i < key.size(); ++i) key[i] += exps[i];
        reduce_key(key);
        RatFun c = v * coeff;
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(std::move(key), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return raw_terms(std::move(out));
}

TowerElem Tower::mul(const TowerElem& a, const TowerElem& b) const {
    TowerElem r;
    for (const auto& [k, v] : b.terms()) r = add(r, mul_term(a, v, k));
    return r;
}

TowerElem Tower::scale(const TowerElem& a, const RatFun& c) const {
    return mul_term(a, c, TowerElem::Key(size(), 0));
}

TowerElem Tower::scale(const TowerElem& a, const Const& c) const {
    return scale(a, RatFun(c));
}

TowerElem Tower::pow(const TowerElem& a, long e) const {
    TowerElem base = a;
    if (e < 0) {
        auto inv = try_inverse(a);
        if (!inv) throw std::domain_error("negative power of non-invertible element");
        base = *inv;
        e = -e;
    }
    TowerElem acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

RatFun Tower::sigma_coeff(const RatFun& f, long power) const { return f.shifted(power, step_); }

PGElem Tower::pg_from_unit(RatFun u) const {
    if (u.is_zero()) throw std::domain_error("product-group element with zero unit");
    return PGElem{std::move(u), std::vector<long>(size(), 0)};
}

PGElem Tower::pg_normalize(PGElem a) const {
    if (a.unit.is_zero()) throw std::domain_error("product-group element with zero unit");
    if (a.exps.size() != size()) throw std::invalid_argument("pg exponent length mismatch");
    for (size_t i = 0; i < a.exps.size(); ++i) {
        if (gens_[i].kind == GenKind::Sigma && a.exps[i] != 0)
            throw NotInProductGroup("Sigma exponent in product-group element");
        if (gens_[i].kind == GenKind::Root) {
            long o = gens_[i].order;
            a.exps[i] = ((a.exps[i] % o) + o) % o;
        }
    }
    return a;
}

PGElem Tower::pg_mul(const PGElem& a, const PGElem& b) const {
    PGElem r;
    r.unit = a.unit * b.unit;
    r.exps.resize(size());
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return pg_normalize(std::move(r));
}

PGElem Tower::pg_invert(const PGElem& a) const {
    PGElem r;
    r.unit = a.unit.inverse();
    r.exps.resize(size());
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = -a.exps[i];
    return pg_normalize(std::move(r));
}

PGElem Tower::pg_pow(const PGElem& a, long e) const {
    PGElem r;
    r.unit = a.unit.pow(e);
    r.exps.resize(size());
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = a.exps[i] * e;
    return pg_normalize(std::move(r));
}

PGElem Tower::sigma_pg_gen(size_t i, int dir) const {
    // image of t_i under sigma^{dir} as a product-group element, for Pi/R gens
    PGElem alpha = lift_pg(gens_[i].alpha, i);
    PGElem ti = pg_one();
    ti.exps[i] = 1;
    if (dir > 0) return pg_mul(alpha, ti);
    return pg_mul(pg_invert(pg_sigma(alpha, -1)), ti);
}

PGElem Tower::pg_sigma(const PGElem& a, long power) const {
    PGElem r = a;
    int dir = power >= 0 ? 1 : -1;
    for (long n = 0; n < (power >= 0 ? power : -power); ++n) {
        PGElem step = pg_from_unit(sigma_coeff(r.unit, dir));
        for (size_t i = 0; i < r.exps.size(); ++i)
            if (r.exps[i] != 0) step = pg_mul(step, pg_pow(sigma_pg_gen(i, dir), r.exps[i]));
        r = std::move(step);
    }
    return r;
}

TowerElem Tower::pg_to_elem(const PGElem& a) const {
    TowerElem::Key k(size(), 0);
    for (size_t i = 0; i < k.size(); ++i) k[i] = static_cast<int>(a.exps[i]);
    return monomial(a.unit, std::move(k));
}

std::optional<PGElem> Tower::elem_to_pg(const TowerElem& e) const {
    if (e.terms().size() != 1) return std::nullopt;
    const auto& [k, v] = *e.terms().begin();
    PGElem r;
    r.unit = v;
    r.exps.assign(k.begin(), k.end());
    for (size_t i = 0; i < k.size(); ++i)
        if (gens_[i].kind == GenKind::Sigma && k[i] != 0) return std::nullopt;
    return pg_normalize(std::move(r));
}

TowerElem Tower::sigma_gen_image(size_t i, int dir) const {
    const Generator& g = gens_[i];
    if (g.kind != GenKind::Sigma) return pg_to_elem(sigma_pg_gen(i, dir));
    TowerElem beta = lift(g.beta, i);
    if (dir > 0) return add(gen_elem(i), beta);
    return sub(gen_elem(i), sigma(beta, -1));
}

TowerElem Tower::sigma(const TowerElem& e, long power) const {
    TowerElem r = e;
    int dir = power >= 0 ? 1 : -1;
    for (long n = 0; n < (power >= 0 ? power : -power); ++n) {
        TowerElem out;
        std::vector<std::optional<TowerElem>> imgElem(size());
        std::vector<std::optional<PGElem>> imgPg(size());
        for (const auto& [k, v] : r.terms()) {
            TowerElem term = from_ratfun(sigma_coeff(v, dir));
            for (size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (gens_[i].kind == GenKind::Sigma) {
                    if (!imgElem[i]) imgElem[i] = sigma_gen_image(i, dir);
                    term = mul(term, pow(*imgElem[i], k[i]));
                } else {
                    if (!imgPg[i]) imgPg[i] = sigma_pg_gen(i, dir);
                    term = mul(term, pg_to_elem(pg_pow(*imgPg[i], k[i])));
                }
            }
            out = add(out, term);
        }
        r = std::move(out);
    }
    return r;
}

PGElem Tower::sigma_factorial(const PGElem& a, long n) const {
    PGElem acc = pg_one();
    if (n > 0) {
        PGElem cur = a;
        for (long j = 0; j < n; ++j) {
            acc = pg_mul(acc, cur);
            if (j + 1 < n) cur = pg_sigma(cur, 1);
        }
    } else if (n < 0) {
        PGElem cur = pg_sigma(pg_invert(a), -1);
        for (long j = 0; j < -n; ++j) {
            acc = pg_mul(acc, cur);
            if (j + 1 < -n) cur = pg_sigma(cur, -1);
        }
    }
    return acc;
}

long Tower::ord_const(const Const& c) const {
    if (c.is_zero() || !c.is_cyc()) return 0;
    return c.cyc_value().root_of_unity_order();
}

long Tower::ord_pg(const PGElem& a) const {
    // any Pi dependence kills the order
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (gens_[i].kind == GenKind::Pi && a.exps[i] != 0) return 0;
    if (!a.unit.is_constant()) return 0;
    long ordU = ord_const(a.unit.constant_value());
    if (ordU == 0) return 0;
    long n = ordU;
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (gens_[i].kind == GenKind::Root && a.exps[i] != 0) {
            long o = gens_[i].order;
            n = lcm_long(n, o / std::gcd(o, a.exps[i]));
        }
    return n;
}

long Tower::per_pg(const PGElem& a) const {
    // Pi-dependent elements of a valid tower have no period: a period would
    // make them sigma^n-constant, and constants stay in K.
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (gens_[i].kind == GenKind::Pi && a.exps[i] != 0) return 0;
    if (!a.unit.is_constant()) return 0;
    long mu = 1;
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (gens_[i].kind == GenKind::Root && a.exps[i] % gens_[i].order != 0) {
            if (gens_[i].per == 0) return 0;
            mu = lcm_long(mu, gens_[i].per);
        }
    if (mu > 1000000) throw CapExceeded("period scan bound exceeds 10^6");
    for (long j : divisors_of(mu))
        if (pg_sigma(a, j) == a) return j;
    return 0;
}

long Tower::ford_pg(const PGElem& a) const {
    long o = ord_pg(a);
    long p = per_pg(a);
    if (o == 0 || p == 0) return 0;
    for (long i = 1; i <= o; ++i) {
        PGElem f = sigma_factorial(a, i * p);
        if (f.unit.is_one()) {
            bool trivial = true;
            for (long e : f.exps)
                if (e != 0) trivial = false;
            if (trivial) return i * p;
        }
    }
    return 0;
}

std::optional<TowerElem> Tower::try_inverse(const TowerElem& a) const {
    if (a.is_zero()) return std::nullopt;
    // factor out the first term's monomial, then the rest must live in the
    // R-monomial span where a finite linear solve decides invertibility
    const auto& [k0, c0] = *a.terms().begin();
    TowerElem::Key invKey(size(), 0);
    for (size_t i = 0; i < size(); ++i) invKey[i] = -k0[i];
    TowerElem core = mul_term(a, c0.inverse(), invKey);
    if (core.terms().size() == 1 && core.terms().begin()->second.is_one()) {
        bool trivial = true;
        for (int e : core.terms().begin()->first)
            if (e != 0) trivial = false;
        if (trivial) {
            // pure monomial: invert directly
            TowerElem::Key key(size(), 0);
            for (size_t i = 0; i < size(); ++i) {
                if (gens_[i].kind == GenKind::Sigma && k0[i] != 0) return std::nullopt;
                key[i] = -k0[i];
            }
            return monomial(c0.inverse(), std::move(key));
        }
    }
    std::vector<size_t> rgens;
    for (const auto& [k, v] : core.terms())
        for (size_t i = 0; i < size(); ++i)
            if (k[i] != 0) {
                if (gens_[i].kind != GenKind::Root) return std::nullopt;
                if (std::find(rgens.begin(), rgens.end(), i) == rgens.end()) rgens.push_back(i);
            }
    // enumerate the finite monomial box over the involved R generators
    std::vector<TowerElem::Key> basis;
    TowerElem::Key cur(size(), 0);
    std::function<void(size_t)> rec = [&](size_t d) {
        if (d == rgens.size()) {
            basis.push_back(cur);
            return;
        }
        for (long e = 0; e < gens_[rgens[d]].order; ++e) {
            cur[rgens[d]] = static_cast<int>(e);
            rec(d + 1);
        }
        cur[rgens[d]] = 0;
    };
    rec(0);
    std::map<TowerElem::Key, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    size_t n = basis.size();
    // (core * y)_w = delta_{w,0}: columns y_v, rows w
    std::vector<std::vector<RatFun>> m(n, std::vector<RatFun>(n + 1, RatFun::zero(K_)));
    for (size_t v = 0; v < n; ++v) {
        TowerElem prod = mul_term(core, RatFun::one(K_), basis[v]);
        for (const auto& [k, c] : prod.terms()) {
            auto it = index.find(k);
            if (it == index.end()) return std::nullopt; // leaked outside the box
            m[it->second][v] = c;
        }
    }
    m[index.at(TowerElem::Key(size(), 0))][n] = RatFun::one(K_);
    // Gaussian elimination over K(k)
    size_t row = 0;
    std::vector<long> pivotOfCol(n, -1);
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t p = row;
        while (p < n && m[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        RatFun inv = m[row][col].inverse();
        for (size_t j = col; j <= n; ++j) m[row][j] = m[row][j] * inv;
        for (size_t r2 = 0; r2 < n; ++r2) {
            if (r2 == row || m[r2][col].is_zero()) continue;
            RatFun f = m[r2][col];
            for (size_t j = col; j <= n; ++j) m[r2][j] = m[r2][j] - f * m[row][j];
        }
        pivotOfCol[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<RatFun> y(n, RatFun::zero(K_));
    for (size_t r2 = 0; r2 < n; ++r2) {
        bool allZero = true;
        for (size_t c = 0; c < n; ++c)
            if (!m[r2][c].is_zero()) allZero = false;
        if (allZero && !m[r2][n].is_zero()) return std::nullopt; // inconsistent
    }
    for (size_t col = 0; col < n; ++col)
        if (pivotOfCol[col] >= 0) y[col] = m[static_cast<size_t>(pivotOfCol[col])][n];
    TowerElem yElem;
    for (size_t v = 0; v < n; ++v)
        if (!y[v].is_zero()) yElem = add(yElem, monomial(y[v], basis[v]));
    if (yElem.is_zero()) return std::nullopt;
    // inverse of a = inverse(core) * c0^{-1} * monomial^{-1}
    TowerElem::Key key(size(), 0);
    for (size_t i = 0; i < size(); ++i) {
        if (gens_[i].kind == GenKind::Sigma && k0[i] != 0) return std::nullopt;
        key[i] = -k0[i];
    }
    TowerElem result = mul_term(yElem, c0.inverse(), key);
    if (mul(result, a) != one()) return std::nullopt;
    return result;
}

std::pair<Tower, std::vector<size_t>> reorder_r_first(const Tower& t) {
    std::vector<size_t> order;
    for (size_t i = 0; i < t.size(); ++i)
        if (t.gen(i).kind == GenKind::Root) order.push_back(i);
    for (size_t i = 0; i < t.size(); ++i)
        if (t.gen(i).kind == GenKind::Pi) order.push_back(i);
    for (size_t i = 0; i < t.size(); ++i)
        if (t.gen(i).kind == GenKind::Sigma) order.push_back(i);
    std::vector<size_t> perm(t.size());
    for (size_t newPos = 0; newPos < order.size(); ++newPos) perm[order[newPos]] = newPos;
    Tower out(t.field(), t.shift_step());
    for (size_t newPos = 0; newPos < order.size(); ++newPos) {
        const Generator& g = t.gen(order[newPos]);
        size_t oldPrefix = order[newPos];
        // re-key prefix data: old position j -> perm[j], all < newPos
        std::vector<size_t> sub(perm.begin(), perm.begin() + oldPrefix);
        if (g.kind == GenKind::Sigma) {
            TowerElem beta = remap_elem(g.beta, sub, newPos);
            out = out.with_sigma_gen(g.name, std::move(beta));
        } else {
            PGElem alpha = remap_pg(g.alpha, sub, newPos);
            out = g.kind == GenKind::Pi ? out.with_pi_gen(g.name, std::move(alpha))
                                        : out.with_root_gen(g.name, std::move(alpha), g.order);
        }
    }
    return {std::move(out), std::move(perm)};
}

TowerElem remap_elem(const TowerElem& e, const std::vector<size_t>& perm, size_t newLen) {
    TowerElem::Terms out;
    for (const auto& [k, v] : e.terms()) {
        TowerElem::Key key(newLen, 0);
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (perm[i] >= newLen) throw std::logic_error("remap_elem: exponent out of range");
            key[perm[i]] = k[i];
        }
        out.emplace(std::move(key), v);
    }
    return raw_terms(std::move(out));
}

PGElem remap_pg(const PGElem& a, const std::vector<size_t>& perm, size_t newLen) {
    PGElem r;
    r.unit = a.unit;
    r.exps.assign(newLen, 0);
    for (size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] == 0) continue;
        if (perm[i] >= newLen) throw std::logic_error("remap_pg: exponent out of range");
        r.exps[perm[i]] = a.exps[i];
    }
    return r;
}

std::string Tower::describe() const {
    std::ostringstream os;
    os << "Q(zeta_" << K_->zetaOrder << ")";
    for (const auto& p : K_->params) os << "(" << p << ")";
    os << "(k)";
    for (const Generator& g : gens_) {
        switch (g.kind) {
            case GenKind::Sigma: os << "[" << g.name << "]"; break;
            case GenKind::Pi: os << "<" << g.name << ">"; break;
            case GenKind::Root: os << "[" << g.name << "|" << g.order << "]"; break;
        }
    }
    return os.str();
}

std::string Tower::elem_str(const TowerElem& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << gens_[i].name;
            if (k[i] != 1) mono << "^" << (k[i] < 0 ? "(" + std::to_string(k[i]) + ")" : std::to_string(k[i]));
        }
        if (!any) {
            os << v.str();
        } else if (v.is_one()) {
            os << mono.str();
        } else {
            os << v.str() << "*" << mono.str();
        }
    }
    return os.str();
}

std::string Tower::pg_str(const PGElem& a) const {
    return elem_str(pg_to_elem(a));
}

} // namespace ringsum
