#include "ringsum/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ringsum {

Poly Poly::var(const FieldPtr& k) {
    Poly p = zero(k);
    p.set_coeff(1, Const::one(k));
    return p;
}

Const Poly::constant_value() const {
    if (!is_constant()) throw std::logic_error("Poly::constant_value on non-constant");
    return c_.empty() ? Const::zero(K_) : c_.begin()->second;
}

Const Poly::coeff(long d) const {
    auto it = c_.find(d);
    return it == c_.end() ? Const::zero(K_) : it->second;
}

const Const& Poly::lead_coeff() const {
    if (c_.empty()) throw std::logic_error("lead_coeff of zero polynomial");
    return c_.rbegin()->second;
}

void Poly::set_coeff(long d, Const v) {
    if (v.is_zero())
        c_.erase(d);
    else
        c_[d] = std::move(v);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [d, v] : r.c_) v = -v;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    if (!r.K_) r.K_ = o.K_;
    for (const auto& [d, v] : o.c_) {
        auto it = r.c_.find(d);
        if (it == r.c_.end()) {
            r.c_.emplace(d, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r = zero(K_ ? K_ : o.K_);
    for (const auto& [da, va] : c_)
        for (const auto& [db, vb] : o.c_) {
            Const p = va * vb;
            auto it = r.c_.find(da + db);
            if (it == r.c_.end()) {
                if (!p.is_zero()) r.c_.emplace(da + db, std::move(p));
            } else {
                it->second = it->second + p;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

Poly Poly::scaled(const Const& c) const {
    Poly r = zero(K_);
    if (c.is_zero()) return r;
    for (const auto& [d, v] : c_) r.c_.emplace(d, v * c);
    return r;
}

void Poly::divmod(const Poly& den, Poly& q, Poly& r) const {
    if (den.is_zero()) throw std::domain_error("Poly division by zero");
    q = zero(K_);
    r = *this;
    Const lcInv = den.lead_coeff().inverse();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        long d = r.degree() - den.degree();
        Const c = r.lead_coeff() * lcInv;
        Poly t = zero(K_);
        t.set_coeff(d, c);
        q = q + t;
        r = r - t * den;
    }
}

Poly Poly::div_exact(const Poly& den) const {
    Poly q, r;
    divmod(den, q, r);
    if (!r.is_zero()) throw std::domain_error("Poly division not exact");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead_coeff().inverse());
}

Poly Poly::shifted(long j, long step) const {
    if (j == 0 || is_zero()) return *this;
    Const delta(K_, Rat(j * step));
    // Horner on k -> k + delta.
    Poly kk = var(K_) + Poly(delta);
    Poly r = zero(K_);
    long prev = degree();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        for (long i = it->first; i < prev; ++i) r = r * kk;
        r = r + Poly(it->second);
        prev = it->first;
    }
    for (long i = 0; i < prev; ++i) r = r * kk;
    return r;
}

Const Poly::eval(const Const& point) const {
    Const r = Const::zero(K_);
    long prev = degree();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        for (long i = it->first; i < prev; ++i) r = r * point;
        r = r + it->second;
        prev = it->first;
    }
    for (long i = 0; i < prev; ++i) r = r * point;
    return r;
}

Poly Poly::shift_param(size_t index, long delta) const {
    Poly r = zero(K_);
    for (const auto& [d, v] : c_) r.set_coeff(d, v.shift_param(index, delta));
    return r;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly quo, rem;
        a.divmod(b, quo, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    return a.monic();
}

Poly shift_poly(const Poly& p, long j, long step) { return p.shifted(j, step); }

namespace {

// Dense polynomials in the shift variable j with Const coefficients; used for
// the Sylvester resultant behind dispersion.
using JP = std::vector<Const>;

void jp_trim(JP& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

JP jp_mul(const JP& a, const JP& b, const FieldPtr& K) {
    if (a.empty() || b.empty()) return {};
    JP r(a.size() + b.size() - 1, Const::zero(K));
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    jp_trim(r);
    return r;
}

JP jp_sub(JP a, const JP& b, const FieldPtr& K) {
    if (a.size() < b.size()) a.resize(b.size(), Const::zero(K));
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    jp_trim(a);
    return a;
}

JP jp_div_exact(JP a, const JP& b, const FieldPtr& K) {
    if (b.empty()) throw std::domain_error("jp division by zero");
    JP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Const::zero(K));
    jp_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Const c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = a[off + j] - c * b[j];
        jp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("jp division not exact");
    return q;
}

// Bareiss fraction-free determinant over Const[j].
JP jp_det(std::vector<std::vector<JP>> m, const FieldPtr& K) {
    size_t n = m.size();
    JP one{Const::one(K)};
    JP prev = one;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m[pivot][c].empty()) ++pivot;
        if (pivot == n) return {};
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (size_t r = c + 1; r < n; ++r) {
            for (size_t cc = c + 1; cc < n; ++cc) {
                JP t = jp_sub(jp_mul(m[c][c], m[r][cc], K), jp_mul(m[r][c], m[c][cc], K), K);
                m[r][cc] = jp_div_exact(std::move(t), prev, K);
            }
            m[r][c].clear();
        }
        prev = m[c][c];
    }
    JP d = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& x : d) x = -x;
    return d;
}

// Integer roots of a nonzero element of K[j]: j0 is a root iff it is a common
// root of all scalar projections, so take the Q[j]-gcd of the projections and
// bound its integer roots by the primitive integer part.
std::vector<long> integer_roots(const JP& R, const FieldPtr& K) {
    // flatten: map (param exponent vector, zeta power) -> Q[j]
    std::map<std::pair<std::vector<int>, size_t>, std::vector<Rat>> proj;
    MPoly denClear = MPoly::one(K);
    for (const Const& c : R) denClear = denClear * c.den();
    for (size_t d = 0; d < R.size(); ++d) {
        MPoly flat = R[d].num() * denClear.div_exact(R[d].den());
        for (const auto& [key, cy] : flat.terms())
            for (size_t zp = 0; zp < cy.coeffs().size(); ++zp)
                if (cy.coeffs()[zp] != 0) {
                    auto& v = proj[{key, zp}];
                    if (v.size() <= d) v.resize(d + 1, Rat(0));
                    v[d] = cy.coeffs()[zp];
                }
    }
    // univariate gcd over Q of all projections
    std::vector<Rat> g;
    auto qtrim = [](std::vector<Rat>& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    for (auto& [key, p] : proj) {
        std::vector<Rat> y = p;
        qtrim(y);
        if (y.empty()) continue;
        if (g.empty()) {
            g = std::move(y);
            continue;
        }
        while (!y.empty()) {
            while (!g.empty() && g.size() >= y.size()) {
                Rat c = g.back() / y.back();
                size_t off = g.size() - y.size();
                for (size_t i = 0; i < y.size(); ++i) g[off + i] -= c * y[i];
                qtrim(g);
            }
            std::swap(g, y);
        }
        if (g.size() == 1) break; // constant gcd: no common roots beyond j^v
    }
    std::vector<long> roots;
    if (g.empty()) throw std::logic_error("integer_roots of zero polynomial");
    size_t v = 0;
    while (v < g.size() && g[v] == 0) ++v;
    if (v > 0) roots.push_back(0);
    if (v + 1 == g.size()) return roots; // constant after removing j^v
    // primitive integer part
    Int lcmDen(1), gcdNum(0);
    for (size_t i = v; i < g.size(); ++i)
        if (g[i] != 0) lcmDen = int_lcm(lcmDen, rat_den(g[i]));
    std::vector<Int> ip;
    for (size_t i = v; i < g.size(); ++i) {
        Rat t = g[i] * Rat(lcmDen);
        ip.push_back(rat_num(t));
        gcdNum = int_gcd(gcdNum, ip.back());
    }
    for (Int& x : ip) x /= gcdNum;
    // candidates divide the trailing coefficient
    Int trail = ip[0];
    if (trail < 0) trail = -trail;
    std::vector<long> cands;
    for (long dcand = 1; Int(dcand) * dcand <= trail; ++dcand) {
        if (!int_divisible(trail, Int(dcand))) continue;
        cands.push_back(dcand);
        Int other = trail / dcand;
        if (other.fits_slong_p()) cands.push_back(other.get_si());
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    auto is_root = [&](long j0) {
        Int acc(0), pw(1);
        for (size_t i = 0; i < ip.size(); ++i) {
            acc += ip[i] * pw;
            pw *= j0;
        }
        return acc == 0;
    };
    for (long cand : cands) {
        if (is_root(cand)) roots.push_back(cand);
        if (is_root(-cand)) roots.push_back(-cand);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::set<long> dispersion(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("dispersion of zero polynomial");
    const FieldPtr& K = p.field();
    Poly pm = p.monic(), qm = q.monic();
    if (pm.degree() == 0 || qm.degree() == 0) return {};
    // q(k+j) as a polynomial in k whose coefficients live in K[j].
    long dq = qm.degree();
    std::vector<JP> qshift(static_cast<size_t>(dq) + 1);
    for (const auto& [d, v] : qm.coeffs()) {
        // (k+j)^d: contributes v * C(d,i) j^(d-i) to coefficient of k^i
        Rat binom(1);
        for (long i = d; i >= 0; --i) {
            JP& dst = qshift[static_cast<size_t>(i)];
            size_t jdeg = static_cast<size_t>(d - i);
            if (dst.size() <= jdeg) dst.resize(jdeg + 1, Const::zero(K));
            dst[jdeg] = dst[jdeg] + v * Const(K, binom);
            binom = binom * Rat(i) / Rat(d - i + 1);
        }
    }
    for (auto& jp : qshift) jp_trim(jp);
    long dp = pm.degree();
    size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<JP>> syl(n, std::vector<JP>(n));
    for (long r = 0; r < dq; ++r)
        for (long c = 0; c <= dp; ++c) {
            Const pc = pm.coeff(dp - c);
            syl[static_cast<size_t>(r)][static_cast<size_t>(r + c)] =
                pc.is_zero() ? JP{} : JP{pc};
        }
    for (long r = 0; r < dp; ++r)
        for (long c = 0; c <= dq; ++c)
            syl[static_cast<size_t>(dq + r)][static_cast<size_t>(r + c)] =
                qshift[static_cast<size_t>(dq - c)];
    JP res = jp_det(std::move(syl), K);
    if (res.empty()) throw std::logic_error("identically zero resultant in dispersion");
    std::set<long> out;
    for (long j : integer_roots(res, K)) {
        if (j < 0) continue;
        if (poly_gcd(pm, qm.shifted(j)).degree() >= 1) out.insert(j);
    }
    return out;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
    }
    Const lc = den_.lead_coeff();
    if (!lc.is_one()) {
        Const inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("RatFun division by zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    RatFun base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    RatFun acc = one(field());
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool RatFun::operator<(const RatFun& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

RatFun RatFun::shifted(long j, long step) const {
    return RatFun(num_.shifted(j, step), den_.shifted(j, step));
}

Const RatFun::eval(const Const& point) const {
    Const d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("RatFun pole at evaluation point");
    return num_.eval(point) / d;
}

RatFun RatFun::shift_param(size_t index, long delta) const {
    return RatFun(num_.shift_param(index, delta), den_.shift_param(index, delta));
}

std::string Poly::str(const std::string& varName) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        std::string cs = it->second.str();
        if (it->first == 0) {
            os << cs;
        } else {
            if (!it->second.is_one()) os << cs << "*";
            os << varName;
            if (it->first != 1) os << "^" << it->first;
        }
    }
    return os.str();
}

std::string RatFun::str(const std::string& varName) const {
    std::string n = num_.str(varName);
    if (den_ == Poly::one(field())) return num_.coeffs().size() > 1 ? "(" + n + ")" : n;
    std::string d = den_.str(varName);
    if (num_.coeffs().size() > 1) n = "(" + n + ")";
    if (den_.coeffs().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace ringsum
