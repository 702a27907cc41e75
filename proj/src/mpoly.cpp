#include "ringsum/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ringsum {

MPoly::MPoly(FieldPtr k, Cyc scalar) : K_(std::move(k)) {
    if (!scalar.is_zero()) t_.emplace(Key(K_->paramCount(), 0), std::move(scalar));
}

MPoly MPoly::param(const FieldPtr& k, size_t index) {
    MPoly p;
    p.K_ = k;
    Key key(k->paramCount(), 0);
    key.at(index) = 1;
    p.t_.emplace(std::move(key), Cyc::one(k));
    return p;
}

bool MPoly::is_scalar() const {
    if (t_.empty()) return true;
    if (t_.size() != 1) return false;
    const Key& k = t_.begin()->first;
    return std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
}

Cyc MPoly::scalar_value() const {
    if (t_.empty()) return Cyc::zero(K_);
    if (!is_scalar()) throw std::logic_error("MPoly::scalar_value on non-scalar");
    return t_.begin()->second;
}

void MPoly::set_term(Key k, Cyc c) {
    if (c.is_zero())
        t_.erase(k);
    else
        t_[std::move(k)] = std::move(c);
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    if (r.K_ == nullptr) r.K_ = o.K_;
    for (const auto& [k, c] : o.t_) {
        auto it = r.t_.find(k);
        if (it == r.t_.end()) {
            r.t_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    r.K_ = K_ ? K_ : o.K_;
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            Key k = ka;
            for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
            Cyc c = ca * cb;
            auto it = r.t_.find(k);
            if (it == r.t_.end()) {
                if (!c.is_zero()) r.t_.emplace(std::move(k), std::move(c));
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

MPoly MPoly::scaled(const Cyc& c) const {
    MPoly r;
    r.K_ = K_;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
    return r;
}

const MPoly::Key& MPoly::lead_key() const {
    if (t_.empty()) throw std::logic_error("lead_key of zero polynomial");
    return t_.rbegin()->first;
}

const Cyc& MPoly::lead_coeff() const {
    if (t_.empty()) throw std::logic_error("lead_coeff of zero polynomial");
    return t_.rbegin()->second;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [k, c] : t_) {
        long s = 0;
        for (int e : k) s += e;
        d = std::max(d, s);
    }
    return d;
}

long MPoly::degree_in(size_t var) const {
    long d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, static_cast<long>(k[var]));
    return d;
}

MPoly MPoly::div_exact(const MPoly& o) const {
    if (o.is_zero()) throw std::domain_error("MPoly division by zero");
    MPoly rem = *this;
    MPoly q;
    q.K_ = K_;
    const Key& lo = o.lead_key();
    Cyc lcInv = o.lead_coeff().inverse();
    while (!rem.is_zero()) {
        const Key& lr = rem.lead_key();
        Key d(lr.size(), 0);
        for (size_t i = 0; i < lr.size(); ++i) {
            d[i] = lr[i] - lo[i];
            if (d[i] < 0) throw std::domain_error("MPoly division not exact");
        }
        Cyc c = rem.lead_coeff() * lcInv;
        MPoly t;
        t.K_ = K_;
        t.t_.emplace(std::move(d), c);
        q = q + t;
        rem = rem - t * o;
    }
    return q;
}

bool MPoly::divides(const MPoly& o) const {
    if (is_zero()) return o.is_zero();
    try {
        (void)o.div_exact(*this);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

MPoly MPoly::shift_param(size_t index, long delta) const {
    if (delta == 0) return *this;
    MPoly r = zero(K_);
    MPoly var = param(K_, index) + MPoly(K_, Rat(delta));
    for (const auto& [k, c] : t_) {
        MPoly term(K_, c);
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            MPoly base = (i == index) ? var : param(K_, i);
            for (int e = 0; e < k[i]; ++e) term = term * base;
        }
        r = r + term;
    }
    return r;
}

MPoly MPoly::eval_param(size_t index, const Rat& value) const {
    MPoly r = zero(K_);
    Cyc v(K_, value);
    for (const auto& [k, c] : t_) {
        Cyc coeff = c;
        for (int e = 0; e < k[index]; ++e) coeff = coeff * v;
        Key nk = k;
        nk[index] = 0;
        MPoly term;
        term.K_ = K_;
        term.set_term(std::move(nk), std::move(coeff));
        r = r + term;
    }
    return r;
}

namespace {

// Univariate view in variable `var`: dense coefficient list whose entries are
// MPolys with var-exponent zero.
std::vector<MPoly> uni_view(const MPoly& p, size_t var) {
    std::vector<MPoly> c(static_cast<size_t>(std::max<long>(p.degree_in(var), -1) + 1),
                         MPoly::zero(p.field()));
    for (const auto& [k, v] : p.terms()) {
        MPoly::Key nk = k;
        int e = nk[var];
        nk[var] = 0;
        MPoly t;
        t = MPoly::zero(p.field());
        t.set_term(std::move(nk), v);
        c[static_cast<size_t>(e)] = c[static_cast<size_t>(e)] + t;
    }
    return c;
}

MPoly from_uni_view(const std::vector<MPoly>& c, size_t var, const FieldPtr& k) {
    MPoly r = MPoly::zero(k);
    MPoly v = MPoly::param(k, var);
    MPoly vp = MPoly::one(k);
    for (size_t i = 0; i < c.size(); ++i) {
        r = r + c[i] * vp;
        vp = vp * v;
    }
    return r;
}

void uv_trim(std::vector<MPoly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Pseudo remainder of dense MPoly-coefficient polynomials.
std::vector<MPoly> uv_prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    const MPoly& lb = b.back();
    while (a.size() >= b.size()) {
        MPoly la = a.back();
        size_t off = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = a[off + j] - la * b[j];
        uv_trim(a);
        if (a.empty()) break;
    }
    return a;
}

MPoly content_of(const std::vector<MPoly>& c) {
    MPoly g = MPoly::zero(c.empty() ? nullptr : c[0].field());
    for (const auto& x : c) g = mpoly_gcd(g, x);
    return g;
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    const FieldPtr& K = a.is_zero() ? b.field() : a.field();
    auto monic = [](const MPoly& p) { return p.scaled(p.lead_coeff().inverse()); };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_scalar() || b.is_scalar()) return MPoly::one(K);
    // Main variable: lowest index occurring in either operand.
    size_t var = K->paramCount();
    bool univariate = true;
    for (size_t i = 0; i < K->paramCount(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            if (var == K->paramCount())
                var = i;
            else
                univariate = false;
        }
    if (univariate) {
        // plain Euclid over the coefficient field; the pseudo-remainder
        // route blows up coefficients for no benefit here
        auto dense = [&](const MPoly& p) {
            std::vector<Cyc> c(static_cast<size_t>(p.degree_in(var)) + 1, Cyc::zero(K));
            for (const auto& [k, v] : p.terms()) c[static_cast<size_t>(k[var])] = v;
            return c;
        };
        std::vector<Cyc> x = dense(a), y = dense(b);
        auto trim = [](std::vector<Cyc>& p) {
            while (!p.empty() && p.back().is_zero()) p.pop_back();
        };
        trim(x);
        trim(y);
        while (!y.empty()) {
            while (x.size() >= y.size() && !x.empty()) {
                Cyc c = x.back() / y.back();
                size_t off = x.size() - y.size();
                for (size_t i = 0; i < y.size(); ++i) x[off + i] = x[off + i] - c * y[i];
                trim(x);
            }
            std::swap(x, y);
        }
        MPoly g = MPoly::zero(K);
        Cyc inv = x.back().inverse();
        for (size_t d = 0; d < x.size(); ++d) {
            MPoly::Key key(K->paramCount(), 0);
            key[var] = static_cast<int>(d);
            g.set_term(std::move(key), x[d] * inv);
        }
        return g;
    }
    std::vector<MPoly> A = uni_view(a, var), B = uni_view(b, var);
    MPoly contA = content_of(A), contB = content_of(B);
    MPoly cont = mpoly_gcd(contA, contB);
    for (auto& c : A) c = c.div_exact(contA);
    for (auto& c : B) c = c.div_exact(contB);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        std::vector<MPoly> R = uv_prem(A, B);
        if (!R.empty()) {
            MPoly cr = content_of(R);
            for (auto& c : R) c = c.div_exact(cr);
        }
        A = std::move(B);
        B = std::move(R);
    }
    MPoly g = cont * from_uni_view(A, var, K);
    return monic(g);
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        bool hasVar = false;
        std::ostringstream vs;
        for (size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (hasVar) vs << "*";
            hasVar = true;
            vs << K_->params[i];
            if (it->first[i] > 1) vs << "^" << it->first[i];
        }
        std::string cs = it->second.str();
        bool needParen = cs.find_first_of("+-") != std::string::npos && cs.size() > 1;
        if (!hasVar) {
            os << cs;
        } else if (it->second.is_one()) {
            os << vs.str();
        } else {
            os << (needParen ? "(" + cs + ")" : cs) << "*" << vs.str();
        }
    }
    return os.str();
}

} // namespace ringsum
