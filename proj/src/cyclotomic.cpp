#include "ringsum/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ringsum {

std::vector<long> divisors_of(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// Low-to-high dense division of univariate rationals, exact.
std::vector<Rat> poly_div_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    std::vector<Rat> q(num.size() - den.size() + 1, Rat(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Rat c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j)
                num[i + j] -= c * den[j];
    }
    for (const Rat& r : num)
        if (r != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

} // namespace

std::vector<Rat> cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Rat> num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors_of(static_cast<long>(n))) {
        if (d == static_cast<long>(n)) continue;
        num = poly_div_exact(std::move(num), cyclotomic_poly(static_cast<unsigned>(d)));
    }
    return num;
}

FieldPtr make_field(unsigned zetaOrder, std::vector<std::string> params) {
    if (zetaOrder == 0 || zetaOrder > 64)
        throw std::invalid_argument("cyclotomic order must be in [1, 64]");
    auto f = std::make_shared<FieldDesc>();
    f->zetaOrder = zetaOrder;
    f->cyclo = cyclotomic_poly(zetaOrder);
    f->params = std::move(params);
    return f;
}

Cyc::Cyc(FieldPtr k, Rat value) : K_(std::move(k)), c_(K_->degree(), Rat(0)) {
    // deg Phi_1 = deg Phi_2 = 1: the field is Q and zeta^0 is the only slot.
    c_[0] = std::move(value);
}

Cyc Cyc::zeta_pow(const FieldPtr& k, long power) {
    long n = static_cast<long>(k->zetaOrder);
    long p = ((power % n) + n) % n;
    std::vector<Rat> raw(static_cast<size_t>(p) + 1, Rat(0));
    raw[static_cast<size_t>(p)] = 1;
    return from_coeffs(k, std::move(raw));
}

Cyc Cyc::from_coeffs(FieldPtr k, std::vector<Rat> raw) {
    Cyc z;
    z.K_ = std::move(k);
    z.reduce(raw);
    raw.resize(z.K_->degree(), Rat(0));
    z.c_ = std::move(raw);
    return z;
}

void Cyc::reduce(std::vector<Rat>& raw) const {
    const std::vector<Rat>& m = K_->cyclo;
    size_t deg = m.size() - 1;
    while (raw.size() > deg) {
        Rat c = raw.back();
        size_t off = raw.size() - 1 - deg;
        if (c != 0)
            for (size_t j = 0; j < deg; ++j)
                raw[off + j] -= c * m[j];
        raw.pop_back();
    }
}

bool Cyc::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool Cyc::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::value() const {
    if (!is_rational()) throw std::logic_error("Cyc::value on irrational element");
    return c_[0];
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
    std::vector<Rat> raw(2 * c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) raw[i + j] += c_[i] * o.c_[j];
    }
    return from_coeffs(K_, std::move(raw));
}

bool Cyc::operator==(const Cyc& o) const { return c_ == o.c_; }

namespace {

// Dense low-to-high polynomial helpers over Q for the extended Euclid below.
using QP = std::vector<Rat>;

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qp_mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QP qp_sub(QP a, const QP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// a = q*b + r
void qp_divmod(QP a, const QP& b, QP& q, QP& r) {
    qp_trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        qp_trim(a);
    }
    r = std::move(a);
}

} // namespace

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    if (is_rational()) return Cyc(K_, Rat(1) / c_[0]);
    // Extended Euclid: s*this + t*Phi = 1 in Q[z].
    QP r0 = K_->cyclo;
    QP r1(c_);
    qp_trim(r1);
    QP s0{}, s1{Rat(1)};
    while (!(r1.size() == 1)) {
        QP q, r;
        qp_divmod(r0, r1, q, r);
        if (r.empty()) throw std::logic_error("Phi_N not squarefree?");
        QP s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rat lead = r1[0];
    for (Rat& x : s1) x /= lead;
    return from_coeffs(K_, std::move(s1));
}

Cyc Cyc::pow(long e) const {
    Cyc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Cyc acc = one(K_);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

long Cyc::root_of_unity_order() const {
    if (is_zero()) return 0;
    long L = K_->rootGroupOrder();
    if (!pow(L).is_one()) return 0;
    for (long d : divisors_of(L))
        if (pow(d).is_one()) return d;
    return 0;
}

Cyc root_group_generator(const FieldPtr& k) {
    if (k->zetaOrder % 2 == 0) return Cyc::zeta_pow(k, 1);
    // N odd: -zeta_N has order 2N.
    return -Cyc::zeta_pow(k, 1);
}

long root_of_unity_log(const Cyc& z) {
    long L = z.field()->rootGroupOrder();
    Cyc g = root_group_generator(z.field());
    Cyc acc = Cyc::one(z.field());
    for (long a = 0; a < L; ++a) {
        if (acc == z) return a;
        acc = acc * g;
    }
    return -1;
}

std::string Cyc::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unitCoeff = (a == 1 && i > 0);
        if (!unitCoeff) os << rat_str(a);
        if (i > 0) {
            if (!unitCoeff) os << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace ringsum
