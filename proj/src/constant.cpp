#include "ringsum/constant.hpp"

namespace ringsum {

Const::Const(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Const with zero denominator");
    normalize();
}

void Const::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::one(den_.field());
        return;
    }
    if (!den_.is_scalar() && !num_.is_scalar()) {
        MPoly g = mpoly_gcd(num_, den_);
        if (!g.is_scalar() || !g.scalar_value().is_one()) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
    }
    Cyc lc = den_.lead_coeff();
    if (!lc.is_one()) {
        Cyc inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool Const::is_one() const {
    return den_.is_scalar() && den_.scalar_value().is_one() && num_.is_scalar() &&
           num_.scalar_value().is_one();
}

bool Const::is_cyc() const { return num_.is_scalar() && den_.is_scalar(); }

Cyc Const::cyc_value() const {
    if (!is_cyc()) throw std::logic_error("Const::cyc_value with parameters present");
    return num_.scalar_value() / den_.scalar_value();
}

bool Const::is_rational() const { return is_cyc() && num_.scalar_value().is_rational(); }

Rat Const::rational_value() const { return cyc_value().value(); }

bool Const::is_integer() const {
    return is_rational() && rat_den(rational_value()) == 1;
}

long Const::integer_value() const { return static_cast<long>(rational_value().get_num().get_si()); }

Const Const::operator-() const {
    Const r = *this;
    r.num_ = -r.num_;
    return r;
}

Const Const::operator+(const Const& o) const {
    if (den_ == o.den_) return Const(num_ + o.num_, den_);
    return Const(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Const Const::operator-(const Const& o) const { return *this + (-o); }

Const Const::operator*(const Const& o) const { return Const(num_ * o.num_, den_ * o.den_); }

Const Const::operator/(const Const& o) const { return *this * o.inverse(); }

Const Const::inverse() const {
    if (is_zero()) throw std::domain_error("Const division by zero");
    return Const(den_, num_);
}

Const Const::pow(long e) const {
    Const base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Const acc = one(field());
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Const::operator<(const Const& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

Const Const::shift_param(size_t index, long delta) const {
    return Const(num_.shift_param(index, delta), den_.shift_param(index, delta));
}

Const Const::eval_param(size_t index, const Rat& value) const {
    MPoly d = den_.eval_param(index, value);
    if (d.is_zero()) throw std::domain_error("parameter evaluation hits a pole");
    return Const(num_.eval_param(index, value), std::move(d));
}

std::string Const::str() const {
    if (den_.is_scalar() && den_.scalar_value().is_one()) {
        std::string s = num_.str();
        if (num_.terms().size() > 1) return "(" + s + ")";
        return s;
    }
    std::string n = num_.str(), d = den_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace ringsum
