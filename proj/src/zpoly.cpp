#include "waring/zpoly.hpp"

#include <sstream>

namespace waring {

ZPoly ZPoly::variable() {
    ZPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

ZPoly ZPoly::from_coeffs(std::vector<Rational> ascending) {
    ZPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

Rational ZPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Rational ZPoly::eval(const Rational& v) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    return ZPoly::from_coeffs(std::move(prod));
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPoly ZPoly::pow(unsigned exponent) const {
    ZPoly acc{Rational(1)};
    for (unsigned s = 0; s < exponent; ++s) acc *= *this;
    return acc;
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.str();
        } else {
            if (!a.is_one()) out << a.str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

ZPoly binom_z(long shift, long k) {
    if (k < 0) return ZPoly();
    ZPoly acc{Rational(1)};
    ZPoly z = ZPoly::variable();
    for (long s = 0; s < k; ++s) acc *= z + ZPoly(Rational(shift - s));
    acc *= Rational(1) / factorial(static_cast<unsigned long>(k));
    return acc;
}

}  // namespace waring
