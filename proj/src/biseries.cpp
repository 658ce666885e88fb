#include "waring/biseries.hpp"

#include <sstream>
#include <stdexcept>

namespace waring {

BiSeries::BiSeries(int nvars, int t_order, int u_order)
    : nvars_(nvars), t_order_(t_order), u_order_(u_order) {
    if (t_order < 0 || u_order < 0) throw std::invalid_argument("BiSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(t_order + 1) * (u_order + 1), MultiPoly(nvars));
}

BiSeries BiSeries::constant(int nvars, int t_order, int u_order, const ZPoly& c) {
    BiSeries s(nvars, t_order, u_order);
    s.set_coeff(0, 0, MultiPoly::constant(nvars, c));
    return s;
}

const MultiPoly& BiSeries::coeff(int dt, int du) const {
    if (dt < 0 || dt > t_order_ || du < 0 || du > u_order_)
        throw std::out_of_range("BiSeries: coefficient index");
    return coeffs_[cell(dt, du)];
}

void BiSeries::set_coeff(int dt, int du, MultiPoly p) {
    if (dt < 0 || dt > t_order_ || du < 0 || du > u_order_)
        throw std::out_of_range("BiSeries: coefficient index");
    if (p.nvars() != nvars_) throw std::invalid_argument("BiSeries: variable count mismatch");
    coeffs_[cell(dt, du)] = std::move(p);
}

void BiSeries::add_to_coeff(int dt, int du, const MultiPoly& p) {
    if (dt < 0 || dt > t_order_ || du < 0 || du > u_order_)
        throw std::out_of_range("BiSeries: coefficient index");
    coeffs_[cell(dt, du)] += p;
}

bool BiSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool BiSeries::is_one() const { return *this == constant(nvars_, t_order_, u_order_, ZPoly(1)); }

void BiSeries::check_compatible(const BiSeries& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("BiSeries: variable count mismatch");
    if (t_order_ != o.t_order_ || u_order_ != o.u_order_)
        throw std::invalid_argument("BiSeries: truncation order mismatch");
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BiSeries& BiSeries::operator*=(const ZPoly& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    a.check_compatible(b);
    BiSeries prod(a.nvars_, a.t_order_, a.u_order_);
    for (int ta = 0; ta <= a.t_order_; ++ta)
        for (int ua = 0; ua <= a.u_order_; ++ua) {
            const MultiPoly& ca = a.coeffs_[a.cell(ta, ua)];
            if (ca.is_zero()) continue;
            for (int tb = 0; ta + tb <= a.t_order_; ++tb)
                for (int ub = 0; ua + ub <= a.u_order_; ++ub) {
                    const MultiPoly& cb = b.coeffs_[b.cell(tb, ub)];
                    if (cb.is_zero()) continue;
                    prod.coeffs_[prod.cell(ta + tb, ua + ub)] += ca * cb;
                }
        }
    return prod;
}

BiSeries BiSeries::operator-() const {
    BiSeries r(nvars_, t_order_, u_order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

BiSeries BiSeries::pow(unsigned exponent) const {
    BiSeries acc = constant(nvars_, t_order_, u_order_, ZPoly(1));
    for (unsigned s = 0; s < exponent; ++s) acc *= *this;
    return acc;
}

BiSeries BiSeries::truncated(int t_order, int u_order) const {
    if (t_order > t_order_ || u_order > u_order_)
        throw std::invalid_argument("BiSeries: truncated() cannot extend orders");
    BiSeries r(nvars_, t_order, u_order);
    for (int dt = 0; dt <= t_order; ++dt)
        for (int du = 0; du <= u_order; ++du) r.set_coeff(dt, du, coeff(dt, du));
    return r;
}

std::string BiSeries::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int dt = 0; dt <= t_order_; ++dt)
        for (int du = 0; du <= u_order_; ++du) {
            const MultiPoly& c = coeffs_[cell(dt, du)];
            if (c.is_zero()) continue;
            if (!first) out << "\n";
            first = false;
            out << "t^" << dt << " u^" << du << ": " << c.str();
        }
    return out.str();
}

BiSeries series_geom_inverse(const BiSeries& a) {
    if (a.coeff(0, 0) != MultiPoly::constant(a.nvars(), Rational(1)))
        throw std::invalid_argument("series_geom_inverse: constant term must be 1");
    BiSeries one = BiSeries::constant(a.nvars(), a.t_order(), a.u_order(), ZPoly(1));
    BiSeries r = one - a;
    // Horner form of 1 + r + r^2 + ...; r has no constant term, so the sum
    // stabilizes after t_order + u_order steps.
    BiSeries inv = one;
    for (int s = 0; s < a.t_order() + a.u_order(); ++s) inv = inv * r + one;
    return inv;
}

}  // namespace waring
