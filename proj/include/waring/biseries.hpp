#pragma once

#include "waring/multipoly.hpp"

#include <string>
#include <vector>

namespace waring {

// Bivariate power series in t and u, truncated inclusively (t_order = d keeps
// the t^d coefficient), with MultiPoly coefficients. Arithmetic requires
// identical variable counts and truncation orders and never extends them.
// Single-variable series in t are the u_order = 0 case.
class BiSeries {
  public:
    BiSeries(int nvars, int t_order, int u_order);
    static BiSeries constant(int nvars, int t_order, int u_order, const ZPoly& c);
    static BiSeries constant(int nvars, int t_order, int u_order, const Rational& c) {
        return constant(nvars, t_order, u_order, ZPoly(c));
    }

    int nvars() const { return nvars_; }
    int t_order() const { return t_order_; }
    int u_order() const { return u_order_; }

    const MultiPoly& coeff(int dt, int du) const;
    void set_coeff(int dt, int du, MultiPoly p);
    void add_to_coeff(int dt, int du, const MultiPoly& p);

    bool is_zero() const;
    bool is_one() const;

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries& operator*=(const BiSeries& o) { *this = *this * o; return *this; }
    BiSeries& operator*=(const ZPoly& s);
    BiSeries& operator*=(const Rational& s) { return *this *= ZPoly(s); }

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(BiSeries a, const ZPoly& s) { return a *= s; }
    friend BiSeries operator*(const ZPoly& s, BiSeries a) { return a *= s; }
    friend BiSeries operator*(BiSeries a, const Rational& s) { return a *= s; }
    friend BiSeries operator*(const Rational& s, BiSeries a) { return a *= s; }
    BiSeries operator-() const;

    BiSeries pow(unsigned exponent) const;

    // Explicit truncation to lower orders.
    BiSeries truncated(int t_order, int u_order) const;

    bool operator==(const BiSeries&) const = default;

    std::string str() const;

  private:
    void check_compatible(const BiSeries& o) const;
    std::size_t cell(int dt, int du) const {
        return static_cast<std::size_t>(dt) * (u_order_ + 1) + du;
    }
    int nvars_;
    int t_order_;
    int u_order_;
    std::vector<MultiPoly> coeffs_;  // dense, (t_order+1) x (u_order+1)
};

// Multiplicative inverse of a series with constant term exactly 1, computed
// as the geometric sum of (1 - a); two-sided inverse up to truncation.
BiSeries series_geom_inverse(const BiSeries& a);

}  // namespace waring
