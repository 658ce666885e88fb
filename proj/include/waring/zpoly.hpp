#pragma once

#include "waring/rational.hpp"

#include <string>
#include <vector>

namespace waring {

// Dense univariate polynomial over Rational. The indeterminate is named z by
// default; the same type doubles as a polynomial in q, x or w where those
// letters play the role of the single variable (printing takes the name).
class ZPoly {
  public:
    ZPoly() = default;  // zero polynomial
    ZPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    ZPoly(long c) : ZPoly(Rational(c)) {}

    static ZPoly variable();
    static ZPoly from_coeffs(std::vector<Rational> ascending);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& v) const;

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o) { *this = *this * o; return *this; }
    ZPoly& operator*=(const Rational& s);

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const Rational& s) { return a *= s; }
    friend ZPoly operator*(const Rational& s, ZPoly a) { return a *= s; }
    ZPoly operator-() const;

    ZPoly pow(unsigned exponent) const;

    bool operator==(const ZPoly&) const = default;

    std::string str(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Rational> c_;  // c_[k] multiplies z^k; trailing zeros trimmed
};

// binom(z + shift, k) as a polynomial in z: prod_{s=0}^{k-1}(z + shift - s)/k!.
// Zero polynomial for k < 0; the constant 1 for k = 0.
ZPoly binom_z(long shift, long k);

}  // namespace waring
