#pragma once

#include "waring/zpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace waring {

// Graded-lexicographic term order: lower total degree first, within a degree
// the lexicographically larger exponent vector first (so x1^2 precedes x1*x2).
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial in x_1..x_N with ZPoly coefficients
// (constant in z in the common case). No zero coefficients are stored.
class MultiPoly {
  public:
    using TermMap = std::map<std::vector<int>, ZPoly, GrlexLess>;

    explicit MultiPoly(int nvars);
    static MultiPoly constant(int nvars, const ZPoly& c);
    static MultiPoly constant(int nvars, const Rational& c) { return constant(nvars, ZPoly(c)); }
    static MultiPoly variable(int nvars, int index);  // x_{index+1}, 0-based index
    static MultiPoly monomial(int nvars, std::vector<int> exps, const ZPoly& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for zero
    ZPoly coeff(const std::vector<int>& exps) const;
    const TermMap& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const ZPoly& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& operator*=(const ZPoly& s);
    MultiPoly& operator*=(const Rational& s) { return *this *= ZPoly(s); }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const ZPoly& s) { return a *= s; }
    friend MultiPoly operator*(const ZPoly& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const;

    MultiPoly pow(unsigned exponent) const;

    bool operator==(const MultiPoly&) const = default;

    std::string str() const;

    static std::string monomial_str(const std::vector<int>& exps);

  private:
    void check_compatible(const MultiPoly& o) const;
    int nvars_;
    TermMap terms_;
};

}  // namespace waring
