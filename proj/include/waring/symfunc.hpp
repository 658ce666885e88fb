#pragma once

#include "waring/biseries.hpp"
#include "waring/multipoly.hpp"
#include "waring/partition.hpp"

#include <map>
#include <string>

namespace waring {

// The four classical bases: monomial, elementary, complete homogeneous,
// power sum. Basis elements are indexed by partitions; for e, h, p the
// element of index mu is the product over parts.
enum class Basis { m, e, h, p };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// Formal linear combination of basis elements of a single basis, with ZPoly
// coefficients (constant in z unless z genuinely appears). The empty
// partition indexes the constant term: m_[] = e_[] = h_[] = p_[] = 1.
class SymExpr {
  public:
    explicit SymExpr(Basis b) : basis_(b) {}
    static SymExpr atom(Basis b, const Partition& mu, const ZPoly& coeff = ZPoly(1));

    Basis basis() const { return basis_; }
    const std::map<Partition, ZPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& mu, const ZPoly& c);

    // Max |mu| over stored terms; 0 for the zero expression.
    int total_degree() const;
    SymExpr degree_slice(int d) const;

    SymExpr& operator+=(const SymExpr& o);
    SymExpr& operator-=(const SymExpr& o);
    SymExpr& operator*=(const ZPoly& s);
    SymExpr& operator*=(const Rational& s) { return *this *= ZPoly(s); }
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(SymExpr a, const ZPoly& s) { return a *= s; }
    friend SymExpr operator*(const ZPoly& s, SymExpr a) { return a *= s; }
    SymExpr operator-() const;

    bool operator==(const SymExpr&) const = default;

    std::string str() const;

  private:
    Basis basis_;
    std::map<Partition, ZPoly> terms_;
};

// Concrete expansions in x_1..x_N.
MultiPoly power_poly(int n, int nvars);                       // p_n, n >= 1
MultiPoly elementary_poly(int n, int nvars);                  // e_n, zero for n > N
MultiPoly complete_poly(int n, int nvars);                    // h_n
MultiPoly monomial_poly(const Partition& mu, int nvars);      // m_mu, needs l(mu) <= N

// The brute-force oracle: replace every basis element by its concrete
// polynomial in N variables and multiply out. With require_faithful (the
// default) N must be at least the total degree of the expression, which is
// what makes a verified identity conclusive; identity verifiers working
// t-slice by t-slice pass false and record N instead.
MultiPoly expand(const SymExpr& expr, int nvars, bool require_faithful = true);

// Classical basis changes through the power sums.
SymExpr complete_in_power(int n);     // h_n = sum_{mu |- n} p_mu / z_mu
SymExpr elementary_in_power(int n);   // e_n with the (-1)^{n-l} sign
SymExpr power_in_elementary(int n);   // p_n in e_lambda, the Waring coefficients
SymExpr power_in_homogeneous(int n);  // p_n in h_lambda

// p_k / h_k / e_k evaluated on the letters x_r/(1 - t x_r), each letter
// expanded as sum_{m>=1} t^{m-1} x_r^m, combined by the definition of the
// basis function (k-th powers / k-subsets / k-multisets), truncated at
// t_order. The result is u-free (u_order = 0).
BiSeries transformed_basis_series(Basis b, int k, int nvars, int t_order);

// sum_{j=k}^{k+t_order} t^{j-k} C(j-1,k-1) p_j(X); equals the transformed
// power sum series.
BiSeries shifted_power_series(int k, int nvars, int t_order);

}  // namespace waring
