#pragma once

#include "waring/rational.hpp"
#include "waring/zpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace waring {

// Integer partition: weakly decreasing positive parts, empty = the zero
// partition. Canonical order is weight first, then reverse-lexicographic on
// the part sequences (the order partitions_of enumerates).
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    // Accepts "2,1", "[2,1]", "" and "[]".
    static Partition from_string(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;                 // |mu|
    int length() const { return static_cast<int>(parts_.size()); }  // l(mu)
    bool empty() const { return parts_.empty(); }
    int multiplicity(int part) const;   // m_i(mu)
    std::map<int, int> multiplicities() const;  // part -> m_i, nonzero entries

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const;

    std::string str() const;  // "[2,1]", "[]"

  private:
    std::vector<int> parts_;
};

// All partitions of n, each exactly once, in reverse-lexicographic order:
// (4),(3,1),(2,2),(2,1,1),(1,1,1,1). partitions_of(0) = { [] }.
std::vector<Partition> partitions_of(int n);

// z_mu = prod_i i^{m_i} m_i!; z of the empty partition is 1.
mpz_class z_of(const Partition& mu);

// Number of ways to choose k cells of the Ferrers diagram of mu with at
// least one per row, via the composition sum over (k_1,...,k_l), k_r >= 1,
// of prod C(mu_r, k_r); large k delegates to the product generating function.
mpz_class lassalle_binom(const Partition& mu, long k);

// The polynomial prod_i ((1+q)^i - 1)^{m_i(mu)}; its q^r coefficient is
// lassalle_binom(mu, r). Requires q_order >= |mu| (the exact degree).
ZPoly lassalle_binom_genfun(const Partition& mu, int q_order);

// Multiset of cell values j-1-(i-1)/alpha over the Ferrers diagram of a
// partition; repeated values are kept with multiplicity.
struct FerrersAlphabet {
    std::vector<Rational> values;  // one entry per cell, sorted
    Rational alpha;
};

FerrersAlphabet ferrers_alphabet(const Partition& lambda, const Rational& alpha);

// Power sums over the Ferrers multiset, counting multiplicity; p_mu is the
// product over parts and p of the empty partition is 1.
Rational power_sum(const FerrersAlphabet& z, int n);
Rational power_sum(const FerrersAlphabet& z, const Partition& mu);

// Generalized Pochhammer symbol (x)_lambda = prod over cells (i,j) of
// (x + j - 1 - (i-1)/alpha); reduces to the rising factorial on one-row
// partitions. alpha must be nonzero.
Rational pochhammer(const Rational& x, const Partition& lambda, const Rational& alpha);
ZPoly pochhammer(const ZPoly& x, const Partition& lambda, const Rational& alpha);

}  // namespace waring
