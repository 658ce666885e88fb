#include "waring/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace waring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (parts_[r] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (r > 0 && parts_[r] > parts_[r - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_string(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("Partition: unbalanced brackets");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::string piece;
    std::istringstream in(body);
    while (std::getline(in, piece, ',')) {
        if (piece.empty()) throw std::invalid_argument("Partition: empty part");
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw std::invalid_argument("Partition: bad part '" + piece + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

bool Partition::operator<(const Partition& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return parts_ > o.parts_;  // reverse-lexicographic within a weight
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (r) out << ",";
        out << parts_[r];
    }
    out << "]";
    return out.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        acc.push_back(first);
        gen_partitions(n - first, first, acc, out);
        acc.pop_back();
    }
}

// Composition sum over (k_1,...,k_l), all k_r >= 1, of prod C(mu_r, k_r).
mpz_class binom_by_compositions(const std::vector<int>& parts, std::size_t row, long remaining) {
    std::size_t rows_left = parts.size() - row;
    if (rows_left == 0) return remaining == 0 ? 1 : 0;
    mpz_class total = 0;
    long hi = std::min<long>(parts[row], remaining - static_cast<long>(rows_left) + 1);
    for (long take = 1; take <= hi; ++take) {
        mpz_class choose;
        mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(parts[row]),
                     static_cast<unsigned long>(take));
        total += choose * binom_by_compositions(parts, row + 1, remaining - take);
    }
    return total;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

mpz_class z_of(const Partition& mu) {
    mpz_class z = 1;
    for (const auto& [part, mult] : mu.multiplicities()) {
        mpz_class pw, fact;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(mult));
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(mult));
        z *= pw * fact;
    }
    return z;
}

mpz_class lassalle_binom(const Partition& mu, long k) {
    if (mu.empty()) return k == 0 ? 1 : 0;
    if (k < mu.length() || k > mu.weight()) return 0;
    if (k <= 12) return binom_by_compositions(mu.parts(), 0, k);
    // The product generating function scales better for large k.
    return lassalle_binom_genfun(mu, mu.weight()).coeff(static_cast<int>(k)).num();
}

ZPoly lassalle_binom_genfun(const Partition& mu, int q_order) {
    if (q_order < mu.weight())
        throw std::invalid_argument("lassalle_binom_genfun: q_order below |mu|");
    ZPoly prod{Rational(1)};
    for (const auto& [part, mult] : mu.multiplicities()) {
        // (1+q)^part - 1
        std::vector<Rational> coeffs(static_cast<std::size_t>(part) + 1);
        for (int s = 1; s <= part; ++s) coeffs[static_cast<std::size_t>(s)] = binom_int(part, s);
        prod *= ZPoly::from_coeffs(std::move(coeffs)).pow(static_cast<unsigned>(mult));
    }
    return prod;
}

FerrersAlphabet ferrers_alphabet(const Partition& lambda, const Rational& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("ferrers_alphabet: alpha must be nonzero");
    FerrersAlphabet z;
    z.alpha = alpha;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 1; j <= parts[i]; ++j)
            z.values.push_back(Rational(j - 1) - Rational(static_cast<long>(i)) / alpha);
    std::sort(z.values.begin(), z.values.end());
    return z;
}

Rational power_sum(const FerrersAlphabet& z, int n) {
    if (n < 1) throw std::invalid_argument("power_sum: exponent must be >= 1");
    Rational total(0);
    for (const auto& c : z.values) {
        Rational pw(1);
        for (int s = 0; s < n; ++s) pw *= c;
        total += pw;
    }
    return total;
}

Rational power_sum(const FerrersAlphabet& z, const Partition& mu) {
    Rational prod(1);
    for (int part : mu.parts()) prod *= power_sum(z, part);
    return prod;
}

namespace {

template <typename T>
T pochhammer_impl(const T& x, const Partition& lambda, const Rational& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("pochhammer: alpha must be nonzero");
    T acc{Rational(1)};
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 1; j <= parts[i]; ++j)
            acc *= x + T(Rational(j - 1) - Rational(static_cast<long>(i)) / alpha);
    return acc;
}

}  // namespace

Rational pochhammer(const Rational& x, const Partition& lambda, const Rational& alpha) {
    return pochhammer_impl(x, lambda, alpha);
}

ZPoly pochhammer(const ZPoly& x, const Partition& lambda, const Rational& alpha) {
    return pochhammer_impl(x, lambda, alpha);
}

}  // namespace waring
