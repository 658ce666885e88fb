#include "waring/rational.hpp"

namespace waring {

Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(text), mpz_class(1));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return Rational(num, den);
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binom_int(const mpz_class& n, long k) {
    if (k < 0) return Rational(0);
    mpz_class b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational binom_int(long n, long k) { return binom_int(mpz_class(n), k); }

Rational rising_factorial(const Rational& x, unsigned long n) {
    Rational acc(1);
    for (unsigned long s = 0; s < n; ++s) acc *= x + Rational(static_cast<long>(s));
    return acc;
}

}  // namespace waring
