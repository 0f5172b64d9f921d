#include "heightlab/rational.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace heightlab {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        Int num(digits);
        Int den(1);
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return make_rat(num, den);
    }
    return Rat(Int(text));
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rat& q) { return sgn(q); }

bool is_perfect_square(const Int& z) {
    if (z < 0) return false;
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

Int isqrt_floor(const Int& z) {
    if (z < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

std::pair<Rat, Rat> sqrt_bounds(const Rat& q, unsigned prec_bits) {
    if (q < 0) throw std::invalid_argument("sqrt_bounds: negative argument");
    if (q == 0) return {Rat(0), Rat(0)};
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^k so the integer sqrt carries
    // prec_bits of the answer.
    Int n = q.get_num(), d = q.get_den();
    Int nd = n * d;
    Int scaled = nd << (2 * prec_bits);
    Int s = isqrt_floor(scaled);
    Int den = d << prec_bits;
    Rat lo = make_rat(s, den);
    Rat hi = make_rat(s + 1, den);
    return {lo, hi};
}

Rat rat_from_double(double x) {
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

namespace {
double directed(const Rat& q, mpfr_rnd_t rnd) {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_q(t, q.get_mpq_t(), rnd);
    double r = mpfr_get_d(t, rnd);
    mpfr_clear(t);
    return r;
}
}  // namespace

double double_below(const Rat& q) { return directed(q, MPFR_RNDD); }
double double_above(const Rat& q) { return directed(q, MPFR_RNDU); }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

bool is_squarefree_int(long long d) {
    if (d == 0) return false;
    long long n = d < 0 ? -d : d;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

}  // namespace heightlab
