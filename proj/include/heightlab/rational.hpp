#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace heightlab {

using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced with den > 0.
Rat make_rat(const Int& num, const Int& den);

// Accepts "a", "a/b" and plain decimal strings like "0.25".
Rat parse_rat(const std::string& text);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

int sign(const Rat& q);

bool is_perfect_square(const Int& z);

// floor(sqrt(z)) for z >= 0.
Int isqrt_floor(const Int& z);

// Rational lo <= sqrt(q) <= hi for q >= 0, with hi - lo <= 2^-prec_bits * max(1, sqrt(q)).
std::pair<Rat, Rat> sqrt_bounds(const Rat& q, unsigned prec_bits = 80);

// Exact conversions between double and Rat (every finite double is dyadic).
Rat rat_from_double(double x);
// Directed conversions: result <= q resp. >= q.
double double_below(const Rat& q);
double double_above(const Rat& q);

bool is_prime_u64(std::uint64_t n);
bool is_squarefree_int(long long d);

}  // namespace heightlab
