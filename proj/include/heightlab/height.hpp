#pragma once

#include <cstdint>
#include <optional>

#include "heightlab/enclosure.hpp"
#include "heightlab/exactpoly.hpp"
#include "heightlab/roots.hpp"

namespace heightlab {

// Certified enclosure of a Mahler measure or Weil height.
struct HeightReport {
    double lo = 0.0;
    double hi = 0.0;
    // Exact value of the Mahler measure when provably rational (all roots on
    // the unit circle, or linear factors only).
    std::optional<Rat> exact_log_arg;
    int degree = 0;
    std::optional<std::uint64_t> witness_prime;  // mod-p irreducibility witness
    bool irreducibility_asserted = false;        // no witness found; caller assertion recorded
};

// (degree d, real-conjugate count r, ratio R = r/d) over Q.
struct EmbeddingStats {
    int degree = 0;
    int real_count = 0;
    Rat ratio;
};

// The effective lower-bound certificate of the main theorem.
struct BoundCert {
    Rat C;                  // ratio of real conjugates to degree, in (0, 1]
    Enclosure garza_value;  // lower bound at C
    bool halved = false;    // totally imaginary case
    Enclosure final_c;
};

struct MeasureOptions {
    double eps = 1e-9;  // relative enclosure tolerance
    long prec_start = 128;
    long prec_cap = 4096;
};

// M(f) = |lc(f)| * prod max(1, |alpha_i|), with multiplicities.
HeightReport mahler_measure(const IntPoly& f, const MeasureOptions& opt = {});

// h = log(M(f)) / deg f for f the minimal polynomial; exactly 0 iff the
// roots are roots of unity or f = +-x.
HeightReport weil_height(const IntPoly& f, const MeasureOptions& opt = {});

EmbeddingStats embedding_stats(const IntPoly& f);

// (C/2) * log((2^(1-1/C) + sqrt(4^(1-1/C) + 4)) / 2) for C in (0, 1];
// strictly positive by construction.
Enclosure garza_bound(const Rat& C);
Ival garza_bound_ival(const Rat& C, mpfr_prec_t prec = 192);

BoundCert theorem_constant(const EmbeddingStats& stats, bool totally_imaginary);

// (1/2) log((1 + sqrt 5)/2), the height gap on totally real numbers off the
// unit circle.
Ival schinzel_constant(mpfr_prec_t prec = 192);

struct SchinzelCheck {
    enum class Certificate { TotallyReal, OnCircle, Asserted };
    bool satisfies = false;  // vacuously true for on-circle inputs
    bool off_circle = false;
    HeightReport height;
    Certificate certificate = Certificate::Asserted;
};

// Checks h >= (1/2)log((1+sqrt 5)/2) - tol for off-circle alpha; on-circle
// inputs are exempt. The totally-real / on-circle part of the "alpha lies
// in Q^tr(i)" hypothesis is certified when it holds; otherwise the caller
// assertion is recorded.
SchinzelCheck schinzel_gap_check(const IntPoly& f, double tol = 1e-9,
                                 const MeasureOptions& opt = {});

// Instance check of the degree-ratio chain over a real quadratic field
// K = Q(sqrt(dd)): lhs = [K:Q] R_{alpha,Q}, mid = r_{alpha,K}[K:Q]/deg f,
// rhs = R_{alpha,K} on the factor containing the designated root.
struct Eq1Chain {
    Rat lhs;
    Rat mid;
    Rat rhs;
    bool holds = false;
    int real_count_q = 0;
    int real_count_k = 0;
    int relative_degree = 0;  // [K(alpha):K]
    std::string factor;       // the designated factor over K
};

Eq1Chain eq1_chain_check(const IntPoly& f, long long dd);

}  // namespace heightlab
