#pragma once

#include <vector>

#include "heightlab/int_poly.hpp"
#include "heightlab/roots.hpp"

namespace heightlab {

// Element a + b*sqrt(d) of a real quadratic field; d is carried by QuadPoly.
struct QuadCoeff {
    Rat a;
    Rat b;

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    friend bool operator==(const QuadCoeff& x, const QuadCoeff& y) { return x.a == y.a && x.b == y.b; }
};

QuadCoeff qc_add(const QuadCoeff& x, const QuadCoeff& y);
QuadCoeff qc_sub(const QuadCoeff& x, const QuadCoeff& y);
QuadCoeff qc_mul(const QuadCoeff& x, const QuadCoeff& y, long long d);
QuadCoeff qc_div(const QuadCoeff& x, const QuadCoeff& y, long long d);
QuadCoeff qc_conj(const QuadCoeff& x);  // sqrt(d) -> -sqrt(d)
// Exact sign of a + b*sqrt(d) for squarefree d >= 2.
int qc_sign(const QuadCoeff& x, long long d);

// Polynomial over Q(sqrt(d)), ascending coefficients.
class QuadPoly {
public:
    QuadPoly() = default;
    QuadPoly(long long d, std::vector<QuadCoeff> coeffs);
    static QuadPoly from_int_poly(const IntPoly& f, long long d);

    long long field_d() const { return d_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const QuadCoeff& coeff(int k) const;
    const QuadCoeff& leading() const;

    QuadPoly derivative() const;
    QuadPoly conj() const;  // apply sqrt(d) -> -sqrt(d) to all coefficients
    QuadPoly monic() const;
    QuadCoeff eval(const Rat& x) const;

    friend QuadPoly operator*(const QuadPoly& x, const QuadPoly& y);
    friend bool operator==(const QuadPoly& x, const QuadPoly& y);

    // Remainder and exact-division (nullopt if not divisible) in K[x].
    QuadPoly rem(const QuadPoly& divisor) const;
    std::optional<QuadPoly> divide_exact_by(const QuadPoly& divisor) const;

    std::string to_string() const;  // "x^2 - sqrt(2)" style

private:
    void trim();
    long long d_ = 0;
    std::vector<QuadCoeff> c_;
};

// Exact count of real roots of a squarefree g over Q(sqrt(d)) via a Sturm
// chain with exact quadratic-irrational sign evaluation.
int quad_real_root_count(const QuadPoly& g);

struct QuadFactor {
    QuadPoly poly;                  // monic irreducible over Q(sqrt(d))
    std::vector<int> root_indices;  // indices into the returned bag
};

struct QuadFactorization {
    long long d = 0;
    Rat lead;  // f = lead * prod factors
    std::vector<QuadFactor> factors;
    RootBag bag;

    bool is_trivial() const { return factors.size() == 1; }
};

struct QuadFactorOptions {
    Int denominator_bound = Int(1000000);
    RootOptions roots;
};

// Factorization of squarefree primitive f into monic irreducibles over the
// real quadratic field Q(sqrt(d)), d squarefree >= 2. Root subsets are
// grouped numerically, coefficients reconstructed as a + b*sqrt(d) and the
// factorization verified by exact multiplication before it is returned.
QuadFactorization quadratic_field_factor(const IntPoly& f, long long d,
                                         const QuadFactorOptions& opt = {});

// Polynomial whose roots are all ratios alpha_i/alpha_j of roots of f.
IntPoly ratio_poly(const IntPoly& f);

// True iff i is a root ratio of f (or a root of f itself): a sufficient
// witness that i lies in the splitting field.
bool ratio_contains_i(const IntPoly& f);

}  // namespace heightlab
