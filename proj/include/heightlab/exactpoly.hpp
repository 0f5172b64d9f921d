#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heightlab/int_poly.hpp"

namespace heightlab {

inline constexpr std::uint64_t kDefaultPrimeBudget = 200;

// Multiset of irreducible-factor degrees mod p, sorted ascending.
// Entries always sum to deg f.
using DegreePattern = std::vector<int>;

// Endpoint of a real interval: a rational or +-infinity.
class RatBound {
public:
    static RatBound neg_inf() { return RatBound(-1, Rat(0)); }
    static RatBound pos_inf() { return RatBound(+1, Rat(0)); }
    static RatBound at(Rat v) { return RatBound(0, std::move(v)); }

    bool is_finite() const { return inf_ == 0; }
    int inf_sign() const { return inf_; }
    const Rat& value() const { return v_; }
    bool operator<(const RatBound& rhs) const;

private:
    RatBound(int inf, Rat v) : inf_(inf), v_(std::move(v)) {}
    int inf_;
    Rat v_;
};

// Sign convention Res(f, g) = lc(f)^{deg g} * prod g(alpha_i) over the roots
// of f; computed by fraction-free elimination on the Sylvester matrix.
Int resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f). Requires deg f >= 2.
Int discriminant(const IntPoly& f);

// Exact count of real roots in (lo, hi] of a squarefree f.
int sturm_count(const IntPoly& f, const RatBound& lo, const RatBound& hi);
int sturm_count(const IntPoly& f);  // whole real line

IntPoly squarefree_part(const IntPoly& f);

// Yun decomposition: f = sign * content * prod u_i^{e_i} with the u_i
// primitive, squarefree, pairwise coprime, positive leading coefficient.
struct SquarefreeDecomposition {
    Int content;  // signed: f = content * prod u_i^{e_i}
    std::vector<std::pair<IntPoly, int>> parts;
};
SquarefreeDecomposition squarefree_decomposition(const IntPoly& f);

// Power sums p_1..p_k of the roots (with multiplicity) via Newton-Girard.
std::vector<Rat> power_sums(const IntPoly& f, int k);

// p is usable for mod-p work iff it divides neither lc(f) nor disc(f).
bool is_good_prime(const IntPoly& f, std::uint64_t p);

DegreePattern degree_pattern_mod_p(const IntPoly& f, std::uint64_t p);

// Smallest good prime <= prime_budget with f irreducible mod p; nullopt is
// inconclusive, not a disproof.
std::optional<std::uint64_t> irreducible_witness(const IntPoly& f,
                                                 std::uint64_t prime_budget = kDefaultPrimeBudget);

// Prime q with q | a_i for all i < deg, q nmid lc, q^2 nmid a_0 (Eisenstein).
std::optional<std::uint64_t> eisenstein_witness(const IntPoly& f,
                                                std::uint64_t prime_budget = kDefaultPrimeBudget);

// For irreducible f of degree d: true iff the roots are roots of unity,
// decided by dividing x^n - 1 for the finitely many n with phi(n) = d.
bool is_root_of_unity(const IntPoly& f);

// n-th cyclotomic polynomial.
IntPoly cyclotomic(int n);

// Minimal-polynomial candidate for alpha^k: squarefree part of
// Res_y(f(y), x - y^k), normalized.
IntPoly power_min_poly(const IntPoly& f, int k);

// Exact Lagrange interpolation; the ys must describe an integer polynomial.
IntPoly lagrange_interpolate_int(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace heightlab
