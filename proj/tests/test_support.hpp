#pragma once

#include <complex>
#include <random>
#include <vector>

#include "heightlab/exactpoly.hpp"
#include "heightlab/int_poly.hpp"
#include "heightlab/roots.hpp"

// Test-only oracles, independent of the implementation paths they check.
namespace oracle {

using heightlab::Int;
using heightlab::IntPoly;
using heightlab::Rat;

inline int sign_variations(const std::vector<Int>& c) {
    int count = 0, last = 0;
    for (const Int& a : c) {
        int s = sgn(a);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// f(x+1), in place on an ascending coefficient vector.
inline void taylor_shift_1(std::vector<Int>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[static_cast<size_t>(j)] += c[static_cast<size_t>(j) + 1];
}

// Number of roots of squarefree f in the open interval (0, 1), by
// Descartes' rule with bisection (Vincent-Collins-Akritas).
inline int vca01(IntPoly f, int depth = 0) {
    if (depth > 64) throw std::runtime_error("vca01: depth exceeded");
    if (f.degree() < 1) return 0;
    // P(x) = (x+1)^n f(1/(x+1)) = reverse(f) shifted by 1
    std::vector<Int> rev(f.coeffs().rbegin(), f.coeffs().rend());
    taylor_shift_1(rev);
    const int v = sign_variations(rev);
    if (v == 0) return 0;
    if (v == 1) return 1;
    // A root exactly at the midpoint is divided out so neither half sees a
    // boundary root.
    int mid = 0;
    if (f.eval(heightlab::make_rat(Int(1), Int(2))) == 0) {
        f = *heightlab::divide_exact(f, IntPoly{-1, 2});
        mid = 1;
    }
    // split at 1/2: left half via 2^n f(x/2), right half via 2^n f((x+1)/2)
    const int n = f.degree();
    std::vector<Int> left(f.coeffs());
    for (int k = 0; k <= n; ++k) left[static_cast<size_t>(k)] <<= (n - k);
    std::vector<Int> right(left);
    taylor_shift_1(right);
    return vca01(IntPoly(std::move(left)), depth + 1) + mid +
           vca01(IntPoly(std::move(right)), depth + 1);
}

// Exact real-root count of a squarefree polynomial by Descartes bisection.
inline int descartes_real_root_count(const IntPoly& f) {
    const int n = f.degree();
    if (n <= 0) return 0;
    Int maxabs(0);
    for (int k = 0; k < n; ++k) maxabs = std::max(maxabs, Int(abs(f.coeff(k))));
    Int bound = 2 + maxabs / abs(f.leading());  // strict Cauchy bound
    // roots in (0, B) <-> roots of f(Bx) in (0, 1); same on the negative side
    std::vector<Int> pos(f.coeffs()), neg(f.coeffs());
    Int power(1);
    for (int k = 0; k <= n; ++k) {
        pos[static_cast<size_t>(k)] *= power;
        neg[static_cast<size_t>(k)] *= (k % 2 == 0) ? power : Int(-power);
        power *= bound;
    }
    int at_zero = (f.coeff(0) == 0) ? 1 : 0;
    return vca01(IntPoly(std::move(pos))) + at_zero + vca01(IntPoly(std::move(neg)));
}

// Resultant by Euclidean recursion over Q; independent of the Sylvester
// elimination route.
inline Rat resultant_euclid(const IntPoly& f, const IntPoly& g) {
    using RatVec = std::vector<Rat>;
    auto to_vec = [](const IntPoly& p) {
        RatVec v(p.coeffs().size());
        for (size_t k = 0; k < v.size(); ++k) v[k] = Rat(p.coeffs()[k]);
        return v;
    };
    auto rec = [](auto&& self, RatVec a, RatVec b) -> Rat {
        const int ma = static_cast<int>(a.size()) - 1;
        const int mb = static_cast<int>(b.size()) - 1;
        if (mb == 0) {
            Rat r(1);
            for (int i = 0; i < ma; ++i) r *= b[0];
            return r;
        }
        RatVec r(a);
        while (static_cast<int>(r.size()) - 1 >= mb && !r.empty()) {
            Rat q = r.back() / b.back();
            size_t shift = r.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k) r[shift + k] -= q * b[k];
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        if (r.empty()) return Rat(0);
        const int mr = static_cast<int>(r.size()) - 1;
        Rat lead(1);
        for (int i = 0; i < ma - mr; ++i) lead *= b.back();
        Rat sign((ma % 2 != 0 && mb % 2 != 0) ? -1 : 1);
        return sign * lead * self(self, b, r);
    };
    return rec(rec, to_vec(f), to_vec(g));
}

inline std::vector<std::complex<double>> bag_roots(const heightlab::RootBag& bag) {
    std::vector<std::complex<double>> out;
    for (const auto& d : bag.roots) out.emplace_back(d.re, d.im);
    return out;
}

// Exhaustive factor search from certified roots: sound for degree <= 10.
// Rounds subset products to integer candidates and verifies divisibility
// exactly, so a "true" answer is a proof of irreducibility given the
// certified radii.
inline bool brute_force_irreducible(const IntPoly& f) {
    IntPoly u = heightlab::normalize(f);
    const int n = u.degree();
    if (n <= 1) return true;
    if (u.coeff(0) == 0) return false;  // x divides
    heightlab::RootOptions opt;
    opt.target_radius = 1e-13;
    heightlab::RootBag bag = heightlab::isolate_roots(u, opt);
    auto roots = bag_roots(bag);
    std::vector<Int> lc_divisors;
    for (Int q(1); q <= abs(u.leading()); ++q)
        if (u.leading() % q == 0) lc_divisors.push_back(q);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<std::complex<double>> c{1.0};
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            c.push_back(0.0);
            for (size_t t = c.size() - 1; t > 0; --t) c[t] = c[t - 1] - roots[static_cast<size_t>(i)] * c[t];
            c[0] = -roots[static_cast<size_t>(i)] * c[0];
        }
        for (const Int& lc : lc_divisors) {
            std::vector<Int> cand(c.size());
            bool plausible = true;
            double lcd = lc.get_d();
            for (size_t k = 0; k < c.size() && plausible; ++k) {
                double v = c[k].real() * lcd;
                if (std::abs(c[k].imag() * lcd) > 0.25) plausible = false;
                double r = std::round(v);
                if (std::abs(v - r) > 0.25) plausible = false;
                cand[k] = Int(static_cast<long>(r));
            }
            if (!plausible) continue;
            IntPoly candidate(std::move(cand));
            if (candidate.degree() < 1) continue;
            if (heightlab::divide_exact(u, candidate)) return false;
        }
    }
    return true;
}

// Deterministic random polynomials.
struct PolyGen {
    std::mt19937_64 rng;
    explicit PolyGen(std::uint64_t seed) : rng(seed) {}

    IntPoly random_poly(int max_degree, int coeff_bound = 9) {
        std::uniform_int_distribution<int> deg_dist(1, max_degree);
        std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
        const int d = deg_dist(rng);
        std::vector<Int> c(static_cast<size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = Int(coeff(rng));
        while (c.back() == 0) c.back() = Int(coeff(rng));
        return IntPoly(std::move(c));
    }

    IntPoly random_squarefree(int max_degree, int coeff_bound = 9) {
        while (true) {
            IntPoly f = random_poly(max_degree, coeff_bound);
            if (f.degree() < 1) continue;
            if (heightlab::poly_gcd(f, f.derivative()).degree() == 0) return f;
        }
    }
};

}  // namespace oracle
