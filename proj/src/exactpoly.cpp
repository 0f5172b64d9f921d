#include "heightlab/exactpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace heightlab {

bool RatBound::operator<(const RatBound& rhs) const {
    if (inf_ != rhs.inf_) return inf_ < rhs.inf_;
    if (inf_ != 0) return false;
    return v_ < rhs.v_;
}

namespace {

// Fraction-free (Bareiss) determinant. Consumes the matrix.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / prev;  // exact by Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    // Sylvester matrix: n rows of f's coefficients, m rows of g's (descending).
    const size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) s[row][row + k] = f.coeff(m - k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) s[n + row][row + k] = g.coeff(n - k);
    return bareiss_det(s);
}

Int discriminant(const IntPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    const int d = f.degree();
    Int res = resultant(f, f.derivative());
    Int disc = res / f.leading();  // exact
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

namespace {

using RatVec = std::vector<Rat>;

RatVec to_rat_vec(const IntPoly& f) {
    RatVec v(f.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = Rat(f.coeffs()[k]);
    return v;
}

void trim(RatVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

RatVec rem(RatVec a, const RatVec& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
        trim(a);
    }
    return a;
}

int sign_of(const RatVec& p, const RatBound& x) {
    if (p.empty()) return 0;
    if (x.is_finite()) {
        Rat acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x.value() + *it;
        return sgn(acc);
    }
    int lead = sgn(p.back());
    if (x.inf_sign() > 0) return lead;
    return (p.size() - 1) % 2 == 0 ? lead : -lead;
}

int variations(const std::vector<RatVec>& chain, const RatBound& x) {
    int count = 0, last = 0;
    for (const RatVec& p : chain) {
        int s = sign_of(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int sturm_count(const IntPoly& f, const RatBound& lo, const RatBound& hi) {
    if (f.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_count: lo must be < hi");
    if (f.degree() == 0) return 0;
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() > 0)
        throw std::invalid_argument("sturm_count: polynomial not squarefree (gcd(f,f') = " +
                                    g.to_string() + "); take squarefree_part first");
    std::vector<RatVec> chain;
    chain.push_back(to_rat_vec(f));
    chain.push_back(to_rat_vec(f.derivative()));
    while (!chain.back().empty() && chain.back().size() > 1) {
        RatVec r = rem(chain[chain.size() - 2], chain.back());
        for (Rat& q : r) q = -q;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return variations(chain, lo) - variations(chain, hi);
}

int sturm_count(const IntPoly& f) {
    return sturm_count(f, RatBound::neg_inf(), RatBound::pos_inf());
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (f.degree() == 0) return IntPoly{1};
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return normalize(f);
    auto q = divide_exact(normalize(f), g);
    if (!q) {
        // gcd is primitive, so it divides the primitive part exactly.
        throw std::logic_error("squarefree_part: internal division failure");
    }
    return normalize(*q);
}

SquarefreeDecomposition squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition out;
    out.content = f.content();
    if (sgn(f.leading()) < 0) out.content = -out.content;
    IntPoly p = normalize(f);
    if (p.degree() == 0) return out;
    // Yun's algorithm.
    IntPoly d = p.derivative();
    IntPoly a = poly_gcd(p, d);
    IntPoly b = *divide_exact(p, a);
    IntPoly c = *divide_exact(d, a);
    int mult = 1;
    while (true) {
        IntPoly diff = c - b.derivative();
        if (diff.is_zero()) {
            if (b.degree() > 0) out.parts.emplace_back(normalize(b), mult);
            break;
        }
        IntPoly u = poly_gcd(b, diff);
        if (u.degree() > 0) out.parts.emplace_back(u, mult);
        b = *divide_exact(b, u);
        c = *divide_exact(diff, u);
        ++mult;
        if (b.degree() == 0) break;
    }
    return out;
}

std::vector<Rat> power_sums(const IntPoly& f, int k) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("power_sums: degree must be >= 1");
    if (k < 1) throw std::invalid_argument("power_sums: k must be >= 1");
    const int d = f.degree();
    const Rat lc(f.leading());
    // e_i = (-1)^i a_{d-i} / a_d
    std::vector<Rat> e(static_cast<size_t>(d) + 1, Rat(0));
    for (int i = 1; i <= d; ++i) {
        e[static_cast<size_t>(i)] = Rat(f.coeff(d - i)) / lc;
        if (i % 2 != 0) e[static_cast<size_t>(i)] = -e[static_cast<size_t>(i)];
    }
    std::vector<Rat> p(static_cast<size_t>(k) + 1, Rat(0));
    for (int j = 1; j <= k; ++j) {
        Rat acc = 0;
        for (int i = 1; i < j && i <= d; ++i) {
            Rat term = e[static_cast<size_t>(i)] * p[static_cast<size_t>(j - i)];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        if (j <= d) {
            Rat term = Rat(j) * e[static_cast<size_t>(j)];
            if (j % 2 == 0) acc -= term;
            else acc += term;
        }
        p[static_cast<size_t>(j)] = acc;
    }
    return std::vector<Rat>(p.begin() + 1, p.end());
}

// ---------------------------------------------------------------------------
// Arithmetic mod small primes.

namespace {

struct ModPoly {
    std::uint64_t p;
    std::vector<std::uint64_t> c;  // ascending, trimmed

    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
    ModPoly r{p, {}};
    r.c.resize(f.coeffs().size());
    for (size_t k = 0; k < r.c.size(); ++k) {
        Int v = f.coeffs()[k] % Int(static_cast<unsigned long>(p));
        if (v < 0) v += Int(static_cast<unsigned long>(p));
        r.c[k] = v.get_ui();
    }
    r.trim();
    return r;
}

void make_monic(ModPoly& f) {
    if (f.c.empty()) return;
    std::uint64_t inv = invmod(f.c.back(), f.p);
    for (auto& a : f.c) a = mulmod(a, inv, f.p);
}

ModPoly mod_rem(ModPoly a, const ModPoly& b) {
    // b monic
    while (!a.c.empty() && a.c.size() >= b.c.size()) {
        std::uint64_t q = a.c.back();
        size_t shift = a.c.size() - b.c.size();
        for (size_t k = 0; k < b.c.size(); ++k) {
            std::uint64_t sub = mulmod(q, b.c[k], a.p);
            a.c[shift + k] = (a.c[shift + k] + a.p - sub) % a.p;
        }
        a.trim();
    }
    return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
    if (a.c.empty() || b.c.empty()) return ModPoly{a.p, {}};
    ModPoly r{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
    r.trim();
    return r;
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
    while (!b.c.empty()) {
        make_monic(b);
        ModPoly r = mod_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

ModPoly mod_divide(const ModPoly& a, const ModPoly& b) {
    // b monic and dividing a
    ModPoly rem = a;
    ModPoly q{a.p, std::vector<std::uint64_t>(a.c.size() - b.c.size() + 1, 0)};
    while (!rem.c.empty() && rem.c.size() >= b.c.size()) {
        std::uint64_t lead = rem.c.back();
        size_t shift = rem.c.size() - b.c.size();
        q.c[shift] = lead;
        for (size_t k = 0; k < b.c.size(); ++k) {
            std::uint64_t sub = mulmod(lead, b.c[k], a.p);
            rem.c[shift + k] = (rem.c[shift + k] + a.p - sub) % a.p;
        }
        rem.trim();
    }
    q.trim();
    return q;
}

// x^(p^k) mod f accumulated by repeated Frobenius.
ModPoly frobenius_power(const ModPoly& x_poly, const ModPoly& f) {
    ModPoly r = x_poly;
    std::uint64_t e = f.p;
    // compute r^p mod f by square-and-multiply on the exponent p
    ModPoly base = r, acc{f.p, {1}};
    while (e) {
        if (e & 1) acc = mod_rem(mod_mul(acc, base), f);
        base = mod_rem(mod_mul(base, base), f);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_good_prime(const IntPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw std::invalid_argument("is_good_prime: zero polynomial");
    if (!is_prime_u64(p)) return false;
    Int pz(static_cast<unsigned long>(p));
    if (f.leading() % pz == 0) return false;
    if (f.degree() >= 2 && discriminant(f) % pz == 0) return false;
    return true;
}

namespace {

DegreePattern degree_pattern_unchecked(const IntPoly& f, std::uint64_t p) {
    ModPoly r = reduce_mod(f, p);
    make_monic(r);
    DegreePattern pattern;
    // Distinct-degree factorization; r is squarefree because p is good.
    ModPoly x{p, {0, 1}};
    ModPoly h = x;
    int k = 0;
    while (r.degree() > 0) {
        ++k;
        if (2 * k > r.degree()) {
            pattern.push_back(r.degree());
            break;
        }
        h = frobenius_power(h, r);
        // gcd(h - x, r)
        ModPoly diff = h;
        if (diff.c.size() < 2) diff.c.resize(2, 0);
        diff.c[1] = (diff.c[1] + p - 1) % p;
        diff.trim();
        ModPoly g = mod_gcd(diff, r);
        if (g.degree() > 0) {
            int count = g.degree() / k;
            for (int i = 0; i < count; ++i) pattern.push_back(k);
            r = mod_divide(r, g);
            h = mod_rem(h, r);
        }
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime_u64(p)) out.push_back(p);
    return out;
}

}  // namespace

DegreePattern degree_pattern_mod_p(const IntPoly& f, std::uint64_t p) {
    if (!is_good_prime(f, p))
        throw std::invalid_argument("degree_pattern_mod_p: " + std::to_string(p) +
                                    " divides lc(f)*disc(f) or is not prime");
    return degree_pattern_unchecked(f, p);
}

std::optional<std::uint64_t> irreducible_witness(const IntPoly& f, std::uint64_t prime_budget) {
    IntPoly g = normalize(f);
    if (g.degree() < 1) throw std::invalid_argument("irreducible_witness: degree must be >= 1");
    const int d = g.degree();
    Int bad = g.leading();
    if (d >= 2) bad *= discriminant(g);
    for (std::uint64_t p : primes_up_to(prime_budget)) {
        if (bad % Int(static_cast<unsigned long>(p)) == 0) continue;
        DegreePattern pat = degree_pattern_unchecked(g, p);
        if (pat.size() == 1 && pat[0] == d) return p;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> eisenstein_witness(const IntPoly& f, std::uint64_t prime_budget) {
    IntPoly g = normalize(f);
    if (g.degree() < 1) throw std::invalid_argument("eisenstein_witness: degree must be >= 1");
    for (std::uint64_t p : primes_up_to(prime_budget)) {
        Int pz(static_cast<unsigned long>(p));
        if (g.leading() % pz == 0) continue;
        bool all = true;
        for (int k = 0; k < g.degree(); ++k)
            if (g.coeff(k) % pz != 0) {
                all = false;
                break;
            }
        if (!all) continue;
        if (g.coeff(0) % (pz * pz) != 0) return p;
    }
    return std::nullopt;
}

namespace {

// All n with phi(n) = d; complete because phi(n) >= sqrt(n/2).
std::vector<int> inverse_phi(int d) {
    const long long bound = 2LL * d * d + 2;
    std::vector<int> phi(static_cast<size_t>(bound) + 1);
    for (long long i = 0; i <= bound; ++i) phi[static_cast<size_t>(i)] = static_cast<int>(i);
    for (long long i = 2; i <= bound; ++i) {
        if (phi[static_cast<size_t>(i)] == i) {  // prime
            for (long long j = i; j <= bound; j += i)
                phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / static_cast<int>(i);
        }
    }
    std::vector<int> out;
    for (long long n = 1; n <= bound; ++n)
        if (phi[static_cast<size_t>(n)] == d) out.push_back(static_cast<int>(n));
    return out;
}

}  // namespace

bool is_root_of_unity(const IntPoly& f) {
    IntPoly g = normalize(f);
    const int d = g.degree();
    if (d < 1) throw std::invalid_argument("is_root_of_unity: degree must be >= 1");
    if (g.leading() != 1) return false;
    if (abs(g.coeff(0)) != 1) return false;
    for (int n : inverse_phi(d)) {
        IntPoly xn1 = IntPoly::monomial(Int(1), n) - IntPoly{1};
        if (divide_exact(xn1, g)) return true;
    }
    return false;
}

IntPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    IntPoly result = IntPoly::monomial(Int(1), n) - IntPoly{1};
    for (int m = 1; m < n; ++m) {
        if (n % m != 0) continue;
        result = *divide_exact(result, cyclotomic(m));
    }
    return result;
}

IntPoly lagrange_interpolate_int(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("lagrange_interpolate_int: bad point lists");
    const size_t npts = xs.size();
    std::vector<Rat> acc(npts, Rat(0));
    for (size_t i = 0; i < npts; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < npts; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (size_t t = basis.size() - 1; t > 0; --t)
                basis[t] = basis[t - 1] - xs[j] * basis[t];
            basis[0] = -xs[j] * basis[0];
            denom *= xs[i] - xs[j];
        }
        Rat scale = ys[i] / denom;
        for (size_t t = 0; t < basis.size(); ++t) acc[t] += scale * basis[t];
    }
    std::vector<Int> z(acc.size());
    for (size_t t = 0; t < acc.size(); ++t) {
        if (acc[t].get_den() != 1)
            throw std::invalid_argument("lagrange_interpolate_int: non-integer result");
        z[t] = acc[t].get_num();
    }
    return IntPoly(std::move(z));
}

IntPoly power_min_poly(const IntPoly& f, int k) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("power_min_poly: degree must be >= 1");
    if (k < 1) throw std::invalid_argument("power_min_poly: k must be >= 1");
    const int d = f.degree();
    // g(x) = Res_y(f(y), x - y^k) has roots alpha_i^k; evaluate at d+1 points
    // and interpolate (degree d in x, leading coefficient lc(f)^k).
    std::vector<Rat> xs, ys;
    for (int t = 0; static_cast<int>(xs.size()) <= d; ++t) {
        Int point(t % 2 == 0 ? t / 2 : -(t / 2 + 1));
        IntPoly h = IntPoly(std::vector<Int>{point}) - IntPoly::monomial(Int(1), k);
        xs.emplace_back(point);
        ys.emplace_back(resultant(f, h));
    }
    IntPoly g = lagrange_interpolate_int(xs, ys);
    return squarefree_part(g);
}

}  // namespace heightlab
