#include "heightlab/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "heightlab/exactpoly.hpp"

namespace heightlab {

QuadCoeff qc_add(const QuadCoeff& x, const QuadCoeff& y) { return {x.a + y.a, x.b + y.b}; }

QuadCoeff qc_sub(const QuadCoeff& x, const QuadCoeff& y) { return {x.a - y.a, x.b - y.b}; }

QuadCoeff qc_mul(const QuadCoeff& x, const QuadCoeff& y, long long d) {
    return {x.a * y.a + x.b * y.b * Rat(static_cast<long>(d)), x.a * y.b + x.b * y.a};
}

QuadCoeff qc_div(const QuadCoeff& x, const QuadCoeff& y, long long d) {
    if (y.is_zero()) throw std::invalid_argument("qc_div: division by zero");
    // 1/(a+b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d); the norm is nonzero
    // because sqrt(d) is irrational.
    Rat norm = y.a * y.a - y.b * y.b * Rat(static_cast<long>(d));
    QuadCoeff num = qc_mul(x, qc_conj(y), d);
    return {num.a / norm, num.b / norm};
}

QuadCoeff qc_conj(const QuadCoeff& x) { return {x.a, -x.b}; }

int qc_sign(const QuadCoeff& x, long long d) {
    const int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    Rat a2 = x.a * x.a;
    Rat b2d = x.b * x.b * Rat(static_cast<long>(d));
    const int cmp = a2 > b2d ? 1 : (a2 < b2d ? -1 : 0);
    if (cmp == 0) throw std::logic_error("qc_sign: sqrt(d) rational?");
    return cmp > 0 ? sa : sb;
}

QuadPoly::QuadPoly(long long d, std::vector<QuadCoeff> coeffs) : d_(d), c_(std::move(coeffs)) {
    trim();
}

void QuadPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QuadPoly QuadPoly::from_int_poly(const IntPoly& f, long long d) {
    std::vector<QuadCoeff> c(f.coeffs().size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = {Rat(f.coeffs()[k]), Rat(0)};
    return QuadPoly(d, std::move(c));
}

const QuadCoeff& QuadPoly::coeff(int k) const {
    static const QuadCoeff zero{Rat(0), Rat(0)};
    if (k < 0 || k > degree()) return zero;
    return c_[static_cast<size_t>(k)];
}

const QuadCoeff& QuadPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("QuadPoly::leading: zero polynomial");
    return c_.back();
}

QuadPoly QuadPoly::derivative() const {
    if (degree() < 1) return QuadPoly(d_, {});
    std::vector<QuadCoeff> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        r[k - 1] = {Rat(static_cast<long>(k)) * c_[k].a, Rat(static_cast<long>(k)) * c_[k].b};
    return QuadPoly(d_, std::move(r));
}

QuadPoly QuadPoly::conj() const {
    std::vector<QuadCoeff> r(c_);
    for (QuadCoeff& x : r) x = qc_conj(x);
    return QuadPoly(d_, std::move(r));
}

QuadPoly QuadPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("QuadPoly::monic: zero polynomial");
    std::vector<QuadCoeff> r(c_);
    const QuadCoeff lead = c_.back();
    for (QuadCoeff& x : r) x = qc_div(x, lead, d_);
    return QuadPoly(d_, std::move(r));
}

QuadCoeff QuadPoly::eval(const Rat& x) const {
    QuadCoeff acc{Rat(0), Rat(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = {acc.a * x + it->a, acc.b * x + it->b};
    }
    return acc;
}

QuadPoly operator*(const QuadPoly& x, const QuadPoly& y) {
    if (x.d_ != y.d_) throw std::invalid_argument("QuadPoly mul: field mismatch");
    if (x.is_zero() || y.is_zero()) return QuadPoly(x.d_, {});
    std::vector<QuadCoeff> r(x.c_.size() + y.c_.size() - 1, QuadCoeff{Rat(0), Rat(0)});
    for (size_t i = 0; i < x.c_.size(); ++i)
        for (size_t j = 0; j < y.c_.size(); ++j)
            r[i + j] = qc_add(r[i + j], qc_mul(x.c_[i], y.c_[j], x.d_));
    return QuadPoly(x.d_, std::move(r));
}

bool operator==(const QuadPoly& x, const QuadPoly& y) { return x.d_ == y.d_ && x.c_ == y.c_; }

QuadPoly QuadPoly::rem(const QuadPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("QuadPoly::rem: zero divisor");
    std::vector<QuadCoeff> a(c_);
    const auto& b = divisor.c_;
    while (a.size() >= b.size() && !a.empty()) {
        QuadCoeff q = qc_div(a.back(), b.back(), d_);
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k)
            a[shift + k] = qc_sub(a[shift + k], qc_mul(q, b[k], d_));
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return QuadPoly(d_, std::move(a));
}

std::optional<QuadPoly> QuadPoly::divide_exact_by(const QuadPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("QuadPoly: division by zero");
    if (is_zero()) return QuadPoly(d_, {});
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<QuadCoeff> a(c_);
    const auto& b = divisor.c_;
    std::vector<QuadCoeff> q(a.size() - b.size() + 1, QuadCoeff{Rat(0), Rat(0)});
    while (a.size() >= b.size() && !a.empty()) {
        QuadCoeff cq = qc_div(a.back(), b.back(), d_);
        size_t shift = a.size() - b.size();
        q[shift] = cq;
        for (size_t k = 0; k < b.size(); ++k)
            a[shift + k] = qc_sub(a[shift + k], qc_mul(cq, b[k], d_));
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    if (!a.empty()) return std::nullopt;
    return QuadPoly(d_, std::move(q));
}

namespace {

std::string qc_to_string(const QuadCoeff& x, long long d) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.a != 0) out += to_string(x.a);
    if (x.b != 0) {
        if (!out.empty()) out += (sgn(x.b) > 0) ? " + " : " - ";
        else if (sgn(x.b) < 0) out += "-";
        Rat ab = abs(x.b);
        if (ab != 1) out += to_string(ab) + "*";
        out += "sqrt(" + std::to_string(d) + ")";
    }
    return out;
}

}  // namespace

std::string QuadPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const QuadCoeff& x = coeff(k);
        if (x.is_zero()) continue;
        std::string term;
        const bool pure_rational = x.is_rational();
        const bool pure_surd = (x.a == 0);
        std::string body = qc_to_string(x, d_);
        bool negated = false;
        if ((pure_rational && sgn(x.a) < 0) || (pure_surd && sgn(x.b) < 0)) {
            negated = true;
            body = qc_to_string({-x.a, -x.b}, d_);
        }
        if (!out.empty()) out += negated ? " - " : " + ";
        else if (negated) out += "-";
        const bool need_parens = (x.a != 0 && x.b != 0);
        if (k == 0) {
            term = body;
        } else {
            if (body == "1") term = "";
            else term = (need_parens ? "(" + body + ")" : body) + "*";
            term += "x";
            if (k > 1) term += "^" + std::to_string(k);
        }
        out += term;
    }
    return out;
}

int quad_real_root_count(const QuadPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("quad_real_root_count: zero polynomial");
    if (g.degree() == 0) return 0;
    const long long d = g.field_d();
    // Sturm chain over K = Q(sqrt(d)) subset of R, evaluated at +-infinity.
    std::vector<QuadPoly> chain{g, g.derivative()};
    while (chain.back().degree() >= 1) {
        QuadPoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero()) {
            if (chain.back().degree() >= 1)
                throw std::invalid_argument("quad_real_root_count: polynomial not squarefree over K");
            break;
        }
        // negate
        std::vector<QuadCoeff> neg;
        for (int k = 0; k <= r.degree(); ++k) neg.push_back({-r.coeff(k).a, -r.coeff(k).b});
        chain.emplace_back(d, std::move(neg));
    }
    auto variations_at_inf = [&](int dir) {
        int count = 0, lastsign = 0;
        for (const QuadPoly& p : chain) {
            if (p.is_zero()) continue;
            int s = qc_sign(p.leading(), d);
            if (dir < 0 && p.degree() % 2 != 0) s = -s;
            if (s == 0) continue;
            if (lastsign != 0 && s != lastsign) ++count;
            lastsign = s;
        }
        return count;
    };
    return variations_at_inf(-1) - variations_at_inf(+1);
}

// ---------------------------------------------------------------------------
// Factorization over Q(sqrt(d)).

namespace {

// Best rational approximation with denominator <= bound via continued
// fractions; requires the approximation to actually be close.
std::optional<Rat> reconstruct_rational(const Rat& v, const Int& den_bound, const Rat& tol) {
    if (v.get_den() <= den_bound) return v;
    Int p0(1), q0(0);
    Int floor_v;
    mpz_fdiv_q(floor_v.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    Int p1 = floor_v;
    Int q1(1);
    Rat frac = v - Rat(p1);
    Rat best = Rat(p1);
    while (frac != 0) {
        Rat inv = Rat(1) / frac;
        Int a = inv.get_num() / inv.get_den();  // floor for positive inv
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > den_bound) break;
        best = make_rat(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = inv - Rat(a);
    }
    if (abs(best - v) <= tol) return best;
    return std::nullopt;
}

struct SubsetScan {
    std::vector<std::complex<double>> roots;
    Perm pairing;

    bool conj_closed(const std::vector<int>& subset) const {
        std::vector<char> in(roots.size(), 0);
        for (int i : subset) in[static_cast<size_t>(i)] = 1;
        for (int i : subset)
            if (!in[static_cast<size_t>(pairing(i))]) return false;
        return true;
    }

    // coefficients of prod_{i in subset} (x - z_i), ascending, degree = |subset|
    std::vector<std::complex<double>> subset_product(const std::vector<int>& subset) const {
        std::vector<std::complex<double>> c{1.0};
        for (int i : subset) {
            c.push_back(0.0);
            for (size_t t = c.size() - 1; t > 0; --t) c[t] = c[t - 1] - roots[static_cast<size_t>(i)] * c[t];
            c[0] = -roots[static_cast<size_t>(i)] * c[0];
        }
        return c;
    }
};

std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < pool.size(); ++i) {
            if (pool.size() - i < static_cast<size_t>(size) - cur.size()) break;
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

QuadFactorization quadratic_field_factor(const IntPoly& f, long long d, const QuadFactorOptions& opt) {
    if (d < 2 || !is_squarefree_int(d))
        throw std::invalid_argument("quadratic_field_factor: d must be a squarefree integer >= 2");
    IntPoly u = normalize(f);
    if (u.degree() < 1) throw std::invalid_argument("quadratic_field_factor: degree must be >= 1");
    if (poly_gcd(u, u.derivative()).degree() > 0)
        throw std::invalid_argument("quadratic_field_factor: input must be squarefree");

    QuadFactorization result;
    result.d = d;
    result.lead = Rat(f.leading());  // f = lc(f) * prod of monic factors

    // Root at zero peels off as the exact factor x.
    IntPoly body = u;
    bool zero_root = false;
    if (u.coeff(0) == 0) {
        zero_root = true;
        std::vector<Int> shifted(u.coeffs().begin() + 1, u.coeffs().end());
        body = IntPoly(std::move(shifted));
    }

    result.bag = isolate_roots(u, opt.roots);

    if (zero_root) {
        QuadFactor x_factor;
        x_factor.poly = QuadPoly(d, {QuadCoeff{Rat(0), Rat(0)}, QuadCoeff{Rat(1), Rat(0)}});
        x_factor.root_indices = {0};
        result.factors.push_back(std::move(x_factor));
    }
    if (body.degree() == 0) return result;

    SubsetScan scan;
    scan.pairing = conjugation_pairing(result.bag);
    const int offset = zero_root ? 1 : 0;
    for (size_t i = static_cast<size_t>(offset); i < result.bag.roots.size(); ++i)
        scan.roots.emplace_back(result.bag.roots[i].re, result.bag.roots[i].im);
    // re-index pairing onto the body roots
    {
        std::vector<int> img;
        for (size_t i = static_cast<size_t>(offset); i < result.bag.roots.size(); ++i)
            img.push_back(result.bag.roots[i].partner - offset);
        scan.pairing = Perm(std::move(img));
    }

    const double sqrt_d = std::sqrt(static_cast<double>(d));
    const Rat tol = make_rat(1, Int(1000000));  // reconstruction tolerance 1e-6
    QuadPoly quotient = QuadPoly::from_int_poly(body, d).monic();
    std::vector<int> remaining(scan.roots.size());
    for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = static_cast<int>(i);

    // Coefficients of a true monic factor of degree m lie in (1/(2 lc^m)) O_K;
    // when the configured bound is below that, a failed reconstruction may
    // have missed a real factor and "irreducible" would be unsound.
    bool bound_limited = false;
    auto theory_bound = [&](int m) {
        Int b(2);
        for (int i = 0; i < m; ++i) b *= abs(u.leading());
        return b;
    };

    while (!remaining.empty()) {
        const int pivot = remaining.front();
        bool found = false;
        for (int m = 1; m <= static_cast<int>(remaining.size()) && !found; ++m) {
            if (m == static_cast<int>(remaining.size())) {
                if (bound_limited)
                    throw reconstruction_inconclusive(
                        "quadratic_field_factor: denominator bound " +
                        to_string(opt.denominator_bound) +
                        " is below the factor-coefficient bound; inconclusive (not a proof of "
                        "irreducibility)");
                // The quotient itself is the minimal polynomial of the pivot.
                QuadFactor qf;
                qf.poly = quotient;
                for (int i : remaining) qf.root_indices.push_back(i + offset);
                result.factors.push_back(std::move(qf));
                remaining.clear();
                found = true;
                break;
            }
            std::vector<int> pool(remaining.begin() + 1, remaining.end());
            for (auto& rest : subsets_of(pool, m - 1)) {
                std::vector<int> s{pivot};
                s.insert(s.end(), rest.begin(), rest.end());
                if (!scan.conj_closed(s)) continue;
                auto cs = scan.subset_product(s);
                // candidate conjugate subsets: disjoint from s, same size, conj-closed
                std::vector<int> others;
                for (int i : remaining)
                    if (std::find(s.begin(), s.end(), i) == s.end()) others.push_back(i);
                std::vector<std::vector<int>> t_candidates{s};  // T = S covers rational factors
                for (auto& t : subsets_of(others, m))
                    if (scan.conj_closed(t)) t_candidates.push_back(t);
                for (auto& t : t_candidates) {
                    auto ct = (t == s) ? cs : scan.subset_product(t);
                    std::vector<QuadCoeff> coeffs(static_cast<size_t>(m) + 1);
                    bool ok = true;
                    for (int k = 0; k <= m && ok; ++k) {
                        const auto vs = cs[static_cast<size_t>(k)];
                        const auto vt = ct[static_cast<size_t>(k)];
                        if (std::abs(vs.imag()) > 1e-7 || std::abs(vt.imag()) > 1e-7) {
                            ok = false;
                            break;
                        }
                        double va = 0.5 * (vs.real() + vt.real());
                        double vb = 0.5 * (vs.real() - vt.real()) / sqrt_d;
                        auto ra = reconstruct_rational(rat_from_double(va), opt.denominator_bound, tol);
                        auto rb = reconstruct_rational(rat_from_double(vb), opt.denominator_bound, tol);
                        if (!ra || !rb) {
                            if (opt.denominator_bound < theory_bound(m)) bound_limited = true;
                            ok = false;
                            break;
                        }
                        coeffs[static_cast<size_t>(k)] = {*ra, *rb};
                    }
                    if (!ok) continue;
                    coeffs.back() = {Rat(1), Rat(0)};  // monic by construction
                    QuadPoly candidate(d, std::move(coeffs));
                    if (candidate.degree() != m) continue;
                    auto next = quotient.divide_exact_by(candidate);
                    if (!next) continue;
                    QuadFactor qf;
                    qf.poly = candidate;
                    for (int i : s) qf.root_indices.push_back(i + offset);
                    result.factors.push_back(std::move(qf));
                    quotient = *next;
                    std::vector<int> rest_idx;
                    for (int i : remaining)
                        if (std::find(s.begin(), s.end(), i) == s.end()) rest_idx.push_back(i);
                    remaining = std::move(rest_idx);
                    found = true;
                    break;
                }
                if (found) break;
            }
        }
    }

    // Mandatory post-verification: lead * prod factors == f exactly.
    QuadPoly product(d, {QuadCoeff{result.lead, Rat(0)}});
    for (const auto& qf : result.factors) product = product * qf.poly;
    if (!(product == QuadPoly::from_int_poly(f, d)))
        throw std::logic_error("quadratic_field_factor: post-verification failed");

    std::sort(result.factors.begin(), result.factors.end(), [](const QuadFactor& x, const QuadFactor& y) {
        if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
        for (int k = x.poly.degree(); k >= 0; --k) {
            const QuadCoeff& cx = x.poly.coeff(k);
            const QuadCoeff& cy = y.poly.coeff(k);
            if (cx.a != cy.a) return cx.a < cy.a;
            if (cx.b != cy.b) return cx.b < cy.b;
        }
        return false;
    });
    return result;
}

IntPoly ratio_poly(const IntPoly& f) {
    IntPoly u = normalize(f);
    const int n = u.degree();
    if (n < 1) throw std::invalid_argument("ratio_poly: degree must be >= 1");
    if (u.coeff(0) == 0) throw std::invalid_argument("ratio_poly: f(0) must be nonzero");
    // R(t) = Res_y(f(y), f(t*y)) = lc^n * prod_i f(t * alpha_i): degree n^2 in t,
    // roots all ratios alpha_j / alpha_i. Interpolated from nonzero points so
    // the Sylvester dimensions never degenerate.
    const int deg_r = n * n;
    std::vector<Rat> xs, ys;
    for (int t = 1; static_cast<int>(xs.size()) <= deg_r; ++t) {
        for (int s : {t, -t}) {
            if (static_cast<int>(xs.size()) > deg_r) break;
            std::vector<Int> scaled(u.coeffs().size());
            Int power(1);
            for (size_t k = 0; k < scaled.size(); ++k) {
                scaled[k] = u.coeffs()[k] * power;
                power *= Int(s);
            }
            xs.emplace_back(Int(s));
            ys.emplace_back(resultant(u, IntPoly(std::move(scaled))));
        }
    }
    return lagrange_interpolate_int(xs, ys);
}

bool ratio_contains_i(const IntPoly& f) {
    IntPoly u = normalize(f);
    if (u.degree() < 1) throw std::invalid_argument("ratio_contains_i: degree must be >= 1");
    if (u.coeff(0) == 0) throw std::invalid_argument("ratio_contains_i: f(0) must be nonzero");
    if (poly_gcd(u, u.derivative()).degree() > 0)
        throw std::invalid_argument("ratio_contains_i: input must be squarefree");
    const IntPoly x2p1{1, 0, 1};
    if (divide_exact(u, x2p1)) return true;  // i itself is a root
    IntPoly s = squarefree_part(ratio_poly(u));
    return divide_exact(s, x2p1).has_value();
}

}  // namespace heightlab
