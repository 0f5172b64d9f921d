#include "heightlab/roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heightlab/exactpoly.hpp"

namespace heightlab {

namespace {

// ---------------------------------------------------------------------------
// Complex arithmetic over mpfr, round-to-nearest. Only the refinement loop
// uses this; all certification below is exact rational arithmetic.

struct MC {
    mpfr_t re, im;
    explicit MC(mpfr_prec_t prec) {
        mpfr_init2(re, prec);
        mpfr_init2(im, prec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    MC(const MC&) = delete;
    MC& operator=(const MC&) = delete;
    MC(MC&& o) noexcept {
        mpfr_init2(re, mpfr_get_prec(o.re));
        mpfr_init2(im, mpfr_get_prec(o.im));
        mpfr_swap(re, o.re);
        mpfr_swap(im, o.im);
    }
    ~MC() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

struct MCWork {
    mpfr_prec_t prec;
    mpfr_t t1, t2, t3, t4;
    explicit MCWork(mpfr_prec_t p) : prec(p) {
        mpfr_init2(t1, p);
        mpfr_init2(t2, p);
        mpfr_init2(t3, p);
        mpfr_init2(t4, p);
    }
    ~MCWork() {
        mpfr_clear(t1);
        mpfr_clear(t2);
        mpfr_clear(t3);
        mpfr_clear(t4);
    }
};

void mc_set(MC& r, const MC& a) {
    mpfr_set(r.re, a.re, MPFR_RNDN);
    mpfr_set(r.im, a.im, MPFR_RNDN);
}

void mc_sub(MC& r, const MC& a, const MC& b) {
    mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
}

void mc_mul(MC& r, const MC& a, const MC& b, MCWork& w) {
    mpfr_mul(w.t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(w.t2, a.im, b.im, MPFR_RNDN);
    mpfr_mul(w.t3, a.re, b.im, MPFR_RNDN);
    mpfr_mul(w.t4, a.im, b.re, MPFR_RNDN);
    mpfr_sub(r.re, w.t1, w.t2, MPFR_RNDN);
    mpfr_add(r.im, w.t3, w.t4, MPFR_RNDN);
}

void mc_div(MC& r, const MC& a, const MC& b, MCWork& w) {
    // (a * conj(b)) / |b|^2
    mpfr_mul(w.t1, b.re, b.re, MPFR_RNDN);
    mpfr_mul(w.t2, b.im, b.im, MPFR_RNDN);
    mpfr_add(w.t1, w.t1, w.t2, MPFR_RNDN);
    mpfr_mul(w.t2, a.re, b.re, MPFR_RNDN);
    mpfr_mul(w.t3, a.im, b.im, MPFR_RNDN);
    mpfr_add(w.t2, w.t2, w.t3, MPFR_RNDN);
    mpfr_mul(w.t3, a.im, b.re, MPFR_RNDN);
    mpfr_mul(w.t4, a.re, b.im, MPFR_RNDN);
    mpfr_sub(w.t3, w.t3, w.t4, MPFR_RNDN);
    mpfr_div(r.re, w.t2, w.t1, MPFR_RNDN);
    mpfr_div(r.im, w.t3, w.t1, MPFR_RNDN);
}

void mc_add_assign(MC& r, const MC& a) {
    mpfr_add(r.re, r.re, a.re, MPFR_RNDN);
    mpfr_add(r.im, r.im, a.im, MPFR_RNDN);
}

void mc_sub_assign(MC& r, const MC& a) {
    mpfr_sub(r.re, r.re, a.re, MPFR_RNDN);
    mpfr_sub(r.im, r.im, a.im, MPFR_RNDN);
}

double mc_abs_d(const MC& a) {
    double x = mpfr_get_d(a.re, MPFR_RNDN);
    double y = mpfr_get_d(a.im, MPFR_RNDN);
    return std::hypot(x, y);
}

void eval_poly_and_deriv(const IntPoly& f, const MC& z, MC& val, MC& der, MCWork& w) {
    mpfr_set_zero(val.re, 1);
    mpfr_set_zero(val.im, 1);
    mpfr_set_zero(der.re, 1);
    mpfr_set_zero(der.im, 1);
    MC tmp(w.prec);
    for (int k = f.degree(); k >= 0; --k) {
        mc_mul(tmp, der, z, w);
        mc_set(der, tmp);
        mc_add_assign(der, val);
        mc_mul(tmp, val, z, w);
        mpfr_add_z(val.re, tmp.re, f.coeff(k).get_mpz_t(), MPFR_RNDN);
        mpfr_set(val.im, tmp.im, MPFR_RNDN);
    }
}

// One Aberth-Ehrlich sweep; returns the max relative Newton correction.
double aberth_sweep(const IntPoly& f, std::vector<MC>& z, MCWork& w) {
    const int n = static_cast<int>(z.size());
    double max_rel = 0.0;
    MC val(w.prec), der(w.prec), wi(w.prec), sum(w.prec), diff(w.prec), inv(w.prec), one(w.prec),
        denom(w.prec), delta(w.prec);
    mpfr_set_ui(one.re, 1, MPFR_RNDN);
    for (int i = 0; i < n; ++i) {
        eval_poly_and_deriv(f, z[static_cast<size_t>(i)], val, der, w);
        if (mpfr_zero_p(der.re) && mpfr_zero_p(der.im)) {
            mpfr_add_d(z[static_cast<size_t>(i)].re, z[static_cast<size_t>(i)].re, 1e-3, MPFR_RNDN);
            max_rel = 1.0;
            continue;
        }
        mc_div(wi, val, der, w);
        mpfr_set_zero(sum.re, 1);
        mpfr_set_zero(sum.im, 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            mc_sub(diff, z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]);
            if (mpfr_zero_p(diff.re) && mpfr_zero_p(diff.im)) continue;
            mc_div(inv, one, diff, w);
            mc_add_assign(sum, inv);
        }
        mc_mul(denom, wi, sum, w);
        mpfr_neg(denom.re, denom.re, MPFR_RNDN);
        mpfr_neg(denom.im, denom.im, MPFR_RNDN);
        mpfr_add_ui(denom.re, denom.re, 1, MPFR_RNDN);
        mc_div(delta, wi, denom, w);
        mc_sub_assign(z[static_cast<size_t>(i)], delta);
        double rel = mc_abs_d(wi) / (1.0 + mc_abs_d(z[static_cast<size_t>(i)]));
        max_rel = std::max(max_rel, rel);
    }
    return max_rel;
}

std::vector<MC> initial_points(const IntPoly& f, mpfr_prec_t prec, int attempt) {
    const int n = f.degree();
    // Fujiwara: max |root| <= 2 max_k (|a_{n-k}|/|a_n|)^(1/k)
    double radius = 0.0;
    double lc = std::abs(f.leading().get_d());
    for (int k = 0; k < n; ++k) {
        double c = std::abs(f.coeff(k).get_d());
        if (!std::isfinite(c) || lc <= 0) continue;
        radius = std::max(radius, std::pow(c / lc, 1.0 / (n - k)));
    }
    radius = std::min(2.0 * radius + 0.5, 1e12);
    if (!std::isfinite(radius) || radius <= 0) radius = 1e12;
    std::vector<MC> z;
    z.reserve(static_cast<size_t>(n));
    const double offset = 0.41592 + 0.7431 * attempt;
    for (int i = 0; i < n; ++i) {
        double theta = 2.0 * M_PI * i / n + offset;
        MC c(prec);
        mpfr_set_d(c.re, radius * std::cos(theta), MPFR_RNDN);
        mpfr_set_d(c.im, radius * std::sin(theta), MPFR_RNDN);
        z.push_back(std::move(c));
    }
    return z;
}

// ---------------------------------------------------------------------------
// Exact certification at dyadic (double) centers.

struct GaussRat {
    Rat re, im;
};

GaussRat gr_sub(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }

GaussRat gr_mul(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Rat gr_norm2(const GaussRat& a) { return a.re * a.re + a.im * a.im; }

GaussRat eval_gauss(const IntPoly& f, const GaussRat& z) {
    GaussRat acc{Rat(0), Rat(0)};
    for (int k = f.degree(); k >= 0; --k) {
        acc = gr_mul(acc, z);
        acc.re += Rat(f.coeff(k));
    }
    return acc;
}

struct CertifiedDisk {
    double re = 0.0, im = 0.0, radius = 0.0;
    int partner = -1;
    Rat rradius;  // stored double radius as an exact rational
};

// Weierstrass inclusion at exact dyadic centers: all roots of g lie in the
// union of the disks D(c_i, n*|W_i|) with W_i = g(c_i)/(lc * prod(c_i - c_j));
// pairwise disjoint disks then hold exactly one root each (homotopy from the
// node polynomial). Radii are rational upper bounds rounded up to double.
bool certify(const IntPoly& g, std::vector<CertifiedDisk>& disks, bool has_zero_root) {
    const int n = static_cast<int>(disks.size());
    std::vector<GaussRat> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] = {rat_from_double(disks[static_cast<size_t>(i)].re),
                                     rat_from_double(disks[static_cast<size_t>(i)].im)};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c[static_cast<size_t>(i)].re == c[static_cast<size_t>(j)].re &&
                c[static_cast<size_t>(i)].im == c[static_cast<size_t>(j)].im)
                return false;

    const Rat lc2 = Rat(g.leading()) * Rat(g.leading());
    for (int i = 0; i < n; ++i) {
        GaussRat val = eval_gauss(g, c[static_cast<size_t>(i)]);
        Rat num = gr_norm2(val);
        Rat den = lc2;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            den *= gr_norm2(gr_sub(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)]));
        }
        Rat w2 = num / den;
        Rat ub = sqrt_bounds(w2, 60).second * Rat(n);
        double r = double_above(ub);
        if (!(r < 1e30)) return false;
        disks[static_cast<size_t>(i)].radius = r;
        disks[static_cast<size_t>(i)].rradius = rat_from_double(r);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rat d2 = gr_norm2(gr_sub(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)]));
            Rat rs = disks[static_cast<size_t>(i)].rradius + disks[static_cast<size_t>(j)].rradius;
            if (!(d2 > rs * rs)) return false;
        }
    }
    if (has_zero_root) {
        for (int i = 0; i < n; ++i) {
            Rat d2 = gr_norm2(c[static_cast<size_t>(i)]);
            const Rat& r = disks[static_cast<size_t>(i)].rradius;
            if (!(d2 > r * r)) return false;
        }
    }
    return true;
}

// Round mpfr approximations to doubles, classify real candidates, mirror
// conjugate pairs exactly, and order deterministically by (re, |im|, im).
bool shape_disks(const std::vector<MC>& z, long prec, std::vector<CertifiedDisk>& disks) {
    struct Pt {
        double re, im;
    };
    std::vector<Pt> pts;
    pts.reserve(z.size());
    const double real_tol = std::max(std::ldexp(1.0, static_cast<int>(-(prec / 2))), 1e-300);
    for (const MC& p : z) {
        double re = mpfr_get_d(p.re, MPFR_RNDN);
        double im = mpfr_get_d(p.im, MPFR_RNDN);
        if (!std::isfinite(re) || !std::isfinite(im)) return false;
        if (std::abs(im) < real_tol * (1.0 + std::abs(re))) im = 0.0;
        pts.push_back({re, im});
    }
    std::vector<int> upper, lower;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].im > 0) upper.push_back(static_cast<int>(i));
        else if (pts[i].im < 0) lower.push_back(static_cast<int>(i));
    }
    if (upper.size() != lower.size()) return false;
    auto key = [&](int i) {
        return std::make_pair(pts[static_cast<size_t>(i)].re, std::abs(pts[static_cast<size_t>(i)].im));
    };
    std::sort(upper.begin(), upper.end(), [&](int a, int b) { return key(a) < key(b); });
    std::sort(lower.begin(), lower.end(), [&](int a, int b) { return key(a) < key(b); });
    for (size_t k = 0; k < upper.size(); ++k) {
        pts[static_cast<size_t>(lower[k])].re = pts[static_cast<size_t>(upper[k])].re;
        pts[static_cast<size_t>(lower[k])].im = -pts[static_cast<size_t>(upper[k])].im;
    }
    std::vector<int> order(pts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Pt& pa = pts[static_cast<size_t>(a)];
        const Pt& pb = pts[static_cast<size_t>(b)];
        if (pa.re != pb.re) return pa.re < pb.re;
        double aa = std::abs(pa.im), ab = std::abs(pb.im);
        if (aa != ab) return aa < ab;
        return pa.im < pb.im;
    });
    disks.assign(pts.size(), CertifiedDisk{});
    for (size_t k = 0; k < order.size(); ++k) {
        const Pt& p = pts[static_cast<size_t>(order[k])];
        disks[k].re = p.re;
        disks[k].im = p.im;
    }
    for (size_t k = 0; k < disks.size(); ++k) {
        if (disks[k].im == 0.0) {
            disks[k].partner = static_cast<int>(k);
            continue;
        }
        int mate = -1;
        for (size_t j = 0; j < disks.size(); ++j)
            if (disks[j].re == disks[k].re && disks[j].im == -disks[k].im) mate = static_cast<int>(j);
        if (mate < 0) return false;
        disks[k].partner = mate;
    }
    return true;
}

}  // namespace

IntPoly inverse_pair_transform(const IntPoly& f) {
    const int d = f.degree();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("inverse_pair_transform: need even degree >= 2");
    if (f.reversed() != f) throw std::invalid_argument("inverse_pair_transform: not palindromic");
    const int m = d / 2;
    // f/x^m = a_m + sum_{k>=1} a_{m+k} (x^k + x^-k) and x^k + x^-k = c_k(y)
    // with c_0 = 2, c_1 = y, c_{k+1} = y*c_k - c_{k-1}.
    const IntPoly y = IntPoly::monomial(Int(1), 1);
    IntPoly ck_prev{2};
    IntPoly ck = y;
    IntPoly g(std::vector<Int>{f.coeff(m)});
    for (int k = 1; k <= m; ++k) {
        if (k > 1) {
            IntPoly next = y * ck - ck_prev;
            ck_prev = ck;
            ck = next;
        }
        g += f.coeff(m + k) * ck;
    }
    return g;
}

RootBag isolate_roots(const IntPoly& f, const RootOptions& opt) {
    IntPoly u = normalize(f);
    if (u.degree() < 1) throw std::invalid_argument("isolate_roots: degree must be >= 1");
    {
        IntPoly common = poly_gcd(u, u.derivative());
        if (common.degree() > 0)
            throw std::invalid_argument(
                "isolate_roots: polynomial not squarefree; take squarefree_part first");
    }
    const int zero_mult = u.order_at_zero();
    IntPoly g = u;
    if (zero_mult > 0) {
        std::vector<Int> shifted(u.coeffs().begin() + zero_mult, u.coeffs().end());
        g = IntPoly(std::move(shifted));
    }
    const int n = g.degree();

    RootBag bag;
    bag.poly = u;
    if (n == 0) {
        bag.precision_bits = opt.prec_start;
        bag.roots.push_back({0.0, 0.0, 0.0, 0});
        return bag;
    }

    long prec = opt.prec_start;
    int attempt = 0;
    std::vector<MC> z;
    while (true) {
        MCWork w(prec);
        if (z.empty()) {
            z = initial_points(g, prec, attempt);
        } else {
            std::vector<MC> lifted;
            lifted.reserve(z.size());
            for (MC& p : z) {
                MC q(prec);
                mpfr_set(q.re, p.re, MPFR_RNDN);
                mpfr_set(q.im, p.im, MPFR_RNDN);
                lifted.push_back(std::move(q));
            }
            z = std::move(lifted);
        }
        const double stop = std::max(std::ldexp(1.0, static_cast<int>(-(prec - 12))), 1e-305);
        double last = 1e300;
        int stagnant = 0;
        for (int iter = 0; iter < 1000; ++iter) {
            double m = aberth_sweep(g, z, w);
            if (m < stop) break;
            // Corrections hovering near the attainable floor mean conditioning,
            // not lack of iterations; the certifier decides from here. The
            // far-field approach phase also shrinks slowly and must not trip
            // this, hence the endgame guard.
            if (m < 1e-6 && m >= 0.9 * last) {
                if (++stagnant >= 8) break;
            } else {
                stagnant = 0;
            }
            last = std::min(last, m);
        }

        std::vector<CertifiedDisk> disks;
        const bool certified = shape_disks(z, prec, disks) && certify(g, disks, zero_mult > 0);
        const bool at_cap = prec * 2 > opt.prec_cap;

        if (certified) {
            double max_radius = 0.0;
            for (const auto& d : disks) max_radius = std::max(max_radius, d.radius);
            if (max_radius <= opt.target_radius || at_cap) {
                bag.precision_bits = prec;
                bag.roots.clear();
                int base = 0;
                if (zero_mult > 0) {
                    bag.roots.push_back({0.0, 0.0, 0.0, 0});
                    base = 1;
                }
                for (const auto& d : disks)
                    bag.roots.push_back({d.re, d.im, d.radius, d.partner + base});
                return bag;
            }
            prec *= 2;
            attempt = 0;
            continue;
        }
        if (attempt < 1) {
            ++attempt;
            z.clear();
            continue;
        }
        if (at_cap)
            throw indecision_error("isolate_roots: precision cap " + std::to_string(opt.prec_cap) +
                                   " reached before certified disjoint disks were obtained");
        attempt = 0;
        prec *= 2;
    }
}

int real_root_count_numeric(const RootBag& bag) {
    int count = 0;
    for (size_t i = 0; i < bag.roots.size(); ++i) {
        const RootDisk& d = bag.roots[i];
        if (d.partner == static_cast<int>(i)) {
            if (d.im != 0.0)
                throw indecision_error("real_root_count_numeric: self-paired disk off the real axis");
            ++count;
        } else {
            if (d.partner < 0 || d.partner >= static_cast<int>(bag.roots.size()))
                throw indecision_error("real_root_count_numeric: partner index out of range");
            const RootDisk& p = bag.roots[static_cast<size_t>(d.partner)];
            if (p.partner != static_cast<int>(i) || p.re != d.re || p.im != -d.im)
                throw indecision_error("real_root_count_numeric: inconsistent conjugate pairing");
            if (!(std::abs(d.im) > d.radius))
                throw indecision_error(
                    "real_root_count_numeric: disk touches the real axis; refine precision");
        }
    }
    return count;
}

Perm conjugation_pairing(const RootBag& bag) {
    real_root_count_numeric(bag);  // validates the pairing structure
    std::vector<int> img(bag.roots.size());
    for (size_t i = 0; i < bag.roots.size(); ++i) img[i] = bag.roots[i].partner;
    return Perm(std::move(img));
}

namespace {

std::optional<CircleVerdict::Witness> find_off_circle_witness(const IntPoly& f,
                                                              const RootOptions& opt) {
    IntPoly sf = squarefree_part(f);
    RootOptions o = opt;
    for (double target = 1e-9; target >= 1e-14; target /= 100.0) {
        o.target_radius = target;
        RootBag bag = isolate_roots(sf, o);
        for (size_t i = 0; i < bag.roots.size(); ++i) {
            const RootDisk& d = bag.roots[i];
            Rat q = rat_from_double(d.re) * rat_from_double(d.re) +
                    rat_from_double(d.im) * rat_from_double(d.im);
            auto [slo, shi] = sqrt_bounds(q, 80);
            Rat r = rat_from_double(d.radius);
            if (slo - r > 1) return CircleVerdict::Witness{static_cast<int>(i), slo - r - 1};
            if (shi + r < 1) return CircleVerdict::Witness{static_cast<int>(i), 1 - shi - r};
        }
    }
    return std::nullopt;
}

}  // namespace

CircleVerdict all_on_unit_circle(const IntPoly& f, const RootOptions& opt) {
    IntPoly u = normalize(f);
    if (u.degree() < 1) throw std::invalid_argument("all_on_unit_circle: degree must be >= 1");
    if (u.coeff(0) == 0)
        throw std::invalid_argument("all_on_unit_circle: root at 0; factor it out first");
    u = squarefree_part(u);

    const IntPoly x_minus_1{-1, 1}, x_plus_1{1, 1};
    while (u.degree() > 0 && u.eval(Int(1)) == 0) u = *divide_exact(u, x_minus_1);
    while (u.degree() > 0 && u.eval(Int(-1)) == 0) u = *divide_exact(u, x_plus_1);

    CircleVerdict verdict;
    if (u.degree() == 0) {
        verdict.on_circle = true;
        return verdict;
    }
    if (u.reversed() != u) {
        // All-on-circle forces self-inversiveness, so this is an exact "no";
        // attach a certified numeric witness disk.
        verdict.on_circle = false;
        verdict.method = CircleVerdict::Method::CertifiedNumeric;
        verdict.witness = find_off_circle_witness(f, opt);
        return verdict;
    }
    IntPoly g = inverse_pair_transform(u);
    const int in_range = sturm_count(g, RatBound::at(Rat(-2)), RatBound::at(Rat(2)));
    verdict.on_circle = (in_range == g.degree());
    if (!verdict.on_circle) verdict.witness = find_off_circle_witness(f, opt);
    return verdict;
}

}  // namespace heightlab
