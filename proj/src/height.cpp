#include "heightlab/height.hpp"

#include <stdexcept>

#include "heightlab/quadfield.hpp"

namespace heightlab {

namespace {

struct RatBounds {
    Rat lo, hi;
    bool exact = false;
};

// Measure of one squarefree primitive factor with positive leading
// coefficient. Exact where the structure allows, otherwise certified
// rational bounds from root disks.
RatBounds measure_squarefree(const IntPoly& u, double eps_part, const MeasureOptions& opt) {
    IntPoly v = u;
    const int zero_mult = v.order_at_zero();
    if (zero_mult > 0) {
        std::vector<Int> shifted(v.coeffs().begin() + zero_mult, v.coeffs().end());
        v = IntPoly(std::move(shifted));
    }
    if (v.degree() == 0) return {Rat(1), Rat(1), true};
    if (v.degree() == 1) {
        Rat m(std::max(abs(v.coeff(1)), abs(v.coeff(0))));
        return {m, m, true};
    }
    RootOptions ropt{1e-12, opt.prec_start, opt.prec_cap};
    CircleVerdict circle = all_on_unit_circle(v, ropt);
    if (circle.on_circle) {
        Rat m(v.leading());
        return {m, m, true};
    }
    double target = 1e-12;
    for (int pass = 0; pass < 3; ++pass, target /= 100.0) {
        ropt.target_radius = target;
        RootBag bag = isolate_roots(v, ropt);
        Rat lo(v.leading()), hi(v.leading());
        for (const RootDisk& disk : bag.roots) {
            Rat c2 = rat_from_double(disk.re) * rat_from_double(disk.re) +
                     rat_from_double(disk.im) * rat_from_double(disk.im);
            auto [slo, shi] = sqrt_bounds(c2, 100);
            Rat r = rat_from_double(disk.radius);
            Rat term_lo = slo - r;
            Rat term_hi = shi + r;
            if (term_lo < 1) term_lo = 1;
            if (term_hi < 1) term_hi = 1;
            lo *= term_lo;
            hi *= term_hi;
        }
        if (hi - lo <= rat_from_double(eps_part) * lo) return {lo, hi, false};
    }
    throw indecision_error("mahler_measure: could not certify the requested relative tolerance");
}

RatBounds mahler_bounds(const IntPoly& f, const MeasureOptions& opt) {
    if (f.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
    SquarefreeDecomposition dec = squarefree_decomposition(f);
    Rat lo(abs(dec.content)), hi(abs(dec.content));
    bool exact = true;
    int total_degree = std::max(f.degree(), 1);
    const double eps_part = opt.eps / (2.0 * total_degree);
    for (const auto& [u, mult] : dec.parts) {
        RatBounds part = measure_squarefree(u, eps_part, opt);
        for (int e = 0; e < mult; ++e) {
            lo *= part.lo;
            hi *= part.hi;
        }
        exact = exact && part.exact;
    }
    return {lo, hi, exact};
}

}  // namespace

HeightReport mahler_measure(const IntPoly& f, const MeasureOptions& opt) {
    RatBounds bounds = mahler_bounds(f, opt);
    HeightReport report;
    report.degree = f.degree();
    report.lo = double_below(bounds.lo);
    report.hi = double_above(bounds.hi);
    if (bounds.exact) report.exact_log_arg = bounds.lo;
    return report;
}

HeightReport weil_height(const IntPoly& f, const MeasureOptions& opt) {
    IntPoly u = normalize(f);
    const int d = u.degree();
    if (d < 1) throw std::invalid_argument("weil_height: degree must be >= 1");
    if (d >= 2 && poly_gcd(u, u.derivative()).degree() > 0)
        throw std::invalid_argument("weil_height: input not squarefree, hence reducible");
    HeightReport report;
    report.degree = d;
    report.witness_prime = irreducible_witness(u);
    report.irreducibility_asserted = !report.witness_prime.has_value();

    const bool is_x = (d == 1 && u.coeff(0) == 0);
    if (is_x || is_root_of_unity(u)) {
        report.lo = report.hi = 0.0;
        report.exact_log_arg = Rat(1);
        return report;
    }
    MeasureOptions mopt = opt;
    for (int pass = 0; pass < 2; ++pass, mopt.eps /= 1000.0) {
        RatBounds m = mahler_bounds(u, mopt);
        if (m.exact) {
            Ival h = log_rat(m.lo, 192).mul_rat(make_rat(Int(1), Int(d)));
            report.lo = h.lo_d();
            report.hi = h.hi_d();
            report.exact_log_arg = m.lo;
            return report;
        }
        if (m.lo > 1) {
            Ival h = log(Ival::from_rat_bounds(m.lo, m.hi, 192)).mul_rat(make_rat(Int(1), Int(d)));
            report.lo = h.lo_d();
            report.hi = h.hi_d();
            return report;
        }
        // M must exceed 1 for an irreducible non-cyclotomic input; tighten.
    }
    throw indecision_error(
        "weil_height: Mahler enclosure straddles 1; input is either not irreducible or needs "
        "more precision");
}

EmbeddingStats embedding_stats(const IntPoly& f) {
    IntPoly u = normalize(f);
    if (u.degree() < 1) throw std::invalid_argument("embedding_stats: degree must be >= 1");
    if (u.degree() >= 2 && poly_gcd(u, u.derivative()).degree() > 0)
        throw std::invalid_argument("embedding_stats: input not squarefree, hence reducible");
    EmbeddingStats stats;
    stats.degree = u.degree();
    stats.real_count = sturm_count(u);
    stats.ratio = make_rat(Int(stats.real_count), Int(stats.degree));
    return stats;
}

Ival garza_bound_ival(const Rat& C, mpfr_prec_t prec) {
    if (sgn(C) <= 0 || C > 1)
        throw std::invalid_argument("garza_bound: C must lie in (0, 1]");
    const Rat t = Rat(1) - Rat(1) / C;  // <= 0
    Ival a = exp2_rat(t, prec);          // 2^(1-1/C)
    Ival b = exp2_rat(t + t, prec);      // 4^(1-1/C)
    Ival s = sqrt(b.add_rat(Rat(4)));
    // (a + s)/2 = 1 + (a + b/(s+2))/2, keeping full relative precision near 1
    Ival excess = (a + b / s.add_rat(Rat(2))).halve();
    Ival value = log1p(excess).mul_rat(C / Rat(2));
    if (!value.strictly_positive()) throw std::logic_error("garza_bound: positivity lost");
    return value;
}

Enclosure garza_bound(const Rat& C) { return garza_bound_ival(C).enclosure(); }

BoundCert theorem_constant(const EmbeddingStats& stats, bool totally_imaginary) {
    if (stats.real_count == 0 && !totally_imaginary)
        throw std::invalid_argument(
            "theorem_constant: no real embedding to anchor the bound (r = 0 and not flagged "
            "totally imaginary)");
    if (stats.degree < 1 || stats.real_count < 0 || stats.real_count > stats.degree ||
        stats.ratio != make_rat(Int(stats.real_count), Int(stats.degree)))
        throw std::invalid_argument("theorem_constant: inconsistent embedding statistics");
    BoundCert cert;
    cert.C = stats.ratio;
    Ival g = garza_bound_ival(cert.C);
    cert.garza_value = g.enclosure();
    cert.halved = totally_imaginary;
    cert.final_c = totally_imaginary ? g.halve().enclosure() : cert.garza_value;
    return cert;
}

Ival schinzel_constant(mpfr_prec_t prec) {
    Ival phi = sqrt(Ival::from_rat(Rat(5), prec)).add_rat(Rat(1)).halve();
    return log(phi).halve();
}

SchinzelCheck schinzel_gap_check(const IntPoly& f, double tol, const MeasureOptions& opt) {
    IntPoly u = normalize(f);
    if (u.degree() < 1) throw std::invalid_argument("schinzel_gap_check: degree must be >= 1");
    if (u.degree() == 1 && u.coeff(0) == 0)
        throw std::invalid_argument("schinzel_gap_check: alpha = 0 is excluded");
    SchinzelCheck check;
    EmbeddingStats stats = embedding_stats(u);
    RootOptions ropt{1e-12, opt.prec_start, opt.prec_cap};
    CircleVerdict circle = all_on_unit_circle(u, ropt);
    check.off_circle = !circle.on_circle;
    check.height = weil_height(u, opt);
    if (stats.real_count == stats.degree)
        check.certificate = SchinzelCheck::Certificate::TotallyReal;
    else if (circle.on_circle)
        check.certificate = SchinzelCheck::Certificate::OnCircle;
    else
        check.certificate = SchinzelCheck::Certificate::Asserted;
    if (!check.off_circle) {
        check.satisfies = true;  // exempt
    } else {
        const double bound_hi = schinzel_constant().hi_d();
        check.satisfies = check.height.lo >= bound_hi - tol;
    }
    return check;
}

Eq1Chain eq1_chain_check(const IntPoly& f, long long dd) {
    IntPoly u = normalize(f);
    EmbeddingStats stats = embedding_stats(u);
    QuadFactorization fac = quadratic_field_factor(u, dd);

    // Designated root: the largest certified-real root when one exists,
    // otherwise the first root in the bag order.
    int designated = 0;
    for (size_t i = 0; i < fac.bag.roots.size(); ++i)
        if (fac.bag.roots[i].partner == static_cast<int>(i)) designated = static_cast<int>(i);
    const QuadFactor* chosen = nullptr;
    for (const auto& qf : fac.factors)
        for (int idx : qf.root_indices)
            if (idx == designated) chosen = &qf;
    if (!chosen) throw std::logic_error("eq1_chain_check: designated root not covered by a factor");

    Eq1Chain chain;
    chain.real_count_q = stats.real_count;
    chain.real_count_k = quad_real_root_count(chosen->poly);
    chain.relative_degree = chosen->poly.degree();
    chain.factor = chosen->poly.to_string();
    const Rat deg_f(static_cast<long>(u.degree()));
    chain.lhs = Rat(2) * stats.ratio;
    chain.mid = Rat(2) * Rat(static_cast<long>(chain.real_count_k)) / deg_f;
    chain.rhs = make_rat(Int(chain.real_count_k), Int(chain.relative_degree));
    chain.holds = (chain.lhs >= chain.mid) && (chain.mid >= chain.rhs);
    return chain;
}

}  // namespace heightlab
