#pragma once

#include <mpfr.h>

#include <string>

#include "heightlab/rational.hpp"

namespace heightlab {

// Certified enclosure of a real value, reported as a double pair.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Interval with MPFR endpoints and outward rounding. Working type behind
// every transcendental enclosure; convert to Enclosure for reports.
class Ival {
public:
    explicit Ival(mpfr_prec_t prec = 128);
    Ival(const Ival& other);
    Ival(Ival&& other) noexcept;
    Ival& operator=(Ival other);
    ~Ival();

    static Ival from_rat(const Rat& q, mpfr_prec_t prec = 128);
    static Ival from_rat_bounds(const Rat& lo, const Rat& hi, mpfr_prec_t prec = 128);
    static Ival point(double x, mpfr_prec_t prec = 128);

    mpfr_prec_t prec() const { return prec_; }
    double lo_d() const;  // rounded down
    double hi_d() const;  // rounded up
    Enclosure enclosure() const { return {lo_d(), hi_d()}; }

    bool strictly_positive() const;
    bool strictly_above(const Rat& q) const;   // lo > q
    bool strictly_below(const Rat& q) const;   // hi < q
    bool contains_rat(const Rat& q) const;
    bool overlaps(const Ival& other) const;

    friend Ival operator+(const Ival& a, const Ival& b);
    friend Ival operator-(const Ival& a, const Ival& b);
    friend Ival operator*(const Ival& a, const Ival& b);
    friend Ival operator/(const Ival& a, const Ival& b);  // b must exclude 0

    Ival add_rat(const Rat& q) const;
    Ival mul_rat(const Rat& q) const;
    Ival halve() const;  // exact

    friend Ival sqrt(const Ival& a);        // a >= 0
    friend Ival log(const Ival& a);         // a > 0
    friend Ival log1p(const Ival& a);       // a > -1
    friend Ival exp2_rat(const Rat& t, mpfr_prec_t prec);  // 2^t

    std::string to_string(int digits = 20) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

// 2^t for an exact rational exponent.
Ival exp2_rat(const Rat& t, mpfr_prec_t prec);

// log of an exact positive rational.
Ival log_rat(const Rat& q, mpfr_prec_t prec = 128);

}  // namespace heightlab
