#include "heightlab/enclosure.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace heightlab {

Ival::Ival(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Ival::Ival(const Ival& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Ival::Ival(Ival&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Ival& Ival::operator=(Ival other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Ival::~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Ival Ival::from_rat(const Rat& q, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Ival Ival::from_rat_bounds(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::invalid_argument("from_rat_bounds: lo > hi");
    Ival r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Ival Ival::point(double x, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_d(r.lo_, x, MPFR_RNDD);
    mpfr_set_d(r.hi_, x, MPFR_RNDU);
    return r;
}

double Ival::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Ival::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

bool Ival::strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool Ival::strictly_above(const Rat& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }

bool Ival::strictly_below(const Rat& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }

bool Ival::contains_rat(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Ival::overlaps(const Ival& other) const {
    return mpfr_cmp(lo_, other.hi_) <= 0 && mpfr_cmp(other.lo_, hi_) <= 0;
}

Ival operator+(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Ival operator-(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Ival operator*(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min of the four products rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four products rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Ival operator/(const Ival& a, const Ival& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        throw std::invalid_argument("Ival division: divisor interval contains 0");
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Ival Ival::add_rat(const Rat& q) const { return *this + Ival::from_rat(q, prec_); }

Ival Ival::mul_rat(const Rat& q) const { return *this * Ival::from_rat(q, prec_); }

Ival Ival::halve() const {
    Ival r(*this);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    return r;
}

Ival sqrt(const Ival& a) {
    if (mpfr_sgn(a.lo_) < 0) throw std::invalid_argument("Ival sqrt: negative interval");
    Ival r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival log(const Ival& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw std::invalid_argument("Ival log: interval not strictly positive");
    Ival r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival log1p(const Ival& a) {
    Ival r(a.prec_);
    mpfr_log1p(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log1p(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival exp2_rat(const Rat& t, mpfr_prec_t prec) {
    // 2^t is monotone in t, so directed rounding of t composes cleanly.
    Ival te = Ival::from_rat(t, prec);
    Ival r(prec);
    mpfr_exp2(r.lo_, te.lo_, MPFR_RNDD);
    mpfr_exp2(r.hi_, te.hi_, MPFR_RNDU);
    return r;
}

Ival log_rat(const Rat& q, mpfr_prec_t prec) {
    if (sgn(q) <= 0) throw std::invalid_argument("log_rat: argument must be positive");
    return log(Ival::from_rat(q, prec));
}

std::string Ival::to_string(int digits) const {
    char* slo = nullptr;
    char* shi = nullptr;
    mpfr_asprintf(&slo, "%.*Rg", digits, lo_);
    mpfr_asprintf(&shi, "%.*Rg", digits, hi_);
    std::string out = std::string("[") + slo + ", " + shi + "]";
    mpfr_free_str(slo);
    mpfr_free_str(shi);
    return out;
}

}  // namespace heightlab
