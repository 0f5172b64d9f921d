#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/rational.hpp"

namespace heightlab {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored in ascending degree order. The zero polynomial is the empty
// coefficient list (degree -1); most operations reject it.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    // Parses either a comma-separated ascending coefficient list "c0,c1,...,cd"
    // or a symbolic sum of integer-coefficient monomials like "x^5+x^3+1".
    static IntPoly from_string(const std::string& text);
    static IntPoly monomial(Int c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int k) const;  // zero outside [0, degree]
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly derivative() const;
    // x^deg * f(1/x). Requires f(0) != 0 so the root set is exactly inverted.
    IntPoly reversed() const;
    Int content() const;  // gcd of coefficients, 0 for the zero polynomial

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    // Number of trailing zero coefficients, i.e. multiplicity of the root 0.
    int order_at_zero() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const Int& c, const IntPoly& p);
    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.c_ == rhs.c_; }
    friend bool operator!=(const IntPoly& lhs, const IntPoly& rhs) { return !(lhs == rhs); }

    std::string to_string() const;  // "x^5 + x^3 + 1", descending
    std::string coeff_csv() const;  // "1,0,1,0,0,1", ascending

private:
    void trim();
    std::vector<Int> c_;
};

// Primitive part with positive leading coefficient. Rejects the zero polynomial.
IntPoly normalize(const IntPoly& f);

// Primitive gcd with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

// Quotient when g divides f exactly in Z[x], nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

}  // namespace heightlab
