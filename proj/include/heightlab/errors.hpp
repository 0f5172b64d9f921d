#pragma once

#include <stdexcept>
#include <string>

namespace heightlab {

// Raised when a certified computation runs out of precision budget before it
// can decide. Never raised in place of a wrong answer.
class indecision_error : public std::runtime_error {
public:
    explicit indecision_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by quadratic-field factorization when coefficient reconstruction
// exceeds its denominator bound. Distinct from "irreducible".
class reconstruction_inconclusive : public std::runtime_error {
public:
    explicit reconstruction_inconclusive(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heightlab
