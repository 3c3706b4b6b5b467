#pragma once

#include <cmath>
#include <complex>

#include "spt/errors.hpp"

namespace spt {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Boundary check: no NaN/Inf escapes a public operation unannounced.
inline void require_finite(const Complex& z, const char* where) {
  if (!is_finite(z)) {
    throw NumericOverflowError(std::string(where) +
                               ": non-finite value produced");
  }
}

inline void require_finite(double x, const char* where) {
  if (!std::isfinite(x)) {
    throw NumericOverflowError(std::string(where) +
                               ": non-finite value produced");
  }
}

}  // namespace spt
