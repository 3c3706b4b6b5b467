#pragma once

#include <cmath>
#include <stdexcept>

namespace spt {

// Constant electric field along x^3 plus the probe's charge and mass.
// Everything downstream depends on the field only through a = e*E and the
// dimensionless strength chi = e*E/m^2.
class FieldConfig {
 public:
  FieldConfig(double charge, double field, double mass)
      : e_(charge), E_(field), m_(mass) {
    if (!(e_ > 0.0) || !std::isfinite(e_)) {
      throw std::invalid_argument("FieldConfig: charge must be positive");
    }
    if (!(E_ >= 0.0) || !std::isfinite(E_)) {
      throw std::invalid_argument("FieldConfig: field must be >= 0");
    }
    if (!(m_ > 0.0) || !std::isfinite(m_)) {
      throw std::invalid_argument("FieldConfig: mass must be positive");
    }
  }

  static FieldConfig from_chi(double chi, double mass) {
    if (!(chi >= 0.0) || !std::isfinite(chi)) {
      throw std::invalid_argument("FieldConfig: chi must be >= 0");
    }
    return FieldConfig(1.0, chi * mass * mass, mass);
  }

  double charge() const { return e_; }
  double field() const { return E_; }
  double mass() const { return m_; }

  double a() const { return e_ * E_; }  // eE, units mass^2
  double chi() const { return a() / (m_ * m_); }

 private:
  double e_, E_, m_;
};

}  // namespace spt
