#include "cylflow/mode_vector.hpp"

#include <stdexcept>

namespace cylflow {

namespace {

void check_index(const Dimensions& dims, int cap, const MultiIndex& m) {
  if (m.dim() != dims.k)
    throw std::invalid_argument("ModeVector: index dimension mismatch");
  if (m.total_degree() > cap)
    throw std::invalid_argument("ModeVector: degree cap exceeded");
}

}  // namespace

void ModeVector::set(const MultiIndex& m, double value) {
  check_index(dims_, cap_, m);
  if (value == 0.0)
    coeffs_.erase(m);
  else
    coeffs_[m] = value;
}

void ModeVector::add(const MultiIndex& m, double value) {
  check_index(dims_, cap_, m);
  coeffs_[m] += value;
}

ModeVector ModeVector::restrict_degrees(int lo, int hi) const {
  ModeVector out(dims_, cap_);
  for (const auto& [m, c] : coeffs_) {
    const int d = m.total_degree();
    if (d >= lo && d <= hi) out.set(m, c);
  }
  return out;
}

ModeVector ModeVector::pruned(double tol) const {
  ModeVector out(dims_, cap_);
  for (const auto& [m, c] : coeffs_)
    if (std::abs(c) > tol) out.set(m, c);
  return out;
}

ModeVector& ModeVector::operator+=(const ModeVector& other) {
  for (const auto& [m, c] : other.coeffs_) add(m, c);
  return *this;
}

ModeVector& ModeVector::operator*=(double s) {
  for (auto& [m, c] : coeffs_) c *= s;
  return *this;
}

ModeVector ModeVector::operator-(const ModeVector& other) const {
  ModeVector out = *this;
  for (const auto& [m, c] : other.coeffs_) out.add(m, -c);
  return out;
}

}  // namespace cylflow
