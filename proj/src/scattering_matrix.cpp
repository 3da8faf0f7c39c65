#include "ptscatter/scattering_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace ptscatter {

ScatteringMatrix recenter(const ScatteringMatrix& s, double k, double center) noexcept {
  const cplx phase = std::polar(1.0, 2.0 * k * center);
  return {s.s11, s.s12 / phase, s.s21 * phase, s.s22};
}

TransferMatrix recenter(const TransferMatrix& m, double k, double center) noexcept {
  const cplx phase = std::polar(1.0, 2.0 * k * center);
  return {m.m11, m.m12 * phase, m.m21 / phase, m.m22};
}

ScatteringMatrix inverse(const ScatteringMatrix& s) noexcept {
  const cplx d = s.det();
  return {s.s22 / d, -s.s12 / d, -s.s21 / d, s.s11 / d};
}

TransferMatrix inverse(const TransferMatrix& m) noexcept {
  const cplx d = m.det();
  return {m.m22 / d, -m.m12 / d, -m.m21 / d, m.m11 / d};
}

double pseudo_unitarity_defect(const ScatteringMatrix& s) noexcept {
  const ScatteringMatrix inv = inverse(s);
  return std::max({std::abs(std::conj(s.s11) - inv.s11), std::abs(std::conj(s.s12) - inv.s12),
                   std::abs(std::conj(s.s21) - inv.s21), std::abs(std::conj(s.s22) - inv.s22)});
}

double pseudo_unitarity_defect(const TransferMatrix& m) noexcept {
  const TransferMatrix inv = inverse(m);
  return std::max({std::abs(std::conj(m.m11) - inv.m11), std::abs(std::conj(m.m12) - inv.m12),
                   std::abs(std::conj(m.m21) - inv.m21), std::abs(std::conj(m.m22) - inv.m22)});
}

double max_abs_diff(const ScatteringMatrix& a, const ScatteringMatrix& b) noexcept {
  return std::max({std::abs(a.s11 - b.s11), std::abs(a.s12 - b.s12), std::abs(a.s21 - b.s21),
                   std::abs(a.s22 - b.s22)});
}

}  // namespace ptscatter
