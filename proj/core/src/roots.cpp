#include "bivalg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bivalg {

namespace {

void horner_with_derivative(const std::vector<Complex>& c, const Complex& z, Complex& p, Complex& dp) {
  p = c.back();
  dp = Complex();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

}  // namespace

RootResult aberth_roots(std::vector<Complex> coeffs, const RootOptions& options) {
  RootResult out;
  Real largest = 0;
  for (const auto& c : coeffs) largest = std::max(largest, abs(c));
  if (largest == 0) {
    out.identically_zero = true;
    return out;
  }
  const Real cutoff = largest * Real(options.trim_tolerance);
  while (!coeffs.empty() && abs(coeffs.back()) <= cutoff) coeffs.pop_back();

  // Zero roots split off exactly.
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros].re == 0 && coeffs[zeros].im == 0) ++zeros;
  for (std::size_t k = 0; k < zeros; ++k) out.roots.emplace_back();
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));

  const std::size_t n = coeffs.empty() ? 0 : coeffs.size() - 1;
  if (n == 0) return out;
  const Complex lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  if (n == 1) {
    out.roots.push_back(-coeffs[0]);
    return out;
  }

  // Start on a circle whose radius matches the root size bound.
  Real radius = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Real a = abs(coeffs[k]);
    if (a == 0) continue;
    radius = std::max(radius, Real(pow(a, Real(1) / Real(n - k))));
  }
  if (radius == 0) radius = 1;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = Complex::polar(radius, 2 * pi() * Real(k) / Real(n) + Real(0.4));
  }

  const Real eps = pow(Real(2), -static_cast<int>(working_precision()) + 12);
  out.converged = false;
  Complex p;
  Complex dp;
  for (unsigned it = 1; it <= options.max_iterations; ++it) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      horner_with_derivative(coeffs, z[i], p, dp);
      if (p.re == 0 && p.im == 0) continue;
      // |p(z)| at rounding level: z is a root of a nearby polynomial.
      Real scale = 0;
      const Real az = abs(z[i]);
      for (std::size_t k = coeffs.size(); k-- > 0;) scale = scale * az + abs(coeffs[k]);
      if (abs(p) <= eps * scale) continue;
      if (dp.re == 0 && dp.im == 0) {
        // Stationary point of p: nudge deterministically.
        z[i] += Complex::polar(radius * eps * 1024, Real(1));
        done = false;
        continue;
      }
      const Complex ratio = p / dp;
      Complex repulsion;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Complex d = z[i] - z[j];
        if (d.re == 0 && d.im == 0) continue;
        repulsion += Complex(1) / d;
      }
      const Complex denom = Complex(1) - ratio * repulsion;
      const Complex step = (denom.re == 0 && denom.im == 0) ? ratio : ratio / denom;
      z[i] -= step;
      if (abs(step) > eps * std::max(Real(1), abs(z[i]))) done = false;
    }
    out.iterations = it;
    if (done) {
      out.converged = true;
      break;
    }
  }
  for (auto& r : z) out.roots.push_back(std::move(r));
  return out;
}

RootResultDouble aberth_roots_double(std::vector<std::complex<double>> coeffs, double zero_floor,
                                     unsigned max_iterations) {
  using C = std::complex<double>;
  RootResultDouble out;
  double largest = 0;
  for (const auto& c : coeffs) largest = std::max(largest, std::abs(c));
  if (largest <= zero_floor) {
    out.identically_zero = true;
    return out;
  }
  const double cutoff = std::max(zero_floor, largest * 1e-14);
  while (!coeffs.empty() && std::abs(coeffs.back()) <= cutoff) coeffs.pop_back();
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == C(0)) ++zeros;
  out.roots.assign(zeros, C(0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));

  const std::size_t n = coeffs.empty() ? 0 : coeffs.size() - 1;
  if (n == 0) return out;
  const C lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  if (n == 1) {
    out.roots.push_back(-coeffs[0]);
    return out;
  }
  if (n == 2) {
    // Stable quadratic formula.
    const C b = coeffs[1];
    const C c = coeffs[0];
    const C d = std::sqrt(b * b - 4.0 * c);
    const C big = std::real(std::conj(b) * d) >= 0 ? -(b + d) / 2.0 : -(b - d) / 2.0;
    if (big == C(0)) {
      out.roots.insert(out.roots.end(), {C(0), C(0)});
    } else {
      out.roots.push_back(big);
      out.roots.push_back(c / big);
    }
    return out;
  }

  double radius = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = std::abs(coeffs[k]);
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0 / static_cast<double>(n - k)));
  }
  if (radius == 0) radius = 1;
  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
  }
  out.converged = false;
  for (unsigned it = 1; it <= max_iterations; ++it) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      C p = coeffs.back();
      C dp = 0;
      for (std::size_t k = n; k-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + coeffs[k];
      }
      if (p == C(0)) continue;
      if (dp == C(0)) {
        z[i] += std::polar(radius * 1e-10, 1.0);
        done = false;
        continue;
      }
      const C ratio = p / dp;
      C repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
      }
      const C denom = 1.0 - ratio * repulsion;
      const C step = denom == C(0) ? ratio : ratio / denom;
      z[i] -= step;
      if (std::abs(step) > 1e-15 * std::max(1.0, std::abs(z[i]))) done = false;
    }
    if (done) {
      out.converged = true;
      break;
    }
  }
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  return out;
}

}  // namespace bivalg
