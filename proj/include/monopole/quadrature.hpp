#pragma once

// Tanh-sinh (double-exponential) quadrature on a finite interval.
//
// The integrand may take either one argument x, or three arguments
// (x, x - a, b - x). The three-argument form receives the distances to
// both endpoints computed without cancellation, which is what makes
// algebraic endpoint singularities such as (b - x)^(-1/2) tractable.

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <type_traits>

#include "monopole/errors.hpp"

namespace monopole {

struct QuadratureOptions {
  double tolerance = 1e-13;
  int max_levels = 11;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  int levels = 0;
  int evaluations = 0;
};

namespace detail {

template <class F>
auto call_integrand(F& f, double x, double dl, double dr) {
  if constexpr (std::is_invocable_v<F&, double, double, double>) {
    return f(x, dl, dr);
  } else {
    return f(x);
  }
}

template <class T>
bool finite_value(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

}  // namespace detail

template <class F>
auto tanh_sinh(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  using T = std::decay_t<decltype(detail::call_integrand(f, 0.0, 0.0, 0.0))>;
  constexpr double half_pi = std::numbers::pi / 2;
  constexpr double t_max = 6.0;

  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  QuadratureResult<T> res;
  if (h == 0.0) return res;

  T sum{};
  double l1 = 0.0;
  auto node = [&](double t) {
    // Node pair at +t and -t, expressed through the distance to the
    // nearer endpoint: 1 - tanh(u) = 2e/(1+e), e = exp(-2u).
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    const double weight = half_pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    const double near = h * 2.0 * e / (1.0 + e);
    const double far = 2.0 * h - near;
    if (weight == 0.0 || near == 0.0) return false;
    const T fr = detail::call_integrand(f, b - near, far, near);
    const T fl = detail::call_integrand(f, a + near, near, far);
    res.evaluations += 2;
    if (!detail::finite_value(fr) || !detail::finite_value(fl)) {
      std::ostringstream os;
      os << "tanh-sinh: non-finite integrand near t=" << t << " on [" << a << ", " << b << "]";
      throw NumericError(os.str());
    }
    sum += weight * (fr + fl);
    l1 += weight * (std::abs(fr) + std::abs(fl));
    return true;
  };

  {
    const T f0 = detail::call_integrand(f, c, h, h);
    res.evaluations += 1;
    sum = half_pi * f0;
    l1 = half_pi * std::abs(f0);
    for (double t = 1.0; t <= t_max; t += 1.0) {
      if (!node(t)) break;
    }
  }
  T estimate = h * sum;
  double step = 1.0;
  for (int level = 1; level <= opt.max_levels; ++level) {
    step *= 0.5;
    for (double t = step; t <= t_max; t += 2.0 * step) {
      if (!node(t)) break;
    }
    const T next = h * step * sum;
    const double diff = std::abs(next - estimate);
    estimate = next;
    res.levels = level;
    res.error_estimate = diff;
    const double floor = 64.0 * 2.220446049250313e-16 * h * step * l1;
    if (level >= 3 && (diff <= opt.tolerance * std::abs(next) || diff <= floor)) {
      res.value = next;
      return res;
    }
  }
  std::ostringstream os;
  os << "tanh-sinh did not converge on [" << a << ", " << b << "] after " << opt.max_levels
     << " levels; estimate " << estimate << ", last difference " << res.error_estimate;
  throw NumericError(os.str());
}

}  // namespace monopole
