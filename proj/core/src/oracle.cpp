// Copyright 2026 The gqld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqld/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "gqld/error.h"

namespace gqld::oracle {
namespace {

// QUADPACK qk15 abscissae (positive half, outermost first) and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights at kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kInitialPanels = 16;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double magnitude(double v) { return std::abs(v); }
double magnitude(const ComplexValue& v) { return std::abs(v); }

template <typename T>
struct Panel {
  double lo;
  double hi;
  T value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fc = f(center);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  double abs_sum = magnitude(fc) * kWgk[7];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kronrod += (f1 + f2) * kWgk[i];
    abs_sum += (magnitude(f1) + magnitude(f2)) * kWgk[i];
    if (i % 2 == 1) gauss += (f1 + f2) * kWg[i / 2];
  }
  const double err = std::max(magnitude((kronrod - gauss) * half),
                              50.0 * kEps * abs_sum * std::abs(half));
  return {lo, hi, kronrod * half, err};
}

template <typename T>
struct Adaptive {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

template <typename T, typename F>
Adaptive<T> adapt(const F& f, double lo, double hi, double tol, std::size_t max_panels) {
  if (!(tol > 0.0)) throw DomainError("quadrature: tolerance must be > 0");
  if (!(lo < hi)) throw DomainError("quadrature: require lo < hi");
  std::priority_queue<Panel<T>> heap;
  std::vector<Panel<T>> frozen;  // panels too narrow to split further
  Adaptive<T> out;
  double total_err = 0.0;
  const double width = (hi - lo) / static_cast<double>(kInitialPanels);
  for (std::size_t i = 0; i < kInitialPanels; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = (i + 1 == kInitialPanels) ? hi : a + width;
    auto p = gk15<T>(f, a, b);
    total_err += p.error;
    heap.push(p);
  }
  out.evaluations = 15 * kInitialPanels;
  while (total_err > tol && heap.size() + frozen.size() < max_panels && !heap.empty()) {
    Panel<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) ||
        (worst.hi - worst.lo) < 1e3 * kEps * std::max(std::abs(worst.lo), std::abs(worst.hi))) {
      frozen.push_back(worst);
      continue;
    }
    auto left = gk15<T>(f, worst.lo, mid);
    auto right = gk15<T>(f, mid, worst.hi);
    out.evaluations += 30;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  std::vector<Panel<T>> all = std::move(frozen);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  // Order-independent result: sum panels left to right with compensation.
  std::sort(all.begin(), all.end(),
            [](const Panel<T>& x, const Panel<T>& y) { return x.lo < y.lo; });
  T sum{};
  T comp{};
  double err = 0.0;
  for (const auto& p : all) {
    const T yv = p.value - comp;
    const T t = sum + yv;
    comp = (t - sum) - yv;
    sum = t;
    err += p.error;
  }
  out.value = sum;
  out.error = err;
  out.converged = err <= tol;
  return out;
}

template <typename T, typename Fn>
auto line_integrand(const Fn& f, LineMap map) {
  return [&f, map](double u) -> T {
    if (!(std::abs(u) < 1.0)) return T{};
    const double y = map.center + map.scale * std::atanh(u);
    const T v = f(y);
    if (v == T{}) return T{};
    return v * (map.scale / ((1.0 - u) * (1.0 + u)));
  };
}

template <typename T, typename Fn>
auto halfline_integrand(const Fn& f, double scale, HalfLineMap kind) {
  return [&f, scale, kind](double v) -> T {
    if (!(v > 0.0 && v < 1.0)) return T{};
    double x;
    double jac;
    if (kind == HalfLineMap::kExponential) {
      x = -scale * std::log(v);
      jac = scale / v;
    } else {
      const double w = 1.0 - v;
      x = scale * v / w;
      jac = scale / (w * w);
    }
    const T val = f(x);
    if (val == T{}) return T{};
    return val * jac;
  };
}

QuadratureResult to_result(const Adaptive<double>& a) {
  return {a.value, a.error, a.evaluations, a.converged};
}

ComplexQuadratureResult to_result(const Adaptive<ComplexValue>& a) {
  return {a.value, a.error, a.evaluations, a.converged};
}

void check_map(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("quadrature: map scale must be finite and > 0");
  }
}

std::vector<double> sample_grid(const RealFunction& f, double lo, double hi, std::size_t n) {
  if (n < 100) throw DomainError("grid check: need at least 100 points");
  if (!(lo < hi)) throw DomainError("grid check: require lo < hi");
  std::vector<double> values(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) values[i] = f(lo + step * static_cast<double>(i));
  return values;
}

}  // namespace

QuadratureResult integrate_interval(const RealFunction& f, double lo, double hi, double tol,
                                    std::size_t max_panels) {
  return to_result(adapt<double>(f, lo, hi, tol, max_panels));
}

ComplexQuadratureResult integrate_interval_complex(const ComplexFunction& f, double lo, double hi,
                                           double tol, std::size_t max_panels) {
  return to_result(adapt<ComplexValue>(f, lo, hi, tol, max_panels));
}

QuadratureResult integrate_line(const RealFunction& f, double tol, LineMap map) {
  check_map(map.scale);
  return to_result(adapt<double>(line_integrand<double>(f, map), -1.0, 1.0, tol, kMaxPanels));
}

ComplexQuadratureResult integrate_line_complex(const ComplexFunction& f, double tol, LineMap map) {
  check_map(map.scale);
  return to_result(
      adapt<ComplexValue>(line_integrand<ComplexValue>(f, map), -1.0, 1.0, tol, kMaxPanels));
}

QuadratureResult integrate_halfline(const RealFunction& f, double tol, double scale,
                                    HalfLineMap map) {
  check_map(scale);
  return to_result(
      adapt<double>(halfline_integrand<double>(f, scale, map), 0.0, 1.0, tol, kMaxPanels));
}

ComplexQuadratureResult integrate_halfline_complex(const ComplexFunction& f, double tol,
                                                   double scale, HalfLineMap map) {
  check_map(scale);
  return to_result(adapt<ComplexValue>(halfline_integrand<ComplexValue>(f, scale, map), 0.0,
                                       1.0, tol, kMaxPanels));
}

QuadratureResult moment(const RealFunction& pdf, int k, double tol, LineMap map) {
  if (k < 0) throw DomainError("moment: order must be >= 0");
  const RealFunction g = [&pdf, k](double y) {
    const double w = pdf(y);
    return w == 0.0 ? 0.0 : std::pow(y, k) * w;
  };
  return integrate_line(g, tol, map);
}

ValidationReport grid_convexity(const RealFunction& f, double lo, double hi, std::size_t n) {
  const auto v = sample_grid(f, lo, hi, n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  double worst = 0.0;
  double where = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d2 = v[i - 1] - 2.0 * v[i] + v[i + 1];
    if (-d2 > worst || std::isnan(d2)) {
      worst = std::isnan(d2) ? std::numeric_limits<double>::infinity() : -d2;
      where = lo + step * static_cast<double>(i);
    }
  }
  auto r = ValidationReport::make("grid_convexity", worst, 1e-9, n);
  r.location = where;
  return r;
}

ValidationReport grid_monotone(const RealFunction& f, double lo, double hi, std::size_t n) {
  const auto v = sample_grid(f, lo, hi, n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  double worst = 0.0;
  double where = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 1; i < n; ++i) {
    const double d1 = v[i] - v[i - 1];
    if (-d1 > worst || std::isnan(d1)) {
      worst = std::isnan(d1) ? std::numeric_limits<double>::infinity() : -d1;
      where = lo + step * static_cast<double>(i);
    }
  }
  auto r = ValidationReport::make("grid_monotone", worst, 1e-12, n);
  r.location = where;
  return r;
}

}  // namespace gqld::oracle
