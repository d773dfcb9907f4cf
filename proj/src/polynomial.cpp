#include "mjt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mjt/error.hpp"

namespace mjt {

Polynomial::Polynomial(std::initializer_list<double> ascending) : coeffs_(ascending) { trim(); }

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(int degree, double coefficient) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coefficient;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  Polynomial p{1.0};
  for (double r : roots) p = p * Polynomial{-r, 1.0};
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative(int order) const {
  std::vector<double> c = coeffs_;
  for (int k = 0; k < order && !c.empty(); ++k) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<double>(i);
    c.pop_back();
  }
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> c = p.coeffs_;
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

namespace {

bool opposite_signs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

// Shrinks [lo, hi] around a sign change of f until narrower than `width` or
// no representable midpoint remains.
template <typename F>
void bisect(const F& f, double& lo, double& hi, double width) {
  double flo = f(lo);
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) {
      lo = hi = mid;
      return;
    }
    if (opposite_signs(flo, fmid)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
}

// Damped Newton on f, never leaving [lo, hi] and never increasing |f|.
double polish(const Polynomial& f, const Polynomial& df, double x, double lo, double hi,
              int steps) {
  double fx = f(x);
  for (int k = 0; k < steps && fx != 0.0; ++k) {
    const double slope = df(x);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    double step = fx / slope;
    bool improved = false;
    for (int damp = 0; damp < 8; ++damp, step *= 0.5) {
      const double candidate = x - step;
      if (candidate < lo || candidate > hi) continue;
      const double fc = f(candidate);
      if (std::abs(fc) < std::abs(fx)) {
        x = candidate;
        fx = fc;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return x;
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const Polynomial& p, double lo, double hi,
                                         const RootScanOptions& options) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of p = 0");
  if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: need lo < hi");

  const int n = std::max(options.grid_intervals, 2);
  const double tolerance = options.residual_tolerance * p.max_abs_coefficient();
  const Polynomial dp = p.derivative();

  std::vector<double> xs(static_cast<std::size_t>(n) + 1);
  std::vector<double> fs(xs.size());
  for (int i = 0; i <= n; ++i) {
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / n;
  }
  xs.back() = hi;
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = p(xs[i]);

  std::vector<RealRoot> found;
  const auto accept = [&](RealRoot r) {
    if (r.value > lo && r.value < hi && std::abs(p(r.value)) <= tolerance) found.push_back(r);
  };

  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (i > 0 && fs[i] == 0.0) {
      accept({xs[i], xs[i], xs[i], dp(xs[i]) == 0.0});
      continue;
    }
    if (!opposite_signs(fs[i], fs[i + 1])) continue;
    double a = xs[i];
    double b = xs[i + 1];
    bisect(p, a, b, options.bracket_width);
    const double x = polish(p, dp, 0.5 * (a + b), a, b, options.newton_steps);
    accept({x, a, b, false});
  }

  // Even-multiplicity roots never change sign; look for local minima of |p|
  // with a critical point of p nearby.
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double left = fs[i - 1];
    const double mid = fs[i];
    const double right = fs[i + 1];
    if (mid == 0.0 || opposite_signs(left, mid) || opposite_signs(mid, right)) continue;
    if (std::abs(mid) > std::abs(left) || std::abs(mid) > std::abs(right)) continue;
    double a = xs[i - 1];
    double b = xs[i + 1];
    if (!opposite_signs(dp(a), dp(b))) continue;
    bisect(dp, a, b, options.bracket_width);
    accept({0.5 * (a + b), a, b, true});
  }

  std::sort(found.begin(), found.end(),
            [](const RealRoot& l, const RealRoot& r) { return l.value < r.value; });
  std::vector<RealRoot> merged;
  for (const RealRoot& r : found) {
    if (!merged.empty() && r.value - merged.back().value <= options.merge_distance) {
      if (merged.back().tangent && !r.tangent) merged.back() = r;
      continue;
    }
    merged.push_back(r);
  }
  return merged;
}

std::vector<double> find_real_roots(const Polynomial& p, double lo, double hi,
                                    const RootScanOptions& options) {
  std::vector<double> out;
  for (const RealRoot& r : isolate_real_roots(p, lo, hi, options)) out.push_back(r.value);
  return out;
}

}  // namespace mjt
