#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace mjt {

/// Dense real polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are trimmed on construction, so the zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> ascending);
  explicit Polynomial(std::vector<double> ascending);

  static Polynomial monomial(int degree, double coefficient = 1.0);
  /// prod_k (x - roots[k])
  static Polynomial from_roots(std::span<const double> roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  double operator[](int k) const;
  double max_abs_coefficient() const;

  double operator()(double x) const;
  Polynomial derivative(int order = 1) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<double> coeffs_;
};

struct RealRoot {
  double value = 0.0;
  /// Interval that certifies the root: a sign change of p across it, or for
  /// tangent roots, a sign change of p'.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool tangent = false;
};

struct RootScanOptions {
  int grid_intervals = 4096;
  double bracket_width = 1e-13;
  int newton_steps = 5;
  /// Acceptance threshold on |p(r)| relative to the largest coefficient.
  double residual_tolerance = 1e-10;
  double merge_distance = 1e-9;
};

/// Real roots in the open interval (lo, hi), ascending. Sign changes on a
/// uniform grid are bisected and polished by Newton; even-multiplicity roots
/// are picked up from local minima of |p| whose residual is below tolerance.
/// Throws ZeroPolynomial for p == 0.
std::vector<RealRoot> isolate_real_roots(const Polynomial& p, double lo, double hi,
                                         const RootScanOptions& options = {});

std::vector<double> find_real_roots(const Polynomial& p, double lo, double hi,
                                    const RootScanOptions& options = {});

}  // namespace mjt
