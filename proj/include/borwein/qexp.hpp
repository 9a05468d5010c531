#pragma once

// Exact truncated q-series with rational coefficients.
//
// A QSeries with denominator d and order N holds the coefficients of
// q^(e/d) for 0 <= e <= N. The "order" arguments of the constructors below
// (theta_series, lambert_series, ...) are q-orders: the returned series is
// exact through q^N, i.e. through e = N*d.

#include "borwein/real.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace borwein::qexp {

class QSeries {
 public:
  QSeries() : QSeries(1, 0) {}
  /// Zero series on the 1/denom grid, known through e = order.
  QSeries(int denom, int order);
  QSeries(int denom, std::vector<Rational> coeffs);

  int denom() const { return denom_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](int e) const { return coeffs_.at(static_cast<std::size_t>(e)); }
  Rational& operator[](int e) { return coeffs_.at(static_cast<std::size_t>(e)); }

  /// Same series on the finer grid 1/(denom * factor).
  QSeries lifted(int factor) const;
  /// Keep coefficients with e <= order.
  QSeries truncated(int order) const;

  bool is_zero() const;
  /// Smallest e with a nonzero coefficient.
  std::optional<int> valuation() const;
  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  /// Sum of c_e q^(e/d) at a real point q in (0,1).
  Real evaluate(const Real& q) const;

  QSeries operator-() const;
  QSeries& operator*=(const Rational& s);

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }

 private:
  int denom_;
  std::vector<Rational> coeffs_;
};

/// Brings two series onto the common grid lcm(d_a, d_b) and the common order.
std::pair<QSeries, QSeries> unify(const QSeries& a, const QSeries& b);

QSeries mul(const QSeries& a, const QSeries& b);
/// Multiplicative inverse; needs a nonzero constant term.
QSeries inverse(const QSeries& a);
/// Positive integer power by repeated squaring.
QSeries power(const QSeries& a, int k);
/// q -> q^k.
QSeries substitute_power(const QSeries& a, int k);
/// q -> q^(1/k): same coefficients on the grid 1/(d*k).
QSeries substitute_root(const QSeries& a, int k);
/// q d/dq.
QSeries q_differentiate(const QSeries& a);

enum class Theta { a, b, c };

QSeries theta_series(Theta kind, int order);

/// Lattice counts behind theta b: at each norm m, points with x-y = 0, 1, 2 (mod 3).
struct ResidueCounts {
  std::vector<long> same, class1, class2;
};
ResidueCounts theta_b_residue_counts(int order);

struct EtaFactor {
  int delta;
  int exponent;
};

/// prod eta(q^delta)^exponent, with the q^(sum delta*r/24) prefactor folded into the grid.
QSeries eta_quotient(std::span<const EtaFactor> spec, int order);

enum class Lambert { c, bc3, c_cubed, E0 };

QSeries lambert_series(Lambert kind, int order);

/// f(q) = b(q)^2 c(q^3) / 3 by exact multiplication of lattice series.
QSeries f_coefficients(int order);

/// a_0..a_N of f from f = b(q) * sum chi(n) sigma(n) q^n, with
/// b = eta(q)^3 / eta(q^3) written through Jacobi's and Euler's sparse series.
/// O(N^1.5) in 64-bit integers; used for long Dirichlet sums.
std::vector<std::int64_t> f_coefficients_int(int order);

int chi3(long long n);

/// One line per coefficient from the valuation through the order:
/// "e/d<TAB>num/den\n".
void dump(std::ostream& out, const QSeries& s);

}  // namespace borwein::qexp
