#include "borwein/accel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace borwein::accel {

Real levin_u(std::span<const Real> partial, std::size_t n0, int k) {
  if (k < 1 || n0 + static_cast<std::size_t>(k) >= partial.size())
    throw std::invalid_argument("levin_u: not enough partial sums");
  const Real beta = 1;
  const Real base = beta + static_cast<long>(n0 + k);
  Real num = 0, den = 0;
  Real binom = 1;
  for (int j = 0; j <= k; ++j) {
    const std::size_t n = n0 + static_cast<std::size_t>(j);
    const Real term = n == 0 ? partial[0] : partial[n] - partial[n - 1];
    if (term == 0) throw PrecisionError("levin_u: vanishing term");
    const Real omega = (beta + static_cast<long>(n)) * term;
    Real c = binom * pow((beta + static_cast<long>(n)) / base, k - 1) / omega;
    if (j % 2) c = -c;
    num += c * partial[n];
    den += c;
    binom = binom * (k - j) / (j + 1);
  }
  return num / den;
}

Estimate levin_u_tail(std::span<const Real> partial, int k) {
  const std::size_t last = partial.size() - 1;
  if (last < static_cast<std::size_t>(k) + 1) throw std::invalid_argument("levin_u_tail: sequence too short");
  Estimate e;
  e.value = levin_u(partial, last - k, k);
  e.err = abs(e.value - levin_u(partial, last - k + 1, k - 1));
  return e;
}

namespace {

struct BasisFn {
  Rational exponent;
  int log_power;
};

std::vector<BasisFn> basis(std::span<const Family> families, int nb) {
  std::vector<BasisFn> out;
  for (const auto& f : families)
    for (int j = 0; j <= nb; ++j)
      for (int p = f.log_power; p >= 0; --p) out.push_back({f.exponent + j, p});
  std::sort(out.begin(), out.end(), [](const BasisFn& x, const BasisFn& y) {
    if (x.exponent != y.exponent) return x.exponent < y.exponent;
    return x.log_power > y.log_power;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const BasisFn& x, const BasisFn& y) {
                          return x.exponent == y.exponent && x.log_power == y.log_power;
                        }),
            out.end());
  if (static_cast<int>(out.size()) > nb) out.resize(static_cast<std::size_t>(nb));
  return out;
}

std::vector<std::size_t> sample_points(std::size_t dmax, int count) {
  std::vector<std::size_t> pts;
  const double lo = static_cast<double>(dmax) / 4.0;
  for (int i = 0; i < count; ++i) {
    const double x = lo * std::pow(4.0, static_cast<double>(i) / (count - 1));
    pts.push_back(static_cast<std::size_t>(std::llround(x)));
  }
  pts.back() = dmax;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  while (static_cast<int>(pts.size()) < count) {
    if (pts.front() == 0) throw std::invalid_argument("richardson: sequence too short");
    pts.insert(pts.begin(), pts.front() - 1);
  }
  return pts;
}

}  // namespace

std::vector<Real> solve_dense(std::vector<std::vector<Real>> m, std::vector<Real> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0) throw PrecisionError("singular extrapolation system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real factor = m[r][col] / m[col][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
    x[i] = acc / m[i][i];
  }
  return x;
}

Real richardson_fit(std::span<const Real> partial, std::span<const Family> families, int nb, std::size_t dmax) {
  if (dmax >= partial.size()) throw std::invalid_argument("richardson: dmax beyond sequence");
  const auto fns = basis(families, nb);
  const int cols = static_cast<int>(fns.size()) + 1;
  const auto pts = sample_points(dmax, cols);
  std::vector<std::vector<Real>> m(static_cast<std::size_t>(cols), std::vector<Real>(static_cast<std::size_t>(cols)));
  std::vector<Real> rhs(static_cast<std::size_t>(cols));
  for (int r = 0; r < cols; ++r) {
    const Real x = Real(static_cast<long>(pts[static_cast<std::size_t>(r)])) + 1;
    const Real lx = log(x);
    auto& row = m[static_cast<std::size_t>(r)];
    row[0] = 1;
    for (int c = 1; c < cols; ++c) {
      const auto& fn = fns[static_cast<std::size_t>(c - 1)];
      row[static_cast<std::size_t>(c)] = exp(-to_real(fn.exponent) * lx) * pow(lx, fn.log_power);
    }
    rhs[static_cast<std::size_t>(r)] = partial[pts[static_cast<std::size_t>(r)]];
  }
  return solve_dense(std::move(m), std::move(rhs))[0];
}

Estimate richardson(std::span<const Real> partial, std::span<const Family> families, int nb) {
  const std::size_t dmax = partial.size() - 1;
  Estimate e;
  e.value = richardson_fit(partial, families, nb, dmax);
  const Real v_fewer = richardson_fit(partial, families, std::max(1, nb - 2), dmax);
  const Real v_shorter = richardson_fit(partial, families, nb, dmax * 3 / 4);
  e.err = max(abs(e.value - v_fewer), abs(e.value - v_shorter));
  return e;
}

}  // namespace borwein::accel
