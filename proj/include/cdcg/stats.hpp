#pragma once

#include "cdcg/core.hpp"

#include <cmath>
#include <span>

namespace cdcg {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t n = 0;
};

/// Ordinary least squares y = intercept + slope * x.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "linear_fit: size mismatch");
  LinearFit fit;
  fit.n = x.size();
  if (fit.n < 2) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < fit.n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= fit.n;
  my /= fit.n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < fit.n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

/// Exponential decay rate of v(t), fitted as the negated slope of ln v over
/// the window that starts at the first sample and ends once v has fallen by
/// `efolds` e-folds (or at the last positive sample).
inline double fit_decay_rate(std::span<const double> t, std::span<const double> v, double efolds = 2.0) {
  require(t.size() == v.size() && !t.empty(), "fit_decay_rate: bad input");
  require(v[0] > 0.0, "fit_decay_rate: initial value must be positive");
  const double stop = v[0] * std::exp(-efolds);
  std::vector<double> tt, lv;
  for (std::size_t i = 0; i < t.size() && v[i] > 0.0; ++i) {
    tt.push_back(t[i]);
    lv.push_back(std::log(v[i]));
    if (v[i] <= stop) break;
  }
  return -linear_fit(tt, lv).slope;
}

}  // namespace cdcg
