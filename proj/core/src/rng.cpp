#include "fintext/rng.hpp"

#include <cmath>
#include <numbers>

#include "fintext/error.hpp"

namespace fintext {

double SeededRng::normal() {
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double SeededRng::gamma(double shape) {
  if (!(shape > 0.0)) throw InternalError("gamma shape must be positive");
  if (shape < 1.0) {
    // boost: Gamma(a) = Gamma(a + 1) * U^{1/a}
    double u = uniform01();
    if (u <= 0.0) u = 0x1.0p-53;
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

std::vector<double> SeededRng::dirichlet(double conc, std::size_t k) {
  std::vector<double> out(k);
  double total = 0.0;
  for (auto& g : out) {
    g = gamma(conc);
    total += g;
  }
  if (total <= 0.0) throw InternalError("dirichlet draw degenerated to zero");
  for (auto& g : out) g /= total;
  return out;
}

std::size_t SeededRng::sample_cumulative(const std::vector<double>& cumulative) {
  if (cumulative.empty()) throw InternalError("empty cumulative weights");
  const double target = uniform01() * cumulative.back();
  std::size_t k = 0;
  while (k + 1 < cumulative.size() && cumulative[k] <= target) ++k;
  return k;
}

}  // namespace fintext
