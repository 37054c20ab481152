#include "famzv/quad.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace famzv {

double L_form(int j, double t1, double t2) {
  switch (j) {
    case 1:
      return std::log((1.0 - t1) / (1.0 - t2));
    case -1:
      return std::log((1.0 + t1) / (1.0 + t2));
    case 0:
      return std::log(t2 / t1);
    default:
      throw std::invalid_argument("L_form: j must be +1, -1 or 0");
  }
}

double li_numeric(const SignedIndex& idx, double z, double tol) {
  if (!(z > 0.0 && z <= 0.75))
    throw std::invalid_argument("li_numeric: need 0 < z <= 0.75");
  if (tol < 1e-12) throw std::invalid_argument("li_numeric: tol >= 1e-12");
  const auto& e = idx.entries();
  const int r = idx.depth();
  // Real-valued version of the zeta DP: T[j] accumulates partial sums,
  // the increment to T[r] at step N is the coefficient of z^N.
  std::vector<double> T(static_cast<size_t>(r) + 1, 0.0);
  T[0] = 1.0;
  double sum = 0.0;
  double zn = 1.0;
  constexpr long kMaxTerms = 2'000'000;
  for (long N = 1; N <= kMaxTerms; ++N) {
    zn *= z;
    for (int j = r; j >= 1; --j) {
      double term = T[j - 1] * std::pow(1.0 / double(N), std::abs(e[j - 1]));
      if (e[j - 1] < 0 && (N & 1)) term = -term;
      T[j] += term;
      if (j == r) sum += term * zn;
    }
    // |coeff_k| <= H_k^{r-1} <= (1 + ln k)^{r-1}; geometric tail in z.
    double bound = std::pow(1.0 + std::log(double(N + 1)), r - 1);
    double tail = 2.0 * bound * zn * z / (1.0 - z);
    if (tail < tol && N > r) return sum;
  }
  throw std::runtime_error("li_numeric: tail bound unachievable within iteration cap");
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double iterint_numeric(const SignedIndex& idx, double z, int nodes_per_level) {
  const int weight = idx.weight();
  if (weight > 3)
    throw std::invalid_argument("iterint_numeric: weight above bound 3");
  if (!(z > 0.0 && z < 1.0))
    throw std::invalid_argument("iterint_numeric: need 0 < z < 1");
  const auto& e = idx.entries();
  const int r = idx.depth();

  // Form sequence along ascending integration variables: block i opens
  // with dt/(eta_{r+1-i} - t) and continues with |a_i| - 1 copies of dt/t,
  // where eta_{r+1-i} is the product of the signs of a_i..a_r.
  struct Form {
    bool opening;  // 1/(eta - t) vs 1/t
    double eta;
  };
  std::vector<Form> forms;
  for (int i = 0; i < r; ++i) {
    double eta = 1.0;
    for (int j = i; j < r; ++j)
      if (e[j] < 0) eta = -eta;
    forms.push_back({true, eta});
    for (int k = 1; k < std::abs(e[i]); ++k) forms.push_back({false, 0.0});
  }

  const auto rule = gauss_legendre(nodes_per_level);
  // G_0 = 1; G_l(x) = int_0^x f_l(t) G_{l-1}(t) dt; answer G_w(z).
  auto eval = [&](auto&& self, int level, double upper) -> double {
    if (level == 0) return 1.0;
    const Form& f = forms[static_cast<size_t>(level) - 1];
    double acc = 0.0;
    for (int i = 0; i < nodes_per_level; ++i) {
      double t = 0.5 * upper * (rule.nodes[i] + 1.0);
      double w = 0.5 * upper * rule.weights[i];
      double integrand = f.opening ? 1.0 / (f.eta - t) : 1.0 / t;
      acc += w * integrand * self(self, level - 1, t);
    }
    return acc;
  };
  return eval(eval, weight, z);
}

}  // namespace famzv
