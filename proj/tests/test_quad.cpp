#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "famzv/quad.hpp"

using namespace famzv;

TEST_CASE("gauss_legendre integrates polynomials exactly up to degree 2n-1") {
  auto rule = gauss_legendre(6);
  REQUIRE(rule.nodes.size() == 6);
  for (int d = 0; d <= 11; ++d) {
    double got = 0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      got += rule.weights[i] * std::pow(rule.nodes[i], d);
    double exact = (d % 2 == 0) ? 2.0 / (d + 1) : 0.0;
    CHECK(got == doctest::Approx(exact).epsilon(1e-13));
  }
  double wsum = 0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("L_form closed forms and chain-rule residuals") {
  CHECK(L_form(0, 0.25, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(L_form(1, 0.0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(L_form(-1, 0.0, 0.5) == doctest::Approx(-std::log(1.5)).epsilon(1e-14));
  // d/dt2 L_form must match the integrand of the corresponding 1-form:
  // finite-difference residuals on random triples.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 0.9);
  const double h = 1e-6;
  for (int trial = 0; trial < 1000; ++trial) {
    double t1 = dist(rng), t2 = dist(rng);
    for (int j : {-1, 0, 1}) {
      double deriv = (L_form(j, t1, t2 + h) - L_form(j, t1, t2 - h)) / (2 * h);
      double integrand =
          j == 0 ? 1.0 / t2 : (j == 1 ? 1.0 / (1 - t2) : -1.0 / (1 + t2));
      CHECK(std::abs(deriv - integrand) < 1e-6);
    }
  }
  // Additivity: L(t1,t2) + L(t2,t3) == L(t1,t3), to near machine precision.
  for (int trial = 0; trial < 1000; ++trial) {
    double a = dist(rng), b = dist(rng), c = dist(rng);
    for (int j : {-1, 0, 1}) {
      double res = L_form(j, a, b) + L_form(j, b, c) - L_form(j, a, c);
      CHECK(std::abs(res) < 1e-12);
    }
  }
}

TEST_CASE("li_numeric closed forms at z = 1/2") {
  CHECK(li_numeric(SignedIndex({1}), 0.5, 1e-12) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(li_numeric(SignedIndex({-1}), 0.5, 1e-12) ==
        doctest::Approx(-std::log(1.5)).epsilon(1e-10));
  const double li2_half = 0.5822405264650126;  // pi^2/12 - log(2)^2/2
  CHECK(li_numeric(SignedIndex({2}), 0.5, 1e-12) ==
        doctest::Approx(li2_half).epsilon(1e-10));
  CHECK_THROWS_AS(li_numeric(SignedIndex({1}), 0.9, 1e-12), std::invalid_argument);
}

TEST_CASE("iterint_numeric matches li_numeric for all indices of weight <= 3") {
  std::vector<SignedIndex> indices;
  for (int w = 1; w <= 3; ++w)
    for (int d = 1; d <= w; ++d) {
      // all signed indices of weight w, depth d
      std::vector<std::vector<int>> comps;
      std::vector<int> cur(d, 1);
      // enumerate positive compositions of w into d parts
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == d) {
          if (left == 0) comps.push_back(cur);
          return;
        }
        for (int v = 1; v <= left - (d - pos - 1); ++v) {
          cur[pos] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, w);
      for (const auto& c : comps)
        for (int mask = 0; mask < (1 << d); ++mask) {
          std::vector<int> e = c;
          for (int i = 0; i < d; ++i)
            if (mask & (1 << i)) e[i] = -e[i];
          indices.emplace_back(e);
        }
    }
  for (const auto& idx : indices) {
    double series = li_numeric(idx, 0.5, 1e-10);
    double integral = iterint_numeric(idx, 0.5, 48);
    INFO("index ", idx.str());
    CHECK(std::abs(series - integral) < 1e-6);
  }
}

TEST_CASE("iterint_numeric Li_2(1/2) to 1e-8") {
  CHECK(std::abs(iterint_numeric(SignedIndex({2}), 0.5, 64) - 0.5822405264650126) <
        1e-8);
}
