#include "cylflow/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace cylflow {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt6 = 2.449489742783178;

double recurrence(int degree, double x) {
  double hm1 = 0.0;
  double h = 1.0;
  for (int d = 0; d < degree; ++d) {
    const double hp1 = (x * h / kSqrt2 - std::sqrt(double(d)) * hm1) /
                       std::sqrt(double(d + 1));
    hm1 = h;
    h = hp1;
  }
  return h;
}

// Closed forms for the degrees the algebra depends on; the recurrence is
// checked against these once at startup to pin the normalization.
double closed_form(int degree, double x) {
  switch (degree) {
    case 0: return 1.0;
    case 1: return x / kSqrt2;
    case 2: return (x * x - 2.0) / (2.0 * kSqrt2);
    case 4: return (x * x * x * x - 12.0 * x * x + 12.0) / (8.0 * kSqrt6);
    default: return recurrence(degree, x);
  }
}

struct NormalizationCheck {
  NormalizationCheck() {
    for (int d : {0, 1, 2, 4}) {
      for (double x : {-1.7, 0.0, 0.4, 2.9}) {
        if (std::abs(recurrence(d, x) - closed_form(d, x)) > 1e-12)
          throw std::logic_error("hermite1d: recurrence disagrees with closed form");
      }
    }
  }
};
const NormalizationCheck normalization_check;

}  // namespace

double hermite1d(int degree, double x) {
  if (degree < 0) throw std::invalid_argument("hermite1d: negative degree");
  return closed_form(degree, x);
}

double hermite1d_deriv(int degree, double x) {
  if (degree == 0) return 0.0;
  return std::sqrt(0.5 * degree) * hermite1d(degree - 1, x);
}

double hermite1d_deriv2(int degree, double x) {
  if (degree <= 1) return 0.0;
  return std::sqrt(0.5 * degree) * std::sqrt(0.5 * (degree - 1)) *
         hermite1d(degree - 2, x);
}

double hermite_eval(const MultiIndex& m, std::span<const double> x, int cap) {
  if (m.total_degree() > cap)
    throw std::invalid_argument("hermite_eval: degree cap exceeded");
  if (static_cast<std::size_t>(m.dim()) != x.size())
    throw std::invalid_argument("hermite_eval: point dimension mismatch");
  double v = 1.0;
  for (int c = 0; c < m.dim(); ++c) v *= hermite1d(m.degrees[c], x[c]);
  return v;
}

double inner(const ScalarField& f, const ScalarField& g,
             const QuadratureRule& rule) {
  return rule.integrate(
      [&](std::span<const double> x) { return f(x) * g(x); });
}

double inner_with_mode(const ScalarField& f, const MultiIndex& m,
                       const QuadratureRule& rule, int cap) {
  return rule.integrate([&](std::span<const double> x) {
    return f(x) * hermite_eval(m, x, cap);
  });
}

ModeVector project(const ScalarField& f, Dimensions dims, int cap,
                   const QuadratureRule& rule) {
  if (rule.dim() != dims.k)
    throw std::invalid_argument("project: quadrature dimension mismatch");
  // Sample the field once, then contract against precomputed per-coordinate
  // Hermite values at the 1D nodes.
  const auto& xs = rule.nodes1d();
  const int q = rule.order();
  std::vector<std::vector<double>> h1d(cap + 1, std::vector<double>(q));
  for (int d = 0; d <= cap; ++d)
    for (int j = 0; j < q; ++j) h1d[d][j] = hermite1d(d, xs[j]);

  std::vector<double> fw;
  std::vector<std::vector<int>> node_idx;
  fw.reserve(rule.node_count());
  {
    std::vector<int> idx(dims.k, 0);
    rule.for_each_node([&](std::span<const double> x, double w) {
      const double v = f(x);
      if (!std::isfinite(v))
        throw std::runtime_error("project: non-finite field value at node");
      fw.push_back(v * w);
      node_idx.push_back(idx);
      int c = 0;
      while (c < dims.k && ++idx[c] == q) {
        idx[c] = 0;
        ++c;
      }
    });
  }

  ModeVector out(dims, cap);
  for (const MultiIndex& m : enumerate_modes(dims.k, cap)) {
    double s = 0.0;
    for (std::size_t node = 0; node < fw.size(); ++node) {
      double hv = 1.0;
      for (int c = 0; c < dims.k; ++c) hv *= h1d[m.degrees[c]][node_idx[node][c]];
      s += fw[node] * hv;
    }
    if (s != 0.0) out.set(m, s);
  }
  return out;
}

ModeVector product_expand(const MultiIndex& m1, const MultiIndex& m2,
                          Dimensions dims, int cap) {
  if (m1.dim() != dims.k || m2.dim() != dims.k)
    throw std::invalid_argument("product_expand: index dimension mismatch");
  if (m1.total_degree() > cap || m2.total_degree() > cap)
    throw std::invalid_argument("product_expand: degree cap exceeded");
  const int dtot = m1.total_degree() + m2.total_degree();

  // 1D quadrature exact for the triple products that appear.
  const int q1 = dtot + 2;
  QuadratureRule rule1(1, q1);
  auto triple = [&](int a, int b, int c) {
    double s = 0.0;
    for (int j = 0; j < q1; ++j) {
      const double x = rule1.nodes1d()[j];
      s += rule1.weights1d()[j] * hermite1d(a, x) * hermite1d(b, x) *
           hermite1d(c, x);
    }
    return s;
  };

  ModeVector out(dims, dtot);
  for (const MultiIndex& m : enumerate_modes(dims.k, dtot)) {
    double coeff = 1.0;
    for (int c = 0; c < dims.k && coeff != 0.0; ++c) {
      const int a = m1.degrees[c], b = m2.degrees[c], d = m.degrees[c];
      if (d > a + b || ((a + b + d) % 2) != 0) {
        coeff = 0.0;
        break;
      }
      coeff *= triple(a, b, d);
    }
    if (std::abs(coeff) > 1e-14) out.set(m, coeff);
  }
  return out;
}

double L_eigenvalue(int total_degree) { return 1.0 - 0.5 * total_degree; }

double L_eigenvalue(const MultiIndex& m) {
  return L_eigenvalue(m.total_degree());
}

ModeVector apply_L(const ModeVector& v) {
  ModeVector out(v.dims(), v.cap());
  for (const auto& [m, c] : v.coeffs()) out.set(m, c * L_eigenvalue(m));
  return out;
}

double ModeField::value(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& [m, c] : v_.coeffs()) {
    double hv = 1.0;
    for (int i = 0; i < m.dim(); ++i) hv *= hermite1d(m.degrees[i], x[i]);
    s += c * hv;
  }
  return s;
}

void ModeField::gradient(std::span<const double> x, std::span<double> out) const {
  const int k = v_.dims().k;
  for (int i = 0; i < k; ++i) out[i] = 0.0;
  for (const auto& [m, c] : v_.coeffs()) {
    for (int i = 0; i < k; ++i) {
      double term = c;
      for (int j = 0; j < k; ++j)
        term *= (j == i) ? hermite1d_deriv(m.degrees[j], x[j])
                         : hermite1d(m.degrees[j], x[j]);
      out[i] += term;
    }
  }
}

void ModeField::hessian(std::span<const double> x, std::span<double> out) const {
  const int k = v_.dims().k;
  for (int i = 0; i < k * k; ++i) out[i] = 0.0;
  for (const auto& [m, c] : v_.coeffs()) {
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) {
        double term = c;
        for (int l = 0; l < k; ++l) {
          if (l == i && l == j)
            term *= hermite1d_deriv2(m.degrees[l], x[l]);
          else if (l == i || l == j)
            term *= hermite1d_deriv(m.degrees[l], x[l]);
          else
            term *= hermite1d(m.degrees[l], x[l]);
        }
        out[i * k + j] += term;
        if (i != j) out[j * k + i] += term;
      }
    }
  }
}

}  // namespace cylflow
