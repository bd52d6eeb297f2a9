#include "cylflow/nonlinear.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "cylflow/io.hpp"

namespace cylflow {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt6 = 2.449489742783178;
}  // namespace

LeadingModes::LeadingModes(double a_, Eigen::VectorXd b_, Eigen::MatrixXd c_)
    : a(a_), b(std::move(b_)), c(std::move(c_)) {
  if (c.rows() != b.size() || c.cols() != b.size())
    throw std::invalid_argument("LeadingModes: inconsistent sizes");
  if (!c.isApprox(c.transpose(), 1e-12))
    throw std::invalid_argument("LeadingModes: c must be symmetric");
  if (!b.allFinite() || !c.allFinite() || !std::isfinite(a))
    throw std::invalid_argument("LeadingModes: non-finite entries");
}

double LeadingModes::norm() const {
  return std::sqrt(a * a + b.squaredNorm() + c.squaredNorm());
}

ModeVector to_mode_vector(const LeadingModes& lm, Dimensions dims, int cap) {
  if (lm.k() != dims.k)
    throw std::invalid_argument("to_mode_vector: dimension mismatch");
  ModeVector out(dims, cap);
  if (lm.a != 0.0) out.set(MultiIndex(std::vector<int>(dims.k, 0)), lm.a);
  for (int i = 0; i < dims.k; ++i)
    if (lm.b(i) != 0.0) out.set(linear_index(dims.k, i), lm.b(i));
  for (int i = 0; i < dims.k; ++i) {
    if (lm.c(i, i) != 0.0) out.set(quadratic_index(dims.k, i), lm.c(i, i));
    for (int j = i + 1; j < dims.k; ++j)
      if (lm.c(i, j) != 0.0)
        out.set(quadratic_index(dims.k, i, j), kSqrt2 * lm.c(i, j));
  }
  return out;
}

LeadingModes leading_from_modes(const ModeVector& v) {
  const int k = v.dims().k;
  LeadingModes lm(k);
  lm.a = v.coeff(MultiIndex(std::vector<int>(k, 0)));
  for (int i = 0; i < k; ++i) lm.b(i) = v.coeff(linear_index(k, i));
  for (int i = 0; i < k; ++i) {
    lm.c(i, i) = v.coeff(quadratic_index(k, i));
    for (int j = i + 1; j < k; ++j) {
      const double cij = v.coeff(quadratic_index(k, i, j)) / kSqrt2;
      lm.c(i, j) = cij;
      lm.c(j, i) = cij;
    }
  }
  return lm;
}

ScalarField q2_field(const ScalarField& u) {
  return [u](std::span<const double> x) {
    const double v = u(x);
    return -0.5 * v * v;
  };
}

LeadingModes q2_leading(const LeadingModes& u) {
  const int k = u.k();
  LeadingModes out(k);
  out.a = -0.5 * u.a * u.a - 0.5 * u.b.squaredNorm() - 0.5 * u.c.squaredNorm();
  out.b = -u.a * u.b - kSqrt2 * (u.c * u.b);
  out.c = -kSqrt2 * (u.c * u.c) - (u.b * u.b.transpose()) / kSqrt2 - u.a * u.c;
  return out;
}

Q2DiagProjections q2_diag_projections(const Eigen::MatrixXd& c) {
  const int k = static_cast<int>(c.rows());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && c(i, j) != 0.0)
        throw std::invalid_argument("q2_diag_projections: input not diagonal");

  Q2DiagProjections out;
  out.v1 = -0.5 * c.diagonal().squaredNorm();
  out.v_half = Eigen::VectorXd::Zero(k);
  out.v_minus_half = Eigen::VectorXd::Zero(k);
  out.pair_coeffs = Eigen::MatrixXd::Zero(k, k);
  out.pure4_coeffs = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      if (i != j) out.pair_coeffs(i, j) = -0.5 * c(i, i) * c(j, j);
    out.pure4_coeffs(i) = -0.5 * kSqrt6 * c(i, i) * c(i, i);
  }
  return out;
}

ScalarField q3_field(const ModeField& u, Dimensions dims) {
  const double two_m = 2.0 * dims.codim_sphere();
  const int k = dims.k;
  return [u, two_m, k](std::span<const double> x) {
    const double v = u.value(x);
    std::vector<double> g(k), h(k * k);
    u.gradient(x, g);
    u.hessian(x, h);
    double hgg = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) hgg += h[i * k + j] * g[i] * g[j];
    return -0.5 * v * v + 0.5 * v * v * v - two_m * hgg;
  };
}

Eigen::VectorXd q3_v0_project(double a, const Eigen::VectorXd& c_diag,
                              const Eigen::MatrixXd& v, const Eigen::VectorXd& w,
                              const DerivedConstants& constants) {
  const int k = static_cast<int>(c_diag.size());
  if (v.rows() != k || v.cols() != k || w.size() != k)
    throw std::invalid_argument("q3_v0_project: size mismatch");
  auto in_domain = [](double x) { return std::abs(x) < 1.0; };
  if (!in_domain(a)) throw std::domain_error("q3_v0_project: |a| must be < 1");
  for (int i = 0; i < k; ++i) {
    if (!in_domain(c_diag(i)) || !in_domain(w(i)))
      throw std::domain_error("q3_v0_project: amplitude domain violated");
    if (v(i, i) != 0.0)
      throw std::invalid_argument("q3_v0_project: v must have zero diagonal");
    for (int j = 0; j < k; ++j)
      if (!in_domain(v(i, j)))
        throw std::domain_error("q3_v0_project: amplitude domain violated");
  }

  const double csq = c_diag.squaredNorm();
  Eigen::VectorXd out(k);
  for (int i = 0; i < k; ++i) {
    double vi = -kSqrt2 * c_diag(i) * c_diag(i) - a * c_diag(i) +
                1.5 * csq * c_diag(i) + constants.C1 * std::pow(c_diag(i), 3) +
                constants.C2 * c_diag(i) * w(i);
    for (int j = 0; j < k; ++j) vi -= 2.0 * c_diag(j) * v(j, i);
    out(i) = vi;
  }
  return out;
}

ModeVector quadratic_correction_map(const Eigen::VectorXd& c_diag,
                                    Dimensions dims) {
  const int k = dims.k;
  if (c_diag.size() != k)
    throw std::invalid_argument("quadratic_correction_map: size mismatch");
  ModeVector out(dims, 4);
  // Identity part.
  for (int i = 0; i < k; ++i)
    if (c_diag(i) != 0.0) out.set(quadratic_index(k, i), c_diag(i));
  // Each nonzero eigenspace contribution of Q2, divided by minus its
  // L-eigenvalue (the odd eigenspaces vanish for diagonal input).
  const Q2DiagProjections proj =
      q2_diag_projections(c_diag.asDiagonal().toDenseMatrix());
  if (proj.v1 != 0.0)
    out.add(MultiIndex(std::vector<int>(k, 0)), -proj.v1 / 1.0);
  for (int i = 0; i < k; ++i) {
    if (proj.pure4_coeffs(i) != 0.0)
      out.add(quartic_index(k, i), -proj.pure4_coeffs(i) / -1.0);
    for (int j = i + 1; j < k; ++j) {
      const double net = proj.pair_coeffs(i, j) + proj.pair_coeffs(j, i);
      if (net != 0.0) {
        std::vector<int> d(k, 0);
        d[i] = 2;
        d[j] = 2;
        out.add(MultiIndex(std::move(d)), -net / -1.0);
      }
    }
  }
  return out;
}

namespace {

// Exact polynomial extraction: the projections below are polynomials in the
// amplitude (finite Taylor structure of Q3 on a fixed mode span), so a few
// evaluations determine the coefficients to machine precision.
struct ConstantsAtOrder {
  double C1, C2, Cstar;
};

ConstantsAtOrder derive_at_order(Dimensions dims, int order) {
  const Dimensions d1(dims.codim_sphere() + 1, 1);  // k = 1, same n-k
  QuadratureRule rule(1, order);
  const MultiIndex p2 = quadratic_index(1, 0);
  const MultiIndex p4 = quartic_index(1, 0);

  ConstantsAtOrder out{};

  // C2 = <p2 p4, p2>.
  out.C2 = rule.integrate([&](std::span<const double> x) {
    return hermite1d(2, x[0]) * hermite1d(4, x[0]) * hermite1d(2, x[0]);
  });

  // C1 from the odd amplitude coefficient of <Q3(eps p2), p2>, which equals
  // (3/2 + C1) eps^3 exactly.
  auto g1 = [&](double eps) {
    ModeVector mv(d1, 4);
    mv.set(p2, eps);
    return inner_with_mode(q3_field(ModeField(mv), d1), p2, rule, 4);
  };
  const double eps0 = 0.5;
  out.C1 = (g1(eps0) - g1(-eps0)) / (2.0 * eps0 * eps0 * eps0) - 1.5;

  // C* from the cubic coefficient of <Q3(Q'(eps p2)), p2>, a polynomial of
  // degree 6 in eps whose odd part is g3 eps^3 + g5 eps^5; the model cubic
  // contributes 2 + C* at third order (k = 1).
  auto g = [&](double eps) {
    Eigen::VectorXd c(1);
    c(0) = eps;
    const ModeVector corrected = quadratic_correction_map(c, d1);
    return inner_with_mode(q3_field(ModeField(corrected), d1), p2, rule, 4);
  };
  const double A = 0.4, B = 0.2;
  const double oA = 0.5 * (g(A) - g(-A));
  const double oB = 0.5 * (g(B) - g(-B));
  const double a3 = A * A * A, a5 = a3 * A * A;
  const double b3 = B * B * B, b5 = b3 * B * B;
  const double g3 = (oA * b5 - oB * a5) / (a3 * b5 - b3 * a5);
  out.Cstar = g3 - 2.0;

  return out;
}

}  // namespace

DerivedConstants derive_constants(Dimensions dims, int quad_order) {
  const ConstantsAtOrder lo = derive_at_order(dims, quad_order);
  const ConstantsAtOrder hi = derive_at_order(dims, quad_order + 4);
  const double drift = std::max({std::abs(lo.C1 - hi.C1), std::abs(lo.C2 - hi.C2),
                                 std::abs(lo.Cstar - hi.Cstar)});
  if (drift > 1e-6)
    throw std::runtime_error(
        "derive_constants: quadrature orders disagree (mis-setup), drift = " +
        format_real(drift));
  DerivedConstants out;
  out.C1 = hi.C1;
  out.C2 = hi.C2;
  out.Cstar = hi.Cstar;
  out.n_minus_k = dims.codim_sphere();
  out.quad_order = quad_order;
  return out;
}

const DerivedConstants& derived_constants_cached(Dimensions dims) {
  static std::mutex mu;
  static std::map<int, DerivedConstants> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(dims.codim_sphere());
  if (it == cache.end())
    it = cache.emplace(dims.codim_sphere(), derive_constants(dims)).first;
  return it->second;
}

Eigen::MatrixXd barQ(const Eigen::MatrixXd& U, double Cstar) {
  if (U.rows() != U.cols()) throw std::invalid_argument("barQ: square matrix required");
  if (!U.isApprox(U.transpose(), 1e-12))
    throw std::invalid_argument("barQ: symmetric matrix required");
  const Eigen::MatrixXd U2 = U * U;
  return -kSqrt2 * U2 + 2.0 * U2.trace() * U + Cstar * U2 * U;
}

std::string write_constants_file(const std::string& path,
                                 const std::vector<DerivedConstants>& all) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& c : all) {
    for (const auto& [name, value] :
         {std::pair<const char*, double>{"C1", c.C1}, {"C2", c.C2}, {"Cstar", c.Cstar}}) {
      nlohmann::ordered_json e;
      e["name"] = name;
      e["n_minus_k"] = c.n_minus_k;
      e["value"] = format_real(value);
      e["quad_order"] = c.quad_order;
      entries.push_back(e);
    }
  }
  nlohmann::ordered_json doc;
  doc["constants"] = entries;
  doc["checksum"] = "fnv1a:" + fnv1a64_hex(entries.dump());
  const std::string text = doc.dump(2) + "\n";
  write_text_file(path, text);
  return text;
}

std::vector<DerivedConstants> read_constants_file(const std::string& path) {
  const auto doc = nlohmann::ordered_json::parse(read_text_file(path));
  const auto& entries = doc.at("constants");
  const std::string expect = "fnv1a:" + fnv1a64_hex(entries.dump());
  if (doc.at("checksum").get<std::string>() != expect)
    throw std::runtime_error("constants file checksum mismatch: " + path);
  std::map<int, DerivedConstants> by_dim;
  for (const auto& e : entries) {
    const int m = e.at("n_minus_k").get<int>();
    auto& c = by_dim.try_emplace(m).first->second;
    c.n_minus_k = m;
    c.quad_order = e.at("quad_order").get<int>();
    const double value = std::stod(e.at("value").get<std::string>());
    const std::string name = e.at("name").get<std::string>();
    if (name == "C1") c.C1 = value;
    else if (name == "C2") c.C2 = value;
    else if (name == "Cstar") c.Cstar = value;
    else throw std::runtime_error("constants file: unknown entry " + name);
  }
  std::vector<DerivedConstants> out;
  for (auto& [m, c] : by_dim) out.push_back(c);
  return out;
}

}  // namespace cylflow
