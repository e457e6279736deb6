#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "glassnet/cycle_maps.hpp"

namespace glassnet {

namespace {

using Complex = std::complex<double>;

// Monic characteristic polynomial coefficients, highest degree first (leading 1 omitted).
std::vector<double> characteristic_coefficients(const Matrix& A) {
  const auto n = A.rows();
  if (n == 1) return {-A(0, 0)};
  if (n == 2) return {-A.trace(), A.determinant()};
  // n == 3: sum of principal 2x2 minors
  const double minors = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0) + A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0) +
                        A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
  return {-A.trace(), minors, -A.determinant()};
}

double polish_root(const std::vector<double>& c, double x) {
  for (int it = 0; it < 4; ++it) {
    double p = 1.0, dp = 0.0;
    for (double coeff : c) {
      dp = dp * x + p;
      p = p * x + coeff;
    }
    if (dp == 0.0) break;
    const double step = p / dp;
    if (!std::isfinite(step)) break;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

std::vector<Complex> quadratic_roots(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    // avoid cancellation
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q == 0.0) return {0.0, 0.0};
    return {q, c / q};
  }
  const double re = -0.5 * b;
  const double im = 0.5 * std::sqrt(-disc);
  return {{re, im}, {re, -im}};
}

std::vector<Complex> cubic_roots(double b, double c, double d) {
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  if (p == 0.0 && q == 0.0) return {-shift, -shift, -shift};
  if (disc <= 0.0) {
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    return {r * std::cos(theta) - shift, r * std::cos(theta - 2.0 * std::numbers::pi / 3.0) - shift,
            r * std::cos(theta - 4.0 * std::numbers::pi / 3.0) - shift};
  }
  const double s = std::sqrt(disc);
  const double real = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) - shift;
  // deflate: x^3 + b x^2 + c x + d = (x - real)(x^2 + (b + real) x + (c + real (b + real)))
  auto rest = quadratic_roots(b + real, c + real * (b + real));
  return {real, rest[0], rest[1]};
}

std::vector<Complex> eigenvalues_of(const Matrix& A) {
  const auto n = A.rows();
  if (n <= 3) {
    const auto c = characteristic_coefficients(A);
    std::vector<Complex> roots;
    if (n == 1) roots = {-c[0]};
    if (n == 2) roots = quadratic_roots(c[0], c[1]);
    if (n == 3) roots = cubic_roots(c[0], c[1], c[2]);
    const double scale = std::max(1.0, A.lpNorm<Eigen::Infinity>());
    for (auto& r : roots) {
      // a real double root may come back as a pair with a rounding-sized imaginary part
      if (std::abs(r.imag()) <= 1e-7 * scale) r = polish_root(c, r.real());
    }
    return roots;
  }
  Eigen::EigenSolver<Matrix> solver(A, false);
  if (solver.info() != Eigen::Success) throw EigenSolverError("Hessenberg QR eigensolver did not converge");
  std::vector<Complex> roots;
  const double scale = std::max(1.0, A.lpNorm<Eigen::Infinity>());
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex r = solver.eigenvalues()[i];
    if (std::abs(r.imag()) <= 1e-12 * scale) r = r.real();
    roots.push_back(r);
  }
  return roots;
}

bool before(const Complex& a, const Complex& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

}  // namespace

Vector normalize_eigenvector(const Vector& v) {
  const double norm = v.lpNorm<1>();
  if (norm == 0.0) throw PreconditionError("cannot normalize a zero vector");
  Eigen::Index largest = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[largest]) * (1.0 + 1e-12)) largest = i;
  return (v[largest] < 0.0 ? -1.0 : 1.0) * v / norm;
}

Spectrum real_eigenpairs(const Matrix& A) {
  if (A.rows() != A.cols() || A.rows() == 0) throw PreconditionError("eigen-analysis needs a square matrix");
  const auto n = A.rows();
  const double scale = A.lpNorm<Eigen::Infinity>();

  Spectrum spectrum;
  spectrum.eigenvalues = eigenvalues_of(A);
  std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), before);

  // group equal real eigenvalues so each group gets an independent eigenvector basis
  std::vector<double> reals;
  for (const auto& mu : spectrum.eigenvalues)
    if (mu.imag() == 0.0) reals.push_back(mu.real());

  std::size_t i = 0;
  while (i < reals.size()) {
    std::size_t j = i + 1;
    while (j < reals.size() && std::abs(reals[j] - reals[i]) <= 1e-9 * std::max(1.0, std::abs(reals[i]))) ++j;
    const std::size_t multiplicity = j - i;
    double lambda = 0.0;
    for (std::size_t k = i; k < j; ++k) lambda += reals[k];
    lambda /= static_cast<double>(multiplicity);

    const Matrix shifted = A - lambda * Matrix::Identity(n, n);
    Eigen::JacobiSVD<Matrix> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double null_tol = 1e-9 * std::max(1.0, scale);
    // singular values are descending; take the trailing ones below tolerance, at least one
    std::size_t kernel = 0;
    for (Eigen::Index k = n - 1; k >= 0 && sv[k] <= null_tol; --k) ++kernel;
    kernel = std::clamp<std::size_t>(kernel, 1, multiplicity);

    for (std::size_t k = 0; k < kernel; ++k) {
      Vector v = normalize_eigenvector(svd.matrixV().col(n - 1 - static_cast<Eigen::Index>(k)));
      const double residual = (A * v - lambda * v).lpNorm<Eigen::Infinity>();
      if (residual > 1e-9 * std::max(scale, 1e-300))
        throw EigenSolverError(fmt::format("eigenpair residual {} too large for eigenvalue {}", residual, lambda));
      spectrum.real.push_back({lambda, std::move(v)});
    }
    i = j;
  }

  std::stable_sort(spectrum.real.begin(), spectrum.real.end(), [](const EigenPair& a, const EigenPair& b) {
    return before(Complex(a.value), Complex(b.value));
  });
  return spectrum;
}

}  // namespace glassnet
