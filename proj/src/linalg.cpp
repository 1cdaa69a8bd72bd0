// Copyright 2026 The colsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "colsim/errors.hpp"
#include "colsim/tolerances.hpp"

namespace colsim {
namespace {

constexpr std::size_t kMaxEigenDim = 10;

void require_square(const CMatrix& m, const char* what) {
  if (!m.is_square()) throw InvalidInput(std::string(what) + ": matrix must be square");
}

// Real rotation (c, s) of the classical Jacobi method for the 2×2 Hermitian
// block [[app, g], [g, aqq]] with g = |apq| > 0.
struct Rotation {
  double c;
  double s;
};

Rotation jacobi_rotation(double app, double aqq, double g) {
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c};
}

// M ← M·G on columns p, q where G = diag(.., e^{-iφ} at q, ..)·P(c, s).
void rotate_columns(CMatrix& m, std::size_t p, std::size_t q, Complex phase_conj, Rotation r) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q) * phase_conj;
    m(k, p) = r.c * mp - r.s * mq;
    m(k, q) = r.s * mp + r.c * mq;
  }
}

// M ← G†·M on rows p, q.
void rotate_rows(CMatrix& m, std::size_t p, std::size_t q, Complex phase, Rotation r) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k) * phase;
    m(p, k) = r.c * mp - r.s * mq;
    m(q, k) = r.s * mp + r.c * mq;
  }
}

double frobenius(const CMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

void reduce_to_hessenberg(CMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::vector<Complex> v(n - k - 1);
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i - k - 1] = h(i, k);
      xnorm += std::norm(h(i, k));
    }
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const Complex x0 = v[0];
    const Complex unit = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
    v[0] += unit * xnorm;
    double vnorm = 0.0;
    for (const auto& z : v) vnorm += std::norm(z);
    vnorm = std::sqrt(vnorm);
    for (auto& z : v) z /= vnorm;

    // H ← (I − 2vv†) H
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(v[i]) * h(k + 1 + i, j);
      for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= 2.0 * v[i] * dot;
    }
    // H ← H (I − 2vv†)
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) dot += h(i, k + 1 + j) * v[j];
      for (std::size_t j = 0; j < v.size(); ++j) h(i, k + 1 + j) -= 2.0 * dot * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

Complex wilkinson_shift(const CMatrix& h, std::size_t hi) {
  const Complex a = h(hi - 1, hi - 1);
  const Complex b = h(hi - 1, hi);
  const Complex c = h(hi, hi - 1);
  const Complex d = h(hi, hi);
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mu1 = 0.5 * (a + d) + disc;
  const Complex mu2 = 0.5 * (a + d) - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

}  // namespace

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex x = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = x * b(ib, jb);
    }
  return out;
}

CMatrix partial_trace(const CMatrix& rho, Keep keep, BipartiteDims dims) {
  const std::size_t n = dims.first * dims.second;
  if (dims.first == 0 || dims.second == 0 || rho.rows() != n || rho.cols() != n)
    throw InvalidInput("partial_trace: expected a " + std::to_string(n) + "x" + std::to_string(n) +
                       " operator, got " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
  const std::size_t db = dims.second;
  if (keep == Keep::First) {
    CMatrix out(dims.first, dims.first);
    for (std::size_t i = 0; i < dims.first; ++i)
      for (std::size_t k = 0; k < dims.first; ++k)
        for (std::size_t j = 0; j < db; ++j) out(i, k) += rho(i * db + j, k * db + j);
    return out;
  }
  CMatrix out(db, db);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < dims.first; ++i) out(j, l) += rho(i * db + j, i * db + l);
  return out;
}

HermitianSpectrum eig_hermitian(const CMatrix& m, bool with_vectors) {
  require_square(m, "eig_hermitian");
  const std::size_t n = m.rows();
  if (n > kMaxEigenDim) throw InvalidInput("eig_hermitian: dimension above 10");
  if (m.hermiticity_error() > tol::kHermitianInput) throw InvalidInput("eig_hermitian: matrix is not Hermitian");

  CMatrix a = 0.5 * (m + m.adjoint());
  CMatrix v = CMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (g <= 1e-300 || g <= tol::kJacobiOffDiagonal * std::sqrt(std::abs(app * aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        converged = false;
        const Complex phase = a(p, q) / g;
        const Rotation r = jacobi_rotation(app, aqq, g);
        rotate_columns(a, p, q, std::conj(phase), r);
        rotate_rows(a, p, q, phase, r);
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (with_vectors) rotate_columns(v, p, q, std::conj(phase), r);
      }
    }
  }
  if (!converged) throw NumericalError("eig_hermitian: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianSpectrum out;
  out.values.reserve(n);
  for (std::size_t i : order) out.values.push_back(a(i, i).real());
  if (with_vectors) {
    CMatrix sorted(n, n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) sorted(row, col) = v(row, order[col]);
    out.vectors = std::move(sorted);
  }
  return out;
}

std::vector<Complex> eig_general(const CMatrix& m) {
  require_square(m, "eig_general");
  const std::size_t n = m.rows();
  if (n > kMaxEigenDim) throw InvalidInput("eig_general: dimension above 10");

  CMatrix h = m;
  reduce_to_hessenberg(h);
  const double scale = std::max(frobenius(h), 1e-300);

  std::vector<Complex> eigenvalues;
  eigenvalues.reserve(n);
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iterations = 0;
  int since_deflation = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eigenvalues.push_back(h(0, 0));
      break;
    }
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      const double diag = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (sub <= tol::kQrSubdiagonal * diag || sub <= 1e-16 * scale) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eigenvalues.push_back(h(hi, hi));
      --hi;
      since_deflation = 0;
      continue;
    }
    if (iterations >= tol::kQrMaxIterations) {
      // Out of budget: report the current diagonal of the undeflated window.
      for (std::ptrdiff_t k = hi; k >= 0; --k) eigenvalues.push_back(h(k, k));
      break;
    }

    Complex shift = wilkinson_shift(h, static_cast<std::size_t>(hi));
    if (since_deflation > 0 && since_deflation % 10 == 0)
      shift = h(hi, hi) + std::abs(h(hi, hi - 1)) * Complex(0.75, 0.4375);

    const auto l = static_cast<std::size_t>(lo);
    const auto top = static_cast<std::size_t>(hi);
    for (std::size_t k = l; k <= top; ++k) h(k, k) -= shift;

    struct Givens {
      Complex g11, g12, g21, g22;
    };
    std::vector<Givens> rotations;
    rotations.reserve(top - l);
    for (std::size_t k = l; k < top; ++k) {
      const Complex x = h(k, k);
      const Complex y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      Givens g{1.0, 0.0, 0.0, 1.0};
      if (r > 0.0) g = {std::conj(x) / r, std::conj(y) / r, -y / r, x / r};
      for (std::size_t j = k; j <= top; ++j) {
        const Complex a = h(k, j);
        const Complex b = h(k + 1, j);
        h(k, j) = g.g11 * a + g.g12 * b;
        h(k + 1, j) = g.g21 * a + g.g22 * b;
      }
      rotations.push_back(g);
    }
    for (std::size_t k = l; k < top; ++k) {
      const Givens& g = rotations[k - l];
      const std::size_t last = std::min(k + 1, top);
      for (std::size_t i = l; i <= last; ++i) {
        const Complex a = h(i, k);
        const Complex b = h(i, k + 1);
        h(i, k) = a * std::conj(g.g11) + b * std::conj(g.g12);
        h(i, k + 1) = a * std::conj(g.g21) + b * std::conj(g.g22);
      }
    }
    for (std::size_t k = l; k <= top; ++k) h(k, k) += shift;
    ++iterations;
    ++since_deflation;
  }
  return eigenvalues;
}

std::array<Complex, 4> eig_general4(const CMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw InvalidInput("eig_general4: expected a 4x4 matrix");
  const auto values = eig_general(m);
  std::array<Complex, 4> out{};
  std::copy_n(values.begin(), 4, out.begin());
  return out;
}

std::vector<double> singular_values(const CMatrix& m) {
  CMatrix a = m;
  const std::size_t n = a.cols();
  bool converged = false;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < a.rows(); ++k) {
          alpha += std::norm(a(k, p));
          beta += std::norm(a(k, q));
          gamma += std::conj(a(k, p)) * a(k, q);
        }
        const double g = std::abs(gamma);
        if (g <= 1e-300 || g <= tol::kJacobiOffDiagonal * std::sqrt(alpha * beta)) continue;
        converged = false;
        rotate_columns(a, p, q, std::conj(gamma / g), jacobi_rotation(alpha, beta, g));
      }
    }
  }
  if (!converged) throw NumericalError("singular_values: one-sided Jacobi did not converge");

  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.rows(); ++k) s += std::norm(a(k, j));
    out[j] = std::sqrt(s);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double trace_distance(const CMatrix& rho, const CMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw InvalidInput("trace_distance: dimension mismatch");
  const auto spectrum = eig_hermitian(rho - sigma, false);
  double sum = 0.0;
  for (double x : spectrum.values) sum += std::abs(x);
  return 0.5 * sum;
}

double purity(const CMatrix& rho) {
  require_square(rho, "purity");
  double p = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) p += (rho(i, j) * rho(j, i)).real();
  return p;
}

double expectation(const CMatrix& rho, std::span<const Complex> psi) {
  const auto rpsi = rho * psi;
  Complex e = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) e += std::conj(psi[i]) * rpsi[i];
  return e.real();
}

std::vector<double> solve_spd(std::span<const double> a, std::size_t n, std::span<const double> b) {
  if (a.size() != n * n || b.size() != n) throw InvalidInput("solve_spd: dimension mismatch");
  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (d <= 0.0) throw InvalidInput("solve_spd: matrix is not positive definite");
    l[j * n + j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / l[j * n + j];
    }
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * y[k];
    y[i] = s / l[i * n + i];
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l[k * n + i] * x[k];
    x[i] = s / l[i * n + i];
  }
  return x;
}

}  // namespace colsim
