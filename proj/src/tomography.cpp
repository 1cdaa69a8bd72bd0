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

#include "colsim/tomography.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <numbers>

#include "colsim/dynamics.hpp"
#include "colsim/errors.hpp"
#include "colsim/linalg.hpp"
#include "colsim/rng.hpp"

namespace colsim {
namespace {

constexpr std::array kPolarizations{Polarization::H, Polarization::V, Polarization::D,
                                    Polarization::A, Polarization::R, Polarization::L};

std::array<Complex, 2> ket(Polarization p) {
  const double h = std::numbers::sqrt2 / 2.0;
  switch (p) {
    case Polarization::H: return {1.0, 0.0};
    case Polarization::V: return {0.0, 1.0};
    case Polarization::D: return {h, h};
    case Polarization::A: return {h, -h};
    case Polarization::R: return {h, Complex{0.0, h}};
    case Polarization::L: return {h, Complex{0.0, -h}};
  }
  return {1.0, 0.0};
}

// Pauli products σa ⊗ σb, a and b over (I, X, Y, Z).
const std::vector<CMatrix>& pauli_basis() {
  static const std::vector<CMatrix> basis = [] {
    const std::array<CMatrix, 4> single{
        CMatrix{{1.0, 0.0}, {0.0, 1.0}},
        CMatrix{{0.0, 1.0}, {1.0, 0.0}},
        CMatrix{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}},
        CMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    std::vector<CMatrix> out;
    for (const auto& a : single)
      for (const auto& b : single) out.push_back(tensor(a, b));
    return out;
  }();
  return basis;
}

double trace_product(const CMatrix& a, const CMatrix& b) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t.real();
}

CMatrix project_to_physical(const CMatrix& estimate) {
  const auto spectrum = eig_hermitian(0.5 * (estimate + estimate.adjoint()), true);
  std::vector<double> clipped(spectrum.values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < clipped.size(); ++i) {
    clipped[i] = std::max(0.0, spectrum.values[i]);
    total += clipped[i];
  }
  if (!(total > 0.0)) throw InvalidInput("reconstruct: estimate has no positive spectrum");
  const CMatrix& v = *spectrum.vectors;
  CMatrix rho(estimate.rows(), estimate.cols());
  for (std::size_t k = 0; k < clipped.size(); ++k) {
    if (clipped[k] == 0.0) continue;
    const double w = clipped[k] / total;
    for (std::size_t i = 0; i < rho.rows(); ++i)
      for (std::size_t j = 0; j < rho.cols(); ++j) rho(i, j) += w * v(i, k) * std::conj(v(j, k));
  }
  return 0.5 * (rho + rho.adjoint());
}

TomographyResult prepare(const CMatrix& rho_true, std::uint64_t shots, std::size_t runs, std::uint64_t seed) {
  if (runs < 2) throw InvalidInput("mc_errorbars: at least two Monte-Carlo runs are required");
  if (shots < 1) throw InvalidInput("mc_errorbars: shots must be at least 1");
  const ProjectorSet set = projector_set();
  std::vector<double> expected = expected_probs(rho_true, set);
  for (auto& p : expected) p *= static_cast<double>(shots);
  TomographyResult out{reconstruct(expected, set, shots), {}, {}, 0.0, 0.0, seed, shots};
  out.mc_samples.resize(runs, CMatrix::zeros(4, 4));
  out.concurrences.resize(runs, 0.0);
  return out;
}

void run_once(TomographyResult& out, const std::vector<double>& probs, const ProjectorSet& set, std::size_t i) {
  const auto counts = sample_counts(probs, out.shots_per_projector, out.seed + i);
  out.mc_samples[i] = reconstruct(counts, set, out.shots_per_projector);
  out.concurrences[i] = concurrence(out.mc_samples[i]);
}

void summarise(TomographyResult& out) {
  const auto n = static_cast<double>(out.concurrences.size());
  double mean = 0.0;
  for (double c : out.concurrences) mean += c;
  mean /= n;
  double var = 0.0;
  for (double c : out.concurrences) var += (c - mean) * (c - mean);
  out.c_mean = mean;
  out.c_std = std::sqrt(var / (n - 1.0));
}

}  // namespace

std::string to_string(Polarization p) {
  static constexpr const char* kNames[] = {"H", "V", "D", "A", "R", "L"};
  return kNames[static_cast<std::size_t>(p)];
}

ProjectorSet projector_set() {
  ProjectorSet set;
  set.projectors.reserve(36);
  for (Polarization a : kPolarizations)
    for (Polarization s : kPolarizations) {
      const auto ka = ket(a);
      const auto ks = ket(s);
      std::vector<Complex> joint(4);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) joint[i * 2 + j] = ka[i] * ks[j];
      set.projectors.push_back({a, s, CMatrix::outer(joint)});
    }
  return set;
}

std::vector<double> expected_probs(const CMatrix& rho, const ProjectorSet& set) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InvalidInput("expected_probs: expected a 4x4 density matrix");
  std::vector<double> probs;
  probs.reserve(set.size());
  for (const auto& p : set.projectors) probs.push_back(trace_product(rho, p.matrix));
  return probs;
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probs, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw InvalidInput("sample_counts: shots must be at least 1");
  CounterRng rng(seed);
  std::vector<std::uint64_t> counts;
  counts.reserve(probs.size());
  for (double p : probs) counts.push_back(sample_poisson(static_cast<double>(shots) * std::max(0.0, p), rng));
  return counts;
}

CMatrix reconstruct(std::span<const double> counts, const ProjectorSet& set, std::uint64_t shots) {
  if (counts.size() != set.size()) throw InvalidInput("reconstruct: one count per projector is required");
  if (shots < 1) throw InvalidInput("reconstruct: shots must be at least 1");
  bool any = false;
  for (double c : counts) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidInput("reconstruct: counts must be finite and non-negative");
    any = any || c > 0.0;
  }
  if (!any) throw InvalidInput("reconstruct: all counts are zero");

  // pᵢ = Σⱼ Aᵢⱼ sⱼ with ρ = ¼ Σⱼ sⱼ Bⱼ and Aᵢⱼ = ¼ Tr(Bⱼ Πᵢ).
  const auto& basis = pauli_basis();
  const std::size_t m = set.size();
  const std::size_t n = basis.size();
  std::vector<double> design(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) design[i * n + j] = 0.25 * trace_product(basis[j], set.projectors[i].matrix);

  std::vector<double> normal(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  const double inv_shots = 1.0 / static_cast<double>(shots);
  for (std::size_t i = 0; i < m; ++i) {
    const double f = counts[i] * inv_shots;
    for (std::size_t j = 0; j < n; ++j) {
      rhs[j] += design[i * n + j] * f;
      for (std::size_t k = 0; k < n; ++k) normal[j * n + k] += design[i * n + j] * design[i * n + k];
    }
  }
  const std::vector<double> coeffs = solve_spd(normal, n, rhs);

  CMatrix estimate(4, 4);
  for (std::size_t j = 0; j < n; ++j) estimate += basis[j] * (0.25 * coeffs[j]);
  return project_to_physical(estimate);
}

CMatrix reconstruct(std::span<const std::uint64_t> counts, const ProjectorSet& set, std::uint64_t shots) {
  std::vector<double> as_real(counts.begin(), counts.end());
  return reconstruct(as_real, set, shots);
}

TomographyResult mc_errorbars_serial(const CMatrix& rho_true, std::uint64_t shots, std::size_t runs,
                                     std::uint64_t seed) {
  TomographyResult out = prepare(rho_true, shots, runs, seed);
  const ProjectorSet set = projector_set();
  const std::vector<double> probs = expected_probs(rho_true, set);
  for (std::size_t i = 0; i < runs; ++i) run_once(out, probs, set, i);
  summarise(out);
  return out;
}

TomographyResult mc_errorbars(const CMatrix& rho_true, std::uint64_t shots, std::size_t runs, std::uint64_t seed) {
  TomographyResult out = prepare(rho_true, shots, runs, seed);
  const ProjectorSet set = projector_set();
  const std::vector<double> probs = expected_probs(rho_true, set);
  std::vector<std::exception_ptr> errors(runs);
  const auto n = static_cast<std::ptrdiff_t>(runs);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      run_once(out, probs, set, static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  summarise(out);
  return out;
}

}  // namespace colsim
