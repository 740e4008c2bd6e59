#pragma once

// Test-only dense-matrix oracles. Everything here goes through explicit
// 2^n x 2^n matrices and never touches the symbolic algebra or the reduced
// propagator, so it can vouch for them independently.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qhi/hamiltonian.hpp"
#include "qhi/pauli.hpp"

namespace qhi::oracle {

/// i([A,B]) evaluated with dense matrices.
inline Eigen::MatrixXcd dense_commutator_i(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return Complex(0, 1) * (a * b - b * a);
}

/// All 4^n Pauli strings on n qubits, lexicographic.
inline std::vector<PauliString> all_strings(int n) {
  std::vector<PauliString> out;
  const int total = 1 << (2 * n);
  for (int code = 0; code < total; ++code) {
    PauliString s(n);
    int c = code;
    for (int q = n - 1; q >= 0; --q) {
      s.set_letter(q, static_cast<Pauli>(c & 3));
      c >>= 2;
    }
    out.push_back(s);
  }
  return out;
}

/// Pauli expansion of a Hermitian matrix: coefficient of X_l is Tr{X_l M}/2^n.
inline WeightedSum pauli_expand(const Eigen::MatrixXcd& m, int n, double drop_tol = 1e-12) {
  WeightedSum out;
  for (const auto& s : all_strings(n)) {
    const Complex c = (s.to_dense().adjoint() * m).trace() / double(1 << n);
    if (std::abs(c) > drop_tol) out.add(s, c.real());
  }
  return out;
}

/// Commutator closure computed by brute force over all 4^n strings.
inline std::vector<PauliString> closure(const HamiltonianModel& model,
                                        const std::vector<PauliString>& seed) {
  std::vector<PauliString> basis = seed;
  std::vector<Eigen::MatrixXcd> dense;
  dense.reserve(basis.size());
  for (const auto& s : basis) dense.push_back(s.to_dense());

  std::vector<PauliString> delta;
  for (const auto& term : model.terms())
    for (const auto& h : term.strings) delta.push_back(h);

  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = basis.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (const auto& h : delta) {
        const Eigen::MatrixXcd comm = dense_commutator_i(h.to_dense(), dense[i]);
        if (comm.norm() < 1e-12) continue;
        const WeightedSum expansion = pauli_expand(comm, model.n());
        for (const auto& [s, c] : expansion) {
          if (std::find(basis.begin(), basis.end(), s) == basis.end()) {
            basis.push_back(s);
            dense.push_back(s.to_dense());
            grew = true;
          }
        }
      }
    }
  }
  return basis;
}

/// Heisenberg-free density-matrix evolution: y(j) = Tr{O rho(j dt)} / 2^n,
/// stepping rho with the exact unitary of the dense Hamiltonian.
inline Eigen::VectorXd evolve_dense(const HamiltonianModel& model, const Eigen::MatrixXcd& rho0,
                                    const Eigen::MatrixXcd& observable, double dt, int n_samples) {
  const Eigen::MatrixXcd h = dense_hamiltonian(model);
  const Eigen::MatrixXcd u = (Complex(0, -1) * h * dt).exp();
  const double dim = double(h.rows());
  Eigen::MatrixXcd rho = rho0;
  Eigen::VectorXd y(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    y(j) = (observable * rho).trace().real() / dim;
    rho = u * rho * u.adjoint();
  }
  return y;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Random non-identity string on n qubits.
inline PauliString random_string(int n, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> dist(0, 3);
  PauliString s(n);
  do {
    for (int q = 0; q < n; ++q) s.set_letter(q, static_cast<Pauli>(dist(gen)));
  } while (s.is_identity());
  return s;
}

}  // namespace qhi::oracle
