#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "wordint/word.hpp"

namespace wordint {

// Column-major dense real / complex matrices (thin wrappers; Eigen is used
// internally for the linear algebra).
struct RealMatrix {
    int n = 0;
    std::vector<double> a;  // column-major n x n
    double& at(int i, int j) { return a[static_cast<size_t>(j) * n + i]; }
    double at(int i, int j) const { return a[static_cast<size_t>(j) * n + i]; }
};
struct ComplexMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;  // column-major n x n
    std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(j) * n + i]; }
    std::complex<double> at(int i, int j) const {
        return a[static_cast<size_t>(j) * n + i];
    }
};

// Deterministic per-worker RNG stream derived from (seed, worker) via splitmix64.
std::uint64_t stream_seed(std::uint64_t seed, int worker);

// Haar-distributed O(n): Gaussian matrix, QR, R-diagonal sign correction.
RealMatrix haar_orthogonal(int n, std::uint64_t state);
// Haar-distributed Sp(n) as a 2n x 2n complex unitary with A J A^T = J,
// J = [[0, I], [-I, 0]] (quaternionic Gram-Schmidt on a quaternionic Gaussian).
ComplexMatrix haar_symplectic(int n, std::uint64_t state);

// Residuals for the membership checks ||A^T A - I|| resp. ||A* A - I||, ||A J A^T - J||
// (max absolute entry).
double orthogonality_residual(const RealMatrix& m);
double symplectic_residual(const ComplexMatrix& m);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

// Monte Carlo estimate of E prod_i Tr(w_i(g)) over O(n) or Sp(n) (group 'O'/'S';
// for Sp, n is the quaternionic rank and matrices are 2n x 2n). Deterministic for a
// fixed (seed, workers); per-worker partial sums are combined by pairwise summation.
McEstimate mc_estimate(const std::vector<Word>& words, char group, int n,
                       std::uint64_t samples, std::uint64_t seed, int workers = 1);

}  // namespace wordint
