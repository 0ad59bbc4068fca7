#include "wordint/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "wordint/errors.hpp"
#include "wordint/surface.hpp"

namespace wordint {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using CD = std::complex<double>;

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

MatrixXd haar_orthogonal_eigen(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXd g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<MatrixXd> qr(g);
    MatrixXd q = qr.householderQ();
    MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the gauge: make the R diagonal positive so Q is Haar distributed.
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

// Quaternionic structure map: psi(u; w) = (-conj(w); conj(u)). If the first n
// columns are orthonormal and closed under nothing else, setting column n+j to
// psi(column j) produces a unitary with the block form [[A, B], [-conj B, conj A]],
// which is exactly U(2n) intersect {A J A^T = J}.
Eigen::VectorXcd psi(const Eigen::VectorXcd& v) {
    int n = static_cast<int>(v.size()) / 2;
    Eigen::VectorXcd out(2 * n);
    out.head(n) = -v.tail(n).conjugate();
    out.tail(n) = v.head(n).conjugate();
    return out;
}

MatrixXcd haar_symplectic_eigen(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXcd u(2 * n, 2 * n);
    // Quaternionic Gram-Schmidt: draw Gaussian columns, orthonormalize each against
    // all previously fixed columns and their psi-partners.
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXcd v(2 * n);
        for (;;) {
            for (int i = 0; i < 2 * n; ++i) v(i) = CD(gauss(rng), gauss(rng));
            for (int t = 0; t < j; ++t) {
                v -= u.col(t).dot(v) * u.col(t);
                v -= u.col(n + t).dot(v) * u.col(n + t);
            }
            // psi(v) is automatically orthogonal to v; normalize.
            double norm = v.norm();
            if (norm > 1e-8) {
                v /= norm;
                break;
            }
        }
        u.col(j) = v;
        u.col(n + j) = psi(v);
    }
    return u;
}

template <typename Mat>
Mat word_matrix(const Word& w, const std::vector<Mat>& gens_direct,
                const std::vector<Mat>& gens_inverse) {
    Mat acc = (w.letters[0] > 0) ? gens_direct[w.letters[0] - 1]
                                 : gens_inverse[-w.letters[0] - 1];
    for (size_t t = 1; t < w.letters.size(); ++t) {
        int v = w.letters[t];
        acc = acc * (v > 0 ? gens_direct[v - 1] : gens_inverse[-v - 1]);
    }
    return acc;
}

double pairwise_sum(std::vector<double>& v, size_t lo, size_t hi) {
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_sum(std::vector<double> v) {
    if (v.empty()) return 0.0;
    return pairwise_sum(v, 0, v.size());
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, int worker) {
    std::uint64_t x = seed;
    std::uint64_t h = 0;
    for (int i = 0; i <= worker; ++i) h = splitmix64(x);
    return h;
}

RealMatrix haar_orthogonal(int n, std::uint64_t state) {
    std::mt19937_64 rng(state);
    MatrixXd q = haar_orthogonal_eigen(n, rng);
    RealMatrix out;
    out.n = n;
    out.a.assign(q.data(), q.data() + static_cast<size_t>(n) * n);
    return out;
}

ComplexMatrix haar_symplectic(int n, std::uint64_t state) {
    std::mt19937_64 rng(state);
    MatrixXcd u = haar_symplectic_eigen(n, rng);
    ComplexMatrix out;
    out.n = 2 * n;
    out.a.assign(u.data(), u.data() + static_cast<size_t>(2 * n) * 2 * n);
    return out;
}

double orthogonality_residual(const RealMatrix& m) {
    Eigen::Map<const MatrixXd> q(m.a.data(), m.n, m.n);
    return (q.transpose() * q - MatrixXd::Identity(m.n, m.n)).cwiseAbs().maxCoeff();
}

double symplectic_residual(const ComplexMatrix& m) {
    Eigen::Map<const MatrixXcd> u(m.a.data(), m.n, m.n);
    int n = m.n / 2;
    MatrixXcd j = MatrixXcd::Zero(m.n, m.n);
    j.block(0, n, n, n) = MatrixXcd::Identity(n, n);
    j.block(n, 0, n, n) = -MatrixXcd::Identity(n, n);
    double unitary =
        (u.adjoint() * u - MatrixXcd::Identity(m.n, m.n)).cwiseAbs().maxCoeff();
    double sympl = (u * j * u.transpose() - j).cwiseAbs().maxCoeff();
    return std::max(unitary, sympl);
}

McEstimate mc_estimate(const std::vector<Word>& words, char group, int n,
                       std::uint64_t samples, std::uint64_t seed, int workers) {
    if (words.empty()) throw InternalError("mc_estimate: empty tuple");
    if (workers < 1) workers = 1;
    int ngen = 0;
    for (const auto& w : words)
        for (int v : w.letters) ngen = std::max(ngen, v > 0 ? v : -v);
    if (ngen == 0) throw InternalError("mc_estimate: trivial words");

    std::vector<std::vector<double>> block_sums(workers), block_sumsq(workers);
    auto run_worker = [&](int wk) {
        std::uint64_t count = samples / workers +
                              (static_cast<std::uint64_t>(wk) < samples % workers ? 1 : 0);
        std::mt19937_64 rng(stream_seed(seed, wk));
        double bsum = 0.0, bsumsq = 0.0;
        std::uint64_t in_block = 0;
        constexpr std::uint64_t kBlock = 1024;
        bool checked = false;
        for (std::uint64_t s = 0; s < count; ++s) {
            double value = 1.0;
            if (group == 'O') {
                std::vector<MatrixXd> gd, gi;
                for (int g = 0; g < ngen; ++g) {
                    gd.push_back(haar_orthogonal_eigen(n, rng));
                    gi.push_back(gd.back().transpose());
                }
                if (!checked) {
                    MatrixXd q = gd[0];
                    double res = (q.transpose() * q - MatrixXd::Identity(n, n))
                                     .cwiseAbs()
                                     .maxCoeff();
                    if (res > 1e-10)
                        throw InternalError("Haar O(n) sample failed membership check");
                    checked = true;
                }
                for (const auto& w : words) value *= word_matrix(w, gd, gi).trace();
            } else {
                std::vector<MatrixXcd> gd, gi;
                for (int g = 0; g < ngen; ++g) {
                    gd.push_back(haar_symplectic_eigen(n, rng));
                    gi.push_back(gd.back().adjoint());
                }
                if (!checked) {
                    ComplexMatrix m;
                    m.n = 2 * n;
                    m.a.assign(gd[0].data(),
                               gd[0].data() + static_cast<size_t>(2 * n) * 2 * n);
                    if (symplectic_residual(m) > 1e-10)
                        throw InternalError("Haar Sp(n) sample failed membership check");
                    checked = true;
                }
                for (const auto& w : words)
                    value *= word_matrix(w, gd, gi).trace().real();
            }
            bsum += value;
            bsumsq += value * value;
            if (++in_block == kBlock) {
                block_sums[wk].push_back(bsum);
                block_sumsq[wk].push_back(bsumsq);
                bsum = bsumsq = 0.0;
                in_block = 0;
            }
        }
        if (in_block > 0) {
            block_sums[wk].push_back(bsum);
            block_sumsq[wk].push_back(bsumsq);
        }
    };
    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int wk = 0; wk < workers; ++wk) threads.emplace_back(run_worker, wk);
        for (auto& t : threads) t.join();
    }
    std::vector<double> all_sums, all_sumsq;
    for (int wk = 0; wk < workers; ++wk) {
        all_sums.insert(all_sums.end(), block_sums[wk].begin(), block_sums[wk].end());
        all_sumsq.insert(all_sumsq.end(), block_sumsq[wk].begin(),
                         block_sumsq[wk].end());
    }
    double total = pairwise_sum(std::move(all_sums));
    double total_sq = pairwise_sum(std::move(all_sumsq));
    McEstimate est;
    est.samples = samples;
    est.mean = total / static_cast<double>(samples);
    double var =
        std::max(0.0, total_sq / static_cast<double>(samples) - est.mean * est.mean);
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    return est;
}

}  // namespace wordint
