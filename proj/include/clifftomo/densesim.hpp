#pragma once

#include <Eigen/Dense>
#include <map>

#include "clifftomo/clifford.hpp"

namespace clifftomo {

// Hard cap for every dense-backend code path.
inline constexpr std::size_t kDenseQubitLimit = 6;

// Tolerance policy for the dense backend, stated once:
// probabilities clamped at -1e-12, equality checks at 1e-9,
// cross-backend point-mass threshold 1 - 1e-10.
inline constexpr double kProbClamp = 1e-12;
inline constexpr double kDenseTol = 1e-9;
inline constexpr double kPointMassThreshold = 1.0 - 1e-10;

// 2^n x 2^n unitary, validated on construction.
class DenseUnitary {
public:
    explicit DenseUnitary(Eigen::MatrixXcd m);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Eigen::MatrixXcd& mat() const { return m_; }

private:
    std::size_t n_;
    Eigen::MatrixXcd m_;
};

// Distribution over the 4^n Bell-basis outcomes, indexed by the 2n-bit
// outcome with bit i of the index holding outcome bit i.
class OutcomeDist {
public:
    OutcomeDist(std::size_t n, std::vector<double> probs);

    std::size_t n() const { return n_; }
    std::size_t size() const { return probs_.size(); }
    double prob(std::size_t index) const { return probs_[index]; }
    double prob(const F2Vec& outcome) const { return probs_[outcome.to_uint()]; }
    F2Vec outcome(std::size_t index) const { return F2Vec::from_uint(2 * n_, index); }

    std::size_t argmax() const;
    F2Vec sample(CtrRng& rng) const;  // inverse CDF in index order

    double total_variation(const OutcomeDist& o) const;

private:
    std::size_t n_;
    std::vector<double> probs_;
};

using OutcomeCounts = std::map<F2Vec, std::size_t>;

// dense Pauli and Clifford realizations
Eigen::MatrixXcd to_matrix(const SignedPauli& p);
// via compile + gate products, phase canonicalized (first nonzero entry of
// column 0 made real-positive)
DenseUnitary to_matrix(const CliffordTableau& t);
Eigen::MatrixXcd gate_matrix(std::size_t n, const Gate& g);

// Twin-U outcome distribution P(K | J=j) = |Tr[U P^j U^T P^K]|^2 / d^2,
// enumerated over all 4^n outcomes. OpenMP-parallel structured-trace kernel.
OutcomeDist twin_u_distribution(const DenseUnitary& u, const F2Vec& j);
// Serial reference: explicit Kronecker-built Pauli matrices and full
// matrix traces. Kept for testing and benchmarking the fast kernel.
OutcomeDist twin_u_distribution_reference(const DenseUnitary& u, const F2Vec& j);

OutcomeCounts twin_u_sample(const DenseUnitary& u, const F2Vec& j, CtrRng& rng,
                            std::size_t shots);

// Choi/Bell outcome distribution P(K) = |Tr[P^K U]|^2 / d^2.
OutcomeDist choi_pauli_distribution(const DenseUnitary& u);
OutcomeDist choi_pauli_distribution_reference(const DenseUnitary& u);

// Phase-insensitive distance sqrt(1 - |Tr[U1 U2^dag]|^2 / d^2).
double distance(const DenseUnitary& u1, const DenseUnitary& u2);

}  // namespace clifftomo
