#include "clifftomo/densesim.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace clifftomo {

namespace {

using Complex = std::complex<double>;

// index bit of basis state c belonging to qubit q (qubit 0 = leftmost
// Kronecker factor = most significant bit)
std::uint64_t qubit_mask(std::size_t n, const F2Vec& bits) {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < n; ++q)
        if (bits.get(q)) m |= 1ULL << (n - 1 - q);
    return m;
}

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Tr[M P^{a,b}] using the sparsity of P: P^{a,b}|c> = (-i)^{a.b} (-1)^{a.(c^b)} |c^b>
Complex trace_with_pauli(const Eigen::MatrixXcd& m, std::size_t n, std::uint64_t mask_a,
                         std::uint64_t mask_b) {
    Complex sum = 0;
    std::uint64_t d = 1ULL << n;
    for (std::uint64_t c = 0; c < d; ++c) {
        Complex v = m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ mask_b));
        if (std::popcount(mask_a & (c ^ mask_b)) & 1)
            sum -= v;
        else
            sum += v;
    }
    return sum * kIPow[(4 - std::popcount(mask_a & mask_b) % 4) % 4];
}

OutcomeDist enumerate_distribution(const Eigen::MatrixXcd& m, std::size_t n) {
    std::size_t outcomes = 1ULL << (2 * n);
    double d2 = std::pow(4.0, static_cast<double>(n));
    std::vector<double> probs(outcomes);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(outcomes); ++idx) {
        F2Vec outcome = F2Vec::from_uint(2 * n, static_cast<std::uint64_t>(idx));
        std::uint64_t mask_a = qubit_mask(n, outcome.slice(0, n));
        std::uint64_t mask_b = qubit_mask(n, outcome.slice(n, n));
        probs[idx] = std::norm(trace_with_pauli(m, n, mask_a, mask_b)) / d2;
    }
    return {n, std::move(probs)};
}

OutcomeDist enumerate_distribution_reference(const Eigen::MatrixXcd& m, std::size_t n) {
    std::size_t outcomes = 1ULL << (2 * n);
    double d2 = std::pow(4.0, static_cast<double>(n));
    std::vector<double> probs(outcomes);
    for (std::size_t idx = 0; idx < outcomes; ++idx) {
        F2Vec outcome = F2Vec::from_uint(2 * n, idx);
        SignedPauli p(outcome.slice(0, n), outcome.slice(n, n), 0);
        probs[idx] = std::norm((m * to_matrix(p)).trace()) / d2;
    }
    return {n, std::move(probs)};
}

void check_dense_limit(std::size_t n, const char* who) {
    if (n > kDenseQubitLimit)
        throw std::invalid_argument(std::string(who) + ": dense backend limited to n <= 6");
}

}  // namespace

DenseUnitary::DenseUnitary(Eigen::MatrixXcd m) : m_(std::move(m)) {
    auto rows = static_cast<std::size_t>(m_.rows());
    if (m_.rows() != m_.cols() || rows == 0 || (rows & (rows - 1)) != 0)
        throw std::invalid_argument("DenseUnitary: dimension must be a power of two");
    n_ = static_cast<std::size_t>(std::countr_zero(rows));
    check_dense_limit(n_, "DenseUnitary");
    Eigen::MatrixXcd gram = m_.adjoint() * m_;
    gram -= Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
    if (gram.cwiseAbs().maxCoeff() > kDenseTol)
        throw std::invalid_argument("DenseUnitary: matrix is not unitary");
}

OutcomeDist::OutcomeDist(std::size_t n, std::vector<double> probs)
    : n_(n), probs_(std::move(probs)) {
    if (probs_.size() != (1ULL << (2 * n)))
        throw std::invalid_argument("OutcomeDist: wrong table size");
    double sum = 0;
    for (auto& p : probs_) {
        if (p < -kProbClamp) throw std::invalid_argument("OutcomeDist: negative probability");
        if (p < 0) p = 0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > kDenseTol)
        throw std::invalid_argument("OutcomeDist: probabilities do not sum to 1");
}

std::size_t OutcomeDist::argmax() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs_.size(); ++i)
        if (probs_[i] > probs_[best]) best = i;
    return best;
}

F2Vec OutcomeDist::sample(CtrRng& rng) const {
    double u = rng.next_double();
    double acc = 0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        acc += probs_[i];
        if (u < acc) return outcome(i);
    }
    return outcome(probs_.size() - 1);
}

double OutcomeDist::total_variation(const OutcomeDist& o) const {
    if (n_ != o.n_) throw std::invalid_argument("total_variation: size mismatch");
    double tv = 0;
    for (std::size_t i = 0; i < probs_.size(); ++i) tv += std::abs(probs_[i] - o.probs_[i]);
    return tv / 2;
}

Eigen::MatrixXcd to_matrix(const SignedPauli& p) {
    check_dense_limit(p.n, "to_matrix(SignedPauli)");
    static const Eigen::Matrix2cd kSingle[4] = {
        (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),                            // I
        (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),                            // X
        (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),                           // Z
        (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),   // Y
    };
    // qubit 0 is the leftmost Kronecker factor
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < p.n; ++q) {
        int label = 2 * p.a.get(q) + p.b.get(q);
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c)
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * kSingle[label];
        out = std::move(next);
    }
    return kIPow[p.phase] * out;
}

Eigen::MatrixXcd gate_matrix(std::size_t n, const Gate& g) {
    check_dense_limit(n, "gate_matrix");
    std::size_t d = 1ULL << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    auto bit = [n](std::size_t q) { return 1ULL << (n - 1 - q); };
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t c = 0; c < d; ++c) {
        switch (g.kind) {
            case GateKind::H: {
                bool set = c & bit(g.q0);
                m(c & ~bit(g.q0), c) += inv_sqrt2;
                m(c | bit(g.q0), c) += set ? -inv_sqrt2 : inv_sqrt2;
                break;
            }
            case GateKind::S:
                m(c, c) = (c & bit(g.q0)) ? Complex(0, 1) : Complex(1, 0);
                break;
            case GateKind::CNOT: {
                std::uint64_t out = (c & bit(g.q0)) ? c ^ bit(g.q1) : c;
                m(out, c) = 1;
                break;
            }
            case GateKind::X:
                m(c ^ bit(g.q0), c) = 1;
                break;
            case GateKind::Z:
                m(c, c) = (c & bit(g.q0)) ? -1 : 1;
                break;
        }
    }
    return m;
}

DenseUnitary to_matrix(const CliffordTableau& t) {
    check_dense_limit(t.n(), "to_matrix(CliffordTableau)");
    std::size_t d = 1ULL << t.n();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
    for (const Gate& g : compile(t)) u = gate_matrix(t.n(), g) * u;
    for (std::uint64_t r = 0; r < d; ++r) {
        Complex v = u(r, 0);
        if (std::abs(v) > 1e-8) {
            u *= std::conj(v) / std::abs(v);
            break;
        }
    }
    return DenseUnitary(std::move(u));
}

OutcomeDist twin_u_distribution(const DenseUnitary& u, const F2Vec& j) {
    std::size_t n = u.n();
    if (j.size() != 2 * n) throw std::invalid_argument("twin_u_distribution: bad input length");
    SignedPauli pj(j.slice(0, n), j.slice(n, n), 0);
    Eigen::MatrixXcd m = u.mat() * to_matrix(pj) * u.mat().transpose();
    return enumerate_distribution(m, n);
}

OutcomeDist twin_u_distribution_reference(const DenseUnitary& u, const F2Vec& j) {
    std::size_t n = u.n();
    if (j.size() != 2 * n)
        throw std::invalid_argument("twin_u_distribution_reference: bad input length");
    SignedPauli pj(j.slice(0, n), j.slice(n, n), 0);
    Eigen::MatrixXcd m = u.mat() * to_matrix(pj) * u.mat().transpose();
    return enumerate_distribution_reference(m, n);
}

OutcomeCounts twin_u_sample(const DenseUnitary& u, const F2Vec& j, CtrRng& rng,
                            std::size_t shots) {
    if (shots == 0) throw std::invalid_argument("twin_u_sample: shots must be >= 1");
    OutcomeDist dist = twin_u_distribution(u, j);
    OutcomeCounts counts;
    for (std::size_t s = 0; s < shots; ++s) ++counts[dist.sample(rng)];
    return counts;
}

OutcomeDist choi_pauli_distribution(const DenseUnitary& u) {
    return enumerate_distribution(u.mat(), u.n());
}

OutcomeDist choi_pauli_distribution_reference(const DenseUnitary& u) {
    return enumerate_distribution_reference(u.mat(), u.n());
}

double distance(const DenseUnitary& u1, const DenseUnitary& u2) {
    if (u1.n() != u2.n()) throw std::invalid_argument("distance: size mismatch");
    double d = static_cast<double>(u1.dim());
    double overlap = std::norm((u1.mat() * u2.mat().adjoint()).trace()) / (d * d);
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

}  // namespace clifftomo
