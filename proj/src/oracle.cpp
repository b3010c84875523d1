#include "clifftomo/oracle.hpp"

namespace clifftomo {

void Oracle::apply_to_state(StabState& state, const std::vector<std::size_t>& reg) {
    if (!tableau_) throw std::logic_error("Oracle: dense oracle cannot run in a stabilizer circuit");
    state.apply_clifford(*tableau_, reg);
    queries_.fetch_add(1, std::memory_order_relaxed);
}

const DenseUnitary& Oracle::unitary() const {
    if (!dense_) throw std::logic_error("Oracle: no dense backend");
    return *dense_;
}

const OutcomeDist& Oracle::twin_distribution(const F2Vec& j) {
    std::lock_guard lock(cache_mutex_);
    auto& slot = twin_cache_[j.to_uint()];
    if (!slot) slot = std::make_unique<OutcomeDist>(twin_u_distribution(unitary(), j));
    return *slot;
}

F2Vec Oracle::sample_twin(const F2Vec& j, CtrRng& rng) {
    const OutcomeDist& dist = twin_distribution(j);
    queries_.fetch_add(2, std::memory_order_relaxed);
    return dist.sample(rng);
}

const OutcomeDist& Oracle::choi_distribution(const Eigen::MatrixXcd& left) {
    std::lock_guard lock(cache_mutex_);
    if (!choi_cache_ || choi_cache_left_.rows() != left.rows() || choi_cache_left_ != left) {
        choi_cache_ = std::make_unique<OutcomeDist>(
            choi_pauli_distribution(DenseUnitary(left * unitary().mat())));
        choi_cache_left_ = left;
    }
    return *choi_cache_;
}

F2Vec Oracle::sample_choi(const Eigen::MatrixXcd& left, CtrRng& rng) {
    const OutcomeDist& dist = choi_distribution(left);
    queries_.fetch_add(1, std::memory_order_relaxed);
    return dist.sample(rng);
}

Oracle make_clifford_oracle(CliffordTableau t) {
    Oracle o;
    o.n_ = t.n();
    o.tableau_ = std::move(t);
    return o;
}

Oracle make_dense_oracle(DenseUnitary u) {
    Oracle o;
    o.n_ = u.n();
    o.dense_ = std::move(u);
    return o;
}

std::pair<Oracle, DenseUnitary> make_perturbed_clifford(const CliffordTableau& t, double eps,
                                                        CtrRng& rng) {
    if (eps < 0 || eps >= uniqueness_radius(2))
        throw std::invalid_argument("make_perturbed_clifford: eps must lie in [0, sqrt(2)/4)");
    std::size_t n = t.n();
    std::size_t d = 1ULL << n;

    // uniform non-identity Pauli label
    std::uint64_t label = 1 + rng.next_below((1ULL << (2 * n)) - 1);
    F2Vec bits = F2Vec::from_uint(2 * n, label);
    SignedPauli p(bits.slice(0, n), bits.slice(n, n), 0);

    double theta = std::asin(eps);
    Eigen::MatrixXcd rot =
        std::cos(theta) * Eigen::MatrixXcd::Identity(d, d) -
        std::complex<double>(0, 1) * std::sin(theta) * to_matrix(p);
    DenseUnitary truth(to_matrix(t).mat() * rot);
    Oracle o = make_dense_oracle(truth);
    return {std::move(o), std::move(truth)};
}

}  // namespace clifftomo
