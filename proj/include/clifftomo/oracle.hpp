#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "clifftomo/densesim.hpp"
#include "clifftomo/stabsim.hpp"

namespace clifftomo {

// Uniqueness radius eps^(k) = sqrt(2)/2^k for the closest level-k element.
inline double uniqueness_radius(int level) { return std::sqrt(2.0) / std::pow(2.0, level); }

// The unknown unitary under test. Every application of the unitary bumps the
// query counter by exactly one; a Twin circuit run therefore costs two.
class Oracle {
public:
    Oracle(Oracle&& o) noexcept
        : n_(o.n_),
          tableau_(std::move(o.tableau_)),
          dense_(std::move(o.dense_)),
          queries_(o.queries_.load()),
          twin_cache_(std::move(o.twin_cache_)),
          choi_cache_(std::move(o.choi_cache_)),
          choi_cache_left_(std::move(o.choi_cache_left_)) {}
    Oracle(const Oracle&) = delete;
    Oracle& operator=(const Oracle&) = delete;
    Oracle& operator=(Oracle&&) = delete;

    std::size_t n() const { return n_; }
    std::uint64_t queries() const { return queries_.load(); }

    bool is_tableau() const { return tableau_.has_value(); }
    bool is_dense() const { return dense_.has_value(); }

    // --- tableau backend ---
    // apply the unknown Clifford to `reg` inside a stabilizer circuit (one query)
    void apply_to_state(StabState& state, const std::vector<std::size_t>& reg);

    // --- dense backend ---
    const DenseUnitary& unitary() const;
    // one Twin-U shot on input j (two queries); the outcome distribution is
    // enumerated once per distinct input and cached
    F2Vec sample_twin(const F2Vec& j, CtrRng& rng);
    // warm the cache so concurrent sample_twin calls only read it
    const OutcomeDist& twin_distribution(const F2Vec& j);
    // one Choi shot of (left * U), e.g. left = compiled inverse of the
    // learned quotient element (one query)
    F2Vec sample_choi(const Eigen::MatrixXcd& left, CtrRng& rng);
    const OutcomeDist& choi_distribution(const Eigen::MatrixXcd& left);

    friend Oracle make_clifford_oracle(CliffordTableau t);
    friend std::pair<Oracle, DenseUnitary> make_perturbed_clifford(const CliffordTableau& t,
                                                                   double eps, CtrRng& rng);
    friend Oracle make_dense_oracle(DenseUnitary u);

private:
    Oracle() = default;
    std::size_t n_ = 0;
    std::optional<CliffordTableau> tableau_;
    std::optional<DenseUnitary> dense_;
    std::atomic<std::uint64_t> queries_{0};

    std::mutex cache_mutex_;
    std::unordered_map<std::uint64_t, std::unique_ptr<OutcomeDist>> twin_cache_;
    std::unique_ptr<OutcomeDist> choi_cache_;
    Eigen::MatrixXcd choi_cache_left_;
};

Oracle make_clifford_oracle(CliffordTableau t);
Oracle make_dense_oracle(DenseUnitary u);

// U = C exp(-i theta P) with theta = asin(eps) and P a uniformly random
// non-identity Pauli, so distance(U, C) = eps exactly. Requires
// eps < sqrt(2)/4, the uniqueness radius at hierarchy level 2. The returned
// unitary is the ground truth for test assertions only.
std::pair<Oracle, DenseUnitary> make_perturbed_clifford(const CliffordTableau& t, double eps,
                                                        CtrRng& rng);

}  // namespace clifftomo
