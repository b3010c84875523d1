#pragma once

#include <map>
#include <optional>

#include "clifftomo/oracle.hpp"

namespace clifftomo {

// Raised (exact path) or reported as failure (noisy path) when the assembled
// column matrix is not symplectic, i.e. the oracle broke its promise.
struct SymplecticViolation : std::runtime_error {
    SymplecticViolation() : std::runtime_error("assembled matrix is not symplectic") {}
};

struct LearnParams {
    double eps = 0.0;    // promised distance bound, < sqrt(2)/4
    double delta = 0.05; // overall failure budget

    LearnParams(double eps_, double delta_);
    double task_delta(std::size_t n) const { return delta / (2.0 * n + 2.0); }
};

// One Twin-circuit learning task: input, winning outcome, vote histogram
// (a single entry in the exact regime).
struct TwinRecord {
    F2Vec j;
    F2Vec k;
    OutcomeCounts counts;
};

struct LearnReport {
    std::optional<CliffordTableau> recovered;
    std::uint64_t queries = 0;
    std::size_t stage1_samples = 0;  // per input
    std::size_t stage2_samples = 0;
    bool success = false;
    std::uint64_t seed = 0;
    std::vector<TwinRecord> stage1;
    TwinRecord stage2;
};

// Hoeffding vote count: N = ceil(ln(2/task_delta) / (2 margin^2)), bumped to
// odd so a two-way plurality cannot tie. Throws std::domain_error on a
// nonpositive margin (the promise puts the task outside the learnable regime).
std::size_t hoeffding_samples(double task_delta, double margin);

// Plurality winner; ties broken lexicographically by bit string.
F2Vec majority(const OutcomeCounts& counts);

// Deterministic tomography of an exact Clifford oracle: 4n+3 queries.
LearnReport learn_clifford(Oracle& oracle);

// Majority-vote identification of the closest Pauli to a dense oracle.
std::pair<F2Vec, F2Vec> learn_pauli_noisy(Oracle& oracle, const LearnParams& params,
                                          std::uint64_t seed);

// Majority-vote recovery of the closest Clifford to a dense oracle.
LearnReport learn_clifford_noisy(Oracle& oracle, const LearnParams& params, std::uint64_t seed);

}  // namespace clifftomo
