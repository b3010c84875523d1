#pragma once

#include <stdexcept>
#include <vector>

#include "clifftomo/clifford.hpp"

namespace clifftomo {

// Raised when a measurement that must be deterministic is not; the oracle
// fed to the circuit was not a Clifford.
struct NondeterministicOutcome : std::runtime_error {
    NondeterministicOutcome() : std::runtime_error("measurement outcome is not deterministic") {}
};

// Pure stabilizer state on k qubits: k independent, pairwise commuting
// signed Pauli generators with phases in {0, 2}.
class StabState {
public:
    explicit StabState(std::vector<SignedPauli> gens);

    // |bits>: generator r is (-1)^{bits_r} Z_r
    static StabState basis(const F2Vec& bits);

    std::size_t qubits() const { return k_; }
    const std::vector<SignedPauli>& generators() const { return gens_; }

    void apply(const Gate& g);
    void apply(const GateSeq& seq);

    // conjugate every generator by the Pauli unitary p (sign flips only)
    void apply_pauli(const SignedPauli& p);

    // conjugate the restriction of every generator to `reg` through t
    void apply_clifford(const CliffordTableau& t, const std::vector<std::size_t>& reg);

    // Z-basis readout; throws NondeterministicOutcome if any reduced
    // generator retains X support
    F2Vec measure_all_z_deterministic() const;

    void check_invariants() const;  // commutation + independence, throws on violation

private:
    std::size_t k_;
    std::vector<SignedPauli> gens_;
};

// building blocks shared with the learner's oracle-driven circuits
std::vector<std::size_t> register_range(std::size_t begin, std::size_t n);
void bell_prepare(StabState& st, std::size_t n);    // H on A, then pairwise CNOT
void bell_unprepare(StabState& st, std::size_t n);  // pairwise CNOT, then H on A

// Fig. 1 circuit: Bell-prepare |i,j>, query t on both registers, Bell-measure.
F2Vec run_twin_c(const CliffordTableau& t, const F2Vec& j);

// Fig. 2-style circuit for a known Pauli: Choi state of p, Bell-measure;
// returns the concatenated label (a, b). The sign of p is unobservable.
F2Vec run_choi_pauli(const SignedPauli& p);

}  // namespace clifftomo
