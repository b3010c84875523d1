#pragma once

#include <string>
#include <vector>

#include "clifftomo/pauli.hpp"

namespace clifftomo {

enum class GateKind { H, S, CNOT, X, Z };

struct Gate {
    GateKind kind;
    std::size_t q0;
    std::size_t q1 = 0;  // CNOT target

    static Gate h(std::size_t q) { return {GateKind::H, q}; }
    static Gate s(std::size_t q) { return {GateKind::S, q}; }
    static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, c, t}; }
    static Gate x(std::size_t q) { return {GateKind::X, q}; }
    static Gate z(std::size_t q) { return {GateKind::Z, q}; }

    bool operator==(const Gate&) const = default;
};

using GateSeq = std::vector<Gate>;

// Exact conjugation p -> U p U^dagger for a single elementary gate.
void apply_gate(SignedPauli& p, const Gate& g);

// A Clifford up to global phase: C Z_i C^dag = (-1)^{f_i} P(col i of s) and
// C X_i C^dag = (-1)^{h_i} P(col n+i of s).
class CliffordTableau {
public:
    CliffordTableau(SymplecticMat s, F2Vec f, F2Vec h);
    static CliffordTableau identity(std::size_t n);
    static CliffordTableau from_gate(std::size_t n, const Gate& g);
    static CliffordTableau from_gates(std::size_t n, const GateSeq& seq);

    std::size_t n() const { return n_; }
    const SymplecticMat& s() const { return s_; }
    const F2Vec& f() const { return f_; }
    const F2Vec& h() const { return h_; }

    // image of Z_q / X_q under conjugation, as a SignedPauli
    SignedPauli z_image(std::size_t q) const;
    SignedPauli x_image(std::size_t q) const;

    std::string to_string() const;  // "n=<count>" header + 2n signed Pauli rows
    static CliffordTableau parse(const std::string& text);

private:
    std::size_t n_;
    SymplecticMat s_;
    F2Vec f_, h_;
};

SignedPauli conjugate(const CliffordTableau& t, const SignedPauli& p);
CliffordTableau compose(const CliffordTableau& t1, const CliffordTableau& t2);
CliffordTableau inverse(const CliffordTableau& t);
bool equal_up_to_phase(const CliffordTableau& t1, const CliffordTableau& t2);

// Lemma-3 labels: C^* = e^{i theta} C P^{alpha,beta} with alpha_i = c_i.d_i,
// beta_i = a_i.b_i.
std::pair<F2Vec, F2Vec> conjugate_transform(const CliffordTableau& t);

// Gate sequence whose replay from the identity tableau reproduces t exactly.
// O(n^2) gates.
GateSeq compile(const CliffordTableau& t);

CliffordTableau random_clifford(std::size_t n, CtrRng& rng);

}  // namespace clifftomo
