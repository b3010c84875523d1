#pragma once

#include <string>

#include "clifftomo/f2la.hpp"

namespace clifftomo {

// n-qubit Pauli i^phase * P^{a,b}, with P^{a,b} = (-i)^{a.b} prod_i Z_i^{a_i} X_i^{b_i}.
// a holds the Z exponents, b the X exponents, phase is the exponent of i mod 4.
struct SignedPauli {
    std::size_t n = 0;
    F2Vec a;  // Z part
    F2Vec b;  // X part
    int phase = 0;

    SignedPauli() = default;
    SignedPauli(F2Vec a_, F2Vec b_, int phase_ = 0);
    static SignedPauli identity(std::size_t n);
    static SignedPauli single_z(std::size_t n, std::size_t q);
    static SignedPauli single_x(std::size_t n, std::size_t q);

    bool is_identity_label() const { return !a.any() && !b.any(); }
    bool hermitian() const { return phase % 2 == 0; }
    bool sign_bit() const { return phase == 2; }  // (-1)^bit for hermitian Paulis

    bool operator==(const SignedPauli& o) const {
        return n == o.n && a == o.a && b == o.b && phase == o.phase;
    }
    bool operator!=(const SignedPauli& o) const { return !(*this == o); }
    bool same_label(const SignedPauli& o) const { return a == o.a && b == o.b; }

    // e.g. "-iYZ": optional prefix in {+,-,+i,-i}, then one of IXYZ per qubit
    std::string to_string() const;
    static SignedPauli parse(const std::string& s);
};

SignedPauli pauli_mul(const SignedPauli& p, const SignedPauli& q);
bool commutes(const SignedPauli& p, const SignedPauli& q);

// phase exponent t in P^{a1b1} P^{c1d1} = i^t P^{a1^c1, b1^d1} for single-qubit
// labels encoded as 2a+b
int pauli_mul_phase_1q(int p, int q);

}  // namespace clifftomo
