#include "clifftomo/pauli.hpp"

#include <stdexcept>

namespace clifftomo {

SignedPauli::SignedPauli(F2Vec a_, F2Vec b_, int phase_)
    : n(a_.size()), a(std::move(a_)), b(std::move(b_)), phase(((phase_ % 4) + 4) % 4) {
    if (a.size() != b.size()) throw std::invalid_argument("SignedPauli: a/b length mismatch");
}

SignedPauli SignedPauli::identity(std::size_t n) { return {F2Vec(n), F2Vec(n), 0}; }

SignedPauli SignedPauli::single_z(std::size_t n, std::size_t q) {
    return {F2Vec::unit(n, q), F2Vec(n), 0};
}

SignedPauli SignedPauli::single_x(std::size_t n, std::size_t q) {
    return {F2Vec(n), F2Vec::unit(n, q), 0};
}

// P^{ab} P^{cd} = i^t P^{a^c, b^d} with
//   t = (a^c).(b^d) - a.b - c.d + 2 b.c   (integer dots, mod 4)
SignedPauli pauli_mul(const SignedPauli& p, const SignedPauli& q) {
    if (p.n != q.n) throw std::invalid_argument("pauli_mul: size mismatch");
    F2Vec a = p.a, b = p.b;
    a.xor_with(q.a);
    b.xor_with(q.b);
    int t = static_cast<int>((a.dot_count(b) + 4 * p.n - p.a.dot_count(p.b) -
                              q.a.dot_count(q.b) + 2 * p.b.dot_count(q.a)) %
                             4);
    return {std::move(a), std::move(b), p.phase + q.phase + t};
}

bool commutes(const SignedPauli& p, const SignedPauli& q) {
    if (p.n != q.n) throw std::invalid_argument("commutes: size mismatch");
    return (p.a.dot(q.b) ^ p.b.dot(q.a)) == 0;
}

int pauli_mul_phase_1q(int p, int q) {
    // labels 2a+b: 0=I, 1=X, 2=Z, 3=Y
    static constexpr int table[4][4] = {
        {0, 0, 0, 0},
        {0, 0, 3, 1},
        {0, 1, 0, 3},
        {0, 3, 1, 0},
    };
    return table[p][q];
}

std::string SignedPauli::to_string() const {
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase];
    for (std::size_t i = 0; i < n; ++i) {
        int label = 2 * a.get(i) + b.get(i);
        s += "IXZY"[label];
    }
    return s;
}

SignedPauli SignedPauli::parse(const std::string& s) {
    std::size_t pos = 0;
    int phase = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        phase = (s[pos] == '-') ? 2 : 0;
        ++pos;
        if (pos < s.size() && s[pos] == 'i') {
            phase += 1;
            ++pos;
        }
    }
    std::size_t n = s.size() - pos;
    if (n == 0) throw std::invalid_argument("SignedPauli::parse: empty label");
    F2Vec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (s[pos + i]) {
            case 'I': break;
            case 'X': b.set(i, true); break;
            case 'Z': a.set(i, true); break;
            case 'Y': a.set(i, true); b.set(i, true); break;
            default: throw std::invalid_argument("SignedPauli::parse: bad character");
        }
    }
    return {std::move(a), std::move(b), phase};
}

}  // namespace clifftomo
