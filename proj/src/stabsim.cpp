#include "clifftomo/stabsim.hpp"

namespace clifftomo {

StabState::StabState(std::vector<SignedPauli> gens) : k_(0), gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("StabState: no generators");
    k_ = gens_[0].n;
    if (gens_.size() != k_) throw std::invalid_argument("StabState: need k generators on k qubits");
    check_invariants();
}

StabState StabState::basis(const F2Vec& bits) {
    std::size_t k = bits.size();
    if (k == 0) throw std::invalid_argument("StabState::basis: empty bit string");
    std::vector<SignedPauli> gens;
    gens.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        SignedPauli g = SignedPauli::single_z(k, r);
        if (bits.get(r)) g.phase = 2;
        gens.push_back(std::move(g));
    }
    return StabState(std::move(gens));
}

void StabState::apply(const Gate& g) {
    if (g.q0 >= k_ || (g.kind == GateKind::CNOT && g.q1 >= k_))
        throw std::out_of_range("StabState::apply: qubit index out of range");
    for (auto& p : gens_) apply_gate(p, g);
}

void StabState::apply(const GateSeq& seq) {
    for (const Gate& g : seq) apply(g);
}

void StabState::apply_pauli(const SignedPauli& p) {
    if (p.n != k_) throw std::invalid_argument("StabState::apply_pauli: size mismatch");
    for (auto& g : gens_)
        if (!commutes(p, g)) g.phase = (g.phase + 2) % 4;
}

void StabState::apply_clifford(const CliffordTableau& t, const std::vector<std::size_t>& reg) {
    if (reg.size() != t.n())
        throw std::invalid_argument("StabState::apply_clifford: register size mismatch");
    std::vector<bool> seen(k_, false);
    for (auto q : reg) {
        if (q >= k_ || seen[q])
            throw std::invalid_argument("StabState::apply_clifford: bad register");
        seen[q] = true;
    }
    std::size_t n = t.n();
    for (auto& g : gens_) {
        F2Vec ra(n), rb(n);
        for (std::size_t i = 0; i < n; ++i) {
            ra.set(i, g.a.get(reg[i]));
            rb.set(i, g.b.get(reg[i]));
        }
        SignedPauli out = conjugate(t, SignedPauli(std::move(ra), std::move(rb), 0));
        for (std::size_t i = 0; i < n; ++i) {
            g.a.set(reg[i], out.a.get(i));
            g.b.set(reg[i], out.b.get(i));
        }
        g.phase = (g.phase + out.phase) % 4;
    }
}

F2Vec StabState::measure_all_z_deterministic() const {
    // stacked (x | z) tableau with the sign column; signed elimination is
    // exact here because a zero reduced X block implies every row operation
    // combined Z-type rows only
    F2Mat m(k_, 2 * k_);
    F2Vec signs(k_);
    for (std::size_t r = 0; r < k_; ++r) {
        const SignedPauli& g = gens_[r];
        if (!g.hermitian()) throw std::logic_error("StabState: non-hermitian generator");
        for (std::size_t c = 0; c < k_; ++c) {
            m.set(r, c, g.b.get(c));
            m.set(r, k_ + c, g.a.get(c));
        }
        signs.set(r, g.sign_bit());
    }
    auto [red, s] = row_reduce_signed(std::move(m), std::move(signs));
    for (std::size_t r = 0; r < k_; ++r)
        for (std::size_t c = 0; c < k_; ++c)
            if (red.get(r, c)) throw NondeterministicOutcome();
    // generators are independent, so the Z block reduces to the identity
    F2Vec out(k_);
    for (std::size_t r = 0; r < k_; ++r) {
        std::size_t pivot = k_;
        for (std::size_t c = 0; c < k_; ++c)
            if (red.get(r, k_ + c)) {
                pivot = c;
                break;
            }
        if (pivot == k_) throw std::logic_error("StabState: rank-deficient generator set");
        out.set(pivot, s.get(r));
    }
    return out;
}

void StabState::check_invariants() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].n != k_) throw std::logic_error("StabState: generator size mismatch");
        if (!gens_[i].hermitian()) throw std::logic_error("StabState: non-hermitian generator");
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!commutes(gens_[i], gens_[j]))
                throw std::logic_error("StabState: generators do not commute");
    }
    F2Mat m(k_, 2 * k_);
    for (std::size_t r = 0; r < k_; ++r)
        for (std::size_t c = 0; c < k_; ++c) {
            m.set(r, c, gens_[r].b.get(c));
            m.set(r, k_ + c, gens_[r].a.get(c));
        }
    auto [red, s] = row_reduce_signed(std::move(m), F2Vec(k_));
    for (std::size_t r = 0; r < k_; ++r)
        if (!red.row(r).any()) throw std::logic_error("StabState: generators not independent");
}

std::vector<std::size_t> register_range(std::size_t begin, std::size_t n) {
    std::vector<std::size_t> reg(n);
    for (std::size_t i = 0; i < n; ++i) reg[i] = begin + i;
    return reg;
}

void bell_prepare(StabState& st, std::size_t n) {
    for (std::size_t r = 0; r < n; ++r) st.apply(Gate::h(r));
    for (std::size_t r = 0; r < n; ++r) st.apply(Gate::cnot(r, n + r));
}

void bell_unprepare(StabState& st, std::size_t n) {
    for (std::size_t r = 0; r < n; ++r) st.apply(Gate::cnot(r, n + r));
    for (std::size_t r = 0; r < n; ++r) st.apply(Gate::h(r));
}

F2Vec run_twin_c(const CliffordTableau& t, const F2Vec& j) {
    std::size_t n = t.n();
    if (j.size() != 2 * n) throw std::invalid_argument("run_twin_c: input length must be 2n");
    StabState st = StabState::basis(j);
    bell_prepare(st, n);
    st.apply_clifford(t, register_range(0, n));
    st.apply_clifford(t, register_range(n, n));
    bell_unprepare(st, n);
    return st.measure_all_z_deterministic();
}

F2Vec run_choi_pauli(const SignedPauli& p) {
    if (!p.hermitian()) throw std::invalid_argument("run_choi_pauli: Pauli must have real sign");
    std::size_t n = p.n;
    StabState st = StabState::basis(F2Vec(2 * n));
    bell_prepare(st, n);
    SignedPauli embedded = SignedPauli::identity(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        embedded.a.set(n + i, p.a.get(i));
        embedded.b.set(n + i, p.b.get(i));
    }
    st.apply_pauli(embedded);
    bell_unprepare(st, n);
    return st.measure_all_z_deterministic();
}

}  // namespace clifftomo
