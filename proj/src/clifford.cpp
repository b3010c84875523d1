#include "clifftomo/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace clifftomo {

void apply_gate(SignedPauli& p, const Gate& g) {
    switch (g.kind) {
        case GateKind::H: {
            bool za = p.a.get(g.q0), xb = p.b.get(g.q0);
            p.a.set(g.q0, xb);
            p.b.set(g.q0, za);
            if (za && xb) p.phase = (p.phase + 2) % 4;
            break;
        }
        case GateKind::S: {
            bool za = p.a.get(g.q0), xb = p.b.get(g.q0);
            if (xb) {
                p.a.flip(g.q0);
                if (za) p.phase = (p.phase + 2) % 4;
            }
            break;
        }
        case GateKind::CNOT: {
            if (g.q0 == g.q1) throw std::invalid_argument("apply_gate: CNOT control==target");
            int ac = p.a.get(g.q0), bc = p.b.get(g.q0);
            int at = p.a.get(g.q1), bt = p.b.get(g.q1);
            int nac = ac ^ at, nbt = bt ^ bc;
            p.a.set(g.q0, nac);
            p.b.set(g.q1, nbt);
            int d = (nac & bc) + (at & nbt) - (ac & bc) - (at & bt);
            p.phase = (p.phase + d + 8) % 4;
            break;
        }
        case GateKind::X:
            if (p.a.get(g.q0)) p.phase = (p.phase + 2) % 4;
            break;
        case GateKind::Z:
            if (p.b.get(g.q0)) p.phase = (p.phase + 2) % 4;
            break;
    }
}

CliffordTableau::CliffordTableau(SymplecticMat s, F2Vec f, F2Vec h)
    : n_(s.n()), s_(std::move(s)), f_(std::move(f)), h_(std::move(h)) {
    if (f_.size() != n_ || h_.size() != n_)
        throw std::invalid_argument("CliffordTableau: sign vector length mismatch");
}

CliffordTableau CliffordTableau::identity(std::size_t n) {
    return {SymplecticMat::identity(n), F2Vec(n), F2Vec(n)};
}

SignedPauli CliffordTableau::z_image(std::size_t q) const {
    const F2Mat& m = s_.mat();
    F2Vec a(n_), b(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        a.set(r, m.get(r, q));
        b.set(r, m.get(n_ + r, q));
    }
    return {std::move(a), std::move(b), f_.get(q) ? 2 : 0};
}

SignedPauli CliffordTableau::x_image(std::size_t q) const {
    const F2Mat& m = s_.mat();
    F2Vec a(n_), b(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        a.set(r, m.get(r, n_ + q));
        b.set(r, m.get(n_ + r, n_ + q));
    }
    return {std::move(a), std::move(b), h_.get(q) ? 2 : 0};
}

namespace {

CliffordTableau tableau_from_images(std::size_t n, const std::vector<SignedPauli>& zimg,
                                    const std::vector<SignedPauli>& ximg) {
    F2Mat m(2 * n, 2 * n);
    F2Vec f(n), h(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (!zimg[q].hermitian() || !ximg[q].hermitian())
            throw std::logic_error("tableau_from_images: non-hermitian image");
        for (std::size_t r = 0; r < n; ++r) {
            m.set(r, q, zimg[q].a.get(r));
            m.set(n + r, q, zimg[q].b.get(r));
            m.set(r, n + q, ximg[q].a.get(r));
            m.set(n + r, n + q, ximg[q].b.get(r));
        }
        f.set(q, zimg[q].sign_bit());
        h.set(q, ximg[q].sign_bit());
    }
    return {SymplecticMat(std::move(m)), std::move(f), std::move(h)};
}

std::pair<std::vector<SignedPauli>, std::vector<SignedPauli>> identity_images(std::size_t n) {
    std::vector<SignedPauli> zimg, ximg;
    zimg.reserve(n);
    ximg.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        zimg.push_back(SignedPauli::single_z(n, q));
        ximg.push_back(SignedPauli::single_x(n, q));
    }
    return {std::move(zimg), std::move(ximg)};
}

}  // namespace

CliffordTableau CliffordTableau::from_gate(std::size_t n, const Gate& g) {
    return from_gates(n, {g});
}

CliffordTableau CliffordTableau::from_gates(std::size_t n, const GateSeq& seq) {
    auto [zimg, ximg] = identity_images(n);
    for (const Gate& g : seq) {
        for (auto& p : zimg) apply_gate(p, g);
        for (auto& p : ximg) apply_gate(p, g);
    }
    return tableau_from_images(n, zimg, ximg);
}

SignedPauli conjugate(const CliffordTableau& t, const SignedPauli& p) {
    if (t.n() != p.n) throw std::invalid_argument("conjugate: size mismatch");
    // p = i^phase (-i)^{a.b} prod_i Z_i^{a_i} X_i^{b_i}; conjugate factor by factor
    int k0 = (p.phase + 4 - static_cast<int>(p.a.dot_count(p.b) % 4)) % 4;
    SignedPauli acc = SignedPauli::identity(p.n);
    acc.phase = k0;
    for (std::size_t i = 0; i < p.n; ++i) {
        if (p.a.get(i)) acc = pauli_mul(acc, t.z_image(i));
        if (p.b.get(i)) acc = pauli_mul(acc, t.x_image(i));
    }
    return acc;
}

CliffordTableau compose(const CliffordTableau& t1, const CliffordTableau& t2) {
    if (t1.n() != t2.n()) throw std::invalid_argument("compose: size mismatch");
    std::size_t n = t1.n();
    std::vector<SignedPauli> zimg, ximg;
    zimg.reserve(n);
    ximg.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        zimg.push_back(conjugate(t1, t2.z_image(q)));
        ximg.push_back(conjugate(t1, t2.x_image(q)));
    }
    return tableau_from_images(n, zimg, ximg);
}

CliffordTableau inverse(const CliffordTableau& t) {
    std::size_t n = t.n();
    SymplecticMat sinv = t.s().inverse();
    const F2Mat& m = sinv.mat();
    // conjugate each inverse-image label forward through t to read the sign
    F2Vec f(n), h(n);
    for (std::size_t q = 0; q < 2 * n; ++q) {
        F2Vec a(n), b(n);
        for (std::size_t r = 0; r < n; ++r) {
            a.set(r, m.get(r, q));
            b.set(r, m.get(n + r, q));
        }
        SignedPauli back = conjugate(t, SignedPauli(std::move(a), std::move(b), 0));
        if (!back.hermitian()) throw std::logic_error("inverse: non-hermitian roundtrip");
        if (q < n)
            f.set(q, back.sign_bit());
        else
            h.set(q - n, back.sign_bit());
    }
    return {std::move(sinv), std::move(f), std::move(h)};
}

bool equal_up_to_phase(const CliffordTableau& t1, const CliffordTableau& t2) {
    if (t1.n() != t2.n()) throw std::invalid_argument("equal_up_to_phase: size mismatch");
    return t1.s() == t2.s() && t1.f() == t2.f() && t1.h() == t2.h();
}

std::pair<F2Vec, F2Vec> conjugate_transform(const CliffordTableau& t) {
    std::size_t n = t.n();
    F2Vec alpha(n), beta(n);
    for (std::size_t q = 0; q < n; ++q) {
        SignedPauli zi = t.z_image(q), xi = t.x_image(q);
        beta.set(q, zi.a.dot(zi.b));
        alpha.set(q, xi.a.dot(xi.b));
    }
    return {std::move(alpha), std::move(beta)};
}

GateSeq compile(const CliffordTableau& t) {
    std::size_t n = t.n();
    std::vector<SignedPauli> zimg, ximg;
    zimg.reserve(n);
    ximg.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        zimg.push_back(t.z_image(q));
        ximg.push_back(t.x_image(q));
    }
    GateSeq applied;
    auto emit = [&](Gate g) {
        applied.push_back(g);
        for (auto& p : zimg) apply_gate(p, g);
        for (auto& p : ximg) apply_gate(p, g);
    };

    for (std::size_t q = 0; q < n; ++q) {
        // bring the X_q image to +/-X_q
        SignedPauli& v = ximg[q];
        if (!v.b.any()) {
            for (std::size_t r = q; r < n; ++r)
                if (v.a.get(r)) {
                    emit(Gate::h(r));
                    break;
                }
        }
        if (!v.b.get(q)) {
            for (std::size_t r = q + 1; r < n; ++r)
                if (v.b.get(r)) {
                    emit(Gate::cnot(q, r));
                    emit(Gate::cnot(r, q));
                    emit(Gate::cnot(q, r));
                    break;
                }
        }
        for (std::size_t r = q + 1; r < n; ++r)
            if (v.b.get(r)) emit(Gate::cnot(q, r));
        bool tail = false;
        for (std::size_t r = q + 1; r < n; ++r) tail |= v.a.get(r);
        if (tail) {
            if (!v.a.get(q)) emit(Gate::s(q));
            for (std::size_t r = q + 1; r < n; ++r)
                if (v.a.get(r)) emit(Gate::cnot(r, q));
            emit(Gate::s(q));
        } else if (v.a.get(q)) {
            emit(Gate::s(q));
        }

        // bring the Z_q image to +/-Z_q without disturbing the X_q image
        SignedPauli& w = zimg[q];
        for (std::size_t r = q + 1; r < n; ++r) {
            if (w.b.get(r)) {
                if (w.a.get(r)) emit(Gate::s(r));
                emit(Gate::h(r));
            }
        }
        if (w.b.get(q)) {
            emit(Gate::h(q));
            emit(Gate::s(q));
            emit(Gate::h(q));
        }
        for (std::size_t r = q + 1; r < n; ++r)
            if (w.a.get(r)) emit(Gate::cnot(r, q));
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (zimg[q].sign_bit()) emit(Gate::x(q));
        if (ximg[q].sign_bit()) emit(Gate::z(q));
    }

    // sanity: working tableau must now be the identity
    for (std::size_t q = 0; q < n; ++q) {
        if (zimg[q] != SignedPauli::single_z(n, q) || ximg[q] != SignedPauli::single_x(n, q))
            throw std::logic_error("compile: reduction did not reach the identity");
    }

    // applied gates satisfy G t = I, so t = g1^-1 ... gk^-1; reverse and invert
    GateSeq out;
    out.reserve(applied.size() + 2 * n);
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        if (it->kind == GateKind::S) {
            out.push_back(*it);
            out.push_back(*it);
            out.push_back(*it);
        } else {
            out.push_back(*it);
        }
    }
    return out;
}

CliffordTableau random_clifford(std::size_t n, CtrRng& rng) {
    SymplecticMat s = random_symplectic(n, rng);
    F2Vec f(n), h(n);
    for (std::size_t q = 0; q < n; ++q) {
        f.set(q, rng.next_bit());
        h.set(q, rng.next_bit());
    }
    return {std::move(s), std::move(f), std::move(h)};
}

std::string CliffordTableau::to_string() const {
    std::ostringstream out;
    out << "n=" << n_ << '\n';
    for (std::size_t q = 0; q < n_; ++q) out << z_image(q).to_string() << '\n';
    for (std::size_t q = 0; q < n_; ++q) out << x_image(q).to_string() << '\n';
    return out.str();
}

CliffordTableau CliffordTableau::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
        throw std::invalid_argument("CliffordTableau::parse: missing n= header");
    std::size_t n = std::stoul(line.substr(2));
    std::vector<SignedPauli> zimg, ximg;
    for (std::size_t q = 0; q < 2 * n; ++q) {
        if (!std::getline(in, line))
            throw std::invalid_argument("CliffordTableau::parse: truncated");
        SignedPauli p = SignedPauli::parse(line);
        if (p.n != n || !p.hermitian())
            throw std::invalid_argument("CliffordTableau::parse: bad image row");
        (q < n ? zimg : ximg).push_back(std::move(p));
    }
    return tableau_from_images(n, zimg, ximg);
}

}  // namespace clifftomo
