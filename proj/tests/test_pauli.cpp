#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clifftomo/densesim.hpp"
#include "clifftomo/pauli.hpp"
#include "oracles.hpp"

using namespace clifftomo;

namespace {

SignedPauli make(const std::string& s) { return SignedPauli::parse(s); }

SignedPauli random_pauli(std::size_t n, CtrRng& rng) {
    F2Vec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.set(i, rng.next_bit());
        b.set(i, rng.next_bit());
    }
    return {std::move(a), std::move(b), static_cast<int>(rng.next_below(4))};
}

}  // namespace

TEST_CASE("single-qubit labels match the standard matrices") {
    CHECK(oracles::phase_aligned_diff(oracles::single_pauli(0), to_matrix(make("+I"))) == 0);
    // to_matrix must reproduce each fixed matrix exactly, not just up to phase
    CHECK((to_matrix(make("+X")) - oracles::single_pauli(1)).cwiseAbs().maxCoeff() == 0);
    CHECK((to_matrix(make("+Z")) - oracles::single_pauli(2)).cwiseAbs().maxCoeff() == 0);
    CHECK((to_matrix(make("+Y")) - oracles::single_pauli(3)).cwiseAbs().maxCoeff() == 0);
    CHECK((to_matrix(SignedPauli(F2Vec::from_bits({0}), F2Vec::from_bits({0}), 2)) +
           Eigen::MatrixXcd::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() == 0);
}

TEST_CASE("two-qubit to_matrix is the Kronecker product, qubit 0 leftmost") {
    Eigen::MatrixXcd zx = oracles::kron(oracles::single_pauli(2), oracles::single_pauli(1));
    CHECK((to_matrix(make("+ZX")) - zx).cwiseAbs().maxCoeff() == 0);
    CHECK((to_matrix(make("-iYZ")) -
           Eigen::MatrixXcd(std::complex<double>(0, -1) *
                            oracles::kron(oracles::single_pauli(3), oracles::single_pauli(2))))
              .cwiseAbs()
              .maxCoeff() == 0);
}

TEST_CASE("pauli_mul examples") {
    SignedPauli xz = pauli_mul(make("+X"), make("+Z"));
    CHECK(xz == SignedPauli(F2Vec::from_bits({1}), F2Vec::from_bits({1}), 3));  // -i Y

    for (const char* s : {"+I", "+X", "+Y", "+Z"}) {
        SignedPauli p = make(s);
        CHECK(pauli_mul(p, p) == SignedPauli::identity(1));
    }

    SignedPauli prod = pauli_mul(make("+XI"), make("+ZZ"));
    CHECK(prod.to_string() == "-iYZ");
}

TEST_CASE("all 16 single-qubit products match the dense oracle") {
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            SignedPauli lhs(F2Vec::from_bits({p >> 1}), F2Vec::from_bits({p & 1}), 0);
            SignedPauli rhs(F2Vec::from_bits({q >> 1}), F2Vec::from_bits({q & 1}), 0);
            SignedPauli prod = pauli_mul(lhs, rhs);
            Eigen::MatrixXcd expect = oracles::pauli_matrix(lhs) * oracles::pauli_matrix(rhs);
            REQUIRE((oracles::pauli_matrix(prod) - expect).cwiseAbs().maxCoeff() == 0);
            REQUIRE(pauli_mul_phase_1q(p, q) == prod.phase);
        }
}

TEST_CASE("group closure, randomized n=2,3") {
    CtrRng rng(99);
    for (std::size_t n : {2u, 3u})
        for (int trial = 0; trial < 50; ++trial) {
            SignedPauli p = random_pauli(n, rng), q = random_pauli(n, rng);
            Eigen::MatrixXcd expect = oracles::pauli_matrix(p) * oracles::pauli_matrix(q);
            REQUIRE((oracles::pauli_matrix(pauli_mul(p, q)) - expect).cwiseAbs().maxCoeff() == 0);
        }
}

TEST_CASE("associativity, randomized") {
    CtrRng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.next_below(5);
        SignedPauli p = random_pauli(n, rng), q = random_pauli(n, rng), r = random_pauli(n, rng);
        CHECK(pauli_mul(p, pauli_mul(q, r)) == pauli_mul(pauli_mul(p, q), r));
    }
}

TEST_CASE("commutes examples and phase characterization") {
    CHECK_FALSE(commutes(make("+X"), make("+Z")));
    CHECK(commutes(make("+XX"), make("+ZZ")));
    CtrRng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.next_below(4);
        SignedPauli p = random_pauli(n, rng), q = random_pauli(n, rng);
        CHECK(commutes(p, SignedPauli::identity(n)));
        CHECK(commutes(p, q) == (pauli_mul(p, q).phase == pauli_mul(q, p).phase));
        // agree with the dense commutator
        if (n <= 3) {
            Eigen::MatrixXcd pm = oracles::pauli_matrix(p), qm = oracles::pauli_matrix(q);
            CHECK(commutes(p, q) == ((pm * qm - qm * pm).cwiseAbs().maxCoeff() < 1e-12));
        }
    }
}

TEST_CASE("text form round trips") {
    for (const char* s : {"+I", "-X", "+iY", "-iZ", "+XYZI", "-iYZ"}) {
        SignedPauli p = make(s);
        CHECK(p.to_string() == s);
        CHECK(SignedPauli::parse(p.to_string()) == p);
    }
    CHECK(make("X") == make("+X"));  // prefix optional
    CHECK_THROWS_AS(make("+Q"), std::invalid_argument);
    CHECK_THROWS_AS(make(""), std::invalid_argument);
}

TEST_CASE("constructors and predicates") {
    SignedPauli z = SignedPauli::single_z(3, 1);
    CHECK(z.to_string() == "+IZI");
    SignedPauli x = SignedPauli::single_x(3, 2);
    CHECK(x.to_string() == "+IIX");
    CHECK(SignedPauli::identity(2).is_identity_label());
    CHECK(z.hermitian());
    CHECK_FALSE(z.sign_bit());
    SignedPauli mz = z;
    mz.phase = 2;
    CHECK(mz.sign_bit());
    CHECK(mz.same_label(z));
    CHECK(mz != z);
}
