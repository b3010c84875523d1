#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <set>

#include "clifftomo/learner.hpp"
#include "oracles.hpp"

using namespace clifftomo;

namespace {

// all 24 single-qubit Cliffords, enumerated by drawing until saturation
std::vector<CliffordTableau> all_single_qubit_cliffords() {
    CtrRng rng(1);
    std::vector<CliffordTableau> out;
    std::set<std::string> seen;
    while (seen.size() < 24) {
        CliffordTableau t = random_clifford(1, rng);
        if (seen.insert(t.to_string()).second) out.push_back(t);
    }
    return out;
}

std::string report_fingerprint(const LearnReport& r) {
    std::string s = r.success ? "ok;" : "fail;";
    s += std::to_string(r.queries) + ";";
    if (r.recovered) s += r.recovered->to_string();
    for (const auto& rec : r.stage1) {
        s += rec.j.to_string() + "->" + rec.k.to_string() + "{";
        for (const auto& [outcome, count] : rec.counts)
            s += outcome.to_string() + ":" + std::to_string(count) + ",";
        s += "}";
    }
    return s;
}

}  // namespace

TEST_CASE("hoeffding_samples") {
    CHECK(hoeffding_samples(0.01, 0.46) == 13);
    CHECK(hoeffding_samples(0.5, 0.5) == 3);
    CHECK(hoeffding_samples(0.05 / 6.0, 0.49) == 13);  // 12 odd-ized
    CHECK(hoeffding_samples(0.05 / 6.0, 0.46) == 13);  // ceil(12.95), already odd
    CHECK(hoeffding_samples(0.9, 0.5) == 3);
    CHECK(hoeffding_samples(0.1, 0.1) % 2 == 1);
    CHECK_THROWS_AS(hoeffding_samples(0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(hoeffding_samples(0.1, -0.2), std::domain_error);
    CHECK_THROWS_AS(hoeffding_samples(0.0, 0.5), std::invalid_argument);
}

TEST_CASE("majority") {
    OutcomeCounts c{{F2Vec::from_bits({0, 0}), 7}, {F2Vec::from_bits({0, 1}), 3}};
    CHECK(majority(c) == F2Vec::from_bits({0, 0}));

    OutcomeCounts tie{{F2Vec::from_bits({0, 0}), 5}, {F2Vec::from_bits({0, 1}), 5}};
    CHECK(majority(tie) == F2Vec::from_bits({0, 0}));

    OutcomeCounts single{{F2Vec::from_bits({1, 1}), 1}};
    CHECK(majority(single) == F2Vec::from_bits({1, 1}));

    CHECK_THROWS_AS(majority(OutcomeCounts{}), std::invalid_argument);
}

TEST_CASE("LearnParams validation") {
    CHECK_NOTHROW(LearnParams(0.0, 0.05));
    CHECK_NOTHROW(LearnParams(0.34, 0.5));
    CHECK_THROWS_AS(LearnParams(0.36, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(LearnParams(0.71, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(LearnParams(-0.1, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(LearnParams(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(LearnParams(0.1, 1.0), std::invalid_argument);
    CHECK(LearnParams(0.1, 0.05).task_delta(2) == doctest::Approx(0.05 / 6).epsilon(1e-15));
}

TEST_CASE("learn_clifford: identity oracle") {
    Oracle o = make_clifford_oracle(CliffordTableau::identity(1));
    LearnReport r = learn_clifford(o);
    REQUIRE(r.success);
    CHECK(equal_up_to_phase(*r.recovered, CliffordTableau::identity(1)));
    CHECK(r.queries == 7);
    CHECK(o.queries() == 7);
}

TEST_CASE("learn_clifford: all 24 single-qubit Cliffords") {
    for (const CliffordTableau& t : all_single_qubit_cliffords()) {
        Oracle o = make_clifford_oracle(t);
        LearnReport r = learn_clifford(o);
        REQUIRE(r.success);
        REQUIRE(equal_up_to_phase(*r.recovered, t));
        REQUIRE(r.queries == 7);
    }
}

TEST_CASE("learn_clifford: query exactness and recovery at larger n") {
    CtrRng rng(77);
    for (std::size_t n : {2u, 3u, 8u, 32u}) {
        for (int trial = 0; trial < 5; ++trial) {
            CliffordTableau t = random_clifford(n, rng);
            Oracle o = make_clifford_oracle(t);
            LearnReport r = learn_clifford(o);
            REQUIRE(r.success);
            REQUIRE(equal_up_to_phase(*r.recovered, t));
            REQUIRE(r.queries == 4 * n + 3);
        }
    }
}

TEST_CASE("learn_clifford: column assembly matches the ground-truth S") {
    CtrRng rng(88);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 1 + rng.next_below(6);
        CliffordTableau t = random_clifford(n, rng);
        Oracle o = make_clifford_oracle(t);
        LearnReport r = learn_clifford(o);
        const F2Vec& k0 = r.stage1[0].k;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            F2Vec col = r.stage1[i + 1].k;
            col.xor_with(k0);
            REQUIRE(col == t.s().mat().col(i));
        }
    }
}

TEST_CASE("learn_clifford is deterministic") {
    CtrRng rng(5);
    CliffordTableau t = random_clifford(3, rng);
    Oracle o1 = make_clifford_oracle(t), o2 = make_clifford_oracle(t);
    CHECK(report_fingerprint(learn_clifford(o1)) == report_fingerprint(learn_clifford(o2)));
}

TEST_CASE("learn_pauli_noisy") {
    SUBCASE("exact Pauli oracle is unanimous") {
        Oracle o = make_dense_oracle(
            DenseUnitary(oracles::pauli_matrix(SignedPauli::parse("+Y"))));
        auto [a, b] = learn_pauli_noisy(o, LearnParams(0.1, 0.05), 42);
        CHECK(a == F2Vec::from_bits({1}));
        CHECK(b == F2Vec::from_bits({1}));
    }
    SUBCASE("perturbed Pauli: success rate over 200 trials") {
        double theta = std::asin(0.1);
        Eigen::MatrixXcd rotz(2, 2);
        rotz << std::exp(std::complex<double>(0, -theta)), 0, 0,
            std::exp(std::complex<double>(0, theta));
        Eigen::MatrixXcd u = oracles::single_pauli(1) * rotz;
        int good = 0;
        for (int trial = 0; trial < 200; ++trial) {
            Oracle o = make_dense_oracle(DenseUnitary(u));
            auto [a, b] = learn_pauli_noisy(o, LearnParams(0.1, 0.05), 1000 + trial);
            if (a == F2Vec::from_bits({0}) && b == F2Vec::from_bits({1})) ++good;
        }
        CHECK(good >= 190);
    }
}

TEST_CASE("learn_clifford_noisy: eps = 0 is unanimous and exact") {
    CtrRng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        CliffordTableau t = random_clifford(2, rng);
        Oracle o = make_dense_oracle(to_matrix(t));
        LearnReport r = learn_clifford_noisy(o, LearnParams(0.0, 0.05), 99 + trial);
        REQUIRE(r.success);
        CHECK(equal_up_to_phase(*r.recovered, t));
        for (const auto& rec : r.stage1) CHECK(rec.counts.size() == 1);
        CHECK(r.stage2.counts.size() == 1);
    }
}

TEST_CASE("learn_clifford_noisy: sample sizes and query formula at n=2") {
    CtrRng rng(21);
    CliffordTableau t = random_clifford(2, rng);
    auto [o, truth] = make_perturbed_clifford(t, 0.1, rng);
    LearnReport r = learn_clifford_noisy(o, LearnParams(0.1, 0.05), 7);
    CHECK(r.stage1_samples == 13);
    CHECK(r.stage2_samples == 13);
    CHECK(r.queries == 2 * 5 * 13 + 13);
    CHECK(r.queries == 143);
    CHECK(o.queries() == r.queries);
}

TEST_CASE("learn_clifford_noisy recovers the planted Clifford") {
    CtrRng rng(31);
    int good = 0;
    for (int trial = 0; trial < 40; ++trial) {
        CliffordTableau t = random_clifford(2, rng);
        auto [o, truth] = make_perturbed_clifford(t, 0.1, rng);
        LearnReport r = learn_clifford_noisy(o, LearnParams(0.1, 0.05), 5000 + trial);
        if (r.success && equal_up_to_phase(*r.recovered, t)) {
            ++good;
            // the recovered element is within the promised distance of U
            CHECK(distance(to_matrix(*r.recovered), truth) <= 0.1 + 1e-6);
        }
    }
    CHECK(good >= 34);  // guarantee is >= 0.95 per trial; allow binomial slack
}

TEST_CASE("learn_clifford_noisy is thread-count independent") {
    CtrRng rng(41);
    CliffordTableau t = random_clifford(2, rng);
    auto [o1, u1] = make_perturbed_clifford(t, 0.1, rng);
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    LearnReport r1 = learn_clifford_noisy(o1, LearnParams(0.1, 0.05), 77);

    CtrRng rng2(41);
    CliffordTableau t2 = random_clifford(2, rng2);
    auto [o2, u2] = make_perturbed_clifford(t2, 0.1, rng2);
    omp_set_num_threads(8);
    LearnReport r2 = learn_clifford_noisy(o2, LearnParams(0.1, 0.05), 77);
    omp_set_num_threads(max_threads);

    CHECK(report_fingerprint(r1) == report_fingerprint(r2));
}
