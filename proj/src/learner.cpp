#include "clifftomo/learner.hpp"

#include <cmath>

namespace clifftomo {

LearnParams::LearnParams(double eps_, double delta_) : eps(eps_), delta(delta_) {
    if (eps < 0 || eps >= uniqueness_radius(2))
        throw std::invalid_argument("LearnParams: eps must lie in [0, sqrt(2)/4)");
    if (delta <= 0 || delta >= 1)
        throw std::invalid_argument("LearnParams: delta must lie in (0, 1)");
}

std::size_t hoeffding_samples(double task_delta, double margin) {
    if (task_delta <= 0 || task_delta >= 1)
        throw std::invalid_argument("hoeffding_samples: task_delta must lie in (0, 1)");
    if (margin <= 0) throw std::domain_error("hoeffding_samples: nonpositive margin");
    auto count = static_cast<std::size_t>(std::ceil(std::log(2.0 / task_delta) /
                                                    (2.0 * margin * margin)));
    if (count < 1) count = 1;
    if (count % 2 == 0) ++count;
    return count;
}

F2Vec majority(const OutcomeCounts& counts) {
    if (counts.empty()) throw std::invalid_argument("majority: empty histogram");
    auto best = counts.begin();
    for (auto it = std::next(counts.begin()); it != counts.end(); ++it)
        if (it->second > best->second) best = it;  // ties keep the lexicographically smallest
    return best->first;
}

namespace {

GateSeq offset_gates(const GateSeq& seq, std::size_t offset) {
    GateSeq out;
    out.reserve(seq.size());
    for (Gate g : seq) {
        g.q0 += offset;
        if (g.kind == GateKind::CNOT) g.q1 += offset;
        out.push_back(g);
    }
    return out;
}

F2Vec run_twin_exact(Oracle& oracle, const F2Vec& j) {
    std::size_t n = oracle.n();
    StabState st = StabState::basis(j);
    bell_prepare(st, n);
    oracle.apply_to_state(st, register_range(0, n));
    oracle.apply_to_state(st, register_range(n, n));
    bell_unprepare(st, n);
    return st.measure_all_z_deterministic();
}

SymplecticMat assemble_columns(std::size_t n, const std::vector<F2Vec>& k,
                               const F2Vec& k0) {
    F2Mat m(2 * n, 2 * n);
    for (std::size_t c = 0; c < 2 * n; ++c) {
        F2Vec col = k[c];
        col.xor_with(k0);
        for (std::size_t r = 0; r < 2 * n; ++r) m.set(r, c, col.get(r));
    }
    if (!symplectic_check(m)) throw SymplecticViolation();
    return SymplecticMat(std::move(m));
}

CliffordTableau quotient_tableau(SymplecticMat s) {
    std::size_t n = s.n();
    return {std::move(s), F2Vec(n), F2Vec(n)};
}

}  // namespace

LearnReport learn_clifford(Oracle& oracle) {
    std::size_t n = oracle.n();
    std::uint64_t start = oracle.queries();
    LearnReport report;
    report.stage1_samples = 1;
    report.stage2_samples = 1;

    // stage 1: 2n+1 Twin-C runs pin the affine map K = S J + F0
    F2Vec k0 = run_twin_exact(oracle, F2Vec(2 * n));
    report.stage1.push_back({F2Vec(2 * n), k0, {{k0, 1}}});
    std::vector<F2Vec> k;
    k.reserve(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        F2Vec j = F2Vec::unit(2 * n, i);
        k.push_back(run_twin_exact(oracle, j));
        report.stage1.push_back({std::move(j), k.back(), {{k.back(), 1}}});
    }
    CliffordTableau ctilde = quotient_tableau(assemble_columns(n, k, k0));

    // stage 2: one Choi run through the compiled inverse reads the Pauli part
    GateSeq inv_gates = offset_gates(compile(inverse(ctilde)), n);
    StabState st = StabState::basis(F2Vec(2 * n));
    bell_prepare(st, n);
    oracle.apply_to_state(st, register_range(n, n));
    st.apply(inv_gates);
    bell_unprepare(st, n);
    F2Vec hf = st.measure_all_z_deterministic();
    report.stage2 = {F2Vec(2 * n), hf, {{hf, 1}}};

    F2Vec h = hf.slice(0, n), f = hf.slice(n, n);
    report.recovered = CliffordTableau(ctilde.s(), std::move(f), std::move(h));
    report.queries = oracle.queries() - start;
    report.success = true;
    return report;
}

namespace {

TwinRecord vote_twin(Oracle& oracle, const F2Vec& j, std::size_t reps, std::uint64_t seed,
                     std::uint64_t task_index) {
    oracle.twin_distribution(j);  // warm the cache before sampling in parallel
    std::vector<F2Vec> votes(reps, F2Vec(j.size()));
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(reps); ++r) {
        CtrRng rng(CtrRng::derive(seed, task_index, static_cast<std::uint64_t>(r)));
        votes[r] = oracle.sample_twin(j, rng);
    }
    TwinRecord rec;
    rec.j = j;
    for (auto& v : votes) ++rec.counts[v];
    rec.k = majority(rec.counts);
    return rec;
}

}  // namespace

std::pair<F2Vec, F2Vec> learn_pauli_noisy(Oracle& oracle, const LearnParams& params,
                                          std::uint64_t seed) {
    std::size_t n = oracle.n();
    double margin = 0.5 - params.eps * params.eps;
    std::size_t reps = hoeffding_samples(params.delta, margin);
    Eigen::MatrixXcd left = Eigen::MatrixXcd::Identity(1ULL << n, 1ULL << n);
    oracle.choi_distribution(left);
    std::vector<F2Vec> votes(reps, F2Vec(2 * n));
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(reps); ++r) {
        CtrRng rng(CtrRng::derive(seed, 0, static_cast<std::uint64_t>(r)));
        votes[r] = oracle.sample_choi(left, rng);
    }
    OutcomeCounts counts;
    for (auto& v : votes) ++counts[v];
    F2Vec win = majority(counts);
    return {win.slice(0, n), win.slice(n, n)};
}

LearnReport learn_clifford_noisy(Oracle& oracle, const LearnParams& params, std::uint64_t seed) {
    std::size_t n = oracle.n();
    std::uint64_t start = oracle.queries();
    double task_delta = params.task_delta(n);
    std::size_t n1 = hoeffding_samples(task_delta, 0.5 - 4.0 * params.eps * params.eps);
    std::size_t n2 = hoeffding_samples(task_delta, 0.5 - params.eps * params.eps);

    LearnReport report;
    report.seed = seed;
    report.stage1_samples = n1;
    report.stage2_samples = n2;

    report.stage1.push_back(vote_twin(oracle, F2Vec(2 * n), n1, seed, 0));
    F2Vec k0 = report.stage1[0].k;
    std::vector<F2Vec> k;
    k.reserve(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        report.stage1.push_back(vote_twin(oracle, F2Vec::unit(2 * n, i), n1, seed, i + 1));
        k.push_back(report.stage1.back().k);
    }

    std::optional<CliffordTableau> ctilde;
    try {
        ctilde = quotient_tableau(assemble_columns(n, k, k0));
    } catch (const SymplecticViolation&) {
        // the votes do not describe any Clifford; count the run against delta
        report.queries = oracle.queries() - start;
        report.success = false;
        return report;
    }

    Eigen::MatrixXcd left = to_matrix(inverse(*ctilde)).mat();
    oracle.choi_distribution(left);
    std::vector<F2Vec> votes(n2, F2Vec(2 * n));
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(n2); ++r) {
        CtrRng rng(CtrRng::derive(seed, 2 * n + 1, static_cast<std::uint64_t>(r)));
        votes[r] = oracle.sample_choi(left, rng);
    }
    TwinRecord rec2;
    rec2.j = F2Vec(2 * n);
    for (auto& v : votes) ++rec2.counts[v];
    rec2.k = majority(rec2.counts);
    report.stage2 = rec2;

    F2Vec h = rec2.k.slice(0, n), f = rec2.k.slice(n, n);
    report.recovered = CliffordTableau(ctilde->s(), std::move(f), std::move(h));
    report.queries = oracle.queries() - start;
    report.success = true;
    return report;
}

}  // namespace clifftomo
