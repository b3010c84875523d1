// Command-line driver: batch tomography experiments and a self-verification
// suite, emitting machine-readable JSON (and optional CSV) reports.
#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "clifftomo/learner.hpp"

using json = nlohmann::ordered_json;
using namespace clifftomo;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kReportSchema = 1;

void apply_thread_env() {
    if (const char* env = std::getenv("CLIFFTOMO_THREADS")) {
        int threads = std::atoi(env);
        if (threads >= 1) omp_set_num_threads(threads);
    }
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

json versions_block() {
    return {{"clifftomo", kVersion},
            {"report_schema", kReportSchema},
            {"rng", CtrRng::algorithm()}};
}

void emit(const json& report, const std::string& out_path) {
    std::string body = report.dump(2);
    body += '\n';
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << body;
    }
}

void emit_csv(const json& per_trial, const std::string& csv_path) {
    if (csv_path.empty()) return;
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open csv file: " + csv_path);
    if (per_trial.empty()) return;
    bool first = true;
    for (auto& [key, value] : per_trial.front().items()) {
        (void)value;
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << '\n';
    for (const auto& row : per_trial) {
        first = true;
        for (auto& [key, value] : row.items()) {
            (void)key;
            out << (first ? "" : ",") << (value.is_string() ? value.get<std::string>()
                                                            : value.dump());
            first = false;
        }
        out << '\n';
    }
}

// all 24 single-qubit Cliffords: 6 symplectic parts x 4 sign patterns
std::vector<CliffordTableau> enumerate_single_qubit() {
    std::vector<CliffordTableau> out;
    for (int bits = 0; bits < 16; ++bits) {
        F2Mat m(2, 2);
        m.set(0, 0, bits & 1);
        m.set(0, 1, bits & 2);
        m.set(1, 0, bits & 4);
        m.set(1, 1, bits & 8);
        if (!symplectic_check(m)) continue;
        for (int signs = 0; signs < 4; ++signs)
            out.emplace_back(SymplecticMat(m), F2Vec::from_bits({signs & 1}),
                             F2Vec::from_bits({(signs >> 1) & 1}));
    }
    return out;
}

struct TrialResult {
    bool success = false;
    std::uint64_t queries = 0;
};

int cmd_learn(std::size_t n, std::size_t trials, std::uint64_t seed, bool exhaustive,
              bool no_timestamp, const std::string& out_path, const std::string& csv_path) {
    std::vector<CliffordTableau> targets;
    if (exhaustive) {
        targets = enumerate_single_qubit();
        trials = targets.size();
    } else {
        targets.reserve(trials);
        for (std::size_t i = 0; i < trials; ++i) {
            CtrRng rng(CtrRng::derive(seed, i, 0x1e));
            targets.push_back(random_clifford(n, rng));
        }
    }

    std::vector<TrialResult> results(trials);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(trials); ++i) {
        Oracle oracle = make_clifford_oracle(targets[i]);
        LearnReport r = learn_clifford(oracle);
        results[i].success =
            r.success && r.recovered && equal_up_to_phase(*r.recovered, targets[i]);
        results[i].queries = r.queries;
    }

    json per_trial = json::array();
    std::size_t successes = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        per_trial.push_back({{"trial", i},
                             {"success", results[i].success},
                             {"queries", results[i].queries}});
        if (results[i].success) ++successes;
    }

    json report;
    report["config"] = {{"subcommand", "learn"}, {"n", n},       {"trials", trials},
                        {"exhaustive", exhaustive}, {"seed", seed}};
    report["per_trial"] = per_trial;
    report["aggregate"] = {{"successes", successes},
                           {"success_rate", static_cast<double>(successes) / trials},
                           {"expected_queries", 4 * n + 3}};
    report["versions"] = versions_block();
    report["seed"] = seed;
    if (!no_timestamp) report["timestamp"] = iso_timestamp();
    emit(report, out_path);
    emit_csv(per_trial, csv_path);
    return successes == trials ? 0 : 1;
}

int cmd_noisy(std::size_t n, double eps, double delta, std::size_t trials, std::uint64_t seed,
              bool no_timestamp, const std::string& out_path, const std::string& csv_path) {
    LearnParams params(eps, delta);
    std::vector<TrialResult> results(trials);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(trials); ++i) {
        CtrRng rng(CtrRng::derive(seed, i, 0x2e));
        CliffordTableau truth = random_clifford(n, rng);
        auto [oracle, unitary] = make_perturbed_clifford(truth, eps, rng);
        LearnReport r = learn_clifford_noisy(oracle, params, CtrRng::derive(seed, i, 0x2f));
        results[i].success =
            r.success && r.recovered && equal_up_to_phase(*r.recovered, truth);
        results[i].queries = r.queries;
    }

    json per_trial = json::array();
    std::size_t successes = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        per_trial.push_back({{"trial", i},
                             {"success", results[i].success},
                             {"queries", results[i].queries}});
        if (results[i].success) ++successes;
    }

    double task_delta = params.task_delta(n);
    std::size_t n1 = hoeffding_samples(task_delta, 0.5 - 4 * eps * eps);
    std::size_t n2 = hoeffding_samples(task_delta, 0.5 - eps * eps);
    double rate = static_cast<double>(successes) / trials;
    // pass bar: the 1 - delta guarantee minus three binomial sigmas
    double bar = 1.0 - delta - 3.0 * std::sqrt(delta * (1.0 - delta) / trials);

    json report;
    report["config"] = {{"subcommand", "noisy"}, {"n", n},       {"eps", eps},
                        {"delta", delta},        {"trials", trials}, {"seed", seed}};
    report["per_trial"] = per_trial;
    report["aggregate"] = {{"successes", successes},
                           {"success_rate", rate},
                           {"stage1_samples", n1},
                           {"stage2_samples", n2},
                           {"expected_queries", 2 * (2 * n + 1) * n1 + n2},
                           {"success_bar", bar}};
    report["versions"] = versions_block();
    report["seed"] = seed;
    if (!no_timestamp) report["timestamp"] = iso_timestamp();
    emit(report, out_path);
    emit_csv(per_trial, csv_path);
    return rate >= bar ? 0 : 1;
}

int cmd_verify(std::size_t n, std::uint64_t seed, bool corrupt_sign, bool no_timestamp,
               const std::string& out_path) {
    json properties = json::array();
    auto record = [&](const std::string& name, bool pass) {
        properties.push_back({{"property", name}, {"pass", pass}});
        std::cerr << (pass ? "PASS " : "FAIL ") << name << '\n';
        return pass;
    };
    bool all = true;
    CtrRng rng(seed);

    // conjugate-transform rule: C* equals C P^{alpha,beta} up to phase
    {
        bool pass = true;
        for (int trial = 0; trial < 25 && pass; ++trial) {
            CliffordTableau t = random_clifford(1 + trial % n, rng);
            Eigen::MatrixXcd m = to_matrix(t).mat();
            auto [alpha, beta] = conjugate_transform(t);
            if (corrupt_sign && alpha.size() > 0) alpha.flip(0);
            Eigen::MatrixXcd rhs = m * to_matrix(SignedPauli(alpha, beta, 0));
            std::complex<double> tr = (m.conjugate().adjoint() * rhs).trace();
            if (std::abs(tr) > 1e-12) rhs *= std::abs(tr) / tr;
            pass = (m.conjugate() - rhs).cwiseAbs().maxCoeff() <= 1e-10;
        }
        all &= record("conjugate_transform_dense", pass);
    }

    // cross-backend: dense Twin-U point mass at the stabilizer outcome
    {
        bool pass = true;
        for (int trial = 0; trial < 10 && pass; ++trial) {
            std::size_t nn = 1 + trial % n;
            CliffordTableau t = random_clifford(nn, rng);
            DenseUnitary u = to_matrix(t);
            for (std::size_t i = 0; i <= 2 * nn && pass; ++i) {
                F2Vec j = (i == 0) ? F2Vec(2 * nn) : F2Vec::unit(2 * nn, i - 1);
                pass = twin_u_distribution(u, j).prob(run_twin_c(t, j)) >= kPointMassThreshold;
            }
        }
        all &= record("twin_point_mass_cross_backend", pass);
    }

    // distance properties
    {
        DenseUnitary id{Eigen::MatrixXcd::Identity(2, 2)};
        Eigen::MatrixXcd xm(2, 2);
        xm << 0, 1, 1, 0;
        bool pass = distance(id, id) <= 1e-9 &&
                    std::abs(distance(id, DenseUnitary(xm)) - 1.0) <= 1e-9;
        for (int trial = 0; trial < 50 && pass; ++trial) {
            double theta = 0.5 * rng.next_double();
            Eigen::MatrixXcd zr = Eigen::MatrixXcd::Zero(2, 2);
            zr(0, 0) = std::exp(std::complex<double>(0, -theta));
            zr(1, 1) = std::exp(std::complex<double>(0, theta));
            pass = std::abs(distance(id, DenseUnitary(zr)) - std::abs(std::sin(theta))) <= 1e-9;
            CliffordTableau a = random_clifford(2, rng), b = random_clifford(2, rng),
                            c = random_clifford(2, rng);
            DenseUnitary ua = to_matrix(a), ub = to_matrix(b), uc = to_matrix(c);
            pass = pass && distance(ua, ub) <= distance(ua, uc) + distance(uc, ub) + 1e-9;
            DenseUnitary ca{Eigen::MatrixXcd(uc.mat() * ua.mat())};
            DenseUnitary cb{Eigen::MatrixXcd(uc.mat() * ub.mat())};
            pass = pass && std::abs(distance(ca, cb) - distance(ua, ub)) <= 1e-9;
        }
        all &= record("distance_properties", pass);
    }

    // conjugation distance bound D(U P U^T, V P V^T) <= 2 D(U, V)
    {
        bool pass = true;
        for (int trial = 0; trial < 25 && pass; ++trial) {
            std::size_t nn = 1 + trial % std::min<std::size_t>(n, 2);
            CliffordTableau t = random_clifford(nn, rng);
            double eps = 0.3 * rng.next_double();
            auto [oracle, u] = make_perturbed_clifford(t, eps, rng);
            DenseUnitary v = to_matrix(t);
            double d = distance(u, v);
            for (std::uint64_t label = 0; label < (1ULL << (2 * nn)) && pass; ++label) {
                F2Vec bits = F2Vec::from_uint(2 * nn, label);
                Eigen::MatrixXcd p = to_matrix(SignedPauli(bits.slice(0, nn), bits.slice(nn, nn), 0));
                DenseUnitary upu{u.mat() * p * u.mat().transpose()};
                DenseUnitary vpv{v.mat() * p * v.mat().transpose()};
                pass = distance(upu, vpv) <= 2 * d + 1e-9;
            }
        }
        all &= record("conjugation_distance_bound", pass);
    }

    json report;
    report["config"] = {{"subcommand", "verify"},
                        {"n", n},
                        {"seed", seed},
                        {"corrupt_sign", corrupt_sign}};
    report["per_trial"] = properties;
    report["aggregate"] = {{"all_pass", all}};
    report["versions"] = versions_block();
    report["seed"] = seed;
    if (!no_timestamp) report["timestamp"] = iso_timestamp();
    emit(report, out_path);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();

    CLI::App app{"Clifford process tomography experiments"};
    app.require_subcommand(1);

    std::size_t n = 1, trials = 100;
    double eps = 0.1, delta = 0.05;
    std::uint64_t seed = 0;
    bool exhaustive = false, no_timestamp = false, corrupt_sign = false;
    std::string out_path, csv_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "root RNG seed");
        cmd->add_option("--out", out_path, "report file path (default: stdout)");
        cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");
    };

    CLI::App* learn = app.add_subcommand("learn", "exact tomography of random Cliffords");
    learn->add_option("--n", n, "qubit count")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    learn->add_option("--trials", trials, "number of random targets");
    learn->add_flag("--exhaustive", exhaustive, "all 24 single-qubit Cliffords (requires --n 1)");
    learn->add_option("--csv", csv_path, "per-trial CSV path");
    add_common(learn);

    CLI::App* noisy = app.add_subcommand("noisy", "closest-Clifford learning of perturbed unitaries");
    noisy->add_option("--n", n, "qubit count")->check(CLI::Range(std::size_t{1}, kDenseQubitLimit));
    noisy->add_option("--eps", eps, "perturbation distance, < sqrt(2)/4");
    noisy->add_option("--delta", delta, "failure budget in (0,1)");
    noisy->add_option("--trials", trials, "number of planted instances");
    noisy->add_option("--csv", csv_path, "per-trial CSV path");
    add_common(noisy);

    CLI::App* verify = app.add_subcommand("verify", "cross-backend and distance property checks");
    verify->add_option("--n", n, "max qubit count for the suite")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4}));
    verify->add_flag("--corrupt-sign", corrupt_sign, "inject a sign fault (harness negative test)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(learn)) {
            if (exhaustive && n != 1) throw CLI::ValidationError("--exhaustive requires --n 1");
            if (trials < 1) throw CLI::ValidationError("--trials must be >= 1");
            return cmd_learn(n, trials, seed, exhaustive, no_timestamp, out_path, csv_path);
        }
        if (app.got_subcommand(noisy)) {
            if (trials < 1) throw CLI::ValidationError("--trials must be >= 1");
            return cmd_noisy(n, eps, delta, trials, seed, no_timestamp, out_path, csv_path);
        }
        return cmd_verify(n, seed, corrupt_sign, no_timestamp, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
