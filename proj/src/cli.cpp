#include "magma/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "magma/adversary.hpp"
#include "magma/core.hpp"
#include "magma/cost_model.hpp"
#include "magma/errors.hpp"
#include "magma/group_test.hpp"
#include "magma/instances.hpp"
#include "magma/oracle.hpp"
#include "magma/quantum.hpp"
#include "magma/rng.hpp"
#include "magma/semigroup_walk.hpp"
#include "magma/table_io.hpp"
#include "magma/walk.hpp"

namespace magma {

namespace {

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::size_t default_cap() {
    if (const char* env = std::getenv("MAGMA_LAB_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw ParameterViolation("MAGMA_LAB_CAP must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

void write_records(const std::vector<RunRecord>& rows, const std::string& path, std::ostream& out) {
    const auto emit = [&](std::ostream& sink) {
        sink << RunRecord::csv_header() << '\n';
        for (const auto& row : rows) sink << row.csv_row() << '\n';
    };
    if (path.empty()) {
        emit(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw ParameterViolation("cannot open output file " + path);
    emit(file);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw ParameterViolation("cannot open output file " + path);
    file << text;
}

std::string witness_string(const std::vector<Element>& witness) {
    std::ostringstream s;
    for (std::size_t i = 0; i < witness.size(); ++i) s << (i ? "," : "") << witness[i];
    return s.str();
}

int do_check(const std::string& path, const std::string& property, std::ostream& out) {
    const MagmaTable table = load_table(path);
    bool holds = false;
    std::string detail;
    if (property == "associative" || property == "semigroup") {
        const auto report = is_associative(table);
        holds = report.holds;
        if (!holds) detail = "violating triple " + witness_string(report.witness);
    } else if (property == "right-identity" || property == "left-identity" || property == "identity") {
        const IdentitySide side = property == "right-identity" ? IdentitySide::Right
                                  : property == "left-identity" ? IdentitySide::Left
                                                                : IdentitySide::TwoSided;
        const auto e = find_identity(table, side);
        holds = e.has_value();
        if (holds) detail = "element " + std::to_string(*e);
    } else if (property == "quasigroup") {
        const auto report = is_quasigroup(table);
        holds = report.holds;
        if (!holds)
            detail = std::string(report.witness[0] == 0 ? "row " : "column ") + std::to_string(report.witness[1]) +
                     " is not a permutation";
    } else if (property == "loop") {
        const auto report = is_loop(table);
        holds = report.holds;
        if (holds) detail = "identity " + std::to_string(report.witness[0]);
    } else if (property == "monoid") {
        holds = is_monoid(table);
    } else if (property == "group") {
        const auto report = is_group(table);
        holds = report.holds;
        if (!holds && !report.witness.empty()) detail = "offending element " + std::to_string(report.witness[0]);
        if (holds) detail = "identity " + std::to_string(report.witness[0]);
    } else {
        throw ParameterViolation("unknown property " + property);
    }
    out << "property=" << property << " holds=" << (holds ? "yes" : "no");
    if (!detail.empty()) out << " " << detail;
    out << '\n';
    return holds ? 0 : 1;
}

struct GroupTestCli {
    std::string table_path;
    int identity = -1;
    int r = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool naive = false;
    bool verify_promise = false;
    std::string csv_path;
};

int do_group_test(const GroupTestCli& cfg, std::ostream& out) {
    const MagmaTable table = load_table(cfg.table_path);
    const int n = table.size();
    Element e;
    if (cfg.identity >= 0)
        e = cfg.identity;
    else if (table.declared_identity())
        e = *table.declared_identity();
    else
        throw ParameterViolation("table declares no identity; pass --identity");

    CountingOracle oracle(table);
    if (cfg.verify_promise) {
        for (Element x = 0; x < n; ++x)
            if (oracle.query(e, x) != x || oracle.query(x, e) != x)
                throw PromiseViolation("element " + std::to_string(e) + " is not a two-sided identity");
        oracle.reset();
    }

    GroupTestParams params = default_group_test_params(n);
    if (cfg.r > 0) params.r = cfg.r;
    if (cfg.trials > 0) params.trials = cfg.trials;
    params.seed = cfg.seed;

    const auto start = std::chrono::steady_clock::now();
    const GroupTestResult result =
        cfg.naive ? naive_group_test(oracle, e) : group_test_randomized(oracle, e, params);
    const double wall = elapsed_ms(start);

    const double budget = 2.0 * std::pow(static_cast<double>(n), 1.5);
    out << "verdict=" << verdict_name(result.verdict) << " queries=" << result.queries << " budget=" << budget;
    if (!result.witness.empty()) out << " witness=" << witness_string(result.witness) << " phase=" << result.phase;
    out << '\n';

    RunRecord rec;
    rec.algorithm = cfg.naive ? "naive-group-test" : "group-test";
    rec.n = n;
    rec.k = table.codomain_size();
    rec.r = params.r;
    rec.trials = params.trials;
    rec.seed = params.seed;
    rec.verdict = verdict_name(result.verdict);
    rec.queries = result.queries;
    rec.wall_ms = wall;
    if (!cfg.csv_path.empty()) write_records({rec}, cfg.csv_path, out);
    return result.verdict == GroupVerdict::NotGroup ? 1 : 0;
}

struct GroverCli {
    int n = 0;
    int k = 1;
    int t = -1;
    bool bbht = false;
    std::uint64_t seed = 0;
};

int do_grover(const GroverCli& cfg, std::ostream& out) {
    if (cfg.bbht) {
        const int k = cfg.k;
        const auto result = bbht_search(cfg.n, [k](int i) { return i < k; }, cfg.seed);
        out << "found=" << (result.found ? std::to_string(*result.found) : std::string("none"))
            << " oracle_calls=" << result.oracle_calls << " rounds=" << result.rounds << '\n';
        return 0;
    }
    int t = cfg.t;
    if (t < 0) {
        // Peak iteration count: (2t+1) asin(sqrt(k/N)) near pi/2.
        const double theta = std::asin(std::sqrt(static_cast<double>(cfg.k) / cfg.n));
        t = cfg.k == 0 ? 0 : std::max(0, static_cast<int>(std::lround((M_PI / (2.0 * theta) - 1.0) / 2.0)));
    }
    std::vector<int> marked(static_cast<std::size_t>(cfg.k));
    for (int i = 0; i < cfg.k; ++i) marked[static_cast<std::size_t>(i)] = i;
    const auto result = grover_run(cfg.n, marked, t);
    const double closed = grover_success_closed_form(cfg.n, cfg.k, t);
    out << std::setprecision(15) << "n=" << cfg.n << " k=" << cfg.k << " t=" << t
        << " simulated=" << result.success_probability << " closed_form=" << closed
        << " oracle_calls=" << result.oracle_calls << '\n';
    return 0;
}

int do_walk_gap(int m, int r, const std::string& product_spec, std::size_t cap, std::ostream& out) {
    const MarkovChain chain = johnson_chain(m, r, cap);
    const double gap = spectral_gap(chain);
    out << std::setprecision(15) << "johnson m=" << m << " r=" << r << " dim=" << chain.dimension()
        << " gap=" << gap << " closed_form=" << johnson_gap_closed_form(m, r) << '\n';
    if (!product_spec.empty()) {
        int m2 = 0, r2 = 0;
        char sep = 0;
        std::istringstream spec(product_spec);
        if (!(spec >> m2 >> sep >> r2) || sep != ',')
            throw ParameterViolation("--product expects M,R");
        const MarkovChain other = johnson_chain(m2, r2, cap);
        const MarkovChain prod = product_chain(chain, other, cap);
        const Eigen::VectorXd ea = spectrum(chain);
        const Eigen::VectorXd eb = spectrum(other);
        double second = -2.0;
        for (int i = 0; i < ea.size(); ++i)
            for (int j = 0; j < eb.size(); ++j) {
                if (i == ea.size() - 1 && j == eb.size() - 1) continue;
                second = std::max(second, ea(i) * eb(j));
            }
        out << "product with=J(" << m2 << "," << r2 << ") dim=" << prod.dimension()
            << " gap=" << spectral_gap(prod) << " expected=" << 1.0 - second << '\n';
    }
    return 0;
}

struct WalkDetectCli {
    int m = 0;
    int r = 0;
    int marked = 1;
    int steps = 0;
    std::size_t cap = 0;
};

int do_walk_detect(const WalkDetectCli& cfg, std::ostream& out) {
    const MarkovChain chain = johnson_chain(cfg.m, cfg.r, cfg.cap);
    const int dim = chain.dimension();
    if (cfg.marked < 0 || cfg.marked > dim) throw ParameterViolation("marked count out of range");
    std::vector<int> marked(static_cast<std::size_t>(cfg.marked));
    for (int i = 0; i < cfg.marked; ++i) marked[static_cast<std::size_t>(i)] = i;
    int steps = cfg.steps;
    if (steps <= 0) {
        if (cfg.marked == 0)
            steps = 16;
        else
            steps = szegedy_step_budget(spectral_gap(chain), static_cast<double>(cfg.marked) / dim);
    }
    const auto result = szegedy_detect(chain, marked, steps, cfg.cap);
    out << std::setprecision(15) << "dim=" << dim << " marked=" << cfg.marked << " steps=" << steps
        << " detection=" << result.detection;
    if (result.first_crossing)
        out << " first_crossing=" << *result.first_crossing;
    else
        out << " first_crossing=none";
    out << '\n';
    return 0;
}

struct WalkEmulateCli {
    std::string table_path;
    int r = 0;
    std::uint64_t seed = 0;
    std::string csv_path;
};

int do_walk_emulate(const WalkEmulateCli& cfg, std::ostream& out) {
    const MagmaTable table = load_table(cfg.table_path);
    CountingOracle oracle(table);
    const auto start = std::chrono::steady_clock::now();
    const auto result = semigroup_walk_emulation(oracle, cfg.r, cfg.seed);
    const double wall = elapsed_ms(start);
    out << std::setprecision(15) << "violation_found=" << (result.violation_found ? "yes" : "no");
    if (result.violation_found) out << " witness=" << witness_string({result.witness.begin(), result.witness.end()});
    out << " steps=" << result.steps_taken << "/" << result.step_budget << " queries=" << result.queries
        << " charged_cost=" << result.charged_cost << " walk_search_cost=" << result.quantum_cost
        << " delta=" << result.delta << " eps_bound=" << result.eps_bound << '\n';

    if (!cfg.csv_path.empty()) {
        RunRecord rec;
        rec.algorithm = "walk-emulate";
        rec.n = table.size();
        rec.k = table.codomain_size();
        rec.r = cfg.r;
        rec.trials = result.steps_taken;
        rec.seed = cfg.seed;
        rec.verdict = result.violation_found ? "violation-found" : "no-violation";
        rec.queries = result.queries;
        rec.wall_ms = wall;
        write_records({rec}, cfg.csv_path, out);
    }
    return result.violation_found ? 1 : 0;
}

int do_epsilon(const std::string& path, int r, std::size_t cap, std::ostream& out) {
    const MagmaTable table = load_table(path);
    const auto result = semigroup_marked_fraction(table, r, cap);
    const int n = table.size();
    const int k = table.codomain_size();
    double bound = 0.0;
    if (r > k && k < n) bound = epsilon_lower_bound(n, k, r);
    out << std::setprecision(15) << "n=" << n << " k=" << k << " r=" << r << " marked=" << result.marked
        << " total=" << result.total << " epsilon=" << result.epsilon << " bound=" << bound << '\n';
    return 0;
}

struct AdversaryGenCli {
    std::string problem;
    int n = 0;
    int c = 2;
    int a = -1;
    int b = -1;
    bool negative = false;
    std::uint64_t seed = 0;
    std::string out_path;
};

int do_adversary_gen(const AdversaryGenCli& cfg, std::ostream& out) {
    if (cfg.problem == "semigroup") {
        const bool want_negative = cfg.a >= 0 || cfg.b >= 0 || cfg.negative;
        MagmaTable table = [&] {
            if (!want_negative) return adversary_positive_table(cfg.n, cfg.c);
            if (cfg.a < 0 || cfg.b < 0) throw ParameterViolation("negative member needs --a and --b");
            return adversary_negative_table(cfg.n, cfg.c, cfg.a, cfg.b);
        }();
        std::ostringstream comment;
        comment << "associativity family " << (want_negative ? "negative" : "positive") << " c=" << cfg.c;
        if (want_negative) comment << " a=" << cfg.a << " b=" << cfg.b;
        write_text(format_table(table, comment.str()), cfg.out_path, out);
        return 0;
    }
    if (cfg.problem == "one-column") {
        SplitMix64 rng(cfg.seed);
        const BitMatrix m = sample_one_column_instance(cfg.n, !cfg.negative, rng);
        std::ostringstream comment;
        comment << "one-column family " << (cfg.negative ? "negative" : "positive") << " seed=" << cfg.seed;
        write_text(format_bit_matrix(m, comment.str()), cfg.out_path, out);
        return 0;
    }
    throw ParameterViolation("unknown problem " + cfg.problem);
}

int do_adversary_bound(const std::string& problem, int n, std::uint64_t seed, std::size_t cap, std::ostream& out) {
    AdversaryBound bound;
    if (problem == "semigroup")
        bound = semigroup_bound(n, cap);
    else if (problem == "one-column")
        bound = one_column_bound(n, seed, cap);
    else
        throw ParameterViolation("unknown problem " + problem);
    out << std::setprecision(15) << "m=" << bound.m << " m_prime=" << bound.m_prime << " bound=" << bound.bound
        << " exhaustive=" << (bound.exhaustive ? "yes" : "no") << '\n';
    return 0;
}

int do_reduce(const std::string& path, const std::string& target, const std::string& out_path, std::ostream& out) {
    const BitMatrix m = load_bit_matrix(path);
    MagmaTable table = [&] {
        if (target == "identity") return reduce_identity(m);
        if (target == "loop") return reduce_loop(m);
        throw ParameterViolation("unknown reduction target " + target);
    }();
    write_text(format_table(table, "reduction target " + target), out_path, out);
    return 0;
}

int do_cost_exponent(double alpha, std::ostream& out) {
    const auto result = semigroup_exponent(alpha);
    out << std::setprecision(15) << "alpha=" << alpha << " beta=" << result.beta << " exponent=" << result.exponent
        << " regime=" << regime_name(result.regime) << '\n';
    return 0;
}

int do_cost_group(std::ostream& out) {
    const auto q = group_quantum_exponent();
    out << std::setprecision(15) << "beta=" << q.beta << " exponent=" << q.exponent
        << " log_factor=" << (q.log_factor ? "yes" : "no") << '\n';
    return 0;
}

int do_cost_randomized(int n, int r, std::ostream& out) {
    const auto opt = group_randomized_optimum(n);
    out << std::setprecision(15);
    if (r > 0) out << "cost_at_r=" << group_randomized_cost(n, r) << " ";
    out << "optimal_r=" << opt.r << " optimal_cost=" << opt.cost << '\n';
    return 0;
}

int do_cost_walk(int n, int k, int r, std::ostream& out) {
    out << std::setprecision(15) << "n=" << n << " k=" << k << " r=" << r << " cost=" << semigroup_cost(n, k, r)
        << '\n';
    return 0;
}

int do_cost_bounds(std::ostream& out) {
    out << std::setprecision(15);
    for (const auto& row : misc_bounds()) {
        out << row.problem << " lower=";
        if (row.lower_known)
            out << row.lower;
        else
            out << "open";
        out << " upper=";
        if (row.upper_known)
            out << row.upper;
        else
            out << "open";
        if (row.upper_log_factor) out << " (log factor)";
        out << '\n';
    }
    return 0;
}

struct BenchCli {
    std::string algorithm;
    std::vector<int> sizes;
    int reps = 1;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string kind = "cyclic-group";
    std::string csv_path;
};

MagmaTable make_bench_instance(const std::string& kind, int n, std::uint64_t seed) {
    if (kind == "cyclic-group") return make_cyclic_group(n);
    if (kind == "monoid-with-absorber") return make_monoid_with_absorber(n);
    if (kind == "truncated-add") return make_truncated_add_monoid(n);
    if (kind == "random-monoid") return make_random_monoid(n, seed);
    throw ParameterViolation("unknown instance kind " + kind);
}

int do_bench(const BenchCli& cfg, std::ostream& out) {
    if (cfg.algorithm != "group-test" && cfg.algorithm != "naive-group-test")
        throw ParameterViolation("unknown bench algorithm " + cfg.algorithm);
    if (cfg.sizes.empty()) throw ParameterViolation("--n needs at least one size");
    if (cfg.reps < 1) throw ParameterViolation("--reps must be positive");
    const bool naive = cfg.algorithm == "naive-group-test";
    const int threads = cfg.threads > 0
                            ? cfg.threads
                            : std::max(1, static_cast<int>(std::min(8u, std::thread::hardware_concurrency())));

    std::vector<RunRecord> rows;
    std::ostringstream summary;
    summary << std::setprecision(15);
    for (const int n : cfg.sizes) {
        const MagmaTable table = make_bench_instance(cfg.kind, n, cfg.seed);
        if (!table.declared_identity()) throw ParameterViolation("bench instance lacks a declared identity");
        const Element e = *table.declared_identity();
        std::vector<RunRecord> batch(static_cast<std::size_t>(cfg.reps));
        std::atomic<int> next{0};
        const auto worker = [&] {
            while (true) {
                const int rep = next.fetch_add(1);
                if (rep >= cfg.reps) break;
                GroupTestParams params = default_group_test_params(n);
                params.seed = cfg.seed + static_cast<std::uint64_t>(rep);
                CountingOracle oracle(table);
                const auto start = std::chrono::steady_clock::now();
                const GroupTestResult result =
                    naive ? naive_group_test(oracle, e) : group_test_randomized(oracle, e, params);
                RunRecord& rec = batch[static_cast<std::size_t>(rep)];
                rec.algorithm = cfg.algorithm;
                rec.n = n;
                rec.k = table.codomain_size();
                rec.r = params.r;
                rec.trials = params.trials;
                rec.seed = params.seed;
                rec.verdict = verdict_name(result.verdict);
                rec.queries = result.queries;
                rec.wall_ms = elapsed_ms(start);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();

        double mean = 0.0;
        std::uint64_t max_queries = 0;
        for (const auto& rec : batch) {
            mean += static_cast<double>(rec.queries);
            max_queries = std::max(max_queries, rec.queries);
        }
        mean /= static_cast<double>(cfg.reps);
        summary << "# n=" << n << " reps=" << cfg.reps << " mean_queries=" << mean
                << " max_queries=" << max_queries << " budget=" << 2.0 * std::pow(static_cast<double>(n), 1.5)
                << '\n';
        rows.insert(rows.end(), batch.begin(), batch.end());
    }
    write_records(rows, cfg.csv_path, out);
    out << summary.str();
    return 0;
}

struct GenCli {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;
    double density = 0.5;
    std::string out_path;
};

int do_gen(const GenCli& cfg, std::ostream& out) {
    std::ostringstream comment;
    comment << cfg.kind << " n=" << cfg.n << " seed=" << cfg.seed;
    if (cfg.kind == "random-bit-matrix") {
        const BitMatrix m = make_random_bit_matrix(cfg.n, cfg.seed, cfg.density);
        write_text(format_bit_matrix(m, comment.str()), cfg.out_path, out);
        return 0;
    }
    MagmaTable table = [&]() -> MagmaTable {
        if (cfg.kind == "cyclic-group") return make_cyclic_group(cfg.n);
        if (cfg.kind == "monoid-with-absorber") return make_monoid_with_absorber(cfg.n);
        if (cfg.kind == "truncated-add") return make_truncated_add_monoid(cfg.n);
        if (cfg.kind == "single-witness") return make_single_witness_table(cfg.n, cfg.seed);
        if (cfg.kind == "random-monoid") return make_random_monoid(cfg.n, cfg.seed);
        throw ParameterViolation("unknown instance kind " + cfg.kind);
    }();
    write_text(format_table(table, comment.str()), cfg.out_path, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"magma-lab: query-counted algebra testing on multiplication tables"};
    app.fallthrough();
    std::size_t cap = 0;
    app.add_option("--cap", cap, "enumeration/state-space cap (default 10^6 or MAGMA_LAB_CAP)");

    std::function<int()> action;

    // check
    auto* check = app.add_subcommand("check", "brute-force property check on a table file");
    auto check_cfg = std::make_shared<std::pair<std::string, std::string>>();
    check->add_option("table", check_cfg->first, "table file")->required();
    check->add_option("--property", check_cfg->second, "property to verify")
        ->required()
        ->check(CLI::IsMember({"associative", "semigroup", "right-identity", "left-identity", "identity",
                               "quasigroup", "loop", "monoid", "group"}));
    check->callback([&action, check_cfg, &out] {
        action = [check_cfg, &out] { return do_check(check_cfg->first, check_cfg->second, out); };
    });

    // group-test
    auto* gt = app.add_subcommand("group-test", "randomized group test under the monoid promise");
    auto gt_cfg = std::make_shared<GroupTestCli>();
    gt->add_option("table", gt_cfg->table_path, "table file")->required();
    gt->add_option("--identity", gt_cfg->identity, "identity element (default: declared in file)");
    gt->add_option("--r", gt_cfg->r, "power-sequence length (default round(sqrt(n)))");
    gt->add_option("--trials", gt_cfg->trials, "row-scan trials (default ceil(n/r))");
    gt->add_option("--seed", gt_cfg->seed, "rng seed");
    gt->add_flag("--naive", gt_cfg->naive, "deterministic full row scan instead");
    gt->add_flag("--verify-promise", gt_cfg->verify_promise, "check the identity promise first (2n queries)");
    gt->add_option("--csv", gt_cfg->csv_path, "write the run record CSV here");
    gt->callback([&action, gt_cfg, &out] { action = [gt_cfg, &out] { return do_group_test(*gt_cfg, out); }; });

    // grover
    auto* grover = app.add_subcommand("grover", "exact search simulation");
    auto grover_cfg = std::make_shared<GroverCli>();
    grover->add_option("--n", grover_cfg->n, "search space size")->required();
    grover->add_option("--k", grover_cfg->k, "marked item count (default 1)");
    grover->add_option("--t", grover_cfg->t, "iterations (default: near the success peak)");
    grover->add_flag("--bbht", grover_cfg->bbht, "unknown-k search schedule instead of fixed iterations");
    grover->add_option("--seed", grover_cfg->seed, "rng seed (bbht mode)");
    grover->callback(
        [&action, grover_cfg, &out] { action = [grover_cfg, &out] { return do_grover(*grover_cfg, out); }; });

    // walk gap|detect|emulate
    auto* walk = app.add_subcommand("walk", "Johnson-chain walks");
    walk->require_subcommand(1);
    auto* wgap = walk->add_subcommand("gap", "spectral gap vs closed form");
    auto wgap_cfg = std::make_shared<std::tuple<int, int, std::string>>();
    wgap->add_option("--m", std::get<0>(*wgap_cfg), "ground set size")->required();
    wgap->add_option("--r", std::get<1>(*wgap_cfg), "subset size")->required();
    wgap->add_option("--product", std::get<2>(*wgap_cfg), "second chain M,R for the tensor product");
    wgap->callback([&action, wgap_cfg, &cap, &out] {
        action = [wgap_cfg, &cap, &out] {
            return do_walk_gap(std::get<0>(*wgap_cfg), std::get<1>(*wgap_cfg), std::get<2>(*wgap_cfg), cap, out);
        };
    });
    auto* wdet = walk->add_subcommand("detect", "quantized walk detection statistic");
    auto wdet_cfg = std::make_shared<WalkDetectCli>();
    wdet->add_option("--m", wdet_cfg->m, "ground set size")->required();
    wdet->add_option("--r", wdet_cfg->r, "subset size")->required();
    wdet->add_option("--marked", wdet_cfg->marked, "marked vertex count (default 1)");
    wdet->add_option("--steps", wdet_cfg->steps, "step budget (default ceil(C/sqrt(delta*eps)))");
    wdet->callback([&action, wdet_cfg, &cap, &out] {
        action = [wdet_cfg, &cap, &out] {
            WalkDetectCli cfg = *wdet_cfg;
            cfg.cap = cap;
            return do_walk_detect(cfg, out);
        };
    });
    auto* wemu = walk->add_subcommand("emulate", "classical walk over subset pairs with query accounting");
    auto wemu_cfg = std::make_shared<WalkEmulateCli>();
    wemu->add_option("table", wemu_cfg->table_path, "table file")->required();
    wemu->add_option("--r", wemu_cfg->r, "subset size")->required();
    wemu->add_option("--seed", wemu_cfg->seed, "rng seed");
    wemu->add_option("--csv", wemu_cfg->csv_path, "write the run record CSV here");
    wemu->callback(
        [&action, wemu_cfg, &out] { action = [wemu_cfg, &out] { return do_walk_emulate(*wemu_cfg, out); }; });

    // epsilon
    auto* eps = app.add_subcommand("epsilon", "exhaustive marked-fraction count for a table");
    auto eps_cfg = std::make_shared<std::pair<std::string, int>>();
    eps->add_option("table", eps_cfg->first, "table file")->required();
    eps->add_option("--r", eps_cfg->second, "subset size")->required();
    eps->callback([&action, eps_cfg, &cap, &out] {
        action = [eps_cfg, &cap, &out] { return do_epsilon(eps_cfg->first, eps_cfg->second, cap, out); };
    });

    // adversary gen|bound
    auto* adv = app.add_subcommand("adversary", "lower-bound instance families");
    adv->require_subcommand(1);
    auto* agen = adv->add_subcommand("gen", "emit a family member");
    auto agen_cfg = std::make_shared<AdversaryGenCli>();
    agen->add_option("--problem", agen_cfg->problem, "semigroup or one-column")->required();
    agen->add_option("--n", agen_cfg->n, "instance size")->required();
    agen->add_option("--c", agen_cfg->c, "family parameter c (semigroup, default 2)");
    agen->add_option("--a", agen_cfg->a, "negative member row (semigroup)");
    agen->add_option("--b", agen_cfg->b, "negative member column (semigroup)");
    agen->add_flag("--negative", agen_cfg->negative, "emit a negative member");
    agen->add_option("--seed", agen_cfg->seed, "rng seed (one-column sampling)");
    agen->add_option("-o,--out", agen_cfg->out_path, "output file (default stdout)");
    agen->callback(
        [&action, agen_cfg, &out] { action = [agen_cfg, &out] { return do_adversary_gen(*agen_cfg, out); }; });
    auto* abound = adv->add_subcommand("bound", "flip-enumeration adversary bound");
    auto abound_cfg = std::make_shared<std::tuple<std::string, int, std::uint64_t>>();
    abound->add_option("--problem", std::get<0>(*abound_cfg), "semigroup or one-column")->required();
    abound->add_option("--n", std::get<1>(*abound_cfg), "instance size")->required();
    abound->add_option("--seed", std::get<2>(*abound_cfg), "rng seed for spot checks");
    abound->callback([&action, abound_cfg, &cap, &out] {
        action = [abound_cfg, &cap, &out] {
            return do_adversary_bound(std::get<0>(*abound_cfg), std::get<1>(*abound_cfg), std::get<2>(*abound_cfg),
                                      cap, out);
        };
    });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "bit-matrix to table reductions");
    auto reduce_cfg = std::make_shared<std::tuple<std::string, std::string, std::string>>();
    reduce->add_option("matrix", std::get<0>(*reduce_cfg), "bit matrix file")->required();
    reduce->add_option("--target", std::get<1>(*reduce_cfg), "identity or loop")->required();
    reduce->add_option("-o,--out", std::get<2>(*reduce_cfg), "output file (default stdout)");
    reduce->callback([&action, reduce_cfg, &out] {
        action = [reduce_cfg, &out] {
            return do_reduce(std::get<0>(*reduce_cfg), std::get<1>(*reduce_cfg), std::get<2>(*reduce_cfg), out);
        };
    });

    // cost exponent|group|randomized|walk|bounds
    auto* cost = app.add_subcommand("cost", "query-cost formulas");
    cost->require_subcommand(1);
    auto* cexp = cost->add_subcommand("exponent", "associativity walk exponent at codomain exponent alpha");
    auto alpha = std::make_shared<double>(0.0);
    cexp->add_option("--alpha", *alpha, "codomain size exponent")->required();
    cexp->callback([&action, alpha, &out] { action = [alpha, &out] { return do_cost_exponent(*alpha, out); }; });
    auto* cgrp = cost->add_subcommand("group", "walk-based group test exponent");
    cgrp->callback([&action, &out] { action = [&out] { return do_cost_group(out); }; });
    auto* crand = cost->add_subcommand("randomized", "classical two-phase group test cost");
    auto crand_cfg = std::make_shared<std::pair<int, int>>();
    crand->add_option("--n", crand_cfg->first, "table order")->required();
    crand->add_option("--r", crand_cfg->second, "power-sequence length (optional)");
    crand->callback([&action, crand_cfg, &out] {
        action = [crand_cfg, &out] { return do_cost_randomized(crand_cfg->first, crand_cfg->second, out); };
    });
    auto* cwalk = cost->add_subcommand("walk", "concrete walk cost for n, k, r");
    auto cwalk_cfg = std::make_shared<std::tuple<int, int, int>>();
    cwalk->add_option("--n", std::get<0>(*cwalk_cfg), "table order")->required();
    cwalk->add_option("--k", std::get<1>(*cwalk_cfg), "codomain size")->required();
    cwalk->add_option("--r", std::get<2>(*cwalk_cfg), "subset size")->required();
    cwalk->callback([&action, cwalk_cfg, &out] {
        action = [cwalk_cfg, &out] {
            return do_cost_walk(std::get<0>(*cwalk_cfg), std::get<1>(*cwalk_cfg), std::get<2>(*cwalk_cfg), out);
        };
    });
    auto* cbounds = cost->add_subcommand("bounds", "known exponent bounds per problem");
    cbounds->callback([&action, &out] { action = [&out] { return do_cost_bounds(out); }; });

    // bench
    auto* bench = app.add_subcommand("bench", "repeated seeded runs with CSV output");
    auto bench_cfg = std::make_shared<BenchCli>();
    bench->add_option("algorithm", bench_cfg->algorithm, "group-test or naive-group-test")->required();
    bench->add_option("--n", bench_cfg->sizes, "table orders")->required()->delimiter(',');
    bench->add_option("--reps", bench_cfg->reps, "repetitions per order")->required();
    bench->add_option("--seed", bench_cfg->seed, "base seed; rep i uses seed+i");
    bench->add_option("--threads", bench_cfg->threads, "worker threads (default: up to 8)");
    bench->add_option("--kind", bench_cfg->kind, "instance kind (default cyclic-group)");
    bench->add_option("--csv", bench_cfg->csv_path, "write rows here instead of stdout");
    bench->callback([&action, bench_cfg, &out] { action = [bench_cfg, &out] { return do_bench(*bench_cfg, out); }; });

    // gen
    auto* gen = app.add_subcommand("gen", "emit a deterministic instance");
    auto gen_cfg = std::make_shared<GenCli>();
    gen->add_option("--kind", gen_cfg->kind, "instance kind")
        ->required()
        ->check(CLI::IsMember({"cyclic-group", "monoid-with-absorber", "truncated-add", "single-witness",
                               "random-monoid", "random-bit-matrix"}));
    gen->add_option("--n", gen_cfg->n, "instance size")->required();
    gen->add_option("--seed", gen_cfg->seed, "rng seed");
    gen->add_option("--density", gen_cfg->density, "bit density (random-bit-matrix)");
    gen->add_option("-o,--out", gen_cfg->out_path, "output file (default stdout)");
    gen->callback([&action, gen_cfg, &out] { action = [gen_cfg, &out] { return do_gen(*gen_cfg, out); }; });

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("magma-lab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (cap == 0) cap = default_cap();
        if (!action) throw ParameterViolation("no subcommand selected");
        return action();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace magma
