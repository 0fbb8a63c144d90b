// Command-line front end: weight multiplicity queries, diagram export,
// dimension checks, oracle verification sweeps and counter benchmarks for
// sp(2r, C).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympweight/sympweight.hpp"

using namespace sympweight;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

long long enumeration_budget() {
    if (const char* env = std::getenv("SYMPWEIGHT_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SYMPWEIGHT_BUDGET must be an integer");
        }
    }
    return default_enumeration_budget;
}

Weight parse_weight(const std::string& text, int rank) {
    Weight w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            w.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weight entries must be integers");
        }
    }
    if (w.size() != static_cast<std::size_t>(rank))
        throw CLI::ValidationError("--weight must have exactly rank entries");
    return w;
}

// Big values go out as decimal strings; a numeric companion field is added
// only when the value is exactly representable in a double.
void emit_int(json& obj, const std::string& key, const Int& value) {
    obj[key] = value.str();
    static const Int limit = Int(1) << 53;
    if (value < limit && value > -limit) obj[key + "_num"] = static_cast<std::int64_t>(value);
}

std::string weight_key(const Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(w[i]);
    }
    return out;
}

// Writes to a temporary file in the same directory, then renames, so an
// interrupted run never leaves a truncated output file.
void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    const std::string tmp = out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
        f << content;
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + out_path);
}

Int rep_multiplicity(const std::string& rep, long long n, long long m, int rank, const Weight& w,
                     Counter counter) {
    if (rep == "tensor") return mult_tensor(n, m, rank, w, counter);
    if (rep == "sym") return mult_sym(n, rank, w);
    return mult_irrep(BivariateHighestWeight(n, m, rank), w, counter);
}

struct VerifyStats {
    long long checks = 0;
    long long violations = 0;

    void note(bool ok) {
        ++checks;
        if (!ok) ++violations;
    }
};

void verify_tensor(int rank, long long max_degree, long long budget, VerifyStats& stats) {
    const long long start = stats.checks;
    for (long long n = 0; n <= max_degree; ++n)
        for (long long m = 0; m <= n && n + m <= max_degree; ++m) {
            const WeightTable table = brute_tensor_weights(n, m, rank, budget);
            for (const auto& [w, count] : table.mult) {
                const bool ok = mult_tensor(n, m, rank, w) == count &&
                                mult_tensor(n, m, rank, w, Counter::sieve) == count;
                stats.note(ok);
                if (!ok)
                    std::cerr << "tensor mismatch at n=" << n << " m=" << m << " w=("
                              << weight_key(w) << ")\n";
            }
        }
    std::cerr << "suite tensor: " << (stats.checks - start) << " weights checked\n";
}

void verify_irrep(int rank, long long max_degree, VerifyStats& stats) {
    const long long start = stats.checks;
    for (long long n = 0; n <= max_degree; ++n)
        for (long long m = 0; m <= n && n + m <= max_degree; ++m) {
            const BivariateHighestWeight hw(n, m, rank);
            FreudenthalTable oracle(hw.as_weight(), rank);
            for (const auto& [w, k] : enumerate_dominant_weights(n, m, rank)) {
                const Int direct = mult_irrep(hw, w);
                const bool ok =
                    direct == oracle.multiplicity(w) && direct == mult_irrep_via_virtual(hw, w);
                stats.note(ok);
                if (!ok)
                    std::cerr << "irrep mismatch at n=" << n << " m=" << m << " w=("
                              << weight_key(w) << ")\n";
            }
            stats.note(dim_irrep(hw) == weyl_dim(hw.as_weight(), rank));
        }
    std::cerr << "suite irrep: " << (stats.checks - start) << " checks\n";
}

void verify_liealg(int rank, long long max_degree, VerifyStats& stats) {
    const long long start = stats.checks;
    for (long long n = 1; n <= max_degree; ++n)
        for (long long m = 1; m <= n && n + m <= max_degree; ++m)
            for (long long p = 0; p <= m; ++p) {
                const FormalVector vp = highest_weight_vector(rank, n, m, p);
                const bool ok = is_highest_weight(vp) && rho_star(vp).is_zero();
                stats.note(ok);
                if (!ok)
                    std::cerr << "highest-weight failure at n=" << n << " m=" << m << " p=" << p
                              << "\n";
            }
    if (rank == 2) {
        auto unit = [](const ExponentPair& p) {
            FormalVector v(p.rank(), p.degree_a(), p.degree_b());
            v.add_term(p, 1);
            return v;
        };
        for (long long n = 1; n <= 3; ++n)
            for (long long m = 1; m <= 3; ++m) {
                const auto source = monomial_basis(2, n - 1, m - 1);
                const auto target = monomial_basis(2, n, m);
                const auto inj = matrix_of_map(
                    [&](const ExponentPair& p) { return rho(unit(p)); }, source, target);
                stats.note(integer_rank(inj) == source.size());
                const auto surj = matrix_of_map(
                    [&](const ExponentPair& p) { return rho_star(unit(p)); }, target, source);
                stats.note(integer_rank(surj) == source.size());
            }
    }
    std::cerr << "suite liealg: " << (stats.checks - start) << " checks\n";
}

void verify_decomp(int rank, long long max_degree, VerifyStats& stats) {
    const long long start = stats.checks;
    for (long long n = 1; n <= max_degree; ++n)
        for (long long m = 1; m <= n && n + m <= max_degree; ++m) {
            const DecompositionReport prop2 = check_prop2(n, m, rank);
            stats.note(prop2.ok());
            for (const auto& v : prop2.violations)
                std::cerr << "prop2 violation at n=" << n << " m=" << m << " w=("
                          << weight_key(v.w) << "): expected " << v.expected << " got " << v.actual
                          << "\n";
            if (m >= 2) {
                const DecompositionReport balance = check_balance(n, m, rank);
                stats.note(balance.ok());
                for (const auto& v : balance.violations)
                    std::cerr << "balance violation at n=" << n << " m=" << m << " w=("
                              << weight_key(v.w) << ")\n";
            }
        }
    std::cerr << "suite decomp: " << (stats.checks - start) << " checks\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact weight multiplicities for sp(2r, C): symmetric-power tensor products "
                 "and bivariate irreducible representations"};
    app.require_subcommand(1);

    int rank = 2;
    long long n = 0, m = 0;
    std::string weight_arg, rep = "irrep", format = "json", out_path, suite = "all",
                counter_arg = "dp";
    long long max_degree = 6, repeat = 5;

    auto add_common = [&](CLI::App* cmd, bool need_weight) {
        cmd->add_option("--rank", rank, "rank r of sp(2r, C)")->required()->check(CLI::Range(2, 64));
        cmd->add_option("-n", n, "first symmetric-power degree")->check(CLI::NonNegativeNumber);
        cmd->add_option("-m", m, "second symmetric-power degree")->check(CLI::NonNegativeNumber);
        if (need_weight)
            cmd->add_option("--weight", weight_arg, "comma-separated weight entries x1,...,xr")
                ->required();
    };

    CLI::App* mult_cmd = app.add_subcommand("mult", "multiplicity of one weight");
    add_common(mult_cmd, true);
    mult_cmd->add_option("--rep", rep, "representation: irrep, tensor or sym")
        ->check(CLI::IsMember({"irrep", "tensor", "sym"}));
    mult_cmd->add_option("--counter", counter_arg, "bounded-composition counter")
        ->check(CLI::IsMember({"dp", "sieve"}));

    CLI::App* diagram_cmd = app.add_subcommand("diagram", "full dominant weight diagram");
    add_common(diagram_cmd, false);
    diagram_cmd->add_option("--rep", rep)->check(CLI::IsMember({"irrep", "tensor", "sym"}));
    diagram_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    diagram_cmd->add_option("--out", out_path, "write to file (atomic rename)");

    CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of V(n,m,0,...,0) by summation");
    add_common(dim_cmd, false);

    CLI::App* verify_cmd = app.add_subcommand("verify", "oracle verification sweeps");
    verify_cmd->add_option("--rank", rank)->required()->check(CLI::Range(2, 64));
    verify_cmd->add_option("--max-degree", max_degree, "largest n+m swept")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"tensor", "irrep", "liealg", "decomp", "all"}));

    CLI::App* bench_cmd = app.add_subcommand("bench", "time the two counters");
    add_common(bench_cmd, false);
    bench_cmd->add_option("--weight", weight_arg, "weight to query (default: deepest layer)");
    bench_cmd->add_option("--counter", counter_arg)->check(CLI::IsMember({"dp", "sieve"}));
    bench_cmd->add_option("--repeat", repeat)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    try {
        const Counter counter = counter_arg == "sieve" ? Counter::sieve : Counter::dp;

        if (*mult_cmd) {
            const Weight w = parse_weight(weight_arg, rank);
            std::cout << rep_multiplicity(rep, n, m, rank, w, counter).str() << "\n";
            return exit_ok;
        }

        if (*diagram_cmd) {
            const long long sym_m = rep == "sym" ? 0 : m;
            std::vector<std::tuple<Weight, long long, Int, Int>> records;
            for (const auto& [w, k] : enumerate_dominant_weights(n, sym_m, rank)) {
                const Int mult = rep_multiplicity(rep, n, m, rank, w, counter);
                if (mult == 0) continue;
                records.emplace_back(w, k, mult, orbit_size(w));
            }
            std::string content;
            if (format == "csv") {
                std::ostringstream os;
                os << "weight,k,multiplicity,orbit_size\n";
                for (const auto& [w, k, mult, orbit] : records)
                    os << weight_key(w) << "," << k << "," << mult << "," << orbit << "\n";
                content = os.str();
            } else {
                json doc;
                doc["meta"] = {{"rank", rank}, {"n", n}, {"m", m}, {"rep", rep}};
                doc["records"] = json::array();
                for (const auto& [w, k, mult, orbit] : records) {
                    json rec;
                    rec["weight"] = w;
                    rec["k"] = k;
                    emit_int(rec, "multiplicity", mult);
                    emit_int(rec, "orbit_size", orbit);
                    doc["records"].push_back(std::move(rec));
                }
                content = doc.dump(2) + "\n";
            }
            write_output(out_path, content);
            return exit_ok;
        }

        if (*dim_cmd) {
            const BivariateHighestWeight hw(n, m, rank);
            const Int by_summation = dim_irrep(hw);
            const Int by_formula = weyl_dim(hw.as_weight(), rank);
            std::cout << by_summation.str() << "\n";
            if (by_summation != by_formula) {
                std::cerr << "dimension mismatch: summation " << by_summation << ", Weyl formula "
                          << by_formula << "\n";
                return exit_verification_failure;
            }
            return exit_ok;
        }

        if (*verify_cmd) {
            VerifyStats stats;
            if (suite == "tensor" || suite == "all")
                verify_tensor(rank, max_degree, enumeration_budget(), stats);
            if (suite == "irrep" || suite == "all") verify_irrep(rank, max_degree, stats);
            if (suite == "liealg" || suite == "all") verify_liealg(rank, max_degree, stats);
            if (suite == "decomp" || suite == "all") verify_decomp(rank, max_degree, stats);
            std::cout << (stats.violations == 0 ? "OK" : "FAIL") << " " << stats.checks
                      << " checks, " << stats.violations << " violations\n";
            return stats.violations == 0 ? exit_ok : exit_verification_failure;
        }

        if (*bench_cmd) {
            Weight w;
            if (!weight_arg.empty()) {
                w = parse_weight(weight_arg, rank);
            } else {
                w.assign(static_cast<std::size_t>(rank), 0);
                w[0] = (n + m) % 2;  // deepest layer
            }
            const BivariateHighestWeight hw(n, m, rank);
            std::vector<double> times;
            Int value = 0;
            for (long long i = 0; i < repeat; ++i) {
                const auto start = std::chrono::steady_clock::now();
                value = mult_irrep(hw, w, counter);
                times.push_back(
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count());
            }
            std::sort(times.begin(), times.end());
            const double median = times[times.size() / 2];
            std::cerr << "counter=" << counter_arg << " repeat=" << repeat << " median=" << median
                      << "s min=" << times.front() << "s max=" << times.back() << "s\n";
            std::cout << value.str() << "\n";
            return exit_ok;
        }
    } catch (const enumeration_budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification_failure;
    }
    return exit_usage;
}
