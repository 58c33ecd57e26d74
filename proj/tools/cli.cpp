#include "cli.hpp"

#include "nthprime/bounds.hpp"
#include "nthprime/errors.hpp"
#include "nthprime/harness.hpp"
#include "nthprime/logint.hpp"
#include "nthprime/nth_prime.hpp"
#include "nthprime/prime_count.hpp"
#include "nthprime/report.hpp"
#include "nthprime/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace nthprime::cli {
namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    std::string format = "text";
    unsigned threads = 0;
    std::optional<std::uint64_t> segment_size;
};

std::uint64_t count_arg(const std::string& text, const char* what)
{
    try {
        return parse_count(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

long double real_arg(const std::string& text, const char* what)
{
    std::size_t used = 0;
    long double value = 0;
    try {
        value = std::stold(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw UsageError(std::string(what) + ": not a number: '" + text + "'");
    return value;
}

std::string fixed(long double v, int digits)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

NthPrimeOptions nth_options(const GlobalFlags& flags)
{
    NthPrimeOptions opts;
    if (flags.segment_size) {
        opts.sieve.segment_size = *flags.segment_size;
    } else if (const char* env = std::getenv("NTHPRIME_SEGMENT_SIZE"); env != nullptr && *env != '\0') {
        opts.sieve.segment_size = count_arg(env, "NTHPRIME_SEGMENT_SIZE");
    }
    if (opts.sieve.segment_size == 0)
        throw UsageError("segment size must be positive");
    opts.sieve.threads = flags.threads != 0 ? flags.threads : std::max(1u, std::thread::hardware_concurrency());
    return opts;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error("cannot open '" + path + "' for writing");
    file << text;
    if (!file)
        throw Error("failed writing '" + path + "'");
}

ordered_json result_json(const NthPrimeResult& r)
{
    return {{"n", r.n},
            {"prime", r.prime},
            {"algorithm", std::string(to_string(r.algorithm))},
            {"pi_evals", r.pi_evals},
            {"cells_sieved", r.cells_sieved},
            {"widenings", r.widenings},
            {"fell_back", r.fell_back},
            {"wall_time_ns", static_cast<std::uint64_t>(r.wall_time.count())}};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"nth prime by binary search, sieve-to-bound and li-inverse window sieving", "nthprime"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", flags.threads, "Sieve worker threads (default: hardware concurrency)");
    app.add_option("--segment-size", flags.segment_size,
                   "Integers per sieve segment (default 262144, or $NTHPRIME_SEGMENT_SIZE)");

    std::string x_text;
    auto* pi_cmd = app.add_subcommand("pi", "Count primes <= x");
    pi_cmd->add_option("x", x_text)->required();

    std::string n_text;
    std::string algo = "cramer";
    double cramer_constant = kCalibratedCramerConstant;
    bool exclude_base = false;
    auto* nth_cmd = app.add_subcommand("nth", "Compute the nth prime");
    nth_cmd->add_option("n", n_text)->required();
    nth_cmd->add_option("--algo", algo, "binary | sieve | cramer")->check(CLI::IsMember({"binary", "sieve", "cramer"}));
    nth_cmd->add_option("--c0", cramer_constant, "Cramer window constant");

    std::string eps_text = "1e-6";
    auto* li_cmd = app.add_subcommand("li", "Logarithmic integral li(x), x >= 2");
    li_cmd->add_option("x", x_text)->required();
    li_cmd->add_option("--eps", eps_text, "Absolute error bound");

    double tol = 0.5;
    auto* li_inv_cmd = app.add_subcommand("li-inv", "Solve li(alpha) = n, n >= 6");
    li_inv_cmd->add_option("n", n_text)->required();
    li_inv_cmd->add_option("--tol", tol, "Tolerance on |li(alpha) - n|")->check(CLI::PositiveNumber);

    double b_constant = 1.0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Dusart interval and sieve-size threshold B(n)");
    bounds_cmd->add_option("n", n_text)->required();
    bounds_cmd->add_option("--c", b_constant, "Constant c in B(n)")->check(CLI::PositiveNumber);

    std::string grid_text;
    std::string algos_text = "binary,sieve,cramer";
    std::string out_path;
    unsigned reps = 3;
    unsigned timeout_ms = 60'000;
    auto* bench_cmd = app.add_subcommand("bench", "Time the algorithms over a grid of n");
    bench_cmd->add_option("--grid", grid_text, "e.g. 1e3..1e7 or 1e3..1e7@4 or 1000,5000")->required();
    bench_cmd->add_option("--algos", algos_text, "Comma-separated algorithm list");
    bench_cmd->add_option("--out", out_path, "Write the JSON report here");
    bench_cmd->add_option("--reps", reps, "Runs per entry (median is reported)")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--timeout-ms", timeout_ms, "Per-run time limit before an algorithm is dropped");
    bench_cmd->add_option("--c0", cramer_constant, "Cramer window constant");
    bench_cmd->add_flag("--exclude-base-primes", exclude_base, "Do not charge base-prime sieving to wall time");

    std::string max_n_text = "100000";
    auto* verify_cmd = app.add_subcommand("verify", "Check every bound and cross-check algorithms up to --max-n");
    verify_cmd->add_option("--max-n", max_n_text, "Largest n checked");
    verify_cmd->add_option("--out", out_path, "Write the JSON report here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }

    const bool json = flags.format == "json";
    try {
        const NthPrimeOptions opts = nth_options(flags);

        if (*pi_cmd) {
            const std::uint64_t x = count_arg(x_text, "x");
            const PiEvaluation e = pi(x);
            if (json)
                out << ordered_json{{"x", e.x}, {"pi", e.count}, {"phi_calls", e.cost.phi_calls},
                                    {"table_limit", e.cost.table_limit}, {"method", std::string(kPiMethodName)}}
                           .dump(2)
                    << '\n';
            else
                out << e.count << "\n  x: " << e.x << "\n  phi calls: " << e.cost.phi_calls << '\n';
        } else if (*nth_cmd) {
            const std::uint64_t n = count_arg(n_text, "n");
            NthPrimeOptions o = opts;
            o.cramer_constant = cramer_constant;
            const NthPrimeResult r = nth_prime(n, *parse_algorithm(algo), o);
            if (json) {
                out << result_json(r).dump(2) << '\n';
            } else {
                out << r.prime << '\n'
                    << "  n: " << r.n << '\n'
                    << "  algorithm: " << to_string(r.algorithm) << '\n'
                    << "  pi evaluations: " << r.pi_evals << '\n'
                    << "  cells sieved: " << r.cells_sieved << '\n'
                    << "  widenings: " << r.widenings << (r.fell_back ? " (fell back to binary search)" : "")
                    << '\n'
                    << "  wall time: " << fixed(static_cast<long double>(r.wall_time.count()) / 1e6L, 3) << " ms\n";
            }
        } else if (*li_cmd) {
            const long double x = real_arg(x_text, "x");
            const long double eps = real_arg(eps_text, "--eps");
            const LiValue v = li(x, eps);
            if (json) {
                char value[64];
                std::snprintf(value, sizeof value, "%.21Lg", v.value);
                out << ordered_json{{"x", static_cast<double>(v.x)}, {"li", value},
                                    {"eps", static_cast<double>(v.eps)}}
                           .dump(2)
                    << '\n';
            } else {
                char value[64];
                std::snprintf(value, sizeof value, "%.15Lg", v.value);
                out << value << "\n  error bound: " << static_cast<double>(v.eps) << '\n';
            }
        } else if (*li_inv_cmd) {
            const AlphaResult a = li_inverse(count_arg(n_text, "n"), tol);
            if (json)
                out << ordered_json{{"n", a.n}, {"alpha", a.alpha}, {"residual", static_cast<double>(a.residual)},
                                    {"evals", a.evals}, {"bracket_widenings", a.bracket_widenings}}
                           .dump(2)
                    << '\n';
            else
                out << fixed(a.alpha, 6) << "\n  |li(alpha) - n|: " << static_cast<double>(a.residual)
                    << "\n  li evaluations: " << a.evals << "\n  bracket widenings: " << a.bracket_widenings << '\n';
        } else if (*bounds_cmd) {
            const std::uint64_t n = count_arg(n_text, "n");
            const Interval d = dusart_interval(n);
            const double b = threshold_B(n, b_constant);
            if (json)
                out << ordered_json{{"n", n}, {"L", d.lo}, {"R", d.hi}, {"width", d.hi - d.lo},
                                    {"B", b}, {"c", b_constant}}
                           .dump(2)
                    << '\n';
            else
                out << "L = " << fixed(d.lo, 6) << "\nR = " << fixed(d.hi, 6) << "\nB = " << fixed(b, 6)
                    << "  (c = " << b_constant << ")\n";
        } else if (*bench_cmd) {
            std::vector<std::uint64_t> grid;
            try {
                grid = parse_grid(grid_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--grid: ") + e.what());
            }
            std::vector<Algorithm> algorithms;
            std::stringstream list(algos_text);
            for (std::string name; std::getline(list, name, ',');) {
                const auto a = parse_algorithm(name);
                if (!a)
                    throw UsageError("--algos: unknown algorithm '" + name + "'");
                algorithms.push_back(*a);
            }
            BenchOptions bench;
            bench.nth = opts;
            bench.nth.cramer_constant = cramer_constant;
            bench.nth.charge_base_primes = !exclude_base;
            bench.repetitions = reps;
            bench.timeout = std::chrono::milliseconds(timeout_ms);
            const BenchReport report = bench_sweep(grid, algorithms, bench);
            const std::string text = to_json(report);
            if (!out_path.empty())
                write_file(out_path, text);
            if (json) {
                out << text;
            } else {
                for (const auto& e : report.entries)
                    out << std::setw(12) << e.n << "  " << std::setw(6) << to_string(e.algorithm) << "  "
                        << std::setw(12) << e.result << "  " << std::setw(12)
                        << fixed(static_cast<long double>(e.wall_time_ns) / 1e6L, 3) << " ms  " << e.status << '\n';
                for (const auto& [name, slope] : report.slopes)
                    out << "slope " << name << ": " << fixed(slope, 3) << '\n';
            }
        } else if (*verify_cmd) {
            VerifyOptions v;
            v.max_n = count_arg(max_n_text, "--max-n");
            v.nth = opts;
            const VerifyReport report = run_verify(v);
            const std::string text = to_json(report);
            if (!out_path.empty())
                write_file(out_path, text);
            if (json) {
                out << text;
            } else {
                for (const auto& [kind, count] : report.checks_by_kind)
                    out << kind << ": " << count << " checks\n";
                for (const auto& f : report.failures)
                    out << "FAIL " << f.kind << " at " << f.at << ": " << f.details << '\n';
                out << (report.passed() ? "all " : "") << report.checked << " checks, " << report.failures.size()
                    << " failures\n";
            }
            return report.passed() ? kOk : kVerificationFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

} // namespace nthprime::cli
