#include "nthprime/report.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nthprime {
namespace {

using nlohmann::ordered_json;

ordered_json entry_json(const BenchEntry& e)
{
    return {{"n", e.n},
            {"algorithm", std::string(to_string(e.algorithm))},
            {"status", e.status},
            {"result", e.result},
            {"wall_time_ns", e.wall_time_ns},
            {"pi_evals", e.pi_evals},
            {"cells_sieved", e.cells_sieved},
            {"widenings", e.widenings}};
}

Algorithm algorithm_from(const std::string& name)
{
    if (const auto a = parse_algorithm(name))
        return *a;
    throw std::invalid_argument("unknown algorithm in report: " + name);
}

template <typename F>
auto parse_guarded(std::string_view text, F&& build)
{
    try {
        return build(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

} // namespace

std::string to_json(const BenchReport& report)
{
    ordered_json doc;
    const BenchMetadata& m = report.metadata;
    doc["metadata"] = {{"version", m.version},
                       {"pi_method_name", m.pi_method_name},
                       {"c0", m.c0},
                       {"segment_size", m.segment_size},
                       {"threads", m.threads},
                       {"repetitions", m.repetitions},
                       {"charge_base_primes", m.charge_base_primes}};
    doc["entries"] = ordered_json::array();
    for (const auto& e : report.entries)
        doc["entries"].push_back(entry_json(e));
    doc["slopes"] = ordered_json::object();
    for (const auto& [name, slope] : report.slopes) {
        if (std::isfinite(slope))
            doc["slopes"][name] = slope;
        else
            doc["slopes"][name] = nullptr;
    }
    return doc.dump(2) + "\n";
}

std::string to_json(const VerifyReport& report)
{
    ordered_json doc;
    doc["max_n"] = report.max_n;
    doc["passed"] = report.passed();
    doc["checked"] = report.checked;
    doc["checks_by_kind"] = ordered_json::object();
    for (const auto& [kind, count] : report.checks_by_kind)
        doc["checks_by_kind"][kind] = count;
    doc["failures"] = ordered_json::array();
    for (const auto& f : report.failures)
        doc["failures"].push_back({{"kind", f.kind}, {"at", f.at}, {"details", f.details}});
    return doc.dump(2) + "\n";
}

BenchReport bench_report_from_json(std::string_view text)
{
    return parse_guarded(text, [](const ordered_json& doc) {
        BenchReport r;
        const auto& m = doc.at("metadata");
        r.metadata.version = m.at("version").get<std::string>();
        r.metadata.pi_method_name = m.at("pi_method_name").get<std::string>();
        r.metadata.c0 = m.at("c0").get<double>();
        r.metadata.segment_size = m.at("segment_size").get<std::uint64_t>();
        r.metadata.threads = m.at("threads").get<unsigned>();
        r.metadata.repetitions = m.at("repetitions").get<unsigned>();
        r.metadata.charge_base_primes = m.at("charge_base_primes").get<bool>();
        for (const auto& e : doc.at("entries")) {
            BenchEntry entry;
            entry.n = e.at("n").get<std::uint64_t>();
            entry.algorithm = algorithm_from(e.at("algorithm").get<std::string>());
            entry.status = e.at("status").get<std::string>();
            entry.result = e.at("result").get<std::uint64_t>();
            entry.wall_time_ns = e.at("wall_time_ns").get<std::uint64_t>();
            entry.pi_evals = e.at("pi_evals").get<std::uint64_t>();
            entry.cells_sieved = e.at("cells_sieved").get<std::uint64_t>();
            entry.widenings = e.at("widenings").get<unsigned>();
            r.entries.push_back(std::move(entry));
        }
        for (const auto& [name, slope] : doc.at("slopes").items())
            r.slopes[name] = slope.is_null() ? std::numeric_limits<double>::quiet_NaN() : slope.get<double>();
        return r;
    });
}

VerifyReport verify_report_from_json(std::string_view text)
{
    return parse_guarded(text, [](const ordered_json& doc) {
        VerifyReport r;
        r.max_n = doc.at("max_n").get<std::uint64_t>();
        r.checked = doc.at("checked").get<std::uint64_t>();
        for (const auto& [kind, count] : doc.at("checks_by_kind").items())
            r.checks_by_kind[kind] = count.get<std::uint64_t>();
        for (const auto& f : doc.at("failures"))
            r.failures.push_back(
                {f.at("kind").get<std::string>(), f.at("at").get<std::uint64_t>(), f.at("details").get<std::string>()});
        return r;
    });
}

double loglog_slope(const std::vector<BenchEntry>& entries, Algorithm algorithm, std::uint64_t n_min,
                    std::uint64_t n_max)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (const auto& e : entries) {
        if (e.algorithm != algorithm || e.status != "ok" || e.n < n_min || e.n > n_max || e.wall_time_ns == 0)
            continue;
        const double x = std::log(static_cast<double>(e.n));
        const double y = std::log(static_cast<double>(e.wall_time_ns));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    const double denom = static_cast<double>(count) * sxx - sx * sx;
    if (count < 2 || denom == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return (static_cast<double>(count) * sxy - sx * sy) / denom;
}

bool results_agree(const BenchReport& report)
{
    std::map<std::uint64_t, std::uint64_t> seen;
    for (const auto& e : report.entries) {
        if (e.status != "ok")
            continue;
        const auto [it, inserted] = seen.emplace(e.n, e.result);
        if (!inserted && it->second != e.result)
            return false;
    }
    return true;
}

} // namespace nthprime
