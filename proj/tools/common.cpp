#include "common.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "json.hpp"

namespace zxcli {

void check(zx_status status, const std::string& context) {
    if (status == ZX_OK) return;
    int code = (status == ZX_ERR_INVALID || status == ZX_ERR_DOMAIN) ? kExitBadConfig
                                                                     : kExitNumeric;
    throw CommandError(code, context + ": " + zx_last_error());
}

namespace {

double parse_one(const std::string& text) {
    size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw CommandError(kExitBadConfig, "not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(value))
        throw CommandError(kExitBadConfig, "not a finite number: '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::vector<double> parse_values(const std::string& text) {
    if (text.empty()) throw CommandError(kExitBadConfig, "empty value list");
    if (text.find(':') == std::string::npos) {
        std::vector<double> values;
        for (const auto& part : split(text, ',')) values.push_back(parse_one(part));
        return values;
    }
    auto parts = split(text, ':');
    if (parts.size() != 3)
        throw CommandError(kExitBadConfig, "range must be lo:hi:log or lo:hi:lin[,count]: '" +
                                               text + "'");
    double lo = parse_one(parts[0]);
    double hi = parse_one(parts[1]);
    std::string kind = parts[2];
    long count = 50;
    if (auto comma = kind.find(','); comma != std::string::npos) {
        count = static_cast<long>(parse_one(kind.substr(comma + 1)));
        kind = kind.substr(0, comma);
    }
    if (kind != "log" && kind != "lin")
        throw CommandError(kExitBadConfig, "range kind must be log or lin: '" + text + "'");
    if (count < 2 || count > 10'000'000)
        throw CommandError(kExitBadConfig, "range count must be in [2, 1e7]: '" + text + "'");
    if (!(hi > lo))
        throw CommandError(kExitBadConfig, "range needs hi > lo: '" + text + "'");
    if (kind == "log" && !(lo > 0.0))
        throw CommandError(kExitBadConfig, "log range needs lo > 0: '" + text + "'");
    std::vector<double> values(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        double s = static_cast<double>(i) / static_cast<double>(count - 1);
        values[static_cast<size_t>(i)] =
            kind == "log" ? lo * std::exp(s * std::log(hi / lo)) : lo + s * (hi - lo);
    }
    values.front() = lo;
    values.back() = hi;
    return values;
}

uint64_t fnv1a(std::string_view text) {
    uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hash_hex(uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

std::string format_full(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string format_short(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

int resolve_jobs(int flag_value) {
    if (const char* env = std::getenv("ZEROCROSS_JOBS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end == nullptr || *end != '\0' || parsed < 1 || parsed > 4096)
            throw CommandError(kExitBadConfig,
                               std::string("ZEROCROSS_JOBS must be a positive integer, got '") +
                                   env + "'");
        return static_cast<int>(parsed);
    }
    if (flag_value > 0) return flag_value;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Profile::Profile(const std::string& spec) {
    check(zx_profile_parse(spec.c_str(), &handle_), "profile '" + spec + "'");
}

Profile::~Profile() { zx_profile_free(handle_); }

ArtifactSet::~ArtifactSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& path : paths_) std::filesystem::remove(path, ec);
}

void ArtifactSet::write_file(const std::string& path, const std::string& content) {
    std::string temp = path + ".part";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw CommandError(kExitBadConfig, "cannot open '" + temp + "' for writing");
        out << content;
        if (!out.flush())
            throw CommandError(kExitBadConfig, "short write to '" + temp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw CommandError(kExitBadConfig, "cannot move output into place at '" + path + "'");
    }
    paths_.push_back(path);
}

Table::Table(std::string subcommand, std::string config_hash, std::vector<std::string> columns)
    : subcommand_(std::move(subcommand)),
      config_hash_(std::move(config_hash)),
      columns_(std::move(columns)) {}

void Table::row(const std::vector<double>& values) { rows_.push_back(values); }

std::string Table::render(const std::string& format) const {
    if (format == "csv") {
        std::string out = "# zerocross ";
        out += zx_version();
        out += ' ';
        out += subcommand_;
        out += ' ';
        out += config_hash_;
        out += '\n';
        for (size_t i = 0; i < columns_.size(); ++i) {
            if (i > 0) out += ',';
            out += columns_[i];
        }
        out += '\n';
        for (const auto& row : rows_) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i > 0) out += ',';
                out += format_full(row[i]);
            }
            out += '\n';
        }
        return out;
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["zerocross"] = zx_version();
        doc["subcommand"] = subcommand_;
        doc["config_hash"] = config_hash_;
        doc["columns"] = columns_;
        doc["rows"] = rows_;
        return doc.dump(2) + "\n";
    }
    throw CommandError(kExitBadConfig, "format must be csv or json, got '" + format + "'");
}

void specfun_identity_rows(std::vector<IdentityRow>& rows) {
    constexpr double kPi = 3.14159265358979323846;
    auto bessel = [](double nu, double x) {
        double value = 0.0;
        check(zx_bessel_j(nu, x, &value), "bessel_j");
        return value;
    };

    {
        std::mt19937 rng(12345u);
        std::uniform_real_distribution<double> order(0.02, 0.98);
        std::uniform_real_distribution<double> arg(0.1, 100.0);
        double worst = 0.0;
        std::string where = "-";
        for (int i = 0; i < 100; ++i) {
            double nu = order(rng);
            double z = arg(rng);
            double jn = bessel(nu, z);
            double jp = 0.0;
            check(zx_bessel_j_prime(nu, z, &jp), "bessel_j_prime");
            double lhs_minus = jn + (z / nu) * jp;
            double rhs_minus = (z / nu) * bessel(nu - 1.0, z);
            double lhs_plus = jn - (z / nu) * jp;
            double rhs_plus = (z / nu) * bessel(nu + 1.0, z);
            double r1 = std::fabs(lhs_minus - rhs_minus) /
                        std::max({std::fabs(lhs_minus), std::fabs(rhs_minus), 1e-3});
            double r2 = std::fabs(lhs_plus - rhs_plus) /
                        std::max({std::fabs(lhs_plus), std::fabs(rhs_plus), 1e-3});
            if (std::max(r1, r2) > worst) {
                worst = std::max(r1, r2);
                where = "nu=" + format_short(nu) + ";z=" + format_short(z);
            }
        }
        rows.push_back({"bessel_recurrence", where, worst, 1e-9});
    }

    {
        std::mt19937 rng(777u);
        std::uniform_real_distribution<double> order(0.05, 0.95);
        std::uniform_real_distribution<double> arg(0.2, 900.0);
        double worst = 0.0;
        std::string where = "-";
        auto probe = [&](double nu, double z) {
            double lhs = bessel(nu, z) * bessel(1.0 - nu, z) +
                         bessel(-nu, z) * bessel(nu - 1.0, z);
            double rhs = 2.0 * std::sin(nu * kPi) / (kPi * z);
            double r = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
            if (r > worst) {
                worst = r;
                where = "nu=" + format_short(nu) + ";z=" + format_short(z);
            }
        };
        for (int i = 0; i < 60; ++i) probe(order(rng), arg(rng));
        // Pin the switchover neighborhood in addition to the random draws.
        for (double z : {15.0, 16.0, 17.0, 18.0, 19.0})
            for (double nu : {1.0 / 6.0, 0.25, 1.0 / 3.0}) probe(nu, z);
        rows.push_back({"bessel_cross_product", where, worst, 1e-10});
    }

    {
        double worst = 0.0;
        std::string where = "-";
        for (double nu : {-0.75, -0.25, 0.25, 1.0 / 3.0, 0.5, 1.25, 2.0}) {
            for (double x = 15.0; x <= 19.0; x += 0.5) {
                double s = 0.0;
                double a = 0.0;
                check(zx_bessel_j_series(nu, x, &s), "bessel series");
                check(zx_bessel_j_asymptotic(nu, x, &a), "bessel asymptotic");
                double r = std::fabs(s - a) / std::max(1.0, std::fabs(s));
                if (r > worst) {
                    worst = r;
                    where = "nu=" + format_short(nu) + ";x=" + format_short(x);
                }
            }
        }
        rows.push_back({"bessel_branch_overlap", where, worst, 5e-12});
    }

    {
        double worst = 0.0;
        std::string where = "-";
        for (int l : {0, 1, 2, 3, 5, 10, 17, 25, 40, 50}) {
            for (double x : {-0.95, -0.5, -0.1, 0.0, 0.3, 0.7071067811865476, 0.99, 1.0}) {
                double got = 0.0;
                check(zx_assoc_legendre(l, 0, x, &got), "assoc_legendre");
                // Plain three-term recurrence, independent of the library path.
                double pm1 = 1.0;
                double p = x;
                if (l == 0) p = 1.0;
                for (int ll = 2; ll <= l; ++ll) {
                    double next = ((2.0 * ll - 1.0) * x * p - (ll - 1.0) * pm1) / ll;
                    pm1 = p;
                    p = next;
                }
                double r = std::fabs(got - p) / std::max(1.0, std::fabs(p));
                if (r > worst) {
                    worst = r;
                    where = "l=" + std::to_string(l) + ";x=" + format_short(x);
                }
            }
        }
        rows.push_back({"legendre_order_zero", where, worst, 1e-12});
    }

    {
        double worst = 0.0;
        std::string where = "-";
        for (int N = 0; N <= 20; ++N) {
            for (double x : {-0.9, -0.3, 0.1, 0.5, 0.9}) {
                double f = 0.0;
                check(zx_hyp2f1_terminating(-N, N + 1.0, 1.0, (1.0 - x) / 2.0, &f, nullptr),
                      "hyp2f1");
                double p = 0.0;
                check(zx_assoc_legendre(N, 0, x, &p), "assoc_legendre");
                double r = std::fabs(f - p) / std::max(1.0, std::fabs(p));
                if (r > worst) {
                    worst = r;
                    where = "N=" + std::to_string(N) + ";x=" + format_short(x);
                }
            }
        }
        rows.push_back({"hyp2f1_legendre_connection", where, worst, 1e-10});
    }
}

}  // namespace zxcli
