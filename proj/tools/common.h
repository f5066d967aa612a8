#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zerocross.h"

namespace zxcli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitNumeric = 3;

// Unwinds to main, which prints the message and exits with the given code.
struct CommandError : std::runtime_error {
    int exit_code;
    CommandError(int code, const std::string& what)
        : std::runtime_error(what), exit_code(code) {}
};

// Maps a failed API status onto the exit-code contract: invalid or
// out-of-domain arguments are configuration mistakes, numeric and internal
// failures are runtime ones. The message is taken from zx_last_error().
void check(zx_status status, const std::string& context);

// Flag value syntax: either explicit values "a,b,c" or a range
// "lo:hi:log[,count]" / "lo:hi:lin[,count]" with count defaulting to 50.
std::vector<double> parse_values(const std::string& text);

uint64_t fnv1a(std::string_view text);
std::string hash_hex(uint64_t value);

// 17 significant digits, enough to reproduce the double exactly.
std::string format_full(double value);

// Compact form for file names.
std::string format_short(double value);

// ZEROCROSS_JOBS wins over the flag; 0 or less falls back to the machine's
// hardware parallelism.
int resolve_jobs(int flag_value);

// Owns a parsed profile handle.
class Profile {
  public:
    explicit Profile(const std::string& spec);
    ~Profile();
    Profile(const Profile&) = delete;
    Profile& operator=(const Profile&) = delete;
    const zx_profile* get() const { return handle_; }

  private:
    zx_profile* handle_ = nullptr;
};

// Files written by one command invocation. Each file lands atomically via a
// temp name; if the command fails before commit(), everything written so far
// is removed so no partial artifact set survives.
class ArtifactSet {
  public:
    ~ArtifactSet();
    void write_file(const std::string& path, const std::string& content);
    void commit() { committed_ = true; }

  private:
    std::vector<std::string> paths_;
    bool committed_ = false;
};

// One special-function identity, evaluated at its worst grid point.
struct IdentityRow {
    std::string name;
    std::string point;
    double residual;
    double threshold;
};

// The specfun identity catalog shared by `specfun-check` and `verify`:
// Bessel recurrences at random points, the cross-product identity (the
// canary for a tampered branch switchover), branch agreement across the
// switchover window, order-zero Legendre against the plain recurrence, and
// the terminating-2F1/Legendre connection.
void specfun_identity_rows(std::vector<IdentityRow>& rows);

// One output table, rendered as CSV (header comment, column line, rows with
// full-precision cells) or as an equivalent JSON document.
class Table {
  public:
    Table(std::string subcommand, std::string config_hash, std::vector<std::string> columns);
    void row(const std::vector<double>& values);
    std::string render(const std::string& format) const;

  private:
    std::string subcommand_;
    std::string config_hash_;
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace zxcli
