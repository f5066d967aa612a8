#pragma once

#include <string>

namespace zxcli {

struct VerifyOptions {
    std::string out;             // report file; empty writes to stdout
    double rel_tol = 1e-10;      // integrator tolerance for the Wronskian study
    double tamper_bessel = 0.0;  // fault injection: forced Bessel switchover, 0 = off
    int jobs = 0;
};

// Runs the invariant catalog and emits the JSON report. Throws CommandError
// with the verification exit code when any check fails.
void run_verify(const VerifyOptions& options);

}  // namespace zxcli
