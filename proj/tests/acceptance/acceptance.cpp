// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include "ratnp/selftest.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ratnp::selftest;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool passed = true;
    std::string detail;

    void add(const Check& c) {
        passed = passed && c.passed;
        if (!detail.empty()) detail += "; ";
        detail += c.name + (c.passed ? " ok" : " FAILED (" + c.detail + ")");
    }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o, double seconds) {
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << seconds;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << secs.str() << " s] "
              << o.detail << std::endl;
    if (!o.passed) ++failures;
}

}  // namespace

int main() {
    const std::string fixtures = RATNP_FIXTURE_DIR;
    {
        const auto t0 = Clock::now();
        Outcome o;
        o.add(example_sweep());
        o.add(example_fixtures(fixtures));
        const double s = since(t0);
        if (s >= 10.0) {
            o.passed = false;
            o.detail += "; took " + std::to_string(s) + " s, limit 10 s";
        }
        report(1, "example sweep reproduces every claim, certificate agrees with oracle", o, s);
    }
    {
        const auto t0 = Clock::now();
        Outcome o;
        o.add(adjoint_table_reconstruction());
        report(2, "adjoint table equals reconstruction on k2 in [-5, 9], p in [0, 40]", o, since(t0));
    }
    {
        const auto t0 = Clock::now();
        Outcome o;
        o.add(inequality_grid());
        report(3, "inequality grid and equality at p - m = -2", o, since(t0));
    }
    {
        const auto t0 = Clock::now();
        Outcome o;
        o.add(sharpness_fixtures());
        report(4, "sharpness fixtures", o, since(t0));
    }
    {
        const auto t0 = Clock::now();
        Outcome o;
        o.add(fano_fixtures());
        report(5, "Fano fixtures", o, since(t0));
    }
    {
        const auto t0 = Clock::now();
        Outcome o;
        o.add(hodge_property());
        o.add(monotonicity());
        o.add(mutation_robustness());
        o.add(oracle_determinism());
        report(6, "property suites", o, since(t0));
    }
    {
        const auto t0 = Clock::now();
        const std::string cmd =
            std::string("\"") + RATNP_CLI_PATH + "\" --fixtures \"" + fixtures + "\" selftest > /dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        const double s = since(t0);
        Outcome o;
        o.passed = rc == 0 && s < 60.0;
        o.detail = "ratnp selftest exit status " + std::to_string(rc) + (s < 60.0 ? "" : ", over 60 s");
        report(7, "ratnp selftest exits 0 within 60 s", o, s);
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
