#pragma once

// Self-check suites run by `ks7 verify`. Each property is either checked
// exhaustively over a fixed range or on seeded random samples.

#include <cstdint>
#include <string>
#include <vector>

namespace ks7::verify {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string detail; ///< counterexample on failure, summary otherwise
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    std::vector<std::string> notes;

    bool passed() const;
};

struct Options {
    long samples = 10000;
    std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws BadInput for an unknown suite name.
SuiteReport run_suite(const std::string& name, const Options& options);

SuiteReport suite_nt(const Options& options);
SuiteReport suite_jupp(const Options& options);
SuiteReport suite_pipeline(const Options& options);
SuiteReport suite_f2det(const Options& options);
SuiteReport suite_spheres(const Options& options);

} // namespace ks7::verify
