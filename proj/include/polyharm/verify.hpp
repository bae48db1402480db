#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyharm/document.hpp"

namespace polyharm::verify {

// Suites: products, faulhaber, polylog-routes, character, top, kernel, chi,
// matrices, all. Deterministic for fixed (suite, max_grade, seed); throws
// std::invalid_argument on an unknown suite name.
VerdictPayload run_suite(const std::string& suite, uint64_t max_grade, uint64_t seed);

const std::vector<std::string>& suite_names();

// One line per identity check plus a summary line; byte-stable for fixed
// inputs.
std::string report_text(const VerdictPayload& v);

}  // namespace polyharm::verify
