#pragma once

#include "report.hpp"

#include <random>
#include <string>

namespace forge {

/// STEINBERG, HILBERT_TABLE, RECIPROCITY, CERTIFICATES or FF_KGROUPS; UnknownSuite otherwise.
void run_suite(const std::string& name, const RunConfig& cfg, std::mt19937_64& rng, Report& rep);

void suite_steinberg(const RunConfig& cfg, std::mt19937_64& rng, Report& rep);
void suite_hilbert_table(const RunConfig& cfg, Report& rep);
void suite_reciprocity(const RunConfig& cfg, std::mt19937_64& rng, Report& rep);
void suite_certificates(const RunConfig& cfg, std::mt19937_64& rng, Report& rep);
void suite_ff_kgroups(const RunConfig& cfg, Report& rep);

}  // namespace forge
