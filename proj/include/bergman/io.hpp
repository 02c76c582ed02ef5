#ifndef BERGMAN_IO_HPP
#define BERGMAN_IO_HPP

#include <cstdint>
#include <string>

#include "bergman/experiments.hpp"
#include "bergman/norms.hpp"

namespace bergman {

// 17 significant digits: doubles round-trip exactly through the CSV.
std::string format_double(double v);

std::uint64_t fnv1a_hash(const std::string& s);

std::string sweep_to_csv(const SweepResult& sweep, const std::string& config_hash);
std::string sweep_to_json(const SweepResult& sweep, const std::string& config_hash);

std::string curve_to_csv(const DistributionCurve& curve, const std::string& config_hash);
std::string curve_to_json(const DistributionCurve& curve, const std::string& config_hash);

void write_file(const std::string& path, const std::string& content);

} // namespace bergman

#endif
