#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace bgo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Random stream. Every logical thread of work owns one.
using Rng = std::mt19937_64;

/// Batch sizes and sample totals. Always integral, but held in a double:
/// the phase schedules ask for 2^{3i} N^3 samples per call, which leaves the
/// 64-bit integer range once N reaches 2^11. Exact up to 2^53.
using SampleCount = double;

/// Throws std::invalid_argument unless x has d >= 1 finite coordinates.
void require_point(const Vector& x, const std::string& what);

/// Deterministic stream seed for cell (a, b) of an experiment with base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace bgo
