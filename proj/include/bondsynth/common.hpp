#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace bondsynth {

// Error taxonomy. The CLI maps these onto exit codes:
// validation -> 1, training -> 2, external service -> 3.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : ValidationError {
    using ValidationError::ValidationError;
};

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExternalServiceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

// Stable 64-bit hash of a string (FNV-1a).
std::uint64_t fnv1a64(const std::string& s);

// splitmix64 finalizer; used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Component seed derivation: seed_i = splitmix64(global ^ fnv1a64(component)).
std::uint64_t derive_seed(std::uint64_t global_seed, const std::string& component);

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file_hex(const std::string& path);

// Basic sample statistics (population moments unless noted).
double mean_of(const std::vector<double>& xs);
double population_variance(const std::vector<double>& xs);
double population_std(const std::vector<double>& xs);
// Pearson correlation; returns 0 and sets *defined=false when either side is constant.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys, bool* defined = nullptr);

// Canonical numeric formatting for CSV artifacts: '.' separator, up to six
// fractional digits, trailing zeros trimmed.
std::string format_csv_number(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bondsynth
