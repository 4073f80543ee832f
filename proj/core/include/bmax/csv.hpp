#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "bmax/types.hpp"

namespace bmax {

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Load a dictionary and observations from CSV. Expected header:
///   y[,truth],f1,...,fM
/// Every row is one design point. Values are parsed with exact IEEE-754
/// round-trip semantics.
std::pair<Dictionary, Observation> load_csv(const std::string& path);
std::pair<Dictionary, Observation> load_csv_stream(std::istream& in,
                                                   const std::string& origin);

/// Write in the same format (truth column included when present), using
/// shortest round-trip decimals so that load(write(x)) is bit-exact.
void save_csv(const std::string& path, const Dictionary& dict,
              const Observation& obs);

/// Load a prior from a one-column CSV (optional header `pi`), one entry per
/// candidate. Entries must be positive; they are normalized to sum to 1.
SimplexWeights load_prior_csv(const std::string& path, int expected_m);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Exact round-trip parse; throws CsvError on malformed input.
double parse_double(const std::string& text);

}  // namespace bmax
