#ifndef TROPREAL_CENSUS_HPP
#define TROPREAL_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropreal/criteria32.hpp"
#include "tropreal/realize.hpp"

namespace tropreal {

/// All tropical curves of degree d in L^3_2 up to coordinate permutation,
/// canonical representatives in sorted order.  Practical bound d <= 5.
std::vector<TropicalCurve> enumerate_curves(long long d);

struct CensusEntry {
  TropicalCurve curve;
  long long dim = -1;
  std::optional<long long> irr_dim;
  ObstructionReport obstructions;
};

struct CensusOptions {
  bool with_irr = false;
  unsigned jobs = 1;
};

struct CensusReport {
  long long degree = 0;
  long long characteristic = 0;
  std::size_t total_classes = 0;
  std::size_t non_realizable = 0;
  std::size_t intprod_unflagged_nonrealizable = 0;  // dim == -1 but intprod silent
  std::vector<CensusEntry> entries;
};

/// Realizability and obstructions for every class of degree d in
/// L = (x0+x1+x2+x3) over the given characteristic.  Deterministic output
/// independent of the number of jobs.
CensusReport run_census(long long degree, long long characteristic,
                        const CensusOptions& options = {});

/// Stable JSON serialization of a census report (schema documented in the
/// README).
std::string census_to_json(const CensusReport& report);

}  // namespace tropreal

#endif
