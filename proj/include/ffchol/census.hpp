#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "ffchol/cones.hpp"

namespace ffchol {

struct CensusReport {
    FieldPtr field;
    int n = 0;
    std::int64_t total_sym = 0;
    std::int64_t lpm_total = 0;
    std::int64_t tpm_total = 0;
    std::map<SignPattern, std::int64_t> per_pattern;  // LPM cones, odd q
    std::int64_t formula_value = 0;                   // (q-1)^n * q^C(n,2)
    std::pair<std::int64_t, std::int64_t> density;    // (lpm_total, total_sym)
};

// Yields every n x n symmetric matrix exactly once, ascending by the
// canonical code of the row-major upper-triangle tuple (last entry fastest).
// A shard (index, count) restricts the sweep to first rows whose code lies in
// the shard's slice of [0, q^n); shard {0, 1} is the full stream.
void enumerate_sym(const FieldPtr& field, int n,
                   const std::function<void(const SymMatrix&)>& visit,
                   std::int64_t budget = 10'000'000,
                   int shard_index = 0, int shard_count = 1);

// Full sweep with per-pattern counts; asserts the closed-form counts,
// equidistribution (odd q) and the exact density identity.
CensusReport run_census(const FieldPtr& field, int n, std::int64_t budget = 10'000'000);

// Merge shard-local reports; assertions run on the merged result.
CensusReport census_shard(const FieldPtr& field, int n, int shard_index, int shard_count,
                          std::int64_t budget = 10'000'000);
CensusReport merge_census(const CensusReport& a, const CensusReport& b);

// Closed-form and equidistribution assertions; throws E_ASSERTION with the
// offending pattern and counts. run_census calls this itself; sharded runs
// call it on the merged report.
void check_census(const CensusReport& r);

// Checks that x |-> det [[A, u], [u^T, x]] hits every field value once.
bool verify_extension_bijection(const Matrix& a, const std::vector<int>& u);

}  // namespace ffchol
