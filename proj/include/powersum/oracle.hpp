#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "powersum/pair.hpp"

namespace powersum::oracle {

struct SearchSpec {
    std::set<unsigned> degrees;
    unsigned height = 1;
    unsigned side_len = 6;
    // default: negatives allowed unless every degree is even
    std::optional<bool> signed_entries;
    unsigned workers = 0;  // 0 -> POWERSUM_WORKERS env var, else 1
    // rejects runs whose enumerated half-subsets, assembled sides or
    // join output would exceed this
    std::uint64_t work_ceiling = 100000000;
    // membership mode: restrict the join to this pair's power-sum bucket
    // and report whether the pair is among the search results
    std::optional<PowerSumPair> target;
};

bool spec_signed(const SearchSpec& spec);

// All canonically-distinct valid pairs within bounds, sorted; trivial
// pairs (identical multisets) excluded. Meet-in-the-middle on half-side
// power sums. Throws MathError when the work ceiling is exceeded.
std::vector<PowerSumPair> search(const SearchSpec& spec);

// Direct integer-only summation per degree, independent of the exactcore
// polynomial/rational path.
bool oracle_verify(const PowerSumPair& pair);

}  // namespace powersum::oracle
