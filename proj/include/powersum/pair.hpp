#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

// Two lists of rationals asserted (or to be checked) to have equal k-th
// power sums for every k in `degrees`. Side lengths may differ: the
// degree-5 half identities are 6-vs-2 and odd-degree canonical forms move
// entries across sides.
struct PowerSumPair {
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    std::set<unsigned> degrees;
    std::string source;
    std::string flag;  // "", "degenerate" or "trivial"
};

enum class DegreeClass { all_even, all_odd, mixed };

DegreeClass degree_class(const std::set<unsigned>& degrees);

// Sum lhs_i^k - Sum rhs_j^k, exactly.
Rational power_sum_residual(const PowerSumPair& pair, unsigned k);

struct VerifyReport {
    std::map<unsigned, Rational> residuals;
    bool pass = false;  // true iff every residual is zero
};

VerifyReport verify_pair(const PowerSumPair& pair);

// Deterministic normal form: denominators cleared, zeros dropped, gcd
// reduced, signs normalized per degree class (abs for all-even, negatives
// moved across for all-odd, global negation only for mixed), each side
// sorted by |entry| descending with positives first on ties, sides ordered.
PowerSumPair canonicalize(const PowerSumPair& pair);

// Entry order used inside canonical forms.
bool canonical_entry_precedes(const Rational& a, const Rational& b);

// Equality of canonical forms (degrees and both sides).
bool canonical_equal(const PowerSumPair& a, const PowerSumPair& b);

// Strict ordering on pairs (for sorted, deduplicated search output).
bool pair_less(const PowerSumPair& a, const PowerSumPair& b);

PowerSumPair make_pair_int(const std::vector<long>& lhs, const std::vector<long>& rhs,
                           const std::set<unsigned>& degrees, const std::string& source = "");

}  // namespace powersum
