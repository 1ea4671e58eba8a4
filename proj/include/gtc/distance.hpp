#pragma once

#include <map>
#include <string>

#include "gtc/codes.hpp"

namespace gtc {

enum class DistanceMethod { Exhaustive, ColumnRank };

std::string method_name(DistanceMethod m);

struct WorkCounters {
    long long codewords = 0;  // nonzero messages enumerated
    long long subsets = 0;    // column subsets rank-checked
};

struct DistanceResult {
    long long d = 0;  // exact minimum distance, or the certified lower bound when partial
    DistanceMethod method = DistanceMethod::Exhaustive;
    long long certified_lower_bound = 0;
    WorkCounters work;
    bool partial = false;  // column-rank budget ran out before the exact value
};

inline constexpr long long kDefaultBudget = 10'000'000;

// Minimum Hamming weight over all q^k - 1 nonzero messages, enumerated by an
// odometer with one scaled generator-row update per changed message
// coordinate.  Throws BudgetExceeded when q^k - 1 > budget.
DistanceResult min_distance_exhaustive(const CodeSpec& spec, long long budget = kDefaultBudget);

// Smallest w such that some w columns of the control matrix are linearly
// dependent; equals the exact minimum distance.  Subset checks are counted
// against the budget; on exhaustion the best certified lower bound so far is
// returned with partial = true instead of an exact value.
DistanceResult min_distance_column_rank(const CodeSpec& spec, long long budget = kDefaultBudget);

// True iff every (d-1)-subset of control-matrix columns has full column rank,
// which proves minimum distance >= d.  d = 1 is vacuously true.
bool certify_lower_bound(const CodeSpec& spec, long long d, long long budget = kDefaultBudget,
                         WorkCounters* work = nullptr);

// Codeword count per Hamming weight over all q^k messages (zero included);
// only nonzero counts appear in the map.
std::map<int, long long> weight_distribution(const CodeSpec& spec, long long budget = kDefaultBudget);

// The dual code's weight distribution predicted from `dist` by the MacWilliams
// identity, in exact integer arithmetic.  Throws if the transform is not
// integral, i.e. if `dist` is not the distribution of a linear code.
std::map<int, long long> macwilliams_dual_distribution(const std::map<int, long long>& dist,
                                                       long long n, int q);

}  // namespace gtc
