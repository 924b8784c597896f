#pragma once

#include "fairdiv/partition.hpp"

namespace fairdiv {

// Unpruned reference solvers: plain k^|S| enumeration of every assignment,
// kept deliberately independent of the branch-and-bound path so the two can
// be cross-checked. Intended for k^|S| up to about 10^6.

std::pair<Rational, PartitionResult> brute_mms_value(const Valuation& v, GoodSet s, int k);
PartitionResult brute_leximin_partition(const Valuation& v, GoodSet s, int k);
std::pair<Rational, PartitionResult> brute_minimax_partition(const Valuation& v, GoodSet s, int k);

} // namespace fairdiv
