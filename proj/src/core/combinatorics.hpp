#pragma once

#include "core/rational.hpp"

#include <functional>
#include <vector>

namespace scl {

// binom(n,k) and perm(n,k) with the convention that both are 0 whenever
// n < k or n < 0. That convention is load bearing: round-size expressions
// like binom(lambda - served, t + 1) must vanish when a round is full.
Int binom(long n, long k);
Int perm(long n, long k);
Int factorial(long n);

// All size-k subsets of {1..n} in lexicographic order of the sorted
// element lists: {1,2} < {1,3} < ... < {2,3} < ...
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// Rank of a sorted size-k subset of {1..n} within the lexicographic order
// above, 0-based. Inverse of indexing into subsets_of_size(n, k).
long subset_rank(int n, const std::vector<int>& subset);

// Integer partitions of k_total into at most max_parts positive parts,
// padded with zeros to exactly max_parts entries, descending. Emitted in
// reverse-lexicographic order: (k,0,...) first, the most even split last.
std::vector<std::vector<long>> partitions_desc(long k_total, int max_parts);

// Calls fn for every permutation of {1..n} (n! calls, lexicographic).
void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace scl
