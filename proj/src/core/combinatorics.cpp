#include "core/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scl {

Int binom(long n, long k) {
    if (k < 0) throw std::invalid_argument("binom: k < 0");
    if (n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

Int perm(long n, long k) {
    if (k < 0) throw std::invalid_argument("perm: k < 0");
    if (n < 0 || n < k) return 0;
    Int result = 1;
    for (long i = 0; i < k; ++i) result *= (n - i);
    return result;
}

Int factorial(long n) { return perm(n, n); }

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        // Advance to the next subset in lexicographic order.
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

long subset_rank(int n, const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    Int rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v) rank += binom(n - v, k - i - 1);
        prev = subset[i];
    }
    return rank.convert_to<long>();
}

namespace {

void partitions_rec(long remaining, int parts_left, long max_part,
                    std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (remaining == 0) {
        std::vector<long> padded = cur;
        padded.resize(cur.size() + parts_left, 0);
        out.push_back(std::move(padded));
        return;
    }
    if (parts_left == 0) return;
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        // A descending tail of parts_left - 1 parts each <= p must cover the rest.
        if (p * parts_left < remaining) break;
        cur.push_back(p);
        partitions_rec(remaining - p, parts_left - 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long>> partitions_desc(long k_total, int max_parts) {
    std::vector<std::vector<long>> out;
    if (k_total < 0 || max_parts < 0) return out;
    if (k_total == 0) {
        out.emplace_back(max_parts, 0);
        return out;
    }
    std::vector<long> cur;
    partitions_rec(k_total, max_parts, k_total, cur, out);
    return out;
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace scl
