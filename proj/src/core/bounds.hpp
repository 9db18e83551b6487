#pragma once

#include "core/model.hpp"
#include "core/rational.hpp"

#include <utility>
#include <vector>

namespace scl {

// The sequence c_0 >= c_1 >= ... >= c_Lambda with
//   c_i = sum_{r=1}^{Lambda-i} L_r * binom(Lambda-r, i) / binom(Lambda, i).
// c_0 = K, c_Lambda = 0.
struct CSequence {
    std::vector<Rat> c;  // index i = 0..Lambda

    int num_caches() const { return static_cast<int>(c.size()) - 1; }
};

CSequence c_sequence(const Profile& profile, int num_caches);

// Memory-delay tradeoff: anchor points (i/Lambda, T_i) joined by their lower
// convex envelope. Evaluation interpolates linearly between hull points, so
// anchors above the hull never dominate.
class TradeoffCurve {
public:
    // Anchors must have strictly increasing x. Keeps both the raw anchors
    // and the computed hull.
    explicit TradeoffCurve(std::vector<std::pair<Rat, Rat>> anchors);

    const std::vector<std::pair<Rat, Rat>>& anchors() const { return anchors_; }
    const std::vector<std::pair<Rat, Rat>>& hull() const { return hull_; }

    // Envelope value at x; x must lie within the anchor range.
    Rat eval(const Rat& x) const;

private:
    std::vector<std::pair<Rat, Rat>> anchors_;
    std::vector<std::pair<Rat, Rat>> hull_;
};

// Curve with anchors (i/Lambda, c_i) for the given profile.
TradeoffCurve tradeoff_curve(const Profile& profile, int num_caches);

// Optimal delay for the profile at cache fraction gamma in [0,1].
Rat t_star(const Profile& profile, int num_caches, const Rat& gamma);

// Optimal delay for the uniform profile: K(1-gamma)/(Lambda*gamma+1) at the
// anchors gamma = i/Lambda, lower convex envelope in between.
Rat uniform_t_star(long num_users, int num_caches, const Rat& gamma);

// Checks the hockey-stick identity sum_{r=1}^{Lambda-t} binom(Lambda-r, t)
// = binom(Lambda, t+1) and that the per-profile delay formula agrees with
// the uniform closed form at gamma = t/Lambda. Requires Lambda | K.
bool pascal_reduction_check(long num_users, int num_caches, int t);

// Number of appearances of any fixed subfile cached in exactly i helpers
// across the acyclic subgraphs of a whole demand class:
//   binom(N-1,K-1) * sum_{r=1}^{Lambda} perm(Lambda-i-1, r-1) * (Lambda-r)!
//     * L_r * perm(K-1, L_r-1) * (K-L_r)! * (Lambda-i).
Int q_i(const Profile& profile, long num_files, int num_caches, int i);

// Exact minimum of sum_i c_i*x_i / N subject to sum_i x_i = N,
// sum_i i*x_i <= Lambda*M, x_i >= 0, solved by vertex enumeration
// (singletons, and pairs with the memory constraint tight).
Rat lp_lower_bound(const Profile& profile, long num_files, int num_caches, const Rat& mem);

}  // namespace scl
