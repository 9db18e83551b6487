#include "core/bounds.hpp"

#include "core/combinatorics.hpp"
#include "core/delivery.hpp"

#include <utility>

namespace scl {

namespace {

Rat cross(const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& a,
          const std::pair<Rat, Rat>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

}  // namespace

CSequence c_sequence(const Profile& profile, int num_caches) {
    const Profile p = padded_profile(profile, num_caches);
    CSequence seq;
    seq.c.reserve(num_caches + 1);
    for (int i = 0; i <= num_caches; ++i) seq.c.push_back(closed_form_delay(p, num_caches, i));
    return seq;
}

TradeoffCurve::TradeoffCurve(std::vector<std::pair<Rat, Rat>> anchors)
    : anchors_(std::move(anchors)) {
    if (anchors_.empty()) throw Error(Errc::invalid_argument, "curve needs at least one anchor");
    for (std::size_t k = 1; k < anchors_.size(); ++k)
        if (!(anchors_[k - 1].first < anchors_[k].first))
            throw Error(Errc::invalid_argument, "anchor x values must be strictly increasing");
    const Rat zero(Int(0));
    for (const auto& pt : anchors_) {
        while (hull_.size() >= 2 && cross(hull_[hull_.size() - 2], hull_.back(), pt) <= zero)
            hull_.pop_back();
        hull_.push_back(pt);
    }
}

Rat TradeoffCurve::eval(const Rat& x) const {
    if (x < hull_.front().first || x > hull_.back().first)
        throw Error(Errc::invalid_argument, "evaluation point outside curve range");
    if (hull_.size() == 1) return hull_.front().second;
    std::size_t k = 0;
    while (x > hull_[k + 1].first) ++k;
    const auto& a = hull_[k];
    const auto& b = hull_[k + 1];
    return a.second + (b.second - a.second) * (x - a.first) / (b.first - a.first);
}

TradeoffCurve tradeoff_curve(const Profile& profile, int num_caches) {
    if (num_caches < 1) throw Error(Errc::invalid_argument, "need at least one cache");
    const Profile p = padded_profile(profile, num_caches);
    const CSequence seq = c_sequence(p, num_caches);
    std::vector<std::pair<Rat, Rat>> anchors;
    anchors.reserve(num_caches + 1);
    for (int i = 0; i <= num_caches; ++i)
        anchors.emplace_back(make_rat(i, num_caches), seq.c[i]);
    return TradeoffCurve(std::move(anchors));
}

Rat t_star(const Profile& profile, int num_caches, const Rat& gamma) {
    return tradeoff_curve(profile, num_caches).eval(gamma);
}

Rat uniform_t_star(long num_users, int num_caches, const Rat& gamma) {
    if (num_caches < 1) throw Error(Errc::invalid_argument, "need at least one cache");
    if (num_users < 0) throw Error(Errc::invalid_argument, "negative user count");
    std::vector<std::pair<Rat, Rat>> anchors;
    anchors.reserve(num_caches + 1);
    for (int i = 0; i <= num_caches; ++i)
        anchors.emplace_back(make_rat(i, num_caches),
                             make_rat(num_users * (num_caches - i), long(num_caches) * (i + 1)));
    return TradeoffCurve(std::move(anchors)).eval(gamma);
}

bool pascal_reduction_check(long num_users, int num_caches, int t) {
    if (num_caches < 1 || num_users < 0 || num_users % num_caches != 0)
        throw Error(Errc::invalid_argument, "uniform reduction needs Lambda dividing K");
    if (t < 0 || t > num_caches) throw Error(Errc::invalid_argument, "t must lie in [0, Lambda]");
    Int sum = 0;
    for (int r = 1; r <= num_caches - t; ++r) sum += binom(num_caches - r, t);
    if (sum != binom(num_caches, t + 1)) return false;
    const Profile uniform(std::vector<long>(num_caches, num_users / num_caches));
    const Rat gamma = make_rat(t, num_caches);
    return t_star(uniform, num_caches, gamma) == uniform_t_star(num_users, num_caches, gamma);
}

Int q_i(const Profile& profile, long num_files, int num_caches, int i) {
    const Profile p = padded_profile(profile, num_caches);
    const long num_users = p.num_users();
    if (num_files < num_users)
        throw Error(Errc::invalid_argument, "need at least as many files as users");
    if (i < 0 || i > num_caches) throw Error(Errc::invalid_argument, "i must lie in [0, Lambda]");
    Int total = 0;
    for (int r = 1; r <= num_caches; ++r) {
        const long count = p.count(r);
        if (count == 0) continue;
        Int term = perm(num_caches - i - 1, r - 1);
        term *= factorial(num_caches - r);
        term *= count;
        term *= perm(num_users - 1, count - 1);
        term *= factorial(num_users - count);
        term *= num_caches - i;
        total += term;
    }
    return binom(num_files - 1, num_users - 1) * total;
}

Rat lp_lower_bound(const Profile& profile, long num_files, int num_caches, const Rat& mem) {
    const Profile p = padded_profile(profile, num_caches);
    const Rat n_files{Int(num_files)};
    const Rat zero{Int(0)};
    if (num_files < p.num_users())
        throw Error(Errc::invalid_argument, "need at least as many files as users");
    if (mem < zero || mem > n_files)
        throw Error(Errc::invalid_argument, "cache size must lie in [0, N]");
    const CSequence seq = c_sequence(p, num_caches);
    const Rat budget = Rat(Int(num_caches)) * mem;
    bool found = false;
    Rat best;
    auto consider = [&](const Rat& value) {
        if (!found || value < best) {
            best = value;
            found = true;
        }
    };
    for (int i = 0; i <= num_caches; ++i) {
        // All mass on one level: x_i = N, feasible when i*N <= Lambda*M.
        if (Rat(Int(i)) * n_files <= budget) consider(seq.c[i]);
        // Two levels with the memory constraint tight.
        for (int j = i + 1; j <= num_caches; ++j) {
            const Rat xj = (budget - Rat(Int(i)) * n_files) / Rat(Int(j - i));
            const Rat xi = n_files - xj;
            if (xj < zero || xi < zero) continue;
            consider((seq.c[i] * xi + seq.c[j] * xj) / n_files);
        }
    }
    return best;
}

}  // namespace scl
