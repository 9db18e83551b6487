#include "core/bounds.hpp"

#include "core/combinatorics.hpp"
#include "core/delivery.hpp"

#include <doctest.h>

#include <vector>

using namespace scl;

TEST_CASE("c sequence of the golden profile") {
    const auto cs = c_sequence(Profile({3, 2, 2, 1}), 4);
    REQUIRE(cs.c.size() == 5);
    CHECK(cs.num_caches() == 4);
    CHECK(cs.c[0] == make_rat(8));
    CHECK(cs.c[1] == make_rat(15, 4));
    CHECK(cs.c[2] == make_rat(11, 6));
    CHECK(cs.c[3] == make_rat(3, 4));
    CHECK(cs.c[4] == make_rat(0));
}

TEST_CASE("c sequence endpoints and monotonicity") {
    const std::vector<std::vector<long>> profiles{
        {5, 0}, {3, 2}, {4, 3, 1}, {2, 2, 2}, {6, 1, 1, 1}, {3, 3, 2, 2, 1}};
    for (const auto& counts : profiles) {
        const Profile p(counts);
        const int lambda = p.num_caches();
        const auto cs = c_sequence(p, lambda);
        CHECK(cs.c.front() == Rat(Int(p.num_users())));
        CHECK(cs.c.back() == make_rat(0));
        for (std::size_t i = 1; i < cs.c.size(); ++i) CHECK(cs.c[i] <= cs.c[i - 1]);
        // Convexity of the anchors: second differences are non-negative.
        for (std::size_t i = 2; i < cs.c.size(); ++i)
            CHECK(cs.c[i] - cs.c[i - 1] >= cs.c[i - 1] - cs.c[i - 2]);
        // Every anchor agrees with the delivery closed form.
        for (int t = 0; t <= lambda; ++t) CHECK(cs.c[t] == closed_form_delay(p, lambda, t));
    }
}

TEST_CASE("tradeoff curve keeps convex anchors on the hull") {
    const auto curve = tradeoff_curve(Profile({3, 2, 2, 1}), 4);
    CHECK(curve.anchors().size() == 5);
    CHECK(curve.hull().size() == 5);
    CHECK(curve.eval(make_rat(0)) == make_rat(8));
    CHECK(curve.eval(make_rat(1, 4)) == make_rat(15, 4));
    CHECK(curve.eval(make_rat(1, 2)) == make_rat(11, 6));
    CHECK(curve.eval(make_rat(1)) == make_rat(0));
    // Between anchors the envelope interpolates linearly.
    CHECK(curve.eval(make_rat(1, 8)) == make_rat(47, 8));
    CHECK(curve.eval(make_rat(3, 8)) == (make_rat(15, 4) + make_rat(11, 6)) / make_rat(2));
    CHECK_THROWS_AS(curve.eval(make_rat(-1, 10)), Error);
    CHECK_THROWS_AS(curve.eval(make_rat(11, 10)), Error);
}

TEST_CASE("tradeoff curve drops anchors above the envelope") {
    // A deliberately non-convex anchor set: the middle point lies above the
    // chord from (0,4) to (1,0) and must not affect evaluation.
    TradeoffCurve curve({{make_rat(0), make_rat(4)},
                         {make_rat(1, 2), make_rat(3)},
                         {make_rat(1), make_rat(0)}});
    CHECK(curve.anchors().size() == 3);
    CHECK(curve.hull().size() == 2);
    CHECK(curve.eval(make_rat(1, 2)) == make_rat(2));
    CHECK(curve.eval(make_rat(1, 4)) == make_rat(3));
}

TEST_CASE("t_star evaluates the envelope of the c sequence") {
    const Profile p({3, 2, 2, 1});
    CHECK(t_star(p, 4, make_rat(1, 2)) == make_rat(11, 6));
    CHECK(t_star(p, 4, make_rat(0)) == make_rat(8));
    CHECK(t_star(p, 4, make_rat(1)) == make_rat(0));
    CHECK(t_star(p, 4, make_rat(1, 8)) == make_rat(47, 8));
    CHECK_THROWS_AS(t_star(p, 4, make_rat(2)), Error);
}

TEST_CASE("degenerate profile (K,0,...) gives the local caching line") {
    const Profile p({30, 0, 0, 0, 0, 0});
    for (int i = 0; i <= 6; ++i) {
        const Rat gamma = Rat(Int(i), Int(6));
        CHECK(t_star(p, 6, gamma) == Rat(Int(30)) * (make_rat(1) - gamma));
    }
}

TEST_CASE("uniform t_star matches K(1-gamma)/(Lambda gamma + 1) at anchors") {
    CHECK(uniform_t_star(30, 6, make_rat(1, 6)) == make_rat(25, 2));
    CHECK(uniform_t_star(30, 6, make_rat(1, 3)) == make_rat(20, 3));
    CHECK(uniform_t_star(30, 6, make_rat(0)) == make_rat(30));
    CHECK(uniform_t_star(30, 6, make_rat(1)) == make_rat(0));
    for (long k : {6L, 12L, 30L}) {
        for (int i = 0; i <= 6; ++i) {
            const Rat gamma = Rat(Int(i), Int(6));
            const Rat formula = Rat(Int(k)) * (make_rat(1) - gamma) /
                                (Rat(Int(6)) * gamma + make_rat(1));
            CHECK(uniform_t_star(k, 6, gamma) == formula);
        }
    }
}

TEST_CASE("uniform t_star interpolates between anchors") {
    // Midpoint of (1/6, 25/2) and (1/3, 20/3).
    CHECK(uniform_t_star(30, 6, make_rat(1, 4)) == make_rat(115, 12));
}

TEST_CASE("uniform t_star equals the uniform profile's curve") {
    const Profile uniform({5, 5, 5, 5, 5, 5});
    for (int num = 0; num <= 12; ++num) {
        const Rat gamma = Rat(Int(num), Int(12));
        CHECK(uniform_t_star(30, 6, gamma) == t_star(uniform, 6, gamma));
    }
}

TEST_CASE("pascal reduction holds whenever Lambda divides K") {
    for (int lambda = 1; lambda <= 12; ++lambda)
        for (int t = 0; t <= lambda; ++t) {
            CHECK(pascal_reduction_check(lambda, lambda, t));
            CHECK(pascal_reduction_check(2L * lambda, lambda, t));
        }
    CHECK_THROWS_AS(pascal_reduction_check(7, 2, 1), Error);
}

TEST_CASE("hockey stick identity behind the reduction") {
    for (int lambda = 1; lambda <= 12; ++lambda)
        for (int t = 0; t < lambda; ++t) {
            Int sum = 0;
            for (int r = 1; r <= lambda - t; ++r) sum += binom(lambda - r, t);
            CHECK(sum == binom(lambda, t + 1));
        }
}

TEST_CASE("q_i on the smallest class") {
    // N = K = 2 over two caches, profile (1,1).
    const Profile p({1, 1});
    CHECK(q_i(p, 2, 2, 0) == 4);
    CHECK(q_i(p, 2, 2, 1) == 1);
}

TEST_CASE("q_i term by term for profile (2,1)") {
    // N = K = 3, Lambda = 2, prefactor binom(2,2) = 1.
    // i = 0: r=1 gives perm(1,0)*1!*2*perm(2,1)*1! = 4, r=2 gives
    //        perm(1,1)*0!*1*perm(2,0)*2! = 2; times (Lambda-i) = 2: 12.
    const Profile p({2, 1});
    CHECK(q_i(p, 3, 2, 0) == 12);
    // i = 1: r=1 gives perm(0,0)*1!*2*perm(2,1)*1! = 4, r=2 has perm(0,1) = 0;
    //        times (Lambda-i) = 1: 4.
    CHECK(q_i(p, 3, 2, 1) == 4);
}

TEST_CASE("q_i skips empty caches") {
    // Zero-population ranks contribute nothing.
    const Profile padded({1, 1, 0});
    CHECK(q_i(padded, 2, 3, 0) >= 0);
    const Profile p({2, 2, 0});
    for (int i = 0; i <= 2; ++i) CHECK(q_i(p, 4, 3, i) >= 0);
}

TEST_CASE("lp lower bound at anchor memories equals the curve") {
    const Profile p({3, 2, 2, 1});
    // Lambda*M = 16 puts all mass on level 2.
    CHECK(lp_lower_bound(p, 8, 4, make_rat(4)) == make_rat(11, 6));
    CHECK(lp_lower_bound(p, 8, 4, make_rat(0)) == make_rat(8));
    CHECK(lp_lower_bound(p, 8, 4, make_rat(8)) == make_rat(0));
    CHECK(lp_lower_bound(p, 8, 4, make_rat(2)) == make_rat(15, 4));
}

TEST_CASE("lp lower bound between anchors is the chord value") {
    const Profile p({3, 2, 2, 1});
    // M = 1: gamma = 1/8, halfway between levels 0 and 1 in memory.
    CHECK(lp_lower_bound(p, 8, 4, make_rat(1)) == make_rat(47, 8));
    CHECK(lp_lower_bound(p, 8, 4, make_rat(1)) == t_star(p, 4, make_rat(1, 8)));
}

TEST_CASE("lp lower bound agrees with t_star everywhere") {
    const std::vector<std::vector<long>> profiles{{4, 0}, {3, 1}, {2, 2}, {3, 2, 1}, {2, 2, 2}};
    for (const auto& counts : profiles) {
        const Profile p(counts);
        const int lambda = p.num_caches();
        const long n = p.num_users() + 1;
        for (int num = 0; num <= 2 * lambda; ++num) {
            const Rat gamma = Rat(Int(num), Int(2 * lambda));
            const Rat mem = gamma * Rat(Int(n));
            CHECK(lp_lower_bound(p, n, lambda, mem) == t_star(p, lambda, gamma));
        }
    }
}
