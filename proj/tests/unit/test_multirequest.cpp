#include "core/multirequest.hpp"

#include "core/bounds.hpp"
#include "core/delivery.hpp"

#include <doctest.h>

#include <vector>

using namespace scl;

TEST_CASE("request slots become virtual users on the owner's cache") {
    // Physical user 2 requests slots 3, 5 and 7.
    MultiRequestInstance mri{8, make_rat(2),
                             {{1, 4}, {3, 5, 7}, {2, 6, 8}},
                             {1, 2, 3, 4, 5, 6, 7, 8}};
    const auto mapped = to_shared_cache(mri);
    CHECK(mapped.instance.num_files() == 8);
    CHECK(mapped.instance.num_users() == 8);
    CHECK(mapped.instance.num_caches() == 3);
    CHECK(mapped.instance.cache_size() == make_rat(2));
    CHECK(mapped.association.users_of(2) == std::vector<int>{3, 5, 7});
    CHECK(mapped.association.cache_of(5) == 2);
    CHECK(mapped.demand.file_of(3) == 3);
    CHECK(profile_of(mapped.association).counts() == std::vector<long>{3, 3, 2});
}

TEST_CASE("single requests reduce to dedicated caches") {
    MultiRequestInstance mri{3, make_rat(1), {{1}, {2}, {3}}, {3, 1, 2}};
    const auto mapped = to_shared_cache(mri);
    CHECK(mapped.association.lists() == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(profile_of(mapped.association).is_uniform());
}

TEST_CASE("mapping validates like the shared-cache model") {
    // Slot 2 is owned twice.
    CHECK_THROWS_AS(to_shared_cache({3, make_rat(1), {{1, 2}, {2, 3}}, {1, 2, 3}}), Error);
    // Slot 3 unowned.
    CHECK_THROWS_AS(to_shared_cache({3, make_rat(1), {{1}, {2}}, {1, 2, 3}}), Error);
    // More requests than files.
    CHECK_THROWS_AS(to_shared_cache({2, make_rat(1), {{1, 2}, {3}}, {1, 2, 1}}), Error);
}

TEST_CASE("multirequest optimum is the shared-cache optimum") {
    const Profile p({3, 1});
    for (int num = 0; num <= 4; ++num) {
        const Rat gamma = Rat(Int(num), Int(4));
        CHECK(multirequest_t_star(p, 2, gamma) == t_star(p, 2, gamma));
    }
    CHECK(multirequest_t_star(p, 2, make_rat(1, 2)) == make_rat(3, 2));
}

TEST_CASE("mapped delivery serves every physical user's full request list") {
    // Two physical users, four slots, worst-case demand; t = 1.
    MultiRequestInstance mri{4, make_rat(2), {{1, 2, 3}, {4}}, {1, 2, 3, 4}};
    const auto mapped = to_shared_cache(mri);
    const auto result = run_delivery(mapped.instance, mapped.association, mapped.demand, {24, 3});
    CHECK(result.all_ok());
    CHECK(result.delay == make_rat(3, 2));
    CHECK(result.delay ==
          multirequest_t_star(profile_of(mapped.association), 2, mapped.instance.gamma()));
}

TEST_CASE("mapped delivery with a rational cache size") {
    MultiRequestInstance mri{7, make_rat(7, 3), {{1, 2, 3, 4}, {5, 6}, {7}}, {1, 2, 3, 4, 5, 6, 7}};
    const auto mapped = to_shared_cache(mri);
    CHECK(mapped.instance.integer_t() == 1);
    const auto result = run_delivery(mapped.instance, mapped.association, mapped.demand, {24, 5});
    CHECK(result.all_ok());
    CHECK(result.delay == make_rat(10, 3));
    CHECK(result.delay ==
          multirequest_t_star(profile_of(mapped.association), 3, mapped.instance.gamma()));
}
