#include "core/delivery.hpp"

#include "core/combinatorics.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace scl;

namespace {

Instance golden_instance() { return Instance(8, 8, 4, make_rat(4)); }
Association golden_assoc() { return Association({{1, 2, 3}, {4, 5}, {6, 7}, {8}}, 8); }
Demand golden_demand() { return Demand({1, 2, 3, 4, 5, 6, 7, 8}, 8); }

// (round, targets, summand labels) triples the delivery must produce, in
// any order within a round.
struct ExpectedTx {
    int round;
    std::vector<int> targets;
    std::vector<std::string> summands;
};

const std::vector<ExpectedTx> kGoldenTxs = {
    {1, {1, 4, 6}, {"1:{2,3}", "4:{1,3}", "6:{1,2}"}},
    {1, {1, 4, 8}, {"1:{2,4}", "4:{1,4}", "8:{1,2}"}},
    {1, {1, 6, 8}, {"1:{3,4}", "6:{1,4}", "8:{1,3}"}},
    {1, {4, 6, 8}, {"4:{3,4}", "6:{2,4}", "8:{2,3}"}},
    {2, {2, 5, 7}, {"2:{2,3}", "5:{1,3}", "7:{1,2}"}},
    {2, {2, 5}, {"2:{2,4}", "5:{1,4}"}},
    {2, {2, 7}, {"2:{3,4}", "7:{1,4}"}},
    {2, {5, 7}, {"5:{3,4}", "7:{2,4}"}},
    {3, {3}, {"3:{2,3}"}},
    {3, {3}, {"3:{2,4}"}},
    {3, {3}, {"3:{3,4}"}},
};

std::vector<std::string> summand_strings(const Transmission& tx) {
    std::vector<std::string> out;
    for (const auto& id : tx.summands) out.push_back(id.to_string());
    return out;
}

}  // namespace

TEST_CASE("caches are ranked by population with ties by label") {
    CHECK(cache_order_by_population(golden_assoc()) == std::vector<int>{1, 2, 3, 4});
    Association skewed({{1}, {2, 3, 4}, {5, 6}}, 6);
    CHECK(cache_order_by_population(skewed) == std::vector<int>{2, 3, 1});
    Association tied({{1, 2}, {3, 4}, {5}}, 5);
    CHECK(cache_order_by_population(tied) == std::vector<int>{1, 2, 3});
}

TEST_CASE("rounds serve the j-th user of every still-active cache") {
    const auto rs = rounds(golden_assoc());
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].index == 1);
    CHECK(rs[0].users == std::vector<int>{1, 4, 6, 8});
    CHECK(rs[1].users == std::vector<int>{2, 5, 7});
    CHECK(rs[2].users == std::vector<int>{3});
}

TEST_CASE("golden example: 11 transmissions over 3 rounds, delay 11/6") {
    const auto result =
        run_delivery(golden_instance(), golden_assoc(), golden_demand(), {96, 1});
    CHECK(result.rounds.size() == 3);
    CHECK(result.transmissions.size() == 11);
    CHECK(result.delay == make_rat(11, 6));
    CHECK(result.all_ok());
    for (bool ok : result.per_user_ok) CHECK(ok);

    REQUIRE(result.transmissions.size() == kGoldenTxs.size());
    // Compare per round as sets; emission order within a round is not part
    // of the contract.
    auto key = [](int round, const std::vector<int>& targets,
                  const std::vector<std::string>& summands) {
        return std::make_tuple(round, targets, summands);
    };
    std::multiset<std::tuple<int, std::vector<int>, std::vector<std::string>>> got, want;
    for (const auto& tx : result.transmissions)
        got.insert(key(tx.round, tx.targets, summand_strings(tx)));
    for (const auto& e : kGoldenTxs) want.insert(key(e.round, e.targets, e.summands));
    CHECK(got == want);
}

TEST_CASE("golden example: per-round counts match the formula") {
    const Profile p({3, 2, 2, 1});
    CHECK(round_transmission_count(p, 2, 1) == 4);
    CHECK(round_transmission_count(p, 2, 2) == 4);
    CHECK(round_transmission_count(p, 2, 3) == 3);
    const auto result = run_delivery(golden_instance(), golden_assoc(), golden_demand());
    std::map<int, long> per_round;
    for (const auto& tx : result.transmissions) ++per_round[tx.round];
    CHECK(per_round[1] == 4);
    CHECK(per_round[2] == 4);
    CHECK(per_round[3] == 3);
}

TEST_CASE("closed_form_delay on frozen examples") {
    CHECK(closed_form_delay(Profile({3, 2, 2, 1}), 4, 2) == make_rat(11, 6));
    CHECK(closed_form_delay(Profile({2, 2}), 2, 1) == make_rat(1));
    CHECK(closed_form_delay(Profile({3, 1}), 2, 1) == make_rat(3, 2));
    CHECK(closed_form_delay(Profile({2, 2, 2}), 3, 1) == make_rat(2));
    CHECK(closed_form_delay(Profile({4, 2, 1}), 3, 1) == make_rat(10, 3));
    CHECK(closed_form_delay(Profile({3, 2, 2, 1}), 4, 0) == make_rat(8));
    CHECK(closed_form_delay(Profile({3, 2, 2, 1}), 4, 4) == make_rat(0));
    CHECK_THROWS_AS(closed_form_delay(Profile({3, 1}), 4, 1), Error);
    CHECK_THROWS_AS(closed_form_delay(Profile({3, 1}), 2, 3), Error);
}

TEST_CASE("delay equals transmissions over subpacketization") {
    for (int t = 0; t <= 4; ++t) {
        Instance inst(8, 8, 4, make_rat(8 * t, 4));
        const auto result = run_delivery(inst, golden_assoc(), golden_demand());
        CHECK(result.delay == Rat(Int(static_cast<long>(result.transmissions.size())), binom(4, t)));
        CHECK(result.delay == closed_form_delay(Profile({3, 2, 2, 1}), 4, t));
        CHECK(result.all_ok());
    }
}

TEST_CASE("t = 0 degenerates to one unicast per user") {
    Instance inst(4, 4, 2, make_rat(0));
    Association assoc({{1, 2, 3}, {4}}, 4);
    const auto result = run_delivery(inst, assoc, Demand({4, 3, 2, 1}, 4), {16, 9});
    CHECK(result.transmissions.size() == 4);
    CHECK(result.delay == make_rat(4));
    CHECK(result.all_ok());
    for (const auto& tx : result.transmissions) CHECK(tx.fanout() == 1);
}

TEST_CASE("t = Lambda means everything is cached") {
    Instance inst(4, 4, 2, make_rat(4));
    const auto result = run_delivery(inst, Association({{1, 2}, {3, 4}}, 4),
                                     Demand({1, 2, 3, 4}, 4), {8, 2});
    CHECK(result.transmissions.empty());
    CHECK(result.delay == make_rat(0));
    CHECK(result.all_ok());
}

TEST_CASE("dedicated caches recover the classic scheme") {
    // One user per cache, t = 2: a single round of binom(4,3) multicasts.
    Instance inst(4, 4, 4, make_rat(2));
    Association assoc({{1}, {2}, {3}, {4}}, 4);
    const auto result = run_delivery(inst, assoc, Demand({1, 2, 3, 4}, 4), {24, 5});
    CHECK(result.rounds.size() == 1);
    CHECK(result.transmissions.size() == 4);
    CHECK(result.delay == make_rat(2, 3));
    CHECK(result.all_ok());
    for (const auto& tx : result.transmissions) CHECK(tx.fanout() == 3);
}

TEST_CASE("repeated file requests decode correctly") {
    Instance inst(4, 4, 2, make_rat(2));
    Association assoc({{1, 2}, {3, 4}}, 4);
    const auto result = run_delivery(inst, assoc, Demand({1, 1, 2, 2}, 4), {32, 11});
    CHECK(result.all_ok());
    CHECK(result.delay == closed_form_delay(Profile({2, 2}), 2, 1));
}

TEST_CASE("payload recovery is bit exact across seeds") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xDEADBEEFULL}) {
        const auto result =
            run_delivery(golden_instance(), golden_assoc(), golden_demand(), {48, seed});
        CHECK(result.all_ok());
    }
}

TEST_CASE("bookkeeping mode records decoded subfile ids") {
    const auto result = run_delivery(golden_instance(), golden_assoc(), golden_demand());
    // User 8 (cache 4) must decode its file's subfiles whose label avoids cache 4.
    const auto& got = result.decoded[7];
    std::set<std::vector<int>> labels;
    for (const auto& id : got) {
        CHECK(id.file == 8);
        labels.insert(id.label);
    }
    CHECK(labels == std::set<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("decode rejects a non-targeted user") {
    const auto result = run_delivery(golden_instance(), golden_assoc(), golden_demand());
    Placement p = place(golden_instance());
    // First round-1 transmission targets users 1, 4, 6; user 2 is not there.
    const auto& tx = result.transmissions.front();
    try {
        decode(2, tx, p, golden_assoc());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_targeted);
    }
}

TEST_CASE("decode rejects a transmission whose interference is not cached") {
    Placement p = place(Instance(4, 4, 2, make_rat(2)));
    Association assoc({{1, 2}, {3, 4}}, 4);
    Transmission bogus;
    bogus.round = 1;
    bogus.cache_set = {1, 2};
    bogus.targets = {1, 3};
    bogus.target_caches = {1, 2};
    // User 3's summand is labeled {2}; user 1 sits at cache 1 and lacks it.
    bogus.summands = {SubfileId{1, {2}}, SubfileId{3, {2}}};
    try {
        decode(1, bogus, p, assoc);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::missing_side_info);
    }
}

TEST_CASE("run_delivery validates shape agreement") {
    CHECK_THROWS_AS(
        run_delivery(golden_instance(), Association({{1, 2}, {3, 4}}, 4), golden_demand()), Error);
    CHECK_THROWS_AS(run_delivery(golden_instance(), golden_assoc(), Demand({1, 2}, 8)), Error);
}

TEST_CASE("transmission json includes rounds, targets and summands") {
    const auto result =
        run_delivery(golden_instance(), golden_assoc(), golden_demand(), {96, 1});
    const std::string j = result.to_json();
    CHECK(j.find("\"delay\": \"11/6\"") != std::string::npos);
    CHECK(j.find("\"chi_Q\"") != std::string::npos);
    CHECK(j.find("payload_hex") != std::string::npos);
    CHECK(j.find("1:{2,3}") != std::string::npos);
}
