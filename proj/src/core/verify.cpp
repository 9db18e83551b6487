#include "core/verify.hpp"

#include "core/bounds.hpp"
#include "core/combinatorics.hpp"
#include "core/delivery.hpp"
#include "core/indexcoding.hpp"
#include "core/model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <json.hpp>

namespace scl {

namespace {

std::string mask_label(unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int c = 1; mask != 0; ++c, mask >>= 1)
        if (mask & 1u) {
            if (!first) s += ',';
            s += std::to_string(c);
            first = false;
        }
    return s + "}";
}

Demand worst_case_demand(int num_users, int num_files) {
    std::vector<int> files(num_users);
    std::iota(files.begin(), files.end(), 1);
    return Demand(std::move(files), num_files);
}

}  // namespace

bool VerifyReport::all_ok() const {
    return subgraph_always_acyclic && qi_matches && scheme_matches_formula && lp_matches_formula &&
           counts_match && tightness_exact && failures.empty();
}

VerifyReport run_verify(const VerifyCaps& caps) {
    if (caps.max_users < 1 || caps.max_caches < 1 || caps.max_files < 1 ||
        caps.class_budget < 1)
        throw Error(Errc::invalid_argument, "verify caps must be positive");
    VerifyReport rep;
    auto fail = [&rep](bool& flag, std::string what) {
        flag = false;
        rep.failures.push_back(std::move(what));
    };
    const int top_users = std::min(caps.max_users, caps.max_files);

    // Delivered delay vs closed form vs linear program, one canonical
    // association per profile, worst-case demand, every integer t.
    for (int k = 1; k <= top_users; ++k) {
        for (int lambda = 1; lambda <= std::min(caps.max_caches, k); ++lambda) {
            for (const auto& counts : partitions_desc(k, lambda)) {
                const Profile profile(counts);
                const Association assoc = canonical_association(profile);
                const Demand d = worst_case_demand(k, k);
                for (int t = 0; t <= lambda; ++t) {
                    const std::string tag =
                        "profile " + profile.to_string() + " t=" + std::to_string(t);
                    const Rat mem = make_rat(static_cast<long long>(t) * k, lambda);
                    const Instance inst(k, k, lambda, mem);
                    DeliveryOptions opts;
                    if (k <= 4) {
                        opts.payload_file_len = 16 * binom(lambda, t).convert_to<long>();
                        opts.seed = 1;
                    }
                    const DeliveryResult res = run_delivery(inst, assoc, d, opts);
                    const Rat formula = closed_form_delay(profile, lambda, t);
                    if (!res.all_ok()) fail(rep.scheme_matches_formula, "decode failed: " + tag);
                    if (res.delay != formula)
                        fail(rep.scheme_matches_formula, "delay mismatch: " + tag);
                    if (lp_lower_bound(profile, k, lambda, mem) != formula)
                        fail(rep.lp_matches_formula, "lp mismatch: " + tag);
                    if (t_star(profile, lambda, inst.gamma()) != formula)
                        fail(rep.lp_matches_formula, "envelope misses anchor: " + tag);
                    ++rep.instances_checked;
                }
            }
        }
    }

    // Acyclicity of the converse subgraph on every association shape,
    // plus its node-count closed forms.
    for (int k = 1; k <= top_users; ++k) {
        for (int lambda = 1; lambda <= std::min(caps.max_caches, k); ++lambda) {
            const Demand d = worst_case_demand(k, k);
            const SizeMap zero_sizes(k, lambda);
            long index = 0;
            for (const Association& assoc : associations_up_to_relabeling(k, lambda)) {
                const std::string tag = "K=" + std::to_string(k) + " Lambda=" +
                                        std::to_string(lambda) + " assoc#" + std::to_string(index);
                const SideInfoGraph g(assoc, d, zero_sizes);
                if (g.num_nodes() != k * (1 << (lambda - 1)))
                    fail(rep.counts_match, "graph node count: " + tag);
                try {
                    const auto nodes = acyclic_subgraph_nodes(g);
                    const Profile profile = profile_of(assoc);
                    long expected = 0;
                    for (int r = 1; r <= lambda; ++r)
                        expected += profile.count(r) * (1L << (lambda - r));
                    if (static_cast<long>(nodes.size()) != expected)
                        fail(rep.counts_match, "subgraph node count: " + tag);
                } catch (const Error& e) {
                    if (e.code() != Errc::cyclic_subgraph) throw;
                    fail(rep.subgraph_always_acyclic, "cycle: " + tag);
                }
                ++index;
                ++rep.instances_checked;
            }
        }
    }

    // Counting formula vs brute-force appearance counts, every subfile.
    for (int k = 1; k <= top_users; ++k) {
        for (int lambda = 1; lambda <= std::min(caps.max_caches, k); ++lambda) {
            std::vector<int> file_counts = {k};
            if (k + 1 <= caps.max_files) file_counts.push_back(k + 1);
            for (const auto& counts : partitions_desc(k, lambda)) {
                const Profile profile(counts);
                for (int n : file_counts) {
                    const std::string tag = "profile " + profile.to_string() + " N=" +
                                            std::to_string(n);
                    const Int size = demand_class_size(profile, n, lambda);
                    if (size > Int(caps.class_budget)) {
                        rep.skipped.push_back(tag + ": class of " + size.str() +
                                              " exceeds budget");
                        continue;
                    }
                    long members = 0;
                    for_each_class_element(
                        profile, n, lambda, [&](const ClassElement&) { ++members; },
                        caps.class_budget);
                    if (Int(members) != size) fail(rep.counts_match, "class size: " + tag);
                    const auto brute =
                        count_all_subfile_appearances(profile, n, lambda, caps.class_budget);
                    for (int file = 1; file <= n; ++file)
                        for (unsigned mask = 0; mask < (1u << lambda); ++mask) {
                            const Int expect = q_i(profile, n, lambda, std::popcount(mask));
                            if (brute[file - 1][mask] != expect)
                                fail(rep.qi_matches, "count mismatch: " + tag + " file=" +
                                                         std::to_string(file) + " T=" +
                                                         mask_label(mask));
                        }
                    ++rep.instances_checked;
                }
            }
        }
    }

    // Tightness: the scheme's own sizes pushed through the averaged
    // converse must reproduce the scheme delay exactly.
    for (int k = 1; k <= top_users; ++k) {
        for (int lambda = 1; lambda <= std::min(caps.max_caches, k); ++lambda) {
            for (const auto& counts : partitions_desc(k, lambda)) {
                const Profile profile(counts);
                const Int size = demand_class_size(profile, k, lambda);
                if (size > Int(caps.class_budget)) {
                    rep.skipped.push_back("tightness profile " + profile.to_string() +
                                          ": class of " + size.str() + " exceeds budget");
                    continue;
                }
                for (int t = 0; t <= lambda; ++t) {
                    const Rat avg = averaged_converse(profile, k, lambda,
                                                      scheme_sizes(k, lambda, t),
                                                      caps.class_budget);
                    const Rat formula = closed_form_delay(profile, lambda, t);
                    Rat gap = avg - formula;
                    if (gap < Rat(Int(0))) gap = -gap;
                    if (gap > rep.tightness_gap_max) rep.tightness_gap_max = gap;
                    if (gap != Rat(Int(0)))
                        fail(rep.tightness_exact, "gap " + rat_to_string(gap) + " at profile " +
                                                      profile.to_string() + " t=" +
                                                      std::to_string(t));
                    ++rep.instances_checked;
                }
            }
        }
    }

    return rep;
}

std::string verify_report_to_json(const VerifyReport& report) {
    nlohmann::json j;
    j["instances_checked"] = report.instances_checked;
    j["subgraph_always_acyclic"] = report.subgraph_always_acyclic;
    j["qi_matches"] = report.qi_matches;
    j["tightness_gap_max"] = rat_to_string(report.tightness_gap_max);
    j["scheme_matches_formula"] = report.scheme_matches_formula;
    j["lp_matches_formula"] = report.lp_matches_formula;
    j["counts_match"] = report.counts_match;
    j["tightness_exact"] = report.tightness_exact;
    j["skipped"] = report.skipped;
    j["failures"] = report.failures;
    j["all_ok"] = report.all_ok();
    return j.dump(2) + "\n";
}

}  // namespace scl
