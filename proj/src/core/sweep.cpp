#include "core/sweep.hpp"

#include "core/bounds.hpp"
#include "core/combinatorics.hpp"

#include <algorithm>

#include <json.hpp>

namespace scl {

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.num_users < 1) throw Error(Errc::invalid_argument, "sweep needs at least one user");
    if (spec.num_caches < 1) throw Error(Errc::invalid_argument, "sweep needs at least one cache");

    std::vector<std::vector<long>> raw_profiles;
    if (spec.all_partitions) {
        raw_profiles = partitions_desc(spec.num_users, spec.num_caches);
    } else {
        if (spec.profiles.empty()) throw Error(Errc::invalid_argument, "no profiles given");
        raw_profiles = spec.profiles;
    }

    std::vector<Rat> gammas = spec.gammas;
    if (gammas.empty())
        for (int i = 0; i <= spec.num_caches; ++i) gammas.push_back(make_rat(i, spec.num_caches));
    std::sort(gammas.begin(), gammas.end());
    gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
    const Rat zero(Int(0)), one(Int(1));
    for (const Rat& g : gammas)
        if (g < zero || g > one) throw Error(Errc::invalid_argument, "gamma must lie in [0,1]");

    std::vector<SweepRow> rows;
    rows.reserve(raw_profiles.size() * gammas.size());
    for (const auto& counts : raw_profiles) {
        const Profile profile = padded_profile(Profile(counts), spec.num_caches);
        if (profile.num_users() != spec.num_users)
            throw Error(Errc::invalid_argument,
                        "profile " + profile.to_string() + " does not sum to the user count");
        const TradeoffCurve curve = tradeoff_curve(profile, spec.num_caches);
        for (const Rat& gamma : gammas) rows.push_back({profile, gamma, curve.eval(gamma)});
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "profile,gamma,gamma_exact,T_star,T_star_exact\n";
    for (const auto& row : rows) {
        out += row.profile.to_string();
        out += ',';
        out += rat_to_decimal(row.gamma);
        out += ',';
        out += rat_to_string(row.gamma);
        out += ',';
        out += rat_to_decimal(row.value);
        out += ',';
        out += rat_to_string(row.value);
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        arr.push_back({{"profile", row.profile.to_string()},
                       {"gamma", rat_to_decimal(row.gamma)},
                       {"gamma_exact", rat_to_string(row.gamma)},
                       {"T_star", rat_to_decimal(row.value)},
                       {"T_star_exact", rat_to_string(row.value)}});
    }
    return arr.dump(2) + "\n";
}

std::string sweep_output(const SweepSpec& spec) {
    const auto rows = run_sweep(spec);
    return spec.format == SweepFormat::csv ? sweep_to_csv(rows) : sweep_to_json(rows);
}

}  // namespace scl
