#include "restree/fundcycle.hpp"

namespace restree {

namespace {

constexpr std::size_t kIterationCap = 1000000;

// z . E_i for a single vertex. Coefficients are bounded by the iteration cap
// but weights are caller-supplied, so accumulate wide.
__int128 pair_with_vertex(const LabelledTree& t, const std::vector<std::int64_t>& z,
                          std::size_t i) {
    __int128 acc = static_cast<__int128>(t.weight(i)) * z[i];
    for (std::size_t j : t.neighbours(i)) acc += z[j];
    return acc;
}

}  // namespace

bool in_ztop(const LabelledTree& t, const Cycle& z) {
    if (z.coeffs.size() != t.size()) {
        throw DimensionMismatchError("cycle length does not match the tree");
    }
    bool nonzero = false;
    for (std::int64_t a : z.coeffs) {
        if (a < 0) return false;
        if (a != 0) nonzero = true;
    }
    if (!nonzero) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        Int acc = to_int(t.weight(i)) * to_int(z.coeffs[i]);
        for (std::size_t j : t.neighbours(i)) acc += to_int(z.coeffs[j]);
        if (acc > 0) return false;
    }
    return true;
}

Cycle laufer(const LabelledTree& t) {
    return laufer(t, [](const std::vector<std::size_t>& violating) { return violating[0]; });
}

Cycle laufer(const LabelledTree& t, const TieBreak& pick) {
    if (!IntersectionForm::of(t).is_negative_definite()) {
        throw NotNegativeDefiniteError("Laufer's algorithm needs a negative definite tree");
    }
    Cycle z = Cycle::reduced(t.size());
    for (std::size_t iter = 0; iter < kIterationCap; ++iter) {
        std::vector<std::size_t> violating;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (pair_with_vertex(t, z.coeffs, i) > 0) violating.push_back(i);
        }
        if (violating.empty()) return z;
        std::size_t chosen = pick(violating);
        bool valid = false;
        for (std::size_t i : violating) valid = valid || (i == chosen);
        if (!valid) throw InvalidInputError("tie-break picked a non-violating vertex");
        ++z.coeffs[chosen];
    }
    throw std::logic_error("Laufer iteration cap exceeded on a negative definite tree");
}

RationalityReport artin_check(const LabelledTree& t) {
    RationalityReport report;
    report.weights_ok = true;
    for (std::int64_t w : t.weights()) {
        if (w > -2) report.weights_ok = false;
    }
    IntersectionForm f = IntersectionForm::of(t);
    report.negative_definite = f.is_negative_definite();
    if (report.negative_definite) {
        Cycle zf = laufer(t);
        report.self_pairing = to_ll(f.pair(zf, zf));
        Int correction = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            correction += to_int(zf.coeffs[i]) * (-to_int(t.weight(i)) - 2);
        }
        report.correction = to_ll(correction);
        report.artin_sum = *report.self_pairing + *report.correction;
        report.fundamental_cycle = std::move(zf);
    }
    report.is_rational = report.weights_ok && report.negative_definite &&
                         report.artin_sum.has_value() && *report.artin_sum == -2;
    return report;
}

nlohmann::ordered_json report_to_json(const RationalityReport& report, const LabelledTree& t) {
    nlohmann::ordered_json j;
    j["weights_ok"] = report.weights_ok;
    j["negative_definite"] = report.negative_definite;
    if (report.fundamental_cycle) {
        nlohmann::ordered_json cycle;
        for (std::size_t v = 0; v < t.size(); ++v) {
            cycle[t.name(v)] = report.fundamental_cycle->coeffs[v];
        }
        j["fundamental_cycle"] = std::move(cycle);
    } else {
        j["fundamental_cycle"] = nullptr;
    }
    j["self_pairing"] = report.self_pairing ? nlohmann::ordered_json(*report.self_pairing)
                                            : nlohmann::ordered_json(nullptr);
    j["correction"] = report.correction ? nlohmann::ordered_json(*report.correction)
                                        : nlohmann::ordered_json(nullptr);
    j["artin_sum"] = report.artin_sum ? nlohmann::ordered_json(*report.artin_sum)
                                      : nlohmann::ordered_json(nullptr);
    j["is_rational"] = report.is_rational;
    return j;
}

}  // namespace restree
