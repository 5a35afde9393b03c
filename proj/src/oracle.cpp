#include "restree/oracle.hpp"

#include <random>

namespace restree {

std::optional<Cycle> brute_force_zmin(const LabelledTree& t, const OracleConfig& cfg) {
    if (cfg.coeff_bound < 1 || cfg.max_vertices < 1) {
        throw InvalidInputError("oracle bounds must be >= 1");
    }
    const std::size_t n = t.size();
    if (n > cfg.max_vertices) {
        throw InvalidInputError("tree too large for exhaustive Z_top search");
    }

    // Connectivity forces every member of Z_top to have all a_i >= 1, so the
    // box [1, coeff_bound]^n is the right search space.
    std::vector<std::int64_t> a(n, 1);
    std::vector<std::int64_t> cmin(n, cfg.coeff_bound + 1);
    bool any = false;

    auto is_member = [&](const std::vector<std::int64_t>& z) {
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = t.weight(i) * z[i];
            for (std::size_t j : t.neighbours(i)) s += z[j];
            if (s > 0) return false;
        }
        return true;
    };

    while (true) {
        if (is_member(a)) {
            any = true;
            for (std::size_t i = 0; i < n; ++i) cmin[i] = std::min(cmin[i], a[i]);
        }
        std::size_t pos = 0;
        while (pos < n && a[pos] == cfg.coeff_bound) {
            a[pos] = 1;
            ++pos;
        }
        if (pos == n) break;
        ++a[pos];
    }

    if (!any) return std::nullopt;
    if (!is_member(cmin)) {
        throw OracleError("Z_top has no unique coordinatewise minimum within bounds");
    }
    return Cycle{std::move(cmin)};
}

bool sample_definiteness(const IntersectionForm& f, const OracleConfig& cfg) {
    if (cfg.sample_bound < 1) throw InvalidInputError("oracle bounds must be >= 1");
    const std::size_t n = f.size();
    if (n == 0) return true;

    auto value = [&](const std::vector<std::int64_t>& x) {
        __int128 acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            __int128 row = 0;
            for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>(f.at(i, j)) * x[j];
            acc += static_cast<__int128>(x[i]) * row;
        }
        return acc;
    };

    const std::int64_t b = cfg.sample_bound;
    if (n <= 6) {
        std::vector<std::int64_t> x(n, -b);
        while (true) {
            bool zero = true;
            for (std::int64_t c : x) zero = zero && (c == 0);
            if (!zero && value(x) >= 0) return false;
            std::size_t pos = 0;
            while (pos < n && x[pos] == b) {
                x[pos] = -b;
                ++pos;
            }
            if (pos == n) break;
            ++x[pos];
        }
        return true;
    }

    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<std::int64_t> dist(-b, b);
    std::vector<std::int64_t> x(n);
    for (int sample = 0; sample < 100000; ++sample) {
        bool zero = true;
        for (auto& c : x) {
            c = dist(rng);
            zero = zero && (c == 0);
        }
        if (!zero && value(x) >= 0) return false;
    }
    return true;
}

Rat evaluate_hj_chain(const std::vector<std::int64_t>& weights) {
    if (weights.empty()) throw InvalidInputError("empty chain");
    Rat value = to_rat(-weights.back());
    for (std::size_t i = weights.size() - 1; i-- > 0;) {
        if (value == 0) throw InvalidInputError("chain evaluation hits a zero denominator");
        value = to_rat(-weights[i]) - 1 / value;
    }
    return value;
}

}  // namespace restree
