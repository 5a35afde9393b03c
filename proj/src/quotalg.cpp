#include "restree/quotalg.hpp"

#include <map>
#include <sstream>

namespace restree {

namespace {

void require_exponents(const Monomial& mono) {
    if (mono.xexp < 0 || mono.yexp < 0) {
        throw InvalidInputError("monomial exponents must be nonnegative");
    }
}

// Sparse polynomial in x, y with exact coefficients; just enough for the
// minor check.
using Poly = std::map<std::pair<std::int64_t, std::int64_t>, Rat>;

Poly poly_of(const Monomial& mono) {
    require_exponents(mono);
    Poly p;
    if (mono.coeff != 0) p[{mono.xexp, mono.yexp}] = mono.coeff;
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            auto key = std::make_pair(ea.first + eb.first, ea.second + eb.second);
            Rat c = out.count(key) ? out[key] : Rat(0);
            c += ca * cb;
            if (c == 0) {
                out.erase(key);
            } else {
                out[key] = c;
            }
        }
    }
    return out;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b) {
        Rat v = out.count(e) ? out[e] : Rat(0);
        v -= c;
        if (v == 0) {
            out.erase(e);
        } else {
            out[e] = v;
        }
    }
    return out;
}

std::string monomial_string(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) return "1";
    std::ostringstream os;
    if (p == 1) os << "x";
    if (p > 1) os << "x^" << p;
    if (p > 0 && q > 0) os << " ";
    if (q == 1) os << "y";
    if (q > 1) os << "y^" << q;
    return os.str();
}

PathWord word(std::vector<std::string> arrows) {
    PathWord w;
    std::string display;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i != 0) display += " ";
        display += arrows[i];
    }
    w.arrows = std::move(arrows);
    w.display = std::move(display);
    return w;
}

PathWord square(const std::vector<std::string>& factors) {
    PathWord w;
    std::string inner;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i != 0) inner += " ";
        inner += factors[i];
    }
    w.display = "(" + inner + ")^2";
    for (int rep = 0; rep < 2; ++rep) {
        for (const auto& f : factors) w.arrows.push_back(f);
    }
    return w;
}

std::string sname(std::int64_t i) { return "s" + std::to_string(i); }

QuiverPresentation lambda_skeleton(std::int64_t n) {
    QuiverPresentation p;
    p.vertices = {"1", "2"};
    p.arrows.push_back({"a", "1", "2"});
    p.arrows.push_back({"b", "1", "2"});
    for (std::int64_t i = 1; i <= n; ++i) p.arrows.push_back({sname(i), "2", "1"});
    return p;
}

void validate(const QuiverPresentation& p) {
    if (!relations_parallel_composable(p)) {
        throw std::logic_error("emitted a non-composable quiver relation");
    }
}

}  // namespace

bool is_invariant(const Monomial& mono, std::int64_t m) {
    if (m < 2) throw InvalidInputError("is_invariant needs m >= 2");
    require_exponents(mono);
    return (mono.xexp + 2 * mono.yexp) % m == 0;
}

Monomial invariant_generator(std::int64_t index, std::int64_t n) {
    if (n < 3) throw InvalidInputError("needs n >= 3");
    if (index < 0 || index > n) throw InvalidInputError("generator index out of range");
    const std::int64_t m = 2 * n - 1;
    if (index == 0) return Monomial{m, 0, 1};      // a
    if (index == n) return Monomial{0, m, 1};      // c
    return Monomial{m - 2 * index, index, 1};      // b_index
}

MinorReport verify_minor_relations(std::int64_t n) {
    if (n < 3) throw InvalidInputError("verify_minor_relations needs n >= 3");
    MinorReport report;
    report.n = n;
    report.m = 2 * n - 1;

    // Column j of the relation matrix, as polynomials after substitution.
    // b_0 denotes a; the last top entry is b_{n-1}^2.
    auto top = [&](std::int64_t j) {
        if (j == n - 1) {
            Poly b = poly_of(invariant_generator(n - 1, n));
            return mul(b, b);
        }
        return poly_of(invariant_generator(j, n));
    };
    auto bottom = [&](std::int64_t j) {
        if (j == n - 1) return poly_of(invariant_generator(n, n));  // c
        return poly_of(invariant_generator(j + 1, n));
    };

    for (std::int64_t j = 0; j < n; ++j) {
        for (std::int64_t k = j + 1; k < n; ++k) {
            ++report.minors_checked;
            Poly minor = sub(mul(top(j), bottom(k)), mul(top(k), bottom(j)));
            if (!minor.empty()) {
                report.failures.push_back("minor(" + std::to_string(j + 1) + "," +
                                          std::to_string(k + 1) + ")");
            }
        }
    }
    report.all_zero = report.failures.empty();
    return report;
}

QuiverPresentation lambda_presentation(std::int64_t n) {
    if (n < 3) throw InvalidInputError("lambda_presentation needs n >= 3");
    QuiverPresentation p = lambda_skeleton(n);
    p.relations.push_back({word({sname(n - 1), "b", sname(n)}), word({sname(n), "b", sname(n - 1)})});
    p.relations.push_back({word({"a", sname(n)}), square({"b", sname(n - 1)})});
    p.relations.push_back({word({sname(n), "a"}), square({sname(n - 1), "b"})});
    for (std::int64_t i = 1; i <= n - 2; ++i) {
        p.relations.push_back({word({"a", sname(i + 1)}), word({"b", sname(i)})});
        p.relations.push_back({word({sname(i + 1), "a"}), word({sname(i), "b"})});
    }
    validate(p);
    return p;
}

QuiverPresentation lambda_presentation_nonminimal(std::int64_t n) {
    if (n < 3) throw InvalidInputError("lambda_presentation_nonminimal needs n >= 3");
    QuiverPresentation p = lambda_skeleton(n);
    for (std::int64_t i = 1; i <= n; ++i) {
        p.relations.push_back({word({"a", sname(i), "b"}), word({"b", sname(i), "a"})});
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = i + 1; j <= n; ++j) {
            p.relations.push_back({word({sname(i), "a", sname(j)}), word({sname(j), "a", sname(i)})});
        }
    }
    p.relations.push_back({word({"a", sname(n)}), square({"b", sname(n - 1)})});
    p.relations.push_back({word({sname(n), "a"}), square({sname(n - 1), "b"})});
    for (std::int64_t i = 1; i <= n - 2; ++i) {
        p.relations.push_back({word({"a", sname(i + 1)}), word({"b", sname(i)})});
        p.relations.push_back({word({sname(i + 1), "a"}), word({sname(i), "b"})});
    }
    validate(p);
    return p;
}

bool relations_parallel_composable(const QuiverPresentation& p) {
    std::map<std::string, std::pair<std::string, std::string>> ends;
    for (const auto& arrow : p.arrows) ends[arrow.name] = {arrow.from, arrow.to};

    auto trace = [&](const PathWord& w) -> std::optional<std::pair<std::string, std::string>> {
        if (w.arrows.empty()) return std::nullopt;
        auto first = ends.find(w.arrows.front());
        if (first == ends.end()) return std::nullopt;
        std::string source = first->second.first;
        std::string at = source;
        for (const auto& name : w.arrows) {
            auto it = ends.find(name);
            if (it == ends.end() || it->second.first != at) return std::nullopt;
            at = it->second.second;
        }
        return std::make_pair(source, at);
    };

    for (const auto& relation : p.relations) {
        auto l = trace(relation.lhs);
        auto r = trace(relation.rhs);
        if (!l || !r || *l != *r) return false;
    }
    return true;
}

HilbertReport hilbert_consistency(std::int64_t n, std::int64_t degree_cap) {
    if (n < 3) throw InvalidInputError("hilbert_consistency needs n >= 3");
    if (degree_cap < 0 || degree_cap > 8) {
        throw InvalidInputError("degree cap must lie in 0..8");
    }
    HilbertReport report;
    report.n = n;
    report.m = 2 * n - 1;
    report.cap = degree_cap;
    const std::int64_t m = report.m;

    auto weight_class = [&](std::int64_t p, std::int64_t q) { return (p + 2 * q) % m; };

    // A monomial is a minimal generator of its class when no nonconstant
    // invariant monomial divides it.
    auto is_generator = [&](std::int64_t p, std::int64_t q) {
        for (std::int64_t dp = 0; dp <= p; ++dp) {
            for (std::int64_t dq = 0; dq <= q; ++dq) {
                if (dp == 0 && dq == 0) continue;
                if (weight_class(dp, dq) == 0) return false;
            }
        }
        return true;
    };

    auto piece = [&](const std::string& name, std::int64_t r) {
        HilbertPiece out;
        out.name = name;
        out.weight_class = r;
        out.dims.assign(degree_cap + 1, 0);
        for (std::int64_t d = 0; d <= degree_cap; ++d) {
            std::int64_t count = 0;
            for (std::int64_t p = 0; p <= d; ++p) {
                for (std::int64_t q = 0; p + q <= d; ++q) {
                    if (weight_class(p, q) == r) ++count;
                }
            }
            out.dims[d] = count;
        }
        for (std::int64_t d = 0; d <= degree_cap; ++d) {
            for (std::int64_t p = 0; p <= d; ++p) {
                std::int64_t q = d - p;
                if (weight_class(p, q) == r && is_generator(p, q)) {
                    out.generators.push_back(monomial_string(p, q));
                }
            }
        }
        return out;
    };

    report.pieces.push_back(piece("e1_e1", 0));
    report.pieces.push_back(piece("e1_e2", 2 % m));
    report.pieces.push_back(piece("e2_e1", (m - 2) % m));
    report.pieces.push_back(piece("e2_e2", 0));
    return report;
}

nlohmann::ordered_json presentation_to_json(const QuiverPresentation& p) {
    nlohmann::ordered_json j;
    j["vertices"] = p.vertices;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& arrow : p.arrows) {
        j["arrows"].push_back(
            {{"name", arrow.name}, {"from", arrow.from}, {"to", arrow.to}});
    }
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& relation : p.relations) {
        j["relations"].push_back({{"lhs", relation.lhs.arrows},
                                  {"rhs", relation.rhs.arrows},
                                  {"display", relation.lhs.display + " = " + relation.rhs.display}});
    }
    return j;
}

nlohmann::ordered_json minor_report_to_json(const MinorReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["minors_checked"] = report.minors_checked;
    j["all_zero"] = report.all_zero;
    j["failures"] = report.failures;
    return j;
}

nlohmann::ordered_json hilbert_report_to_json(const HilbertReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["degree_cap"] = report.cap;
    j["pieces"] = nlohmann::ordered_json::array();
    for (const auto& piece : report.pieces) {
        j["pieces"].push_back({{"hom", piece.name},
                               {"weight_class", piece.weight_class},
                               {"dims", piece.dims},
                               {"generators", piece.generators}});
    }
    return j;
}

}  // namespace restree
