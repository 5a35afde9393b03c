#include "restree/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "restree/arquiver.hpp"
#include "restree/contraction.hpp"
#include "restree/families.hpp"
#include "restree/fundcycle.hpp"
#include "restree/lattice.hpp"
#include "restree/oracle.hpp"
#include "restree/quotalg.hpp"
#include "restree/tree.hpp"

namespace restree {

namespace {

// Raised to turn a failed domain check into exit code 1.
struct DomainFailure {
    std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw Error("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error("cannot write file '" + path + "'");
    file << content;
}

std::vector<std::string> split_curves(const std::string& list) {
    std::vector<std::string> out;
    std::string current;
    for (char c : list) {
        if (c == ',') {
            if (!current.empty()) out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// Oracle re-runs behind --verify. Throws DomainFailure on any disagreement.
void verify_against_oracles(const LabelledTree& t) {
    IntersectionForm form = IntersectionForm::of(t);
    bool definite = form.is_negative_definite();
    if (!sample_definiteness(form) && definite) {
        throw DomainFailure{"verify: sampling found a vector refuting negative definiteness"};
    }
    if (definite && t.size() <= OracleConfig{}.max_vertices) {
        auto expected = brute_force_zmin(t);
        Cycle zf = laufer(t);
        if (expected) {
            if (!(zf == *expected)) {
                throw DomainFailure{"verify: Laufer result differs from exhaustive minimum"};
            }
        } else {
            // Every member of Z_top dominates Z_f, so an empty search box is
            // consistent exactly when Z_f itself lies outside it.
            std::int64_t top = 0;
            for (auto c : zf.coeffs) top = std::max(top, c);
            if (top <= OracleConfig{}.coeff_bound) {
                throw DomainFailure{
                    "verify: exhaustive search missed a fundamental cycle inside its box"};
            }
        }
    }
}

std::string pretty_report(const RationalityReport& report, const LabelledTree& t) {
    std::ostringstream os;
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    os << "weights <= -2:      " << yesno(report.weights_ok) << "\n";
    os << "negative definite:  " << yesno(report.negative_definite) << "\n";
    if (report.fundamental_cycle) {
        os << "fundamental cycle: ";
        for (std::size_t v = 0; v < t.size(); ++v) {
            os << " " << t.name(v) << "=" << report.fundamental_cycle->coeffs[v];
        }
        os << "\n";
        os << "Z_f . Z_f:          " << *report.self_pairing << "\n";
        os << "correction:         " << *report.correction << "\n";
        os << "artin sum:          " << *report.artin_sum << "\n";
    }
    os << "rational:           " << yesno(report.is_rational) << "\n";
    return os.str();
}

FamilySpec parse_family_spec(const std::string& kind, std::int64_t n, const std::string& series,
                             std::int64_t rank, std::int64_t m, std::int64_t q) {
    FamilySpec spec;
    if (kind == "typeA" || kind == "typeD") {
        spec.kind = (kind == "typeA") ? FamilyKind::TypeA : FamilyKind::TypeD;
        if (n < 1) throw Error("family " + kind + " needs --n >= 1");
        spec.n = n;
    } else if (kind == "typeE6") {
        spec.kind = FamilyKind::TypeE6;
    } else if (kind == "typeE7") {
        spec.kind = FamilyKind::TypeE7;
    } else if (kind == "T9") {
        spec.kind = FamilyKind::T9;
    } else if (kind == "ADE") {
        spec.kind = FamilyKind::Ade;
        if (series.size() != 1 || rank == 0) throw Error("family ADE needs --series and --rank");
        spec.series = series[0];
        spec.rank = rank;
    } else if (kind == "cyclic") {
        spec.kind = FamilyKind::Cyclic;
        if (m == 0 || q == 0) throw Error("family cyclic needs --m and --q");
        spec.m = m;
        spec.q = q;
    } else {
        throw Error("unknown family kind '" + kind +
                    "' (expected typeA, typeD, typeE6, typeE7, T9, ADE or cyclic)");
    }
    return spec;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"combinatorics of rational surface singularity resolutions"};
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1);

    std::string path;
    std::string curves_list;
    std::string out_path;
    std::string dot_path;
    bool pretty = false;
    bool verify = false;
    bool require_rational = false;
    bool json_flag = false;
    bool nonminimal = false;
    std::int64_t n = 0, rank = 0, m = 0, q = 0;
    std::string kind, series;

    auto* check = app.add_subcommand("check", "rationality report for a tree file");
    check->add_option("file", path, "tree file, or - for stdin")->required();
    check->add_flag("--pretty", pretty, "human-readable output");
    check->add_flag("--verify", verify, "re-run brute-force oracles");
    check->add_flag("--require-rational", require_rational, "exit 1 unless rational");

    auto* fund = app.add_subcommand("fundcycle", "fundamental cycle of a tree file");
    fund->add_option("file", path, "tree file, or - for stdin")->required();
    fund->add_flag("--pretty", pretty, "human-readable output");
    fund->add_flag("--verify", verify, "re-run brute-force oracles");

    auto* disc = app.add_subcommand("discrepancy", "discrepancies over Spec R");
    disc->add_option("file", path, "tree file, or - for stdin")->required();
    disc->add_option("--curves", curves_list, "restrict to the induced subform on these curves");
    disc->add_flag("--verify", verify, "re-run brute-force oracles");

    auto* contract_cmd = app.add_subcommand("contract", "contract a curve subset");
    contract_cmd->add_option("file", path, "tree file, or - for stdin")->required();
    contract_cmd->add_option("--curves", curves_list, "comma-separated curves to contract")
        ->required();
    contract_cmd->add_option("--dot", dot_path, "also write the AR quiver as DOT");
    contract_cmd->add_flag("--verify", verify, "re-run brute-force oracles");

    auto* arq = app.add_subcommand("arquiver", "AR quiver (doubled dual graph)");
    arq->add_option("file", path, "tree file, or - for stdin")->required();
    arq->add_option("--curves", curves_list, "contracted curves (default: all)");
    arq->add_flag("--json", json_flag, "emit JSON instead of DOT");
    arq->add_option("-o,--output", out_path, "output path (default: stdout)");
    arq->add_flag("--verify", verify, "re-run brute-force oracles");

    auto* family = app.add_subcommand("family", "generate a named tree family");
    family->add_option("kind", kind, "typeA|typeD|typeE6|typeE7|T9|ADE|cyclic")->required();
    family->add_option("--n", n, "chain length for typeA/typeD");
    family->add_option("--series", series, "ADE series letter");
    family->add_option("--rank", rank, "ADE rank");
    family->add_option("--m", m, "cyclic group order");
    family->add_option("--q", q, "cyclic weight");
    family->add_option("-o,--output", out_path, "output path (default: stdout)");
    family->add_flag("--verify", verify, "re-run brute-force oracles on the generated tree");

    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung chain of 1/m(1,q)");
    hj->add_option("--m", m, "group order")->required();
    hj->add_option("--q", q, "weight")->required();
    hj->add_flag("--json", json_flag, "emit JSON");
    hj->add_flag("--verify", verify, "reconstruct m/q from the chain");

    auto* lambda = app.add_subcommand("lambda", "quiver presentation for 1/(2n-1)(1,2)");
    lambda->add_option("--n", n, "parameter n >= 3")->required();
    lambda->add_flag("--nonminimal", nonminimal, "emit the larger pre-reduction relation list");
    lambda->add_flag("--verify", verify, "re-check relation composability");

    auto* census = app.add_subcommand("census", "tautness obstruction census");
    census->add_option("file", path, "tree file, or - for stdin")->required();
    census->add_flag("--verify", verify, "re-run brute-force oracles");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) {
            LabelledTree t = parse_tree(read_input(path, in));
            RationalityReport report = artin_check(t);
            if (verify) verify_against_oracles(t);
            out << (pretty ? pretty_report(report, t) : dump(report_to_json(report, t)));
            if (require_rational && !report.is_rational) {
                err << "tree is not rational\n";
                return 1;
            }
        } else if (*fund) {
            LabelledTree t = parse_tree(read_input(path, in));
            Cycle zf = laufer(t);
            if (verify) verify_against_oracles(t);
            if (pretty) {
                for (std::size_t v = 0; v < t.size(); ++v) {
                    out << t.name(v) << " " << zf.coeffs[v] << "\n";
                }
            } else {
                nlohmann::ordered_json j;
                for (std::size_t v = 0; v < t.size(); ++v) {
                    j["fundamental_cycle"][t.name(v)] = zf.coeffs[v];
                }
                j["self_pairing"] = to_ll(IntersectionForm::of(t).pair(zf, zf));
                out << dump(j);
            }
        } else if (*disc) {
            LabelledTree t = parse_tree(read_input(path, in));
            if (verify) verify_against_oracles(t);
            nlohmann::ordered_json j;
            bool crepant = true;
            if (disc->count("--curves")) {
                auto values = contraction_discrepancy(t, split_curves(curves_list));
                for (const auto& name : t.names()) {
                    auto it = values.find(name);
                    if (it == values.end()) continue;
                    j["values"][name] = to_string(it->second);
                    crepant = crepant && (it->second == 0);
                }
            } else {
                DiscrepancyVector d = discrepancies(t);
                for (std::size_t v = 0; v < t.size(); ++v) {
                    j["values"][t.name(v)] = to_string(d.values[v]);
                    crepant = crepant && (d.values[v] == 0);
                }
            }
            j["crepant"] = crepant;
            out << dump(j);
        } else if (*contract_cmd) {
            LabelledTree t = parse_tree(read_input(path, in));
            if (verify) verify_against_oracles(t);
            std::vector<std::string> curves = split_curves(curves_list);
            ContractionResult result = contract(t, curves);
            out << dump(contraction_to_json(result));
            if (!dot_path.empty()) {
                Quiver quiver = double_quiver(dual_graph_of_morphism(t, curves));
                write_output(dot_path, emit_dot(quiver), out);
            }
        } else if (*arq) {
            LabelledTree t = parse_tree(read_input(path, in));
            if (verify) verify_against_oracles(t);
            std::vector<std::string> curves =
                arq->count("--curves") ? split_curves(curves_list) : t.names();
            Quiver quiver = double_quiver(dual_graph_of_morphism(t, curves));
            write_output(out_path, json_flag ? dump(quiver_to_json(quiver)) : emit_dot(quiver),
                         out);
        } else if (*family) {
            FamilySpec spec = parse_family_spec(kind, n, series, rank, m, q);
            LabelledTree t = generate(spec);
            if (verify) verify_against_oracles(t);
            write_output(out_path, serialize_tree(t), out);
        } else if (*hj) {
            std::vector<std::int64_t> chain = hj_chain(m, q);
            if (verify) {
                Rat reconstructed = evaluate_hj_chain(chain);
                if (reconstructed != make_rat(m, q)) {
                    throw DomainFailure{"verify: chain does not reconstruct m/q"};
                }
            }
            if (json_flag) {
                nlohmann::ordered_json j;
                j["m"] = m;
                j["q"] = q;
                j["chain"] = chain;
                out << dump(j);
            } else {
                for (std::size_t i = 0; i < chain.size(); ++i) {
                    out << (i ? " " : "") << chain[i];
                }
                out << "\n";
            }
        } else if (*lambda) {
            QuiverPresentation p =
                nonminimal ? lambda_presentation_nonminimal(n) : lambda_presentation(n);
            if (verify && !relations_parallel_composable(p)) {
                throw DomainFailure{"verify: a relation is not parallel-composable"};
            }
            out << dump(presentation_to_json(p));
        } else if (*census) {
            LabelledTree t = parse_tree(read_input(path, in));
            if (verify) verify_against_oracles(t);
            out << dump(census_to_json(taut_census(t)));
        }
    } catch (const DomainFailure& failure) {
        err << failure.message << "\n";
        return 1;
    } catch (const NotNegativeDefiniteError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const OracleError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace restree
