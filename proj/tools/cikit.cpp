// Command-line front end: file formats in, library operations out.
// Exit codes: 0 success / claim passed, 1 violation found / claim falsified,
// 2 parse, validation or usage error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cikit/cikit.hpp"

namespace {

using namespace cikit;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::vector<Rule> parse_rule_list(const std::string& names) {
    std::vector<Rule> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::string up;
        for (char c : token) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (up == "D") out.push_back(Rule::D);
        else if (up == "U") out.push_back(Rule::U);
        else if (up == "C") out.push_back(Rule::C);
        else if (up == "DUC") out.push_back(Rule::DUC);
        else if (up == "L") {
            out.push_back(Rule::LFwd);
            out.push_back(Rule::LBwd);
        } else if (up == "I") out.push_back(Rule::I);
        else if (up == "M") out.push_back(Rule::M);
        else if (up == "P") out.push_back(Rule::P);
        else if (up == "R") out.push_back(Rule::R);
        else if (up == "DT") out.push_back(Rule::DT);
        else if (up == "DDT") out.push_back(Rule::DDT);
        else throw std::invalid_argument("unknown rule name: " + token);
        token.clear();
    };
    for (char c : names) {
        if (c == ',' || c == ' ') flush();
        else token += c;
    }
    flush();
    if (out.empty()) throw std::invalid_argument("empty rule list");
    return out;
}

// Display tokens in user order, with L reported as one combined check.
std::vector<std::pair<std::string, std::vector<Rule>>> rule_groups(const std::string& names) {
    std::vector<std::pair<std::string, std::vector<Rule>>> groups;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        groups.emplace_back(token, parse_rule_list(token));
        token.clear();
    };
    for (char c : names) {
        if (c == ',') flush();
        else token += c;
    }
    flush();
    if (groups.empty()) throw std::invalid_argument("empty rule list");
    return groups;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to " + out_path);
    out << text;
}

std::string describe_instance(const Violation& v, const GroundSet& ground) {
    std::string s = "antecedents";
    for (const auto& t : v.instance.antecedents) s += " [" + format_triple(t, ground) + "]";
    s += has_disjunctive_consequents(v.instance.rule) ? " => neither of" : " => missing";
    for (const auto& t : v.missing) s += " [" + format_triple(t, ground) + "]";
    return s;
}

int run_close(const std::string& input, const std::string& rules, const std::string& out) {
    Relation L = load_relation(input);
    Relation closed = close_under(L, parse_rule_list(rules));
    emit(format_relation(closed), out);
    return kExitOk;
}

int run_dual(const std::string& input, const std::string& out) {
    emit(format_relation(relation_dual(load_relation(input))), out);
    return kExitOk;
}

int run_check(const std::string& input, const std::string& rules, const std::string& out) {
    Relation L = load_relation(input);
    std::string text;
    bool violated = false;
    for (const auto& [name, group] : rule_groups(rules)) {
        std::optional<Violation> first;
        for (Rule r : group) {
            if (auto v = find_violation(L, r)) {
                first = std::move(v);
                break;
            }
        }
        if (first) {
            violated = true;
            text += name + ": violation: " + describe_instance(*first, L.ground()) + "\n";
        } else {
            text += name + ": closed\n";
        }
    }
    emit(text, out);
    return violated ? kExitFalsified : kExitOk;
}

int run_extract_graph(const std::string& input, const std::string& mode, bool adjacency,
                      const std::string& out) {
    Relation L = load_relation(input);
    Graph g = parse_mode(mode) == Mode::undirected ? undirected_graph_of(L)
                                                   : bidirected_graph_of(L);
    emit(format_graph(g, adjacency), out);
    return kExitOk;
}

int run_separation(const std::string& input, const std::string& out) {
    emit(format_relation(separation_relation(load_graph(input))), out);
    return kExitOk;
}

int run_gaussian(const std::string& input, double eps, const std::string& out) {
    GaussianModel m = load_covariance(input, eps);
    ExtractedRelation extracted = relation_of_detail(m);
    if (extracted.near_threshold_count > 0)
        std::cerr << "warning: " << extracted.near_threshold_count
                  << " partial correlations fell in the near-threshold band [eps, 100*eps)\n";
    emit(format_relation(extracted.relation), out);
    return kExitOk;
}

int run_verify(const std::string& claim, const ClaimParams& params, bool json,
               const std::string& out) {
    VerificationReport rep = run_claim(claim, params);
    emit(json ? report_to_json(rep).dump(2) + "\n" : format_report(rep), out);
    return rep.passed() ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for finite conditional-independence relations"};
    app.require_subcommand(1);

    std::string input, out_path, rules, mode = "un", claim;
    bool adjacency = false, json = false, exhaustive = false;
    double eps = cikit::GaussianModel::kDefaultEps;
    cikit::ClaimParams params;

    auto* close_cmd = app.add_subcommand("close", "close a relation under Horn rules");
    close_cmd->add_option("relation", input, "relation file")->required();
    close_cmd->add_option("--rules", rules, "comma-separated rules")->required();
    close_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* dual_cmd = app.add_subcommand("dual", "dualize a relation");
    dual_cmd->add_option("relation", input, "relation file")->required();
    dual_cmd->add_option("--out", out_path, "output path");

    auto* check_cmd = app.add_subcommand("check", "report closure violations per rule");
    check_cmd->add_option("relation", input, "relation file")->required();
    check_cmd->add_option("--rules", rules, "comma-separated rules")->required();
    check_cmd->add_option("--out", out_path, "output path");

    auto* extract_cmd = app.add_subcommand("extract-graph", "graph induced by a relation");
    extract_cmd->add_option("relation", input, "relation file")->required();
    extract_cmd->add_option("--mode", mode, "un (concentration) or bi (covariance)")->required();
    extract_cmd->add_flag("--adjacency", adjacency, "append an adjacency-matrix dump");
    extract_cmd->add_option("--out", out_path, "output path");

    auto* sep_cmd = app.add_subcommand("separation", "separation relation of a graph");
    sep_cmd->add_option("graph", input, "graph file")->required();
    sep_cmd->add_option("--out", out_path, "output path");

    auto* gauss_cmd = app.add_subcommand("gaussian", "extract the CI relation of a covariance");
    gauss_cmd->add_option("covariance", input, "covariance file")->required();
    gauss_cmd->add_option("--eps", eps, "zero threshold for partial correlations");
    gauss_cmd->add_option("--out", out_path, "output path");

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification claim");
    verify_cmd->add_option("claim", claim, "claim identifier")->required();
    verify_cmd->add_option("--p", params.p, "ground-set size (3 = exhaustive)");
    verify_cmd->add_option("--seed", params.seed, "sampling seed");
    verify_cmd->add_option("--budget", params.budget, "sample budget");
    verify_cmd->add_flag("--exhaustive", exhaustive, "require the exhaustive population");
    verify_cmd->add_flag("--json", json, "machine-readable report");
    verify_cmd->add_option("--out", out_path, "output path");

    auto* search_cmd = app.add_subcommand("search", "hunt for counterexamples to a claim");
    search_cmd->add_option("claim", claim, "claim identifier")->required();
    search_cmd->add_option("--p", params.p, "ground-set size")->required();
    search_cmd->add_option("--seed", params.seed, "sampling seed");
    search_cmd->add_option("--budget", params.budget, "sample budget");
    search_cmd->add_flag("--json", json, "machine-readable report");
    search_cmd->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (close_cmd->parsed()) return run_close(input, rules, out_path);
        if (dual_cmd->parsed()) return run_dual(input, out_path);
        if (check_cmd->parsed()) return run_check(input, rules, out_path);
        if (extract_cmd->parsed()) return run_extract_graph(input, mode, adjacency, out_path);
        if (sep_cmd->parsed()) return run_separation(input, out_path);
        if (gauss_cmd->parsed()) return run_gaussian(input, eps, out_path);
        if (verify_cmd->parsed()) {
            if (exhaustive && params.p > 3)
                throw std::invalid_argument("exhaustive mode requires p <= 3");
            return run_verify(claim, params, json, out_path);
        }
        if (search_cmd->parsed()) {
            if (params.p > 6) throw std::invalid_argument("search is capped at p <= 6");
            return run_verify(claim, params, json, out_path);
        }
    } catch (const cikit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (std::string(e.what()).find("unknown claim") != std::string::npos) {
            std::cerr << "known claims:";
            for (const auto& n : cikit::claim_names()) std::cerr << " " << n;
            std::cerr << "\n";
        }
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
