#include <nsgrad/cli/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using namespace nsgrad;

struct Options {
    std::string format = "text";
    std::string output;

    std::string algebra;
    std::string magma_path;
    std::string identity = "associative";
    std::string bracket = "auto";
    std::string delta = "1";
    std::string gamma = "1";

    std::string map_path;
    std::optional<std::size_t> basis_element;

    std::size_t max_word_len = 6;
    std::size_t max_size = 2;
    std::size_t max_rules = 200;
    std::size_t node_budget = 5'000'000;

    std::string fixture;
};

magma::EmbeddabilityLimits limits(const Options& o) {
    return {o.max_word_len, o.max_rules, o.max_size, o.node_budget};
}

void add_limit_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--max-word-len", o.max_word_len, "Word length bound for closure and completion")
        ->capture_default_str();
    cmd->add_option("--max-size", o.max_size, "Fresh elements the finite table search may add")->capture_default_str();
    cmd->add_option("--max-rules", o.max_rules, "Rule bound for completion")->capture_default_str();
    cmd->add_option("--search-budget", o.node_budget, "Node budget for the finite table search")->capture_default_str();
}

int emit(const cli::CommandResult& r, const Options& o) {
    const std::string out = cli::render(r, o.format == "json" ? cli::Format::Json : cli::Format::Text);
    if (o.output.empty()) {
        (r.exit_code == 2 && o.format == "text" ? std::cerr : std::cout) << out;
        return r.exit_code;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << o.output << "'\n";
        return 2;
    }
    f << out;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Gradings of algebras from (delta, gamma)-derivations, with semigroup embeddability certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--output", o.output, "Write the report to PATH instead of stdout");

    auto* check = app.add_subcommand("check", "Check an identity on an algebra");
    check->add_option("algebra", o.algebra, "Algebra or family spec file")->required();
    check->add_option("--identity", o.identity)
        ->check(CLI::IsMember({"associative", "commutative", "anticommutative", "jacobi"}))
        ->capture_default_str();
    check->add_option("--jacobi-bracket", o.bracket, "Bracket used by the Jacobi check")
        ->check(CLI::IsMember({"auto", "raw", "commutator"}))
        ->capture_default_str();

    auto* derive = app.add_subcommand("derive", "Basis of the (delta, gamma)-derivation space");
    derive->add_option("algebra", o.algebra, "Algebra or family spec file")->required();
    derive->add_option("--delta", o.delta, "delta as p/q")->capture_default_str();
    derive->add_option("--gamma", o.gamma, "gamma as p/q")->capture_default_str();

    auto* grade = app.add_subcommand("grade", "Root space grading of a derivation and its embeddability");
    grade->add_option("algebra", o.algebra, "Algebra or family spec file")->required();
    grade->add_option("--delta", o.delta, "delta as p/q")->capture_default_str();
    grade->add_option("--gamma", o.gamma, "gamma as p/q")->capture_default_str();
    auto* map_opt = grade->add_option("--map", o.map_path, "Matrix file holding the derivation");
    grade->add_option("--basis-element", o.basis_element, "Use the K-th basis element of the derivation space")
        ->excludes(map_opt);
    add_limit_flags(grade, o);

    auto* magma_cmd = app.add_subcommand("magma", "Semigroup embeddability of a partial magma");
    magma_cmd->add_option("magma", o.magma_path, "Partial magma file")->required();
    add_limit_flags(magma_cmd, o);

    auto* paper = app.add_subcommand("paper-example", "Reproduce the A(f,f,f,f) non-semigroup grading");
    paper->add_option("--algebra", o.fixture, "Check this algebra file instead of the built-in construction");
    add_limit_flags(paper, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    DerivationProblem prob;
    try {
        prob = {parse_rational(o.delta), parse_rational(o.gamma)};
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) {
            static const std::map<std::string, Identity> ids{{"associative", Identity::Associative},
                                                              {"commutative", Identity::Commutative},
                                                              {"anticommutative", Identity::Anticommutative},
                                                              {"jacobi", Identity::Jacobi}};
            static const std::map<std::string, JacobiBracket> brackets{
                {"auto", JacobiBracket::Auto}, {"raw", JacobiBracket::Raw}, {"commutator", JacobiBracket::Commutator}};
            return emit(cli::cmd_check(o.algebra, ids.at(o.identity), brackets.at(o.bracket)), o);
        }
        if (*derive) return emit(cli::cmd_derive(o.algebra, prob), o);
        if (*grade) {
            cli::DerivationSelector sel;
            if (!o.map_path.empty()) {
                sel.kind = cli::DerivationSelector::Kind::MapFile;
                sel.path = o.map_path;
            } else if (o.basis_element) {
                sel.kind = cli::DerivationSelector::Kind::BasisElement;
                sel.index = *o.basis_element;
            }
            return emit(cli::cmd_grade(o.algebra, sel, prob, limits(o)), o);
        }
        if (*magma_cmd) return emit(cli::cmd_magma(o.magma_path, limits(o)), o);
        if (*paper)
            return emit(cli::cmd_paper_example(o.fixture.empty() ? std::nullopt : std::optional<std::string>(o.fixture),
                                               limits(o)),
                        o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
