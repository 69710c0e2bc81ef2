#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfkit/action.hpp"
#include "hopfkit/errors.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/induce.hpp"
#include "hopfkit/presets.hpp"

namespace {

struct Options {
    std::string path;
    int degree = 4;
    int zorder = 4;
    std::string format = "text";
    unsigned long seed = 0;  // accepted for reproducibility of sampled diagnostics
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hopfkit::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.path, "presentation file (.hopf)")->required();
    cmd->add_option("--degree", opt.degree, "generator-degree bound D")->check(CLI::PositiveNumber);
    cmd->add_option("--zorder", opt.zorder, "parameter truncation order Z")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", opt.seed, "seed for randomized diagnostics");
}

hopfkit::Workspace load(const Options& opt) {
    return hopfkit::Workspace::load_text(read_file(opt.path), opt.degree, opt.zorder);
}

int run_verify(const Options& opt) {
    hopfkit::Workspace ws = load(opt);
    hopfkit::AxiomReport report = hopfkit::verify_axioms(ws, opt.degree);
    if (opt.format == "json")
        std::cout << report.json() << "\n";
    else
        std::cout << report.text();
    return report.all_pass() ? 0 : 1;
}

int run_act(const Options& opt, const std::string& kind_name, const std::string& h_text,
            const std::string& f_text) {
    hopfkit::Workspace ws = load(opt);
    const hopfkit::Triplet& t = ws.base();
    hopfkit::ActionKind kind = hopfkit::action_kind_from_name(kind_name);
    hopfkit::Element h = hopfkit::parse_expression(t, h_text, 0);
    int f_home = kind == hopfkit::ActionKind::LeftRegular ? h.algebra() : 1;
    hopfkit::Element f = hopfkit::parse_expression(t, f_text, f_home);
    hopfkit::Element result = hopfkit::act(ws, kind, h, f);
    const hopfkit::Algebra& home = t.algebra(result.algebra());
    if (opt.format == "json")
        std::cout << "{\"result\": \"" << home.render(result) << "\"}\n";
    else
        std::cout << home.render(result) << "\n";
    return 0;
}

int run_pair(const Options& opt, const std::string& h_text, const std::string& f_text) {
    hopfkit::Workspace ws = load(opt);
    const hopfkit::Triplet& t = ws.base();
    hopfkit::Element h = hopfkit::parse_expression(t, h_text, 0);
    hopfkit::Element f = hopfkit::parse_expression(t, f_text, 1);
    hopfkit::Laurent value = hopfkit::pair_elements(h, f, t);
    if (opt.format == "json")
        std::cout << "{\"result\": \"" << value.str(t.first.param) << "\"}\n";
    else
        std::cout << value.str(t.first.param) << "\n";
    return 0;
}

int run_induce(const Options& opt, const std::string& char_spec, const std::string& side_name) {
    hopfkit::Workspace ws = load(opt);
    const hopfkit::Triplet& t = ws.base();
    hopfkit::Character chi = hopfkit::parse_character(t, char_spec);
    if (chi.experimental)
        std::cerr << "note: parameter-valued character values are experimental\n";
    hopfkit::ActionKind side = side_name == "left" ? hopfkit::ActionKind::LeftCoregular
                                                   : hopfkit::ActionKind::RightCoregular;
    hopfkit::InducedRep rep = hopfkit::induce(ws, chi, side, opt.degree);
    if (opt.format == "json") {
        std::cout << rep.json(t) << "\n";
    } else {
        std::cout << "carrier dimension " << rep.carrier.dimension() << "\n";
        for (size_t i = 0; i < rep.carrier.dimension(); ++i)
            std::cout << "  e" << i << " = " << t.second.render(rep.carrier.elements[i]) << "\n";
        for (size_t g = 0; g < rep.matrices.size(); ++g) {
            std::cout << "matrix of " << t.first.generator_names[g] << ":\n";
            const auto& m = rep.matrices[g];
            for (size_t i = 0; i < m.size(); ++i) {
                std::cout << "  [";
                for (size_t j = 0; j < m.size(); ++j) {
                    if (j) std::cout << ", ";
                    std::cout << m.entries[i][j].str(t.first.param);
                }
                std::cout << "]\n";
            }
        }
    }
    return 0;
}

int run_limit(const Options& opt) {
    hopfkit::Workspace ws = load(opt);
    std::cout << hopfkit::render_presentation(hopfkit::classical_limit(ws.base()));
    return 0;
}

int run_normal_order(const Options& opt, const std::string& expr_text) {
    hopfkit::Workspace ws = load(opt);
    const hopfkit::Triplet& t = ws.base();
    hopfkit::Element e = hopfkit::parse_expression(t, expr_text);
    const hopfkit::Algebra& home = t.algebra(e.algebra());
    if (opt.format == "json")
        std::cout << "{\"result\": \"" << home.render(e) << "\"}\n";
    else
        std::cout << home.render(e) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfkit: dual pairs of truncated Hopf algebras, coregular actions and induced representations"};
    app.require_subcommand(1);

    Options opt;
    std::string kind = "left-coregular", h_text, f_text, char_spec, side = "left", expr_text;

    CLI::App* verify = app.add_subcommand("verify", "check Hopf and pairing axioms");
    add_common(verify, opt);

    CLI::App* act = app.add_subcommand("act", "apply a module action to an element");
    add_common(act, opt);
    act->add_option("--kind", kind, "left-regular | right-coregular | left-coregular")
        ->check(CLI::IsMember({"left-regular", "right-coregular", "left-coregular"}));
    act->add_option("hexpr", h_text, "acting element")->required();
    act->add_option("fexpr", f_text, "element acted on")->required();

    CLI::App* pair = app.add_subcommand("pair", "evaluate the dual pairing");
    add_common(pair, opt);
    pair->add_option("hexpr", h_text, "element of the first algebra")->required();
    pair->add_option("fexpr", f_text, "element of the second algebra")->required();

    CLI::App* induce = app.add_subcommand("induce", "solve the equivariance condition and induce");
    add_common(induce, opt);
    induce->add_option("--char", char_spec, "character, e.g. \"Pm=1,Pp=1/3\"")->required();
    induce->add_option("--side", side, "coregular side of the equivariance condition")
        ->check(CLI::IsMember({"left", "right"}));

    CLI::App* limit = app.add_subcommand("limit", "classical limit of the presentation");
    add_common(limit, opt);

    CLI::App* norder = app.add_subcommand("normal-order", "canonical form of an expression");
    add_common(norder, opt);
    norder->add_option("expr", expr_text, "expression to normal order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(act)) return run_act(opt, kind, h_text, f_text);
        if (app.got_subcommand(pair)) return run_pair(opt, h_text, f_text);
        if (app.got_subcommand(induce)) return run_induce(opt, char_spec, side);
        if (app.got_subcommand(limit)) return run_limit(opt);
        if (app.got_subcommand(norder)) return run_normal_order(opt, expr_text);
    } catch (const hopfkit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hopfkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
