#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pnlab/cli.hpp>

namespace {

struct query_pair {
    std::size_t k = 0;
    int d = 0;
};

query_pair parse_query(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw pnlab::precondition_error("--query expects k,d");
    try {
        std::size_t used_k = 0;
        std::size_t used_d = 0;
        const std::string k = text.substr(0, comma);
        const std::string d = text.substr(comma + 1);
        query_pair q{std::stoul(k, &used_k), std::stoi(d, &used_d)};
        if (used_k != k.size() || used_d != d.size() || k.front() == '-') throw std::invalid_argument(text);
        return q;
    } catch (const std::logic_error&) {
        throw pnlab::precondition_error("--query expects k,d with non-negative integers, got " + text);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prefix normal words, pnPals and the collapse relation"};
    app.require_subcommand(1);

    unsigned jobs = 0;
    bool use_oracle = false;
    app.add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_flag("--oracle", use_oracle, "Answer with the brute-force reference implementations");

    std::string name;
    std::size_t n = 0;
    std::string format = "csv";
    auto* sequence = app.add_subcommand("sequence", "Emit an integer sequence for n = 1..n_max");
    sequence->add_option("name", name, "pn-count | npal | collapse-classes | max-class-size")->required();
    sequence->add_option("n_max", n)->required();
    sequence->add_option("--format", format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

    std::string theorem;
    auto* verify = app.add_subcommand("verify", "Check a statement exhaustively up to n_max");
    verify->add_option("theorem", theorem)->required()->check(CLI::IsMember(pnlab::verify::theorem_names()));
    verify->add_option("n_max", n)->required();

    std::string word;
    auto* word_cmd = app.add_subcommand("word", "Report on a single word");
    word_cmd->add_option("word", word)->required();
    std::vector<std::pair<std::string, bool>> action_flags;
    action_flags.reserve(pnlab::cli::word_actions().size());
    for (const auto& action : pnlab::cli::word_actions()) {
        action_flags.emplace_back(action, false);
        word_cmd->add_flag("--" + action, action_flags.back().second);
    }
    bool collapse_flag = false;
    word_cmd->add_flag("--collapse", collapse_flag, "Same as --extends --bound");

    std::string kind;
    auto* enumerate = app.add_subcommand("enumerate", "List the words or classes of length n");
    enumerate->add_option("kind", kind, "lr | npf | pnpal | classes")
        ->required()
        ->check(CLI::IsMember({"lr", "npf", "pnpal", "classes"}));
    enumerate->add_option("n", n)->required();

    std::string engine = "band";
    auto* collapse = app.add_subcommand("collapse-classes", "Collapse classes of the LRs of length n");
    collapse->add_option("n", n)->required();
    collapse->add_option("--engine", engine, "brute | band")->check(CLI::IsMember({"brute", "band"}));

    auto* bounds = app.add_subcommand("bounds", "Index bounds against the actual index");
    bounds->add_option("n_max", n)->required();

    std::string query_text;
    bool witness = false;
    auto* jpm = app.add_subcommand("jpm", "Jumbled pattern matching query");
    jpm->add_option("word", word)->required();
    jpm->add_option("--query", query_text, "k,d")->required();
    jpm->add_flag("--witness", witness, "Print the first matching position");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pnlab::cli::usage;
    }

    pnlab::cli::context ctx;
    ctx.options.jobs = jobs;
    ctx.options.limits = pnlab::enumeration_limits::from_environment();
    ctx.oracle = use_oracle;

    try {
        if (*sequence) return pnlab::cli::run_sequence(name, n, format, ctx, std::cout);
        if (*verify) return pnlab::cli::run_verify(theorem, n, ctx, std::cout);
        if (*word_cmd) {
            std::vector<std::string> actions;
            for (const auto& [action, set] : action_flags) {
                if (set || (collapse_flag && (action == "extends" || action == "bound"))) actions.push_back(action);
            }
            return pnlab::cli::run_word(word, actions, ctx, std::cout);
        }
        if (*enumerate) return pnlab::cli::run_enumerate(kind, n, ctx, std::cout);
        if (*collapse) {
            const auto e = engine == "brute" ? pnlab::collapse_engine::brute_force : pnlab::collapse_engine::band_search;
            return pnlab::cli::run_collapse_classes(n, e, ctx, std::cout);
        }
        if (*bounds) return pnlab::cli::run_bounds(n, ctx, std::cout);
        if (*jpm) {
            const query_pair q = parse_query(query_text);
            return pnlab::cli::run_jpm(word, q.k, q.d, witness, ctx, std::cout);
        }
    } catch (const pnlab::limit_exceeded& e) {
        std::cerr << "pnlab: " << e.what() << " (set PNLAB_MAX_N to raise it)\n";
        return pnlab::cli::limit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pnlab: " << e.what() << '\n';
        return pnlab::cli::usage;
    } catch (const std::exception& e) {
        std::cerr << "pnlab: internal error: " << e.what() << '\n';
        return pnlab::cli::usage;
    }
    return pnlab::cli::usage;
}
