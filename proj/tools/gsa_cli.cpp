// Command-line front end: classify, run and factor automata stored as JSON.

#include <gsa/gsa.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace gsa;

// Exit codes: 0 ok, 1 verification failed, 2 invalid input, 3 resource cap.
constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_invalid = 2;
constexpr int exit_cap = 3;

bool json_output = false;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string render_matrix(const RMatrix& m) {
    std::vector<std::size_t> widths(m.order(), 0);
    for (std::size_t j = 0; j < m.order(); ++j)
        for (std::size_t i = 0; i < m.order(); ++i)
            widths[j] = std::max(widths[j], m.at(i, j).str().size());
    std::string out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        out += "[ ";
        for (std::size_t j = 0; j < m.order(); ++j) {
            const std::string cell = m.at(i, j).str();
            out += std::string(widths[j] - cell.size(), ' ') + cell;
            out += j + 1 < m.order() ? "  " : " ";
        }
        out += "]\n";
    }
    return out;
}

std::string join_word(const std::vector<std::string>& symbols) {
    bool single_chars = true;
    for (const auto& s : symbols) single_chars &= s.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i && !single_chars) out += ",";
        out += symbols[i];
    }
    return out;
}

/// Splits on commas when present, otherwise one symbol per character
/// (requires a single-character alphabet). Empty text is the empty word.
std::vector<std::string> tokenize_word(const std::string& text,
                                       const std::vector<std::string>& alphabet) {
    if (text.empty()) return {};
    std::vector<std::string> tokens;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            tokens.push_back(text.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return tokens;
    }
    bool single_chars = true;
    for (const auto& s : alphabet) single_chars &= s.size() == 1;
    if (!single_chars)
        throw std::invalid_argument(
            "word: the alphabet has multi-character symbols; separate them with commas");
    for (char c : text) tokens.push_back(std::string(1, c));
    return tokens;
}

Automaton load_automaton(const std::string& path) {
    return automaton_from_json(load_json_file(path));
}

GeneralizedSA load_gsa(const std::string& path) {
    Automaton a = load_automaton(path);
    if (!std::holds_alternative<GeneralizedSA>(a))
        throw std::invalid_argument(path + ": expected an automaton of type 'gsa'");
    return std::get<GeneralizedSA>(std::move(a));
}

json word_to_json(const std::vector<std::string>& symbols) { return json(symbols); }

int cmd_classify(const std::string& file) {
    const Automaton loaded = load_automaton(file);
    const GeneralizedSA g = std::holds_alternative<DeterministicSA>(loaded)
                                ? embed_sa(std::get<DeterministicSA>(loaded))
                                : std::get<GeneralizedSA>(loaded);
    const GsaClass cls = classify_gsa(g);
    if (json_output) {
        json per_symbol = json::object();
        for (std::size_t x = 0; x < g.symbol_count(); ++x)
            per_symbol[g.alphabet()[x]] = classify(g.matrix(x)).labels();
        emit(json{{"class", to_string(cls)}, {"per_symbol", per_symbol}});
        return exit_ok;
    }
    std::cout << to_string(cls) << '\n';
    for (std::size_t x = 0; x < g.symbol_count(); ++x) {
        std::cout << "  " << g.alphabet()[x] << ":";
        for (const auto& label : classify(g.matrix(x)).labels()) std::cout << ' ' << label;
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_decompose(const std::string& file, const std::string& out, bool force_greedy) {
    const GeneralizedSA g = load_gsa(file);
    const Factorization f = factorize(g, force_greedy);
    const json fact_json = factorization_to_json(f);
    if (!out.empty()) save_json_file(out, fact_json);

    const GsaClass machine_class = classify_gsa(f.basis_gsa());
    json sums = json::object();
    for (std::size_t x = 0; x < g.symbol_count(); ++x) {
        Rational sum;
        for (std::size_t z = 0; z < f.source().output_alphabet().size(); ++z)
            sum += f.source().weight(x, z);
        sums[g.alphabet()[x]] = rational_to_json(sum);
    }

    if (json_output) {
        emit(json{{"xi_size", f.source().output_alphabet().size()},
                  {"machine_class", to_string(machine_class)},
                  {"coefficient_sums", sums},
                  {"probabilistic", f.source().is_probabilistic()},
                  {"factorization", fact_json}});
        return exit_ok;
    }
    if (out.empty()) {
        emit(fact_json);
        return exit_ok;
    }
    std::cout << "output alphabet size: " << f.source().output_alphabet().size() << '\n';
    std::cout << "machine class: " << to_string(machine_class) << '\n';
    std::cout << "coefficient sums:";
    for (std::size_t x = 0; x < g.symbol_count(); ++x) {
        Rational sum;
        for (std::size_t z = 0; z < f.source().output_alphabet().size(); ++z)
            sum += f.source().weight(x, z);
        std::cout << ' ' << g.alphabet()[x] << '=' << sum.str();
    }
    std::cout << '\n' << "wrote " << out << '\n';
    return exit_ok;
}

int cmd_verify(const std::string& gsa_file, const std::string& fact_file,
               std::size_t max_word_len) {
    const GeneralizedSA g = load_gsa(gsa_file);
    const Factorization f = factorization_from_json(load_json_file(fact_file));
    const VerifyReport report = verify_factorization(g, f, max_word_len);
    if (json_output) {
        json j{{"ok", report.ok()}, {"max_word_len", max_word_len}};
        if (!report.ok())
            j["counterexample"] = json{
                {"word", word_to_json(report.failure->word)},
                {"expected", matrix_to_json(report.failure->expected)},
                {"reconstructed", matrix_to_json(report.failure->reconstructed)}};
        emit(j);
        return report.ok() ? exit_ok : exit_verify_failed;
    }
    if (report.ok()) {
        std::cout << "ok: identities hold exactly up to word length " << max_word_len
                  << '\n';
        return exit_ok;
    }
    std::cout << "FAILED at word \"" << join_word(report.failure->word) << "\"\n";
    std::cout << "automaton:\n" << render_matrix(report.failure->expected);
    std::cout << "factorization:\n" << render_matrix(report.failure->reconstructed);
    return exit_verify_failed;
}

int cmd_run(const std::string& file, const std::string& word_text) {
    const Automaton loaded = load_automaton(file);
    if (std::holds_alternative<DeterministicSA>(loaded)) {
        const DeterministicSA& a = std::get<DeterministicSA>(loaded);
        const auto tokens = tokenize_word(word_text, a.alphabet());
        Word word;
        for (const auto& token : tokens) word.push_back(a.symbol_index(token));
        const TransformTable table = delta_word(a, word);
        if (json_output) {
            json map = json::object();
            for (std::size_t i = 0; i < a.state_count(); ++i)
                if (table.defined(i)) map[a.states()[i]] = a.states()[table.target(i)];
            emit(json{{"word", word_to_json(tokens)}, {"type", "sa"}, {"map", map}});
            return exit_ok;
        }
        for (std::size_t i = 0; i < a.state_count(); ++i)
            std::cout << a.states()[i] << " -> "
                      << (table.defined(i) ? a.states()[table.target(i)] : "-") << '\n';
        return exit_ok;
    }
    const GeneralizedSA& a = std::get<GeneralizedSA>(loaded);
    const auto tokens = tokenize_word(word_text, a.alphabet());
    Word word;
    for (const auto& token : tokens) word.push_back(a.symbol_index(token));
    const RMatrix q = q_word(a, word);
    const bool stochastic = classify_gsa(a) == GsaClass::stochastic ||
                            classify_gsa(a) == GsaClass::doubly_stochastic ||
                            classify_gsa(a) == GsaClass::permutation ||
                            classify_gsa(a) == GsaClass::deterministic;
    if (json_output) {
        emit(json{{"word", word_to_json(tokens)},
                  {"type", "gsa"},
                  {"matrix", matrix_to_json(q)},
                  {"stochastic", stochastic}});
        return exit_ok;
    }
    std::cout << render_matrix(q);
    if (stochastic)
        std::cout << "stochastic: entry (i,j) is the probability of reaching state j "
                     "from state i on this word\n";
    return exit_ok;
}

int cmd_monoid(const std::string& file, std::size_t cap) {
    const Automaton loaded = load_automaton(file);
    if (!std::holds_alternative<DeterministicSA>(loaded))
        throw std::invalid_argument(file + ": expected an automaton of type 'sa'");
    const DeterministicSA& a = std::get<DeterministicSA>(loaded);
    const TransformationMonoid monoid = transformation_monoid(a, cap);

    const auto word_names = [&](const Word& w) {
        std::vector<std::string> names;
        for (std::size_t symbol : w) names.push_back(a.alphabet()[symbol]);
        return names;
    };
    if (json_output) {
        json elements = json::array();
        for (std::size_t k = 0; k < monoid.size(); ++k) {
            json map = json::object();
            for (std::size_t i = 0; i < a.state_count(); ++i)
                if (monoid.elements[k].defined(i))
                    map[a.states()[i]] = a.states()[monoid.elements[k].target(i)];
            elements.push_back(
                json{{"word", word_to_json(word_names(monoid.words[k]))}, {"map", map}});
        }
        emit(json{{"size", monoid.size()}, {"elements", elements}});
        return exit_ok;
    }
    std::cout << "size " << monoid.size() << '\n';
    for (std::size_t k = 0; k < monoid.size(); ++k) {
        std::cout << '"' << join_word(word_names(monoid.words[k])) << "\":";
        for (std::size_t i = 0; i < a.state_count(); ++i) {
            const auto& element = monoid.elements[k];
            std::cout << ' ' << a.states()[i] << "->"
                      << (element.defined(i) ? a.states()[element.target(i)] : "-");
        }
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_compose(const std::string& source_file, const std::string& machine_file,
                const std::string& out) {
    const json source_json = load_json_file(source_file);
    const DependentSource source = source_from_json(
        source_json.contains("source") ? source_json.at("source") : source_json);

    const json machine_json = load_json_file(machine_file);
    const Automaton machine = automaton_from_json(
        machine_json.contains("machine") && !machine_json.contains("type")
            ? machine_json.at("machine")
            : machine_json);
    const GeneralizedSA machine_gsa = std::holds_alternative<DeterministicSA>(machine)
                                          ? embed_sa(std::get<DeterministicSA>(machine))
                                          : std::get<GeneralizedSA>(machine);

    const GeneralizedSA product = sequential_product(source, machine_gsa);
    const json product_json = automaton_to_json(product);
    if (!out.empty()) save_json_file(out, product_json);
    if (json_output) {
        emit(json{{"class", to_string(classify_gsa(product))}, {"automaton", product_json}});
        return exit_ok;
    }
    if (out.empty()) {
        emit(product_json);
        return exit_ok;
    }
    std::cout << "class: " << to_string(classify_gsa(product)) << '\n';
    std::cout << "wrote " << out << '\n';
    return exit_ok;
}

int cmd_gen(const std::string& kind, unsigned m, const std::string& out) {
    if (kind != "madic") throw std::invalid_argument("gen: unknown kind '" + kind + "'");
    const GeneralizedSA a = madic(m);
    const json j = automaton_to_json(a);
    if (!out.empty()) save_json_file(out, j);
    if (json_output) {
        emit(json{{"automaton", j}});
        return exit_ok;
    }
    if (out.empty()) {
        emit(j);
        return exit_ok;
    }
    std::cout << "wrote " << out << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for generalized semiautomata"};
    app.require_subcommand(1);
    app.add_flag("--json", json_output, "machine-readable output on stdout");

    std::string file, second_file, out, word_text, kind;
    bool force_greedy = false;
    std::size_t max_word_len = 2;
    std::size_t cap = 100000;
    unsigned m = 0;

    auto* classify_cmd = app.add_subcommand("classify", "print the automaton's class");
    classify_cmd->add_option("file", file, "automaton file")->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "factor an automaton into source and machine");
    decompose_cmd->add_option("file", file, "gsa file")->required();
    decompose_cmd->add_option("-o,--output", out, "factorization file to write");
    decompose_cmd->add_flag("--force-greedy", force_greedy,
                            "peel greedily even when the Birkhoff route applies");

    auto* verify_cmd =
        app.add_subcommand("verify", "check a factorization against an automaton");
    verify_cmd->add_option("gsa", file, "gsa file")->required();
    verify_cmd->add_option("factorization", second_file, "factorization file")->required();
    verify_cmd->add_option("--max-word-len", max_word_len,
                           "word length bound for the brute-force check");

    auto* run_cmd = app.add_subcommand("run", "apply a word to an automaton");
    run_cmd->add_option("file", file, "automaton file")->required();
    run_cmd->add_option("--word", word_text,
                        "input word; separate symbols with commas when needed")
        ->required();

    auto* monoid_cmd =
        app.add_subcommand("monoid", "enumerate the word-induced transformations");
    monoid_cmd->add_option("file", file, "sa file")->required();
    monoid_cmd->add_option("--cap", cap, "element cap");

    auto* compose_cmd =
        app.add_subcommand("compose", "sequential product of a source and a machine");
    compose_cmd->add_option("source", file, "source or factorization file")->required();
    compose_cmd->add_option("machine", second_file, "automaton or factorization file")
        ->required();
    compose_cmd->add_option("-o,--output", out, "gsa file to write");

    auto* gen_cmd = app.add_subcommand("gen", "generate an example automaton");
    gen_cmd->add_option("kind", kind, "family name (madic)")->required();
    gen_cmd->add_option("--m", m, "base of the digit alphabet")->required();
    gen_cmd->add_option("-o,--output", out, "automaton file to write");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(file);
        if (decompose_cmd->parsed()) return cmd_decompose(file, out, force_greedy);
        if (verify_cmd->parsed()) return cmd_verify(file, second_file, max_word_len);
        if (run_cmd->parsed()) return cmd_run(file, word_text);
        if (monoid_cmd->parsed()) return cmd_monoid(file, cap);
        if (compose_cmd->parsed()) return cmd_compose(file, second_file, out);
        if (gen_cmd->parsed()) return cmd_gen(kind, m, out);
    } catch (const gsa::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_ok;
}
