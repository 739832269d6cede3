#pragma once

#include "gsa/automata.hpp"
#include "gsa/decompose.hpp"
#include "gsa/matrix.hpp"
#include "gsa/rational.hpp"
#include "gsa/source.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gsa {

using json = nlohmann::json;

/// Accepts JSON integers and strings ("34", "17/4", "0.25"). Non-integer
/// JSON numbers are rejected: a binary double cannot represent most decimals
/// exactly, so decimals must be quoted.
inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
        const auto value = j.get<std::int64_t>();
        if (value < 0) throw std::invalid_argument("entry: negative values are not allowed");
        return Rational(value);
    }
    if (j.is_number())
        throw std::invalid_argument("entry: write decimals as strings (e.g. \"0.25\") "
                                    "to keep them exact");
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("entry: expected an integer or a string");
}

/// Bare integer when the denominator is 1 (and it fits), "p/q" otherwise.
inline json rational_to_json(const Rational& r) {
    if (r.is_integer() && r.numerator() <= std::numeric_limits<std::int64_t>::max())
        return r.numerator().convert_to<std::int64_t>();
    return r.str();
}

inline RMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix: expected a non-empty array of rows");
    const std::size_t n = j.size();
    RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix: rows must all have length " +
                                        std::to_string(n));
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = rational_from_json(row.at(k));
    }
    return m;
}

inline json matrix_to_json(const RMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

inline std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw std::invalid_argument(std::string(what) + ": expected strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

inline const json& required(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string(what) + ": missing key '" + key + "'");
    return *it;
}

}  // namespace detail

using Automaton = std::variant<DeterministicSA, GeneralizedSA>;

inline Automaton automaton_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("automaton: expected an object");
    const std::string type = detail::required(j, "type", "automaton").get<std::string>();
    auto states = detail::string_list(detail::required(j, "states", "automaton"), "states");
    auto alphabet = detail::string_list(detail::required(j, "alphabet", "automaton"), "alphabet");

    const bool has_transitions = j.contains("transitions");
    const bool has_matrices = j.contains("matrices");
    if (has_transitions == has_matrices)
        throw std::invalid_argument("automaton: exactly one of 'transitions'/'matrices' "
                                    "must be present");

    if (type == "sa") {
        if (!has_transitions)
            throw std::invalid_argument("automaton: type 'sa' requires 'transitions'");
        const json& table = j.at("transitions");
        if (!table.is_object())
            throw std::invalid_argument("automaton: 'transitions' must be an object");
        DeterministicSA skeleton(states, alphabet,
                                 std::vector<TransformTable>(
                                     alphabet.size(), TransformTable(states.size())));
        std::vector<TransformTable> transitions(alphabet.size(),
                                                TransformTable(states.size()));
        for (const auto& [symbol, mapping] : table.items()) {
            const std::size_t x = skeleton.symbol_index(symbol);
            if (!mapping.is_object())
                throw std::invalid_argument("automaton: transition map for '" + symbol +
                                            "' must be an object");
            for (const auto& [from, to] : mapping.items()) {
                if (!to.is_string())
                    throw std::invalid_argument("automaton: transition targets must be "
                                                "state names");
                transitions[x].set(skeleton.state_index(from),
                                   skeleton.state_index(to.get<std::string>()));
            }
        }
        return DeterministicSA(std::move(states), std::move(alphabet), std::move(transitions));
    }
    if (type == "gsa") {
        if (!has_matrices)
            throw std::invalid_argument("automaton: type 'gsa' requires 'matrices'");
        const json& table = j.at("matrices");
        if (!table.is_object())
            throw std::invalid_argument("automaton: 'matrices' must be an object");
        std::vector<RMatrix> matrices(alphabet.size(), RMatrix(states.size()));
        std::vector<bool> given(alphabet.size(), false);
        GeneralizedSA skeleton(states, alphabet, matrices);
        for (const auto& [symbol, literal] : table.items()) {
            const std::size_t x = skeleton.symbol_index(symbol);
            matrices[x] = matrix_from_json(literal);
            given[x] = true;
        }
        for (std::size_t x = 0; x < alphabet.size(); ++x)
            if (!given[x])
                throw std::invalid_argument("automaton: missing matrix for symbol '" +
                                            alphabet[x] + "'");
        return GeneralizedSA(std::move(states), std::move(alphabet), std::move(matrices));
    }
    throw std::invalid_argument("automaton: type must be 'sa' or 'gsa'");
}

inline json automaton_to_json(const DeterministicSA& a) {
    json transitions = json::object();
    for (std::size_t x = 0; x < a.symbol_count(); ++x) {
        json mapping = json::object();
        const TransformTable& table = a.transition(x);
        for (std::size_t i = 0; i < a.state_count(); ++i)
            if (table.defined(i)) mapping[a.states()[i]] = a.states()[table.target(i)];
        transitions[a.alphabet()[x]] = std::move(mapping);
    }
    return json{{"type", "sa"},
                {"states", a.states()},
                {"alphabet", a.alphabet()},
                {"transitions", std::move(transitions)}};
}

inline json automaton_to_json(const GeneralizedSA& a) {
    json matrices = json::object();
    for (std::size_t x = 0; x < a.symbol_count(); ++x)
        matrices[a.alphabet()[x]] = matrix_to_json(a.matrix(x));
    return json{{"type", "gsa"},
                {"states", a.states()},
                {"alphabet", a.alphabet()},
                {"matrices", std::move(matrices)}};
}

inline json automaton_to_json(const Automaton& a) {
    return std::visit([](const auto& automaton) { return automaton_to_json(automaton); }, a);
}

inline Decomposition decomposition_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("decomposition: expected an object");
    const json& order = detail::required(j, "order", "decomposition");
    if (!order.is_number_unsigned() || order.get<std::size_t>() == 0)
        throw std::invalid_argument("decomposition: 'order' must be a positive integer");
    Decomposition d(order.get<std::size_t>());
    for (const auto& term : detail::required(j, "terms", "decomposition"))
        d.push_term(rational_from_json(detail::required(term, "coeff", "term")),
                    matrix_from_json(detail::required(term, "basis", "term")));
    return d;
}

inline json decomposition_to_json(const Decomposition& d) {
    json terms = json::array();
    for (const auto& term : d.terms())
        terms.push_back(json{{"coeff", rational_to_json(term.coeff)},
                             {"basis", matrix_to_json(term.basis)}});
    return json{{"order", d.order()}, {"terms", std::move(terms)}};
}

/// Zero weights are omitted from the gamma table on output and implied on
/// input.
inline DependentSource source_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("source: expected an object");
    auto input = detail::string_list(detail::required(j, "input_alphabet", "source"),
                                     "input_alphabet");
    auto output = detail::string_list(detail::required(j, "output_alphabet", "source"),
                                      "output_alphabet");
    std::vector<std::vector<Rational>> weights(input.size(),
                                               std::vector<Rational>(output.size()));
    DependentSource skeleton(input, output, weights);
    for (const auto& [x_name, row] : detail::required(j, "gamma", "source").items()) {
        const std::size_t x = skeleton.input_index(x_name);
        if (!row.is_object())
            throw std::invalid_argument("source: gamma row for '" + x_name +
                                        "' must be an object");
        for (const auto& [z_name, value] : row.items())
            weights[x][skeleton.output_index(z_name)] = rational_from_json(value);
    }
    DependentSource source(std::move(input), std::move(output), std::move(weights));
    const json& flag = detail::required(j, "probabilistic", "source");
    if (!flag.is_boolean())
        throw std::invalid_argument("source: 'probabilistic' must be a boolean");
    if (flag.get<bool>() != source.is_probabilistic())
        throw std::invalid_argument("source: 'probabilistic' flag does not match the "
                                    "gamma table");
    return source;
}

inline json source_to_json(const DependentSource& s) {
    json gamma = json::object();
    for (std::size_t x = 0; x < s.input_alphabet().size(); ++x) {
        json row = json::object();
        for (std::size_t z = 0; z < s.output_alphabet().size(); ++z)
            if (!s.weight(x, z).is_zero())
                row[s.output_alphabet()[z]] = rational_to_json(s.weight(x, z));
        gamma[s.input_alphabet()[x]] = std::move(row);
    }
    return json{{"input_alphabet", s.input_alphabet()},
                {"output_alphabet", s.output_alphabet()},
                {"gamma", std::move(gamma)},
                {"probabilistic", s.is_probabilistic()}};
}

inline Factorization factorization_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("factorization: expected an object");
    DependentSource source = source_from_json(detail::required(j, "source", "factorization"));
    Automaton machine = automaton_from_json(detail::required(j, "machine", "factorization"));
    if (!std::holds_alternative<DeterministicSA>(machine))
        throw std::invalid_argument("factorization: machine must be of type 'sa'");
    const DeterministicSA& sa = std::get<DeterministicSA>(machine);
    const json& basis_table = detail::required(j, "basis", "factorization");
    std::vector<RMatrix> basis(sa.symbol_count(), RMatrix(sa.state_count()));
    std::vector<bool> given(sa.symbol_count(), false);
    for (const auto& [z_name, literal] : basis_table.items()) {
        const std::size_t z = sa.symbol_index(z_name);
        basis[z] = matrix_from_json(literal);
        given[z] = true;
    }
    for (std::size_t z = 0; z < sa.symbol_count(); ++z)
        if (!given[z])
            throw std::invalid_argument("factorization: missing basis matrix for symbol '" +
                                        sa.alphabet()[z] + "'");
    return Factorization(std::move(source), std::move(sa), std::move(basis));
}

inline json factorization_to_json(const Factorization& f) {
    json basis = json::object();
    for (std::size_t z = 0; z < f.basis().size(); ++z)
        basis[f.machine().alphabet()[z]] = matrix_to_json(f.basis()[z]);
    return json{{"source", source_to_json(f.source())},
                {"machine", automaton_to_json(f.machine())},
                {"basis", std::move(basis)}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
    }
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
}

}  // namespace gsa
