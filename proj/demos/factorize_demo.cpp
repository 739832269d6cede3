// Factor a small two-symbol automaton and print the pieces.

#include <gsa/gsa.hpp>

#include <iostream>

int main() {
    using namespace gsa;

    const GeneralizedSA automaton({"s1", "s2"}, {"x1", "x2"},
                                  {RMatrix{{2, 3}, {1, 0}}, RMatrix{{1, 2}, {0, 3}}});

    const Factorization fact = factorize(automaton);

    std::cout << "input automaton class: " << to_string(classify_gsa(automaton)) << "\n";
    std::cout << "output alphabet size:  " << fact.source().output_alphabet().size() << "\n\n";

    std::cout << "gamma table (zero entries omitted):\n";
    for (std::size_t x = 0; x < automaton.symbol_count(); ++x) {
        std::cout << "  " << automaton.alphabet()[x] << ":";
        for (std::size_t z = 0; z < fact.source().output_alphabet().size(); ++z)
            if (!fact.source().weight(x, z).is_zero())
                std::cout << "  " << fact.source().output_alphabet()[z] << "="
                          << fact.source().weight(x, z).str();
        std::cout << "\n";
    }

    std::cout << "\nmachine transitions ('-' = undefined):\n";
    const DeterministicSA& machine = fact.machine();
    for (std::size_t i = 0; i < machine.state_count(); ++i) {
        std::cout << "  " << machine.states()[i] << ":";
        for (std::size_t z = 0; z < machine.symbol_count(); ++z) {
            const TransformTable& t = machine.transition(z);
            std::cout << "  " << (t.defined(i) ? machine.states()[t.target(i)] : "-");
        }
        std::cout << "\n";
    }

    const VerifyReport report = verify_factorization(automaton, fact, 2);
    std::cout << "\nround trip up to word length 2: " << (report.ok() ? "exact" : "BROKEN")
              << "\n";
    return report.ok() ? 0 : 1;
}
