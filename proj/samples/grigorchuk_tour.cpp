// A short walk through the library on the Grigorchuk coding.
#include <toeplitz/toeplitz.hpp>

#include <iostream>

using namespace toeplitz;

int main() {
    Coding c = parse_coding(preset_spec("grigorchuk"));
    const auto& abc = c.alphabet();
    std::cout << "coding      " << c.describe() << "\n";
    std::cout << "prefix(32)  " << abc.render(word_prefix(c, 32)) << "\n";

    std::cout << "complexity ";
    for (std::size_t L = 1; L <= 12; ++L) std::cout << " " << complexity_formula(c, L);
    std::cout << "\n";

    auto g = build_graph(c, 2);
    std::cout << "G_2         " << g.vertices.size() << " vertices, " << g.edges.size() << " edges, u1 = "
              << abc.render(*g.u1) << "\n";

    std::cout << "R(3..6)    ";
    for (std::size_t L = 3; L <= 6; ++L) std::cout << " " << repetitivity_formula(c, L);
    std::cout << "\n";

    auto lin = linear_repetitivity(c, 6);
    std::cout << "linear rep. " << to_string(lin.verdict) << " (limsup " << lin.limsup_product << ")\n";

    auto b = bosh_verdict(c, 6);
    std::cout << "condition B " << to_string(b.verdict) << "\n";

    CoefficientMap<double> cm{{1, 1, 1, 1}, {0, 1, 2, 3}};
    auto sa = finite_section_spectrum(c, cm, 256);
    std::cout << "N=256 cover " << sa.cover_length() << " over " << sa.cover.size() << " intervals\n";
    std::cout << "lyapunov E=0 " << lyapunov_estimate(c, cm, 0.0, 4096).value << "\n";
}
