// Reports how often codes with a non-local obstruction also have a local one.
// Never fails on the mathematics; a counterexample is printed, not asserted.

#include <cstdint>
#include <iostream>

#include <CLI11.hpp>

#include "convex_codes/convex_codes.hpp"

using namespace convex_codes;

int main(int argc, char** argv)
{
    CLI::App app{"Non-local versus local obstruction survey"};
    int trials = 300;
    std::uint64_t seed = 31337;
    int max_n = 6;
    app.add_option("--trials", trials, "random codes to examine");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--max-n", max_n, "largest neuron count")->check(CLI::Range(2, 10));
    CLI11_PARSE(app, argc, argv);

    CodeGenerator g(seed);
    int with_nonlocal = 0, with_both = 0, truncated = 0;
    for (int t = 0; t < trials; ++t) {
        const Code c = g.code(g.uniform(2, max_n), 10);
        const auto nl = nonlocal_obstructions(c, 20000);
        truncated += !nl.exhausted;
        if (nl.obstructions.empty())
            continue;
        ++with_nonlocal;
        const auto local = local_obstructions(c);
        if (!local.obstructions.empty()) {
            ++with_both;
        } else {
            std::cout << "counterexample candidate: " << to_string(c) << "  " << format_obstruction(nl.obstructions[0])
                      << "  local unknown=" << local.unknown.size() << '\n';
        }
    }
    std::cout << "trials " << trials << ", seed " << seed << '\n'
              << "codes with a non-local obstruction: " << with_nonlocal << '\n'
              << "  of which also have a local obstruction: " << with_both << '\n'
              << "searches stopped by budget: " << truncated << '\n';
    return 0;
}
