// Optimal dividend barrier for every figure case at q = 1.

#include "scalekit/scalekit.hpp"

#include <cstdio>

int main()
{
    using namespace scalekit;
    std::printf("%4s %12s %14s %14s\n", "case", "a*", "W'(a*)", "V(a*/2)");
    for (char label : {'A', 'B', 'C', 'D', 'E', 'F'}) {
        const auto w = gtsc_scale(gtsc_case(label, 0.5), 1.0);
        const auto b = dividend_barrier(w);
        std::printf("%4c %12.8f %14.10f %14.10f\n", label, b.a_star, b.wprime_at_a_star,
                    dividend_value(w, b.a_star, 0.5 * b.a_star));
    }
    return 0;
}
