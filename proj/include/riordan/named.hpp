#pragma once

#include <algorithm>
#include <array>
#include <string_view>

namespace riordan {

// A generating function addressable by name from expressions and the CLI.
struct NamedGF {
    std::string_view name;
    std::string_view expr;
    std::string_view description;
};

inline constexpr std::array<NamedGF, 7> named_gfs{{
    {"fib", "1/(1-z-z^2)", "Fibonacci numbers 1, 1, 2, 3, 5, 8, 13, ..."},
    {"lucas", "(1+z^2)/(1-z-z^2)", "modified Lucas numbers 1, 1, 3, 4, 7, 11, 18, ..."},
    {"lucas1", "(1+2*z)/(1-z-z^2)", "modified Lucas numbers with the leading 1 removed: 1, 3, 4, 7, 11, ..."},
    {"cfib2", "fib^2", "convolved Fibonacci numbers, n = 2"},
    {"cfib3", "fib^3", "convolved Fibonacci numbers, n = 3"},
    {"fibf", "(1-z-z^2-sqrt(5*z^4+10*z^3-z^2-6*z+1))/(2-2*z-2*z^2)",
     "f making (fib, f) a pseudo-involution; -f has compositional order 2"},
    {"lucasf", "(1-z-z^2-sqrt(z^4+10*z^3-13*z^2-10*z+1))/(4-2*z)", "f making (lucas, f) a pseudo-involution"},
}};

inline const NamedGF* find_named(std::string_view name) {
    const auto it = std::find_if(named_gfs.begin(), named_gfs.end(), [&](const NamedGF& n) { return n.name == name; });
    return it == named_gfs.end() ? nullptr : &*it;
}

} // namespace riordan
