#ifndef F2COH_BUILTIN_HPP
#define F2COH_BUILTIN_HPP

#include <string>
#include <utility>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/group.hpp"
#include "f2coh/permutation.hpp"

namespace f2coh {

// Built-in permutation groups, as generator text in the group-file format.
// PSL(2,7) acts on the 7 points of the Fano plane (as GL(3,2)); PSL(2,8)
// acts on the 9 points of the projective line over GF(8). Sz(8) is not
// built in; it is accepted via a degree-65 generator file.
inline const std::vector<std::pair<std::string, std::string>>& builtin_groups() {
    static const std::vector<std::pair<std::string, std::string>> groups = {
        {"c2", "(1 2)\n"},
        {"s3", "(1 2)\n(1 2 3)\n"},
        {"a4", "(1 2)(3 4)\n(1 2 3)\n"},
        {"a5", "(1 2 3 4 5)\n(1 2 3)\n"},
        {"psl27", "(1 2 4 3 6 7 5)\n(4 5)(6 7)\n"},
        {"psl28", "(1 2)(3 4)(5 6)(7 8)\n(2 3 5 4 7 8 6)\n(1 9)(3 6)(4 7)(5 8)\n"},
    };
    return groups;
}

inline std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [name, gens] : builtin_groups())
        names.push_back(name);
    return names;
}

inline FiniteGroup make_builtin(std::string name) {
    for (char& c : name)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == "psl(2,7)")
        name = "psl27";
    if (name == "psl(2,8)")
        name = "psl28";
    for (const auto& [key, gens] : builtin_groups())
        if (key == name)
            return FiniteGroup::close_generators(parse_generators_text(gens));
    throw Error("unknown built-in group \"" + name + "\"");
}

} // namespace f2coh

#endif
