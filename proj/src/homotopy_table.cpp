#include "lookalike/homotopy_table.hpp"

#include <stdexcept>

namespace lookalike {

const std::vector<HomotopyGroupEntry> &homotopy_group_table() {
    static const std::vector<HomotopyGroupEntry> table = {
        {"pi7(S4)", FgAbGroup(1, {12}), "Toda, Composition Methods in Homotopy Groups of Spheres"},
        {"pi15(S8)", FgAbGroup(1, {120}), "Toda, Composition Methods in Homotopy Groups of Spheres"},
        {"pi2(BG)", FgAbGroup::cyclic(2), "stable 1-stem; Toda"},
        {"pi4(BG)", FgAbGroup::cyclic(24), "stable 3-stem; Toda"},
        {"pi8(BG)", FgAbGroup::cyclic(240), "stable 7-stem; Toda"},
        {"pi3(TOP/O)", FgAbGroup::cyclic(2), "Kirby-Siebenmann, Essay V"},
        {"pi7(TOP/O)", FgAbGroup::cyclic(28), "Kirby-Siebenmann; Kervaire-Milnor"},
        {"pi4(BTOP)", FgAbGroup(1, {2}), "Kirby-Siebenmann, p. 318"},
        {"pi8(BTOP)", FgAbGroup(1, {4}), "Kirby-Siebenmann; Williamson"},
        {"Theta8", FgAbGroup::cyclic(2), "Kervaire-Milnor, Groups of homotopy spheres"},
        {"Theta16", FgAbGroup::cyclic(2), "Kervaire-Milnor, Groups of homotopy spheres"},
    };
    return table;
}

const HomotopyGroupEntry &homotopy_group(const std::string &name) {
    for (const HomotopyGroupEntry &e : homotopy_group_table())
        if (e.name == name) return e;
    throw std::out_of_range("no table entry named " + name);
}

const FgAbGroup &pi_bg_unstable(int m) {
    if (m == 4) return homotopy_group("pi7(S4)").group;
    if (m == 8) return homotopy_group("pi15(S8)").group;
    throw std::invalid_argument("pi_m(BG(m)) is tabulated for m = 4, 8 only");
}

const FgAbGroup &pi_bg_stable(int m) {
    if (m == 2) return homotopy_group("pi2(BG)").group;
    if (m == 4) return homotopy_group("pi4(BG)").group;
    if (m == 8) return homotopy_group("pi8(BG)").group;
    throw std::invalid_argument("pi_m(BG) is tabulated for m = 2, 4, 8 only");
}

const FgAbGroup &pi_top_mod_o(int k) {
    if (k == 3) return homotopy_group("pi3(TOP/O)").group;
    if (k == 7) return homotopy_group("pi7(TOP/O)").group;
    throw std::invalid_argument("pi_k(TOP/O) is tabulated for k = 3, 7 only");
}

const FgAbGroup &pi_btop(int m) {
    if (m == 4) return homotopy_group("pi4(BTOP)").group;
    if (m == 8) return homotopy_group("pi8(BTOP)").group;
    throw std::invalid_argument("pi_m(BTOP) is tabulated for m = 4, 8 only");
}

const FgAbGroup &theta_group(int dim) {
    if (dim == 8) return homotopy_group("Theta8").group;
    if (dim == 16) return homotopy_group("Theta16").group;
    throw std::invalid_argument("Theta_n is tabulated for n = 8, 16 only");
}

}  // namespace lookalike
