#pragma once

#include "lookalike/abelian.hpp"

#include <string>
#include <vector>

namespace lookalike {

/// A homotopy-theoretic input fact: a named group together with the
/// classical literature it is quoted from.  These are table data, not
/// computed by this library.
struct HomotopyGroupEntry {
    std::string name;
    FgAbGroup group;
    std::string citation;
};

/// The read-only table of homotopy groups the classification consumes.
const std::vector<HomotopyGroupEntry> &homotopy_group_table();

/// Lookup by name; throws std::out_of_range for unknown names.
const HomotopyGroupEntry &homotopy_group(const std::string &name);

/// pi_m(BG(m)) for m = 4, 8 (isomorphic to pi_{2m-1}(S^m)): Z + Z/12 and
/// Z + Z/120.
const FgAbGroup &pi_bg_unstable(int m);

/// pi_m(BG) for m = 2, 4, 8: Z/2, Z/24, Z/240 (the stable (m-1)-stems).
const FgAbGroup &pi_bg_stable(int m);

/// pi_k(TOP/O) for k = 3, 7: Z/2 and Z/28.
const FgAbGroup &pi_top_mod_o(int k);

/// pi_m(BTOP) for m = 4, 8: Z + Z/2 and Z + Z/4.
const FgAbGroup &pi_btop(int m);

/// The group Theta_{2m} of homotopy spheres for 2m = 8, 16; cyclic of
/// order 2 in both cases.
const FgAbGroup &theta_group(int dim);

}  // namespace lookalike
