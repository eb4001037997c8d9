#pragma once

#include "lookalike/int_matrix.hpp"
#include "lookalike/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lookalike {

/// Finitely generated abelian group in canonical form: a free rank plus a
/// torsion divisor chain d_1 | d_2 | ... with every d_i >= 2.  Two groups
/// are isomorphic iff these fields coincide.
class FgAbGroup {
  public:
    FgAbGroup() : rank_(0) {}
    FgAbGroup(int rank, std::vector<BigInt> torsion);

    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free_group(int rank) { return FgAbGroup(rank, {}); }
    static FgAbGroup cyclic(const BigInt &n);
    /// Canonical form of Z^generators / column span of relations.
    static FgAbGroup from_presentation(int generators, const IntMatrix &relations);
    /// Parse "Z", "Z^2 + Z/4", "Z/2 + Z/12", "0".
    static FgAbGroup parse(const std::string &text);

    int rank() const { return rank_; }
    const std::vector<BigInt> &torsion() const { return torsion_; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return rank_ == 0; }
    bool is_cyclic() const { return rank_ == 0 && torsion_.size() <= 1; }
    BigInt order() const;  // finite groups only

    /// Number of generators in the standard basis: free ones first, then
    /// one per torsion factor in chain order.
    int generator_count() const { return rank_ + static_cast<int>(torsion_.size()); }
    /// Order of each standard generator; 0 marks a free generator.
    std::vector<BigInt> generator_orders() const;
    /// Relation matrix of the standard presentation (one column per torsion
    /// generator).
    IntMatrix relation_matrix() const;

    friend bool operator==(const FgAbGroup &a, const FgAbGroup &b) {
        return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
    }
    friend bool operator!=(const FgAbGroup &a, const FgAbGroup &b) { return !(a == b); }
    friend bool operator<(const FgAbGroup &a, const FgAbGroup &b);

    /// "Z^r + Z/d1 + Z/d2 + ...", trivial group renders as "0".
    std::string str() const;

  private:
    int rank_;
    std::vector<BigInt> torsion_;
};

/// Homomorphism between finitely generated abelian groups, as an integer
/// matrix in the standard generator bases (rows indexed by target
/// generators, columns by source generators).  Entries in torsion
/// coordinates are kept reduced into [0, d).  Well-definedness -- each
/// source generator of order d maps to an element killed by d -- is checked
/// at construction and violations throw std::domain_error.
class GroupMap {
  public:
    GroupMap(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static GroupMap zero(const FgAbGroup &source, const FgAbGroup &target);
    static GroupMap identity(const FgAbGroup &g);

    const FgAbGroup &source() const { return source_; }
    const FgAbGroup &target() const { return target_; }
    const IntMatrix &matrix() const { return matrix_; }

    bool is_zero() const;

    /// g after f (source of g must equal target of f, else std::invalid_argument).
    friend GroupMap compose(const GroupMap &g, const GroupMap &f);

  private:
    FgAbGroup source_;
    FgAbGroup target_;
    IntMatrix matrix_;
};

FgAbGroup kernel(const GroupMap &f);
FgAbGroup cokernel(const GroupMap &f);

/// True iff consecutive maps compose to zero and image equals kernel at
/// every interior node (compared as sublattices of the ambient free cover).
/// Non-composable chains throw std::invalid_argument ("shape").
bool is_exact(const std::vector<GroupMap> &sequence);

/// - tensor with Z/n: Z factors become Z/n, Z/d factors become Z/gcd(d, n).
FgAbGroup tensor_cyclic(const FgAbGroup &g, const BigInt &n);
GroupMap tensor_cyclic(const GroupMap &f, const BigInt &n);

/// Order of the class of `element` (coordinates in the standard generators
/// of `f`'s target) inside target tensor Z/n.  A wrong coordinate count
/// throws std::out_of_range ("coordinate error").
BigInt element_order_after_tensor(const GroupMap &f, const std::vector<BigInt> &element,
                                  const BigInt &n);

// --- finite solver ---------------------------------------------------------

/// T embeds in Z/a, i.e. T is cyclic of order dividing a.
struct EmbedsIn {
    BigInt modulus;
};
/// T tensor Z/n is isomorphic to the given group.
struct TensorIsomorphic {
    BigInt n;
    FgAbGroup group;
};
/// |T| <= bound.  Required: the enumeration must be bounded.
struct OrderAtMost {
    BigInt bound;
};

using TorsionConstraint = std::variant<EmbedsIn, TensorIsomorphic, OrderAtMost>;

/// All finite abelian groups of order <= bound, canonical and duplicate
/// free, sorted by (order, divisor chain).
std::vector<FgAbGroup> enumerate_finite_abelian_groups(const BigInt &bound);

/// Every finite abelian group within the OrderAtMost bound satisfying all
/// constraints.  An empty list, or one without an OrderAtMost, is rejected
/// (std::invalid_argument: the search would be unbounded).
std::vector<FgAbGroup> solve_torsion_constraints(const std::vector<TorsionConstraint> &constraints);

}  // namespace lookalike
