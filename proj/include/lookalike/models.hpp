#pragma once

#include "lookalike/graded_poly.hpp"
#include "lookalike/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lookalike {

/// Which closed 2m-manifold with cohomology Z[y]/(y^3) a descriptor names.
/// `Model` is the Thom space M_{r,s} of an R^m-bundle over S^m with
/// absolute Euler number 1; `Chern4` is the non-smoothable 4-manifold
/// homotopy equivalent to CP^2 (it is not a Thom space).
enum class ModelKind { Model, Chern4 };

/// (m, r, s) naming a model.  m in {2, 4, 8}; r odd.  For m = 4 the bundle
/// datum is p4 = 2r; for m = 8 it is p8 = (6/7) r.  s holds the exotic
/// class: ks in Z/2 for m = 2, 4 and kappa in Z/4 for m = 8.  For m = 2 the
/// only Thom-space model is r = 1 (CP^2); (m=2, s=1) therefore names the
/// Chern manifold.
struct ModelDescriptor {
    int m;
    ModelKind kind;
    long long r;
    int s;

    friend bool operator==(const ModelDescriptor &a, const ModelDescriptor &b) {
        return a.m == b.m && a.kind == b.kind && a.r == b.r && a.s == b.s;
    }

    /// "CP2", "Ch4", "HP2", "OP2" for the named manifolds, else "M(r,s)".
    std::string display_name() const;
};

/// Validating factory.  Throws std::invalid_argument on even r, r != 1 for
/// m = 2, or s outside the residue range.
ModelDescriptor make_model(int m, long long r, int s);
ModelDescriptor chern_manifold();

/// An R^m-bundle over S^m given by its characteristic numbers.
struct BundleDescriptor {
    int m;
    long long euler;   // signed Euler number; |euler| is the absolute one
    Rational p_class;  // <p_m, [S^m]>; ignored for m = 2
    int exotic;        // w2 (m=2), ks (m=4) in Z/2; kappa (m=8) in Z/4
};

/// Existence test for the bundle data: p4 in 2Z with p4 + 2|e| = 0 mod 4
/// (m = 4), p8 in (6/7)Z with (7/3) p8 + 2|e| = 0 mod 4 (m = 8); no
/// constraint for m = 2.
bool bundle_admissible(const BundleDescriptor &b);

enum class BundleCategory { Vector, Topological };

/// Additive subgroup c*Z of the rationals.
struct ValueLattice {
    Rational generator;
    bool contains(const Rational &q) const;
    std::string str() const;
};

/// Realizable values of <p_{4k}, [S^{4k}]> for bundles over the sphere:
/// vector bundles give d_k (2k-1)! Z (2Z, 6Z for k = 1, 2), topological
/// R^n-bundles give 2Z and (6/7)Z.  Only k = 1, 2 are supported.
ValueLattice pontrjagin_range(int k, BundleCategory category);

/// Cohomology of the Thom space of an R^m-bundle over S^m with Euler
/// number e.  Manifold data (Euler characteristic 3, signature 1, total
/// Stiefel-Whitney and Wu class 1 + y + y^2) only when |e| = 1.
struct CohomologyReport {
    int m;
    long long abs_euler;
    int epsilon;           // y_m^2 = epsilon * |e| * y_{2m}; normalized to +1
    std::string relation;  // rendered relation
    std::optional<int> euler_characteristic;
    std::optional<int> signature;
    std::optional<std::string> stiefel_whitney;
    std::optional<std::string> wu_class;

    friend bool operator==(const CohomologyReport &a, const CohomologyReport &b);
};

CohomologyReport thom_cohomology(int m, long long e);

struct PlStructure {
    bool admits;
    int isotopy_classes;
    bool count_is_known;  // false only for CP^2, where the count is open
};

struct DiffStructure {
    bool admits;
    int max_count;
    bool count_is_known;  // false only for CP^2
};

struct BordismInvariants {
    Rational pm_squared;  // <p_m^2, [M]>
    int exotic_residue;   // ks^2 in Z/2 (m = 2, 4); (7/6) p8 kappa = r s in Z/4 (m = 8)

    friend bool operator==(const BordismInvariants &a, const BordismInvariants &b) {
        return a.pm_squared == b.pm_squared && a.exotic_residue == b.exotic_residue;
    }
};

/// Everything the classification knows about one model.
struct InvariantReport {
    ModelDescriptor descriptor;
    Rational pm;          // coefficient of y_m in p_m(M); p4-coefficient 3 for m = 2
    Rational p2m;         // coefficient of y_m^2 in p_{2m}(M), forced by the signature theorem
    Rational pm_squared;  // <p_m^2, [M]>
    Rational a_hat;       // A-hat genus number; see a_hat_number()
    int ks_or_kappa;
    std::optional<int> q8_kappa;  // m = 8 only: (7/6) p8 kappa = r s mod 4
    long long homotopy_class;     // canonical residue, see homotopy_invariant()
    PlStructure pl;
    DiffStructure diff;
    bool psc;  // admits a DIFF structure with positive scalar curvature
    BordismInvariants bordism;
};

InvariantReport model_invariants(const ModelDescriptor &d);

/// Homeomorphism predicate: equal kinds for m = 2; (r, s) = (+-r', s') for
/// m = 4; (r, s) = +-(r', s') for m = 8 (s negated mod 4).  Dimension
/// mismatch throws std::invalid_argument.
bool homeomorphic(const ModelDescriptor &a, const ModelDescriptor &b);

/// Homotopy equivalence: one type for m = 2; r + 12s = +-(r' + 12s') mod 24
/// for m = 4; r + 60s = +-(r' + 60s') mod 240 for m = 8.
bool homotopy_equivalent(const ModelDescriptor &a, const ModelDescriptor &b);

/// Canonical residue classifying the homotopy type: the smaller of the two
/// sign choices of r + 12s mod 24 (m = 4) resp. r + 60s mod 240 (m = 8);
/// 1 for m = 2.
long long homotopy_invariant(const ModelDescriptor &d);

/// Number of homotopy types, computed two independent ways (orbits of
/// j -> -1-j on the torsion of pi_m(BG(m)), and distinct canonical residues
/// over a full parameter period) and cross-checked: 1, 6, 60.
int count_homotopy_types(int m);
int count_homotopy_types_orbit(int m);
int count_homotopy_types_residues(int m);

PlStructure pl_structure(const ModelDescriptor &d);

/// DIFF existence: s = 0 and t(t+1) = 0 mod 56 where r = 1 + 2t (m = 4);
/// s = 0, r = 7(1+2u) and u(u+1) = 0 mod 16256 (m = 8).  The residue sets
/// are solved at startup and checked against the classical values
/// {0,7,48,55} and {0,127,16128,16255}.  max_count = |Theta_{2m}| = 2.
DiffStructure diff_structure(const ModelDescriptor &d);

/// Solutions of x(x+1) = 0 mod `modulus` in [0, modulus).
std::vector<long long> consecutive_product_roots(long long modulus);
/// The derived DIFF residue sets for m = 4, 8 (moduli 56 and 16256).
const std::vector<long long> &diff_residues(int m);
/// The classical residue sets the derived ones are asserted against.
const std::vector<long long> &diff_residues_expected(int m);

/// Oriented-bordism separating invariants (models only, not Chern4).
BordismInvariants bordism_invariants(const ModelDescriptor &d);

struct EnumerationResult {
    std::vector<InvariantReport> rows;          // r ascending, then s ascending
    std::vector<std::string> diagnostics;       // per-row rejections (even r)
};

/// One row per (r, s) with r odd in [r_min, r_max]; even r values are
/// rejected per row with a diagnostic.  m = 2 ignores the range and yields
/// exactly CP^2 and Ch^4.
EnumerationResult enumerate_models(int m, long long r_min, long long r_max);

/// Exactness of 0 -> Z -> Z + Z/k -> Z/2k -> 0 with the generator going to
/// (2, -1) and the surjection (a, b) -> a + 2b, before and after tensoring
/// with Z/(m/2); k = 12 for m = 4 and 120 for m = 8.
bool verify_splitting(int m);

/// Same check with the generator image (a, b) freely chosen; the mutated
/// image (2, 0) is the negative control.
bool splitting_exactness(int m, long long iota_free, long long iota_torsion);

/// The weight-2m genus polynomials used for the model numbers, cached.
const GradedPoly &l_polynomial_for(int m);
const GradedPoly &a_hat_polynomial_for(int m);

/// <L_{2m}(M), [M]> from the report data; the signature theorem forces 1.
Rational signature_number(const InvariantReport &report);

}  // namespace lookalike
