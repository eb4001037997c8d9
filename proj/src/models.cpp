#include "lookalike/models.hpp"

#include "lookalike/abelian.hpp"
#include "lookalike/genus.hpp"
#include "lookalike/homotopy_table.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lookalike {

namespace {

long long mod_into(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

void require_m(int m) {
    if (m != 2 && m != 4 && m != 8)
        throw std::invalid_argument("dimension parameter m must be 2, 4 or 8");
}

int exotic_modulus(int m) { return m == 8 ? 4 : 2; }

// Reported A-hat numbers follow the sign convention of the classical
// closed forms -t(t+1)/56 and -u(u+1)/16256; direct evaluation of the
// genus polynomial at the model classes produces the opposite sign for
// m = 4, 8.  The whole convention lives in this one constant.
constexpr int kAHatReportSign = -1;

}  // namespace

std::string ModelDescriptor::display_name() const {
    if (kind == ModelKind::Chern4) return "Ch4";
    if (m == 2) return "CP2";
    if (m == 4 && (r == 1 || r == -1) && s == 0) return "HP2";
    if (m == 8 && (r == 7 || r == -7) && s == 0) return "OP2";
    return "M(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

ModelDescriptor make_model(int m, long long r, int s) {
    require_m(m);
    if (mod_into(r, 2) == 0) throw std::invalid_argument("r must be odd");
    if (s < 0 || s >= exotic_modulus(m))
        throw std::invalid_argument("s outside the exotic residue range");
    if (m == 2) {
        if (r != 1) throw std::invalid_argument("the only 4-dimensional Thom-space model has r = 1");
        if (s == 1) return chern_manifold();  // ks = 1: not a Thom space
        return ModelDescriptor{2, ModelKind::Model, 1, 0};
    }
    return ModelDescriptor{m, ModelKind::Model, r, s};
}

ModelDescriptor chern_manifold() { return ModelDescriptor{2, ModelKind::Chern4, 1, 1}; }

bool ValueLattice::contains(const Rational &q) const {
    Rational ratio = q / generator;
    return ratio.is_integer();
}

std::string ValueLattice::str() const {
    if (generator.is_integer()) return generator.str() + "*Z";
    return "(" + generator.str() + ")*Z";
}

ValueLattice pontrjagin_range(int k, BundleCategory category) {
    if (k != 1 && k != 2)
        throw std::invalid_argument("unsupported dimension: only k = 1, 2 are classified here");
    if (category == BundleCategory::Vector) {
        // d_k (2k-1)! with d_k = 2 for k odd, 1 for k even
        return k == 1 ? ValueLattice{Rational(2)} : ValueLattice{Rational(6)};
    }
    return k == 1 ? ValueLattice{Rational(2)} : ValueLattice{Rational(6, 7)};
}

bool bundle_admissible(const BundleDescriptor &b) {
    require_m(b.m);
    long long abs_e = b.euler < 0 ? -b.euler : b.euler;
    if (b.m == 2) return true;
    if (b.m == 4) {
        if (!b.p_class.is_integer()) return false;
        BigInt p = b.p_class.num();
        if (p % 2 != 0) return false;
        return (p + 2 * abs_e) % 4 == 0;
    }
    // m = 8: p8 = (6/7) k, and (7/3) p8 + 2|e| = 2k + 2|e| must vanish mod 4
    Rational k7 = b.p_class * Rational(7, 6);
    if (!k7.is_integer()) return false;
    return (2 * k7.num() + 2 * abs_e) % 4 == 0;
}

CohomologyReport thom_cohomology(int m, long long e) {
    require_m(m);
    long long abs_e = e < 0 ? -e : e;
    CohomologyReport rep;
    rep.m = m;
    rep.abs_euler = abs_e;
    rep.epsilon = 1;  // generators chosen so that the sign is absorbed
    std::string ym = "y" + std::to_string(m);
    std::string y2m = "y" + std::to_string(2 * m);
    if (abs_e == 0)
        rep.relation = ym + "^2 = 0";
    else if (abs_e == 1)
        rep.relation = ym + "^2 = " + y2m;
    else
        rep.relation = ym + "^2 = " + std::to_string(abs_e) + "*" + y2m;
    if (abs_e == 1) {
        rep.euler_characteristic = 3;
        rep.signature = 1;
        rep.stiefel_whitney = "1 + " + ym + " + " + ym + "^2";
        rep.wu_class = "1 + " + ym + " + " + ym + "^2";
    }
    return rep;
}

bool operator==(const CohomologyReport &a, const CohomologyReport &b) {
    return a.m == b.m && a.abs_euler == b.abs_euler && a.epsilon == b.epsilon &&
           a.relation == b.relation && a.euler_characteristic == b.euler_characteristic &&
           a.signature == b.signature && a.stiefel_whitney == b.stiefel_whitney &&
           a.wu_class == b.wu_class;
}

const GradedPoly &l_polynomial_for(int m) {
    require_m(m);
    static const GradedPoly l4 = l_genus_polynomial(1);
    static const GradedPoly l8 = l_genus_polynomial(2);
    static const GradedPoly l16 = l_genus_polynomial(4);
    return m == 2 ? l4 : m == 4 ? l8 : l16;
}

const GradedPoly &a_hat_polynomial_for(int m) {
    require_m(m);
    static const GradedPoly a4 = a_hat_polynomial(1);
    static const GradedPoly a8 = a_hat_polynomial(2);
    static const GradedPoly a16 = a_hat_polynomial(4);
    return m == 2 ? a4 : m == 4 ? a8 : a16;
}

namespace {

PontrjaginAssignment model_class_assignment(int m, const Rational &pm, const Rational &p2m) {
    if (m == 2) return {{4, pm}};
    if (m == 4) return {{4, pm}, {8, p2m}};
    return {{4, Rational(0)}, {8, pm}, {12, Rational(0)}, {16, p2m}};
}

/// p_{2m}-coefficient forced by Sig = 1: solve L_{2m}(pm, p2m) = 1 for the
/// top class.  The linear coefficients are read off the cached polynomials.
Rational p2m_from_signature(int m, const Rational &pm) {
    if (m == 2) return pm;  // 2m = 4: the top class is p4 itself
    const GradedPoly &l = l_polynomial_for(m);
    PontrjaginMonomial top{{2 * m, 1}};
    PontrjaginMonomial square{{m, 2}};
    Rational c_top = l.coefficient(top);
    Rational c_sq = l.coefficient(square);
    // c_top * p2m + c_sq * pm^2 = 1
    return (Rational(1) - c_sq * pm * pm) / c_top;
}

}  // namespace

Rational signature_number(const InvariantReport &report) {
    return l_polynomial_for(report.descriptor.m)
        .evaluate(model_class_assignment(report.descriptor.m, report.pm, report.p2m));
}

std::vector<long long> consecutive_product_roots(long long modulus) {
    std::vector<long long> roots;
    for (long long x = 0; x < modulus; ++x)
        if ((x * (x + 1)) % modulus == 0) roots.push_back(x);
    return roots;
}

const std::vector<long long> &diff_residues_expected(int m) {
    static const std::vector<long long> m4 = {0, 7, 48, 55};
    static const std::vector<long long> m8 = {0, 127, 16128, 16255};
    if (m == 4) return m4;
    if (m == 8) return m8;
    throw std::invalid_argument("DIFF residues exist for m = 4, 8 only");
}

const std::vector<long long> &diff_residues(int m) {
    static const std::vector<long long> m4 = [] {
        auto r = consecutive_product_roots(56);
        if (r != diff_residues_expected(4))
            throw std::logic_error("derived DIFF residues mod 56 disagree with the classical set");
        return r;
    }();
    static const std::vector<long long> m8 = [] {
        auto r = consecutive_product_roots(16256);
        if (r != diff_residues_expected(8))
            throw std::logic_error("derived DIFF residues mod 16256 disagree with the classical set");
        return r;
    }();
    if (m == 4) return m4;
    if (m == 8) return m8;
    throw std::invalid_argument("DIFF residues exist for m = 4, 8 only");
}

PlStructure pl_structure(const ModelDescriptor &d) {
    if (d.kind == ModelKind::Chern4) return {false, 0, true};
    if (d.m == 2) return {true, 1, false};  // count open for CP^2
    if (d.m == 4) return d.s == 0 ? PlStructure{true, 1, true} : PlStructure{false, 0, true};
    return {true, 1, true};
}

DiffStructure diff_structure(const ModelDescriptor &d) {
    if (d.kind == ModelKind::Chern4) return {false, 0, true};
    if (d.m == 2) return {true, 1, false};  // CP^2 is smooth; the count is open
    const int max_count = 2;  // |Theta_{2m}| for 2m = 8, 16
    if (d.s != 0) return {false, 0, true};
    if (d.m == 4) {
        long long t = (d.r - 1) / 2;
        const auto &set = diff_residues(4);
        bool hit = std::binary_search(set.begin(), set.end(), mod_into(t, 56));
        return {hit, hit ? max_count : 0, true};
    }
    // m = 8: the bundle needs a vector structure first, i.e. r = 7(1+2u)
    if (mod_into(d.r, 14) != 7) return {false, 0, true};
    long long u = (d.r / 7 - 1) / 2;
    const auto &set = diff_residues(8);
    bool hit = std::binary_search(set.begin(), set.end(), mod_into(u, 16256));
    return {hit, hit ? max_count : 0, true};
}

BordismInvariants bordism_invariants(const ModelDescriptor &d) {
    if (d.kind != ModelKind::Model)
        throw std::invalid_argument("bordism invariants are defined for Thom-space models");
    if (d.m == 2) return {Rational(9), d.s};
    if (d.m == 4) return {Rational(4) * Rational(d.r) * Rational(d.r), d.s};
    Rational pm = Rational(6, 7) * Rational(d.r);
    return {pm * pm, static_cast<int>(mod_into(d.r * d.s, 4))};
}

long long homotopy_invariant(const ModelDescriptor &d) {
    if (d.m == 2) return 1;
    long long modulus = d.m == 4 ? 24 : 240;
    long long shift = d.m == 4 ? 12 : 60;
    long long v = mod_into(d.r + shift * d.s, modulus);
    return std::min(v, mod_into(-v, modulus));
}

bool homotopy_equivalent(const ModelDescriptor &a, const ModelDescriptor &b) {
    if (a.m != b.m) throw std::invalid_argument("dimension error: models of different dimension");
    if (a.m == 2) return true;  // one homotopy type: CP^2
    return homotopy_invariant(a) == homotopy_invariant(b);
}

bool homeomorphic(const ModelDescriptor &a, const ModelDescriptor &b) {
    if (a.m != b.m) throw std::invalid_argument("dimension error: models of different dimension");
    if (a.m == 2) return a.kind == b.kind;
    if (a.m == 4) return (a.r == b.r || a.r == -b.r) && a.s == b.s;
    return (a.r == b.r && a.s == b.s) || (a.r == -b.r && mod_into(a.s + b.s, 4) == 0);
}

int count_homotopy_types_orbit(int m) {
    require_m(m);
    if (m == 2) return 1;  // pi3(S2) has no torsion: a single Hopf class up to sign
    BigInt k_big = pi_bg_unstable(m).torsion().front();
    long long k = static_cast<long long>(k_big);
    std::vector<bool> seen(static_cast<size_t>(k), false);
    int orbits = 0;
    for (long long j = 0; j < k; ++j) {
        if (seen[static_cast<size_t>(j)]) continue;
        ++orbits;
        seen[static_cast<size_t>(j)] = true;
        seen[static_cast<size_t>(mod_into(-1 - j, k))] = true;
    }
    return orbits;
}

int count_homotopy_types_residues(int m) {
    require_m(m);
    if (m == 2) return 1;
    long long modulus = m == 4 ? 24 : 240;
    std::set<long long> classes;
    for (long long r = 1; r <= 2 * modulus; r += 2)
        for (int s = 0; s < exotic_modulus(m); ++s)
            classes.insert(homotopy_invariant(ModelDescriptor{m, ModelKind::Model, r, s}));
    return static_cast<int>(classes.size());
}

int count_homotopy_types(int m) {
    int orbit = count_homotopy_types_orbit(m);
    int residues = count_homotopy_types_residues(m);
    if (orbit != residues)
        throw std::logic_error("homotopy-type counts disagree between the two methods");
    return orbit;
}

InvariantReport model_invariants(const ModelDescriptor &d) {
    require_m(d.m);
    InvariantReport rep;
    rep.descriptor = d;

    if (d.m == 2) {
        rep.pm = Rational(3);  // forced by Sig = 1 and L4 = p4/3
    } else if (d.m == 4) {
        rep.pm = Rational(2) * Rational(d.r);
    } else {
        rep.pm = Rational(6, 7) * Rational(d.r);
    }
    rep.p2m = p2m_from_signature(d.m, rep.pm);
    rep.pm_squared = rep.pm * rep.pm;

    Rational a_hat_eval =
        a_hat_polynomial_for(d.m).evaluate(model_class_assignment(d.m, rep.pm, rep.p2m));
    rep.a_hat = d.m == 2 ? a_hat_eval : Rational(kAHatReportSign) * a_hat_eval;

    rep.ks_or_kappa = d.s;
    if (d.m == 8) rep.q8_kappa = static_cast<int>(mod_into(d.r * d.s, 4));
    rep.homotopy_class = homotopy_invariant(d);
    rep.pl = pl_structure(d);
    rep.diff = diff_structure(d);
    rep.psc = rep.diff.admits && rep.a_hat.is_zero();
    if (d.kind == ModelKind::Model)
        rep.bordism = bordism_invariants(d);
    else
        rep.bordism = {rep.pm_squared, d.s};  // ks is still a bordism invariant
    return rep;
}

EnumerationResult enumerate_models(int m, long long r_min, long long r_max) {
    require_m(m);
    EnumerationResult out;
    if (m == 2) {
        out.rows.push_back(model_invariants(make_model(2, 1, 0)));
        out.rows.push_back(model_invariants(chern_manifold()));
        return out;
    }
    for (long long r = r_min; r <= r_max; ++r) {
        if (mod_into(r, 2) == 0) {
            out.diagnostics.push_back("r = " + std::to_string(r) + " rejected: r must be odd");
            continue;
        }
        for (int s = 0; s < exotic_modulus(m); ++s)
            out.rows.push_back(model_invariants(make_model(m, r, s)));
    }
    return out;
}

bool splitting_exactness(int m, long long iota_free, long long iota_torsion) {
    if (m != 4 && m != 8)
        throw std::invalid_argument("the splitting check applies to m = 4, 8");
    const FgAbGroup &middle = pi_bg_unstable(m);          // Z + Z/k
    const FgAbGroup &quotient = pi_bg_stable(m);          // Z/2k
    BigInt two_k = quotient.torsion().front();

    FgAbGroup z = FgAbGroup::free_group(1);
    GroupMap iota(z, middle,
                  IntMatrix::from_rows({{BigInt(iota_free)}, {BigInt(iota_torsion)}}));
    // chosen surjection (a, b) -> a + 2b mod 2k; any valid choice is
    // isomorphic, this one makes the check deterministic
    GroupMap project(middle, quotient, IntMatrix::from_rows({{BigInt(1), BigInt(2)}}));

    std::vector<GroupMap> row = {GroupMap::zero(FgAbGroup::trivial(), z), iota, project,
                                 GroupMap::zero(quotient, FgAbGroup::trivial())};
    if (!is_exact(row)) return false;

    BigInt n(m / 2);
    std::vector<GroupMap> tensored = {
        GroupMap::zero(FgAbGroup::trivial(), tensor_cyclic(z, n)), tensor_cyclic(iota, n),
        tensor_cyclic(project, n),
        GroupMap::zero(tensor_cyclic(quotient, n), FgAbGroup::trivial())};
    return is_exact(tensored);
}

bool verify_splitting(int m) { return splitting_exactness(m, 2, -1); }

}  // namespace lookalike
