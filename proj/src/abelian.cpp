#include "lookalike/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lookalike {

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

BigInt lcm_big(const BigInt &a, const BigInt &b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_big(a, b) * b;
}

BigInt mod_into(const BigInt &x, const BigInt &d) {
    BigInt r = x % d;
    if (r < 0) r += d;
    return r;
}

}  // namespace

FgAbGroup::FgAbGroup(int rank, std::vector<BigInt> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    for (size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw std::invalid_argument("torsion orders must be >= 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw std::invalid_argument("torsion must form a divisor chain d1 | d2 | ...");
    }
}

FgAbGroup FgAbGroup::cyclic(const BigInt &n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    if (n == 1) return trivial();
    return FgAbGroup(0, {n});
}

FgAbGroup FgAbGroup::from_presentation(int generators, const IntMatrix &relations) {
    if (relations.rows() != generators)
        throw std::invalid_argument("presentation matrix needs one row per generator");
    SmithNormalForm snf = smith_normal_form(relations);
    std::vector<BigInt> torsion;
    int nonzero = 0;
    for (const BigInt &d : snf.divisors) {
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) torsion.push_back(d);
    }
    return FgAbGroup(generators - nonzero, std::move(torsion));
}

BigInt FgAbGroup::order() const {
    if (rank_ != 0) throw std::domain_error("order of an infinite group");
    BigInt n(1);
    for (const BigInt &d : torsion_) n *= d;
    return n;
}

std::vector<BigInt> FgAbGroup::generator_orders() const {
    std::vector<BigInt> orders(static_cast<size_t>(rank_), BigInt(0));
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    return orders;
}

IntMatrix FgAbGroup::relation_matrix() const {
    int n = generator_count();
    int k = static_cast<int>(torsion_.size());
    IntMatrix rel(n, k);
    for (int j = 0; j < k; ++j) rel.at(rank_ + j, j) = torsion_[static_cast<size_t>(j)];
    return rel;
}

bool operator<(const FgAbGroup &a, const FgAbGroup &b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.torsion_ < b.torsion_;
}

std::string FgAbGroup::str() const {
    if (is_trivial()) return "0";
    std::string out;
    if (rank_ == 1) out = "Z";
    else if (rank_ > 1) out = "Z^" + std::to_string(rank_);
    for (const BigInt &d : torsion_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

FgAbGroup FgAbGroup::parse(const std::string &text) {
    std::string compact;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw std::invalid_argument("empty group expression");
    if (compact == "0" || compact == "1") return trivial();
    int rank = 0;
    std::vector<BigInt> torsion;
    std::stringstream ss(compact);
    std::string part;
    while (std::getline(ss, part, '+')) {
        if (part == "Z")
            rank += 1;
        else if (part.rfind("Z^", 0) == 0)
            rank += std::stoi(part.substr(2));
        else if (part.rfind("Z/", 0) == 0)
            torsion.push_back(BigInt(part.substr(2)));
        else
            throw std::invalid_argument("cannot parse group term '" + part + "'");
    }
    std::sort(torsion.begin(), torsion.end());
    // the constructor enforces the divisor chain; inputs like Z/2+Z/3 are
    // normalized first by merging coprime parts
    std::vector<BigInt> chain;
    for (const BigInt &d : torsion) {
        if (!chain.empty() && chain.back() % d != 0 && d % chain.back() != 0) {
            if (gcd_big(chain.back(), d) == 1) {
                chain.back() *= d;
                std::sort(chain.begin(), chain.end());
                continue;
            }
        }
        chain.push_back(d);
    }
    std::sort(chain.begin(), chain.end());
    return FgAbGroup(rank, std::move(chain));
}

GroupMap::GroupMap(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generator_count() ||
        matrix_.cols() != source_.generator_count())
        throw std::invalid_argument("matrix shape does not match source/target generators");

    std::vector<BigInt> src_orders = source_.generator_orders();
    std::vector<BigInt> tgt_orders = target_.generator_orders();
    for (int i = 0; i < matrix_.rows(); ++i)
        for (int j = 0; j < matrix_.cols(); ++j) {
            const BigInt &d = src_orders[static_cast<size_t>(j)];
            BigInt &entry = matrix_.at(i, j);
            const BigInt &dt = tgt_orders[static_cast<size_t>(i)];
            if (dt != 0) entry = mod_into(entry, dt);
            if (d == 0) continue;
            if (dt == 0) {
                if (entry != 0)
                    throw std::domain_error(
                        "ill-defined map: torsion generator hits a free coordinate");
            } else if (mod_into(d * entry, dt) != 0) {
                throw std::domain_error("ill-defined map: torsion order not respected");
            }
        }
}

GroupMap GroupMap::zero(const FgAbGroup &source, const FgAbGroup &target) {
    return GroupMap(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

GroupMap GroupMap::identity(const FgAbGroup &g) {
    return GroupMap(g, g, IntMatrix::identity(g.generator_count()));
}

bool GroupMap::is_zero() const {
    std::vector<BigInt> tgt_orders = target_.generator_orders();
    for (int i = 0; i < matrix_.rows(); ++i)
        for (int j = 0; j < matrix_.cols(); ++j) {
            const BigInt &dt = tgt_orders[static_cast<size_t>(i)];
            const BigInt &e = matrix_.at(i, j);
            if (dt == 0 ? e != 0 : mod_into(e, dt) != 0) return false;
        }
    return true;
}

GroupMap compose(const GroupMap &g, const GroupMap &f) {
    if (!(g.source() == f.target()))
        throw std::invalid_argument("shape error: maps are not composable");
    return GroupMap(f.source(), g.target(), g.matrix() * f.matrix());
}

namespace {

/// Generators (as columns in the free cover of f's source) of the lattice
/// {x : f(x) = 0 in the target}.  Contains the source relation lattice.
IntMatrix kernel_lattice(const GroupMap &f) {
    IntMatrix combined = IntMatrix::augment(f.matrix(), f.target().relation_matrix());
    IntMatrix null_basis = integer_kernel(combined);
    int n = f.source().generator_count();
    IntMatrix projected(n, null_basis.cols());
    for (int j = 0; j < null_basis.cols(); ++j)
        for (int i = 0; i < n; ++i) projected.at(i, j) = null_basis.at(i, j);
    return projected;
}

/// Generators of the image of f inside the free cover of its target
/// (image columns together with the target relations).
IntMatrix image_lattice(const GroupMap &f) {
    return IntMatrix::augment(f.matrix(), f.target().relation_matrix());
}

}  // namespace

FgAbGroup kernel(const GroupMap &f) {
    IntMatrix gens = kernel_lattice(f);
    // basis of the kernel lattice L
    IntMatrix basis_rows = lattice_canonical_form(gens);  // rows form a basis of L
    IntMatrix basis = basis_rows.transposed();            // columns form the basis
    int rank_l = basis.cols();
    if (rank_l == 0) return FgAbGroup::trivial();

    // express the source relations in that basis: solve basis * z = rel
    IntMatrix rel = f.source().relation_matrix();
    SmithNormalForm snf = smith_normal_form(basis);
    // basis = U^{-1} D V^{-1}; solve via z = V D^{+} U rel
    IntMatrix transformed = snf.left * rel;
    IntMatrix z(rank_l, rel.cols());
    for (int j = 0; j < rel.cols(); ++j)
        for (int i = 0; i < rank_l; ++i) {
            const BigInt &d = snf.divisors[static_cast<size_t>(i)];
            const BigInt &t = transformed.at(i, j);
            if (d == 0) {
                if (t != 0) throw std::logic_error("relation escaped the kernel lattice");
                z.at(i, j) = 0;
            } else {
                if (t % d != 0) throw std::logic_error("relation not integral in kernel basis");
                z.at(i, j) = t / d;
            }
        }
    for (int j = 0; j < rel.cols(); ++j)
        for (int i = rank_l; i < transformed.rows(); ++i)
            if (transformed.at(i, j) != 0)
                throw std::logic_error("relation escaped the kernel lattice");
    IntMatrix coords = snf.right * z;
    return FgAbGroup::from_presentation(rank_l, coords);
}

FgAbGroup cokernel(const GroupMap &f) {
    return FgAbGroup::from_presentation(f.target().generator_count(), image_lattice(f));
}

bool is_exact(const std::vector<GroupMap> &sequence) {
    for (size_t i = 0; i + 1 < sequence.size(); ++i) {
        const GroupMap &f = sequence[i];
        const GroupMap &g = sequence[i + 1];
        if (!(g.source() == f.target()))
            throw std::invalid_argument("shape error: sequence is not composable");
        if (!compose(g, f).is_zero()) return false;
        IntMatrix image = lattice_canonical_form(image_lattice(f));
        IntMatrix kern = lattice_canonical_form(
            IntMatrix::augment(kernel_lattice(g), g.source().relation_matrix()));
        if (image != kern) return false;
    }
    return true;
}

FgAbGroup tensor_cyclic(const FgAbGroup &g, const BigInt &n) {
    if (n < 2) throw std::invalid_argument("tensor factor must be Z/n with n >= 2");
    std::vector<BigInt> chain;
    for (const BigInt &d : g.torsion()) {
        BigInt e = gcd_big(d, n);
        if (e >= 2) chain.push_back(e);
    }
    for (int i = 0; i < g.rank(); ++i) chain.push_back(n);
    return FgAbGroup(0, std::move(chain));
}

namespace {

/// Positions of the generators of g tensor Z/n inside the tensored group,
/// indexed by the original generator index; surviving torsion generators
/// come first (chain order), then the former free generators.
std::vector<int> tensor_generator_map(const FgAbGroup &g, const BigInt &n) {
    std::vector<int> where(static_cast<size_t>(g.generator_count()), -1);
    int next = 0;
    for (size_t t = 0; t < g.torsion().size(); ++t)
        if (gcd_big(g.torsion()[t], n) >= 2)
            where[static_cast<size_t>(g.rank()) + t] = next++;
    for (int i = 0; i < g.rank(); ++i) where[static_cast<size_t>(i)] = next++;
    return where;
}

}  // namespace

GroupMap tensor_cyclic(const GroupMap &f, const BigInt &n) {
    FgAbGroup src = tensor_cyclic(f.source(), n);
    FgAbGroup tgt = tensor_cyclic(f.target(), n);
    std::vector<int> src_where = tensor_generator_map(f.source(), n);
    std::vector<int> tgt_where = tensor_generator_map(f.target(), n);
    IntMatrix m(tgt.generator_count(), src.generator_count());
    for (int i = 0; i < f.matrix().rows(); ++i) {
        if (tgt_where[static_cast<size_t>(i)] < 0) continue;
        for (int j = 0; j < f.matrix().cols(); ++j) {
            if (src_where[static_cast<size_t>(j)] < 0) continue;
            m.at(tgt_where[static_cast<size_t>(i)], src_where[static_cast<size_t>(j)]) =
                f.matrix().at(i, j);
        }
    }
    return GroupMap(src, tgt, std::move(m));
}

BigInt element_order_after_tensor(const GroupMap &f, const std::vector<BigInt> &element,
                                  const BigInt &n) {
    const FgAbGroup &target = f.target();
    if (static_cast<int>(element.size()) != target.generator_count())
        throw std::out_of_range("coordinate error: element length does not match the target");
    if (n < 2) throw std::invalid_argument("tensor factor must be Z/n with n >= 2");
    BigInt order(1);
    std::vector<BigInt> orders = target.generator_orders();
    for (size_t i = 0; i < element.size(); ++i) {
        BigInt tensored = orders[i] == 0 ? n : gcd_big(orders[i], n);
        if (tensored < 2) continue;
        BigInt x = mod_into(element[i], tensored);
        order = lcm_big(order, tensored / gcd_big(x, tensored));
    }
    return order;
}

// --- finite solver ----------------------------------------------------------

namespace {

void partitions_of(int n, int max_part, std::vector<int> &current,
                   std::vector<std::vector<int>> &out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_of(n - p, p, current, out);
        current.pop_back();
    }
}

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

BigInt big_pow(const BigInt &base, int e) {
    BigInt r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::vector<FgAbGroup> enumerate_finite_abelian_groups(const BigInt &bound) {
    if (bound < 1) throw std::invalid_argument("order bound must be positive");
    std::vector<FgAbGroup> out;
    for (BigInt order = 1; order <= bound; ++order) {
        // per prime, a partition of its exponent; descending chains combined
        // factor-by-factor give the divisor chain
        std::vector<std::pair<BigInt, int>> factors = factorize(order);
        std::vector<std::vector<std::vector<int>>> choices;
        for (const auto &[p, e] : factors) {
            std::vector<std::vector<int>> parts;
            std::vector<int> scratch;
            partitions_of(e, e, scratch, parts);
            choices.push_back(std::move(parts));
        }
        std::vector<size_t> idx(choices.size(), 0);
        for (;;) {
            size_t chain_len = 0;
            for (size_t f = 0; f < choices.size(); ++f)
                chain_len = std::max(chain_len, choices[f][idx[f]].size());
            std::vector<BigInt> descending(chain_len, BigInt(1));
            for (size_t f = 0; f < choices.size(); ++f) {
                const std::vector<int> &part = choices[f][idx[f]];
                for (size_t i = 0; i < part.size(); ++i)
                    descending[i] *= big_pow(factors[f].first, part[i]);
            }
            std::vector<BigInt> chain(descending.rbegin(), descending.rend());
            out.emplace_back(0, std::move(chain));
            size_t bump = 0;
            while (bump < idx.size() && ++idx[bump] == choices[bump].size()) {
                idx[bump] = 0;
                ++bump;
            }
            if (bump == idx.size()) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const FgAbGroup &a, const FgAbGroup &b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a < b;
    });
    return out;
}

std::vector<FgAbGroup> solve_torsion_constraints(
    const std::vector<TorsionConstraint> &constraints) {
    if (constraints.empty())
        throw std::invalid_argument("empty constraint list: the search would be unbounded");
    std::optional<BigInt> bound;
    for (const TorsionConstraint &c : constraints)
        if (const auto *b = std::get_if<OrderAtMost>(&c))
            bound = bound ? std::min(*bound, b->bound) : b->bound;
    if (!bound)
        throw std::invalid_argument("an OrderAtMost constraint is required (unbounded search)");

    std::vector<FgAbGroup> hits;
    for (const FgAbGroup &g : enumerate_finite_abelian_groups(*bound)) {
        bool ok = true;
        for (const TorsionConstraint &c : constraints) {
            if (const auto *e = std::get_if<EmbedsIn>(&c)) {
                // a finite abelian group embeds in Z/a iff it is cyclic of
                // order dividing a
                if (!(g.is_cyclic() && e->modulus % g.order() == 0)) ok = false;
            } else if (const auto *t = std::get_if<TensorIsomorphic>(&c)) {
                if (!(tensor_cyclic(g, t->n) == t->group)) ok = false;
            } else if (const auto *b = std::get_if<OrderAtMost>(&c)) {
                if (g.order() > b->bound) ok = false;
            }
            if (!ok) break;
        }
        if (ok) hits.push_back(g);
    }
    return hits;
}

}  // namespace lookalike
