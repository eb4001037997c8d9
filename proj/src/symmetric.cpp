#include "lookalike/symmetric.hpp"

#include <numeric>
#include <stdexcept>

namespace lookalike {

SymmetricExpansion::SymmetricExpansion(int variables, int max_total_degree)
    : variables_(variables), max_total_degree_(max_total_degree) {
    if (variables < 1) throw std::invalid_argument("need at least one variable");
}

namespace {
int degree_of(const SymmetricExpansion::Exponents &e) {
    return std::accumulate(e.begin(), e.end(), 0);
}
}  // namespace

void SymmetricExpansion::add_term(const Exponents &e, const Rational &c) {
    if (static_cast<int>(e.size()) != variables_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    if (max_total_degree_ >= 0 && degree_of(e) > max_total_degree_) return;
    Rational &slot = terms_[e];
    slot += c;
    if (slot.is_zero()) terms_.erase(e);
}

Rational SymmetricExpansion::coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

SymmetricExpansion operator+(const SymmetricExpansion &a, const SymmetricExpansion &b) {
    if (a.variables_ != b.variables_) throw std::invalid_argument("variable count mismatch");
    SymmetricExpansion out = a;
    for (const auto &[e, c] : b.terms_) out.add_term(e, c);
    return out;
}

SymmetricExpansion operator-(const SymmetricExpansion &a, const SymmetricExpansion &b) {
    if (a.variables_ != b.variables_) throw std::invalid_argument("variable count mismatch");
    SymmetricExpansion out = a;
    for (const auto &[e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

SymmetricExpansion operator*(const SymmetricExpansion &a, const SymmetricExpansion &b) {
    if (a.variables_ != b.variables_) throw std::invalid_argument("variable count mismatch");
    int bound = a.max_total_degree_;
    if (bound < 0 || (b.max_total_degree_ >= 0 && b.max_total_degree_ < bound))
        bound = b.max_total_degree_;
    SymmetricExpansion out(a.variables_, bound);
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_) {
            SymmetricExpansion::Exponents e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool operator==(const SymmetricExpansion &a, const SymmetricExpansion &b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

bool SymmetricExpansion::is_symmetric() const {
    for (int i = 0; i + 1 < variables_; ++i) {
        for (const auto &[e, c] : terms_) {
            Exponents swapped(e);
            std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i) + 1]);
            if (coefficient(swapped) != c) return false;
        }
    }
    return true;
}

SymmetricExpansion SymmetricExpansion::homogeneous_part(int degree) const {
    SymmetricExpansion out(variables_, max_total_degree_);
    for (const auto &[e, c] : terms_)
        if (degree_of(e) == degree) out.add_term(e, c);
    return out;
}

int SymmetricExpansion::total_degree() const {
    int d = 0;
    for (const auto &[e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

SymmetricExpansion SymmetricExpansion::elementary(int variables, int k) {
    SymmetricExpansion out(variables);
    if (k < 0 || k > variables) return out;
    if (k == 0) {
        out.add_term(Exponents(static_cast<size_t>(variables), 0), Rational(1));
        return out;
    }
    // walk all k-subsets of {0..variables-1}
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Exponents mono(static_cast<size_t>(variables), 0);
        for (int i : pick) mono[static_cast<size_t>(i)] = 1;
        out.add_term(mono, Rational(1));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == variables - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

GradedPoly elementary_symmetric_decompose(const SymmetricExpansion &expansion) {
    if (!expansion.is_symmetric())
        throw std::domain_error("symmetry violation: input is not a symmetric polynomial");

    const int n = expansion.variables();
    SymmetricExpansion rest = expansion;
    std::map<std::vector<int>, Rational> sigma_terms;  // exponents of sigma_1..sigma_n

    while (!rest.is_zero()) {
        // lex-leading monomial; for symmetric input its exponents descend
        const auto &lead = *rest.terms().rbegin();
        const auto &a = lead.first;
        Rational c = lead.second;
        std::vector<int> sigma_exp(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            int next = (i + 1 < n) ? a[static_cast<size_t>(i) + 1] : 0;
            int diff = a[static_cast<size_t>(i)] - next;
            if (diff < 0)
                throw std::domain_error("symmetry violation: leading exponents not descending");
            sigma_exp[static_cast<size_t>(i)] = diff;
        }
        SymmetricExpansion product(n);
        product.add_term(SymmetricExpansion::Exponents(static_cast<size_t>(n), 0), c);
        for (int i = 0; i < n; ++i)
            for (int rep = 0; rep < sigma_exp[static_cast<size_t>(i)]; ++rep)
                product = product * SymmetricExpansion::elementary(n, i + 1);
        rest = rest - product;
        sigma_terms[sigma_exp] += c;
    }

    // sigma_j -> p_{4j}; the common weight is the (homogeneous) input degree.
    int weight = -1;
    std::map<PontrjaginMonomial, Rational> poly_terms;
    for (const auto &[se, c] : sigma_terms) {
        if (c.is_zero()) continue;
        PontrjaginMonomial mono;
        int w = 0;
        for (int j = 0; j < n; ++j) {
            if (se[static_cast<size_t>(j)] == 0) continue;
            mono[4 * (j + 1)] = se[static_cast<size_t>(j)];
            w += (j + 1) * se[static_cast<size_t>(j)];
        }
        if (weight < 0) weight = w;
        if (w != weight)
            throw std::domain_error("decomposition needs a homogeneous symmetric polynomial");
        poly_terms[mono] += c;
    }
    if (weight < 0) weight = 0;
    return GradedPoly(weight, std::move(poly_terms));
}

}  // namespace lookalike
