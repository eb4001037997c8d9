#include "lookalike/graded_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lookalike {

GradedPoly::GradedPoly(int weight) : weight_(weight) {
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
}

GradedPoly::GradedPoly(int weight, std::map<PontrjaginMonomial, Rational> terms)
    : GradedPoly(weight) {
    for (auto &[mono, coeff] : terms) add_term(mono, coeff);
}

int GradedPoly::monomial_weight(const PontrjaginMonomial &m) {
    int w = 0;
    for (const auto &[degree, exp] : m) {
        if (degree <= 0 || degree % 4 != 0)
            throw std::invalid_argument("Pontrjagin symbols have degrees 4, 8, 12, ...");
        if (exp <= 0) throw std::invalid_argument("monomial exponents must be positive");
        w += (degree / 4) * exp;
    }
    return w;
}

Rational GradedPoly::coefficient(const PontrjaginMonomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

GradedPoly &GradedPoly::add_term(const PontrjaginMonomial &m, const Rational &c) {
    if (c.is_zero()) return *this;
    if (monomial_weight(m) != weight_)
        throw std::invalid_argument("monomial weight does not match the polynomial weight");
    Rational &slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
    return *this;
}

GradedPoly operator+(const GradedPoly &a, const GradedPoly &b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("cannot add polynomials of different weights");
    GradedPoly out = a;
    for (const auto &[mono, coeff] : b.terms()) out.add_term(mono, coeff);
    return out;
}

GradedPoly operator*(const Rational &c, const GradedPoly &p) {
    GradedPoly out(p.weight());
    if (c.is_zero()) return out;
    for (const auto &[mono, coeff] : p.terms()) out.add_term(mono, c * coeff);
    return out;
}

bool operator==(const GradedPoly &a, const GradedPoly &b) {
    return a.weight_ == b.weight_ && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::zero_out(const std::vector<int> &degrees) const {
    GradedPoly out(weight_);
    for (const auto &[mono, coeff] : terms_) {
        bool killed = false;
        for (int d : degrees)
            if (mono.count(d)) {
                killed = true;
                break;
            }
        if (!killed) out.add_term(mono, coeff);
    }
    return out;
}

Rational GradedPoly::evaluate(const PontrjaginAssignment &assignment) const {
    Rational total(0);
    for (const auto &[mono, coeff] : terms_) {
        Rational value = coeff;
        for (const auto &[degree, exp] : mono) {
            auto it = assignment.find(degree);
            if (it == assignment.end())
                throw std::out_of_range("unbound symbol p" + std::to_string(degree));
            for (int i = 0; i < exp; ++i) value *= it->second;
        }
        total += value;
    }
    return total;
}

namespace {

// Heavier symbols dominate: compare exponents from the largest degree down.
bool monomial_before(const PontrjaginMonomial &a, const PontrjaginMonomial &b) {
    int top = 0;
    if (!a.empty()) top = std::max(top, a.rbegin()->first);
    if (!b.empty()) top = std::max(top, b.rbegin()->first);
    for (int d = top; d >= 4; d -= 4) {
        auto ea = a.count(d) ? a.at(d) : 0;
        auto eb = b.count(d) ? b.at(d) : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

std::string render_monomial(const PontrjaginMonomial &m) {
    std::string out;
    for (const auto &[degree, exp] : m) {
        if (!out.empty()) out += "*";
        out += "p" + std::to_string(degree);
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const PontrjaginMonomial, Rational> *> order;
    order.reserve(terms_.size());
    for (const auto &term : terms_) order.push_back(&term);
    std::sort(order.begin(), order.end(),
              [](const auto *x, const auto *y) { return monomial_before(x->first, y->first); });
    std::string out;
    for (const auto *term : order) {
        if (!out.empty()) out += " + ";
        out += "(" + term->second.str() + ")";
        if (!term->first.empty()) out += "*" + render_monomial(term->first);
    }
    return out;
}

}  // namespace lookalike
