#include "csf/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <vector>

namespace csf {

namespace {

const char* basis_name(Basis b) { return b == Basis::elementary ? "e" : "p"; }

void require_same_basis(const SymFunc& a, const SymFunc& b, const char* op) {
    if (a.basis() != b.basis())
        throw std::invalid_argument(std::string(op) + ": mixing " + basis_name(a.basis()) +
                                    "- and " + basis_name(b.basis()) + "-basis functions");
}

}  // namespace

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
}

SymFunc SymFunc::one(Basis basis) {
    SymFunc f(basis, 0);
    f.add_term(Partition{}, 1);
    return f;
}

SymFunc SymFunc::unit(Basis basis, const Partition& lambda) {
    SymFunc f(basis, lambda.size());
    f.add_term(lambda, 1);
    return f;
}

SymFunc SymFunc::e(int n) {
    if (n < 0) throw std::invalid_argument("SymFunc::e: negative index");
    return n == 0 ? one(Basis::elementary) : unit(Basis::elementary, Partition{n});
}

SymFunc SymFunc::p(int n) {
    if (n < 1) throw std::invalid_argument("SymFunc::p: index must be >= 1");
    return unit(Basis::power_sum, Partition{n});
}

Rational SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
    if (lambda.size() != degree_)
        throw std::invalid_argument("SymFunc: partition " + lambda.to_string() +
                                    " does not match degree " + std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    require_same_basis(*this, o, "add");
    if (degree_ != o.degree_)
        throw std::invalid_argument("add: degrees differ (" + std::to_string(degree_) + " vs " +
                                    std::to_string(o.degree_) + ")");
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    require_same_basis(*this, o, "subtract");
    if (degree_ != o.degree_)
        throw std::invalid_argument("subtract: degrees differ");
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    require_same_basis(a, b, "multiply");
    SymFunc out(a.basis_, a.degree_ + b.degree_);
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_) out.add_term(la.merged(lb), ca * cb);
    return out;
}

SymFunc SymFunc::scale(const Rational& c) const {
    SymFunc out(basis_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [lambda, v] : terms_) out.terms_.emplace(lambda, v * c);
    return out;
}

bool SymFunc::is_integral() const {
    for (const auto& [lambda, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

void SymFunc::assert_integral(const std::string& context) const {
    for (const auto& [lambda, c] : terms_)
        if (!c.is_integer())
            throw std::logic_error(context + ": non-integral coefficient " + c.to_string() +
                                   " at " + lambda.to_string());
}

std::vector<std::pair<Partition, Rational>> SymFunc::terms_display_order() const {
    std::vector<std::pair<Partition, Rational>> out(terms_.rbegin(), terms_.rend());
    return out;
}

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lambda, c] : terms_display_order()) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*" + basis_name(basis_) + lambda.to_string();
    }
    return s;
}

namespace {

// e-basis expansions of p_1..p_k, memoized. Entries are heap-allocated and
// immutable once built, so the returned reference stays valid after the lock
// is dropped even while other threads extend the cache.
const SymFunc& power_in_elementary(int k) {
    static std::mutex mu;
    static std::vector<std::unique_ptr<const SymFunc>> cache;
    std::scoped_lock lock(mu);
    while (static_cast<int>(cache.size()) < k) {
        int m = static_cast<int>(cache.size()) + 1;
        SymFunc pm = SymFunc::e(m).scale(Rational((m % 2 == 1) ? m : -m));
        for (int i = 1; i <= m - 1; ++i) {
            int sign = ((m - 1 - i) % 2 == 0) ? 1 : -1;
            pm += (SymFunc::e(m - i) * (*cache[i - 1])).scale(Rational(sign));
        }
        cache.push_back(std::make_unique<const SymFunc>(std::move(pm)));
    }
    return *cache[k - 1];
}

}  // namespace

SymFunc p_to_e(const SymFunc& f) {
    if (f.basis() != Basis::power_sum)
        throw std::invalid_argument("p_to_e: input must be in the power-sum basis");
    SymFunc out(Basis::elementary, f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        SymFunc prod = SymFunc::one(Basis::elementary);
        for (int part : lambda.parts()) prod = prod * power_in_elementary(part);
        out += prod.scale(c);
    }
    return out;
}

Rational principal_eval(const SymFunc& f, int k) {
    if (k < 0) throw std::invalid_argument("principal_eval: negative variable count");
    Rational total(0);
    for (const auto& [lambda, c] : f.terms()) {
        Rational prod = c;
        for (int part : lambda.parts()) {
            if (f.basis() == Basis::elementary)
                prod *= Rational(binomial(k, part));
            else
                prod *= Rational(k);
            if (prod.is_zero()) break;
        }
        total += prod;
    }
    return total;
}

PositivityWitness is_e_positive(const SymFunc& f) {
    if (f.basis() != Basis::elementary)
        throw std::invalid_argument("is_e_positive: input must be in the elementary basis");
    for (const auto& [lambda, c] : f.terms_display_order()) {
        if (c.is_negative()) return PositivityWitness{false, lambda, c};
    }
    return PositivityWitness{};
}

CompositionExpansion::CompositionExpansion(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("CompositionExpansion: negative degree");
}

Rational CompositionExpansion::coeff(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CompositionExpansion::add_term(const Composition& I, const Rational& c) {
    if (I.size() != degree_)
        throw std::invalid_argument("CompositionExpansion: composition " + I.to_string() +
                                    " does not match degree " + std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(I, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CompositionExpansion& CompositionExpansion::operator+=(const CompositionExpansion& o) {
    if (degree_ != o.degree_)
        throw std::invalid_argument("CompositionExpansion: degrees differ");
    for (const auto& [I, c] : o.terms_) add_term(I, c);
    return *this;
}

CompositionExpansion CompositionExpansion::scale(const Rational& c) const {
    CompositionExpansion out(degree_);
    if (c.is_zero()) return out;
    for (const auto& [I, v] : terms_) out.terms_.emplace(I, v * c);
    return out;
}

SymFunc CompositionExpansion::flatten() const {
    SymFunc out(Basis::elementary, degree_);
    for (const auto& [I, c] : terms_) out.add_term(rho(I), c);
    return out;
}

bool CompositionExpansion::is_positive(Composition* offending, Rational* coeff) const {
    for (const auto& [I, c] : terms_) {
        if (c.is_negative()) {
            if (offending) *offending = I;
            if (coeff) *coeff = c;
            return false;
        }
    }
    return true;
}

std::string CompositionExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [I, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*e" + I.to_string();
    }
    return s;
}

}  // namespace csf
