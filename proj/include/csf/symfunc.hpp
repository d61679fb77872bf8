#pragma once

#include <map>
#include <optional>
#include <string>

#include "csf/composition.hpp"
#include "csf/rational.hpp"

namespace csf {

enum class Basis { elementary, power_sum };

/// A homogeneous symmetric function stored as a sparse coefficient map keyed
/// by partition, in either the elementary or the power-sum basis. Zero
/// coefficients are never stored. Immutable value semantics; all operations
/// return new values or mutate only the receiver.
class SymFunc {
public:
    SymFunc(Basis basis, int degree);

    /// The constant 1 (degree 0, coefficient 1 on the empty partition).
    static SymFunc one(Basis basis);
    /// Basis unit for a single partition: e_lambda or p_lambda.
    static SymFunc unit(Basis basis, const Partition& lambda);
    /// e_n; e_0 is the constant 1.
    static SymFunc e(int n);
    /// p_n for n >= 1.
    static SymFunc p(int n);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& lambda) const;

    /// Adds c * basis_element(lambda); lambda must partition the degree.
    void add_term(const Partition& lambda, const Rational& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    /// Bilinear product; basis elements multiply by partition multiset union.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const Rational& c, SymFunc f) { return f.scale(c); }
    SymFunc scale(const Rational& c) const;

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    /// True when every coefficient is an integer.
    bool is_integral() const;
    /// Throws unless every coefficient is an integer.
    void assert_integral(const std::string& context) const;

    /// Terms in display order (partitions lexicographically decreasing).
    std::vector<std::pair<Partition, Rational>> terms_display_order() const;
    std::string to_string() const;

private:
    Basis basis_;
    int degree_;
    std::map<Partition, Rational> terms_;
};

/// Rewrites a power-sum basis function in the elementary basis via the
/// Newton recurrence p_k = (-1)^(k-1) k e_k + sum_i (-1)^(k-1-i) e_(k-i) p_i.
SymFunc p_to_e(const SymFunc& f);

/// Principal specialization x_1 = ... = x_k = 1, rest 0:
/// e_n -> binomial(k, n), p_n -> k, extended multiplicatively and linearly.
Rational principal_eval(const SymFunc& f, int k);

struct PositivityWitness {
    bool positive = true;
    Partition partition;  // set when positive == false
    Rational coefficient;
};

/// Checks all coefficients >= 0 for an elementary-basis function. On failure
/// the witness is the first offending partition in display order.
PositivityWitness is_e_positive(const SymFunc& f);

/// A symmetric function presented as exact coefficients on compositions;
/// the composition term c_I stands for c_I * e_(rho(I)). Such presentations
/// are not unique, so equality of the underlying functions is tested on the
/// flattened form.
class CompositionExpansion {
public:
    explicit CompositionExpansion(int degree);

    int degree() const { return degree_; }
    const std::map<Composition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Composition& I) const;

    /// Adds c * e_I; |I| must equal the degree. Zero results are dropped.
    void add_term(const Composition& I, const Rational& c);

    CompositionExpansion& operator+=(const CompositionExpansion& o);
    CompositionExpansion scale(const Rational& c) const;

    /// Groups terms by rho(I) and sums coefficients into an elementary-basis
    /// symmetric function.
    SymFunc flatten() const;

    /// True when every stored coefficient is >= 0; otherwise reports the
    /// first offending composition in key order.
    bool is_positive(Composition* offending = nullptr, Rational* coeff = nullptr) const;

    std::string to_string() const;

private:
    int degree_;
    std::map<Composition, Rational> terms_;
};

}  // namespace csf
