#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "symchow/rational.hpp"

namespace symchow {

/// Exponent vector of a monomial in e_1..e_g. The ambient variable count
/// is the vector length; total degree is the sum of entries.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(int nvars) : exp(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const;
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded lexicographic order, total degree first, then lex with e_1
/// most significant. Used everywhere a term order is needed so that
/// equality, reduction pivots and serialization are deterministic.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q in e_1..e_g. Terms are kept in
/// descending graded-lex order and zero coefficients are never stored,
/// so two polynomials are equal iff their term maps are equal.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index1); ///< e_{index1}, 1-based
    static Poly monomial(Monomial m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Sum of the terms of total degree exactly d.
    Poly homogeneous_component(int d) const;
    /// Ascending list of degrees that occur.
    std::vector<int> degrees() const;

    Rational coeff(const Monomial& m) const;
    const TermMap& terms() const { return terms_; }
    /// Leading term in graded-lex order; throws on the zero polynomial.
    const std::pair<const Monomial, Rational>& leading() const;

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Rational& c) const;
    Poly operator/(const Rational& c) const { return *this * (Rational(1) / c); }

    /// this -= c * o, in place.
    void sub_scaled(const Poly& o, const Rational& c);

    Poly pow(int k) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Evaluate at a rational point (for cross-checks).
    Rational eval(const std::vector<Rational>& point) const;

    /// Canonical text form, round-trips through parse().
    std::string str() const;
    static Poly parse(int nvars, const std::string& s);

private:
    int nvars_;
    TermMap terms_;

    void check_same_ring(const Poly& o) const;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// k-th elementary symmetric polynomial in the variables e_i, i in vars
/// (1-based indices into an ambient ring with nvars variables). sigma_0 = 1.
Poly elementary_symmetric(int nvars, int k, const std::set<int>& vars);

/// sigma_k(e_1..e_g) in the full variable set.
Poly elementary_symmetric(int g, int k);

/// Exact division: returns q with f = q * divisor, throws std::logic_error
/// if the division leaves a remainder.
Poly divide_exact(const Poly& f, const Poly& divisor);

} // namespace symchow
