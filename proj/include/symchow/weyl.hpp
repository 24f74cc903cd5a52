#pragma once

#include <memory>
#include <vector>

#include "symchow/poly.hpp"
#include "symchow/rootsystem.hpp"

namespace symchow {

/// Element of W = S_g x {+-1}^g acting on X*(T) by
///   w(e_i) = sign[i] * e_{perm[i]}   (0-based internally).
/// Equivalent to the permutations sigma of {1..2g} with
/// sigma(i) + sigma(2g+1-i) = 2g+1; the conversion is provided for tests.
class SignedPermutation {
public:
    explicit SignedPermutation(int g); ///< identity
    SignedPermutation(std::vector<int> perm, std::vector<int> sign);

    int rank() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& sign() const { return sign_; }

    bool is_identity() const;
    /// Composition, this after o: (a*b).act(x) = a.act(b.act(x)).
    SignedPermutation operator*(const SignedPermutation& o) const;
    SignedPermutation inverse() const;

    Weight act(const Weight& v) const;
    Poly act(const Poly& f) const;

    /// Determinant of the signed permutation matrix.
    int det() const;

    /// Coxeter length: number of positive roots sent to negative roots.
    int length() const;

    /// The element as a permutation of {1..2g} in the convention
    /// sigma(i) + sigma(2g+1-i) = 2g+1.
    std::vector<int> as_2g_permutation() const;

    /// Canonical key for ordering and hashing.
    std::vector<int> key() const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.perm_ == b.perm_ && a.sign_ == b.sign_;
    }
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        return a.key() < b.key();
    }

    std::string str() const; ///< "(perm | signs)" tuple form

private:
    std::vector<int> perm_;
    std::vector<int> sign_;
};

/// s_{e_k - e_{k+1}} for k < g, s_{2e_g} for k = g (1-based index into Delta).
SignedPermutation simple_reflection(int g, int k);

/// A parabolic subgroup W_K enumerated by breadth-first closure of its
/// simple reflections. Elements are ordered by word length, then by the
/// canonical element key; one reduced word per element is retained.
struct WeylSubgroup {
    int g;
    ParabolicSubset K;
    std::vector<SignedPermutation> elements;
    std::vector<std::vector<int>> words; ///< reduced word per element, aligned

    long order() const { return static_cast<long>(elements.size()); }
};

/// Enumeration result is cached per (g, K); population is idempotent and
/// guarded by a mutex, so shared use across threads is safe.
std::shared_ptr<const WeylSubgroup> enumerate_weyl(int g, const ParabolicSubset& K);

/// True iff f is fixed by every generator of W_K (hence by all of W_K).
bool is_invariant(const Poly& f, const ParabolicSubset& K);

/// Demazure divided difference for the k-th simple root:
///   d_k(f) = (f - s_k f) / alpha_k.
/// The division is exact by construction; a nonzero remainder throws
/// std::logic_error (implementation tripwire, not a user error).
Poly divided_difference(int g, int k, const Poly& f);

/// Longest element of W_K; acts as -1 on type C components and as the
/// order reversal on type A components.
SignedPermutation longest_element(int g, const ParabolicSubset& K);

/// A reduced word k_1..k_m with w = s_{k_1} * s_{k_2} * ... * s_{k_m}.
std::vector<int> reduced_word(const SignedPermutation& w, const ParabolicSubset& K);

/// Applies the divided-difference word right to left (closed-form fast
/// path, no polynomial division). Equals folding divided_difference.
Poly divided_difference_word(int g, const std::vector<int>& word, Poly f);

} // namespace symchow
