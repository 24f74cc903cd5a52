#pragma once

#include <string>
#include <vector>

#include "symchow/poly.hpp"

namespace symchow {

/// Element of the character lattice X*(T) = Z^g, written in the basis
/// e_1..e_g. Roots and bundle weights are Weights.
struct Weight {
    std::vector<long> coord;

    Weight() = default;
    explicit Weight(int g) : coord(g, 0) {}
    explicit Weight(std::vector<long> c) : coord(std::move(c)) {}

    int rank() const { return static_cast<int>(coord.size()); }
    bool is_zero() const;

    Weight operator-() const;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;

    /// The weight as a linear polynomial in e_1..e_g.
    Poly to_poly() const;

    /// Human form: "e1-e2", "2e3", "e1+e2".
    std::string str() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.coord == b.coord; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coord < b.coord; }
};

/// e_i - e_j, e_i + e_j, 2e_i constructors (1-based indices).
Weight weight_ei(int g, int i);
Weight root_diff(int g, int i, int j);  ///< e_i - e_j
Weight root_sum(int g, int i, int j);   ///< e_i + e_j
Weight root_double(int g, int i);       ///< 2e_i

/// Subset of the simple-root index set {1..g}. Index k < g names
/// e_k - e_{k+1}; index g names 2e_g.
class ParabolicSubset {
public:
    ParabolicSubset(int g, std::vector<int> indices);

    static ParabolicSubset empty(int g) { return {g, {}}; }
    static ParabolicSubset full(int g);
    /// I = Delta minus {2e_g}; empty for g = 1.
    static ParabolicSubset siegel_I(int g);
    /// J = Delta minus {e_1-e_2}; undefined for g = 1.
    static ParabolicSubset klingen_J(int g);

    int rank() const { return g_; }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int k) const;
    bool subset_of(const ParabolicSubset& o) const;
    ParabolicSubset intersect(const ParabolicSubset& o) const;
    unsigned long mask() const; ///< bitmask key for caching

    /// Order of the Weyl subgroup W_K (product over Dynkin components).
    long weyl_order() const;

    friend bool operator==(const ParabolicSubset& a, const ParabolicSubset& b) {
        return a.g_ == b.g_ && a.indices_ == b.indices_;
    }

private:
    int g_;
    std::vector<int> indices_; // sorted, unique, within 1..g
};

/// The C_g simple roots {e_1-e_2, ..., e_{g-1}-e_g, 2e_g} in this order.
std::vector<Weight> simple_roots(int g);

/// All positive roots {e_i-e_j : i<j} u {e_i+e_j : i<j} u {2e_i};
/// cardinality g^2. Deterministic order.
std::vector<Weight> positive_roots(int g);

/// Positive roots lying in the span of the simple roots indexed by K.
std::vector<Weight> parabolic_positive_roots(int g, const ParabolicSubset& K);

/// Phi+ minus (Phi_I+ u Phi_J+), the weights of the normal bundle of the
/// standard sub flag variety. For the Siegel pair this is
/// {2e_1} u {e_1+e_i : 2<=i<=g}, of cardinality g.
std::vector<Weight> normal_bundle_roots(int g, const ParabolicSubset& I, const ParabolicSubset& J);

/// Coordinates of w in the simple-root basis, if w lies in the root
/// lattice spanned that way; used for the parabolic membership test.
bool in_simple_span(const Weight& w, const ParabolicSubset& K, std::vector<Rational>* coords = nullptr);

} // namespace symchow
