#pragma once

#include <string>
#include <vector>

#include "symchow/poly.hpp"
#include "symchow/rootsystem.hpp"

namespace symchow {

/// First Chern class of the line bundle associated to a character chi.
/// The associated-bundle functor carries a dualisation, so the class of
/// the weight chi is the linear polynomial -chi. With this normalisation
/// the fundamental class of a point integrates to +1 and top Chern
/// classes of tangent bundles integrate to the Euler characteristic.
Poly class_of_weight(const Weight& w);

/// Homogeneous vector bundle on a flag variety, recorded by its T-weights
/// (the weights of the defining parabolic representation). Rank equals
/// the number of weights.
struct HomogeneousBundle {
    int g;
    std::string name;
    std::vector<Weight> weights;

    int rank() const { return static_cast<int>(weights.size()); }
};

/// Tangent bundle of L_grp / (L_grp cap P_par): weights Phi_grp+ \ Phi_par+.
HomogeneousBundle tangent_bundle(int g, const ParabolicSubset& grp, const ParabolicSubset& par);
/// Tangent bundle of G/P_I.
HomogeneousBundle tangent_bundle(int g, const ParabolicSubset& I);

/// Normal bundle of the standard sub flag variety, weights
/// Phi+ \ (Phi_I+ u Phi_J+).
HomogeneousBundle normal_bundle(int g, const ParabolicSubset& I, const ParabolicSubset& J);

/// The bundle with weights {e_1..e_g} (dual-standard subrepresentation).
HomogeneousBundle hodge_bundle(int g);

/// k-th Chern class: elementary symmetric polynomial of degree k in the
/// classes of the bundle weights. chern_class(B, 0) = 1.
Poly chern_class(const HomogeneousBundle& B, int k);

/// All Chern classes c_0..c_rank as coefficients of the Chern polynomial.
std::vector<Poly> chern_polynomial(const HomogeneousBundle& B);

/// Whitney consistency for the standard embedding: the Chern polynomial
/// of the restricted ambient tangent bundle equals the product of those
/// of the normal bundle and the Levi tangent bundle, as an exact
/// identity in S[t].
bool whitney_check(int g, const ParabolicSubset& I, const ParabolicSubset& J);

} // namespace symchow
