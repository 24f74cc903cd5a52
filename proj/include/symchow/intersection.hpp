#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symchow/bundles.hpp"
#include "symchow/chowring.hpp"

namespace symchow {

/// Degree map of the presented flag variety, evaluated on a polynomial
/// representative. Computed by the lift rule
///   int_{L/P} f = (1/|W_par|) int_{L/B} ( f * prod_{alpha in Phi_par+} [alpha] )
/// with the full-flag integral realised by the divided-difference word of
/// the longest element, normalised so the class of a point integrates to
/// +1. Only the component of f in the variety's top degree contributes;
/// all other degrees integrate to 0. The value does not depend on the
/// representative chosen modulo the relation ideal.
Rational integrate(const FlagPresentation& P, const Poly& representative);
Rational integrate(const ChowClass& x);

/// The unique top-degree class with integral 1. Errors if the top graded
/// piece is not one-dimensional (that would be a presentation bug).
ChowClass point_class(const PresentationPtr& P);

/// Exact matrix of the Poincare pairing between degrees d and top - d.
struct PairingMatrix {
    PresentationPtr pres;
    int degree;
    std::vector<std::vector<Rational>> entries; ///< entries[i][j] = int b^d_i * b^{top-d}_j

    bool nonsingular() const;
};

PairingMatrix pairing_matrix(const PresentationPtr& P, int d);

/// Pushforward of 1 along the standard embedding, with the constant of
/// proportionality against lambda_g = sigma_g(e_1..e_g).
struct PushforwardResult {
    ChowClass cls;     ///< iota_*(1) in the ambient presentation
    Rational a;        ///< scalar with cls = a * lambda_g (when proportional)
    bool proportional; ///< true iff cls is exactly a multiple of lambda_g
};

/// Determines iota_*(1) as the unique solution of
///   int_amb( x * y ) = int_sub( iota^* y )
/// over a basis y of the complementary degree. Requires the Siegel-case
/// presentations amb = (Delta, I), sub = (J, I cap J) of the same rank.
PushforwardResult pushforward_unit(const PresentationPtr& amb, const PresentationPtr& sub);

/// iota^* iota_*(1) = c_g(N) = 0: checks that the pullback of the
/// computed pushforward vanishes and that the top Chern class of the
/// normal bundle reduces to zero in the sub presentation.
bool self_intersection_check(const PresentationPtr& amb, const PresentationPtr& sub);

struct TheoremReport {
    int g = 0;
    int dim_ambient = 0;
    int dim_sub = 0;
    std::vector<int> graded_dims; ///< ambient graded dimensions, degrees 0..dim
    std::string c_top_normal;     ///< c_g(N) before reduction
    bool c_top_vanishes = false;  ///< its normal form in the sub presentation is 0
    Rational a;                   ///< the exact constant with iota_*(1) = a * lambda_g
    bool proportional = false;
    bool sign_ok = false;         ///< (-1)^g a > 0
    bool passed = false;
    double wall_seconds = 0.0;
};

/// Runs the whole pipeline at rank g: presentations, the normal bundle's
/// top Chern class, the Poincare pairing and the pushforward, then checks
/// proportionality to lambda_g, a != 0 and the sign (-1)^g a > 0.
/// Requires g >= 2 (J is undefined at g = 1).
TheoremReport verify_theorem(int g);

} // namespace symchow
