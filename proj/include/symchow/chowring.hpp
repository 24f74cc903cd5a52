#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symchow/poly.hpp"
#include "symchow/rootsystem.hpp"

namespace symchow {

/// Reduced row echelon basis of a subspace of polynomials, pivoted on
/// leading monomials in graded-lex order. Rows are monic and mutually
/// reduced, so reduce() is a canonical linear projection along the span.
class PolySpan {
public:
    /// Fully reduces f modulo the span: the result contains no pivot
    /// monomial. Canonical, linear, idempotent.
    Poly reduce(Poly f) const;

    /// Inserts f if independent of the span; returns true if it enlarged
    /// the span. Keeps the basis in reduced echelon form.
    bool insert(Poly f);

    bool contains(const Poly& f) const { return reduce(f).is_zero(); }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::map<Monomial, Poly, GradedLexGreater>& rows() const { return rows_; }

private:
    std::map<Monomial, Poly, GradedLexGreater> rows_;
};

/// Named fundamental invariant of a parabolic Weyl subgroup.
struct GenInfo {
    std::string name;
    Poly poly;
    int degree;
};

/// Polynomial generators of S^{W_K}. The Dynkin components of K split
/// the coordinates into blocks: a type A block on e_i..e_j contributes
/// sigma_1..sigma_{j-i+1} in those variables, a type C block on e_i..e_g
/// contributes sigma_1..sigma_{g-i+1} in their squares, and untouched
/// coordinates contribute the variables themselves.
std::vector<GenInfo> invariant_generators(int g, const ParabolicSubset& K);

/// Exponent vectors a with sum a_i * deg_i = d, in descending lex order.
std::vector<std::vector<int>> weighted_monomials(const std::vector<int>& degrees, int d);

class FlagPresentation;
using PresentationPtr = std::shared_ptr<const FlagPresentation>;

/// A class in a presented Chow ring: a presentation handle plus the
/// canonical reduced polynomial representative.
struct ChowClass {
    PresentationPtr pres;
    Poly rep;

    bool is_zero() const { return rep.is_zero(); }
    int degree() const { return rep.degree(); }

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.pres.get() == b.pres.get() && a.rep == b.rep;
    }
};

/// The presented graded ring S^{W_par} / (S_+^{W_grp}) for a pair
/// par subset grp of simple-root subsets: the Chow ring of the flag
/// variety L_grp / (L_grp intersect P_par).
///
/// Normal forms are computed degree by degree: the degree-d slice of the
/// relation ideal is spanned by {mu * rho} over invariant monomials mu
/// and ideal generators rho, echelonized over Q; reduction modulo that
/// echelon is the canonical representative. Degree slices are built
/// lazily and cached; all queries after construction are const.
class FlagPresentation : public std::enable_shared_from_this<FlagPresentation> {
public:
    static PresentationPtr build(int g, const ParabolicSubset& grp, const ParabolicSubset& par);

    int g() const { return g_; }
    const ParabolicSubset& group_subset() const { return grp_; }
    const ParabolicSubset& parabolic_subset() const { return par_; }

    /// Dimension of the flag variety = |Phi_grp+| - |Phi_par+|; also the
    /// top nonzero degree of the quotient.
    int dimension() const { return dim_; }
    /// Total dimension over all degrees, |W_grp| / |W_par|.
    long total_dimension() const;

    const std::vector<GenInfo>& invariant_gens() const { return invariant_gens_; }
    const std::vector<GenInfo>& ideal_gens() const { return ideal_gens_; }

    /// Canonical representative of the class of f. Requires f invariant
    /// under W_par (checked). Idempotent and linear; f lies in the
    /// relation ideal iff the result is zero.
    ChowClass normal_form(const Poly& f) const;

    int graded_dimension(int d) const;

    /// Basis monomials (exponent vectors over invariant_gens) and their
    /// reduced representatives in degree d.
    const std::vector<std::vector<int>>& basis_monomials(int d) const;
    const std::vector<Poly>& basis_reps(int d) const;

    /// Coordinates of a reduced representative in the degree-d basis.
    std::vector<Rational> coordinates(int d, const Poly& reduced) const;

    /// Degree-d slice of the relation ideal as an echelon span.
    const PolySpan& ideal_slice(int d) const;

private:
    FlagPresentation(int g, ParabolicSubset grp, ParabolicSubset par);

    struct DegreeBasis {
        PolySpan ideal;
        std::vector<std::vector<int>> monos;
        std::vector<Poly> reps;
        PolySpan repspan; ///< echelon of reps, for independence tests
    };

    const DegreeBasis& degree_basis(int d) const;

    int g_;
    ParabolicSubset grp_, par_;
    int dim_;
    std::vector<GenInfo> invariant_gens_;
    std::vector<GenInfo> ideal_gens_;

    mutable std::mutex mu_;
    mutable std::map<int, DegreeBasis> degrees_;
};

/// Presentations are expensive; building is memoized per (g, grp, par).
PresentationPtr presentation_cache(int g, const ParabolicSubset& grp, const ParabolicSubset& par);

/// Re-reduces the representative of x in the finer quotient sub. This is
/// the pullback along the inclusion of the standard sub flag variety; it
/// is a ring homomorphism. Requires sub.par subset amb.par and
/// sub.grp superset view compatible (checked).
ChowClass pullback_iota(const PresentationPtr& amb, const PresentationPtr& sub, const ChowClass& x);

/// Detail row of the degreewise kernel comparison.
struct KernelDegreeReport {
    int degree;
    int dim_amb;
    int dim_sub;
    int rank;        ///< rank of the pullback in this degree
    int kernel_dim;  ///< dim ker(pullback)
    int ideal_dim;   ///< dim of the degree slice of (lambda_g)
    bool surjective;
    bool kernel_matches_ideal;
};

/// Checks, degree by degree up to max_degree, that the kernel of the
/// pullback equals the ideal generated by lambda_g = sigma_g(e_1..e_g),
/// and that the pullback is surjective.
bool kernel_generator_check(const PresentationPtr& amb, const PresentationPtr& sub, int max_degree,
                            std::vector<KernelDegreeReport>* details = nullptr);

/// Exact identity (Lemma on symmetric polynomials):
///   (-1)^l sigma_l(x_1^2..x_g^2) = sum_{i+j=2l} (-1)^j sigma_i sigma_j
/// for 1 <= l < g.
bool verify_symmetric_identity(int g, int l);

/// Degree-k homogeneous component of the master relation
/// (1 + c_1 + ... + c_g)(1 - c_1 + ... + (-1)^g c_g) - 1 where
/// c_i = sigma_i over the given variables. Used to cross-check the
/// relation ideal against its sigma_l-of-squares generators.
Poly master_relation_component(int nvars, const std::set<int>& vars, int k);

} // namespace symchow
