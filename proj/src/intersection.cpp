#include "symchow/intersection.hpp"

#include <chrono>
#include <stdexcept>

#include "symchow/weyl.hpp"

namespace symchow {

namespace {

// Square exact solve; empty optional when the matrix is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
    int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) return std::nullopt;
        std::swap(m[col], m[pr]);
        std::swap(rhs[col], rhs[pr]);
        Rational inv = Rational(1) / m[col][col];
        for (int c = col; c < n; ++c) m[col][c] *= inv;
        rhs[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace

Rational integrate(const FlagPresentation& P, const Poly& representative) {
    int g = P.g();
    if (representative.nvars() != g)
        throw std::invalid_argument("integrate: representative has the wrong ambient rank");
    Poly top = representative.homogeneous_component(P.dimension());
    if (top.is_zero()) return Rational(0);

    Poly h = top;
    for (const Weight& alpha : parabolic_positive_roots(g, P.parabolic_subset()))
        h *= class_of_weight(alpha);

    const ParabolicSubset& grp = P.group_subset();
    int n_grp = static_cast<int>(parabolic_positive_roots(g, grp).size());
    auto word = reduced_word(longest_element(g, grp), grp);
    Poly val = divided_difference_word(g, word, h);
    if (val.is_zero()) return Rational(0);
    if (!val.leading().first.is_constant())
        throw std::logic_error("integrate: divided-difference word left a nonconstant value");
    Rational c = val.leading().second;
    if (n_grp % 2 != 0) c = -c;
    return c / Rational(P.parabolic_subset().weyl_order());
}

Rational integrate(const ChowClass& x) { return integrate(*x.pres, x.rep); }

ChowClass point_class(const PresentationPtr& P) {
    int top = P->dimension();
    if (P->graded_dimension(top) != 1)
        throw std::logic_error("point_class: top graded piece is not one-dimensional");
    Poly b = P->basis_reps(top)[0];
    Rational c = integrate(*P, b);
    if (c.is_zero()) throw std::logic_error("point_class: degenerate top pairing");
    return {P, b / c};
}

bool PairingMatrix::nonsingular() const {
    if (entries.empty()) return true;
    if (entries.size() != entries[0].size()) return false;
    std::vector<Rational> rhs(entries.size(), Rational(0));
    return solve_square(entries, rhs).has_value();
}

PairingMatrix pairing_matrix(const PresentationPtr& P, int d) {
    int top = P->dimension();
    if (d < 0 || d > top) throw std::invalid_argument("pairing_matrix: degree out of range");
    const auto& left = P->basis_reps(d);
    const auto& right = P->basis_reps(top - d);
    PairingMatrix M{P, d, {}};
    for (const Poly& bi : left) {
        std::vector<Rational> row;
        for (const Poly& bj : right) row.push_back(integrate(*P, bi * bj));
        M.entries.push_back(std::move(row));
    }
    return M;
}

namespace {

void require_siegel_pair(const PresentationPtr& amb, const PresentationPtr& sub) {
    int g = amb->g();
    if (sub->g() != g) throw std::invalid_argument("pushforward_unit: rank mismatch");
    if (g < 2)
        throw std::invalid_argument(
            "pushforward_unit: requires g >= 2 (J = Delta \\ {e_1-e_2} is undefined at g = 1)");
    auto I = ParabolicSubset::siegel_I(g);
    auto J = ParabolicSubset::klingen_J(g);
    if (!(amb->group_subset() == ParabolicSubset::full(g)) || !(amb->parabolic_subset() == I) ||
        !(sub->group_subset() == J) || !(sub->parabolic_subset() == I.intersect(J)))
        throw std::invalid_argument("pushforward_unit: expected the Siegel-case presentations");
}

} // namespace

PushforwardResult pushforward_unit(const PresentationPtr& amb, const PresentationPtr& sub) {
    require_siegel_pair(amb, sub);
    int g = amb->g();
    int codim = amb->dimension() - sub->dimension();

    const auto& xbasis = amb->basis_reps(codim);
    const auto& ybasis = amb->basis_reps(amb->dimension() - codim);
    if (xbasis.size() != ybasis.size())
        throw std::logic_error("pushforward_unit: complementary degrees have different dimensions");

    std::size_t n = xbasis.size();
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> rhs(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) M[j][i] = integrate(*amb, xbasis[i] * ybasis[j]);
        // iota^* y has the same polynomial representative; integrate is
        // representative independent.
        rhs[j] = integrate(*sub, ybasis[j]);
    }
    auto sol = solve_square(M, rhs);
    if (!sol) throw std::logic_error("pushforward_unit: Poincare pairing matrix is singular");

    Poly x(amb->g());
    for (std::size_t i = 0; i < n; ++i) x += xbasis[i] * (*sol)[i];

    Poly lam = amb->normal_form(elementary_symmetric(g, g)).rep;
    PushforwardResult out{ChowClass{amb, x}, Rational(0), false};
    if (lam.is_zero()) {
        out.proportional = x.is_zero();
        return out;
    }
    const auto& [lm, lc] = lam.leading();
    out.a = x.coeff(lm) / lc;
    out.proportional = (x == lam * out.a);
    return out;
}

bool self_intersection_check(const PresentationPtr& amb, const PresentationPtr& sub) {
    require_siegel_pair(amb, sub);
    int g = amb->g();
    PushforwardResult pf = pushforward_unit(amb, sub);
    ChowClass pulled = pullback_iota(amb, sub, pf.cls);
    Poly c_top = chern_class(
        normal_bundle(g, ParabolicSubset::siegel_I(g), ParabolicSubset::klingen_J(g)), g);
    ChowClass c_top_red = sub->normal_form(c_top);
    return pulled.is_zero() && c_top_red.is_zero();
}

TheoremReport verify_theorem(int g) {
    if (g < 2)
        throw std::invalid_argument(
            "verify_theorem: requires g >= 2; at g = 1 the subset J = Delta \\ {e_1-e_2} "
            "does not exist, so the standard sub flag variety is undefined");
    auto t0 = std::chrono::steady_clock::now();

    auto full = ParabolicSubset::full(g);
    auto I = ParabolicSubset::siegel_I(g);
    auto J = ParabolicSubset::klingen_J(g);
    auto amb = presentation_cache(g, full, I);
    auto sub = presentation_cache(g, J, I.intersect(J));

    TheoremReport rep;
    rep.g = g;
    rep.dim_ambient = amb->dimension();
    rep.dim_sub = sub->dimension();
    for (int d = 0; d <= amb->dimension(); ++d) rep.graded_dims.push_back(amb->graded_dimension(d));

    Poly c_top = chern_class(normal_bundle(g, I, J), g);
    rep.c_top_normal = c_top.str();
    rep.c_top_vanishes = sub->normal_form(c_top).is_zero();

    PushforwardResult pf = pushforward_unit(amb, sub);
    rep.a = pf.a;
    rep.proportional = pf.proportional;
    bool nonzero = !pf.a.is_zero();
    rep.sign_ok = nonzero && ((g % 2 == 0) ? pf.a.sign() > 0 : pf.a.sign() < 0);
    rep.passed = rep.proportional && nonzero && rep.sign_ok && rep.c_top_vanishes;

    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace symchow
