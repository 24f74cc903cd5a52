#include "symchow/bundles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace symchow {

Poly class_of_weight(const Weight& w) { return -w.to_poly(); }

HomogeneousBundle tangent_bundle(int g, const ParabolicSubset& grp, const ParabolicSubset& par) {
    if (!par.subset_of(grp))
        throw std::invalid_argument("tangent_bundle: parabolic subset must lie inside the group subset");
    auto phi_par = parabolic_positive_roots(g, par);
    std::set<Weight> skip(phi_par.begin(), phi_par.end());
    HomogeneousBundle B{g, "tangent", {}};
    for (const Weight& alpha : parabolic_positive_roots(g, grp))
        if (!skip.count(alpha)) B.weights.push_back(alpha);
    return B;
}

HomogeneousBundle tangent_bundle(int g, const ParabolicSubset& I) {
    return tangent_bundle(g, ParabolicSubset::full(g), I);
}

HomogeneousBundle normal_bundle(int g, const ParabolicSubset& I, const ParabolicSubset& J) {
    return {g, "normal", normal_bundle_roots(g, I, J)};
}

HomogeneousBundle hodge_bundle(int g) {
    if (g < 1) throw std::invalid_argument("hodge_bundle: g must be >= 1");
    HomogeneousBundle B{g, "hodge", {}};
    for (int i = 1; i <= g; ++i) B.weights.push_back(weight_ei(g, i));
    return B;
}

Poly chern_class(const HomogeneousBundle& B, int k) {
    if (k < 0 || k > B.rank())
        throw std::invalid_argument("chern_class: k out of range");
    // sigma_k over the weight classes, by the usual DP.
    std::vector<Poly> sigma(k + 1, Poly(B.g));
    sigma[0] = Poly::constant(B.g, Rational(1));
    for (const Weight& w : B.weights) {
        Poly x = class_of_weight(w);
        for (int t = k; t >= 1; --t) sigma[t] += sigma[t - 1] * x;
    }
    return sigma[k];
}

std::vector<Poly> chern_polynomial(const HomogeneousBundle& B) {
    int r = B.rank();
    std::vector<Poly> c(r + 1, Poly(B.g));
    c[0] = Poly::constant(B.g, Rational(1));
    int built = 0;
    for (const Weight& w : B.weights) {
        Poly x = class_of_weight(w);
        ++built;
        for (int t = std::min(built, r); t >= 1; --t) c[t] += c[t - 1] * x;
    }
    return c;
}

bool whitney_check(int g, const ParabolicSubset& I, const ParabolicSubset& J) {
    auto full = ParabolicSubset::full(g);
    auto IJ = I.intersect(J);
    auto ct_ambient = chern_polynomial(tangent_bundle(g, full, I));
    auto ct_normal = chern_polynomial(normal_bundle(g, I, J));
    auto ct_levi = chern_polynomial(tangent_bundle(g, J, IJ));
    // product of the two Chern polynomials in S[t]
    std::vector<Poly> prod(ct_ambient.size(), Poly(g));
    for (std::size_t i = 0; i < ct_normal.size(); ++i)
        for (std::size_t j = 0; j < ct_levi.size(); ++j) {
            if (i + j >= prod.size()) {
                if (!(ct_normal[i] * ct_levi[j]).is_zero()) return false;
                continue;
            }
            prod[i + j] += ct_normal[i] * ct_levi[j];
        }
    return prod == ct_ambient;
}

} // namespace symchow
