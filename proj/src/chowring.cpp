#include "symchow/chowring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "symchow/weyl.hpp"

namespace symchow {

Poly PolySpan::reduce(Poly f) const {
    // Single descending sweep: every row is monic with a leading pivot,
    // so eliminating a pivot only introduces strictly smaller monomials.
    auto it = f.terms().begin();
    while (it != f.terms().end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Monomial pivot = it->first;
        Rational c = it->second;
        f.sub_scaled(row->second, c); // removes the pivot monomial from f
        it = f.terms().upper_bound(pivot);
    }
    return f;
}

bool PolySpan::insert(Poly f) {
    Poly r = reduce(std::move(f));
    if (r.is_zero()) return false;
    const auto& [lm, lc] = r.leading();
    Poly monic = r / lc;
    Monomial pivot = lm;
    // Back-substitute so existing rows stay fully reduced.
    for (auto& [p, row] : rows_) {
        Rational c = row.coeff(pivot);
        if (!c.is_zero()) row.sub_scaled(monic, c);
    }
    rows_.emplace(pivot, std::move(monic));
    return true;
}

namespace {

// f.terms() is const; PolySpan::reduce needs mutation plus iterator
// access, so it works on its own copy via these helpers.

std::string block_sigma_name(int k, int lo, int hi, bool squares) {
    std::ostringstream os;
    os << "s" << k << "(e" << lo << ".." << "e" << hi << (squares ? "^2)" : ")");
    return os.str();
}

} // namespace

std::vector<GenInfo> invariant_generators(int g, const ParabolicSubset& K) {
    std::vector<GenInfo> gens;
    const auto& idx = K.indices();
    std::vector<bool> in_block(g + 1, false);

    std::size_t i = 0;
    bool siegel_named = (K == ParabolicSubset::siegel_I(g)) && g >= 2;
    bool levi_named = g >= 2 && (K == ParabolicSubset::siegel_I(g).intersect(ParabolicSubset::klingen_J(g)));
    while (i < idx.size()) {
        std::size_t j = i;
        while (j + 1 < idx.size() && idx[j + 1] == idx[j] + 1) ++j;
        int lo = idx[i], hi = idx[j];
        if (hi == g) {
            // type C block on coordinates lo..g: sigma_k of the squares
            std::set<int> vars;
            for (int c = lo; c <= g; ++c) vars.insert(c);
            int len = g - lo + 1;
            for (int k = 1; k <= len; ++k) {
                Poly squares(g);
                // sigma_k(e_lo^2..e_g^2) built by the same DP on squared variables
                std::vector<Poly> sigma(k + 1, Poly(g));
                sigma[0] = Poly::constant(g, Rational(1));
                for (int v : vars) {
                    Poly sq = Poly::variable(g, v) * Poly::variable(g, v);
                    for (int t = k; t >= 1; --t) sigma[t] += sigma[t - 1] * sq;
                }
                gens.push_back({block_sigma_name(k, lo, g, true), sigma[k], 2 * k});
                for (int c = lo; c <= g; ++c) in_block[c] = true;
            }
        } else {
            // type A block on coordinates lo..hi+1
            std::set<int> vars;
            for (int c = lo; c <= hi + 1; ++c) vars.insert(c);
            int len = hi - lo + 2;
            for (int k = 1; k <= len; ++k) {
                std::string name;
                if (siegel_named && lo == 1)
                    name = "l" + std::to_string(k);
                else if (levi_named && lo == 2)
                    name = "lt" + std::to_string(k);
                else
                    name = block_sigma_name(k, lo, hi + 1, false);
                gens.push_back({name, elementary_symmetric(g, k, vars), k});
            }
            for (int c = lo; c <= hi + 1; ++c) in_block[c] = true;
        }
        i = j + 1;
    }
    for (int c = 1; c <= g; ++c)
        if (!in_block[c])
            gens.push_back({"e" + std::to_string(c), Poly::variable(g, c), 1});

    // Deterministic order: by degree, then by name.
    std::stable_sort(gens.begin(), gens.end(), [](const GenInfo& a, const GenInfo& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.name < b.name;
    });
    return gens;
}

std::vector<std::vector<int>> weighted_monomials(const std::vector<int>& degrees, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(degrees.size(), 0);
    // Descending lex: the first generator takes the largest exponent first.
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
        if (pos == degrees.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        if (pos + 1 == degrees.size()) {
            if (rem % degrees[pos] == 0) {
                cur[pos] = rem / degrees[pos];
                out.push_back(cur);
                cur[pos] = 0;
            }
            return;
        }
        for (int k = rem / degrees[pos]; k >= 0; --k) {
            cur[pos] = k;
            rec(pos + 1, rem - k * degrees[pos]);
        }
        cur[pos] = 0;
    };
    if (d == 0) return {std::vector<int>(degrees.size(), 0)};
    if (d < 0) return {};
    rec(0, d);
    return out;
}

FlagPresentation::FlagPresentation(int g, ParabolicSubset grp, ParabolicSubset par)
    : g_(g), grp_(std::move(grp)), par_(std::move(par)) {
    if (!par_.subset_of(grp_))
        throw std::invalid_argument("FlagPresentation: parabolic subset must lie inside the group subset");
    dim_ = static_cast<int>(parabolic_positive_roots(g_, grp_).size()) -
           static_cast<int>(parabolic_positive_roots(g_, par_).size());
    invariant_gens_ = invariant_generators(g_, par_);
    ideal_gens_ = invariant_generators(g_, grp_);
}

PresentationPtr FlagPresentation::build(int g, const ParabolicSubset& grp, const ParabolicSubset& par) {
    return PresentationPtr(new FlagPresentation(g, grp, par));
}

long FlagPresentation::total_dimension() const {
    return grp_.weyl_order() / par_.weyl_order();
}

const FlagPresentation::DegreeBasis& FlagPresentation::degree_basis(int d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = degrees_.find(d);
    if (it != degrees_.end()) return it->second;

    DegreeBasis db;
    std::vector<int> inv_degs;
    for (const auto& gi : invariant_gens_) inv_degs.push_back(gi.degree);

    // Degree-d slice of the ideal: mu * rho over invariant monomials mu.
    for (const auto& rho : ideal_gens_) {
        int rem = d - rho.degree;
        if (rem < 0) continue;
        for (const auto& expo : weighted_monomials(inv_degs, rem)) {
            Poly mu = Poly::constant(g_, Rational(1));
            for (std::size_t t = 0; t < expo.size(); ++t)
                if (expo[t] > 0) mu *= invariant_gens_[t].poly.pow(expo[t]);
            db.ideal.insert(mu * rho.poly);
        }
    }

    // Quotient basis from reduced invariant monomials, in the fixed order.
    for (const auto& expo : weighted_monomials(inv_degs, d)) {
        Poly mu = Poly::constant(g_, Rational(1));
        for (std::size_t t = 0; t < expo.size(); ++t)
            if (expo[t] > 0) mu *= invariant_gens_[t].poly.pow(expo[t]);
        Poly r = db.ideal.reduce(mu);
        if (r.is_zero()) continue;
        if (db.repspan.insert(r)) {
            db.monos.push_back(expo);
            db.reps.push_back(r);
        }
    }

    auto [pos, inserted] = degrees_.emplace(d, std::move(db));
    return pos->second;
}

ChowClass FlagPresentation::normal_form(const Poly& f) const {
    if (f.nvars() != g_)
        throw std::invalid_argument("normal_form: polynomial has the wrong ambient rank");
    if (!is_invariant(f, par_))
        throw std::invalid_argument("normal_form: polynomial is not W_par invariant");
    Poly out(g_);
    for (int d : f.degrees()) out += degree_basis(d).ideal.reduce(f.homogeneous_component(d));
    return {shared_from_this(), out};
}

int FlagPresentation::graded_dimension(int d) const {
    if (d < 0) throw std::invalid_argument("graded_dimension: negative degree");
    if (d > dim_) return 0;
    return static_cast<int>(degree_basis(d).reps.size());
}

const std::vector<std::vector<int>>& FlagPresentation::basis_monomials(int d) const {
    return degree_basis(d).monos;
}

const std::vector<Poly>& FlagPresentation::basis_reps(int d) const {
    return degree_basis(d).reps;
}

std::vector<Rational> FlagPresentation::coordinates(int d, const Poly& reduced) const {
    const DegreeBasis& db = degree_basis(d);
    // Small exact solve: express value in the reps by elimination against
    // a working echelon that tracks combinations.
    std::size_t n = db.reps.size();
    std::vector<Poly> rows;
    std::vector<std::vector<Rational>> combos;
    Poly r = reduced;
    std::vector<Rational> combo(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        Poly row = db.reps[i];
        std::vector<Rational> rc(n, Rational(0));
        rc[i] = Rational(1);
        // reduce row against prior rows
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[j].is_zero()) continue;
            Rational c = row.coeff(rows[j].leading().first);
            if (c.is_zero()) continue;
            Rational f = c / rows[j].leading().second;
            row.sub_scaled(rows[j], f);
            for (std::size_t t = 0; t < n; ++t) rc[t] -= f * combos[j][t];
        }
        rows.push_back(std::move(row));
        combos.push_back(std::move(rc));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].is_zero()) continue;
        Rational c = r.coeff(rows[j].leading().first);
        if (c.is_zero()) continue;
        Rational f = c / rows[j].leading().second;
        r.sub_scaled(rows[j], f);
        for (std::size_t t = 0; t < n; ++t) combo[t] += f * combos[j][t];
    }
    if (!r.is_zero())
        throw std::logic_error("coordinates: value is not in the span of the degree basis");
    return combo;
}

const PolySpan& FlagPresentation::ideal_slice(int d) const { return degree_basis(d).ideal; }

namespace {

std::map<std::tuple<int, unsigned long, unsigned long>, PresentationPtr>& pres_cache() {
    static std::map<std::tuple<int, unsigned long, unsigned long>, PresentationPtr> cache;
    return cache;
}
std::mutex& pres_cache_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

PresentationPtr presentation_cache(int g, const ParabolicSubset& grp, const ParabolicSubset& par) {
    auto key = std::make_tuple(g, grp.mask(), par.mask());
    std::lock_guard<std::mutex> lock(pres_cache_mutex());
    auto it = pres_cache().find(key);
    if (it != pres_cache().end()) return it->second;
    auto p = FlagPresentation::build(g, grp, par);
    pres_cache().emplace(key, p);
    return p;
}

ChowClass pullback_iota(const PresentationPtr& amb, const PresentationPtr& sub, const ChowClass& x) {
    if (x.pres.get() != amb.get())
        throw std::invalid_argument("pullback_iota: class does not live in the ambient presentation");
    if (amb->g() != sub->g())
        throw std::invalid_argument("pullback_iota: presentations have different rank");
    if (!sub->group_subset().subset_of(amb->group_subset()) ||
        !sub->parabolic_subset().subset_of(amb->parabolic_subset()))
        throw std::invalid_argument("pullback_iota: presentation mismatch");
    return sub->normal_form(x.rep);
}

namespace {

// Echelon over coordinate vectors, for subspace comparisons.
class VecSpan {
public:
    bool insert(std::vector<Rational> v) {
        reduce(v);
        auto pivot = first_nonzero(v);
        if (pivot < 0) return false;
        Rational inv = Rational(1) / v[pivot];
        for (auto& c : v) c *= inv;
        for (auto& [p, row] : rows_) {
            if (row[pivot].is_zero()) continue;
            Rational f = row[pivot];
            for (std::size_t t = 0; t < row.size(); ++t) row[t] -= f * v[t];
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }
    bool contains(std::vector<Rational> v) const {
        reduce(v);
        return first_nonzero(v) < 0;
    }
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    static int first_nonzero(const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return static_cast<int>(i);
        return -1;
    }
    void reduce(std::vector<Rational>& v) const {
        for (const auto& [p, row] : rows_) {
            if (v[p].is_zero()) continue;
            Rational f = v[p];
            for (std::size_t t = 0; t < v.size(); ++t) v[t] -= f * row[t];
        }
    }
    std::map<int, std::vector<Rational>> rows_;
};

} // namespace

bool kernel_generator_check(const PresentationPtr& amb, const PresentationPtr& sub, int max_degree,
                            std::vector<KernelDegreeReport>* details) {
    int g = amb->g();
    Poly lambda_g = elementary_symmetric(g, g);
    bool ok = true;
    for (int d = 0; d <= max_degree; ++d) {
        const auto& amb_reps = amb->basis_reps(d);
        int na = static_cast<int>(amb_reps.size());
        int ns = sub->graded_dimension(d);

        // Matrix of the pullback in the graded bases, then its kernel.
        std::vector<std::vector<Rational>> cols;
        for (const Poly& b : amb_reps)
            cols.push_back(sub->coordinates(d, sub->normal_form(b).rep));

        // rank via vector echelon on columns
        VecSpan colspan;
        int rank = 0;
        for (const auto& c : cols)
            if (colspan.insert(c)) ++rank;

        // kernel basis: nullspace of the ns x na matrix
        std::vector<std::vector<Rational>> m(ns, std::vector<Rational>(na, Rational(0)));
        for (int j = 0; j < na; ++j)
            for (int i = 0; i < ns; ++i) m[i][j] = cols[j][i];
        // Gaussian elimination to RREF
        int row = 0;
        std::vector<int> pivot_of_col(na, -1);
        for (int col = 0; col < na && row < ns; ++col) {
            int pr = -1;
            for (int r = row; r < ns; ++r)
                if (!m[r][col].is_zero()) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(m[row], m[pr]);
            Rational inv = Rational(1) / m[row][col];
            for (int c = col; c < na; ++c) m[row][c] *= inv;
            for (int r = 0; r < ns; ++r) {
                if (r == row || m[r][col].is_zero()) continue;
                Rational f = m[r][col];
                for (int c = col; c < na; ++c) m[r][c] -= f * m[row][c];
            }
            pivot_of_col[col] = row;
            ++row;
        }
        VecSpan kernel;
        int kernel_dim = 0;
        for (int col = 0; col < na; ++col) {
            if (pivot_of_col[col] >= 0) continue;
            std::vector<Rational> v(na, Rational(0));
            v[col] = Rational(1);
            for (int c = 0; c < na; ++c)
                if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][col];
            kernel.insert(v);
            ++kernel_dim;
        }

        // Degree-d slice of (lambda_g): lambda_g * basis of degree d - g.
        VecSpan ideal_span;
        int ideal_dim = 0;
        bool ideal_inside_kernel = true;
        if (d >= g) {
            for (const Poly& b : amb->basis_reps(d - g)) {
                Poly prod = amb->normal_form(lambda_g * b).rep;
                auto v = amb->coordinates(d, prod);
                if (!kernel.contains(v)) ideal_inside_kernel = false;
                if (ideal_span.insert(v)) ++ideal_dim;
            }
        }

        bool surjective = (rank == ns);
        bool match = ideal_inside_kernel && (ideal_dim == kernel_dim);
        if (details)
            details->push_back({d, na, ns, rank, kernel_dim, ideal_dim, surjective, match});
        if (!surjective || !match) ok = false;
    }
    return ok;
}

bool verify_symmetric_identity(int g, int l) {
    if (l < 1 || l >= g)
        throw std::invalid_argument("verify_symmetric_identity: need 1 <= l < g");
    // LHS: (-1)^l sigma_l(x_1^2..x_g^2)
    std::vector<Poly> sigma_sq(l + 1, Poly(g));
    sigma_sq[0] = Poly::constant(g, Rational(1));
    for (int v = 1; v <= g; ++v) {
        Poly sq = Poly::variable(g, v) * Poly::variable(g, v);
        for (int t = l; t >= 1; --t) sigma_sq[t] += sigma_sq[t - 1] * sq;
    }
    Poly lhs = (l % 2 == 0) ? sigma_sq[l] : -sigma_sq[l];
    // RHS: sum_{i+j=2l} (-1)^j sigma_i sigma_j, sigma_k = 0 beyond g
    Poly rhs(g);
    for (int i = 0; i <= 2 * l; ++i) {
        int j = 2 * l - i;
        if (i > g || j > g) continue;
        Poly term = elementary_symmetric(g, i) * elementary_symmetric(g, j);
        rhs += (j % 2 == 0) ? term : -term;
    }
    return lhs == rhs;
}

Poly master_relation_component(int nvars, const std::set<int>& vars, int k) {
    int n = static_cast<int>(vars.size());
    Poly plus = Poly::constant(nvars, Rational(1));
    Poly minus = Poly::constant(nvars, Rational(1));
    for (int i = 1; i <= n; ++i) {
        Poly s = elementary_symmetric(nvars, i, vars);
        plus += s;
        minus += (i % 2 == 0) ? s : -s;
    }
    Poly prod = plus * minus - Poly::constant(nvars, Rational(1));
    return prod.homogeneous_component(k);
}

} // namespace symchow
