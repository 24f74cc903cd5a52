#include "symchow/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symchow {

bool Weight::is_zero() const {
    return std::all_of(coord.begin(), coord.end(), [](long c) { return c == 0; });
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coord) c = -c;
    return r;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.coord[i] += o.coord[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.coord[i] -= o.coord[i];
    return r;
}

Poly Weight::to_poly() const {
    Poly p(rank());
    for (int i = 0; i < rank(); ++i) {
        if (coord[i] == 0) continue;
        Monomial m(rank());
        m.exp[i] = 1;
        p.add_term(m, Rational(coord[i]));
    }
    return p;
}

std::string Weight::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank(); ++i) {
        long c = coord[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        if (std::abs(c) != 1) os << std::abs(c);
        os << "e" << (i + 1);
    }
    if (first) return "0";
    return os.str();
}

Weight weight_ei(int g, int i) {
    Weight w(g);
    w.coord[i - 1] = 1;
    return w;
}

Weight root_diff(int g, int i, int j) {
    Weight w(g);
    w.coord[i - 1] = 1;
    w.coord[j - 1] -= 1;
    return w;
}

Weight root_sum(int g, int i, int j) {
    Weight w(g);
    w.coord[i - 1] += 1;
    w.coord[j - 1] += 1;
    return w;
}

Weight root_double(int g, int i) {
    Weight w(g);
    w.coord[i - 1] = 2;
    return w;
}

ParabolicSubset::ParabolicSubset(int g, std::vector<int> indices) : g_(g), indices_(std::move(indices)) {
    if (g < 1) throw std::invalid_argument("ParabolicSubset: rank must be >= 1");
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (int k : indices_)
        if (k < 1 || k > g) throw std::invalid_argument("ParabolicSubset: invalid simple-root index");
}

ParabolicSubset ParabolicSubset::full(int g) {
    std::vector<int> idx(g);
    for (int k = 1; k <= g; ++k) idx[k - 1] = k;
    return {g, idx};
}

ParabolicSubset ParabolicSubset::siegel_I(int g) {
    std::vector<int> idx;
    for (int k = 1; k < g; ++k) idx.push_back(k);
    return {g, idx};
}

ParabolicSubset ParabolicSubset::klingen_J(int g) {
    if (g < 2)
        throw std::invalid_argument(
            "ParabolicSubset::klingen_J: J = Delta \\ {e_1-e_2} needs g >= 2 (no such simple root at g = 1)");
    std::vector<int> idx;
    for (int k = 2; k <= g; ++k) idx.push_back(k);
    return {g, idx};
}

bool ParabolicSubset::contains(int k) const {
    return std::binary_search(indices_.begin(), indices_.end(), k);
}

bool ParabolicSubset::subset_of(const ParabolicSubset& o) const {
    if (g_ != o.g_) return false;
    return std::includes(o.indices_.begin(), o.indices_.end(), indices_.begin(), indices_.end());
}

ParabolicSubset ParabolicSubset::intersect(const ParabolicSubset& o) const {
    if (g_ != o.g_) throw std::invalid_argument("ParabolicSubset::intersect: rank mismatch");
    std::vector<int> out;
    std::set_intersection(indices_.begin(), indices_.end(), o.indices_.begin(), o.indices_.end(),
                          std::back_inserter(out));
    return {g_, out};
}

unsigned long ParabolicSubset::mask() const {
    unsigned long m = 0;
    for (int k : indices_) m |= 1ul << (k - 1);
    return m;
}

long ParabolicSubset::weyl_order() const {
    // Dynkin components of C_g restricted to the index subset: a maximal
    // run of consecutive indices is type A unless it contains index g,
    // in which case it is type C on the trailing coordinates.
    long order = 1;
    std::size_t i = 0;
    while (i < indices_.size()) {
        std::size_t j = i;
        while (j + 1 < indices_.size() && indices_[j + 1] == indices_[j] + 1) ++j;
        int len = static_cast<int>(j - i + 1);
        if (indices_[j] == g_) {
            // type C_len: 2^len * len!
            long f = 1;
            for (int t = 2; t <= len; ++t) f *= t;
            order *= f << len;
        } else {
            // type A_len: (len+1)!
            long f = 1;
            for (int t = 2; t <= len + 1; ++t) f *= t;
            order *= f;
        }
        i = j + 1;
    }
    return order;
}

std::vector<Weight> simple_roots(int g) {
    if (g < 1) throw std::invalid_argument("simple_roots: g must be >= 1");
    std::vector<Weight> out;
    for (int k = 1; k < g; ++k) out.push_back(root_diff(g, k, k + 1));
    out.push_back(root_double(g, g));
    return out;
}

std::vector<Weight> positive_roots(int g) {
    if (g < 1) throw std::invalid_argument("positive_roots: g must be >= 1");
    std::vector<Weight> out;
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) out.push_back(root_diff(g, i, j));
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) out.push_back(root_sum(g, i, j));
    for (int i = 1; i <= g; ++i) out.push_back(root_double(g, i));
    return out;
}

bool in_simple_span(const Weight& w, const ParabolicSubset& K, std::vector<Rational>* coords) {
    // Solve w = sum_k c_k alpha_k over the chosen simple roots by exact
    // Gaussian elimination; membership needs a solution (for parabolic
    // positive roots the coefficients come out as non-negative integers,
    // which callers may inspect via coords).
    int g = w.rank();
    auto simples = simple_roots(g);
    const auto& idx = K.indices();
    int n = static_cast<int>(idx.size());
    // rows: g coordinates, columns: n chosen simple roots + rhs
    std::vector<std::vector<Rational>> m(g, std::vector<Rational>(n + 1, Rational(0)));
    for (int c = 0; c < n; ++c) {
        const Weight& alpha = simples[idx[c] - 1];
        for (int r = 0; r < g; ++r) m[r][c] = Rational(alpha.coord[r]);
    }
    for (int r = 0; r < g; ++r) m[r][n] = Rational(w.coord[r]);

    int row = 0;
    std::vector<int> pivot_col(g, -1);
    for (int col = 0; col < n && row < g; ++col) {
        int pr = -1;
        for (int r = row; r < g; ++r)
            if (!m[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        Rational inv = Rational(1) / m[row][col];
        for (int c = col; c <= n; ++c) m[row][c] *= inv;
        for (int r = 0; r < g; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    // consistency: zero rows must have zero rhs
    for (int r = row; r < g; ++r)
        if (!m[r][n].is_zero()) return false;
    if (coords) {
        coords->assign(n, Rational(0));
        for (int r = 0; r < row; ++r) (*coords)[pivot_col[r]] = m[r][n];
    }
    return true;
}

std::vector<Weight> parabolic_positive_roots(int g, const ParabolicSubset& K) {
    if (K.rank() != g) throw std::invalid_argument("parabolic_positive_roots: rank mismatch");
    std::vector<Weight> out;
    for (const Weight& alpha : positive_roots(g))
        if (in_simple_span(alpha, K)) out.push_back(alpha);
    return out;
}

std::vector<Weight> normal_bundle_roots(int g, const ParabolicSubset& I, const ParabolicSubset& J) {
    auto phi_i = parabolic_positive_roots(g, I);
    auto phi_j = parabolic_positive_roots(g, J);
    std::set<Weight> skip(phi_i.begin(), phi_i.end());
    skip.insert(phi_j.begin(), phi_j.end());
    std::vector<Weight> out;
    for (const Weight& alpha : positive_roots(g))
        if (!skip.count(alpha)) out.push_back(alpha);
    return out;
}

} // namespace symchow
