#include "symchow/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symchow {

SignedPermutation::SignedPermutation(int g) : perm_(g), sign_(g, 1) {
    for (int i = 0; i < g; ++i) perm_[i] = i;
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> sign)
    : perm_(std::move(perm)), sign_(std::move(sign)) {
    if (perm_.size() != sign_.size())
        throw std::invalid_argument("SignedPermutation: size mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
        if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
            throw std::invalid_argument("SignedPermutation: not a permutation");
        seen[p] = true;
    }
    for (int s : sign_)
        if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: signs must be +-1");
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (perm_[i] != i || sign_[i] != 1) return false;
    return true;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("SignedPermutation: rank mismatch");
    // (a*b)(e_i) = a(b(e_i)) = b.sign[i] * a.sign[b.perm[i]] * e_{a.perm[b.perm[i]]}
    std::vector<int> p(rank()), s(rank());
    for (int i = 0; i < rank(); ++i) {
        p[i] = perm_[o.perm_[i]];
        s[i] = o.sign_[i] * sign_[o.perm_[i]];
    }
    return {std::move(p), std::move(s)};
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> p(rank()), s(rank());
    for (int i = 0; i < rank(); ++i) {
        p[perm_[i]] = i;
        s[perm_[i]] = sign_[i];
    }
    return {std::move(p), std::move(s)};
}

Weight SignedPermutation::act(const Weight& v) const {
    if (v.rank() != rank()) throw std::invalid_argument("SignedPermutation::act: rank mismatch");
    Weight out(rank());
    for (int i = 0; i < rank(); ++i) out.coord[perm_[i]] = sign_[i] * v.coord[i];
    return out;
}

Poly SignedPermutation::act(const Poly& f) const {
    if (f.nvars() != rank()) throw std::invalid_argument("SignedPermutation::act: rank mismatch");
    Poly out(rank());
    for (const auto& [m, c] : f.terms()) {
        Monomial img(rank());
        int sgn = 1;
        for (int i = 0; i < rank(); ++i) {
            img.exp[perm_[i]] = m.exp[i];
            if (sign_[i] < 0 && (m.exp[i] & 1)) sgn = -sgn;
        }
        out.add_term(img, sgn < 0 ? -c : c);
    }
    return out;
}

int SignedPermutation::det() const {
    int par = 1;
    std::vector<bool> seen(rank(), false);
    for (int i = 0; i < rank(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) par = -par;
    }
    for (int s : sign_)
        if (s < 0) par = -par;
    return par;
}

namespace {
bool is_negative_root(const Weight& w) {
    for (long c : w.coord) {
        if (c < 0) return true;
        if (c > 0) return false;
    }
    return false;
}
} // namespace

int SignedPermutation::length() const {
    int len = 0;
    for (const Weight& alpha : positive_roots(rank()))
        if (is_negative_root(act(alpha))) ++len;
    return len;
}

std::vector<int> SignedPermutation::as_2g_permutation() const {
    int g = rank();
    std::vector<int> sigma(2 * g + 1, 0); // 1-based
    for (int i = 1; i <= g; ++i) {
        int img = perm_[i - 1] + 1;
        sigma[i] = sign_[i - 1] > 0 ? img : 2 * g + 1 - img;
        sigma[2 * g + 1 - i] = 2 * g + 1 - sigma[i];
    }
    return {sigma.begin() + 1, sigma.end()};
}

std::vector<int> SignedPermutation::key() const {
    std::vector<int> k = perm_;
    k.insert(k.end(), sign_.begin(), sign_.end());
    return k;
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) os << (i ? " " : "") << perm_[i] + 1;
    os << " | ";
    for (int i = 0; i < rank(); ++i) os << (i ? " " : "") << (sign_[i] > 0 ? "+" : "-");
    os << ")";
    return os.str();
}

SignedPermutation simple_reflection(int g, int k) {
    if (k < 1 || k > g) throw std::invalid_argument("simple_reflection: index out of range");
    SignedPermutation w(g);
    std::vector<int> p = w.perm(), s = w.sign();
    if (k < g) {
        std::swap(p[k - 1], p[k]);
    } else {
        s[g - 1] = -1;
    }
    return {std::move(p), std::move(s)};
}

namespace {

std::map<std::pair<int, unsigned long>, std::shared_ptr<const WeylSubgroup>>& weyl_cache() {
    static std::map<std::pair<int, unsigned long>, std::shared_ptr<const WeylSubgroup>> cache;
    return cache;
}
std::mutex& weyl_cache_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

std::shared_ptr<const WeylSubgroup> enumerate_weyl(int g, const ParabolicSubset& K) {
    if (K.rank() != g) throw std::invalid_argument("enumerate_weyl: rank mismatch");
    auto cache_key = std::make_pair(g, K.mask());
    {
        std::lock_guard<std::mutex> lock(weyl_cache_mutex());
        auto it = weyl_cache().find(cache_key);
        if (it != weyl_cache().end()) return it->second;
    }

    std::vector<SignedPermutation> gens;
    for (int k : K.indices()) gens.push_back(simple_reflection(g, k));

    auto group = std::make_shared<WeylSubgroup>(WeylSubgroup{g, K, {}, {}});

    std::map<std::vector<int>, std::vector<int>> seen; // key -> word
    SignedPermutation id(g);
    seen[id.key()] = {};
    std::vector<SignedPermutation> layer{id};
    std::vector<std::vector<int>> layer_words{{}};
    while (!layer.empty()) {
        // Deterministic order inside each word-length layer.
        std::vector<std::size_t> order(layer.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return layer[a].key() < layer[b].key();
        });
        for (std::size_t i : order) {
            group->elements.push_back(layer[i]);
            group->words.push_back(layer_words[i]);
        }
        std::vector<SignedPermutation> next;
        std::vector<std::vector<int>> next_words;
        for (std::size_t i : order) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                SignedPermutation cand = layer[i] * gens[gi];
                auto key = cand.key();
                if (seen.count(key)) continue;
                std::vector<int> word = layer_words[i];
                word.push_back(K.indices()[gi]);
                seen[key] = word;
                next.push_back(std::move(cand));
                next_words.push_back(std::move(word));
            }
        }
        layer = std::move(next);
        layer_words = std::move(next_words);
    }

    std::lock_guard<std::mutex> lock(weyl_cache_mutex());
    auto [it, inserted] = weyl_cache().emplace(cache_key, group);
    return it->second; // idempotent: first population wins
}

bool is_invariant(const Poly& f, const ParabolicSubset& K) {
    for (int k : K.indices())
        if (simple_reflection(K.rank(), k).act(f) != f) return false;
    return true;
}

Poly divided_difference(int g, int k, const Poly& f) {
    if (f.nvars() != g) throw std::invalid_argument("divided_difference: rank mismatch");
    SignedPermutation s = simple_reflection(g, k);
    Poly num = f - s.act(f);
    if (num.is_zero()) return Poly(g);
    Poly alpha = simple_roots(g)[k - 1].to_poly();
    return divide_exact(num, alpha); // throws on nonzero remainder
}

SignedPermutation longest_element(int g, const ParabolicSubset& K) {
    std::vector<int> p(g), s(g, 1);
    for (int i = 0; i < g; ++i) p[i] = i;
    const auto& idx = K.indices();
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        while (j + 1 < idx.size() && idx[j + 1] == idx[j] + 1) ++j;
        int lo = idx[i], hi = idx[j]; // consecutive node run lo..hi
        if (hi == g) {
            // type C block on coordinates lo..g: acts as -1 there
            for (int c = lo; c <= g; ++c) s[c - 1] = -1;
        } else {
            // type A block on coordinates lo..hi+1: order reversal
            for (int c = lo; c <= hi + 1; ++c) p[c - 1] = lo + hi + 1 - c - 1;
        }
        i = j + 1;
    }
    return {std::move(p), std::move(s)};
}

std::vector<int> reduced_word(const SignedPermutation& w, const ParabolicSubset& K) {
    int g = w.rank();
    auto simples = simple_roots(g);
    std::vector<int> rev;
    SignedPermutation cur = w;
    while (!cur.is_identity()) {
        bool found = false;
        for (int k : K.indices()) {
            if (is_negative_root(cur.act(simples[k - 1]))) {
                cur = cur * simple_reflection(g, k);
                rev.push_back(k);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("reduced_word: element not in the parabolic subgroup");
    }
    return {rev.rbegin(), rev.rend()};
}

namespace {

// Closed-form d_k on one monomial, accumulated into out. For k < g and
// x = e_k, y = e_{k+1}, exponents p, q:
//   (x^p y^q - x^q y^p) / (x - y) = sign * x^m y^m * sum x^(t) y^(d-1-t)
// with m = min(p,q), d = |p-q|. For k = g the reflection flips the sign
// of odd powers of e_g and the division by 2e_g halves and decrements.
void ddiff_term(int g, int k, const Monomial& m, const Rational& c, Poly& out) {
    if (k == g) {
        int p = m.exp[g - 1];
        if ((p & 1) == 0) return;
        Monomial r = m;
        r.exp[g - 1] = p - 1;
        out.add_term(r, c); // (m - (-m)) / (2 e_g) = m / e_g
        return;
    }
    int p = m.exp[k - 1], q = m.exp[k];
    if (p == q) return;
    int lo = std::min(p, q), d = std::abs(p - q);
    Rational coef = (p > q) ? c : -c;
    Monomial r = m;
    for (int t = 0; t < d; ++t) {
        r.exp[k - 1] = lo + d - 1 - t;
        r.exp[k] = lo + t;
        out.add_term(r, coef);
    }
}

} // namespace

Poly divided_difference_word(int g, const std::vector<int>& word, Poly f) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Poly next(g);
        for (const auto& [m, c] : f.terms()) ddiff_term(g, *it, m, c, next);
        f = std::move(next);
    }
    return f;
}

} // namespace symchow
