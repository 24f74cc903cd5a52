#include "symchow/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symchow {

int Monomial::degree() const {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
    return r;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp; // lexicographic, e_1 most significant
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(int nvars, int index1) {
    if (index1 < 1 || index1 > nvars)
        throw std::invalid_argument("Poly::variable: index out of range");
    Monomial m(nvars);
    m.exp[index1 - 1] = 1;
    return monomial(m, Rational(1));
}

Poly Poly::monomial(Monomial m, const Rational& c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree(); // leading term has max degree
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

Poly Poly::homogeneous_component(int d) const {
    if (d < 0) throw std::invalid_argument("homogeneous_component: negative degree");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

std::vector<int> Poly::degrees() const {
    std::set<int> ds;
    for (const auto& [m, c] : terms_) ds.insert(m.degree());
    return {ds.begin(), ds.end()};
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Poly::leading() const {
    if (terms_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
    return *terms_.begin();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_)
        throw std::invalid_argument("Poly::add_term: wrong variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Poly: mismatched ambient variable count");
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.nvars_);
    // Distribute over the smaller factor for fewer passes.
    const Poly& small = a.nterms() <= b.nterms() ? a : b;
    const Poly& big = a.nterms() <= b.nterms() ? b : a;
    for (const auto& [ms, cs] : small.terms_)
        for (const auto& [mb, cb] : big.terms_)
            r.add_term(ms * mb, cs * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

void Poly::sub_scaled(const Poly& o, const Rational& c) {
    check_same_ring(o);
    if (c.is_zero()) return;
    for (const auto& [m, k] : o.terms_) add_term(m, -(k * c));
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = constant(nvars_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("Poly::eval: wrong point dimension");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < m.exp[i]; ++j) t *= point[i];
        total += t;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = !m.is_constant();
        if (!a.is_one() || !has_vars) {
            os << a.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.exp[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "e" << (i + 1);
            if (m.exp[i] > 1) os << "^" << m.exp[i];
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Poly::parse: expected digits in '" + s + "'");
        return s.substr(start, pos - start);
    }
};

} // namespace

Poly Poly::parse(int nvars, const std::string& text) {
    Lexer lx{text};
    Poly result(nvars);
    if (lx.eof()) throw std::invalid_argument("Poly::parse: empty input");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('-')) sign = -1;
        else if (lx.accept('+')) sign = 1;
        else if (!first) throw std::invalid_argument("Poly::parse: expected '+' or '-'");
        first = false;

        Rational coef(1);
        Monomial mono(nvars);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string num = lx.digits();
            std::string den = "1";
            if (lx.accept('/')) den = lx.digits();
            coef = Rational::parse(num + "/" + den);
            saw_factor = true;
            if (!lx.accept('*')) {
                result.add_term(mono, sign < 0 ? -coef : coef);
                continue;
            }
        }
        // variable factors: e<i>[^k] separated by '*'
        while (true) {
            if (lx.peek() != 'e')
                throw std::invalid_argument("Poly::parse: expected variable in '" + text + "'");
            ++lx.pos;
            int idx = std::stoi(lx.digits());
            if (idx < 1 || idx > nvars)
                throw std::invalid_argument("Poly::parse: variable index out of range");
            int k = 1;
            if (lx.accept('^')) k = std::stoi(lx.digits());
            if (k < 0) throw std::invalid_argument("Poly::parse: negative exponent");
            mono.exp[idx - 1] += k;
            saw_factor = true;
            if (!lx.accept('*')) break;
        }
        if (!saw_factor) throw std::invalid_argument("Poly::parse: empty term");
        result.add_term(mono, sign < 0 ? -coef : coef);
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly elementary_symmetric(int nvars, int k, const std::set<int>& vars) {
    if (k < 0 || k > static_cast<int>(vars.size()))
        throw std::invalid_argument("elementary_symmetric: k out of range");
    for (int v : vars)
        if (v < 1 || v > nvars)
            throw std::invalid_argument("elementary_symmetric: variable index out of range");
    // sigma[j] after processing a prefix of variables; standard DP.
    std::vector<Poly> sigma(k + 1, Poly(nvars));
    sigma[0] = Poly::constant(nvars, Rational(1));
    for (int v : vars) {
        Poly ev = Poly::variable(nvars, v);
        for (int j = k; j >= 1; --j)
            sigma[j] += sigma[j - 1] * ev;
    }
    return sigma[k];
}

Poly elementary_symmetric(int g, int k) {
    std::set<int> vars;
    for (int i = 1; i <= g; ++i) vars.insert(i);
    return elementary_symmetric(g, k, vars);
}

Poly divide_exact(const Poly& f, const Poly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (f.nvars() != divisor.nvars())
        throw std::invalid_argument("divide_exact: mismatched ambient variable count");
    Poly q(f.nvars());
    Poly r = f;
    const auto& [lm, lc] = divisor.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        Monomial qm(f.nvars());
        bool divisible = true;
        for (int i = 0; i < f.nvars(); ++i) {
            qm.exp[i] = rm.exp[i] - lm.exp[i];
            if (qm.exp[i] < 0) { divisible = false; break; }
        }
        if (!divisible)
            throw std::logic_error("divide_exact: nonzero remainder");
        Rational qc = rc / lc;
        q.add_term(qm, qc);
        r.sub_scaled(divisor * Poly::monomial(qm, Rational(1)), qc);
    }
    return q;
}

} // namespace symchow
