#include "symchow/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "symchow/intersection.hpp"
#include "symchow/weyl.hpp"

namespace symchow {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kMaxRankPipeline = 6; ///< verify/table budget
constexpr int kMaxRankSymmLemma = 10;
constexpr int kMaxRankPresent = 6;
constexpr int kMaxRankPresentFull = 4;
constexpr int kMaxRankKernel = 5;

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

/// Formal linear combination of monomials in named generators, used to
/// print relation generators and basis monomials in lambda symbols.
std::string gen_combo_str(const std::map<std::vector<int>, Rational>& terms,
                          const std::vector<std::string>& names) {
    if (terms.empty()) return "0";
    // descending lex on exponent vectors for a stable reading order
    std::vector<std::pair<std::vector<int>, Rational>> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [expo, c] : sorted) {
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        for (int e : expo)
            if (e > 0) has_vars = true;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[i];
            if (expo[i] > 1) os << "^" << expo[i];
        }
    }
    std::string s = os.str();
    return s.empty() ? "0" : s;
}

std::string mono_label(const std::vector<int>& expo, const std::vector<std::string>& names) {
    std::map<std::vector<int>, Rational> one{{expo, Rational(1)}};
    return gen_combo_str(one, names);
}

struct SpaceSpec {
    ParabolicSubset grp;
    ParabolicSubset par;
};

SpaceSpec space_subsets(int g, const std::string& space) {
    auto full = ParabolicSubset::full(g);
    if (space == "siegel") return {full, ParabolicSubset::siegel_I(g)};
    if (space == "full") return {full, ParabolicSubset::empty(g)};
    if (space == "levi") {
        if (g == 1) return {ParabolicSubset::empty(1), ParabolicSubset::empty(1)}; // a point
        auto I = ParabolicSubset::siegel_I(g);
        auto J = ParabolicSubset::klingen_J(g);
        return {J, I.intersect(J)};
    }
    throw std::invalid_argument("unknown space '" + space + "' (expected siegel, levi or full)");
}

ordered_json subset_json(const ParabolicSubset& K) {
    ordered_json j = ordered_json::array();
    auto simples = simple_roots(K.rank());
    for (int k : K.indices()) {
        ordered_json entry;
        entry["index"] = k;
        entry["root"] = simples[k - 1].str();
        j.push_back(entry);
    }
    return j;
}

/// Relation generators of the Siegel (size g) or Levi (size g-1) master
/// family, written in the lambda generator symbols:
///   (-1)^l sum_{i+j=2l} (-1)^j c_i c_j,  l = 1..n.
std::vector<std::string> lambda_relation_strings(int n, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (int l = 1; l <= n; ++l) {
        std::map<std::vector<int>, Rational> combo;
        for (int i = 0; i <= 2 * l; ++i) {
            int j = 2 * l - i;
            if (i > n || j > n) continue;
            std::vector<int> expo(n, 0);
            if (i > 0) expo[i - 1] += 1;
            if (j > 0) expo[j - 1] += 1;
            Rational c((j % 2 == 0) ? 1 : -1);
            if (l % 2 != 0) c = -c;
            auto [it, inserted] = combo.emplace(expo, c);
            if (!inserted) it->second += c;
        }
        for (auto it = combo.begin(); it != combo.end();)
            it = it->second.is_zero() ? combo.erase(it) : std::next(it);
        out.push_back(gen_combo_str(combo, names));
    }
    return out;
}

ordered_json theorem_json(const TheoremReport& r) {
    ordered_json j;
    j["g"] = r.g;
    j["dim_ambient"] = r.dim_ambient;
    j["dim_sub"] = r.dim_sub;
    j["graded_dims"] = r.graded_dims;
    j["c_top_normal_bundle"] = r.c_top_normal;
    j["c_top_vanishes"] = r.c_top_vanishes;
    j["a"] = r.a.str();
    j["proportional_to_lambda_g"] = r.proportional;
    j["sign_check"] = r.sign_ok;
    j["passed"] = r.passed;
    return j;
}

Report make_error(const std::string& command, std::map<std::string, std::string> params,
                  const std::string& message, double wall) {
    Report rep;
    rep.command = command;
    rep.params = std::move(params);
    rep.status = "error";
    rep.payload = ordered_json{{"error", message}};
    rep.wall_seconds = wall;
    return rep;
}

} // namespace

int Report::exit_code() const {
    if (status == "pass") return 0;
    if (status == "fail") return 1;
    return 2;
}

std::string Report::to_json_string() const {
    ordered_json j;
    j["command"] = command;
    ordered_json p;
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["status"] = status;
    j["result"] = payload;
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command;
    for (const auto& [k, v] : params) os << " " << k << "=" << v;
    os << "\n";
    os << payload.dump(2) << "\n";
    os << "status: " << status << "  (" << wall_seconds << " s)\n";
    return os.str();
}

Report cmd_present(int g, const std::string& space) {
    Timer timer;
    std::map<std::string, std::string> params{{"g", std::to_string(g)}, {"space", space}};
    if (g < 1) return make_error("present", params, "g must be >= 1", timer.seconds());
    int cap = (space == "full") ? kMaxRankPresentFull : kMaxRankPresent;
    if (g > cap)
        return make_error("present", params,
                          "g exceeds the documented budget for this space (max " +
                              std::to_string(cap) + ")",
                          timer.seconds());

    Report rep;
    rep.command = "present";
    rep.params = params;
    try {
        auto spec = space_subsets(g, space);
        auto P = presentation_cache(g, spec.grp, spec.par);

        ordered_json j;
        j["g"] = g;
        j["space"] = space;
        j["group_subset"] = subset_json(P->group_subset());
        j["parabolic_subset"] = subset_json(P->parabolic_subset());
        j["dimension"] = P->dimension();
        j["total_dimension"] = P->total_dimension();

        std::vector<std::string> names;
        ordered_json gens = ordered_json::array();
        for (const auto& gi : P->invariant_gens()) {
            names.push_back(gi.name);
            ordered_json e;
            e["name"] = gi.name;
            e["degree"] = gi.degree;
            e["poly"] = gi.poly.str();
            gens.push_back(e);
        }
        j["generators"] = gens;

        ordered_json rels = ordered_json::array();
        for (const auto& ri : P->ideal_gens()) {
            ordered_json e;
            e["degree"] = ri.degree;
            e["poly"] = ri.poly.str();
            rels.push_back(e);
        }
        j["relation_generators"] = rels;
        if (space == "siegel" || space == "levi") {
            int n = static_cast<int>(names.size()) - (space == "levi" ? 1 : 0);
            // the levi generator list is e1, lt1..lt(g-1); relations only
            // involve the lt generators plus the degree-one generator e1
            if (space == "siegel") {
                j["relations_in_generators"] = lambda_relation_strings(n, names);
            } else {
                std::vector<std::string> lt_names(names.begin() + 1, names.end());
                auto rels_lambda = lambda_relation_strings(n, lt_names);
                rels_lambda.insert(rels_lambda.begin(), names[0]);
                j["relations_in_generators"] = rels_lambda;
            }
        }

        ordered_json dims = ordered_json::array();
        ordered_json basis = ordered_json::array();
        for (int d = 0; d <= P->dimension(); ++d) {
            dims.push_back(P->graded_dimension(d));
            ordered_json row = ordered_json::array();
            for (const auto& expo : P->basis_monomials(d)) row.push_back(mono_label(expo, names));
            basis.push_back(row);
        }
        j["graded_dimensions"] = dims;
        j["basis_monomials"] = basis;

        rep.payload = j;
        rep.status = "pass";
    } catch (const std::exception& e) {
        return make_error("present", params, e.what(), timer.seconds());
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

Report cmd_chern(int g, const std::string& bundle) {
    Timer timer;
    std::map<std::string, std::string> params{{"bundle", bundle}, {"g", std::to_string(g)}};
    if (g < 1) return make_error("chern", params, "g must be >= 1", timer.seconds());
    if (g > kMaxRankPresent)
        return make_error("chern", params,
                          "g exceeds the documented budget (max " + std::to_string(kMaxRankPresent) + ")",
                          timer.seconds());
    Report rep;
    rep.command = "chern";
    rep.params = params;
    try {
        auto I = ParabolicSubset::siegel_I(g);
        HomogeneousBundle B{g, "", {}};
        if (bundle == "tangent") {
            B = tangent_bundle(g, I);
        } else if (bundle == "normal") {
            if (g < 2) throw std::invalid_argument("normal bundle needs g >= 2 (J undefined at g = 1)");
            B = normal_bundle(g, I, ParabolicSubset::klingen_J(g));
        } else if (bundle == "hodge") {
            B = hodge_bundle(g);
        } else {
            throw std::invalid_argument("unknown bundle '" + bundle +
                                        "' (expected tangent, normal or hodge)");
        }
        ordered_json j;
        j["g"] = g;
        j["bundle"] = B.name;
        j["rank"] = B.rank();
        ordered_json ws = ordered_json::array();
        for (const Weight& w : B.weights) {
            ordered_json e;
            e["weight"] = w.str();
            e["coordinates"] = w.coord;
            ws.push_back(e);
        }
        j["weights"] = ws;
        ordered_json cs = ordered_json::array();
        auto chern = chern_polynomial(B);
        for (std::size_t k = 0; k < chern.size(); ++k) {
            ordered_json e;
            e["k"] = k;
            e["class"] = chern[k].str();
            cs.push_back(e);
        }
        j["chern_classes"] = cs;
        rep.payload = j;
        rep.status = "pass";
    } catch (const std::exception& e) {
        return make_error("chern", params, e.what(), timer.seconds());
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

Report cmd_verify(int g, const std::string& which) {
    Timer timer;
    std::map<std::string, std::string> params{{"g", std::to_string(g)}, {"which", which}};
    if (which != "theorem" && which != "chern-vanishing" && which != "symm-lemma" &&
        which != "kernel" && which != "all")
        return make_error("verify", params, "unknown check '" + which + "'", timer.seconds());
    int cap = (which == "symm-lemma") ? kMaxRankSymmLemma
              : (which == "kernel")   ? kMaxRankKernel
                                      : kMaxRankPipeline;
    if (g < 1) return make_error("verify", params, "g must be >= 1", timer.seconds());
    if (g > cap)
        return make_error("verify", params,
                          "g exceeds the documented budget for this check (max " +
                              std::to_string(cap) + ")",
                          timer.seconds());

    Report rep;
    rep.command = "verify";
    rep.params = params;
    ordered_json j;
    j["g"] = g;
    bool all_pass = true;
    try {
        bool want_theorem = which == "theorem" || which == "all";
        bool want_chern = which == "chern-vanishing" || which == "all";
        bool want_symm = which == "symm-lemma" || which == "all";
        bool want_kernel = which == "kernel" || which == "all";
        if ((want_theorem || want_chern || want_kernel) && g < 2)
            throw std::invalid_argument(
                "this check needs g >= 2: J = Delta \\ {e_1-e_2} does not exist at g = 1, "
                "so the standard sub flag variety is undefined");
        if (want_kernel && g > kMaxRankKernel) {
            if (which == "kernel")
                throw std::invalid_argument("kernel check exceeds its budget (max " +
                                            std::to_string(kMaxRankKernel) + ")");
            want_kernel = false; // within "all", skip past the kernel budget
            j["kernel_skipped"] = "budget";
        }

        if (want_theorem) {
            TheoremReport tr = verify_theorem(g);
            j["theorem"] = theorem_json(tr);
            all_pass = all_pass && tr.passed;
        }
        if (want_chern) {
            auto I = ParabolicSubset::siegel_I(g);
            auto J = ParabolicSubset::klingen_J(g);
            auto sub = presentation_cache(g, J, I.intersect(J));
            Poly c_top = chern_class(normal_bundle(g, I, J), g);
            bool vanishes = sub->normal_form(c_top).is_zero();
            ordered_json e;
            e["c_top"] = c_top.str();
            e["vanishes_in_sub"] = vanishes;
            j["chern_vanishing"] = e;
            all_pass = all_pass && vanishes;
        }
        if (want_symm) {
            ordered_json rows = ordered_json::array();
            bool ok = true;
            for (int l = 1; l < g; ++l) {
                bool r = verify_symmetric_identity(g, l);
                ordered_json e;
                e["l"] = l;
                e["equal"] = r;
                rows.push_back(e);
                ok = ok && r;
            }
            j["symmetric_identity"] = rows;
            all_pass = all_pass && ok;
        }
        if (want_kernel) {
            auto full = ParabolicSubset::full(g);
            auto I = ParabolicSubset::siegel_I(g);
            auto J = ParabolicSubset::klingen_J(g);
            auto amb = presentation_cache(g, full, I);
            auto sub = presentation_cache(g, J, I.intersect(J));
            std::vector<KernelDegreeReport> rows;
            bool ok = kernel_generator_check(amb, sub, amb->dimension(), &rows);
            ordered_json table = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json e;
                e["degree"] = r.degree;
                e["dim_ambient"] = r.dim_amb;
                e["dim_sub"] = r.dim_sub;
                e["rank"] = r.rank;
                e["kernel_dim"] = r.kernel_dim;
                e["ideal_dim"] = r.ideal_dim;
                e["surjective"] = r.surjective;
                e["kernel_matches_ideal"] = r.kernel_matches_ideal;
                table.push_back(e);
            }
            j["kernel"] = table;
            all_pass = all_pass && ok;
        }
    } catch (const std::exception& e) {
        return make_error("verify", params, e.what(), timer.seconds());
    }
    rep.payload = j;
    rep.status = all_pass ? "pass" : "fail";
    rep.wall_seconds = timer.seconds();
    return rep;
}

Report cmd_table(int gmax) {
    Timer timer;
    std::map<std::string, std::string> params{{"gmax", std::to_string(gmax)}};
    if (gmax < 2) return make_error("table", params, "gmax must be >= 2", timer.seconds());
    if (gmax > kMaxRankPipeline)
        return make_error("table", params,
                          "gmax exceeds the documented budget (max " +
                              std::to_string(kMaxRankPipeline) + ")",
                          timer.seconds());
    Report rep;
    rep.command = "table";
    rep.params = params;
    ordered_json rows = ordered_json::array();
    bool all_pass = true;
    try {
        for (int g = 2; g <= gmax; ++g) {
            TheoremReport tr = verify_theorem(g);
            ordered_json e;
            e["g"] = g;
            e["dim"] = tr.dim_ambient;
            e["a"] = tr.a.str();
            e["sign"] = tr.a.sign() > 0 ? "+" : (tr.a.sign() < 0 ? "-" : "0");
            e["sign_check"] = tr.sign_ok;
            e["proportional"] = tr.proportional;
            rows.push_back(e);
            all_pass = all_pass && tr.passed;
        }
    } catch (const std::exception& e) {
        return make_error("table", params, e.what(), timer.seconds());
    }
    rep.payload = ordered_json{{"rows", rows}};
    rep.status = all_pass ? "pass" : "fail";
    rep.wall_seconds = timer.seconds();
    return rep;
}

} // namespace symchow
