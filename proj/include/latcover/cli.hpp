#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "latcover/surface.hpp"
#include "latcover/torus.hpp"

namespace latcover {

using Json = nlohmann::json;

// a parsed problem document: the kind selects the computation, the payload
// carries its data in a JSON object model with matrices as generator lists
struct ProblemSpec {
    std::string kind;
    Json payload;

    bool operator==(const ProblemSpec& o) const {
        return kind == o.kind && payload == o.payload;
    }
};

struct ReportItem {
    std::string name;
    std::string expected;  // empty for plain value rows
    std::string got;
    std::string anchor;    // which identity or structure the row speaks for

    bool passed() const { return expected.empty() || expected == got; }
};

struct Report {
    std::string status;  // "pass", "fail" or "value"
    std::vector<ReportItem> items;
};

inline int report_exit_code(const Report& r) { return r.status == "fail" ? 1 : 0; }

namespace detail {

[[noreturn]] inline void schema_error(const std::string& what) {
    throw std::invalid_argument("schema error: " + what);
}

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        schema_error(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

inline std::string field_string(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) schema_error(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

inline long long field_int(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer())
        schema_error(std::string("field \"") + name + "\" must be an integer");
    return v.get<long long>();
}

inline long long opt_int(const Json& j, const char* name, long long fallback) {
    if (!j.is_object() || !j.contains(name)) return fallback;
    if (!j.at(name).is_number_integer())
        schema_error(std::string("field \"") + name + "\" must be an integer");
    return j.at(name).get<long long>();
}

inline IntVec to_vec(const Json& v, const char* name) {
    if (!v.is_array())
        schema_error(std::string("field \"") + name + "\" must be an array of integers");
    IntVec out;
    out.reserve(v.size());
    for (const Json& x : v) {
        if (!x.is_number_integer())
            schema_error(std::string("field \"") + name + "\" must be an array of integers");
        out.push_back(Int(x.get<long long>()));
    }
    return out;
}

// a list of generator vectors, loaded as the columns of a matrix
inline IntMatrix to_gens(const Json& v, std::size_t rank, const char* name) {
    if (!v.is_array())
        schema_error(std::string("field \"") + name + "\" must be a list of generators");
    IntMatrix m(rank, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        IntVec g = to_vec(v.at(j), name);
        if (g.size() != rank)
            schema_error(std::string("generator ") + std::to_string(j) + " of \"" + name +
                         "\" must have length " + std::to_string(rank));
        for (std::size_t i = 0; i < rank; ++i) m.at(i, j) = g[i];
    }
    return m;
}

// contact data in the shared-rank form {rank, s: [tuple, ...]}
inline ContactVector to_contact(const Json& p) {
    long long rank = field_int(p, "rank");
    if (rank < 1) schema_error("field \"rank\" must be a positive integer");
    const Json& s = field(p, "s");
    if (!s.is_array() || s.empty()) schema_error("field \"s\" must be a nonempty array of tuples");
    ContactVector cv;
    for (const Json& comp : s) {
        IntVec tuple = to_vec(comp, "s");
        if (tuple.empty()) schema_error("contact tuples must be nonempty");
        cv.components.push_back(ContactComponent{static_cast<std::size_t>(rank), tuple});
    }
    cv.validate();
    return cv;
}

// contact data in the per-component form [{rank, s}, ...]; rank-0 components
// with an empty tuple are allowed here
inline ContactVector to_components(const Json& v, const char* name) {
    if (!v.is_array() || v.empty())
        schema_error(std::string("field \"") + name + "\" must be a nonempty component list");
    ContactVector cv;
    for (const Json& comp : v) {
        long long rank = field_int(comp, "rank");
        if (rank < 0) schema_error("component ranks must be nonnegative");
        cv.components.push_back(
            ContactComponent{static_cast<std::size_t>(rank), to_vec(field(comp, "s"), "s")});
    }
    cv.validate();
    return cv;
}

inline IntMatrix opt_gens(const Json& p, const char* name, std::size_t rank) {
    if (!p.contains(name)) return IntMatrix(rank, 0);
    return to_gens(p.at(name), rank, name);
}

inline ConvolutionSpec convolution_from_json(const Json& p) {
    if (p.contains("example")) {
        const Json& e = p.at("example");
        IntVec s1 = to_vec(field(e, "s1"), "s1");
        IntVec s2 = to_vec(field(e, "s2"), "s2");
        for (const Int& x : s1)
            if (x == 0) throw std::invalid_argument("contact entries must be nonzero");
        for (const Int& x : s2)
            if (x == 0) throw std::invalid_argument("contact entries must be nonzero");
        return make_product_example_spec(s1, s2);
    }
    ContactVector left = to_components(field(p, "left"), "left");
    ContactVector mid = to_components(field(p, "mid"), "mid");
    ContactVector right = to_components(field(p, "right"), "right");
    std::size_t nl = left.total_rank(), nm = mid.total_rank(), nr = right.total_rank();
    return make_convolution_spec(left, mid, right, opt_gens(p, "H1", nm), opt_gens(p, "H2", nm),
                                 to_gens(field(p, "pair12"), 2 * nm, "pair12"),
                                 opt_gens(p, "out12", nl + nr),
                                 opt_gens(p, "joint1", nl + nm), opt_gens(p, "joint2", nm + nr),
                                 to_gens(field(p, "lift12"), nl + 2 * nm + nr, "lift12"));
}

inline ConvolutionInput convolution_input_from_json(const Json& p, const ConvolutionSpec& cs) {
    const Json& in_j = field(p, "input");
    ConvolutionInput in;
    long long j1 = field_int(in_j, "j1"), j2 = field_int(in_j, "j2");
    if (j1 < 0 || j2 < 0) schema_error("sheet indices must be nonnegative");
    in.j1 = static_cast<std::size_t>(j1);
    in.j2 = static_cast<std::size_t>(j2);
    in.gamma = to_vec(field(in_j, "gamma"), "gamma");
    in.twist_left = in_j.contains("twist_left") ? to_vec(in_j.at("twist_left"), "twist_left")
                                                : IntVec(cs.dl);
    in.twist_right = in_j.contains("twist_right") ? to_vec(in_j.at("twist_right"), "twist_right")
                                                  : IntVec(cs.dr);
    return in;
}

inline void validate_payload(const std::string& kind, const Json& p) {
    if (!p.is_object()) schema_error("payload must be an object");
    if (kind == "deck") {
        ContactVector cv = to_contact(p);
        if (p.contains("H")) to_gens(p.at("H"), cv.total_rank(), "H");
    } else if (kind == "psi") {
        ContactVector cv = to_contact(p);
        std::size_t n = cv.total_rank();
        if (p.contains("H1")) to_gens(p.at("H1"), n, "H1");
        if (p.contains("H2")) to_gens(p.at("H2"), n, "H2");
        to_gens(field(p, "H12"), n, "H12");
        if (to_vec(field(p, "gamma"), "gamma").size() != cv.domain_rank())
            schema_error("field \"gamma\" must have the twist-domain length " +
                         std::to_string(cv.domain_rank()));
        if (field_int(p, "j1") < 0 || field_int(p, "j2") < 0)
            schema_error("sheet indices must be nonnegative");
    } else if (kind == "convolve") {
        ConvolutionSpec cs = convolution_from_json(p);
        ConvolutionInput in = convolution_input_from_json(p, cs);
        if (in.gamma.size() != cs.dm || in.twist_left.size() != cs.dl ||
            in.twist_right.size() != cs.dr)
            schema_error("input twists must match the contact twist domains");
    } else if (kind == "series") {
        std::string family = field_string(p, "family");
        static const std::set<std::string> families{"G", "eta12", "F", "H"};
        if (!families.count(family)) schema_error("unknown series family \"" + family + "\"");
        if (family == "F") {
            if (field_int(p, "genus") < 0) schema_error("field \"genus\" must be nonnegative");
        } else if (p.contains("genus")) {
            schema_error("field \"genus\" only applies to family F");
        }
        if (opt_int(p, "order", 0) < 0) schema_error("field \"order\" must be nonnegative");
    } else if (kind == "verify") {
        std::string suite = field_string(p, "suite");
        static const std::set<std::string> suites{"snf",         "equivariance", "convolution",
                                                  "bryan-leung", "trr",          "sympsum"};
        if (!suites.count(suite)) schema_error("unknown verify suite \"" + suite + "\"");
        if (opt_int(p, "order", 0) < 0) schema_error("field \"order\" must be nonnegative");
        if (opt_int(p, "trials", 0) < 0) schema_error("field \"trials\" must be nonnegative");
        if (opt_int(p, "seed", 0) < 0) schema_error("field \"seed\" must be nonnegative");
    }
}

}  // namespace detail

inline void validate_problem_spec(const ProblemSpec& spec) {
    static const std::set<std::string> kinds{"deck", "psi", "convolve", "series", "verify"};
    if (!kinds.count(spec.kind)) detail::schema_error("unknown kind \"" + spec.kind + "\"");
    detail::validate_payload(spec.kind, spec.payload);
}

inline ProblemSpec parse_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("malformed document: top level must be an object");
    if (!j.contains("kind")) detail::schema_error("missing field \"kind\"");
    if (!j.at("kind").is_string()) detail::schema_error("field \"kind\" must be a string");
    ProblemSpec spec;
    spec.kind = j.at("kind").get<std::string>();
    spec.payload = std::move(j);
    spec.payload.erase("kind");
    validate_problem_spec(spec);
    return spec;
}

inline std::string print_spec(const ProblemSpec& spec) {
    Json j = spec.payload;
    j["kind"] = spec.kind;
    return j.dump(2) + "\n";
}

inline std::string render_text(const Report& r) {
    std::string out;
    for (const ReportItem& it : r.items) {
        if (it.expected.empty())
            out += it.name + ": " + it.got + "\n";
        else if (it.passed())
            out += "[ ok ] " + it.name + ": " + it.got + "  (" + it.anchor + ")\n";
        else
            out += "[FAIL] " + it.name + ": expected " + it.expected + ", got " + it.got +
                   "  (" + it.anchor + ")\n";
    }
    out += "status: " + r.status + "\n";
    return out;
}

inline std::string render_json(const Report& r) {
    Json j;
    j["status"] = r.status;
    j["items"] = Json::array();
    for (const ReportItem& it : r.items)
        j["items"].push_back(Json{{"name", it.name},
                                  {"expected", it.expected},
                                  {"got", it.got},
                                  {"anchor", it.anchor},
                                  {"passed", it.passed()}});
    return j.dump(2) + "\n";
}

namespace detail {

inline Report finish_report(std::vector<ReportItem> items, bool value_report) {
    Report r;
    r.items = std::move(items);
    bool all = true;
    for (const ReportItem& it : r.items) all = all && it.passed();
    r.status = !all ? "fail" : value_report ? "value" : "pass";
    return r;
}

inline Report run_deck(const Json& p) {
    ContactVector cv = to_contact(p);
    std::size_t n = cv.total_rank();
    CoverSpec c = make_cover_spec(cv, opt_gens(p, "H", n));
    const DeckGroupDescriptor& dg = c.deck;

    std::vector<ReportItem> items;
    items.push_back({"deck group", "", dg.display(), "deck transformation group"});
    items.push_back({"quotient part", "",
                     "invariant factors " + vec_to_string(dg.quotient_part.torsion()) +
                         ", free rank " + std::to_string(dg.quotient_part.free_rank()),
                     "component group of the cover"});
    std::string sub = "invariant factors " + vec_to_string(dg.subgroup_part.torsion) +
                      ", free rank " + std::to_string(dg.subgroup_part.free_rank);
    if (dg.subgroup_part.embedding_known)
        sub += ", embedding divisors " + vec_to_string(dg.subgroup_part.embedding_divisors);
    items.push_back({"subgroup part", "", sub, "lattice part of the deck group"});
    return finish_report(std::move(items), true);
}

inline Report run_psi(const Json& p) {
    ContactVector cv = to_contact(p);
    std::size_t n = cv.total_rank();
    CoverSpec side1 = make_cover_spec(cv, opt_gens(p, "H1", n));
    CoverSpec side2 = make_cover_spec(cv, opt_gens(p, "H2", n));
    DiagPairSpec dp = make_diag_pair(std::move(side1), std::move(side2),
                                     to_gens(field(p, "H12"), n, "H12"));
    IntVec gamma = to_vec(field(p, "gamma"), "gamma");
    QuotElement psi = psi_value(dp, gamma, static_cast<std::size_t>(field_int(p, "j1")),
                                static_cast<std::size_t>(field_int(p, "j2")));

    std::vector<ReportItem> items;
    items.push_back({"sheet difference class", "", vec_to_string(psi.rep),
                     "diagonal component of the fiber pair"});
    return finish_report(std::move(items), true);
}

inline Report run_convolve(const Json& p) {
    ConvolutionSpec cs = convolution_from_json(p);
    if (auto bad = validate_convolution_spec(cs))
        throw std::invalid_argument("invalid convolution data: " + *bad);
    ConvolutionOutput out = convolve(cs, convolution_input_from_json(p, cs));

    std::vector<ReportItem> items;
    items.push_back({"output sheet index", "", std::to_string(out.j_out),
                     "sheet of the convolved cover"});
    items.push_back({"output twist", "", vec_to_string(out.twist),
                     "carried twist of the convolved cover"});
    return finish_report(std::move(items), true);
}

inline Report run_series(const Json& p) {
    std::string family = field_string(p, "family");
    std::size_t order = static_cast<std::size_t>(opt_int(p, "order", 30));
    PowerSeries f;
    std::string anchor;
    if (family == "G") {
        f = g_series(order);
        anchor = "divisor-sum series";
    } else if (family == "eta12") {
        f = eta_inv12(order);
        anchor = "inverse twelfth power of the eta product";
    } else if (family == "F") {
        std::size_t g = static_cast<std::size_t>(field_int(p, "genus"));
        f = f_g_closed(g, order);
        anchor = "genus-" + std::to_string(g) + " counting series";
    } else {
        f = h_from_trr(f0_from_ode(order), g_series(order));
        anchor = "genus-1 fiber-insertion series";
    }
    std::vector<ReportItem> items;
    for (std::size_t d = 0; d <= order; ++d)
        items.push_back({"q^" + std::to_string(d), "", rat_to_string(f[d]), anchor});
    return finish_report(std::move(items), true);
}

// counts failing trials and remembers the first offender
struct TrialTally {
    long failures = 0;
    long first = -1;

    void record(bool ok, long trial) {
        if (ok) return;
        if (failures == 0) first = trial;
        ++failures;
    }

    ReportItem item(const std::string& name, long trials, const std::string& anchor) const {
        std::string want = std::to_string(trials) + "/" + std::to_string(trials) + " trials";
        std::string have = failures == 0
                               ? want
                               : std::to_string(trials - failures) + "/" +
                                     std::to_string(trials) + " trials, first failure at trial " +
                                     std::to_string(first);
        return ReportItem{name, want, have, anchor};
    }
};

inline Report verify_snf(long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TrialTally product, unimodular, chain, inverse;
    for (long t = 0; t < trials; ++t) {
        std::size_t rows = 1 + draw_below(rng, 6), cols = 1 + draw_below(rng, 6);
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = draw_int(rng, -50, 50);
        SnfDecomposition s = smith_normal_form(a);

        product.record(s.u * a * s.v == s.d, t);
        unimodular.record(int_abs(determinant(s.u)) == 1 && int_abs(determinant(s.v)) == 1, t);
        IntVec diag = s.diagonal();
        bool ok = true;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] < 0) ok = false;
            if (i + 1 < diag.size()) {
                if (diag[i] == 0 && diag[i + 1] != 0) ok = false;
                if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) ok = false;
            }
        }
        chain.record(ok, t);
        inverse.record(s.u * s.u_inv == IntMatrix::identity(rows), t);
    }
    std::vector<ReportItem> items{
        product.item("decomposition product", trials, "change of basis reaches the diagonal"),
        unimodular.item("unimodularity", trials, "both basis changes are invertible over Z"),
        chain.item("divisibility chain", trials, "each invariant factor divides the next"),
        inverse.item("recorded inverse", trials, "row operations tracked consistently"),
    };
    return finish_report(std::move(items), false);
}

inline ContactVector random_contact(std::mt19937_64& rng) {
    ContactVector cv;
    std::size_t ncomp = 1 + draw_below(rng, 2);
    for (std::size_t r = 0; r < ncomp; ++r) {
        std::size_t rank = 1 + draw_below(rng, 2);
        std::size_t len = 1 + draw_below(rng, 2);
        cv.components.push_back(ContactComponent{rank, draw_nonzero_tuple(rng, len, 5)});
    }
    return cv;
}

inline IntMatrix random_gens(std::mt19937_64& rng, std::size_t n, std::size_t max_cols,
                             long bound) {
    std::size_t k = draw_below(rng, max_cols + 1);
    IntMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = draw_int(rng, -bound, bound);
    return m;
}

inline Report verify_equivariance(long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TrialTally side1_shift, side2_shift, composition, base_anchor;
    for (long t = 0; t < trials; ++t) {
        ContactVector cv = random_contact(rng);
        std::size_t n = cv.total_rank();
        IntMatrix h1 = random_gens(rng, n, 2, 3);
        IntMatrix h2 = random_gens(rng, n, 2, 3);
        CoverSpec s1 = make_cover_spec(cv, h1);
        CoverSpec s2 = make_cover_spec(cv, h2);
        DiagPairSpec dp = make_diag_pair(s1, s2, hconcat(h1, h2));

        std::size_t j1 = draw_below(rng, static_cast<long>(s1.coset_system().size()));
        std::size_t j2 = draw_below(rng, static_cast<long>(s2.coset_system().size()));
        IntVec gamma = draw_vec(rng, cv.domain_rank(), 4);
        IntVec eta = draw_vec(rng, n, 4);
        QuotElement psi = psi_value(dp, gamma, j1, j2);

        ThetaStep st1 = theta_data(s1.coset_system(), s1.phi, s1.h, eta, j1);
        QuotElement moved1 = psi_value(dp, vec_add(gamma, st1.twist_shift), st1.new_index, j2);
        side1_shift.record(moved1.rep == dp.r_h12.normal_form(vec_add(psi.rep, eta)), t);

        ThetaStep st2 = theta_data(s2.coset_system(), s2.phi, s2.h, eta, j2);
        QuotElement moved2 = psi_value(dp, vec_sub(gamma, st2.twist_shift), j1, st2.new_index);
        side2_shift.record(moved2.rep == dp.r_h12.normal_form(vec_sub(psi.rep, eta)), t);

        SymbolicPoint p = symbolic_point(s1, j1, draw_vec(rng, cv.domain_rank(), 4));
        IntVec eta2 = draw_vec(rng, n, 4);
        composition.record(deck_apply(s1, vec_add(eta, eta2), p) ==
                               deck_apply(s1, eta, deck_apply(s1, eta2, p)),
                           t);

        IntVec a_base = draw_vec(rng, n, 4);
        base_anchor.record(glue_degree(a_base, psi, dp, gamma, j1, j2) == a_base, t);
    }
    std::vector<ReportItem> items{
        side1_shift.item("side-1 residual action", trials,
                         "sheet difference shifts by the acting class"),
        side2_shift.item("side-2 residual action", trials,
                         "sheet difference shifts by minus the acting class"),
        composition.item("deck action composition", trials,
                         "residual action is a group action"),
        base_anchor.item("gluing degree base anchor", trials,
                         "base pair reproduces the base degree"),
    };
    return finish_report(std::move(items), false);
}

inline Report verify_convolution(long trials, std::uint64_t seed) {
    CrossValidationReport cv = cross_validate_convolution(
        static_cast<std::size_t>(trials), static_cast<std::size_t>(trials) / 2, seed);
    std::string got = std::to_string(cv.mismatches) + " mismatches";
    if (cv.mismatches > 0) got += " (" + cv.first_mismatch + ")";
    std::vector<ReportItem> items{
        {"equivalence trials run", "", std::to_string(cv.equivalence_trials),
         "symbolic convolution against the rational model"},
        {"representative moves run", "", std::to_string(cv.perturbation_trials),
         "twist-lattice moves leaving the output fixed"},
        {"mismatches", "0 mismatches", got, "the two pipelines compute the same product"},
    };
    return finish_report(std::move(items), false);
}

inline ReportItem series_check_item(const std::string& name, const SeriesCheck& chk,
                                    std::size_t order, const std::string& anchor) {
    std::string want = "equal to order " + std::to_string(order);
    std::string have = chk.ok ? want
                              : "first mismatch at q^" + std::to_string(chk.degree) +
                                    ": expected " + rat_to_string(chk.expected) + ", got " +
                                    rat_to_string(chk.got);
    return ReportItem{name, want, have, anchor};
}

inline Report verify_bryan_leung(std::size_t order) {
    PowerSeries f0 = f0_from_ode(order);
    PowerSeries g = g_series(order);
    PowerSeries h = h_from_trr(f0, g);

    std::vector<ReportItem> items;
    items.push_back(series_check_item("genus-0 series, ODE route against closed form",
                                      compare_series(eta_inv12(order), f0), order,
                                      "Bryan-Leung genus-0 closed form"));
    items.push_back(series_check_item("genus-1 fiber-insertion series, two expressions",
                                      compare_series(h_from_sum(f0, g), h), order,
                                      "the two displayed combinations agree"));
    items.push_back({"constant term", "-1/12", rat_to_string(h[0]),
                     "value at fiber degree zero"});
    items.push_back(series_check_item("logarithmic derivative identity",
                                      verify_log_derivative_identity(order), order,
                                      "divisor sums from the eta product"));
    return finish_report(std::move(items), false);
}

inline Report verify_trr(std::size_t order) {
    SurfaceData pt = make_p1t2();
    IntVec section = pt.sections[0];

    Rat d0 = trr_genus1(pt, section, pt.fiber, p1t2_gw0_table(0), p1t2_gw1_table(0));
    ReportItem lead{"product model, fiber degree 0", "-1/12", rat_to_string(d0),
                    "degree-zero value of the genus-1 recursion"};

    TrialTally values;
    for (std::size_t d = 1; d <= order; ++d) {
        IntVec a = vec_add(section, vec_scale(Int(d), pt.fiber));
        Rat got = trr_genus1(pt, a, pt.fiber, p1t2_gw0_table(Int(d)), p1t2_gw1_table(Int(d)));
        values.record(got == Rat(2 * sigma(Int(d))), static_cast<long>(d));
    }
    ReportItem vals = values.item("product model, fiber degrees 1.." + std::to_string(order),
                                  static_cast<long>(order),
                                  "recursion values are twice the divisor sums");

    SurfaceData p9 = make_p9();
    PowerSeries f0 = f0_from_ode(order);
    PowerSeries h = h_from_trr(f0, g_series(order));
    TrialTally series_match;
    for (std::size_t d = 0; d <= order; ++d) {
        IntVec a = vec_add(p9.sections[0], vec_scale(Int(d), p9.fiber));
        Rat got = trr_genus1(p9, a, p9.fiber, p9_gw0_table(f0, Int(d)), p9_gw1_table(Int(d)));
        series_match.record(got == h[d], static_cast<long>(d));
    }
    ReportItem gen = series_match.item("elliptic model, series assembled degree by degree",
                                       static_cast<long>(order + 1),
                                       "recursion reproduces the genus-1 series");

    return finish_report({lead, vals, gen}, false);
}

inline Report verify_sympsum(std::size_t order) {
    std::vector<ReportItem> items;
    for (std::size_t g = 1; g <= 5; ++g)
        items.push_back(series_check_item("splitting sum at genus " + std::to_string(g),
                                          sympsum_check_g(g, order), order,
                                          "genus step assembled from the splitting sum"));
    SeriesCheck neg = sympsum_check_g(1, order, Rat(1));
    std::string got = neg.ok ? "no mismatch" : "mismatch at q^" + std::to_string(neg.degree);
    items.push_back({"stand-in for the vanishing relative term", "mismatch at q^0", got,
                     "the dropped sum is genuinely absent"});
    return finish_report(std::move(items), false);
}

}  // namespace detail

inline Report run(const ProblemSpec& spec) {
    const Json& p = spec.payload;
    if (spec.kind == "deck") return detail::run_deck(p);
    if (spec.kind == "psi") return detail::run_psi(p);
    if (spec.kind == "convolve") return detail::run_convolve(p);
    if (spec.kind == "series") return detail::run_series(p);

    std::string suite = detail::field_string(p, "suite");
    std::size_t order = static_cast<std::size_t>(detail::opt_int(p, "order", 30));
    std::uint64_t seed = static_cast<std::uint64_t>(detail::opt_int(p, "seed", 0));
    if (suite == "snf") return detail::verify_snf(detail::opt_int(p, "trials", 1000), seed);
    if (suite == "equivariance")
        return detail::verify_equivariance(detail::opt_int(p, "trials", 1000), seed);
    if (suite == "convolution")
        return detail::verify_convolution(detail::opt_int(p, "trials", 500), seed);
    if (suite == "bryan-leung") return detail::verify_bryan_leung(order);
    if (suite == "trr") return detail::verify_trr(order);
    return detail::verify_sympsum(order);
}

}  // namespace latcover
