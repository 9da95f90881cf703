#include <CLI11.hpp>
#include <json.hpp>

#include <h3/discrete.hpp>
#include <h3/gauge.hpp>
#include <h3/hiddenalg.hpp>
#include <h3/integral.hpp>
#include <h3/invariants.hpp>
#include <h3/qes.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

using njson = nlohmann::json;
using namespace h3;

struct RunConfig {
    bool formal = false;
    Golden nu, om;
    Spacings delta = Spacings::unit();
    unsigned n = 6;
    std::string nu_text, om_text, delta_text;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const std::string& flag) {
    static const std::regex shape(R"(-?\d+(/\d+)?)");
    if (!std::regex_match(text, shape))
        throw UsageError(flag + ": expected p or p/q, got '" + text + "'");
    mpq_class v(text);
    if (v.get_den() == 0) throw UsageError(flag + ": zero denominator");
    v.canonicalize();
    return v;
}

RunConfig make_config(const std::string& nu_text, const std::string& om_text,
                      const std::string& delta_text, unsigned n) {
    RunConfig cfg;
    cfg.nu_text = nu_text;
    cfg.om_text = om_text;
    cfg.delta_text = delta_text;
    cfg.n = n;
    cfg.formal = nu_text == "formal";
    if (!cfg.formal) cfg.nu = Golden(parse_rational(nu_text, "--nu"));
    cfg.om = Golden(parse_rational(om_text, "--om"));

    std::vector<std::string> parts;
    std::stringstream ss(delta_text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--delta: expected three comma-separated steps");
    try {
        cfg.delta = Spacings(parse_rational(parts[0], "--delta"),
                             parse_rational(parts[1], "--delta"),
                             parse_rational(parts[2], "--delta"));
    } catch (const Error& e) {
        throw UsageError(std::string("--delta: ") + e.what());
    }
    return cfg;
}

struct CheckResult {
    std::string status;  // pass | fail | diff-reported
    std::string details;
    njson data = njson::object();
};

struct Check {
    const char* id;
    const char* suite;
    bool numeric_only;
    std::function<CheckResult(const RunConfig&)> run;
};

CheckResult pass(std::string details, njson data = njson::object()) {
    return {"pass", std::move(details), std::move(data)};
}

njson shift_json(const ShiftVec& k) { return njson::array({k[0], k[1], k[2]}); }

CheckResult table_check(const RunConfig& cfg, bool hamiltonian) {
    ShiftOperator derived =
        discretize(hamiltonian ? build_h_formal() : build_f_formal(), cfg.delta);
    std::array<std::size_t, 3> footprint =
        hamiltonian ? std::array<std::size_t, 3>{4, 6, 4} : std::array<std::size_t, 3>{4, 6, 5};
    TableDiff diff = compare_tables(
        derived, hamiltonian ? reference_h_table(cfg.delta) : reference_f_table(cfg.delta),
        footprint);

    njson entries = njson::array();
    for (const EntryDiff& e : diff.entries)
        if (!e.equal)
            entries.push_back({{"shift", shift_json(e.shift)},
                               {"derived", e.derived},
                               {"tabulated", e.tabulated}});
    std::ostringstream os;
    os << "22 shifts, footprint " << footprint[0] << "x" << footprint[1] << "x"
       << footprint[2] << "; " << diff.matching << " match, " << diff.differing
       << " differ, " << diff.derived_only << " derived-only, " << diff.tabulated_only
       << " tabulated-only";
    njson data{{"matching", diff.matching},
               {"differing", diff.differing},
               {"derived_only", diff.derived_only},
               {"tabulated_only", diff.tabulated_only},
               {"diffs", entries}};
    if (entries.empty()) return pass(os.str(), data);
    return {"diff-reported", os.str(), data};
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {"group.order", "group", false,
         [](const RunConfig&) {
             const Group& g = Group::instance();
             std::size_t refl = g.reflections().size();
             if (g.order() != 120 || refl != 15)
                 return CheckResult{"fail", "unexpected group size", {}};
             return pass("order 120, 15 reflections",
                         {{"order", g.order()}, {"reflections", refl}});
         }},
        {"group.orbits", "group", false,
         [](const RunConfig&) {
             const Group& g = Group::instance();
             std::size_t o1 = orbit(g, weight1()).size();
             std::size_t o2 = orbit(g, weight2()).size();
             std::size_t o3 = orbit(g, weight3()).size();
             if (o1 != 12 || o2 != 20 || o3 != 30)
                 return CheckResult{"fail", "unexpected orbit sizes", {}};
             return pass("orbit sizes 12, 20, 30",
                         {{"w1", o1}, {"w2", o2}, {"w3", o3}});
         }},
        {"invariants.fixed", "invariants", false,
         [](const RunConfig&) {
             const Group& g = Group::instance();
             const TauBasis& tb = TauBasis::instance();
             for (const MultiPoly& t : tb.list())
                 if (!is_invariant(g, t))
                     return CheckResult{"fail", "basis polynomial moved", {}};
             return pass("tau1, tau2, tau3 fixed by all 120 elements",
                         {{"degrees", {2, 6, 10}}});
         }},
        {"invariants.orbit-mixing", "invariants", false,
         [](const RunConfig&) {
             OrbitRelation r = relate_orbit_invariants(orbit(Group::instance(), weight1()));
             return pass("degree 2, 6, 10 orbit averages line up with the basis",
                         {{"A", str(r.A)}, {"B", str(r.B)}, {"C", str(r.C)}});
         }},
        {"invariants.boundary", "invariants", false,
         [](const RunConfig&) {
             BoundaryReport r = boundary_check();
             return pass("J^2 decomposes onto the boundary polynomial",
                         {{"mirror_factor", str(r.mirror_factor)},
                          {"boundary_factor", str(r.boundary_factor)}});
         }},
        {"hamiltonian.ground-state", "hamiltonian", false,
         [](const RunConfig& cfg) {
             ground_state_identities();
             if (cfg.formal)
                 return pass("harmonicity and mirror identities hold",
                             {{"E0", "(3/2) om (1 + 10 nu)"}});
             Golden e0 = ground_energy(cfg.nu, cfg.om);
             return pass("harmonicity and mirror identities hold; E0 = " + str(e0),
                         {{"E0", str(e0)}});
         }},
        {"hamiltonian.metric", "hamiltonian", false,
         [](const RunConfig&) {
             compare_metric();
             return pass("all 6 second-order coefficients match the table");
         }},
        {"hamiltonian.drift", "hamiltonian", false,
         [](const RunConfig&) {
             compare_drift();
             return pass("all 3 first-order coefficients match the table");
         }},
        {"spectrum.levels", "spectrum", true,
         [](const RunConfig& cfg) {
             const VariableSpace* T = VariableSpace::tau3();
             FlagSpace flag = FlagSpace::build(T, {1, 2, 3}, cfg.n);
             DiffOperator h = build_h(cfg.nu, cfg.om);

             std::map<std::string, std::size_t> lattice;
             for (const Mono& p : flag.basis) {
                 Golden eps = Golden(2) * cfg.om *
                              Golden(long(p[0]) + 3 * long(p[1]) + 5 * long(p[2]));
                 ++lattice[str(Golden(-2) * eps)];
             }
             std::size_t total = 0;
             njson levels = njson::array();
             for (const EigenLevel& lv : spectrum(h, flag)) {
                 auto it = lattice.find(str(lv.lambda));
                 if (it == lattice.end() || it->second != lv.algebraic)
                     return CheckResult{"fail",
                                        "level " + str(lv.lambda) + " off the lattice",
                                        {}};
                 total += lv.algebraic;
                 levels.push_back({{"lambda", str(lv.lambda)},
                                   {"multiplicity", lv.algebraic}});
             }
             if (total != flag.dim())
                 return CheckResult{"fail", "spectrum does not exhaust the flag", {}};

             std::vector<Golden> c1 = flag_matrix(h, flag).charpoly();
             std::vector<Golden> c2 =
                 flag_matrix(build_h(cfg.nu + Golden(1), cfg.om), flag).charpoly();
             if (c1 != c2)
                 return CheckResult{"fail", "spectrum depends on the coupling", {}};
             return pass("oscillator lattice reproduced on the level-" +
                             std::to_string(cfg.n) + " flag, coupling-independent",
                         {{"dimension", flag.dim()}, {"levels", levels}});
         }},
        {"spectrum.eigenfunctions", "spectrum", true,
         [](const RunConfig& cfg) {
             compare_reference(cfg.nu, cfg.om);
             std::size_t count = reference_eigenfunctions(cfg.nu, cfg.om).size();
             return pass("closed-form eigenfunctions reproduced up to scale",
                         {{"count", count}});
         }},
        {"integral.commute", "integral", false,
         [](const RunConfig&) {
             verify_commutation(build_h_formal(), build_f_formal());
             return pass("[h, f] = 0 identically in the couplings");
         }},
        {"integral.gamma-labels", "integral", true,
         [](const RunConfig& cfg) {
             GammaLabeling lab = label_spectrum(cfg.nu, cfg.om, cfg.n);
             njson data{{"tabulated_rotated", lab.tabulated_rotated},
                        {"tabulated_offset", lab.tabulated_offset},
                        {"separable_rotated", lab.separable_rotated},
                        {"separable_offset", lab.separable_offset},
                        {"states", lab.rows.size()},
                        {"mismatches", lab.mismatches}};
             if (!lab.separable_rotated || !lab.bijective)
                 return CheckResult{"fail", "no closed form labels the spectrum", data};
             if (!lab.mismatches.empty()) {
                 std::ostringstream os;
                 os << "rotated separable form labels every state; tabulated display "
                       "disagrees on "
                    << lab.mismatches.size() << " state(s)";
                 return CheckResult{"diff-reported", os.str(), data};
             }
             return pass("rotated separable form labels every state, offset rejected",
                         data);
         }},
        {"discrete.h-table", "discrete", false,
         [](const RunConfig& cfg) { return table_check(cfg, true); }},
        {"discrete.f-table", "discrete", false,
         [](const RunConfig& cfg) { return table_check(cfg, false); }},
        {"discrete.isospectral", "discrete", true,
         [](const RunConfig& cfg) {
             SpectrumCertificate cert =
                 discrete_spectrum_check(cfg.n, cfg.delta, cfg.nu, cfg.om);
             return pass("shared characteristic polynomial; " +
                             std::to_string(cert.transferred) +
                             " eigenfunctions transferred through quasi-monomials",
                         {{"dimension", cert.dimension},
                          {"transferred", cert.transferred}});
         }},
        {"discrete.commute", "discrete", true,
         [](const RunConfig& cfg) {
             CommutationCertificate cert =
                 discrete_commutation(cfg.delta, cfg.nu, cfg.om, 5);
             if (!cert.operator_identity)
                 return CheckResult{"fail", "discretized pair stopped commuting", {}};
             return pass("operator identity holds; annihilates the level-5 flag",
                         {{"annihilated", cert.annihilated}});
         }},
        {"qes.ladder", "qes", true,
         [](const RunConfig&) {
             for (unsigned k = 0; k <= 3; ++k) {
                 SL2Triple t = sl2_triple(k);
                 if (t.zero.commutator(t.plus) != t.plus ||
                     !(t.zero.commutator(t.minus) + t.minus == OneVarOperator()) ||
                     t.minus.commutator(t.plus) != Golden(2) * t.zero)
                     return CheckResult{"fail",
                                        "ladder relations broke at mark " +
                                            std::to_string(k),
                                        {}};
             }
             return pass("sl(2) relations exact for marks 0..3");
         }},
        {"qes.gauge", "qes", true,
         [](const RunConfig& cfg) {
             njson constants = njson::array();
             for (unsigned k = 0; k <= 3; ++k) {
                 GaugeCertificate c = qes_gauge_check(
                     QESParams(rational(1, 2), rational(1, 4), k), cfg.nu, cfg.om);
                 constants.push_back(str(c.dropped_constant));
             }
             return pass("rotation and ladder constructions agree up to a constant",
                         {{"dropped_constants", constants}});
         }},
        {"qes.blocks", "qes", true,
         [](const RunConfig& cfg) {
             njson blocks = njson::array();
             for (unsigned k = 0; k <= 3; ++k) {
                 QESParams qp(rational(1, 2), rational(1, 4), k);
                 PreservationReport pr = invariant_subspace_check(qp, cfg.nu, cfg.om);
                 if (pr.preserved_dim != k + 1)
                     return CheckResult{"fail", "block dimension off", {}};
                 njson entry{{"k", k},
                             {"escape_coeff", str(pr.escape_coeff)}};
                 if (k <= 1) {
                     BlockSpectrum bs = block_spectrum(qp, cfg.nu, cfg.om);
                     njson cp = njson::array();
                     for (const Golden& c : bs.charpoly) cp.push_back(str(c));
                     entry["charpoly"] = cp;
                     entry["ground_energy"] = str(bs.ground_energy);
                 }
                 blocks.push_back(entry);
             }
             return pass("blocks preserved with escape witnesses; small marks solved",
                         {{"blocks", blocks}});
         }},
        {"qes.laguerre", "qes", true,
         [](const RunConfig& cfg) {
             njson eigenvalues = njson::array();
             for (unsigned n1 = 0; n1 <= 5; ++n1) {
                 LaguerreCertificate cert = laguerre_check(n1, cfg.nu, cfg.om);
                 if (cert.eigenvalue != Golden(4) * cfg.om * Golden(long(n1)))
                     return CheckResult{"fail",
                                        "eigenvalue off at n1 = " + std::to_string(n1),
                                        {}};
                 eigenvalues.push_back(str(cert.eigenvalue));
             }
             return pass("residuals vanish for n1 <= 5, eigenvalues 4 om n1",
                         {{"eigenvalues", eigenvalues}});
         }},
        {"algebra.flag", "algebra", false,
         [](const RunConfig&) {
             GeneratorCatalog cat = build_catalog(3);
             FlagReport rep = flag_behavior_check(cat, {2, 3, 4, 5});
             njson escapes = njson::object();
             for (const auto& [name, e] : rep.escapes)
                 escapes[name] = {{"level", e.first}, {"witness", e.second}};
             return pass("21 generators preserve every sampled level; "
                         "8 raising generators escape away from their own",
                         {{"preserved_images", rep.preserved_images},
                          {"escapes", escapes}});
         }},
        {"algebra.abelian", "algebra", false,
         [](const RunConfig&) {
             AbelianReport rep = abelian_checks(build_catalog(3), subalgebra_table());
             if (rep.pairs_checked != 22)
                 return CheckResult{"fail", "unexpected family sizes", {}};
             return pass("22 commuting pairs across the ten families",
                         {{"pairs", rep.pairs_checked}});
         }},
        {"algebra.structure", "algebra", false,
         [](const RunConfig&) {
             StructureReport rep = structure_checks(build_catalog(3), subalgebra_table());
             if (rep.zero_pairs != 64 || rep.span_members != 32 ||
                 rep.polynomial_members != 37 || !rep.core_closes ||
                 !rep.core_gl2_structure)
                 return CheckResult{"fail", "structure counts off", {}};
             return pass("64 vanishing pairs, 32 span members, 37 envelope members; "
                         "core closes as gl(2) plus two center lines",
                         {{"zero_pairs", rep.zero_pairs},
                          {"span_members", rep.span_members},
                          {"polynomial_members", rep.polynomial_members}});
         }},
        {"algebra.h-decomposition", "algebra", true,
         [](const RunConfig& cfg) {
             h_decomposition_check(cfg.nu, cfg.om);
             return pass("hamiltonian reassembles exactly from flag generators");
         }},
    };
    return checks;
}

const std::vector<std::string>& suite_order() {
    static const std::vector<std::string> order = {
        "group",    "invariants", "hamiltonian", "spectrum",
        "integral", "discrete",   "qes",         "algebra"};
    return order;
}

njson config_json(const RunConfig& cfg, const std::vector<std::string>& suites) {
    return njson{{"nu", cfg.nu_text},
                 {"om", cfg.om_text},
                 {"delta", cfg.delta_text},
                 {"n", cfg.n},
                 {"suites", suites}};
}

int run_verify(const RunConfig& cfg, std::vector<std::string> suites,
               const std::string& format, const std::string& report_path) {
    bool all = false;
    for (const std::string& s : suites) all = all || s == "all";
    if (all) suites = suite_order();

    auto selected = [&](const char* suite) {
        for (const std::string& s : suites)
            if (s == suite) return true;
        return false;
    };

    njson checks = njson::array();
    std::size_t n_pass = 0, n_fail = 0, n_diff = 0;
    std::ostringstream text;
    for (const std::string& suite : suite_order()) {
        if (!selected(suite.c_str())) continue;
        for (const Check& c : registry()) {
            if (suite != c.suite) continue;
            if (cfg.formal && c.numeric_only) continue;
            auto begin = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = c.run(cfg);
            } catch (const Error& e) {
                r = {"fail", e.what(), njson::object()};
            } catch (const std::exception& e) {
                r = {"fail", std::string("unexpected: ") + e.what(), njson::object()};
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - begin)
                          .count();
            if (r.status == "pass") ++n_pass;
            else if (r.status == "fail") ++n_fail;
            else ++n_diff;
            checks.push_back({{"check_id", c.id},
                              {"status", r.status},
                              {"details", r.details},
                              {"data", r.data}});
            text << std::left << std::setw(15) << ("[" + r.status + "]")
                 << std::setw(26) << c.id << " " << r.details << "  (" << ms
                 << " ms)\n";
        }
    }

    njson report{{"config", config_json(cfg, suites)},
                 {"checks", checks},
                 {"summary", {{"pass", n_pass}, {"fail", n_fail}, {"diff", n_diff}}}};

    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text.str();
        std::cout << "summary: " << n_pass << " pass, " << n_fail << " fail, "
                  << n_diff << " diff-reported\n";
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "h3: cannot write " << report_path << "\n";
            return 2;
        }
        out << report.dump(2) << "\n";
    }
    return n_fail == 0 ? 0 : 1;
}

void require_numeric(const RunConfig& cfg, const std::string& artifact) {
    if (cfg.formal)
        throw UsageError("artifact '" + artifact + "' needs numeric couplings");
}

njson emit_json(const RunConfig& cfg, const std::string& artifact) {
    if (artifact == "invariants") {
        const TauBasis& tb = TauBasis::instance();
        return njson{{"tau1", tb.tau1.str()},
                     {"tau2", tb.tau2.str()},
                     {"tau3", tb.tau3.str()}};
    }
    if (artifact == "hamiltonian" || artifact == "integral") {
        DiffOperator op = artifact == "hamiltonian" ? build_h_formal() : build_f_formal();
        njson terms = njson::array();
        for (const auto& [beta, coef] : op.terms())
            terms.push_back({{"beta", njson::array({beta[0], beta[1], beta[2]})},
                             {"coefficient", coef.str()}});
        return njson{{"operator", artifact}, {"terms", terms}};
    }
    if (artifact == "discrete-h" || artifact == "discrete-f") {
        ShiftOperator op = discretize(
            artifact == "discrete-h" ? build_h_formal() : build_f_formal(), cfg.delta);
        njson records = njson::array();
        for (const auto& [k, coef] : op.terms())
            records.push_back({{"shift", shift_json(k)}, {"coefficient", coef.str()}});
        return njson{{"operator", artifact},
                     {"delta", cfg.delta_text},
                     {"records", records}};
    }
    if (artifact == "spectrum") {
        require_numeric(cfg, artifact);
        FlagSpace flag = FlagSpace::build(VariableSpace::tau3(), {1, 2, 3}, cfg.n);
        njson records = njson::array();
        for (const Mono& p : flag.basis) {
            long s = 3 * long(p[1]) + 5 * long(p[2]);
            Golden eps = Golden(2) * cfg.om * Golden(long(p[0]) + s);
            Golden gamma = gamma_value_separable(long(p[1]), long(p[2]), cfg.nu);
            records.push_back({{"n", njson::array({p[0], p[1], p[2]})},
                               {"eps", str(eps)},
                               {"gamma", str(gamma)}});
        }
        return njson{{"level", cfg.n}, {"records", records}};
    }
    if (artifact == "qes-block") {
        require_numeric(cfg, artifact);
        QESParams qp(rational(1, 2), rational(1, 4), 1);
        BlockSpectrum bs = block_spectrum(qp, cfg.nu, cfg.om);
        njson rows = njson::array();
        for (std::size_t i = 0; i < bs.block.rows; ++i) {
            njson row = njson::array();
            for (std::size_t j = 0; j < bs.block.cols; ++j)
                row.push_back(str(bs.block.at(i, j)));
            rows.push_back(row);
        }
        njson cp = njson::array();
        for (const Golden& c : bs.charpoly) cp.push_back(str(c));
        return njson{{"a", "1/2"},
                     {"gamma_q", "1/4"},
                     {"k", 1},
                     {"block", rows},
                     {"charpoly", cp},
                     {"dropped_constant", str(bs.dropped_constant)},
                     {"ground_energy", str(bs.ground_energy)}};
    }
    throw UsageError("unknown artifact '" + artifact + "'");
}

void emit_text(const njson& doc, std::ostream& out) {
    if (doc.contains("tau1")) {
        out << "tau1 = " << doc["tau1"].get<std::string>() << "\n"
            << "tau2 = " << doc["tau2"].get<std::string>() << "\n"
            << "tau3 = " << doc["tau3"].get<std::string>() << "\n";
        return;
    }
    if (doc.contains("terms")) {
        for (const njson& t : doc["terms"]) {
            const njson& b = t["beta"];
            out << "d^(" << b[0] << "," << b[1] << "," << b[2]
                << ") : " << t["coefficient"].get<std::string>() << "\n";
        }
        return;
    }
    if (doc.contains("records") && doc.contains("delta")) {
        for (const njson& r : doc["records"]) {
            const njson& k = r["shift"];
            out << "S(" << k[0] << "," << k[1] << "," << k[2]
                << ") : " << r["coefficient"].get<std::string>() << "\n";
        }
        return;
    }
    if (doc.contains("records")) {
        for (const njson& r : doc["records"]) {
            const njson& p = r["n"];
            out << "(" << p[0] << "," << p[1] << "," << p[2]
                << ")  eps = " << r["eps"].get<std::string>()
                << "  gamma = " << r["gamma"].get<std::string>() << "\n";
        }
        return;
    }
    out << "block (a = " << doc["a"].get<std::string>()
        << ", gamma_q = " << doc["gamma_q"].get<std::string>() << ", k = 1):\n";
    for (const njson& row : doc["block"]) {
        out << " ";
        for (const njson& v : row) out << " " << v.get<std::string>();
        out << "\n";
    }
    out << "charpoly (ascending):";
    for (const njson& c : doc["charpoly"]) out << " " << c.get<std::string>();
    out << "\ndropped constant = " << doc["dropped_constant"].get<std::string>()
        << "\nground energy = " << doc["ground_energy"].get<std::string>() << "\n";
}

int run_emit(const RunConfig& cfg, const std::string& artifact,
             const std::string& format, const std::string& report_path) {
    njson doc = emit_json(cfg, artifact);
    std::ostringstream body;
    if (format == "json") body << doc.dump(2) << "\n";
    else emit_text(doc, body);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "h3: cannot write " << report_path << "\n";
            return 2;
        }
        out << body.str();
    } else {
        std::cout << body.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the rational H3 integrable system"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string nu_text = "1/3", om_text = "1", delta_text = "1,1,1";
    std::string format = "text", report_path;
    unsigned n = 6;
    app.add_option("--nu", nu_text, "coupling as p/q, or 'formal'")
        ->capture_default_str();
    app.add_option("--om", om_text, "oscillator frequency as p/q")
        ->capture_default_str();
    app.add_option("--delta", delta_text, "lattice steps a,b,c (positive rationals)")
        ->capture_default_str();
    app.add_option("--n", n, "maximum flag level")->capture_default_str();
    app.add_option("--report", report_path, "write the JSON report to this path");
    app.add_option("--format", format, "console output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::vector<std::string> suites;
    CLI::App* verify = app.add_subcommand("verify", "run certificate suites");
    verify->add_option("suites", suites, "all or a subset of the suite names")
        ->check(CLI::IsMember({"all", "group", "invariants", "hamiltonian", "spectrum",
                               "integral", "discrete", "qes", "algebra"}));

    std::string artifact;
    CLI::App* emit = app.add_subcommand("emit", "dump a canonical artifact");
    emit->add_option("artifact", artifact, "one of invariants, hamiltonian, integral, "
                                           "discrete-h, discrete-f, spectrum, qes-block")
        ->required()
        ->check(CLI::IsMember({"invariants", "hamiltonian", "integral", "discrete-h",
                               "discrete-f", "spectrum", "qes-block"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = make_config(nu_text, om_text, delta_text, n);
        if (verify->parsed()) {
            if (suites.empty()) suites = {"all"};
            return run_verify(cfg, suites, format, report_path);
        }
        return run_emit(cfg, artifact, format, report_path);
    } catch (const UsageError& e) {
        std::cerr << "h3: " << e.what() << "\n";
        return 2;
    } catch (const h3::Error& e) {
        std::cerr << "h3: " << e.what() << "\n";
        return 1;
    }
}
