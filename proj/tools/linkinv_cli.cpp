// Command-line front end: parse link specifications, run the analyses, and
// emit matching human-readable and JSON reports.
//
// Exit codes: 0 success, 1 domain errors (including usage), 2 resource or
// budget errors, 3 internal-consistency errors.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linkinv/serialize.hpp"

namespace {

using namespace linkinv;

bool verbose_logging() {
    const char* v = std::getenv("LINKINV_VERBOSE");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void vlog(const std::string& msg) {
    if (verbose_logging())
        std::cerr << "[linkinv] " << msg << "\n";
}

struct Report {
    std::string command;
    json results;
    std::vector<std::string> warnings;
    std::vector<std::string> human; // one printed line per entry
};

void emit(const Report& r, bool as_json, bool quiet, long elapsed_ms) {
    if (as_json) {
        json envelope;
        envelope["schema_version"] = "1";
        envelope["command"] = r.command;
        envelope["results"] = r.results;
        envelope["warnings"] = r.warnings;
        envelope["timing_ms"] = elapsed_ms;
        std::cout << envelope.dump(2) << "\n";
        return;
    }
    for (const std::string& line : r.human)
        std::cout << line << "\n";
    if (!quiet)
        for (const std::string& w : r.warnings)
            std::cerr << "warning: " << w << "\n";
}

std::string ratio_str(const std::pair<Integer, Integer>& uv) {
    return uv.first.get_str() + "/" + uv.second.get_str();
}

std::string join_integers(const std::vector<Integer>& xs) {
    std::string out;
    for (const Integer& x : xs) {
        if (!out.empty())
            out += ",";
        out += x.get_str();
    }
    return out;
}

// ---- bp-order ----

Report run_bp_order(long n) {
    Report r;
    r.command = "bp-order";
    const BPGroupStatus g = bp_group(n);
    r.results["n"] = n;
    r.results["group"] = g.str();
    switch (g.tag) {
    case BPGroupStatus::Tag::Cyclic:
        r.results["order"] = to_json(g.order);
        r.human.push_back(g.order.get_str());
        break;
    case BPGroupStatus::Tag::Trivial:
        r.results["order"] = 1;
        r.human.push_back("bP_" + std::to_string(n) + " = 0");
        break;
    case BPGroupStatus::Tag::Z2:
        r.results["order"] = 2;
        r.human.push_back("bP_" + std::to_string(n) + " = Z_2");
        break;
    case BPGroupStatus::Tag::ZeroOrZ2Unknown:
        r.results["order"] = nullptr;
        r.human.push_back("bP_" + std::to_string(n) + " = 0 or Z_2 (undetermined)");
        break;
    }
    return r;
}

// ---- link analyze ----

Report run_link_analyze(const std::optional<std::string>& exponents_csv,
                        const std::optional<std::string>& weights_csv,
                        const std::optional<long>& degree, const Integer& budget) {
    Report r;
    r.command = "link analyze";

    std::optional<ExponentVector> exps;
    LinkDescriptor link;
    if (exponents_csv) {
        exps = parse_exponents(*exponents_csv);
        link = link_from_exponents(*exps);
    } else {
        if (!degree)
            throw domain_error("link analyze: --weights requires --degree");
        link = link_from_weights(parse_weights(*weights_csv), Integer(*degree));
    }

    const DivisorExpr divisor = link_divisor(link);
    const CyclotomicExponents cyc = to_cyclotomic(divisor);
    const Integer betti = betti_from_divisor(divisor, link.nvars);
    const Integer torsion = torsion_order(cyc);
    const Integer d1 = eval_at_one(cyc);
    const Integer dm1 = eval_at_minus_one(cyc);
    const Integer mu = milnor_number(link);
    const bool homotopy = link.link_dim >= 5 && betti == 0 && torsion == 1;

    r.results["dim"] = link.link_dim;
    r.results["nvars"] = link.nvars;
    r.results["connectivity"] = connectivity(link);
    r.results["weights"] = to_json(link.weights);
    r.results["degree"] = to_json(link.degree);
    {
        json ratios = json::array();
        for (const auto& uv : link.ratios)
            ratios.push_back(ratio_str(uv));
        r.results["ratios"] = ratios;
    }
    r.results["milnor_number"] = to_json(mu);
    r.results["divisor"] = divisor.str();
    r.results["middle_betti"] = to_json(betti);
    r.results["torsion_order"] = to_json(torsion);
    r.results["delta_at_one"] = to_json(d1);
    r.results["delta_at_minus_one"] = to_json(dm1);
    r.results["homotopy_sphere"] = link.link_dim >= 5 ? json(homotopy) : json(nullptr);

    r.human.push_back("link: dim " + std::to_string(link.link_dim) + ", weights (" +
                      join_integers(link.weights) + "), degree " + link.degree.get_str());
    r.human.push_back("connectivity: " + std::to_string(connectivity(link)));
    r.human.push_back("milnor_number: " + mu.get_str());
    r.human.push_back("divisor: " + divisor.str());
    r.human.push_back("middle_betti: " + betti.get_str() + ", torsion_order: " +
                      torsion.get_str());
    r.human.push_back("delta(1): " + d1.get_str() + ", delta(-1): " + dm1.get_str());
    if (link.link_dim >= 5)
        r.human.push_back(std::string("homotopy_sphere: ") + (homotopy ? "true" : "false"));

    if (exps) {
        const ZhsVerdict zhs = integral_homology_sphere(*exps);
        json crit;
        crit["integral_homology_sphere"] = zhs.is_integral_homology_sphere;
        crit["reason"] = to_string(zhs.reason);
        r.results["graph_criterion"] = crit;
        r.human.push_back(std::string("graph_criterion: ") +
                          (zhs.is_integral_homology_sphere ? "true" : "false") + " (" +
                          to_string(zhs.reason) + ")");
    } else {
        r.results["graph_criterion"] = nullptr;
    }

    // dimension-specific classification
    r.results["signature"] = nullptr;
    r.results["bp_class"] = nullptr;
    r.results["classification"] = nullptr;
    r.results["morita_invariant"] = nullptr;
    if (exps && link.link_dim % 4 == 3 && link.link_dim >= 7 && homotopy) {
        const Integer tau = signature(*exps, budget);
        const SphereClass cls = classify_4m_minus_1(*exps, budget);
        if (!cls.homotopy_sphere || !cls.bp_class)
            throw consistency_error("link analyze: graph criterion disagrees with the "
                                    "Alexander-polynomial homotopy-sphere check");
        r.results["signature"] = to_json(tau);
        const std::string kof = cls.bp_class->get_str() + " of " + cls.bp_group_order->get_str();
        r.results["bp_class"] = kof;
        r.results["classification"] = to_json(cls);
        r.human.push_back("signature: " + tau.get_str());
        r.human.push_back("bp_class: " + kof + " (" + cls.verdict() + ")");
    } else if (link.link_dim % 4 == 1 && homotopy) {
        const long m = (link.link_dim - 1) / 4;
        const SphereClass cls = classify_4m_plus_1(dm1, m);
        r.results["classification"] = to_json(cls);
        r.results["morita_invariant"] = to_json(morita_invariant_4m_plus_1(mu));
        std::string verdict = cls.verdict();
        if (cls.kervaire && *cls.kervaire)
            verdict += " (exotic: " + to_string(cls.exotic) + ")";
        r.human.push_back("classification: " + verdict);
        r.human.push_back("morita_invariant: " + morita_invariant_4m_plus_1(mu).str());
    }

    if (const long acg_n = (link.link_dim + 1) / 2; acg_n >= 3) {
        const GroupDescriptor acg = almost_contact_group(acg_n);
        r.results["almost_contact_group"] = acg.str();
        r.human.push_back("almost_contact_group: " + acg.str());
    } else {
        r.results["almost_contact_group"] = nullptr;
    }

    // orbifold data of the leaf space
    {
        json orb = to_json(orbifold_profile(link.weights, link.degree));
        if (exps) {
            const OrbifoldOrderResult oo = bp_orbifold_order(*exps);
            orb["orbifold_order"] = to_json(oo.order);
            orb["adjunction_safe"] = (link.degree % oo.order == 0);
            json strata = json::array();
            for (const StratumRecord& s : oo.strata)
                strata.push_back(to_json(s, true));
            orb["strata"] = strata;
            r.human.push_back("orbifold_order: " + oo.order.get_str());
        }
        r.results["orbifold"] = orb;
    }
    return r;
}

// ---- cover analyze ----

json cover_row_json(const CoverReport& rep) {
    json j = to_json(rep);
    const BaseTypeResult bt = base_type(rep.base_divisor, rep.spec.base.degree);
    json tj;
    tj["type"] = to_string(bt.type);
    if (bt.type == BaseDivisorType::Type2) {
        tj["n_w"] = to_json(bt.n_w);
        tj["m2"] = to_json(bt.m2);
        tj["m3"] = to_json(bt.m3);
    }
    j["base_type"] = tj;
    if (rep.cover_link.link_dim == 9 && rep.is_homotopy_sphere)
        j["classification"] = to_json(classify_cover_9sphere(rep));
    return j;
}

Report run_cover_analyze(const std::string& weights_csv, long degree, long p) {
    Report r;
    r.command = "cover analyze";
    const CoverSpec spec = make_cover(parse_weights(weights_csv), Integer(degree), Integer(p));
    const CoverReport rep = analyze_cover(spec);
    r.results = cover_row_json(rep);

    r.human.push_back("base: weights (" + join_integers(spec.base.weights) + "), degree " +
                      spec.base.degree.get_str() + ", p = " + spec.p.get_str());
    r.human.push_back("cover: dim " + std::to_string(rep.cover_link.link_dim) +
                      ", weights (" + join_integers(rep.cover_link.weights) + "), degree " +
                      rep.cover_link.degree.get_str());
    r.human.push_back("base_divisor: " + rep.base_divisor.str());
    r.human.push_back("base_type: " + r.results["base_type"]["type"].get<std::string>());
    r.human.push_back("base_middle_betti: " + rep.base_middle_betti.get_str() +
                      ", base_torsion_order: " + rep.base_torsion_order.get_str());
    r.human.push_back("delta_g(1): " + rep.delta_g_at_one.get_str() + ", delta_g(-1): " +
                      rep.delta_g_at_minus_one.get_str());
    r.human.push_back(std::string("homotopy_sphere: ") +
                      (rep.is_homotopy_sphere ? "true" : "false"));
    if (rep.sphere_class) {
        std::string verdict = rep.sphere_class->verdict();
        if (rep.sphere_class->kervaire && *rep.sphere_class->kervaire)
            verdict += " (exotic: " + to_string(rep.sphere_class->exotic) + ")";
        r.human.push_back("classification: " + verdict);
    }
    return r;
}

// ---- wps info ----

Report run_wps_info(const std::string& weights_csv, const std::optional<long>& degree) {
    Report r;
    r.command = "wps info";
    const WeightVector w = parse_weights(weights_csv);
    std::optional<Integer> d;
    if (degree)
        d = Integer(*degree);
    const OrbifoldProfile p = orbifold_profile(w, d);
    r.results = to_json(p);

    Integer fano = 0;
    for (const Integer& wi : p.normalized)
        fano += wi;
    r.results["fano_index"] = to_json(fano);
    const OrbifoldOrderResult amb = ambient_strata(w);
    r.results["orbifold_order"] = to_json(amb.order);
    json strata = json::array();
    for (const StratumRecord& s : amb.strata)
        strata.push_back(to_json(s, false));
    r.results["strata"] = strata;

    r.human.push_back("P(" + join_integers(w) + ")");
    r.human.push_back("d_i: (" + join_integers(p.d_i) + ")");
    r.human.push_back("a_w: " + p.a_w.get_str() + ", upsilon_w: " + p.upsilon_w.get_str());
    r.human.push_back(std::string("well_formed: ") + (p.well_formed ? "true" : "false"));
    r.human.push_back("normalized: (" + join_integers(p.normalized) + ")");
    r.human.push_back("fano_index: " + fano.get_str());
    r.human.push_back("orbifold_order: " + amb.order.get_str());
    if (p.canonical_degree)
        r.human.push_back("canonical_degree: " + p.canonical_degree->get_str());
    return r;
}

// ---- catalog run ----

struct CatalogRow {
    WeightVector weights;
    Integer degree;
    std::string expected_type;
    long expected_exponent = 0;
};

std::vector<CatalogRow> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw domain_error("catalog: cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is a 1-based offset into the text
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw domain_error("catalog: malformed JSON in '" + path + "' at line " +
                           std::to_string(line) + ", column " + std::to_string(col));
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw domain_error("catalog: expected an object with a 'rows' array");
    if (doc.value("schema_version", "") != "1")
        throw domain_error("catalog: unsupported schema_version");
    std::vector<CatalogRow> rows;
    for (const json& jr : doc["rows"]) {
        CatalogRow row;
        if (!jr.contains("weights") || !jr.contains("degree"))
            throw domain_error("catalog: each row needs 'weights' and 'degree'");
        for (const json& w : jr["weights"])
            row.weights.emplace_back(w.get<long>());
        row.degree = Integer(jr["degree"].get<long>());
        row.expected_type = jr.value("expected_type", "");
        row.expected_exponent = jr.value("expected_exponent", 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

Report run_catalog(const std::string& path, const std::vector<Integer>& ps, unsigned jobs) {
    Report r;
    r.command = "catalog run";
    const std::vector<CatalogRow> rows = load_catalog(path);

    struct Task {
        std::size_t row_index = 0;
        Integer p;
        bool skipped = false;
        Integer gcd;
        json result;
    };
    std::vector<Task> tasks;
    for (const Integer& p : ps)
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Task t;
            t.row_index = i;
            t.p = p;
            t.gcd = igcd(p, rows[i].degree);
            t.skipped = t.gcd != 1;
            tasks.push_back(std::move(t));
        }

    auto analyze_task = [&rows](Task& t) {
        const CatalogRow& row = rows[t.row_index];
        vlog("catalog row " + std::to_string(t.row_index) + " p=" + t.p.get_str());
        const CoverReport rep = analyze_cover(make_cover(row.weights, row.degree, t.p));
        json j = cover_row_json(rep);
        j["row"] = t.row_index;
        if (!row.expected_type.empty())
            j["type_matches_expected"] =
                (j["base_type"]["type"].get<std::string>() == row.expected_type);
        t.result = std::move(j);
    };

    if (jobs > 1) {
        std::vector<std::future<void>> futures;
        std::size_t next = 0;
        while (next < tasks.size()) {
            futures.clear();
            for (unsigned k = 0; k < jobs && next < tasks.size(); ++k, ++next) {
                Task& t = tasks[next];
                if (!t.skipped)
                    futures.push_back(std::async(std::launch::async, analyze_task, std::ref(t)));
            }
            for (auto& f : futures)
                f.get();
        }
    } else {
        for (Task& t : tasks)
            if (!t.skipped)
                analyze_task(t);
    }

    json out_rows = json::array();
    long standard = 0, kervaire = 0, skipped = 0;
    for (const Task& t : tasks) {
        const CatalogRow& row = rows[t.row_index];
        if (t.skipped) {
            ++skipped;
            r.warnings.push_back("row " + std::to_string(t.row_index) + " skipped for p = " +
                                 t.p.get_str() + ": gcd(p, d) = " + t.gcd.get_str());
            r.human.push_back("row " + std::to_string(t.row_index) + " p=" + t.p.get_str() +
                              ": skipped (gcd " + t.gcd.get_str() + ")");
            continue;
        }
        const json& j = t.result;
        std::string verdict = "-";
        if (j.contains("classification") && j["classification"].is_object())
            verdict = j["classification"]["verdict"].get<std::string>();
        if (verdict == "standard")
            ++standard;
        else if (verdict == "kervaire")
            ++kervaire;
        out_rows.push_back(j);
        std::string dm1 = j["delta_g_at_minus_one"].is_number()
                              ? std::to_string(j["delta_g_at_minus_one"].get<long>())
                              : j["delta_g_at_minus_one"].get<std::string>();
        r.human.push_back("row " + std::to_string(t.row_index) + " p=" + t.p.get_str() +
                          ": d=" + row.degree.get_str() + " type=" +
                          j["base_type"]["type"].get<std::string>() + " delta_g(-1)=" + dm1 +
                          " -> " + verdict);
    }
    r.results["rows"] = out_rows;
    json summary;
    summary["pairs"] = tasks.size();
    summary["standard"] = standard;
    summary["kervaire"] = kervaire;
    summary["skipped"] = skipped;
    r.results["summary"] = summary;
    r.human.push_back("summary: " + std::to_string(standard) + " standard, " +
                      std::to_string(kervaire) + " kervaire, " + std::to_string(skipped) +
                      " skipped");
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of links of weighted homogeneous singularities"};
    app.require_subcommand(1);

    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "emit a JSON report envelope on stdout");
    app.add_flag("--quiet", quiet, "suppress warnings in human-readable output");

    long bp_n = 0;
    CLI::App* bp = app.add_subcommand("bp-order", "order of the group bP_N");
    bp->add_option("N", bp_n, "group index (even)")->required();

    CLI::App* link = app.add_subcommand("link", "link invariants");
    CLI::App* link_an = link->add_subcommand("analyze", "analyze one link");
    std::string la_exps, la_weights;
    long la_degree = 0;
    long la_budget = 10000000; // default signature budget
    CLI::Option* la_exps_opt =
        link_an->add_option("--exponents", la_exps, "Brieskorn-Pham exponents, comma-separated");
    CLI::Option* la_weights_opt =
        link_an->add_option("--weights", la_weights, "weights, comma-separated");
    CLI::Option* la_degree_opt = link_an->add_option("--degree", la_degree, "degree");
    link_an->add_option("--budget", la_budget, "signature lattice-point budget");
    la_exps_opt->excludes(la_weights_opt);
    la_exps_opt->excludes(la_degree_opt);

    CLI::App* cover = app.add_subcommand("cover", "branched covers z_0^p + f");
    CLI::App* cover_an = cover->add_subcommand("analyze", "analyze one branched cover");
    std::string ca_weights;
    long ca_degree = 0, ca_p = 0;
    cover_an->add_option("--weights", ca_weights, "base weights, comma-separated")->required();
    cover_an->add_option("--degree", ca_degree, "base degree")->required();
    cover_an->add_option("-p,--p", ca_p, "branching order")->required();

    CLI::App* wps = app.add_subcommand("wps", "weighted projective space data");
    CLI::App* wps_info = wps->add_subcommand("info", "orbifold profile of P(w)");
    std::string wi_weights;
    long wi_degree = 0;
    wps_info->add_option("--weights", wi_weights, "weights, comma-separated")->required();
    CLI::Option* wi_degree_opt = wps_info->add_option("--degree", wi_degree, "hypersurface degree");

    CLI::App* catalog = app.add_subcommand("catalog", "batch runs over fixture files");
    CLI::App* catalog_run = catalog->add_subcommand("run", "run every row of a fixture file");
    std::string cr_file, cr_ps = "3";
    unsigned cr_jobs = 1;
    catalog_run->add_option("--file", cr_file, "fixture JSON path")->required();
    catalog_run->add_option("-p,--p", cr_ps, "branching orders, comma-separated");
    catalog_run->add_option("--jobs", cr_jobs, "worker pool size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Report r;
        if (bp->parsed()) {
            r = run_bp_order(bp_n);
        } else if (link->parsed() && link_an->parsed()) {
            if (la_exps_opt->count() == 0 && la_weights_opt->count() == 0)
                throw domain_error("link analyze: need --exponents or --weights/--degree");
            r = run_link_analyze(
                la_exps_opt->count() ? std::optional<std::string>(la_exps) : std::nullopt,
                la_weights_opt->count() ? std::optional<std::string>(la_weights) : std::nullopt,
                la_degree_opt->count() ? std::optional<long>(la_degree) : std::nullopt,
                Integer(la_budget));
        } else if (cover->parsed() && cover_an->parsed()) {
            r = run_cover_analyze(ca_weights, ca_degree, ca_p);
        } else if (wps->parsed() && wps_info->parsed()) {
            r = run_wps_info(wi_weights, wi_degree_opt->count()
                                             ? std::optional<long>(wi_degree)
                                             : std::nullopt);
        } else if (catalog->parsed() && catalog_run->parsed()) {
            std::vector<Integer> ps = parse_integer_csv(cr_ps, "p list");
            r = run_catalog(cr_file, ps, cr_jobs == 0 ? 1 : cr_jobs);
        } else {
            throw domain_error("missing subcommand (see --help)");
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        emit(r, as_json, quiet, elapsed);
        return 0;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
