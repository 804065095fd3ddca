#include <dicirc/cayley.hpp>
#include <dicirc/cli.hpp>
#include <dicirc/error.hpp>
#include <dicirc/group_table.hpp>
#include <dicirc/report.hpp>
#include <dicirc/search.hpp>
#include <dicirc/structure.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace dicirc::cli {

namespace
{
    struct UsageFailure : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    auto yes_no(bool b) -> const char * { return b ? "yes" : "no"; }

    auto emit(const RunConfig & config, std::ostream & out, const std::string & text) -> void
    {
        if (config.out.empty()) {
            out << text;
            return;
        }
        std::ofstream file(config.out, std::ios::binary);
        if (! file)
            throw UsageFailure("--out: cannot open " + config.out + " for writing");
        file << text;
    }

    auto require_spec(const RunConfig & config) -> ConnectionSpec
    {
        if (config.spec.empty())
            throw UsageFailure("--spec: a connection spec is required, e.g. \"n=2; R=1,3; T=0,2\"");
        return parse_spec(config.spec);
    }

    auto violation_list(const SpecValidation & v) -> std::string
    {
        std::string s;
        for (auto x : v.violations) {
            if (x == SpecViolation::NotGenerating)
                continue;
            if (! s.empty())
                s += ", ";
            s += to_string(x);
        }
        return s;
    }

    auto require_format(const RunConfig & config, std::initializer_list<std::string_view> allowed) -> void
    {
        for (auto f : allowed)
            if (config.format == f)
                return;
        throw UsageFailure("--format: " + config.format + " is not supported by " + config.command);
    }

    auto run_check(const RunConfig & config, std::ostream & out) -> int
    {
        require_format(config, { "text", "json" });
        auto spec = require_spec(config);
        auto validation = validate_spec(spec);
        if (! validation.valid())
            throw Error(ErrorCode::InvalidSpec, violation_list(validation));

        nlohmann::json j{ { "schema_version", schema_version }, { "command", "check" }, { "spec", spec_json(spec) },
            { "connected", validation.connected() } };
        std::ostringstream text;
        text << format_spec(spec) << "\n";
        int status = Ok;

        if (! validation.connected()) {
            j["drg"] = false;
            j["cross_check_ok"] = true;
            text << "not connected: S generates a proper subgroup, so not distance-regular\n";
        }
        else {
            auto g = build_graph(spec);
            auto drg = is_distance_regular(g, true);
            std::optional<Classification> cls;
            std::string problem;
            try {
                cls = config.classifier(spec);
            }
            catch (const std::exception & e) {
                problem = std::string("classifier raised: ") + e.what();
            }
            auto * array = std::get_if<IntersectionArray>(&drg);
            if (cls && problem.empty()) {
                if (cls->is_drg() != (array != nullptr))
                    problem = "BFS says " + std::string(array ? "DRG" : "not DRG") + " but classifier says " + cls->to_string();
                else if (array && cls->expected_array() != *array)
                    problem = "array " + array->to_string() + " differs from the one " + cls->to_string() + " predicts";
            }

            j["drg"] = array != nullptr;
            if (cls)
                j["class"] = classification_json(*cls);
            if (array) {
                auto inst = analyse_drg(spec, g, *array, cls ? *cls : Classification{ drg_class::NotDistanceRegular{ "" }, {} },
                    config.tolerance);
                j["array"] = array_json(*array);
                j["analysis"] = drg_instance_json(inst);
                text << "DRG, array " << array->to_string() << ", class " << (cls ? cls->to_string() : "?") << "\n";
                text << "family: " << inst.family << "\n";
                text << "bipartite: " << yes_no(inst.bipartite) << "; antipodal: " << yes_no(inst.antipodal);
                if (inst.antipodal)
                    text << " (fibre size " << inst.fibre_size << ")";
                text << "; primitive: " << yes_no(inst.primitive) << "\n";
                text << "Fourier identities: " << (inst.fourier.holds() ? "hold" : "FAIL") << " (max residual "
                     << inst.fourier.max_residual << ")\n";
            }
            else {
                j["witness"] = std::get<NotDrgWitness>(drg).describe();
                text << "not DRG: " << std::get<NotDrgWitness>(drg).describe() << "\n";
                text << "class " << (cls ? cls->to_string() : "?") << "\n";
            }
            j["cross_check_ok"] = problem.empty();
            if (! problem.empty()) {
                j["cross_check_failure"] = problem;
                text << "CROSS-CHECK FAILURE: " << problem << "\n";
                status = CrossCheckFailed;
            }
        }
        emit(config, out, config.format == "json" ? dump(j) : text.str());
        return status;
    }

    auto run_classify(const RunConfig & config, std::ostream & out) -> int
    {
        require_format(config, { "text", "json" });
        auto spec = require_spec(config);
        auto cls = config.classifier(spec);
        if (config.format == "json") {
            nlohmann::json j{ { "schema_version", schema_version }, { "command", "classify" }, { "spec", spec_json(spec) },
                { "class", classification_json(cls) } };
            emit(config, out, dump(j));
            return Ok;
        }
        std::ostringstream text;
        text << format_spec(spec) << "\n" << cls.to_string() << "\n";
        for (auto & e : cls.evidence)
            text << "  " << e << "\n";
        emit(config, out, text.str());
        return Ok;
    }

    auto run_survey(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        require_format(config, { "text", "json", "csv" });
        if (config.n && config.n_range)
            throw UsageFailure("--n and --n-range are mutually exclusive");
        std::pair<int, int> range;
        if (config.n)
            range = { *config.n, *config.n };
        else if (config.n_range)
            range = *config.n_range;
        else
            throw UsageFailure("--n or --n-range is required for survey");
        if (range.first < 1)
            throw UsageFailure("--n: must be at least 1");

        SurveyOptions options;
        options.dedup = config.dedup;
        options.workers = config.workers;
        options.tolerance = config.tolerance;
        options.classifier = config.classifier;

        std::vector<SurveyReport> reports;
        bool failed = false;
        for (int n = range.first; n <= range.second; ++n) {
            reports.push_back(survey(n, options));
            failed = failed || ! reports.back().reproduces_theorem();
        }

        if (config.format == "json")
            emit(config, out, dump(survey_document(reports, config.tolerance)));
        else if (config.format == "csv")
            emit(config, out, survey_csv(reports));
        else {
            std::ostringstream text;
            for (auto & r : reports) {
                text << "n=" << r.n << ": " << r.total_specs << " specs, " << r.connected_specs << " connected, "
                     << r.canonical_classes << " canonical classes, " << r.evaluated_specs << " evaluated, "
                     << r.drg_instances.size() << " DRG, " << r.failures.size() << " cross-check failures\n";
                for (auto & inst : r.drg_instances)
                    text << "  " << format_spec(inst.spec) << "  " << inst.array.to_string() << "  "
                         << inst.classification.to_string() << "\n";
                for (auto & f : r.failures)
                    text << "  FAILURE " << format_spec(f.spec) << ": " << f.reason << "\n";
            }
            emit(config, out, text.str());
        }
        if (failed)
            err << "cross-check failure: classifier and BFS disagree\n";
        return failed ? CrossCheckFailed : Ok;
    }

    struct DsSearch {
        int k, lambda;
        std::vector<std::vector<int>> sets;
    };

    auto element_label(int index, int n) -> std::string
    {
        auto e = element_at(index, n);
        std::string s = "a^" + std::to_string(e.exp);
        return e.flip ? s + "b" : s;
    }

    auto run_search_ds(const RunConfig & config, std::ostream & out) -> int
    {
        require_format(config, { "text", "json" });
        if (! config.n)
            throw UsageFailure("--n is required for search-ds");
        int n = *config.n;
        if (n < 1)
            throw UsageFailure("--n: must be at least 1");
        bool dicyclic = config.group == "dicyclic";
        if (! dicyclic && config.group != "cyclic")
            throw UsageFailure("--group: expected cyclic or dicyclic, got " + config.group);
        auto group = dicyclic ? GroupTable::dicyclic(n) : GroupTable::cyclic(n);
        const int v = group.order();

        std::vector<std::pair<int, int>> params;
        if (config.k) {
            int k = *config.k;
            if (config.lambda)
                params.push_back({ k, *config.lambda });
            else if (v > 1 && (k * (k - 1)) % (v - 1) == 0)
                params.push_back({ k, k * (k - 1) / (v - 1) });
            else
                throw Error(ErrorCode::ParameterContradiction,
                    "--k: no integer lambda with k(k-1) = lambda(v-1) for v = " + std::to_string(v));
        }
        else if (config.lambda)
            throw UsageFailure("--lambda needs --k");
        else
            for (int k = 2; k <= v - 2; ++k)
                if ((k * (k - 1)) % (v - 1) == 0)
                    params.push_back({ k, k * (k - 1) / (v - 1) });

        std::vector<DsSearch> searches;
        for (auto [k, lambda] : params)
            searches.push_back({ k, lambda, search_difference_sets(group, v, k, lambda, config.limit) });

        nlohmann::json j{ { "schema_version", schema_version }, { "command", "search-ds" }, { "group", config.group },
            { "n", n }, { "order", v } };
        j["searches"] = nlohmann::json::array();
        std::ostringstream text;
        text << config.group << " group of order " << v << "\n";
        for (auto & s : searches) {
            nlohmann::json entry{ { "v", v }, { "k", s.k }, { "lambda", s.lambda }, { "count", s.sets.size() },
                { "sets", s.sets } };
            text << "(" << v << "," << s.k << "," << s.lambda << "): " << s.sets.size() << " translate classes\n";
            for (auto & d : s.sets) {
                text << "  {";
                for (std::size_t i = 0; i < d.size(); ++i)
                    text << (i ? "," : "") << (dicyclic ? element_label(d[i], n) : std::to_string(d[i]));
                text << "}\n";
            }
            if (dicyclic) {
                auto labels = nlohmann::json::array();
                for (auto & d : s.sets) {
                    auto row = nlohmann::json::array();
                    for (int x : d)
                        row.push_back(element_label(x, n));
                    labels.push_back(row);
                }
                entry["labels"] = labels;
            }
            j["searches"].push_back(entry);
        }
        if (params.empty())
            text << "no admissible non-trivial parameters\n";

        if (dicyclic) {
            std::set<ConnectionSpec> found;
            for (auto & s : searches)
                for (auto & d : s.sets)
                    if (auto spec = reconstruct_family_iii(d, n))
                        found.insert(*spec);
            auto specs = nlohmann::json::array();
            for (auto & spec : found)
                specs.push_back(spec_json(spec));
            std::string statement = found.empty()
                ? "no family (iii) instance exists at n=" + std::to_string(2 * n) + " via this construction"
                : std::to_string(found.size()) + " family (iii) instance(s) at n=" + std::to_string(2 * n);
            j["family_iii"] = { { "n", 2 * n }, { "instances", specs }, { "statement", statement } };
            text << statement << "\n";
            for (auto & spec : found)
                text << "  " << format_spec(spec) << "\n";
        }
        emit(config, out, config.format == "json" ? dump(j) : text.str());
        return Ok;
    }

    auto run_fourier(const RunConfig & config, std::ostream & out) -> int
    {
        require_format(config, { "text", "json" });
        auto spec = require_spec(config);
        auto validation = validate_spec(spec);
        if (! validation.valid())
            throw Error(ErrorCode::InvalidSpec, violation_list(validation));
        const int m = 2 * spec.n;

        auto r = dft(characteristic(spec.R)), t = dft(characteristic(spec.T));
        nlohmann::json j{ { "schema_version", schema_version }, { "command", "fourier" }, { "spec", spec_json(spec) },
            { "modulus", m }, { "dft_R", fourier_json(r) }, { "dft_T", fourier_json(t) } };
        auto orbits = nlohmann::json::array();
        for (auto & o : unit_orbits(m).orbits)
            orbits.push_back({ { "order", o.order }, { "members", o.members.elements() } });
        j["unit_orbits"] = orbits;
        j["R_orbit_union"] = is_orbit_union(spec.R);
        j["T_orbit_union"] = is_orbit_union(spec.T);
        auto cosets = nlohmann::json::array();
        for (int d : divisors(m)) {
            auto pr = coset_profile(spec.R, d), pt = coset_profile(spec.T, d);
            cosets.push_back({ { "r", d }, { "R_counts", pr.counts }, { "T_counts", pt.counts },
                { "R_transversal", is_transversal(spec.R, d) }, { "T_transversal", is_transversal(spec.T, d) } });
        }
        j["coset_profiles"] = cosets;

        std::ostringstream text;
        text << format_spec(spec) << "\n" << std::setprecision(6) << std::fixed;
        text << "z  F(Delta_R)(z)  F(Delta_T)(z)\n";
        for (int z = 0; z < m; ++z)
            text << z << "  " << r.values[z].real() << (r.values[z].imag() < 0 ? "-" : "+") << std::abs(r.values[z].imag())
                 << "i  " << t.values[z].real() << (t.values[z].imag() < 0 ? "-" : "+") << std::abs(t.values[z].imag())
                 << "i\n";
        text << std::defaultfloat;
        text << "R union of unit orbits: " << yes_no(is_orbit_union(spec.R)) << "; T: " << yes_no(is_orbit_union(spec.T))
             << "\n";
        for (auto & c : cosets) {
            if (c["R_transversal"].get<bool>())
                text << "R is a transversal of " << c["r"].get<int>() << "Z_" << m << "\n";
            if (c["T_transversal"].get<bool>())
                text << "T is a transversal of " << c["r"].get<int>() << "Z_" << m << "\n";
        }

        if (! validation.connected()) {
            j["fourier_lemma"] = nullptr;
            text << "Fourier lemma: not applicable (disconnected)\n";
        }
        else {
            auto g = build_graph(spec);
            auto drg = is_distance_regular(g, true);
            if (auto * array = std::get_if<IntersectionArray>(&drg)) {
                auto check = check_fourier_lemma(spec, distance_partition(g, 0), *array, config.tolerance);
                j["fourier_lemma"] = { { "exact_holds", check.exact_holds }, { "numeric_holds", check.numeric_holds },
                    { "max_residual", round12(check.max_residual) }, { "tolerance", config.tolerance } };
                text << "Fourier lemma (array " << array->to_string() << "): " << (check.holds() ? "holds" : "FAILS")
                     << ", max residual " << check.max_residual << "\n";
            }
            else {
                j["fourier_lemma"] = nullptr;
                text << "Fourier lemma: not applicable (not distance-regular)\n";
            }
        }
        emit(config, out, config.format == "json" ? dump(j) : text.str());
        return Ok;
    }
}

auto parse_n_range(const std::string & text) -> std::pair<int, int>
{
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageFailure("--n-range: expected A..B, got \"" + text + "\"");
    try {
        std::size_t used_a = 0, used_b = 0;
        auto a_text = text.substr(0, dots), b_text = text.substr(dots + 2);
        int a = std::stoi(a_text, &used_a), b = std::stoi(b_text, &used_b);
        if (used_a != a_text.size() || used_b != b_text.size() || a < 1 || b < a)
            throw std::invalid_argument("range");
        return { a, b };
    }
    catch (const std::logic_error &) {
        throw UsageFailure("--n-range: expected A..B with 1 <= A <= B, got \"" + text + "\"");
    }
}

auto parse_command_line(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
    -> std::variant<RunConfig, int>
{
    RunConfig config;
    std::string n_range;
    bool no_dedup = false;
    int limit = 0;

    CLI::App app{ "Distance-regular Cayley graphs on dicyclic groups", "dicirc" };
    app.require_subcommand(1);

    auto common = [&](CLI::App * sub) {
        sub->add_option("--out", config.out, "write the report to this file");
        sub->add_option("--format", config.format, "json, csv or text")
            ->check(CLI::IsMember({ "json", "csv", "text" }));
        sub->add_option("--tolerance", config.tolerance, "floating-point tolerance")->check(CLI::PositiveNumber);
    };
    auto spec_arg = [&](CLI::App * sub) {
        sub->add_option("spec,--spec", config.spec, "connection spec, e.g. \"n=2; R=1,3; T=0,2\"");
    };

    auto * check = app.add_subcommand("check", "validate, build, test distance-regularity and classify one spec");
    spec_arg(check);
    common(check);
    auto * cls = app.add_subcommand("classify", "classify one spec without distance computations");
    spec_arg(cls);
    common(cls);
    auto * sur = app.add_subcommand("survey", "exhaustive survey of every spec for each n");
    common(sur);
    sur->add_option("--n", config.n, "n");
    sur->add_option("--n-range", n_range, "A..B");
    sur->add_option("--workers", config.workers, "worker threads")->check(CLI::Range(1, 1024));
    sur->add_flag("--no-dedup", no_dedup, "evaluate every spec instead of one per canonical class");
    auto * ds = app.add_subcommand("search-ds", "search for difference sets");
    common(ds);
    ds->add_option("--n", config.n, "cyclic: group order; dicyclic: n of Dic_n")->required();
    ds->add_option("--group", config.group, "cyclic or dicyclic")->check(CLI::IsMember({ "cyclic", "dicyclic" }));
    ds->add_option("--k", config.k, "set size");
    ds->add_option("--lambda", config.lambda, "lambda");
    ds->add_option("--limit", limit, "stop after this many sets per parameter triple")->check(CLI::PositiveNumber);
    auto * fou = app.add_subcommand("fourier", "DFT, unit-orbit and transversal diagnostics for one spec");
    spec_arg(fou);
    common(fou);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return Ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }

    for (auto * sub : app.get_subcommands())
        config.command = sub->get_name();
    config.dedup = ! no_dedup;
    if (limit > 0)
        config.limit = limit;
    if (! n_range.empty()) {
        try {
            config.n_range = parse_n_range(n_range);
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return UsageError;
        }
    }
    return config;
}

auto run(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
{
    try {
        if (config.tolerance <= 0)
            throw UsageFailure("--tolerance: must be positive");
        if (config.workers < 1)
            throw UsageFailure("--workers: must be at least 1");
        if (config.command == "check")
            return run_check(config, out);
        if (config.command == "classify")
            return run_classify(config, out);
        if (config.command == "survey")
            return run_survey(config, out, err);
        if (config.command == "search-ds")
            return run_search_ds(config, out);
        if (config.command == "fourier")
            return run_fourier(config, out);
        throw UsageFailure("unknown command \"" + config.command + "\"");
    }
    catch (const UsageFailure & e) {
        err << "error: " << e.what() << "\n";
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
    }
    return UsageError;
}

auto main_entry(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    auto parsed = parse_command_line(argc, argv, out, err);
    if (auto * code = std::get_if<int>(&parsed))
        return *code;
    return run(std::get<RunConfig>(parsed), out, err);
}

} // namespace dicirc::cli
