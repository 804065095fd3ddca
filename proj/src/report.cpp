#include <dicirc/report.hpp>

#include <cmath>
#include <sstream>

namespace dicirc {

auto round12(double x) -> double
{
    double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

auto spec_json(const ConnectionSpec & spec) -> nlohmann::json
{
    return { { "n", spec.n }, { "R", spec.R.elements() }, { "T", spec.T.elements() } };
}

auto array_json(const IntersectionArray & array) -> nlohmann::json
{
    nlohmann::json j{ { "b", array.b }, { "c", array.c }, { "diameter", array.diameter() }, { "k", array.valency() },
        { "lambda", array.lambda() } };
    j["mu"] = array.mu() ? nlohmann::json(*array.mu()) : nlohmann::json(nullptr);
    return j;
}

auto classification_json(const Classification & c) -> nlohmann::json
{
    nlohmann::json j{ { "tag", c.tag_name() }, { "label", c.to_string() }, { "evidence", c.evidence } };
    std::visit([&](auto && t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, drg_class::CompleteGraph>)
            j["order"] = t.order;
        else if constexpr (std::is_same_v<T, drg_class::CompleteMultipartite>) {
            j["t"] = t.t;
            j["m"] = t.m;
        }
        else if constexpr (std::is_same_v<T, drg_class::BipartiteD3Family>) {
            j["k"] = t.k;
            j["mu"] = t.mu;
        }
        else
            j["witness"] = t.witness;
    }, c.tag);
    return j;
}

auto fourier_json(const FourierVector & f) -> nlohmann::json
{
    auto j = nlohmann::json::array();
    for (auto & v : f.values)
        j.push_back({ round12(v.real()), round12(v.imag()) });
    return j;
}

auto drg_instance_json(const DrgInstance & inst) -> nlohmann::json
{
    nlohmann::json j{
        { "spec", spec_json(inst.spec) },
        { "array", array_json(inst.array) },
        { "class", classification_json(inst.classification) },
        { "family", inst.family },
        { "bipartite", inst.bipartite },
        { "antipodal", inst.antipodal },
        { "antipodal_by_convention", inst.antipodal_by_convention },
        { "fibre_size", inst.fibre_size },
        { "primitive", inst.primitive },
        { "crown", inst.crown },
        { "fibres_equitable", inst.fibres_equitable },
        { "quotient_bipartite_ok", inst.quotient_bipartite_ok },
        { "antipodal_nonbipartite_d3", inst.antipodal_nonbipartite_d3 },
        { "antipodal_bipartite_d4", inst.antipodal_bipartite_d4 },
        { "antipodal_array_shape_ok", inst.antipodal_array_shape_ok },
        { "lambda_even", inst.lambda_even },
        { "mu_parity_ok", inst.mu_parity_ok },
        { "fourier_ok", inst.fourier.holds() },
        { "fourier_exact_ok", inst.fourier.exact_holds },
        { "fourier_max_residual", round12(inst.fourier.max_residual) },
    };
    j["halved_complete"] = inst.halved_complete ? nlohmann::json(*inst.halved_complete) : nlohmann::json(nullptr);
    return j;
}

auto survey_json(const SurveyReport & report) -> nlohmann::json
{
    nlohmann::json j{
        { "n", report.n },
        { "dedup", report.dedup },
        { "total_specs", report.total_specs },
        { "connected_specs", report.connected_specs },
        { "canonical_classes", report.canonical_classes },
        { "evaluated_specs", report.evaluated_specs },
        { "drg_count", report.drg_instances.size() },
        { "reproduces_theorem", report.reproduces_theorem() },
    };
    j["drg_instances"] = nlohmann::json::array();
    for (auto & inst : report.drg_instances)
        j["drg_instances"].push_back(drg_instance_json(inst));
    j["cross_check_failures"] = nlohmann::json::array();
    for (auto & f : report.failures)
        j["cross_check_failures"].push_back({ { "spec", spec_json(f.spec) }, { "reason", f.reason } });
    return j;
}

auto survey_document(const std::vector<SurveyReport> & reports, double tolerance) -> nlohmann::json
{
    nlohmann::json j{ { "schema_version", schema_version }, { "command", "survey" }, { "tolerance", tolerance } };
    j["surveys"] = nlohmann::json::array();
    for (auto & r : reports)
        j["surveys"].push_back(survey_json(r));
    return j;
}

namespace
{
    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"") == std::string::npos)
            return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"')
                quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }

    auto spaced(const ResidueSet & s) -> std::string
    {
        auto text = s.to_string();
        for (auto & c : text)
            if (c == ',')
                c = ' ';
        return text;
    }
}

auto survey_csv(const std::vector<SurveyReport> & reports) -> std::string
{
    std::ostringstream out;
    out << "n,R,T,connected,drg,array,class,bipartite,antipodal,primitive,fourier_ok\n";
    auto flag = [](bool b) { return b ? "1" : "0"; };
    for (auto & report : reports)
        for (auto & row : report.rows)
            out << row.spec.n << ',' << spaced(row.spec.R) << ',' << spaced(row.spec.T) << ',' << flag(row.connected)
                << ',' << flag(row.drg) << ',' << csv_field(row.array) << ',' << csv_field(row.classification) << ','
                << flag(row.bipartite) << ',' << flag(row.antipodal) << ',' << flag(row.primitive) << ','
                << flag(row.fourier_ok) << '\n';
    return out.str();
}

auto dump(const nlohmann::json & j) -> std::string
{
    return j.dump(2) + "\n";
}

} // namespace dicirc
