#pragma once

#include <dicirc/classifier.hpp>
#include <dicirc/fourier.hpp>
#include <dicirc/search.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace dicirc {

constexpr int schema_version = 1;

/// Round to 12 decimal places; -0 becomes 0.
auto round12(double x) -> double;

auto spec_json(const ConnectionSpec & spec) -> nlohmann::json;
auto array_json(const IntersectionArray & array) -> nlohmann::json;
auto classification_json(const Classification & c) -> nlohmann::json;
auto fourier_json(const FourierVector & f) -> nlohmann::json;
auto drg_instance_json(const DrgInstance & instance) -> nlohmann::json;
auto survey_json(const SurveyReport & report) -> nlohmann::json;

/// {"schema_version": 1, "command": "survey", "tolerance": ..., "surveys": [...]}
auto survey_document(const std::vector<SurveyReport> & reports, double tolerance) -> nlohmann::json;

/// Header n,R,T,connected,drg,array,class,bipartite,antipodal,primitive,fourier_ok and one
/// row per evaluated spec. R and T are space-separated residue lists.
auto survey_csv(const std::vector<SurveyReport> & reports) -> std::string;

/// Canonical serialisation used for every JSON artefact (2-space indent, trailing newline).
auto dump(const nlohmann::json & j) -> std::string;

} // namespace dicirc
