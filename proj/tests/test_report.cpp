#include <dicirc/report.hpp>
#include <dicirc/search.hpp>

#include <doctest.h>

#include <sstream>

using namespace dicirc;

TEST_CASE("round12 normalises negative zero and rounds")
{
    CHECK(round12(-0.0) == 0.0);
    CHECK_FALSE(std::signbit(round12(-1e-15)));
    CHECK(round12(0.1234567890123456) == doctest::Approx(0.123456789012).epsilon(1e-15));
    CHECK(round12(2.0) == 2.0);
}

TEST_CASE("survey JSON has the versioned schema and round-trips byte for byte")
{
    std::vector<SurveyReport> reports{ survey(2), survey(3) };
    auto text = dump(survey_document(reports, 1e-9));
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["surveys"].size() == 2);
    CHECK(dump(parsed) == text);

    auto & first = parsed["surveys"][0];
    CHECK(first["n"] == 2);
    CHECK(first["total_specs"] == 16);
    CHECK(first["cross_check_failures"].empty());
    for (auto & inst : first["drg_instances"]) {
        auto r = inst["spec"]["R"].get<std::vector<int>>();
        CHECK(std::is_sorted(r.begin(), r.end()));
        CHECK(inst["class"]["tag"].is_string());
    }
}

TEST_CASE("Fourier vectors serialise as rounded pairs")
{
    auto j = fourier_json(dft(characteristic(ResidueSet(4, { 0, 1 }))));
    REQUIRE(j.size() == 4);
    CHECK(j[0] == nlohmann::json::array({ 2.0, 0.0 }));
    CHECK(j[1] == nlohmann::json::array({ 1.0, 1.0 }));
    CHECK(j[2] == nlohmann::json::array({ 0.0, 0.0 }));
    CHECK(j[3] == nlohmann::json::array({ 1.0, -1.0 }));
    CHECK(dump(nlohmann::json::parse(dump(j))) == dump(j));
}

TEST_CASE("CSV summary")
{
    auto csv = survey_csv({ survey(1) });
    std::istringstream in(csv);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "n,R,T,connected,drg,array,class,bipartite,antipodal,primitive,fourier_ok");
    std::vector<std::string> rows;
    while (std::getline(in, line))
        rows.push_back(line);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1] == "1,,0 1,1,1,\"{2,1;1,2}\",\"CompleteMultipartite(2,2)\",1,1,0,1");
    CHECK(rows[3] == "1,1,0 1,1,1,{3;1},CompleteGraph,0,1,1,1");
}
