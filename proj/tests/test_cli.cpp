#include <dicirc/cli.hpp>
#include <dicirc/report.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dicirc;

namespace
{
    struct Result {
        int code;
        std::string out;
        std::string err;
    };

    auto invoke(std::vector<std::string> args) -> Result
    {
        args.insert(args.begin(), "dicirc");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
        return { code, out.str(), err.str() };
    }

    auto faulty(const ConnectionSpec & s) -> Classification
    {
        auto c = classify(s);
        if (std::holds_alternative<drg_class::CompleteGraph>(c.tag))
            return { drg_class::NotDistanceRegular{ "injected" }, {} };
        return c;
    }
}

TEST_CASE("check reports a DRG with its array and class")
{
    auto r = invoke({ "check", "n=2; R=1,3; T=0,1,2,3" });
    CHECK(r.code == 0);
    CHECK(r.out.find("DRG, array {6,1;1,6}, class CompleteMultipartite(4,2)") != std::string::npos);

    auto flag = invoke({ "check", "--spec", "n=2; R=1,3; T=0,1,2,3", "--format", "json" });
    CHECK(flag.code == 0);
    auto j = nlohmann::json::parse(flag.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["drg"] == true);
    CHECK(j["array"]["b"] == nlohmann::json::array({ 6, 1 }));
    CHECK(j["class"]["label"] == "CompleteMultipartite(4,2)");
    CHECK(dump(j) == flag.out);

    auto not_drg = invoke({ "check", "n=4; R=1,7; T=1,5" });
    CHECK(not_drg.code == 0);
    CHECK(not_drg.out.find("not DRG") != std::string::npos);

    auto disconnected = invoke({ "check", "n=2; R=; T=0,2" });
    CHECK(disconnected.code == 0);
    CHECK(disconnected.out.find("not connected") != std::string::npos);
}

TEST_CASE("usage errors exit with 2 and name the problem")
{
    auto asym = invoke({ "check", "n=2; R=1; T=0,2" });
    CHECK(asym.code == 2);
    CHECK(asym.err.find("RNotSymmetric") != std::string::npos);

    auto parse = invoke({ "check", "n=2; R=1,q; T=0" });
    CHECK(parse.code == 2);
    CHECK(parse.err.find("position") != std::string::npos);

    auto range = invoke({ "survey", "--n-range", "3-5" });
    CHECK(range.code == 2);
    CHECK(range.err.find("--n-range") != std::string::npos);

    auto workers = invoke({ "survey", "--n", "2", "--workers", "0" });
    CHECK(workers.code == 2);
    CHECK(workers.err.find("--workers") != std::string::npos);

    auto tol = invoke({ "fourier", "n=1; R=; T=0,1", "--tolerance", "-1" });
    CHECK(tol.code == 2);
    CHECK(tol.err.find("--tolerance") != std::string::npos);

    CHECK(invoke({ "survey", "--n", "2", "--format", "xml" }).code == 2);
    CHECK(invoke({ "survey" }).err.find("--n") != std::string::npos);
    CHECK(invoke({ "check" }).err.find("--spec") != std::string::npos);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({ "frobnicate" }).code == 2);
    CHECK(invoke({ "search-ds", "--group", "cyclic", "--n", "7", "--k", "5" }).code == 2);
    CHECK(invoke({ "--help" }).code == 0);
    CHECK(invoke({ "check", "--format", "csv", "n=1; R=; T=0,1" }).code == 2);
}

TEST_CASE("parse_n_range")
{
    CHECK(cli::parse_n_range("1..6") == std::pair{ 1, 6 });
    CHECK(cli::parse_n_range("4..4") == std::pair{ 4, 4 });
    CHECK_THROWS(cli::parse_n_range("5..4"));
    CHECK_THROWS(cli::parse_n_range("0..4"));
    CHECK_THROWS(cli::parse_n_range("1..x"));
}

TEST_CASE("survey --n 3 --format json lists only complete and complete multipartite graphs")
{
    auto r = invoke({ "survey", "--n", "3", "--format", "json" });
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(dump(j) == r.out);
    REQUIRE(j["surveys"].size() == 1);
    auto & instances = j["surveys"][0]["drg_instances"];
    CHECK(instances.size() == 5);
    for (auto & inst : instances) {
        auto tag = inst["class"]["tag"].get<std::string>();
        CHECK((tag == "CompleteGraph" || tag == "CompleteMultipartite"));
    }
}

TEST_CASE("survey writes CSV and JSON files")
{
    auto dir = std::filesystem::temp_directory_path() / "dicirc_cli_test";
    std::filesystem::create_directories(dir);
    auto csv = (dir / "summary.csv").string(), json = (dir / "report.json").string();

    CHECK(invoke({ "survey", "--n-range", "1..2", "--format", "csv", "--out", csv }).code == 0);
    std::ifstream c(csv);
    std::string header;
    std::getline(c, header);
    CHECK(header == "n,R,T,connected,drg,array,class,bipartite,antipodal,primitive,fourier_ok");

    CHECK(invoke({ "survey", "--n", "2", "--no-dedup", "--workers", "2", "--format", "json", "--out", json }).code == 0);
    std::ifstream in(json);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto j = nlohmann::json::parse(buffer.str());
    CHECK(j["surveys"][0]["evaluated_specs"] == 16);
    CHECK(j["surveys"][0]["dedup"] == false);
    CHECK(dump(j) == buffer.str());
    std::filesystem::remove_all(dir);

    CHECK(invoke({ "survey", "--n", "1", "--out", "/nonexistent-dir/x.json" }).code == 2);
}

TEST_CASE("search-ds")
{
    auto z7 = invoke({ "search-ds", "--group", "cyclic", "--n", "7", "--k", "3", "--format", "json" });
    CHECK(z7.code == 0);
    auto j = nlohmann::json::parse(z7.out);
    CHECK(j["searches"][0]["lambda"] == 1);
    CHECK(j["searches"][0]["count"] == 2);
    CHECK_FALSE(j.contains("family_iii"));

    auto q8 = nlohmann::json::parse(invoke({ "search-ds", "--n", "2", "--format", "json" }).out);
    CHECK(q8["searches"].empty());

    auto dic4 = invoke({ "search-ds", "--n", "4", "--k", "6", "--lambda", "2", "--format", "json" });
    CHECK(dic4.code == 0);
    auto d = nlohmann::json::parse(dic4.out);
    CHECK(d["family_iii"]["n"] == 8);
    if (d["family_iii"]["instances"].empty())
        CHECK(d["family_iii"]["statement"] == "no family (iii) instance exists at n=8 via this construction");

    auto limited = nlohmann::json::parse(invoke({ "search-ds", "--n", "4", "--k", "6", "--limit", "3", "--format", "json" }).out);
    CHECK(limited["searches"][0]["count"].get<int>() <= 3);
}

TEST_CASE("fourier and classify commands")
{
    auto f = invoke({ "fourier", "n=2; R=1,3; T=0,1,2,3", "--format", "json" });
    CHECK(f.code == 0);
    auto j = nlohmann::json::parse(f.out);
    CHECK(j["dft_R"].size() == 4);
    CHECK(j["fourier_lemma"]["exact_holds"] == true);
    CHECK(j["fourier_lemma"]["numeric_holds"] == true);
    CHECK(j["unit_orbits"].size() == 3);
    CHECK(dump(j) == f.out);
    CHECK(invoke({ "fourier", "n=4; R=1,7; T=1,5" }).out.find("not distance-regular") != std::string::npos);

    auto c = invoke({ "classify", "n=4; R=1,7; T=1,5" });
    CHECK(c.code == 0);
    CHECK(c.out.find("NotDistanceRegular") != std::string::npos);
    CHECK(c.out.find("violated") != std::string::npos);
    CHECK(invoke({ "classify", "n=2; R=; T=0,2" }).code == 2);
}

TEST_CASE("an injected classifier fault raises exit code 1")
{
    cli::RunConfig config;
    config.command = "survey";
    config.n = 2;
    config.classifier = faulty;
    std::ostringstream out, err;
    CHECK(cli::run(config, out, err) == cli::CrossCheckFailed);
    CHECK(err.str().find("cross-check") != std::string::npos);

    config.command = "check";
    config.n.reset();
    config.spec = "n=2; R=1,2,3; T=0,1,2,3";
    std::ostringstream out2, err2;
    CHECK(cli::run(config, out2, err2) == cli::CrossCheckFailed);
    CHECK(out2.str().find("CROSS-CHECK FAILURE") != std::string::npos);

    config.classifier = classify;
    std::ostringstream out3, err3;
    CHECK(cli::run(config, out3, err3) == cli::Ok);
}
