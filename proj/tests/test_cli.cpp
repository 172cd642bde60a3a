#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qcf/cli.hpp"

namespace qcf {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qcf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QCF_DATA_DIR) + "/" + name; }

TEST(Cli, ReproduceEveryExample) {
    for (const char* name : {"binary", "appendix_b", "model_ab", "appendix_e", "appendix_e_general", "toy"}) {
        const auto r = run({"reproduce", name});
        EXPECT_EQ(r.code, 0) << name << r.out;
        EXPECT_TRUE(nlohmann::json::parse(r.out)["passed"].get<bool>()) << name;
    }
}

TEST(Cli, UnknownExampleIsUsageError) {
    const auto r = run({"reproduce", "nope"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bounds", "--model", data("uniform2.json")}).code, 2);  // missing --target
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, IdentifyBinary) {
    const auto r = run({"identify", "--model", data("uniform2.json"), "--level", "one-way", "--target", "0:0,1:0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["identifiable"].get<bool>());
    EXPECT_EQ(j["lo"], "0/1");
    EXPECT_EQ(j["hi"], "1/2");
    EXPECT_EQ(j["witness_lo"], (nlohmann::json{{"01", "1/2"}, {"10", "1/2"}}));
    EXPECT_EQ(j["witness_hi"], (nlohmann::json{{"00", "1/2"}, {"11", "1/2"}}));

    const auto two = run({"identify", "--model", data("mixIF.json"), "--level", "two-way", "--target", "0:0,1:0"});
    EXPECT_TRUE(nlohmann::json::parse(two.out)["identifiable"].get<bool>());
}

TEST(Cli, BoundsModelA) {
    const auto r = run({"bounds", "--model", data("modelA.json"), "--level", "two-way", "--target", "0:0,1:1,2:2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["lo"], "0/1");
    EXPECT_EQ(j["hi"], "1/9");
}

TEST(Cli, BoundsSeparationModel) {
    const auto q = run({"bounds", "--model", data("appE.json"), "--level", "two-way", "--target", "0:1,1:1,2:1"});
    const auto c = run({"bounds", "--model", data("appE.json"), "--level", "one-way", "--target", "0:1,1:1,2:1"});
    EXPECT_EQ(nlohmann::json::parse(q.out)["hi"], "1/4");
    EXPECT_EQ(nlohmann::json::parse(c.out)["hi"], "1/2");
}

TEST(Cli, SimulateIsDeterministicAndCopiesInput) {
    const std::vector<std::string> args{"simulate", "--model", data("uniform2.json"), "--queries", "1000", "--seed", "7"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::istringstream in(a.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x_in,x_out,y_out,query_index");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(line[0], line[2]) << line;
    }
    EXPECT_EQ(rows, 1000);
    const auto j = run({"simulate", "--model", data("mixIF.json"), "--queries", "10", "--output", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["records"].size(), 10u);
}

TEST(Cli, Tomography) {
    const auto r = run({"tomography", "--model", data("mixIF.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("0,1,0,1,0.5\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0,1,0,0,0\n"), std::string::npos) << r.out;
    const auto j = run({"tomography", "--model", data("uniform2.json"), "--output", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["dim"], 4);
}

TEST(Cli, ToyCheck) {
    const auto r = run({"toy-check"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 42u);
    for (const auto& row : j) EXPECT_TRUE(row["equal"].get<bool>());
}

TEST(Cli, BadModelFiles) {
    const std::string dir = ::testing::TempDir();
    const std::string malformed = dir + "/malformed.json";
    const std::string unnormalized = dir + "/unnormalized.json";
    {
        std::ofstream(malformed) << "{\"n_x\": 2,\n  \"n_y\" 2}";
        std::ofstream(unnormalized) << R"({"n_x": 2, "n_y": 2, "pF": {"01": "1/2"}})";
    }
    const auto a = run({"bounds", "--model", malformed, "--target", "0:0"});
    EXPECT_EQ(a.code, 2);
    EXPECT_NE(a.err.find("line 2"), std::string::npos) << a.err;
    const auto b = run({"bounds", "--model", unnormalized, "--target", "0:0"});
    EXPECT_EQ(b.code, 2);
    EXPECT_NE(b.err.find("validation error"), std::string::npos) << b.err;
    EXPECT_EQ(run({"bounds", "--model", data("uniform2.json"), "--target", "0:0", "--output", "csv"}).code, 2);
    EXPECT_EQ(run({"bounds", "--model", data("uniform2.json"), "--target", "0:5"}).code, 2);
}

}  // namespace
}  // namespace qcf
