#include <gtest/gtest.h>

#include "qcf/errors.hpp"
#include "qcf/model_io.hpp"
#include "qcf/models.hpp"

namespace qcf {
namespace {

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(to_string(Rational(0)), "0/1");
    EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1/2/3"), ParseError);
    EXPECT_THROW(parse_rational("0.5"), ParseError);
    EXPECT_EQ(exact_from_double(0.375), Rational(3, 8));
}

TEST(ModelIo, RoundTrip) {
    for (const auto& pF : {models::uniform_all(2, 2), models::affine_mod(3), models::uniform_head_fixed_tail(4, {1})}) {
        const auto back = model_from_json(to_json(pF));
        EXPECT_EQ(std::get<FunctionDistribution>(back), pF);
    }
    std::vector<Rational> joint(8, 0);
    joint[0] = Rational(1, 2);
    joint[7] = Rational(1, 2);
    const ConfoundedModel m(2, 2, joint);
    const auto back = model_from_json(to_json(m));
    EXPECT_EQ(std::get<ConfoundedModel>(back).joint_weights().size(), 8u);
    EXPECT_EQ(response_distribution(back),
              FunctionDistribution::uniform_over(2, 2, {binary::reset0(), binary::reset1()}));
}

TEST(ModelIo, ParseErrorReportsPosition) {
    try {
        parse_model("{\"n_x\": 2,\n \"n_y\": }");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
    }
}

TEST(ModelIo, ValidationErrorsNameTheInvariant) {
    try {
        parse_model(R"({"n_x": 2, "n_y": 2, "pF": {"01": "1/2", "10": "1/4"}})");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("sum"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_model(R"({"n_x": 2, "n_y": 2, "pF": {"01": 0.5, "10": "1/2"}})"), ValidationError);
    EXPECT_THROW(parse_model(R"({"n_x": 2, "pF": {}})"), ValidationError);
    EXPECT_THROW(parse_model(R"({"n_x": 2, "n_y": 2, "pF": {"012": "1/1"}})"), ValidationError);
    EXPECT_THROW(parse_model(R"({"n_x": 2, "n_y": 2, "pF": {"01": "1/1"}, "joint": {}})"), ValidationError);
    EXPECT_THROW(parse_model(R"({"n_x": 2, "n_y": 2, "joint": {"2|01": "1/1"}})"), ValidationError);
    EXPECT_THROW(load_model("/nonexistent/model.json"), ParseError);
}

}  // namespace
}  // namespace qcf
