#include <random>

#include <gtest/gtest.h>

#include "qcf/causal_core.hpp"
#include "qcf/errors.hpp"
#include "qcf/models.hpp"
#include "random_models.hpp"

namespace qcf {
namespace {

using binary::flip;
using binary::identity;
using binary::reset0;
using binary::reset1;

const Rational half(1, 2);

TEST(FunctionTable, CanonicalIndexIsLexicographic) {
    const auto all = enumerate_functions(2, 2);
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(all[0], reset0());
    EXPECT_EQ(all[1], identity());
    EXPECT_EQ(all[2], flip());
    EXPECT_EQ(all[3], reset1());
    for (std::uint64_t i = 0; i < 27; ++i) {
        const auto f = FunctionTable::from_index(3, 3, i);
        EXPECT_EQ(f.index(), i);
        EXPECT_EQ(FunctionTable::from_key(3, 3, f.key()), f);
    }
    EXPECT_EQ(identity().key(), "01");
    EXPECT_EQ(FunctionTable::from_index(3, 3, 5).key(), "012");
}

TEST(FunctionTable, WideOutputsUseCommaKeys) {
    const FunctionTable f(12, {11, 0});
    EXPECT_EQ(f.key(), "11,0");
    EXPECT_EQ(FunctionTable::from_key(2, 12, "11,0"), f);
}

TEST(FunctionTable, RejectsBadInput) {
    EXPECT_THROW(FunctionTable(2, {0, 2}), DomainError);
    EXPECT_THROW(identity()(2), DomainError);
    EXPECT_THROW(FunctionTable::from_key(2, 2, "0a"), ParseError);
    EXPECT_THROW(FunctionTable::from_key(2, 2, "010"), ValidationError);
}

TEST(FunctionTable, EnumerationCap) {
    EXPECT_EQ(table_count(4, 2), 16u);
    EXPECT_THROW(table_count(7, 10), ResourceError);
    try {
        enumerate_functions(3, 3, 10);
        FAIL();
    } catch (const ResourceError& e) {
        EXPECT_EQ(e.cap(), 10u);
    }
}

TEST(FunctionDistribution, Validation) {
    EXPECT_THROW(FunctionDistribution(2, 2, {half, half, 0}), ContractError);
    EXPECT_THROW(FunctionDistribution(2, 2, {half, half, half, -half}), ValidationError);
    EXPECT_THROW(FunctionDistribution(2, 2, {half, 0, 0, 0}), ValidationError);
    const auto m = FunctionDistribution::mixture(2, 2, {{identity(), half}, {identity(), half}});
    EXPECT_EQ(m, FunctionDistribution::point_mass(identity()));
    EXPECT_EQ(m.support(), std::vector<std::uint64_t>{1});
}

TEST(Conditional, Examples) {
    const auto mix_if = FunctionDistribution::uniform_over(2, 2, {identity(), flip()});
    EXPECT_EQ(conditional(mix_if, 0), (std::vector<Rational>{half, half}));
    EXPECT_EQ(conditional(FunctionDistribution::point_mass(identity()), 1), (std::vector<Rational>{0, 1}));
    EXPECT_THROW(conditional(mix_if, 2), DomainError);
}

TEST(JointCounterfactual, Examples) {
    const auto mix_if = FunctionDistribution::uniform_over(2, 2, {identity(), flip()});
    const auto mix_r = FunctionDistribution::uniform_over(2, 2, {reset0(), reset1()});
    const CounterfactualQuery q({{0, 0}, {1, 0}});
    EXPECT_EQ(joint_counterfactual(mix_if, q), 0);
    EXPECT_EQ(joint_counterfactual(mix_r, q), half);
    EXPECT_EQ(joint_counterfactual(models::affine_mod(3), CounterfactualQuery::parse("0:0,1:1,2:2")),
              Rational(1, 9));
    EXPECT_EQ(joint_counterfactual(models::uniform_all(3, 3), CounterfactualQuery::parse("0:0,1:1,2:2")),
              Rational(1, 27));
}

TEST(CounterfactualQuery, ParseAndContract) {
    const auto q = CounterfactualQuery::parse("0:1, 2:0");
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q.pairs()[1], (CounterfactualQuery::Pair{2, 0}));
    EXPECT_EQ(q.to_string(), "0:1,2:0");
    EXPECT_THROW(CounterfactualQuery({}), ContractError);
    EXPECT_THROW(CounterfactualQuery({{0, 0}, {0, 1}}), ContractError);
    EXPECT_THROW(CounterfactualQuery::parse("0-1"), ParseError);
    EXPECT_THROW(CounterfactualQuery::parse(""), ParseError);
    EXPECT_THROW(joint_counterfactual(models::uniform_all(2, 2), CounterfactualQuery::parse("0:0,2:0")),
                 DomainError);
}

TEST(ConditionalCounterfactual, BinaryWitnesses) {
    const auto mix_if = FunctionDistribution::uniform_over(2, 2, {identity(), flip()});
    const auto mix_r = FunctionDistribution::uniform_over(2, 2, {reset0(), reset1()});
    EXPECT_EQ(conditional_counterfactual(mix_if, {0, 0}, 1, 0), 0);
    EXPECT_EQ(conditional_counterfactual(mix_r, {0, 0}, 1, 0), 1);
    // Same input as observed: the answer is the observation itself.
    EXPECT_EQ(conditional_counterfactual(mix_if, {0, 0}, 0, 0), 1);
    EXPECT_EQ(conditional_counterfactual(mix_if, {0, 0}, 0, 1), 0);
    EXPECT_THROW(conditional_counterfactual(FunctionDistribution::point_mass(identity()), {0, 1}, 1, 0),
                 UndefinedConditionalError);
}

TEST(Confounded, Examples) {
    // Perfect confounding: r_x = 0 comes with R0, r_x = 1 with R1.
    std::vector<Rational> joint(8, 0);
    joint[0 * 4 + 0] = half;
    joint[1 * 4 + 3] = half;
    const ConfoundedModel confounded(2, 2, joint);
    EXPECT_FALSE(confounded.factorizes());
    EXPECT_EQ(observational_conditional(confounded, 0), (std::vector<Rational>{1, 0}));
    EXPECT_EQ(do_conditional(confounded, 0), (std::vector<Rational>{half, half}));
    const auto obs = observational_joint(confounded);
    EXPECT_EQ(obs[0][0], half);
    EXPECT_EQ(obs[1][1], half);

    const std::vector<Rational> px{half, half};
    const auto product = ConfoundedModel::product(px, FunctionDistribution::uniform_over(2, 2, {identity(), flip()}));
    EXPECT_TRUE(product.factorizes());
    EXPECT_EQ(do_conditional(product, 0), (std::vector<Rational>{half, half}));
    EXPECT_EQ(do_conditional(product, 0), observational_conditional(product, 0));

    std::vector<Rational> point(8, 0);
    point[0 * 4 + 1] = 1;
    EXPECT_EQ(do_conditional(ConfoundedModel(2, 2, point), 1), (std::vector<Rational>{0, 1}));
    EXPECT_THROW(observational_conditional(ConfoundedModel(2, 2, point), 1), UndefinedConditionalError);
}

TEST(EmbedSquare, PreservesOriginalCounterfactuals) {
    std::mt19937_64 rng(11);
    const auto pF = testing::random_distribution(rng, 3, 2);
    const auto square = embed_square(pF);
    EXPECT_EQ(square.n_x(), 3u);
    EXPECT_EQ(square.n_y(), 3u);
    for (const auto& f : enumerate_functions(3, 2)) {
        std::vector<CounterfactualQuery::Pair> pairs;
        for (std::size_t x = 0; x < 3; ++x) pairs.push_back({x, f(x)});
        const CounterfactualQuery q(pairs);
        EXPECT_EQ(joint_counterfactual(square, q), joint_counterfactual(pF, q));
    }
    const auto wide = testing::random_distribution(rng, 2, 3);
    const auto wide_square = embed_square(wide);
    EXPECT_EQ(wide_square.n_x(), 3u);
    EXPECT_EQ(conditional(wide_square, 2), (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(conditional(wide_square, 1), conditional(wide, 1));
}

// Properties ----------------------------------------------------------------

Rational brute_force_joint(const FunctionDistribution& pF, const CounterfactualQuery& q) {
    Rational total = 0;
    for (const auto& f : enumerate_functions(pF.n_x(), pF.n_y())) {
        bool all = true;
        for (const auto& [x, y] : q.pairs()) all = all && f.outputs()[x] == y;
        if (all) total += pF.weight(f);
    }
    return total;
}

std::vector<CounterfactualQuery> all_queries(std::size_t n_x, std::size_t n_y) {
    std::vector<CounterfactualQuery> out;
    for (std::uint32_t mask = 1; mask < (1u << n_x); ++mask) {
        std::vector<std::size_t> xs;
        for (std::size_t x = 0; x < n_x; ++x) {
            if (mask >> x & 1) xs.push_back(x);
        }
        std::vector<std::size_t> ys(xs.size(), 0);
        for (;;) {
            std::vector<CounterfactualQuery::Pair> pairs;
            for (std::size_t i = 0; i < xs.size(); ++i) pairs.push_back({xs[i], ys[i]});
            out.emplace_back(pairs);
            std::size_t i = 0;
            while (i < ys.size() && ++ys[i] == n_y) ys[i++] = 0;
            if (i == ys.size()) break;
        }
    }
    return out;
}

class CausalProperties : public ::testing::TestWithParam<int> {};

TEST_P(CausalProperties, Invariants) {
    std::mt19937_64 rng(1000 + GetParam());
    const std::size_t n_x = 1 + rng() % 3;
    const std::size_t n_y = 1 + rng() % 3;
    const auto pF = testing::random_distribution(rng, n_x, n_y);

    for (std::size_t x = 0; x < n_x; ++x) {
        const auto c = conditional(pF, x);
        Rational sum = 0;
        for (const auto& v : c) sum += v;
        EXPECT_EQ(sum, 1);
        for (std::size_t y = 0; y < n_y; ++y) EXPECT_EQ(joint_counterfactual(pF, CounterfactualQuery({{x, y}})), c[y]);
    }

    for (const auto& q : all_queries(n_x, n_y)) {
        const auto value = joint_counterfactual(pF, q);
        EXPECT_EQ(value, brute_force_joint(pF, q)) << q.to_string();
        // Frechet: dropping any one pair can only increase the probability.
        if (q.size() >= 2) {
            for (std::size_t drop = 0; drop < q.size(); ++drop) {
                std::vector<CounterfactualQuery::Pair> sub;
                for (std::size_t i = 0; i < q.size(); ++i) {
                    if (i != drop) sub.push_back(q.pairs()[i]);
                }
                EXPECT_LE(value, joint_counterfactual(pF, CounterfactualQuery(sub))) << q.to_string();
            }
        }
    }

    for (std::size_t xo = 0; xo < n_x; ++xo) {
        for (std::size_t yo = 0; yo < n_y; ++yo) {
            const Evidence e{xo, yo};
            if (conditional(pF, xo)[yo] == 0) {
                EXPECT_THROW(abduct(pF, e), UndefinedConditionalError);
                continue;
            }
            for (std::size_t xc = 0; xc < n_x; ++xc) {
                const auto predicted = abduct_act_predict(pF, e, xc);
                for (std::size_t yc = 0; yc < n_y; ++yc) {
                    EXPECT_EQ(predicted[yc], conditional_counterfactual(pF, e, xc, yc));
                }
            }
        }
    }

    // Unconfounded collapse.
    std::vector<Rational> px(n_x);
    Rational total = 0;
    for (auto& v : px) {
        v = 1 + static_cast<long>(rng() % 4);
        total += v;
    }
    for (auto& v : px) v /= total;
    const auto product = ConfoundedModel::product(px, pF);
    EXPECT_TRUE(product.factorizes());
    EXPECT_EQ(product.response_marginal(), pF);
    for (std::size_t x = 0; x < n_x; ++x) {
        EXPECT_EQ(do_conditional(product, x), observational_conditional(product, x));
    }
}

INSTANTIATE_TEST_SUITE_P(Random, CausalProperties, ::testing::Range(0, 120));

}  // namespace
}  // namespace qcf
