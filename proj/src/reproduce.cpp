#include "qcf/reproduce.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qcf/causal_core.hpp"
#include "qcf/identify.hpp"
#include "qcf/model_io.hpp"
#include "qcf/models.hpp"
#include "qcf/quantum_oracle.hpp"
#include "qcf/toy_theory.hpp"

namespace qcf {

bool ReproductionReport::passed() const {
    for (const auto& c : claims) {
        if (!c.pass) return false;
    }
    return true;
}

void ReproductionReport::exact(std::string description, const Rational& expected, const Rational& computed) {
    claims.push_back({std::move(description), to_string(expected), to_string(computed), expected == computed});
}

void ReproductionReport::within(std::string description, double expected, double computed, double tolerance) {
    claims.push_back({std::move(description), format_double(expected), format_double(computed),
                      std::abs(expected - computed) <= tolerance});
}

void ReproductionReport::check(std::string description, std::string expected, std::string computed, bool pass) {
    claims.push_back({std::move(description), std::move(expected), std::move(computed), pass});
}

nlohmann::json to_json(const ReproductionReport& report) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : report.claims) {
        claims.push_back({{"description", c.description},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
    }
    return {{"name", report.name}, {"passed", report.passed()}, {"claims", std::move(claims)}};
}

std::string format_double(double value) {
    std::ostringstream os;
    os << std::setprecision(12) << value;
    return os.str();
}

namespace {

std::string interval(const Bounds& b) { return "[" + to_string(b.lo) + ", " + to_string(b.hi) + "]"; }

std::string model_text(const FunctionDistribution& pF) { return weights_to_json(pF).dump(); }

ReproductionReport binary_example() {
    using namespace binary;
    ReproductionReport r{"binary", {}};
    const Rational half(1, 2);
    const auto mix_if = FunctionDistribution::mixture(2, 2, {{identity(), half}, {flip(), half}});
    const auto mix_r = FunctionDistribution::mixture(2, 2, {{reset0(), half}, {reset1(), half}});
    const Evidence e{0, 0};

    r.exact("p(Y_{X=1}=0 | X=0, Y=0) under 1/2 I + 1/2 F", 0, conditional_counterfactual(mix_if, e, 1, 0));
    r.exact("p(Y_{X=1}=0 | X=0, Y=0) under 1/2 R0 + 1/2 R1", 1, conditional_counterfactual(mix_r, e, 1, 0));
    for (std::size_t x = 0; x < 2; ++x) {
        r.exact("both mixtures give p(Y=0 | X=" + std::to_string(x) + ")", conditional(mix_if, x)[0],
                conditional(mix_r, x)[0]);
    }

    // Classical access: one-way data only.
    const auto target = LinearTarget::from_query(2, 2, CounterfactualQuery({{0, 0}, {1, 0}}));
    const auto classical = is_identifiable(target, build_constraints(mix_if, ConstraintLevel::one_way));
    r.check("one-way data leave p(Y_0=0, Y_1=0) unidentified", "width > 0", interval(classical.bounds),
            classical.bounds.width() > 0);
    r.check("lower witness is 1/2 I + 1/2 F", model_text(mix_if), model_text(classical.witness_lo),
            classical.witness_lo == mix_if);
    r.check("upper witness is 1/2 R0 + 1/2 R1", model_text(mix_r), model_text(classical.witness_hi),
            classical.witness_hi == mix_r);
    r.exact("conditional counterfactual under the lower witness", 0,
            conditional_counterfactual(classical.witness_lo, e, 1, 0));
    r.exact("conditional counterfactual under the upper witness", 1,
            conditional_counterfactual(classical.witness_hi, e, 1, 0));

    // Coherent access.
    for (const auto& [name, f, coefficient] :
         {std::tuple{"I", identity(), 1.0}, std::tuple{"F", flip(), 0.0}, std::tuple{"R0", reset0(), 0.25},
          std::tuple{"R1", reset1(), 0.25}}) {
        r.within(std::string("p(Phi+ | do|+>) for the point mass on ") + name, coefficient,
                 binary_statistics(FunctionDistribution::point_mass(f)).bell, 1e-12);
    }
    const auto s_if = binary_statistics(mix_if);
    const auto s_r = binary_statistics(mix_r);
    r.within("p(Phi+ | do|+>) under 1/2 I + 1/2 F", 0.5, s_if.bell, 1e-12);
    r.within("p(Phi+ | do|+>) under 1/2 R0 + 1/2 R1", 0.25, s_r.bell, 1e-12);
    for (const auto* pF : {&mix_if, &mix_r}) {
        const auto s = binary_statistics(*pF);
        const auto solved = solve_binary_pF(s.c00, s.c01, s.bell);
        double worst = 0;
        for (std::uint64_t i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(to_double(solved.weight(i)) - to_double(pF->weight(i))));
        }
        r.within("quantum statistics recover " + model_text(*pF), 0.0, worst, 1e-9);
    }
    const auto quantum = is_identifiable(target, build_constraints(mix_if, ConstraintLevel::two_way));
    r.check("two-way data identify p(Y_0=0, Y_1=0)", "width 0", interval(quantum.bounds), quantum.identifiable);
    return r;
}

ReproductionReport mixture_contrast_example() {
    ReproductionReport r{"appendix_b", {}};
    for (std::size_t n : {2, 3}) {
        const auto rep = contrast_permutation_constant(n);
        const Rational uniform(1, static_cast<long>(n));
        const std::string tag = "n=" + std::to_string(n) + ": ";
        r.check(tag + "all conditionals equal 1/n in both models", "1/" + std::to_string(n),
                rep.conditionals_agree ? "1/" + std::to_string(n) : "mismatch", rep.conditionals_agree);
        for (std::size_t y = 0; y < n; ++y) {
            r.exact(tag + "permutations: p(Y_0=" + std::to_string(y) + ", Y_1=" + std::to_string(y) + ")", 0,
                    rep.permutation_same_output[y]);
            r.exact(tag + "constants: p(Y_0=" + std::to_string(y) + ", Y_1=" + std::to_string(y) + ")", uniform,
                    rep.constant_same_output[y]);
        }
        r.check(tag + "every x != x' separates the models", "true", rep.joints_disagree ? "true" : "false",
                rep.joints_disagree);
    }
    return r;
}

ReproductionReport model_ab_example() {
    ReproductionReport r{"model_ab", {}};
    const auto rep = reproduce_model_ab();
    r.check("one-way counterfactuals uniform in both models", "true", rep.one_way_uniform ? "true" : "false",
            rep.one_way_uniform);
    r.exact("Model A: p(Y_x=y)", Rational(1, 3), rep.one_way_a);
    r.exact("Model B: p(Y_x=y)", Rational(1, 3), rep.one_way_b);
    r.check("two-way counterfactuals uniform in both models", "true", rep.two_way_uniform ? "true" : "false",
            rep.two_way_uniform);
    r.exact("Model A: p(Y_x=y, Y_x'=y')", Rational(1, 9), rep.two_way_a);
    r.exact("Model B: p(Y_x=y, Y_x'=y')", Rational(1, 9), rep.two_way_b);
    r.exact("Model A: p(Y_0=0, Y_1=1, Y_2=2)", Rational(1, 27), rep.three_way_a);
    r.exact("Model B: p(Y_0=0, Y_1=1, Y_2=2)", Rational(1, 9), rep.three_way_b);
    r.within("max |rho_A - rho_B| with uniform input", 0.0, rep.rho_max_difference, 1e-12);
    const auto& id = rep.identification;
    r.check("three-way target not identified by two-way data", "width > 0", interval(id.bounds), !id.identifiable);
    r.check("both models inside the two-way bounds", "lo <= 1/27 and 1/9 <= hi", interval(id.bounds),
            id.bounds.lo <= Rational(1, 27) && Rational(1, 9) <= id.bounds.hi);
    return r;
}

ReproductionReport separation_example() {
    ReproductionReport r{"appendix_e", {}};
    const auto rep = bound_separation(3, {});
    const Rational q(1, 4);
    r.exact("two-way (quantum) lower bound on h", 0, rep.quantum.lo);
    r.exact("two-way (quantum) upper bound on h", q, rep.quantum.hi);
    r.exact("one-way (classical) lower bound on h", 0, rep.classical.lo);
    r.exact("one-way (classical) upper bound on h", Rational(1, 2), rep.classical.hi);

    const auto correlated = FunctionDistribution::mixture(
        3, 2, {{FunctionTable(2, {0, 0, 0}), Rational(1, 2)}, {FunctionTable(2, {1, 1, 1}), Rational(1, 2)}});
    r.check("classical maximizer is the perfectly correlated model", model_text(correlated),
            model_text(rep.classical_witness_hi), rep.classical_witness_hi == correlated);

    auto family = [&](const Rational& h) {
        const Rational g = q - h;
        return FunctionDistribution(3, 2, {g, h, h, g, h, g, g, h});
    };
    r.check("quantum minimizer is the h=0 family member", model_text(family(0)), model_text(rep.quantum_witness_lo),
            rep.quantum_witness_lo == family(0));
    r.check("quantum maximizer is the h=1/4 family member", model_text(family(q)),
            model_text(rep.quantum_witness_hi), rep.quantum_witness_hi == family(q));

    const auto null_space = separation_null_space();
    const RationalVector direction{-1, 1, 1, -1, 1, -1, -1, 1};
    bool matches = null_space.size() == 1;
    if (matches) {
        // Parallel iff every 2x2 minor vanishes.
        for (std::size_t i = 0; i < 8 && matches; ++i) {
            for (std::size_t j = 0; j < 8 && matches; ++j) {
                matches = null_space[0][i] * direction[j] == null_space[0][j] * direction[i];
            }
        }
    }
    std::string computed = std::to_string(null_space.size()) + "-dim";
    if (null_space.size() == 1) {
        computed += " (";
        for (std::size_t i = 0; i < 8; ++i) computed += (i ? "," : "") + to_string(null_space[0][i]);
        computed += ")";
    }
    r.check("solution family is one-dimensional along (-1,1,1,-1,1,-1,-1,1)", "1-dim", computed, matches);
    return r;
}

ReproductionReport general_separation_example() {
    ReproductionReport r{"appendix_e_general", {}};
    const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cases = {{3, {}}, {4, {0}}, {5, {1, 0}}};
    for (const auto& [n, tail] : cases) {
        const auto rep = bound_separation(n, tail);
        std::string tag = "n=" + std::to_string(n) + " tail=(";
        for (std::size_t i = 0; i < tail.size(); ++i) tag += (i ? "," : "") + std::to_string(tail[i]);
        tag += "): ";
        r.exact(tag + "classical upper bound", Rational(1, 2), rep.classical.hi);
        r.exact(tag + "quantum upper bound", Rational(1, 4), rep.quantum.hi);
    }
    return r;
}

ReproductionReport toy_example() {
    ReproductionReport r{"toy", {}};
    const auto rep = toy::verify_binary_equivalence();
    for (const auto& c : rep.comparisons) {
        r.check(toy::to_string(c.scenario) + " " + model_text(c.pF), to_string(c.quantum), to_string(c.toy),
                c.equal);
    }
    return r;
}

}  // namespace

const std::vector<std::string>& reproduction_names() {
    static const std::vector<std::string> names = {"binary",     "appendix_b",         "model_ab",
                                                   "appendix_e", "appendix_e_general", "toy"};
    return names;
}

ReproductionReport reproduce(const std::string& example) {
    if (example == "binary") return binary_example();
    if (example == "appendix_b") return mixture_contrast_example();
    if (example == "model_ab") return model_ab_example();
    if (example == "appendix_e") return separation_example();
    if (example == "appendix_e_general") return general_separation_example();
    if (example == "toy") return toy_example();
    throw std::invalid_argument("unknown example '" + example + "'");
}

}  // namespace qcf
