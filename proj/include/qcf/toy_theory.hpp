#pragma once

// Epistricted phase-space model of the binary oracle experiment.
//
// A toy bit is a pair (z, x) of classical bits; z is what the
// computational-basis analogue reads and x what the conjugate-basis analogue
// reads. The X register and the Y ancilla are one toy bit each, giving 16
// ontic states indexed as z1<<3 | x1<<2 | z2<<1 | x2. Valid epistemic states
// are uniform over a 4-element affine subspace whose direction is isotropic
// under the symplectic form, i.e. at most one of (z, x) is known per
// independent degree of freedom.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcf/causal_core.hpp"

namespace qcf::toy {

struct ToyBit {
    std::uint8_t z;
    std::uint8_t x;
    friend bool operator==(const ToyBit&, const ToyBit&) = default;
};

struct ToyOnticState {
    ToyBit input;   // register X
    ToyBit output;  // ancilla Y
    std::uint8_t index() const noexcept;
    static ToyOnticState from_index(std::uint8_t index);
    friend bool operator==(const ToyOnticState&, const ToyOnticState&) = default;
};

class ToyEpistemicState {
  public:
    /// Validates nonnegativity and unit sum.
    explicit ToyEpistemicState(std::array<Rational, 16> probabilities);

    const std::array<Rational, 16>& probabilities() const noexcept { return p_; }
    const Rational& operator[](std::uint8_t index) const { return p_.at(index); }

    /// Uniform over an isotropic 4-element affine subspace.
    bool respects_epistemic_restriction() const;

  private:
    std::array<Rational, 16> p_;
};

class ToyOraclePermutation {
  public:
    /// ContractError unless `image` is a bijection of [16].
    explicit ToyOraclePermutation(std::array<std::uint8_t, 16> image);

    static ToyOraclePermutation identity();
    /// ((z1,x1),(z2,x2)) -> ((z1, x1^x2), (z2^z1, x2)).
    static ToyOraclePermutation cnot();
    /// z2 -> z2 ^ 1.
    static ToyOraclePermutation output_flip();

    ToyOnticState operator()(const ToyOnticState& s) const;
    ToyEpistemicState operator()(const ToyEpistemicState& state) const;

    /// (this * other)(s) = this(other(s)).
    ToyOraclePermutation after(const ToyOraclePermutation& other) const;

    const std::array<std::uint8_t, 16>& image() const noexcept { return image_; }
    friend bool operator==(const ToyOraclePermutation&, const ToyOraclePermutation&) = default;

  private:
    std::array<std::uint8_t, 16> image_;
};

enum class Preparation { z0, z1, plus };
enum class ToySetting { y_computational, bell_parity };

/// X register prepared per `prep`, ancilla at z2 = 0 with x2 unknown.
ToyEpistemicState toy_prepare(Preparation prep);

/// Identity -> toy CNOT, reset-to-0 -> identity, reset-to-1 -> output flip,
/// flip -> output flip after toy CNOT. UnsupportedError for non-binary tables.
ToyOraclePermutation toy_oracle(const FunctionTable& f);

/// y_computational: [p(z2=0), p(z2=1)].
/// bell_parity: distribution of (z1^z2, x1^x2) indexed 2*zpar + xpar; entry 0
/// is the Phi+ analogue.
std::vector<Rational> toy_measure(const ToyEpistemicState& state, ToySetting setting);

/// The three binary identification experiments.
enum class Scenario { computational_input0, computational_input1, bell_plus };

std::string to_string(Scenario s);

/// Probability of the scenario's target outcome in the toy model, averaged over p(F).
Rational toy_probability(const FunctionDistribution& pF, Scenario s);

/// Same statistic from exact density-operator evolution with rational entries.
Rational quantum_probability(const FunctionDistribution& pF, Scenario s);

struct Comparison {
    Scenario scenario;
    FunctionDistribution pF;
    Rational quantum;
    Rational toy;
    bool equal;
};

struct EquivalenceReport {
    std::vector<Comparison> comparisons;
    bool all_equal;
};

/// The fixed grid: the four point masses plus ten seeded random rational mixtures.
std::vector<FunctionDistribution> equivalence_test_grid();

EquivalenceReport verify_binary_equivalence();

}  // namespace qcf::toy
