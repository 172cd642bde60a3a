#include "qcf/toy_theory.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "qcf/errors.hpp"

namespace qcf::toy {

std::uint8_t ToyOnticState::index() const noexcept {
    return static_cast<std::uint8_t>(input.z << 3 | input.x << 2 | output.z << 1 | output.x);
}

ToyOnticState ToyOnticState::from_index(std::uint8_t index) {
    if (index >= 16) throw DomainError("ontic index out of range");
    return {{static_cast<std::uint8_t>(index >> 3 & 1), static_cast<std::uint8_t>(index >> 2 & 1)},
            {static_cast<std::uint8_t>(index >> 1 & 1), static_cast<std::uint8_t>(index & 1)}};
}

// ---------------------------------------------------------------------------

ToyEpistemicState::ToyEpistemicState(std::array<Rational, 16> probabilities) : p_(std::move(probabilities)) {
    Rational total = 0;
    for (const auto& v : p_) {
        if (v < 0) throw ValidationError("negative toy probability");
        total += v;
    }
    if (total != 1) throw ValidationError("toy probabilities sum to " + qcf::to_string(total));
}

namespace {

// Symplectic form on two toy bits: sum_i z_i x'_i + x_i z'_i (mod 2).
int symplectic(std::uint8_t a, std::uint8_t b) {
    const auto s = ToyOnticState::from_index(a);
    const auto t = ToyOnticState::from_index(b);
    return (s.input.z * t.input.x + s.input.x * t.input.z + s.output.z * t.output.x + s.output.x * t.output.z) & 1;
}

}  // namespace

bool ToyEpistemicState::respects_epistemic_restriction() const {
    std::vector<std::uint8_t> support;
    for (std::uint8_t i = 0; i < 16; ++i) {
        if (p_[i] != 0) support.push_back(i);
    }
    if (support.size() != 4) return false;
    if (std::any_of(support.begin(), support.end(), [&](auto i) { return p_[i] != Rational(1, 4); })) return false;

    std::set<std::uint8_t> direction;
    for (auto s : support) direction.insert(static_cast<std::uint8_t>(s ^ support.front()));
    for (auto a : direction) {
        for (auto b : direction) {
            if (!direction.count(static_cast<std::uint8_t>(a ^ b))) return false;
            if (symplectic(a, b) != 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

ToyOraclePermutation::ToyOraclePermutation(std::array<std::uint8_t, 16> image) : image_(image) {
    std::array<bool, 16> hit{};
    for (auto v : image_) {
        if (v >= 16 || hit[v]) throw ContractError("toy oracle is not a permutation of the 16 ontic states");
        hit[v] = true;
    }
}

namespace {

template <class Fn>
ToyOraclePermutation from_rule(Fn&& rule) {
    std::array<std::uint8_t, 16> image{};
    for (std::uint8_t i = 0; i < 16; ++i) image[i] = rule(ToyOnticState::from_index(i)).index();
    return ToyOraclePermutation(image);
}

}  // namespace

ToyOraclePermutation ToyOraclePermutation::identity() {
    return from_rule([](ToyOnticState s) { return s; });
}

ToyOraclePermutation ToyOraclePermutation::cnot() {
    return from_rule([](ToyOnticState s) {
        return ToyOnticState{{s.input.z, static_cast<std::uint8_t>(s.input.x ^ s.output.x)},
                             {static_cast<std::uint8_t>(s.output.z ^ s.input.z), s.output.x}};
    });
}

ToyOraclePermutation ToyOraclePermutation::output_flip() {
    return from_rule([](ToyOnticState s) {
        s.output.z ^= 1;
        return s;
    });
}

ToyOnticState ToyOraclePermutation::operator()(const ToyOnticState& s) const {
    return ToyOnticState::from_index(image_[s.index()]);
}

ToyEpistemicState ToyOraclePermutation::operator()(const ToyEpistemicState& state) const {
    std::array<Rational, 16> out{};
    for (std::uint8_t i = 0; i < 16; ++i) out[image_[i]] += state[i];
    return ToyEpistemicState(std::move(out));
}

ToyOraclePermutation ToyOraclePermutation::after(const ToyOraclePermutation& other) const {
    std::array<std::uint8_t, 16> image{};
    for (std::uint8_t i = 0; i < 16; ++i) image[i] = image_[other.image_[i]];
    return ToyOraclePermutation(image);
}

// ---------------------------------------------------------------------------

ToyEpistemicState toy_prepare(Preparation prep) {
    std::array<Rational, 16> p{};
    for (std::uint8_t i = 0; i < 16; ++i) {
        const auto s = ToyOnticState::from_index(i);
        if (s.output.z != 0) continue;
        bool match = false;
        switch (prep) {
            case Preparation::z0: match = s.input.z == 0; break;
            case Preparation::z1: match = s.input.z == 1; break;
            case Preparation::plus: match = s.input.x == 0; break;
        }
        if (match) p[i] = Rational(1, 4);
    }
    return ToyEpistemicState(std::move(p));
}

ToyOraclePermutation toy_oracle(const FunctionTable& f) {
    if (f.n_x() != 2 || f.n_y() != 2) throw UnsupportedError("toy oracles exist only for binary tables");
    if (f == binary::identity()) return ToyOraclePermutation::cnot();
    if (f == binary::reset0()) return ToyOraclePermutation::identity();
    if (f == binary::reset1()) return ToyOraclePermutation::output_flip();
    return ToyOraclePermutation::output_flip().after(ToyOraclePermutation::cnot());
}

std::vector<Rational> toy_measure(const ToyEpistemicState& state, ToySetting setting) {
    std::vector<Rational> out(setting == ToySetting::y_computational ? 2 : 4);
    for (std::uint8_t i = 0; i < 16; ++i) {
        if (state[i] == 0) continue;
        const auto s = ToyOnticState::from_index(i);
        if (setting == ToySetting::y_computational) {
            out[s.output.z] += state[i];
        } else {
            const int zpar = s.input.z ^ s.output.z;
            const int xpar = s.input.x ^ s.output.x;
            out[static_cast<std::size_t>(2 * zpar + xpar)] += state[i];
        }
    }
    return out;
}

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::computational_input0: return "y0_given_do_x0";
        case Scenario::computational_input1: return "y0_given_do_x1";
        case Scenario::bell_plus: return "phi_plus_given_do_plus";
    }
    return "unknown";
}

namespace {

void require_binary(const FunctionDistribution& pF) {
    if (pF.n_x() != 2 || pF.n_y() != 2) throw UnsupportedError("toy scenarios exist only for binary models");
}

}  // namespace

Rational toy_probability(const FunctionDistribution& pF, Scenario s) {
    require_binary(pF);
    const Preparation prep = s == Scenario::computational_input0   ? Preparation::z0
                             : s == Scenario::computational_input1 ? Preparation::z1
                                                                   : Preparation::plus;
    const ToySetting setting = s == Scenario::bell_plus ? ToySetting::bell_parity : ToySetting::y_computational;
    const auto prepared = toy_prepare(prep);
    Rational total = 0;
    for (auto i : pF.support()) {
        total += pF.weight(i) * toy_measure(toy_oracle(pF.table(i))(prepared), setting)[0];
    }
    return total;
}

Rational quantum_probability(const FunctionDistribution& pF, Scenario s) {
    require_binary(pF);
    using Matrix2 = std::array<std::array<Rational, 2>, 2>;
    using Matrix4 = std::array<std::array<Rational, 4>, 4>;

    const Rational half(1, 2);
    Matrix2 input{};
    switch (s) {
        case Scenario::computational_input0: input[0][0] = 1; break;
        case Scenario::computational_input1: input[1][1] = 1; break;
        case Scenario::bell_plus: input = {{{half, half}, {half, half}}}; break;
    }

    // rho_XY = sum_f p(f) V_f rho_X V_f^dagger with V_f |x> = |x>|f(x)>.
    Matrix4 rho{};
    for (auto i : pF.support()) {
        const auto f = pF.table(i);
        for (std::size_t x = 0; x < 2; ++x) {
            for (std::size_t xp = 0; xp < 2; ++xp) {
                rho[2 * x + f(x)][2 * xp + f(xp)] += pF.weight(i) * input[x][xp];
            }
        }
    }

    Matrix4 effect{};
    if (s == Scenario::bell_plus) {
        effect[0][0] = effect[0][3] = effect[3][0] = effect[3][3] = half;
    } else {
        effect[0][0] = effect[2][2] = 1;  // 1_X (x) |0><0|_Y
    }
    Rational p = 0;
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) p += effect[a][b] * rho[b][a];
    }
    return p;
}

std::vector<FunctionDistribution> equivalence_test_grid() {
    std::vector<FunctionDistribution> grid;
    for (const auto& f : enumerate_functions(2, 2)) grid.push_back(FunctionDistribution::point_mass(f));
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> draw(0, 12);
    while (grid.size() < 14) {
        std::vector<Rational> w(4);
        int total = 0;
        for (auto& v : w) {
            const int k = draw(rng);
            v = k;
            total += k;
        }
        if (total == 0) continue;
        for (auto& v : w) v /= total;
        grid.emplace_back(2, 2, std::move(w));
    }
    return grid;
}

EquivalenceReport verify_binary_equivalence() {
    EquivalenceReport report{{}, true};
    for (const auto& pF : equivalence_test_grid()) {
        for (auto s : {Scenario::computational_input0, Scenario::computational_input1, Scenario::bell_plus}) {
            auto q = quantum_probability(pF, s);
            auto t = toy_probability(pF, s);
            const bool equal = q == t;
            report.all_equal = report.all_equal && equal;
            report.comparisons.push_back({s, pF, std::move(q), std::move(t), equal});
        }
    }
    return report;
}

}  // namespace qcf::toy
