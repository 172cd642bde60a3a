#pragma once

// Density-matrix simulation of the coherent oracle |x>|0> -> |x>|f(x)> with f
// drawn from p(F) on every query.
//
// Composite basis index is x * n_y + y (X register most significant). Only the
// isometry V_f |x> = |x>|f(x)> is simulated; the ancilla always starts in |0>.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qcf/causal_core.hpp"

namespace qcf {

using Complex = std::complex<double>;

inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kExtractionTolerance = 1e-9;

class Amplitudes {
  public:
    /// Throws ContractError unless sum |alpha_x|^2 = 1 within 1e-12.
    explicit Amplitudes(std::vector<Complex> alpha);

    /// alpha_x = 1/sqrt(n) for all x.
    static Amplitudes uniform(std::size_t n);
    static Amplitudes basis(std::size_t n, std::size_t k);

    std::size_t size() const noexcept { return alpha_.size(); }
    const Complex& operator[](std::size_t x) const { return alpha_.at(x); }

  private:
    std::vector<Complex> alpha_;
};

class DensityMatrix {
  public:
    /// Validates Hermiticity, unit trace and positive semidefiniteness.
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

    double purity() const;
    double min_eigenvalue() const;

  private:
    Eigen::MatrixXcd entries_;
};

class MeasurementEffect {
  public:
    /// Validates Hermiticity and spectrum within [0, 1].
    explicit MeasurementEffect(Eigen::MatrixXcd op);

    /// |psi><psi| for a unit vector psi.
    static MeasurementEffect projector(const Eigen::VectorXcd& psi);

    /// 1_X (x) |y><y|_Y.
    static MeasurementEffect output_equals(std::size_t n_x, std::size_t n_y, std::size_t y);

    /// Projector onto one of the two-qubit Bell states; index 0 is
    /// |Phi+> = (|00> + |11>)/sqrt2, then Phi-, Psi+, Psi-.
    static MeasurementEffect bell(std::size_t which);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(op_.rows()); }
    const Eigen::MatrixXcd& op() const noexcept { return op_; }

  private:
    Eigen::MatrixXcd op_;
};

/// sum_x alpha_x |x>|f(x)>.
Eigen::VectorXcd apply_oracle(const FunctionTable& f, const Amplitudes& alpha);

/// sum_f p(f) V_f |psi><psi| V_f^dagger.
DensityMatrix build_rho_xy(const FunctionDistribution& pF, const Amplitudes& alpha);

/// p(f(x)=y, f(x')=y') read off the matrix element <x,y|rho|x',y'>, divided by
/// alpha_x conj(alpha_x'). Clamped to [0, 1]. ExtractionError when the
/// amplitude product vanishes; InconsistencyError when the raw value leaves
/// [-1e-9, 1 + 1e-9] or has an imaginary part above 1e-9.
double extract_two_way(const DensityMatrix& rho, const Amplitudes& alpha, std::size_t x, std::size_t x_prime,
                       std::size_t y, std::size_t y_prime);

/// tr(effect rho), clamped to [0, 1].
double measure(const DensityMatrix& rho, const MeasurementEffect& effect);

/// Number of hits in `shots` independent measurements.
std::uint64_t sample_measure(const DensityMatrix& rho, const MeasurementEffect& effect, std::uint64_t shots,
                             std::mt19937_64& rng);

struct TomographyRow {
    std::size_t x, x_prime, y, y_prime;
    double value;
};

/// extract_two_way over every (x, x', y, y').
std::vector<TomographyRow> tomography_sweep(const DensityMatrix& rho, const Amplitudes& alpha);

/// The three statistics that pin a binary p(F): p(Y=0 | do|0>),
/// p(Y=0 | do|1>) and p(Phi+ | do|+>).
struct BinaryStatistics {
    double c00;
    double c01;
    double bell;
};

BinaryStatistics binary_statistics(const FunctionDistribution& pF);

/// Inverts the binary statistics together with normalization. Components
/// outside [-1e-9, 1 + 1e-9] raise InconsistencyError carrying the worst
/// violation; otherwise the solution is clamped and renormalized.
FunctionDistribution solve_binary_pF(double c00, double c01, double bell);

/// Exact counterpart for rational statistics.
FunctionDistribution solve_binary_pF(const Rational& c00, const Rational& c01, const Rational& bell);

/// {"dim": d, "re": [[...]], "im": [[...]]}
nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const nlohmann::json& j);

}  // namespace qcf
