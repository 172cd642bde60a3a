#include "qcf/quantum_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qcf/errors.hpp"
#include "qcf/rational_linalg.hpp"

namespace qcf {

namespace {

double hermitian_defect(const Eigen::MatrixXcd& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

void require_square(const Eigen::MatrixXcd& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) throw ContractError(std::string(what) + " must be a nonempty square matrix");
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

// ---------------------------------------------------------------------------

Amplitudes::Amplitudes(std::vector<Complex> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.empty()) throw ContractError("amplitude vector is empty");
    double norm = 0;
    for (const auto& a : alpha_) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kStateTolerance) {
        throw ContractError("amplitudes have squared norm " + std::to_string(norm) + ", expected 1");
    }
}

Amplitudes Amplitudes::uniform(std::size_t n) {
    if (n == 0) throw ContractError("amplitude vector is empty");
    return Amplitudes(std::vector<Complex>(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0)));
}

Amplitudes Amplitudes::basis(std::size_t n, std::size_t k) {
    if (k >= n) throw DomainError("basis index out of range");
    std::vector<Complex> alpha(n);
    alpha[k] = 1.0;
    return Amplitudes(std::move(alpha));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    require_square(entries_, "density matrix");
    if (hermitian_defect(entries_) > kStateTolerance) throw ValidationError("density matrix is not Hermitian");
    const Complex trace = entries_.trace();
    if (std::abs(trace - Complex(1.0, 0.0)) > kStateTolerance) {
        throw ValidationError("density matrix trace is " + std::to_string(trace.real()) + ", expected 1");
    }
    if (min_eigenvalue() < -kPsdTolerance) throw ValidationError("density matrix is not positive semidefinite");
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

double DensityMatrix::min_eigenvalue() const { return hermitian_spectrum(entries_).minCoeff(); }

MeasurementEffect::MeasurementEffect(Eigen::MatrixXcd op) : op_(std::move(op)) {
    require_square(op_, "measurement effect");
    if (hermitian_defect(op_) > kStateTolerance) throw ValidationError("measurement effect is not Hermitian");
    const auto spectrum = hermitian_spectrum(op_);
    if (spectrum.minCoeff() < -kPsdTolerance || spectrum.maxCoeff() > 1.0 + kPsdTolerance) {
        throw ValidationError("measurement effect has eigenvalues outside [0, 1]");
    }
}

MeasurementEffect MeasurementEffect::projector(const Eigen::VectorXcd& psi) {
    if (std::abs(psi.squaredNorm() - 1.0) > kStateTolerance) throw ContractError("projector needs a unit vector");
    return MeasurementEffect(psi * psi.adjoint());
}

MeasurementEffect MeasurementEffect::output_equals(std::size_t n_x, std::size_t n_y, std::size_t y) {
    if (y >= n_y) throw DomainError("output value out of range");
    const auto dim = static_cast<Eigen::Index>(n_x * n_y);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t x = 0; x < n_x; ++x) {
        const auto i = static_cast<Eigen::Index>(x * n_y + y);
        op(i, i) = 1.0;
    }
    return MeasurementEffect(std::move(op));
}

MeasurementEffect MeasurementEffect::bell(std::size_t which) {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    switch (which) {
        case 0: psi(0) = s; psi(3) = s; break;   // Phi+
        case 1: psi(0) = s; psi(3) = -s; break;  // Phi-
        case 2: psi(1) = s; psi(2) = s; break;   // Psi+
        case 3: psi(1) = s; psi(2) = -s; break;  // Psi-
        default: throw DomainError("Bell index must be 0..3");
    }
    return projector(psi);
}

// ---------------------------------------------------------------------------

Eigen::VectorXcd apply_oracle(const FunctionTable& f, const Amplitudes& alpha) {
    if (alpha.size() != f.n_x()) throw ContractError("amplitude length does not match n_x");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(f.n_x() * f.n_y()));
    for (std::size_t x = 0; x < f.n_x(); ++x) {
        out(static_cast<Eigen::Index>(x * f.n_y() + f.outputs()[x])) += alpha[x];
    }
    return out;
}

DensityMatrix build_rho_xy(const FunctionDistribution& pF, const Amplitudes& alpha) {
    const std::size_t n_x = pF.n_x();
    const std::size_t n_y = pF.n_y();
    if (alpha.size() != n_x) throw ContractError("amplitude length does not match n_x");
    const std::size_t dim = n_x * n_y;

    // The sum over f is carried out exactly; only the amplitude products are
    // floating point.
    std::map<std::pair<std::size_t, std::size_t>, Rational> weight;
    for (auto i : pF.support()) {
        const auto f = pF.table(i);
        const auto& w = pF.weight(i);
        for (std::size_t x = 0; x < n_x; ++x) {
            for (std::size_t xp = 0; xp < n_x; ++xp) {
                weight[{x * n_y + f.outputs()[x], xp * n_y + f.outputs()[xp]}] += w;
            }
        }
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& [index, w] : weight) {
        const auto [row, col] = index;
        rho(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
            alpha[row / n_y] * std::conj(alpha[col / n_y]) * to_double(w);
    }
    return DensityMatrix(std::move(rho));
}

double extract_two_way(const DensityMatrix& rho, const Amplitudes& alpha, std::size_t x, std::size_t x_prime,
                       std::size_t y, std::size_t y_prime) {
    const std::size_t n_x = alpha.size();
    if (rho.dim() % n_x != 0) throw ContractError("density matrix dimension is not a multiple of n_x");
    const std::size_t n_y = rho.dim() / n_x;
    if (x >= n_x || x_prime >= n_x) throw DomainError("input out of range");
    if (y >= n_y || y_prime >= n_y) throw DomainError("output out of range");
    if (std::abs(alpha[x]) <= kStateTolerance || std::abs(alpha[x_prime]) <= kStateTolerance) {
        throw ExtractionError("amplitude at x=" + std::to_string(x) + " or x'=" + std::to_string(x_prime) +
                              " is zero; the off-diagonal element carries no information");
    }
    const Complex element = rho(x * n_y + y, x_prime * n_y + y_prime);
    const Complex value = element / (alpha[x] * std::conj(alpha[x_prime]));
    if (std::abs(value.imag()) > kExtractionTolerance || value.real() < -kExtractionTolerance ||
        value.real() > 1.0 + kExtractionTolerance) {
        throw InconsistencyError("extracted value is not a probability", std::abs(value.imag()));
    }
    return clamp_probability(value.real());
}

double measure(const DensityMatrix& rho, const MeasurementEffect& effect) {
    if (rho.dim() != effect.dim()) throw ContractError("effect and state dimensions differ");
    const Complex p = (effect.op() * rho.entries()).trace();
    if (std::abs(p.imag()) > kPsdTolerance) throw InconsistencyError("measurement probability is not real", p.imag());
    return clamp_probability(p.real());
}

std::uint64_t sample_measure(const DensityMatrix& rho, const MeasurementEffect& effect, std::uint64_t shots,
                             std::mt19937_64& rng) {
    std::binomial_distribution<std::uint64_t> hits(shots, measure(rho, effect));
    return hits(rng);
}

std::vector<TomographyRow> tomography_sweep(const DensityMatrix& rho, const Amplitudes& alpha) {
    const std::size_t n_x = alpha.size();
    const std::size_t n_y = rho.dim() / n_x;
    std::vector<TomographyRow> rows;
    rows.reserve(n_x * n_x * n_y * n_y);
    for (std::size_t x = 0; x < n_x; ++x) {
        for (std::size_t xp = 0; xp < n_x; ++xp) {
            for (std::size_t y = 0; y < n_y; ++y) {
                for (std::size_t yp = 0; yp < n_y; ++yp) {
                    rows.push_back({x, xp, y, yp, extract_two_way(rho, alpha, x, xp, y, yp)});
                }
            }
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Binary identification

BinaryStatistics binary_statistics(const FunctionDistribution& pF) {
    if (pF.n_x() != 2 || pF.n_y() != 2) throw UnsupportedError("binary statistics need n_x = n_y = 2");
    const auto y0 = MeasurementEffect::output_equals(2, 2, 0);
    return {measure(build_rho_xy(pF, Amplitudes::basis(2, 0)), y0),
            measure(build_rho_xy(pF, Amplitudes::basis(2, 1)), y0),
            measure(build_rho_xy(pF, Amplitudes::uniform(2)), MeasurementEffect::bell(0))};
}

namespace {

// Rows over (R0, I, F, R1), the canonical order of the binary tables.
//   p(Y=0 | do|0>) = p(I) + p(R0)
//   p(Y=0 | do|1>) = p(F) + p(R0)
//   p(Phi+ | do|+>) = p(I) + p(R0)/4 + p(R1)/4
//   normalization
constexpr double kBinaryRows[4][4] = {
    {1.0, 1.0, 0.0, 0.0},
    {1.0, 0.0, 1.0, 0.0},
    {0.25, 1.0, 0.0, 0.25},
    {1.0, 1.0, 1.0, 1.0},
};

}  // namespace

FunctionDistribution solve_binary_pF(double c00, double c01, double bell) {
    Eigen::Matrix4d a;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a(i, j) = kBinaryRows[i][j];
    }
    const Eigen::Vector4d b(c00, c01, bell, 1.0);
    const Eigen::Vector4d p = a.fullPivLu().solve(b);

    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max({worst, -p(i), p(i) - 1.0});
    if (worst > kExtractionTolerance) {
        throw InconsistencyError("binary statistics admit no distribution over functions (worst violation " +
                                     std::to_string(worst) + ")",
                                 worst);
    }
    std::vector<Rational> weights(4);
    Rational total = 0;
    for (int i = 0; i < 4; ++i) {
        weights[i] = exact_from_double(std::clamp(p(i), 0.0, 1.0));
        total += weights[i];
    }
    for (auto& w : weights) w /= total;
    return FunctionDistribution(2, 2, std::move(weights));
}

FunctionDistribution solve_binary_pF(const Rational& c00, const Rational& c01, const Rational& bell) {
    const Rational quarter(1, 4);
    RationalMatrix augmented = {
        {1, 1, 0, 0, c00},
        {1, 0, 1, 0, c01},
        {quarter, 1, 0, quarter, bell},
        {1, 1, 1, 1, 1},
    };
    row_reduce(augmented);
    std::vector<Rational> weights(4);
    for (int i = 0; i < 4; ++i) {
        weights[i] = augmented[i][4];
        if (weights[i] < 0 || weights[i] > 1) {
            throw InconsistencyError("binary statistics admit no distribution over functions (component " +
                                         to_string(weights[i]) + ")",
                                     std::abs(to_double(weights[i] < 0 ? weights[i] : weights[i] - 1)));
        }
    }
    return FunctionDistribution(2, 2, std::move(weights));
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const DensityMatrix& rho) {
    const auto d = rho.dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t r = 0; r < d; ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (std::size_t c = 0; c < d; ++c) {
            re_row.push_back(rho(r, c).real());
            im_row.push_back(rho(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix density_matrix_from_json(const nlohmann::json& j) {
    const auto d = j.at("dim").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != d || im.size() != d) throw ValidationError("density matrix JSON has wrong row count");
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
        if (re[r].size() != d || im[r].size() != d) throw ValidationError("density matrix JSON has a ragged row");
        for (std::size_t c = 0; c < d; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(re[r][c].get<double>(), im[r][c].get<double>());
        }
    }
    return DensityMatrix(std::move(m));
}

}  // namespace qcf
