#pragma once

#include <complex>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

namespace opineq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Knobs of the cyclic Jacobi eigensolver. Sweeps stop once the off-diagonal
/// Frobenius mass drops below `off_diagonal_tolerance * ||A||_F`.
struct EigenOptions {
  double off_diagonal_tolerance = 1e-13;
  int max_sweeps = 64;

  /// Same solver with the stopping threshold multiplied by `factor`.
  EigenOptions tightened(double factor = 0.01) const {
    return {off_diagonal_tolerance * factor, max_sweeps};
  }
};

/// Eigenvalue lambda counts as nonnegative when lambda >= -kPsdTolerance * (1 + lambda_max).
inline constexpr double kPsdTolerance = 1e-10;
/// Negative powers need lambda_min > kSingularTolerance * lambda_max.
inline constexpr double kSingularTolerance = 1e-12;
/// Hermitian check: |a_ij - conj(a_ji)| <= kHermitianTolerance * (1 + max |a|).
inline constexpr double kHermitianTolerance = 1e-12;

/// Dense n x n complex Hermitian matrix. The stored matrix is exactly
/// Hermitian: construction validates within tolerance, then replaces the
/// input by its Hermitian part.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Throws NonHermitianInput if `m` is not square or not Hermitian within tolerance.
  explicit HermitianMatrix(CMatrix m);

  /// Takes the Hermitian part (m + m*)/2 without validation. For internal
  /// products that are Hermitian in exact arithmetic.
  static HermitianMatrix hermitian_part(const CMatrix& m);

  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix scalar(Index n, double c);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);
  /// Real symmetric matrix from rows.
  static HermitianMatrix real(std::initializer_list<std::initializer_list<double>> rows);

  Index dim() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix operator*(double c) const;
  friend HermitianMatrix operator*(double c, const HermitianMatrix& a) { return a * c; }

  double trace() const;
  /// Largest absolute entry.
  double max_abs() const;

 private:
  struct Unchecked {};
  HermitianMatrix(CMatrix m, Unchecked) : m_(std::move(m)) {}

  CMatrix m_;
};

/// Eigenvalues ascending; column i of `eigenvectors` pairs with eigenvalue i.
struct SpectralDecomposition {
  RVector eigenvalues;
  CMatrix eigenvectors;

  Index dim() const noexcept { return eigenvalues.size(); }
  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }

  /// U diag(f(lambda)) U*.
  template <typename F>
  HermitianMatrix apply(F&& f) const {
    RVector fx(eigenvalues.size());
    for (Index i = 0; i < fx.size(); ++i) fx(i) = f(eigenvalues(i));
    return compose(fx);
  }

  HermitianMatrix compose(const RVector& values) const;
  HermitianMatrix reconstruct() const { return compose(eigenvalues); }
};

/// Cyclic complex Jacobi rotations.
SpectralDecomposition eigh(const HermitianMatrix& a, const EigenOptions& opts = {});
/// Validates `a` as Hermitian first.
SpectralDecomposition eigh(const CMatrix& a, const EigenOptions& opts = {});

/// A^t via the spectral decomposition. t == 0 and t == 1 return I and A exactly.
/// Fractional t needs A PSD, negative t needs A PD (see tolerances above).
HermitianMatrix matrix_power(const HermitianMatrix& a, double t, const EigenOptions& opts = {});
HermitianMatrix matrix_power(const SpectralDecomposition& decomposition, double t);

HermitianMatrix inverse(const HermitianMatrix& a, const EigenOptions& opts = {});

/// lambda_min(B - A); nonnegative iff A <= B in the Loewner order.
double loewner_gap(const HermitianMatrix& a, const HermitianMatrix& b, const EigenOptions& opts = {});

/// max |lambda_i|.
double op_norm(const HermitianMatrix& a, const EigenOptions& opts = {});

/// Spectral norm of an arbitrary square product, sqrt(||X* X||).
double spectral_norm(const CMatrix& x, const EigenOptions& opts = {});

/// X A X*, Hermitian part.
HermitianMatrix congruence(const CMatrix& x, const HermitianMatrix& a);

bool is_psd(const SpectralDecomposition& d) noexcept;
bool is_psd(const HermitianMatrix& a, const EigenOptions& opts = {});

/// Relative Frobenius distance ||A - B||_F / max(||B||_F, tiny).
double relative_frobenius(const CMatrix& a, const CMatrix& b);

}  // namespace opineq
