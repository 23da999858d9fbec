#include "opineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "opineq/error.hpp"

namespace opineq {

namespace {

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": " << a.dim() << "x" << a.dim() << " vs " << b.dim() << "x" << b.dim();
    throw Error(Errc::DimensionMismatch, os.str());
  }
}

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q). G = D R with
// D = diag(1, conj(phase)) making a(p, q) real and R the real rotation.
void rotate(CMatrix& a, CMatrix& v, Index p, Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase_conj = std::conj(apq / mag);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * phase_conj;
  const Complex gqq = c * phase_conj;

  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  for (Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(CMatrix m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << "matrix must be square with n >= 1, got " << m.rows() << "x" << m.cols();
    throw Error(Errc::NonHermitianInput, os.str());
  }
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  const double tol = kHermitianTolerance * scale;
  for (Index i = 0; i < m.rows(); ++i) {
    if (!std::isfinite(m(i, i).real()) || !std::isfinite(m(i, i).imag()))
      throw Error(Errc::NonHermitianInput, "non-finite entry");
    if (std::abs(m(i, i).imag()) > tol) {
      std::ostringstream os;
      os << "diagonal entry (" << i << "," << i << ") has imaginary part " << m(i, i).imag();
      throw Error(Errc::NonHermitianInput, os.str());
    }
    for (Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        std::ostringstream os;
        os << "entries (" << i << "," << j << ") and (" << j << "," << i << ") are not conjugate";
        throw Error(Errc::NonHermitianInput, os.str());
      }
    }
  }
  m_ = hermitian_part(m).m_;
}

HermitianMatrix HermitianMatrix::hermitian_part(const CMatrix& m) {
  CMatrix h = 0.5 * (m + m.adjoint());
  for (Index i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
  return HermitianMatrix(std::move(h), Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(Index n) { return scalar(n, 1.0); }

HermitianMatrix HermitianMatrix::zero(Index n) { return scalar(n, 0.0); }

HermitianMatrix HermitianMatrix::scalar(Index n, double c) {
  CMatrix m = CMatrix::Identity(n, n) * c;
  return HermitianMatrix(std::move(m), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  const auto n = static_cast<Index>(values.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return HermitianMatrix(std::move(m), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

HermitianMatrix HermitianMatrix::real(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Index>(rows.size());
  CMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n)
      throw Error(Errc::NonHermitianInput, "ragged row");
    Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  require_same_dim(*this, other, "operator+");
  return HermitianMatrix(m_ + other.m_, Unchecked{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  require_same_dim(*this, other, "operator-");
  return HermitianMatrix(m_ - other.m_, Unchecked{});
}

HermitianMatrix HermitianMatrix::operator*(double c) const {
  return HermitianMatrix(m_ * c, Unchecked{});
}

double HermitianMatrix::trace() const { return m_.trace().real(); }

double HermitianMatrix::max_abs() const { return m_.size() ? m_.cwiseAbs().maxCoeff() : 0.0; }

// ---------------------------------------------------------------------------
// Spectral machinery

HermitianMatrix SpectralDecomposition::compose(const RVector& values) const {
  const CMatrix scaled = eigenvectors * values.cast<Complex>().asDiagonal();
  return HermitianMatrix::hermitian_part(scaled * eigenvectors.adjoint());
}

SpectralDecomposition eigh(const HermitianMatrix& h, const EigenOptions& opts) {
  const Index n = h.dim();
  CMatrix a = h.matrix();
  CMatrix v = CMatrix::Identity(n, n);

  const double target = opts.off_diagonal_tolerance * a.norm();
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= target || off == 0.0) break;
    for (Index p = 0; p + 1 < n; ++p)
      for (Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

SpectralDecomposition eigh(const CMatrix& a, const EigenOptions& opts) {
  return eigh(HermitianMatrix(a), opts);
}

HermitianMatrix matrix_power(const SpectralDecomposition& d, double t) {
  const double lmin = d.min();
  const double lmax = d.max();
  const bool integral = t >= 0.0 && std::floor(t) == t;
  if (!integral && lmin < -kPsdTolerance * (1.0 + lmax)) {
    std::ostringstream os;
    os << "fractional power " << t << " of a matrix with eigenvalue " << lmin;
    throw Error(Errc::NotPositiveSemidefinite, os.str());
  }
  if (t < 0.0 && !(lmin > kSingularTolerance * lmax)) {
    std::ostringstream os;
    os << "negative power " << t << " with lambda_min=" << lmin << ", lambda_max=" << lmax;
    throw Error(Errc::SingularMatrix, os.str());
  }
  if (integral) {
    return d.apply([t](double x) { return std::pow(x, t); });
  }
  return d.apply([t](double x) { return std::pow(std::max(x, 0.0), t); });
}

HermitianMatrix matrix_power(const HermitianMatrix& a, double t, const EigenOptions& opts) {
  if (t == 0.0) return HermitianMatrix::identity(a.dim());
  if (t == 1.0) return a;
  return matrix_power(eigh(a, opts), t);
}

HermitianMatrix inverse(const HermitianMatrix& a, const EigenOptions& opts) {
  return matrix_power(a, -1.0, opts);
}

double loewner_gap(const HermitianMatrix& a, const HermitianMatrix& b, const EigenOptions& opts) {
  require_same_dim(a, b, "loewner_gap");
  return eigh(b - a, opts).min();
}

double op_norm(const HermitianMatrix& a, const EigenOptions& opts) {
  const auto d = eigh(a, opts);
  return std::max(std::abs(d.min()), std::abs(d.max()));
}

double spectral_norm(const CMatrix& x, const EigenOptions& opts) {
  const auto gram = HermitianMatrix::hermitian_part(x.adjoint() * x);
  return std::sqrt(std::max(0.0, eigh(gram, opts).max()));
}

HermitianMatrix congruence(const CMatrix& x, const HermitianMatrix& a) {
  return HermitianMatrix::hermitian_part(x * a.matrix() * x.adjoint());
}

bool is_psd(const SpectralDecomposition& d) noexcept {
  return d.min() >= -kPsdTolerance * (1.0 + d.max());
}

bool is_psd(const HermitianMatrix& a, const EigenOptions& opts) { return is_psd(eigh(a, opts)); }

double relative_frobenius(const CMatrix& a, const CMatrix& b) {
  const double denom = std::max(b.norm(), 1e-300);
  return (a - b).norm() / denom;
}

}  // namespace opineq
