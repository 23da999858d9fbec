#include "opineq/maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "opineq/error.hpp"
#include "opineq/rng.hpp"
#include "opineq/sampler.hpp"

namespace opineq {

namespace {

constexpr std::array<MapKind, 6> kCatalog{MapKind::Identity,    MapKind::TraceAverage,   MapKind::Compression,
                                          MapKind::Pinching,    MapKind::UnitaryMixture, MapKind::Diagonal};

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedSpec, what); }

double isometry_defect(const CMatrix& v) {
  return (v.adjoint() * v - CMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
}

// A PSD matrix of random rank: G G* with G an n x k complex Gaussian.
HermitianMatrix random_psd(Index n, SplitMix64& rng) {
  const Index k = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
  CMatrix g(n, k);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < k; ++j) g(i, j) = rng.complex_normal();
  return HermitianMatrix::hermitian_part(g * g.adjoint());
}

HermitianMatrix random_hermitian(Index n, SplitMix64& rng) {
  CMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  return HermitianMatrix::hermitian_part(g);
}

}  // namespace

std::string_view to_string(MapKind kind) noexcept {
  switch (kind) {
    case MapKind::Identity: return "identity";
    case MapKind::TraceAverage: return "trace_average";
    case MapKind::Compression: return "compression";
    case MapKind::Pinching: return "pinching";
    case MapKind::UnitaryMixture: return "unitary_mixture";
    case MapKind::Diagonal: return "diagonal";
  }
  return "unknown";
}

MapKind map_kind_from_string(std::string_view name) {
  for (MapKind k : kCatalog)
    if (to_string(k) == name) return k;
  throw Error(Errc::UnknownKind, "unknown map kind '" + std::string(name) + "'");
}

std::span<const MapKind> map_catalog() noexcept { return kCatalog; }

MapSpec MapSpec::identity(Index n) {
  MapSpec s;
  s.kind = MapKind::Identity;
  s.n = n;
  return s;
}

MapSpec MapSpec::trace_average(Index n) {
  MapSpec s = identity(n);
  s.kind = MapKind::TraceAverage;
  return s;
}

MapSpec MapSpec::diagonal(Index n) {
  MapSpec s = identity(n);
  s.kind = MapKind::Diagonal;
  return s;
}

MapSpec MapSpec::compression(CMatrix isometry) {
  MapSpec s;
  s.kind = MapKind::Compression;
  s.n = isometry.rows();
  s.isometry = std::move(isometry);
  s.validate();
  return s;
}

MapSpec MapSpec::pinching(std::vector<Index> blocks) {
  MapSpec s;
  s.kind = MapKind::Pinching;
  s.n = std::accumulate(blocks.begin(), blocks.end(), Index{0});
  s.blocks = std::move(blocks);
  s.validate();
  return s;
}

MapSpec MapSpec::unitary_mixture(std::vector<double> weights, std::vector<CMatrix> unitaries) {
  MapSpec s;
  s.kind = MapKind::UnitaryMixture;
  s.n = unitaries.empty() ? 0 : unitaries.front().rows();
  s.weights = std::move(weights);
  s.unitaries = std::move(unitaries);
  s.validate();
  return s;
}

Index MapSpec::output_dim() const noexcept {
  return kind == MapKind::Compression ? isometry.cols() : n;
}

void MapSpec::validate() const {
  if (n < 1) malformed("map input dimension must be >= 1");
  switch (kind) {
    case MapKind::Identity:
    case MapKind::TraceAverage:
    case MapKind::Diagonal:
      return;
    case MapKind::Compression: {
      if (isometry.rows() != n || isometry.cols() < 1 || isometry.cols() > n)
        malformed("compression needs an n x k isometry with 1 <= k <= n");
      const double defect = isometry_defect(isometry);
      if (!(defect <= 1e-10)) {
        std::ostringstream os;
        os << "compression matrix is not an isometry (max |V*V - I| = " << defect << ")";
        malformed(os.str());
      }
      return;
    }
    case MapKind::Pinching: {
      if (blocks.empty() || std::any_of(blocks.begin(), blocks.end(), [](Index b) { return b < 1; }))
        malformed("pinching blocks must be positive sizes");
      if (std::accumulate(blocks.begin(), blocks.end(), Index{0}) != n)
        malformed("pinching blocks must sum to n");
      return;
    }
    case MapKind::UnitaryMixture: {
      if (weights.empty() || weights.size() != unitaries.size())
        malformed("unitary mixture needs one weight per unitary");
      if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); }))
        malformed("unitary mixture weights must be positive");
      const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
      if (!(std::abs(total - 1.0) <= 1e-12)) malformed("unitary mixture weights must sum to 1");
      for (const auto& u : unitaries) {
        if (u.rows() != n || u.cols() != n) malformed("unitary has the wrong shape");
        if (!(isometry_defect(u) <= 1e-10)) malformed("mixture component is not unitary");
      }
      return;
    }
  }
}

HermitianMatrix apply_map(const MapSpec& phi, const HermitianMatrix& a) {
  phi.validate();
  if (a.dim() != phi.n) {
    std::ostringstream os;
    os << "map expects dimension " << phi.n << ", got " << a.dim();
    throw Error(Errc::DimensionMismatch, os.str());
  }
  switch (phi.kind) {
    case MapKind::Identity:
      return a;
    case MapKind::TraceAverage:
      return HermitianMatrix::scalar(phi.n, a.trace() / static_cast<double>(phi.n));
    case MapKind::Compression:
      return congruence(phi.isometry.adjoint(), a);
    case MapKind::Diagonal: {
      CMatrix d = CMatrix::Zero(phi.n, phi.n);
      d.diagonal() = a.matrix().diagonal();
      return HermitianMatrix::hermitian_part(d);
    }
    case MapKind::Pinching: {
      CMatrix out = CMatrix::Zero(phi.n, phi.n);
      Index start = 0;
      for (Index size : phi.blocks) {
        out.block(start, start, size, size) = a.matrix().block(start, start, size, size);
        start += size;
      }
      return HermitianMatrix::hermitian_part(out);
    }
    case MapKind::UnitaryMixture: {
      CMatrix out = CMatrix::Zero(phi.n, phi.n);
      for (std::size_t i = 0; i < phi.weights.size(); ++i)
        out += phi.weights[i] * (phi.unitaries[i].adjoint() * a.matrix() * phi.unitaries[i]);
      return HermitianMatrix::hermitian_part(out);
    }
  }
  return a;
}

ValidationReport validate_map(const MapSpec& phi, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(Errc::ConfigInvalid, "validate_map needs trials >= 1");
  phi.validate();
  ValidationReport report;
  report.trials = trials;

  const Index k = phi.output_dim();
  report.unitality_residual = op_norm(apply_map(phi, HermitianMatrix::identity(phi.n)) - HermitianMatrix::identity(k));

  SplitMix64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  double linearity = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto image = eigh(apply_map(phi, random_psd(phi.n, rng)));
    worst = std::min(worst, image.min() / (1.0 + std::max(image.max(), 0.0)));

    const HermitianMatrix x = random_hermitian(phi.n, rng);
    const HermitianMatrix y = random_hermitian(phi.n, rng);
    const double c = rng.uniform(-2.0, 2.0);
    const HermitianMatrix fx = apply_map(phi, x);
    const HermitianMatrix fy = apply_map(phi, y);
    const HermitianMatrix residual = apply_map(phi, x + y * c) - fx - fy * c;
    const double scale = 1.0 + op_norm(fx) + std::abs(c) * op_norm(fy);
    linearity = std::max(linearity, op_norm(residual) / scale);
  }
  report.worst_positivity_gap = worst;
  report.linearity_residual = linearity;
  report.pass = report.unitality_residual <= kMapValidationTolerance &&
                report.worst_positivity_gap >= -kMapValidationTolerance &&
                report.linearity_residual <= kMapValidationTolerance;
  return report;
}

MapSpec random_map(Index n, MapKind kind, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::ConfigInvalid, "random_map needs n >= 1");
  SplitMix64 rng(seed);
  switch (kind) {
    case MapKind::Identity: return MapSpec::identity(n);
    case MapKind::TraceAverage: return MapSpec::trace_average(n);
    case MapKind::Diagonal: return MapSpec::diagonal(n);
    case MapKind::Compression: {
      const Index k = n == 1 ? 1 : 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)));
      return MapSpec::compression(random_isometry(n, k, rng));
    }
    case MapKind::Pinching: {
      std::vector<Index> blocks;
      Index current = 1;
      for (Index gap = 1; gap < n; ++gap) {
        if (rng.uniform() < 0.5) {
          blocks.push_back(current);
          current = 1;
        } else {
          ++current;
        }
      }
      blocks.push_back(current);
      return MapSpec::pinching(std::move(blocks));
    }
    case MapKind::UnitaryMixture: {
      const std::size_t terms = 2 + static_cast<std::size_t>(rng.below(2));
      std::vector<double> w(terms);
      for (auto& x : w) x = rng.uniform(0.1, 1.0);
      const double total = std::accumulate(w.begin(), w.end(), 0.0);
      for (auto& x : w) x /= total;
      std::vector<CMatrix> us;
      for (std::size_t i = 0; i < terms; ++i) us.push_back(haar_unitary(n, rng));
      return MapSpec::unitary_mixture(std::move(w), std::move(us));
    }
  }
  throw Error(Errc::UnknownKind, "unhandled map kind");
}

MapSpec random_map(Index n, std::string_view kind, std::uint64_t seed) {
  return random_map(n, map_kind_from_string(kind), seed);
}

Json to_json(const MapSpec& phi) {
  Json doc;
  doc["kind"] = std::string(to_string(phi.kind));
  doc["n"] = phi.n;
  switch (phi.kind) {
    case MapKind::Compression:
      doc["isometry"] = to_json(phi.isometry);
      break;
    case MapKind::Pinching:
      doc["blocks"] = phi.blocks;
      break;
    case MapKind::UnitaryMixture: {
      doc["weights"] = phi.weights;
      Json us = Json::array();
      for (const auto& u : phi.unitaries) us.push_back(to_json(u));
      doc["unitaries"] = std::move(us);
      break;
    }
    default:
      break;
  }
  return doc;
}

MapSpec map_from_json(const Json& doc) {
  try {
    const MapKind kind = map_kind_from_string(doc.at("kind").get<std::string>());
    const Index n = doc.at("n").get<Index>();
    MapSpec s;
    switch (kind) {
      case MapKind::Identity: s = MapSpec::identity(n); break;
      case MapKind::TraceAverage: s = MapSpec::trace_average(n); break;
      case MapKind::Diagonal: s = MapSpec::diagonal(n); break;
      case MapKind::Compression: s = MapSpec::compression(matrix_from_json(doc.at("isometry"))); break;
      case MapKind::Pinching: s = MapSpec::pinching(doc.at("blocks").get<std::vector<Index>>()); break;
      case MapKind::UnitaryMixture: {
        std::vector<CMatrix> us;
        for (const auto& u : doc.at("unitaries")) us.push_back(matrix_from_json(u));
        s = MapSpec::unitary_mixture(doc.at("weights").get<std::vector<double>>(), std::move(us));
        break;
      }
    }
    if (s.n != n) malformed("map payload does not match n");
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("map: ") + e.what());
  }
}

}  // namespace opineq
