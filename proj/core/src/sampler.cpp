#include "opineq/sampler.hpp"

#include <cmath>
#include <sstream>

#include "opineq/error.hpp"

namespace opineq {

CMatrix orthonormalize_columns(CMatrix z) {
  for (Index j = 0; j < z.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Index i = 0; i < j; ++i) {
        const Complex proj = z.col(i).dot(z.col(j));  // conj(q_i) . z_j
        z.col(j) -= proj * z.col(i);
      }
    }
    const double norm = z.col(j).norm();
    if (!(norm > 1e-300)) throw Error(Errc::SingularMatrix, "rank-deficient columns in orthonormalization");
    z.col(j) /= norm;
  }
  return z;
}

CMatrix random_isometry(Index n, Index k, SplitMix64& rng) {
  CMatrix z(n, k);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < k; ++j) z(i, j) = rng.complex_normal();
  return orthonormalize_columns(std::move(z));
}

CMatrix haar_unitary(Index n, SplitMix64& rng) { return random_isometry(n, n, rng); }

HermitianMatrix sample_constrained(Index n, double lo, double hi, std::uint64_t seed, bool force_endpoints) {
  if (n < 1) throw Error(Errc::BadBounds, "dimension must be >= 1");
  if (!(lo > 0.0) || !(lo <= hi) || !std::isfinite(hi)) {
    std::ostringstream os;
    os << "sample_constrained needs 0 < lo <= hi, got [" << lo << ", " << hi << "]";
    throw Error(Errc::BadBounds, os.str());
  }
  if (lo == hi) return HermitianMatrix::scalar(n, lo);

  SplitMix64 rng(seed);
  RVector lambda(n);
  for (Index i = 0; i < n; ++i) lambda(i) = rng.uniform(lo, hi);
  if (force_endpoints && n >= 2) {
    lambda(0) = lo;
    lambda(n - 1) = hi;
  }
  const CMatrix q = haar_unitary(n, rng);
  SpectralDecomposition d{lambda, q};
  return d.reconstruct();
}

Instance sample_instance(const SandwichBounds& bounds, Index n, std::uint64_t seed, bool force_endpoints) {
  bounds.validate();
  const auto [alo, ahi] = bounds.interval_a();
  const auto [blo, bhi] = bounds.interval_b();
  Instance out;
  out.A = sample_constrained(n, alo, ahi, derive_seed(seed, 1), force_endpoints);
  out.B = sample_constrained(n, blo, bhi, derive_seed(seed, 2), force_endpoints);
  out.bounds = bounds;
  out.seed = seed;
  out.n = n;
  out.force_endpoints = force_endpoints;
  return out;
}

void verify_instance(const Instance& instance, const EigenOptions& opts) {
  instance.bounds.validate();
  const auto check = [&](const HermitianMatrix& x, std::pair<double, double> interval, const char* name) {
    if (x.dim() != instance.n)
      throw Error(Errc::DimensionMismatch, std::string(name) + " has the wrong dimension");
    const auto d = eigh(x, opts);
    if (d.min() < interval.first - kSpectrumSlack || d.max() > interval.second + kSpectrumSlack) {
      std::ostringstream os;
      os.precision(17);
      os << "spectrum of " << name << " [" << d.min() << ", " << d.max() << "] escapes hypothesized ["
         << interval.first << ", " << interval.second << "]";
      throw Error(Errc::HypothesisNotMet, os.str());
    }
  };
  check(instance.A, instance.bounds.interval_a(), "A");
  check(instance.B, instance.bounds.interval_b(), "B");
}

SandwichBounds draw_bounds(HypothesisSet set, SplitMix64& rng, const BoundsRange& range) {
  const double scale = rng.log_uniform(range.scale_lo, range.scale_hi);
  const double h = rng.log_uniform(range.h_lo, range.h_hi);
  switch (set) {
    case HypothesisSet::None:
    case HypothesisSet::Common:
      return SandwichBounds::common(scale, scale * h);
    case HypothesisSet::Sandwich:
    case HypothesisSet::SandwichALow: {
      const double hp = std::exp(rng.uniform(0.05, 0.95) * std::log(h));
      const double mp = scale * std::exp(rng.uniform() * std::log(h / hp));
      const double big_m = scale * h;
      const double Mp = std::min(hp * mp, big_m);
      const bool a_low = set == HypothesisSet::SandwichALow || rng.uniform() < 0.5;
      return a_low ? SandwichBounds::sandwich_a_low(scale, mp, Mp, big_m)
                   : SandwichBounds::sandwich_b_low(scale, mp, Mp, big_m);
    }
    case HypothesisSet::ReverseAndo:
    case HypothesisSet::ReverseAndoSeparated: {
      const double rho_low = rng.log_uniform(range.h_lo, range.h_hi);
      const double rho_high = rng.log_uniform(range.h_lo, range.h_hi);
      const double low_lo = scale;
      const double low_hi = scale * rho_low;
      const double high_lo = set == HypothesisSet::ReverseAndoSeparated ? low_hi * h
                                                                         : scale * rng.log_uniform(0.5, 2.0 * rho_low);
      const double high_hi = high_lo * rho_high;
      const bool a_low = rng.uniform() < 0.5;
      const double a_lo = a_low ? low_lo : high_lo;
      const double a_hi = a_low ? low_hi : high_hi;
      const double b_lo = a_low ? high_lo : low_lo;
      const double b_hi = a_low ? high_hi : low_hi;
      return SandwichBounds::reverse_ando(std::sqrt(a_lo), std::sqrt(a_hi), std::sqrt(b_lo), std::sqrt(b_hi));
    }
  }
  return SandwichBounds::common(scale, scale * h);
}

Json to_json(const SandwichBounds& b) {
  Json doc;
  doc["kind"] = std::string(to_string(b.kind));
  switch (b.kind) {
    case BoundsKind::Common:
      doc["m"] = b.m;
      doc["M"] = b.M;
      break;
    case BoundsKind::SandwichBLow:
    case BoundsKind::SandwichALow:
      doc["m"] = b.m;
      doc["mp"] = b.mp;
      doc["Mp"] = b.Mp;
      doc["M"] = b.M;
      break;
    case BoundsKind::ReverseAndo:
      doc["m1"] = b.m1;
      doc["M1"] = b.M1;
      doc["m2"] = b.m2;
      doc["M2"] = b.M2;
      break;
  }
  return doc;
}

SandwichBounds bounds_from_json(const Json& doc) {
  try {
    const auto kind = bounds_kind_from_string(doc.at("kind").get<std::string>());
    const auto num = [&](const char* key) { return doc.at(key).get<double>(); };
    switch (kind) {
      case BoundsKind::Common: return SandwichBounds::common(num("m"), num("M"));
      case BoundsKind::SandwichBLow: return SandwichBounds::sandwich_b_low(num("m"), num("mp"), num("Mp"), num("M"));
      case BoundsKind::SandwichALow: return SandwichBounds::sandwich_a_low(num("m"), num("mp"), num("Mp"), num("M"));
      case BoundsKind::ReverseAndo: return SandwichBounds::reverse_ando(num("m1"), num("M1"), num("m2"), num("M2"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bounds: ") + e.what());
  }
  throw Error(Errc::ParseError, "bounds: unreachable");
}

Json to_json(const Instance& instance) {
  Json doc;
  doc["n"] = instance.n;
  doc["seed"] = instance.seed;
  doc["force_endpoints"] = instance.force_endpoints;
  doc["bounds"] = to_json(instance.bounds);
  doc["A"] = to_json(instance.A);
  doc["B"] = to_json(instance.B);
  return doc;
}

Instance instance_from_json(const Json& doc) {
  try {
    Instance out;
    out.n = doc.at("n").get<Index>();
    out.seed = doc.value("seed", std::uint64_t{0});
    out.force_endpoints = doc.value("force_endpoints", false);
    out.bounds = bounds_from_json(doc.at("bounds"));
    out.A = hermitian_from_json(doc.at("A"));
    out.B = hermitian_from_json(doc.at("B"));
    if (out.A.dim() != out.n || out.B.dim() != out.n)
      throw Error(Errc::DimensionMismatch, "instance matrices do not match n");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("instance: ") + e.what());
  }
}

}  // namespace opineq
