#include "histo/families.hpp"

#include <array>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace histo {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kNames{{
    {Family::Lgl, "lgl"},
    {Family::C1Fekete, "c1-fekete"},
    {Family::C1FeketeNormalized, "c1-fekete-normalized"},
    {Family::C2Fekete, "c2-fekete"},
    {Family::UniformNodes, "uniform-nodes"},
    {Family::UniformC1, "uniform-c1"},
}};

FeketeResult uniform_result(SupportSet set, std::vector<double> points, Mode mode) {
  FeketeResult res;
  res.log_abs_det = sign_log_det(build_vandermonde(BasisKind::ChebyshevU, set, mode)).log_abs_det;
  res.det_basis = BasisKind::ChebyshevU;
  res.mode = mode;
  res.method = FeketeMethod::ClosedForm;
  res.symmetric = is_symmetric(set);
  res.set = std::move(set);
  res.points = std::move(points);
  return res;
}

std::vector<double> equispaced(std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  for (std::size_t k = 0; k < n / 2; ++k) xs[n - 1 - k] = -xs[k];
  if (n % 2 == 1) xs[n / 2] = 0.0;
  return xs;
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

Mode natural_mode(Family family) {
  switch (family) {
    case Family::Lgl:
    case Family::UniformNodes: return Mode::Nodal;
    case Family::C1Fekete: return Mode::Segmental;
    case Family::C1FeketeNormalized:
    case Family::C2Fekete:
    case Family::UniformC1: return Mode::Normalized;
  }
  return Mode::Normalized;
}

FeketeResult make_family(Family family, std::size_t r, const FamilyOptions& opts) {
  switch (family) {
    case Family::Lgl: return fekete_nodes(r);
    case Family::C1Fekete: return fekete_concat_nonnormalized(r);
    case Family::C1FeketeNormalized: return fekete_concat_normalized(r, opts.normalized);
    case Family::C2Fekete:
      if (!(opts.lambda > 0.0 && opts.lambda < 1.0)) throw std::invalid_argument("lambda must lie in (0, 1)");
      return fekete_arc(r, opts.lambda * std::numbers::pi / static_cast<double>(r));
    case Family::UniformNodes: {
      if (r < 2) throw std::invalid_argument("uniform nodes need r >= 2");
      std::vector<double> xs = equispaced(r);
      SupportSet set = node_set(xs);
      return uniform_result(std::move(set), std::move(xs), Mode::Nodal);
    }
    case Family::UniformC1: {
      if (r < 1) throw std::invalid_argument("need r >= 1 segments");
      std::vector<double> xs = equispaced(r + 1);
      SupportSet set = concat_from_nodes(xs);
      return uniform_result(std::move(set), std::move(xs), Mode::Normalized);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace histo
