#include "histo/supports.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace histo {

std::string_view to_string(SupportClass c) {
  switch (c) {
    case SupportClass::General: return "general";
    case SupportClass::C1: return "C1";
    case SupportClass::C2: return "C2";
  }
  return "general";
}

std::optional<SupportClass> parse_support_class(std::string_view name) {
  if (name == "general") return SupportClass::General;
  if (name == "C1" || name == "c1") return SupportClass::C1;
  if (name == "C2" || name == "c2") return SupportClass::C2;
  return std::nullopt;
}

void ArcFamily::validate() const {
  if (!(rho > 0.0 && rho < std::numbers::pi / 2)) {
    throw std::invalid_argument("arc radius must lie in (0, pi/2)");
  }
  if (taus.empty()) throw std::invalid_argument("arc family needs at least one tau");
  // Small slack so that tau = rho computed in floating point is accepted.
  const double slack = 1e-14;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (taus[i] < rho - slack || taus[i] > std::numbers::pi - rho + slack) {
      throw std::invalid_argument("arc midpoint leaves I_rho: tau outside [rho, pi - rho]");
    }
    if (i > 0 && !(taus[i] > taus[i - 1])) {
      throw std::invalid_argument("arc taus must be strictly increasing");
    }
  }
}

SupportSet::SupportSet(std::vector<Support> supports, SupportClass cls)
    : supports_(std::move(supports)), class_(cls) {
  if (supports_.empty()) throw std::invalid_argument("support set must not be empty");
  for (const auto& s : supports_) {
    if (!(s.alpha <= s.beta)) throw std::invalid_argument("support with alpha > beta");
    if (s.alpha < -1.0 || s.beta > 1.0) throw std::invalid_argument("support outside [-1, 1]");
  }
  std::stable_sort(supports_.begin(), supports_.end(), [](const Support& a, const Support& b) {
    return a.midpoint() < b.midpoint();
  });
}

bool SupportSet::all_nodes() const {
  return std::all_of(supports_.begin(), supports_.end(), [](const Support& s) { return s.is_node(); });
}

bool SupportSet::all_segments() const {
  return std::none_of(supports_.begin(), supports_.end(), [](const Support& s) { return s.is_node(); });
}

RegularityReport check_regular(const SupportSet& set) {
  RegularityReport report;
  const auto add = [&](int cond, std::size_t i, std::size_t j, std::string msg) {
    report.is_regular = false;
    report.violations.push_back({cond, i, j, std::move(msg)});
  };
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Support& a = set[i];
      const Support& b = set[j];
      const auto pair = " (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      if (a.is_node() && b.is_node()) {
        if (std::abs(a.midpoint() - b.midpoint()) <= kNodeLength) {
          add(1, i, j, "repeated node" + pair);
        }
      } else if (!a.is_node() && !b.is_node()) {
        const double overlap = std::min(a.beta, b.beta) - std::max(a.alpha, b.alpha);
        if (overlap > kNodeLength) add(2, i, j, "segment interiors overlap" + pair);
      } else {
        const Support& node = a.is_node() ? a : b;
        const Support& seg = a.is_node() ? b : a;
        const double x = node.midpoint();
        if (x > seg.alpha + kNodeLength && x < seg.beta - kNodeLength) {
          add(3, i, j, "node interior to a segment" + pair);
        }
      }
    }
  }
  return report;
}

SupportSet arc_to_supports(const ArcFamily& fam) {
  fam.validate();
  std::vector<Support> supports;
  supports.reserve(fam.taus.size());
  for (double tau : fam.taus) {
    double alpha = std::cos(tau + fam.rho);
    double beta = std::cos(tau - fam.rho);
    alpha = std::clamp(alpha, -1.0, 1.0);
    beta = std::clamp(beta, -1.0, 1.0);
    supports.push_back({alpha, beta});
  }
  SupportSet set(std::move(supports), SupportClass::C2);
  set.arc_ = fam;
  return set;
}

ArcFamily recover_arc(const SupportSet& set, double tolerance) {
  if (set.arc()) return *set.arc();
  ArcFamily fam;
  std::vector<double> rhos;
  for (std::size_t k = set.size(); k-- > 0;) {
    const double ta = std::acos(std::clamp(set[k].alpha, -1.0, 1.0));
    const double tb = std::acos(std::clamp(set[k].beta, -1.0, 1.0));
    fam.taus.push_back(0.5 * (ta + tb));
    rhos.push_back(0.5 * (ta - tb));
  }
  const auto [lo, hi] = std::minmax_element(rhos.begin(), rhos.end());
  if (*hi - *lo > tolerance) throw std::invalid_argument("supports do not share a common arc radius");
  double sum = 0.0;
  for (double r : rhos) sum += r;
  fam.rho = sum / static_cast<double>(rhos.size());
  return fam;
}

SupportSet concat_from_nodes(std::span<const double> breakpoints) {
  if (breakpoints.size() < 2) throw std::invalid_argument("concatenated segments need r + 1 >= 2 breakpoints");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
    throw std::invalid_argument("breakpoints must be sorted");
  }
  std::vector<Support> supports;
  supports.reserve(breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    supports.push_back({breakpoints[i], breakpoints[i + 1]});
  }
  return SupportSet(std::move(supports), SupportClass::C1);
}

SupportSet node_set(std::span<const double> nodes) {
  std::vector<Support> supports;
  supports.reserve(nodes.size());
  for (double x : nodes) supports.push_back(Support::node(x));
  return SupportSet(std::move(supports));
}

std::vector<double> endpoints(const SupportSet& set) {
  std::vector<double> out;
  if (set.all_nodes()) {
    for (const auto& s : set.supports()) out.push_back(s.midpoint());
  } else if (set.support_class() == SupportClass::C1) {
    out.push_back(set[0].alpha);
    for (const auto& s : set.supports()) out.push_back(s.beta);
  } else {
    for (const auto& s : set.supports()) {
      out.push_back(s.alpha);
      out.push_back(s.beta);
    }
  }
  return out;
}

}  // namespace histo
