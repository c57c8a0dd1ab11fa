#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace histo {

/// Length at or below which a support is treated as a single node.
inline constexpr double kNodeLength = 1e-12;

/// A node (alpha == beta up to kNodeLength) or a closed segment [alpha, beta] in [-1, 1].
struct Support {
  double alpha = 0.0;
  double beta = 0.0;

  [[nodiscard]] static Support node(double x) { return {x, x}; }

  [[nodiscard]] double length() const { return beta - alpha; }
  [[nodiscard]] double midpoint() const { return 0.5 * (alpha + beta); }
  [[nodiscard]] bool is_node() const { return length() <= kNodeLength; }

  bool operator==(const Support&) const = default;
};

enum class SupportClass { General, C1, C2 };

[[nodiscard]] std::string_view to_string(SupportClass c);
[[nodiscard]] std::optional<SupportClass> parse_support_class(std::string_view name);

/// Segments [cos(tau_i + rho), cos(tau_i - rho)], all of arc-length 2 rho on the
/// upper half circle. taus are increasing and lie in [rho, pi - rho].
struct ArcFamily {
  double rho = 0.0;
  std::vector<double> taus;

  /// Throws std::invalid_argument when rho or the taus violate the class bounds.
  void validate() const;
};

/// Ordered supports (ascending midpoint) plus optional class metadata.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<Support> supports, SupportClass cls = SupportClass::General);

  [[nodiscard]] std::size_t size() const { return supports_.size(); }
  [[nodiscard]] const Support& operator[](std::size_t i) const { return supports_[i]; }
  [[nodiscard]] std::span<const Support> supports() const { return supports_; }
  [[nodiscard]] SupportClass support_class() const { return class_; }

  /// Arc parameters when the set was produced from an ArcFamily. Support k
  /// corresponds to taus[size() - 1 - k] since midpoints decrease with tau.
  [[nodiscard]] const std::optional<ArcFamily>& arc() const { return arc_; }

  [[nodiscard]] bool all_nodes() const;
  [[nodiscard]] bool all_segments() const;

  friend SupportSet arc_to_supports(const ArcFamily& fam);

 private:
  std::vector<Support> supports_;
  SupportClass class_ = SupportClass::General;
  std::optional<ArcFamily> arc_;
};

struct RegularityViolation {
  int condition = 0;  // 1: repeated nodes, 2: overlapping segments, 3: node inside a segment
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;
};

struct RegularityReport {
  bool is_regular = true;
  std::vector<RegularityViolation> violations;
};

/// Checks the three regularity conditions (distinct nodes, segments meeting at
/// most in endpoints, no node interior to a segment) with tolerance kNodeLength.
[[nodiscard]] RegularityReport check_regular(const SupportSet& set);

/// Builds the C2 set for an arc family; throws for taus outside [rho, pi - rho].
[[nodiscard]] SupportSet arc_to_supports(const ArcFamily& fam);

/// Recovers (rho, taus) from endpoints via tau = (acos a + acos b)/2,
/// rho = (acos a - acos b)/2. Throws if the recovered radii are not uniform.
[[nodiscard]] ArcFamily recover_arc(const SupportSet& set, double tolerance = 1e-9);

/// s_i = [x_i, x_{i+1}] for sorted breakpoints; equal neighbours give nodes.
[[nodiscard]] SupportSet concat_from_nodes(std::span<const double> breakpoints);

/// Nodes only.
[[nodiscard]] SupportSet node_set(std::span<const double> nodes);

/// Flat endpoint list: nodes as single values for all-node sets, C1 breakpoints,
/// otherwise alpha_1, beta_1, alpha_2, ...
[[nodiscard]] std::vector<double> endpoints(const SupportSet& set);

}  // namespace histo
