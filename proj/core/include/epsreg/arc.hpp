#pragma once

// Closed arcs of the unit circle. Gamma = {e^{i phi} : phi from start to end,
// counterclockwise}; the complement is the arc from end back to start.

#include <vector>

namespace epsreg {

class ArcSpec {
 public:
  /// Counterclockwise arc from start to end. Angles are reduced to [0, 2 pi);
  /// equal angles are rejected (use full_circle() or empty()).
  static ArcSpec between(double start, double end);
  static ArcSpec full_circle();
  static ArcSpec empty();
  /// Upper half circle, phi in [0, pi].
  static ArcSpec upper_half() { return between(0.0, 3.14159265358979323846); }

  bool is_empty() const noexcept { return kind_ == Kind::Empty; }
  bool is_full() const noexcept { return kind_ == Kind::Full; }
  double start() const noexcept { return start_; }
  double end() const noexcept { return end_; }
  /// Arc length in [0, 2 pi].
  double length() const noexcept;
  /// Whether the angle lies on the closed arc.
  bool contains(double phi) const noexcept;
  /// Position of phi measured counterclockwise from start, in [0, 2 pi).
  double offset(double phi) const noexcept;
  /// The closure of the complement of the interior.
  ArcSpec complement() const noexcept;

 private:
  enum class Kind { Arc, Full, Empty };
  ArcSpec(Kind kind, double start, double end) : kind_(kind), start_(start), end_(end) {}
  Kind kind_;
  double start_;
  double end_;
};

/// Gauss-Legendre nodes along an arc, weights in units of arc length.
struct ArcRule {
  std::vector<double> phi;
  std::vector<double> weights;
};

ArcRule arc_rule(const ArcSpec& arc, int n);

/// Nodes on Gamma and on its complement.
struct BoundaryQuadrature {
  ArcRule gamma;
  ArcRule complement;
};

BoundaryQuadrature boundary_quadrature(const ArcSpec& arc, int n_per_arc = 128);

/// Reduces an angle to [0, 2 pi).
double wrap_angle(double phi) noexcept;

}  // namespace epsreg
