#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "h2r/errors.hpp"

namespace h2r {

/// Point (x, y) of the upper half-plane H^2, model metric (dx^2 + dy^2) / y^2.
/// Construction enforces y > 0; a NaN coordinate is rejected as well.
struct DomainPoint {
  double x;
  double y;

  DomainPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y_ > 0.0))
      throw DomainViolation("DomainPoint: y must be positive, got y = " + std::to_string(y_));
    if (std::isnan(x_)) throw DomainViolation("DomainPoint: x is NaN");
  }
};

/// Components of a tangent vector of H^2 x R in the orthonormal frame
/// E1 = y d/dx, E2 = y d/dy, E3 = d/dz.  The frame is orthonormal, so the
/// Euclidean dot product of component triples is the ambient inner product.
struct FrameVector {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;

  double dot(const FrameVector& o) const { return e1 * o.e1 + e2 * o.e2 + e3 * o.e3; }
  double norm() const { return std::sqrt(dot(*this)); }

  FrameVector operator+(const FrameVector& o) const { return {e1 + o.e1, e2 + o.e2, e3 + o.e3}; }
  FrameVector operator-(const FrameVector& o) const { return {e1 - o.e1, e2 - o.e2, e3 - o.e3}; }
  FrameVector operator*(double s) const { return {s * e1, s * e2, s * e3}; }
};

inline FrameVector operator*(double s, const FrameVector& v) { return v * s; }

/// Value and derivatives through second order of a scalar field f(x, y).
struct Jet2 {
  double f = 0.0;
  double fx = 0.0;
  double fy = 0.0;
  double fxx = 0.0;
  double fxy = 0.0;
  double fyy = 0.0;
};

/// Jet2 extended by the third-order derivatives; needed by the shape
/// operator, whose entries differentiate first-order data once more.
struct Jet3 : Jet2 {
  double fxxx = 0.0;
  double fxxy = 0.0;
  double fxyy = 0.0;
  double fyyy = 0.0;
};

/// Axis-aligned closed rectangle [x0, x1] x [y0, y1] inside the upper half
/// plane (0 < y0 < y1, x0 < x1).
struct Region {
  double x0, x1, y0, y1;

  Region(double x0_, double x1_, double y0_, double y1_) : x0(x0_), x1(x1_), y0(y0_), y1(y1_) {
    if (!(x0_ < x1_))
      throw DomainViolation("Region: need x0 < x1");
    if (!(0.0 < y0_ && y0_ < y1_))
      throw DomainViolation("Region: need 0 < y0 < y1");
  }

  bool contains(const DomainPoint& p) const {
    return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

/// A scalar field presented through its second-order jet.
using Jet2Field = std::function<Jet2(const DomainPoint&)>;

/// A scalar field presented through its third-order jet.
using Jet3Field = std::function<Jet3(const DomainPoint&)>;

}  // namespace h2r
