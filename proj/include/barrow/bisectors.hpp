#pragma once

#include "barrow/geom.hpp"
#include "barrow/regions.hpp"

namespace barrow {

// Angles subtended at M: alpha = angle BMC, beta = angle CMA, gamma = angle AMB.
struct ApexAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double operator[](int i) const { return i == 0 ? alpha : (i == 1 ? beta : gamma); }
};

// Unsigned internal-bisector lengths from M: l_a bisects angle BMC, etc.
struct BisectorTriple {
  double la = 0.0;
  double lb = 0.0;
  double lc = 0.0;

  double operator[](int i) const { return i == 0 ? la : (i == 1 ? lb : lc); }
};

// Bisector lengths carrying the side-of-line sign of the matching
// barycentric coordinate; a snapped-to-zero coordinate yields the
// non-negative collinear value.
struct SignedBisectorTriple {
  double la = 0.0;
  double lb = 0.0;
  double lc = 0.0;

  double operator[](int i) const { return i == 0 ? la : (i == 1 ? lb : lc); }
};

// Angle at m between rays m->p and m->q, in [0, pi], from atan2(|cross|, dot).
double angle_at(Point2 m, Point2 p, Point2 q);

// Throws VertexCoincidence when m is within the coincidence radius of a vertex.
ApexAngles apex_angles(const Triangle& t, Point2 m);

// The two closed forms for the bisector of angle BMC at a non-collinear M:
//   cosine = 2 Rb Rc / (Rb + Rc) * cos(alpha / 2)
//   sides  = sqrt(Rb Rc) / (Rb + Rc) * sqrt((Rb + Rc)^2 - |BC|^2)
// `sides` is evaluated in quad precision because the difference of squares
// cancels as M approaches the open segment BC.
struct BisectorForms {
  double cosine = 0.0;
  double sides = 0.0;
};
BisectorForms bisector_length_forms(Point2 m, Point2 b, Point2 c);

// Length of M on line BC: 0 on the closed segment, 2 Rb Rc / (Rb + Rc) outside.
double collinear_bisector_length(Point2 m, Point2 b, Point2 c);

// True when |cross(B - M, C - M)| <= 1e-12 * max(Rb, Rc, |BC|)^2.
bool on_line(Point2 m, Point2 b, Point2 c);

// Bisector length of angle BMC. Uses the collinear convention on line BC and
// the cosine form elsewhere. Throws VertexCoincidence if M = B or M = C.
double bisector_length(Point2 m, Point2 b, Point2 c);

// A' = (Rc B + Rb C) / (Rb + Rc), the point where the bisector meets BC.
// Throws CollinearInput when M lies on line BC.
Point2 bisector_foot(Point2 m, Point2 b, Point2 c);

// Magnitudes of signed_bisectors, so both share one arithmetic path.
BisectorTriple bisectors(const Triangle& t, Point2 m, double eps = kDefaultEps);

SignedBisectorTriple signed_bisectors(const Triangle& t, Point2 m, double eps = kDefaultEps);

}  // namespace barrow
