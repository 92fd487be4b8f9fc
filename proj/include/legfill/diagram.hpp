#pragma once
// Planar 4-valent diagrams of oriented Legendrian links in the Lagrangian
// projection.
//
// A diagram is a combinatorial map: crossings carry four ports in
// counterclockwise order NE, NW, SW, SE joined by directed edges, and the
// link orientation follows the edge directions.  Quadrant q at a crossing
// is the corner between ports q and q+1 (mod 4), so N sits between NE and
// NW, and the two quadrants swept positively by the Reeb chord are W and E.
// Strands pass straight through a crossing (NW<->SE and NE<->SW).
//
// Faces are the orbits of darts under "turn left": a region lies on the left
// of each of its darts, so bounded faces are traversed counterclockwise.
// Unbounded regions cannot be detected combinatorially and are identified by
// builder-supplied marker corners.
//
// Base points on edges carry the H1 coefficients: a boundary arc crossing a
// base point picks up the variable to the power +sign (forward) or -sign
// (backward).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "legfill/free_algebra.hpp"
#include "legfill/gf2_laurent.hpp"

namespace legfill {

namespace port {
constexpr int NE = 0, NW = 1, SW = 2, SE = 3;
}
namespace quadrant {
constexpr int N = 0, W = 1, S = 2, E = 3;
}

inline bool positive_quadrant(int q) { return q == quadrant::W || q == quadrant::E; }

// Darts: edge e yields forward dart 2e (tail to head) and reverse dart 2e+1.
inline int forward_dart(int e) { return 2 * e; }
inline int reverse_dart(int e) { return 2 * e + 1; }
inline int dart_edge(int d) { return d >> 1; }
inline bool dart_is_reverse(int d) { return (d & 1) != 0; }

struct BasePoint {
  int var;   // index into the diagram's coefficient context
  int sign;  // +1 or -1: exponent picked up along the forward dart
};

struct EdgeRec {
  int tail_crossing;
  int tail_port;
  int head_crossing;
  int head_port;
  std::vector<BasePoint> base_points;
};

struct Corner {
  int crossing;
  int quadrant;
  bool operator==(const Corner& o) const {
    return crossing == o.crossing && quadrant == o.quadrant;
  }
};

struct Face {
  std::vector<int> darts;       // in orbit order
  std::vector<Corner> corners;  // corners[i] follows darts[i]
  bool bounded = true;
};

class LagrangianDiagram {
 public:
  // Crossing labels double as chord names; gradings ride along.  Validates
  // that the map is a consistently oriented planar link diagram: every port
  // carries exactly one edge end, strands run head-to-tail through each
  // crossing, face corners partition the quadrants, the Euler count matches
  // a disjoint union of disks, markers pick out one unbounded face per
  // connected piece, and every link component carries a base point.
  LagrangianDiagram(Ctx ctx, std::vector<ChordInfo> crossings, std::vector<EdgeRec> edges,
                    std::vector<Corner> outer_markers);

  const Ctx& ctx() const { return ctx_; }
  const Alphabet& alphabet() const { return alpha_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int component_count() const { return components_; }  // link components
  const std::vector<EdgeRec>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<int>& bounded_faces() const { return bounded_faces_; }

  const std::string& label(int crossing) const { return alpha_->label(crossing); }
  int grading(int crossing) const { return alpha_->grading(crossing); }

  // The dart leaving a crossing through a port.
  int dart_out(int crossing, int p) const { return dart_out_[crossing][p]; }
  // The crossing and port at which a dart arrives.
  std::pair<int, int> dart_arrival(int d) const;
  // The corner on the left after arriving along d: quadrant arrival-1 (mod 4).
  Corner corner_of(int d) const;
  // The next dart of the face on the left of d.
  int next_in_face(int d) const;
  // The face whose boundary passes the given corner.
  int face_at(int crossing, int q) const { return face_at_[crossing][q]; }

 private:
  void trace_faces();
  void validate(const std::vector<Corner>& outer_markers);

  Ctx ctx_;
  Alphabet alpha_;
  std::vector<ChordInfo> crossings_;
  std::vector<EdgeRec> edges_;
  std::vector<std::array<int, 4>> dart_out_;
  std::vector<std::array<int, 4>> face_at_;
  std::vector<Face> faces_;
  std::vector<int> bounded_faces_;
  int components_ = 0;
};

// The maximal-tb (2,n) torus link in the Lagrangian projection, n odd: a row
// of degree-0 crossings b1..bn closed up by two degree-1 crossings a1, a2.
// One base point s0 sits on the a1 cap, giving coefficients in Z2[s0^±1].
LagrangianDiagram build_torus_2n(int n);

// The diagram left after pinching all n twist crossings: two disjoint
// unknots, each a single degree-1 crossing with two loops.  Base points
// s1..sn (from the pinches) sit on both middle strands with opposite signs,
// and s0 stays on the a1 cap.
LagrangianDiagram build_final_unknot(int n);

}  // namespace legfill
