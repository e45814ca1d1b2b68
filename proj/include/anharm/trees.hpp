#pragma once

#include <string>
#include <vector>

#include "anharm/polynomial.hpp"

namespace anharm::trees {

enum class VKind : char { Plain = '.', O = 'o', X = 'x' };

/// Ordered subtree hanging off a parent vertex. Children are listed
/// counterclockwise starting after the parent edge. A leaf must be an end
/// marker (unbounded edge); kinded vertices of degree 2 are legal, plain
/// ones get contracted by canonicalization.
struct Subtree {
  bool end = false;
  VKind kind = VKind::Plain;
  std::vector<Subtree> children;

  bool operator==(const Subtree&) const = default;
};

inline Subtree End() { return Subtree{true, VKind::Plain, {}}; }
Subtree Node(std::vector<Subtree> children, VKind kind = VKind::Plain);

/// Vertex on an open half-axis. side_a holds the hangings on the side swept
/// first when rotating counterclockwise from the outward direction (east
/// arm: upper half); side_b the other side. Both are listed CCW in the
/// vertex rotation.
struct AxisNode {
  VKind kind = VKind::Plain;
  std::vector<Subtree> side_a;
  std::vector<Subtree> side_b;

  bool operator==(const AxisNode&) const = default;
};

/// Contents of one half-axis: vertices ordered from the origin outward,
/// optionally continued by an unbounded ray (an end on the axis).
struct AxisArm {
  std::vector<AxisNode> nodes;
  bool ray = false;

  bool operator==(const AxisArm&) const = default;
  bool empty() const { return nodes.empty() && !ray; }
};

/// Finite encoding of a properly embedded planar tree containing the
/// origin: explicit half-axis arms, four quadrant fans attached at the
/// origin (CCW within each quadrant), and optional face labels listed CCW
/// starting with the face that straddles the positive real direction.
struct EmbeddedTree {
  VKind origin = VKind::Plain;
  AxisArm east, north, west, south;
  std::vector<Subtree> q1, q2, q3, q4;
  std::vector<std::string> face_labels;

  bool operator==(const EmbeddedTree&) const = default;
};

// Symmetry actions (structural; labels are not transformed).
Subtree mirror(const Subtree& t);
std::vector<Subtree> mirror_list(const std::vector<Subtree>& xs);
EmbeddedTree r_image(const EmbeddedTree& t);      // z -> conj(z)
EmbeddedTree i_image(const EmbeddedTree& t);      // z -> -conj(z)
EmbeddedTree half_turn(const EmbeddedTree& t);    // z -> -z (orientation preserving)
EmbeddedTree quarter_turn(const EmbeddedTree& t); // z -> iz (not a symmetry; used by enumeration)

bool is_double_symmetric(const EmbeddedTree& t);

/// Counts of ends per region, CCW: Q1..Q4 fans plus the four axis rays.
struct EndSignature {
  int q[4] = {0, 0, 0, 0};
  bool axis_ray[4] = {false, false, false, false};  // east, north, west, south
  int total = 0;
};
EndSignature end_signature(const EmbeddedTree& t);

/// Isomorphism invariant for homeomorphisms of the plane commuting with
/// both reflections: plain degree-2 vertices are contracted, then the
/// lexicographically smaller of the encodings of t and its half turn is
/// returned. Throws InvalidTree when the encoding is malformed.
std::string canonical_form(const EmbeddedTree& t);

/// Same quotient with all vertex kinds erased first (topological type).
std::string topological_form(const EmbeddedTree& t);

/// Low-level rotation system of the embedded tree, exposed for the line
/// complex builder. Slots are directed half-edges (twin >= 0) or unbounded
/// ends (twin = -1); slot.face is the face traced while traversing the
/// slot, with faces indexed CCW and F0 straddling the positive real
/// direction. The virtual anchor slot (region -2), when present, is part of
/// the rotation but carries no edge.
struct RotationSystem {
  struct Slot {
    int vertex;
    int twin = -1;
    int region = -1;  // 0..3 = Q1..Q4, 4..7 = +x,+y,-x,-y, -2 = virtual anchor
    int face = -1;
  };
  struct Vtx {
    VKind kind;
    std::vector<int> rot;  // slot ids, CCW
  };
  std::vector<Vtx> vertices;
  std::vector<Slot> slots;
  std::vector<int> ends_ccw;  // real end slots in CCW walk order
  int num_faces = 0;
  int origin = 0;

  int pos_of(int slot) const;
};

RotationSystem rotation_system(const EmbeddedTree& t);

/// Faces and edge-face incidences of the embedded tree. Faces are indexed
/// CCW with F0 straddling the positive real direction.
struct FaceStructure {
  int num_ends = 0;
  std::vector<std::pair<int, int>> edge_faces;        // per edge: flanking faces
  std::vector<std::pair<VKind, VKind>> edge_kinds;    // endpoint kinds of each edge
  std::vector<std::vector<int>> face_vertices;        // vertex ids per face
  std::vector<VKind> vertex_kinds;
  std::vector<std::vector<int>> vertex_faces;         // incident faces per vertex (CCW)
  std::vector<int> end_quadrant;                      // region tag per end, CCW order
  int origin_vertex = 0;
  bool east_ray = false;                              // an end sits exactly on +x
};
FaceStructure face_structure(const EmbeddedTree& t);

/// Standard face label pattern for the eigenfunction trees: d = 4 gives
/// (0, a, Ia, 0, -a, Ra); d = 6 gives (0, a, 0, Ia, 0, -a, 0, Ra).
std::vector<std::string> standard_labels(int d);

struct Proposition1Report {
  bool tree_ok = false;          // a) encoding is a proper tree
  bool labels_distinct = false;  // b) edges separate distinct labels
  bool o_off_zero_faces = false; // c)
  bool x_supported = false;      // d)
  bool ends_faces_count = false; // e) d+2 ends and faces
  bool zero_faces_swapped = false;  // f)
  bool alternating_zero = true;  // extra rule for d = 6
  bool pass = false;
  std::vector<std::string> violations;
};

Proposition1Report check_proposition1(const EmbeddedTree& t, int d);

/// Model trees for the quartic census classes: n real zeros (n = 0, even,
/// odd give the three decorated families), o-vertices on the axes only.
EmbeddedTree model_tree_quartic(int n);

/// All I-symmetric rooted planar trees with `ends` ends and no plain
/// degree-2 vertices, as serialized forms (ordered-tree isomorphism).
std::vector<std::string> enumerate_rooted_symmetric(int ends);

/// Double-symmetric trees with `ends` ends, assembled from the origin cases
/// (both axes / one axis / rotations) and deduplicated canonically. When
/// ends_on_axes is false, trees with axis rays are excluded.
std::vector<std::string> enumerate_double_symmetric(int ends, bool ends_on_axes);
std::vector<EmbeddedTree> enumerate_double_symmetric_trees(int ends, bool ends_on_axes);

/// Topological types of double-symmetric trees with d+2 ends whose end
/// directions match the Stokes rays of degree d and whose faces, labeled by
/// the standard pattern, never share an edge between equal labels.
int count_topological_types(int d);

/// Same filter, then decorated families: one per admissible origin kind.
int count_decorated_types(int d);

/// Generic generate-and-filter enumeration (independent of the assembly
/// path); exposed for cross-checking.
std::vector<std::string> brute_force_double_symmetric(int ends, bool ends_on_axes);

/// All rooted planar trees with the given end count and no plain degree-2
/// vertices (ordered trees; brute-force oracle for the symmetric counts).
std::vector<Subtree> all_rooted_trees(int ends, int max_root_children);

std::string serialize_subtree(const Subtree& t);

}  // namespace anharm::trees
