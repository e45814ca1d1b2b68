#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anharm/trees.hpp"

namespace anharm::lc {

using trees::VKind;

/// Finite encoding of a line complex: a planar bipartite multigraph given
/// by rotation systems. Slots are directed half-edges; a slot with twin -1
/// is a tail stub, the cut of a periodic logarithmic tail. Faces are
/// derived from the rotation: walks through stubs are the unbounded faces,
/// closed walks must be 2-gons. face_labels holds one base-label index per
/// derived face, in derivation order (stub faces first, then cycles).
struct LineComplex {
  int q = 0;
  std::vector<std::string> base_labels;  // b_1..b_q in cyclic order
  struct Vertex {
    VKind kind = VKind::O;
    std::vector<int> rot;  // slot ids, CCW
  };
  struct Slot {
    int vertex = 0;
    int twin = -1;
  };
  std::vector<Vertex> vertices;
  std::vector<Slot> slots;
  std::vector<int> face_labels;
};

struct Face {
  std::vector<int> out_slots;  // traversal order
  bool unbounded = false;
};

/// Faces in deterministic order: one per stub (walk begins just after the
/// stub), then remaining closed walks by lowest slot id.
std::vector<Face> derive_faces(const LineComplex& L);

struct LineComplexReport {
  bool structure_ok = false;
  bool bipartite_ok = false;
  bool degree_ok = false;
  bool faces_ok = false;       // bounded faces are 2-gons, every slot covered
  bool labels_ok = false;      // q distinct labels around every full vertex
  bool cyclic_order_ok = false;  // base order CCW at o, CW at x
  bool propagation_ok = false;   // labels reproducible from one seed
  bool pass = false;
  std::vector<std::string> violations;
};

LineComplexReport validate_line_complex(const LineComplex& L);

/// Labels forced by propagating a single seed face label through the vertex
/// cyclic-order rules; nullopt on conflict.
std::optional<std::vector<int>> propagate_labels(const LineComplex& L, int seed_face,
                                                 int seed_label);

/// The classical smallest example: the exponential-map complex, an
/// alternating o/x chain between two unbounded faces (q = 2).
LineComplex exp_chain(int interior_vertices);

/// Expands a double-symmetric plane tree into a line complex: tree faces
/// become the unbounded faces with the given label indices, tree edges
/// become strand bundles whose multiplicities are forced by the label gaps,
/// tree ends become periodic tails truncated after `periods` turns. Vertex
/// kinds are forced by the label winding; returns nullopt when the tree
/// does not carry the pattern (winding or bipartite obstruction).
std::optional<LineComplex> from_tree(const trees::EmbeddedTree& tree,
                                     const std::vector<int>& sector_label_idx,
                                     const std::vector<std::string>& base_labels,
                                     int periods);

/// Symmetric degree-5 complexes with the 12-sector asymptotic-value pattern
/// (0,a,0,b,0,a,0,Ra,0,Rb,0,Ra), built from enumerated 12-end
/// double-symmetric trees. At least one instance exists for every period
/// count >= 1.
std::vector<LineComplex> theorem3_instances(int periods, std::size_t max_instances = 8);

std::string to_json(const LineComplex& L);
LineComplex from_json(const std::string& text);

}  // namespace anharm::lc
