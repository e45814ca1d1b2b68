#include "anharm/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "anharm/errors.hpp"

namespace anharm::trees {

Subtree Node(std::vector<Subtree> children, VKind kind) {
  if (children.empty()) throw InvalidTree("Node: a leaf must be an end marker");
  return Subtree{false, kind, std::move(children)};
}

Subtree mirror(const Subtree& t) {
  Subtree out = t;
  std::reverse(out.children.begin(), out.children.end());
  for (auto& c : out.children) c = mirror(c);
  return out;
}

std::vector<Subtree> mirror_list(const std::vector<Subtree>& xs) {
  std::vector<Subtree> out(xs.rbegin(), xs.rend());
  for (auto& c : out) c = mirror(c);
  return out;
}

namespace {

AxisArm arm_reflect(const AxisArm& a) {
  AxisArm out = a;
  for (auto& n : out.nodes) {
    auto sa = mirror_list(n.side_b);
    auto sb = mirror_list(n.side_a);
    n.side_a = std::move(sa);
    n.side_b = std::move(sb);
  }
  return out;
}

int subtree_ends(const Subtree& t) {
  if (t.end) return 1;
  int n = 0;
  for (const auto& c : t.children) n += subtree_ends(c);
  return n;
}

int list_ends(const std::vector<Subtree>& xs) {
  int n = 0;
  for (const auto& x : xs) n += subtree_ends(x);
  return n;
}

int arm_ends(const AxisArm& a) {
  int n = a.ray ? 1 : 0;
  for (const auto& v : a.nodes) n += list_ends(v.side_a) + list_ends(v.side_b);
  return n;
}

}  // namespace

EmbeddedTree r_image(const EmbeddedTree& t) {
  EmbeddedTree out;
  out.origin = t.origin;
  out.east = arm_reflect(t.east);
  out.west = arm_reflect(t.west);
  out.north = arm_reflect(t.south);
  out.south = arm_reflect(t.north);
  out.q1 = mirror_list(t.q4);
  out.q2 = mirror_list(t.q3);
  out.q3 = mirror_list(t.q2);
  out.q4 = mirror_list(t.q1);
  return out;
}

EmbeddedTree i_image(const EmbeddedTree& t) {
  EmbeddedTree out;
  out.origin = t.origin;
  out.east = arm_reflect(t.west);
  out.west = arm_reflect(t.east);
  out.north = arm_reflect(t.north);
  out.south = arm_reflect(t.south);
  out.q1 = mirror_list(t.q2);
  out.q2 = mirror_list(t.q1);
  out.q3 = mirror_list(t.q4);
  out.q4 = mirror_list(t.q3);
  return out;
}

EmbeddedTree half_turn(const EmbeddedTree& t) {
  EmbeddedTree out;
  out.origin = t.origin;
  out.east = t.west;
  out.west = t.east;
  out.north = t.south;
  out.south = t.north;
  out.q1 = t.q3;
  out.q2 = t.q4;
  out.q3 = t.q1;
  out.q4 = t.q2;
  if (!t.face_labels.empty()) {
    const std::size_t e = t.face_labels.size();
    out.face_labels.resize(e);
    for (std::size_t j = 0; j < e; ++j) out.face_labels[j] = t.face_labels[(j + e / 2) % e];
  }
  return out;
}

EmbeddedTree quarter_turn(const EmbeddedTree& t) {
  EmbeddedTree out;
  out.origin = t.origin;
  out.east = t.south;
  out.north = t.east;
  out.west = t.north;
  out.south = t.west;
  out.q1 = t.q4;
  out.q2 = t.q1;
  out.q3 = t.q2;
  out.q4 = t.q3;
  return out;
}

bool is_double_symmetric(const EmbeddedTree& t) {
  EmbeddedTree bare = t;
  bare.face_labels.clear();
  EmbeddedTree r = r_image(bare), i = i_image(bare);
  return r == bare && i == bare;
}

EndSignature end_signature(const EmbeddedTree& t) {
  EndSignature s;
  auto add = [&](int q, int n) {
    s.q[q] += n;
    s.total += n;
  };
  add(0, list_ends(t.q1));
  add(1, list_ends(t.q2));
  add(2, list_ends(t.q3));
  add(3, list_ends(t.q4));
  const AxisArm* arms[4] = {&t.east, &t.north, &t.west, &t.south};
  // side_a regions per arm (east, north, west, south) and side_b regions
  const int side_a_region[4] = {0, 1, 2, 3};
  const int side_b_region[4] = {3, 0, 1, 2};
  for (int a = 0; a < 4; ++a) {
    for (const auto& node : arms[a]->nodes) {
      add(side_a_region[a], list_ends(node.side_a));
      add(side_b_region[a], list_ends(node.side_b));
    }
    if (arms[a]->ray) {
      s.axis_ray[a] = true;
      ++s.total;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// validation and contraction

namespace {

void validate_subtree(const Subtree& t) {
  if (t.end) {
    if (!t.children.empty()) throw InvalidTree("end marker with children");
    return;
  }
  if (t.children.empty()) throw InvalidTree("leaf vertex that is not an end");
  for (const auto& c : t.children) validate_subtree(c);
}

void validate_arm(const AxisArm& a) {
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const auto& n = a.nodes[i];
    for (const auto& s : n.side_a) validate_subtree(s);
    for (const auto& s : n.side_b) validate_subtree(s);
    bool tip = (i + 1 == a.nodes.size()) && !a.ray;
    if (tip && n.side_a.empty() && n.side_b.empty())
      throw InvalidTree("bare axis tip (degree-1 vertex)");
  }
}

Subtree contract_subtree(const Subtree& t) {
  if (t.end) return t;
  Subtree out = t;
  for (auto& c : out.children) c = contract_subtree(c);
  if (out.kind == VKind::Plain && out.children.size() == 1) return out.children[0];
  return out;
}

AxisArm contract_arm(const AxisArm& a) {
  AxisArm out;
  out.ray = a.ray;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    AxisNode n = a.nodes[i];
    for (auto& s : n.side_a) s = contract_subtree(s);
    for (auto& s : n.side_b) s = contract_subtree(s);
    bool has_continuation = (i + 1 < a.nodes.size()) || a.ray;
    if (n.kind == VKind::Plain && n.side_a.empty() && n.side_b.empty() && has_continuation)
      continue;  // invisible degree-2 vertex on a straight axis run
    out.nodes.push_back(std::move(n));
  }
  return out;
}

std::string ser_list(const std::vector<Subtree>& xs);

std::string ser_subtree(const Subtree& t) {
  if (t.end) return "e";
  std::string s(1, static_cast<char>(t.kind));
  s += "(" + ser_list(t.children) + ")";
  return s;
}

std::string ser_list(const std::vector<Subtree>& xs) {
  std::string s;
  for (const auto& x : xs) s += ser_subtree(x);
  return s;
}

std::string ser_arm(const AxisArm& a) {
  std::string s = "[";
  for (const auto& n : a.nodes) {
    s += static_cast<char>(n.kind);
    s += "<" + ser_list(n.side_a) + "|" + ser_list(n.side_b) + ">";
  }
  s += "]";
  if (a.ray) s += "*";
  return s;
}

std::string ser_tree(const EmbeddedTree& t) {
  std::string s = "O";
  s += static_cast<char>(t.origin);
  s += ";E" + ser_arm(t.east);
  s += ";1(" + ser_list(t.q1) + ")";
  s += ";N" + ser_arm(t.north);
  s += ";2(" + ser_list(t.q2) + ")";
  s += ";W" + ser_arm(t.west);
  s += ";3(" + ser_list(t.q3) + ")";
  s += ";S" + ser_arm(t.south);
  s += ";4(" + ser_list(t.q4) + ")";
  if (!t.face_labels.empty()) {
    s += ";L:";
    for (const auto& l : t.face_labels) s += l + ",";
  }
  return s;
}

void validate_tree(const EmbeddedTree& t) {
  validate_arm(t.east);
  validate_arm(t.north);
  validate_arm(t.west);
  validate_arm(t.south);
  for (const auto& s : t.q1) validate_subtree(s);
  for (const auto& s : t.q2) validate_subtree(s);
  for (const auto& s : t.q3) validate_subtree(s);
  for (const auto& s : t.q4) validate_subtree(s);
  EndSignature sig = end_signature(t);
  if (sig.total < 1) throw InvalidTree("tree has no ends");
  if (!t.face_labels.empty() && static_cast<int>(t.face_labels.size()) != sig.total)
    throw InvalidTree("face label count does not match end count");
}

EmbeddedTree contract_tree(const EmbeddedTree& t) {
  EmbeddedTree out = t;
  out.east = contract_arm(t.east);
  out.north = contract_arm(t.north);
  out.west = contract_arm(t.west);
  out.south = contract_arm(t.south);
  for (auto* q : {&out.q1, &out.q2, &out.q3, &out.q4})
    for (auto& s : *q) s = contract_subtree(s);
  return out;
}

void strip_kinds_subtree(Subtree& t) {
  t.kind = VKind::Plain;
  for (auto& c : t.children) strip_kinds_subtree(c);
}

EmbeddedTree strip_kinds(const EmbeddedTree& t) {
  EmbeddedTree out = t;
  out.origin = VKind::Plain;
  for (auto* a : {&out.east, &out.north, &out.west, &out.south})
    for (auto& n : a->nodes) {
      n.kind = VKind::Plain;
      for (auto& s : n.side_a) strip_kinds_subtree(s);
      for (auto& s : n.side_b) strip_kinds_subtree(s);
    }
  for (auto* q : {&out.q1, &out.q2, &out.q3, &out.q4})
    for (auto& s : *q) strip_kinds_subtree(s);
  return out;
}

}  // namespace

std::string serialize_subtree(const Subtree& t) { return ser_subtree(t); }

std::string canonical_form(const EmbeddedTree& t) {
  validate_tree(t);
  std::string s1 = ser_tree(contract_tree(t));
  std::string s2 = ser_tree(contract_tree(half_turn(t)));
  return std::min(s1, s2);
}

std::string topological_form(const EmbeddedTree& t) { return canonical_form(strip_kinds(t)); }

// ---------------------------------------------------------------------------
// rotation graph and faces

namespace {

struct Graph {
  struct Slot {
    int vertex;
    int twin = -1;    // -1: unbounded end
    int region = -1;  // regions 0..3 = Q1..Q4, 4..7 = +x,+y,-x,-y axis, -2 sentinel
  };
  struct Vtx {
    VKind kind;
    std::vector<int> rot;  // slot ids, CCW
  };
  std::vector<Vtx> vtx;
  std::vector<Slot> slots;
  int origin = -1;
  int marker_slot = -1;  // sentinel (virtual) or the east ray end
  bool marker_virtual = true;

  int new_vertex(VKind k) {
    vtx.push_back({k, {}});
    return static_cast<int>(vtx.size()) - 1;
  }
  int new_slot(int v, int region = -1) {
    slots.push_back({v, -1, region});
    int id = static_cast<int>(slots.size()) - 1;
    vtx[v].rot.push_back(id);
    return id;
  }
  void tie(int a, int b) {
    slots[a].twin = b;
    slots[b].twin = a;
  }
  int pos_of(int slot) const {
    const auto& r = vtx[slots[slot].vertex].rot;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] == slot) return static_cast<int>(i);
    throw std::logic_error("slot not in rotation");
  }
};

void add_subtree(Graph& g, int parent, const Subtree& t, int region) {
  if (t.end) {
    g.new_slot(parent, region);
    return;
  }
  int s_par = g.new_slot(parent);
  int v = g.new_vertex(t.kind);
  int s_back = g.new_slot(v);
  g.tie(s_par, s_back);
  for (const auto& c : t.children) add_subtree(g, v, c, region);
}

// Builds the arm starting from the origin; returns nothing (slots appended
// to origin rotation in place). side regions passed per arm orientation.
void add_arm(Graph& g, const AxisArm& a, int region_a, int region_b, int region_axis,
             bool attach_marker) {
  if (a.empty()) return;
  int prev = g.origin;
  int s_prev = g.new_slot(prev);  // slot at origin toward the first node
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const auto& n = a.nodes[i];
    int v = g.new_vertex(n.kind);
    bool last = i + 1 == a.nodes.size();
    // rotation at an arm node, CCW: outward, side_a..., inward, side_b...
    int s_out = -1;
    if (!last) {
      s_out = g.new_slot(v);
    } else if (a.ray) {
      int e = g.new_slot(v, region_axis);
      if (attach_marker) {
        g.marker_slot = e;
        g.marker_virtual = false;
      }
    } else if (attach_marker) {
      int sent = g.new_slot(v, -2);
      g.marker_slot = sent;
      g.marker_virtual = true;
    }
    for (const auto& s : n.side_a) add_subtree(g, v, s, region_a);
    int s_in = g.new_slot(v);
    g.tie(s_prev, s_in);
    for (const auto& s : n.side_b) add_subtree(g, v, s, region_b);
    if (!last) s_prev = s_out;
    prev = v;
  }
  if (a.nodes.empty() && a.ray) {
    // bare ray: the origin slot itself is the end
    g.slots[s_prev].region = region_axis;
    if (attach_marker) {
      g.marker_slot = s_prev;
      g.marker_virtual = false;
    }
  }
}

Graph build_graph(const EmbeddedTree& t) {
  Graph g;
  g.origin = g.new_vertex(t.origin);
  // CCW from angle 0: east, q1, north, q2, west, q3, south, q4
  bool east_marker = !t.east.empty();
  if (east_marker) {
    add_arm(g, t.east, 0, 3, 4, true);
  } else {
    int sent = g.new_slot(g.origin, -2);
    g.marker_slot = sent;
    g.marker_virtual = true;
  }
  for (const auto& s : t.q1) add_subtree(g, g.origin, s, 0);
  add_arm(g, t.north, 1, 0, 5, false);
  for (const auto& s : t.q2) add_subtree(g, g.origin, s, 1);
  add_arm(g, t.west, 2, 1, 6, false);
  for (const auto& s : t.q3) add_subtree(g, g.origin, s, 2);
  add_arm(g, t.south, 3, 2, 7, false);
  for (const auto& s : t.q4) add_subtree(g, g.origin, s, 3);
  return g;
}

}  // namespace

int RotationSystem::pos_of(int slot) const {
  const auto& r = vertices[slots[slot].vertex].rot;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == slot) return static_cast<int>(i);
  throw std::logic_error("slot not in rotation");
}

RotationSystem rotation_system(const EmbeddedTree& t) {
  validate_tree(t);
  Graph g = build_graph(t);
  RotationSystem rs;
  rs.origin = g.origin;
  for (const auto& v : g.vtx) rs.vertices.push_back({v.kind, v.rot});
  for (const auto& s : g.slots) rs.slots.push_back({s.vertex, s.twin, s.region, -1});

  auto next_after = [&](int slot) {
    int v = g.slots[slot].vertex;
    const auto& rot = g.vtx[v].rot;
    int p = g.pos_of(slot);
    return rot[(p + 1) % rot.size()];
  };

  // Contour walk starting just after the marker slot; faces advance at every
  // real end. With a virtual marker the trailing face wraps into F0.
  int face = 0;
  int cur = next_after(g.marker_slot);
  std::size_t guard = 0, limit = 4 * g.slots.size() + 8;
  while (cur != g.marker_slot) {
    if (++guard > limit) throw InvalidTree("face walk did not close");
    rs.slots[cur].face = face;
    if (g.slots[cur].twin < 0) {
      rs.ends_ccw.push_back(cur);
      ++face;
      cur = next_after(cur);
    } else {
      cur = next_after(g.slots[cur].twin);
    }
  }
  if (g.marker_virtual) {
    rs.num_faces = face;  // trailing face merges into F0
    for (auto& s : rs.slots)
      if (s.face == face) s.face = 0;
    rs.slots[g.marker_slot].face = 0;
  } else {
    rs.slots[g.marker_slot].face = face;
    rs.ends_ccw.push_back(g.marker_slot);
    rs.num_faces = face + 1;
  }
  // every edge slot must have been traversed exactly once
  for (std::size_t s = 0; s < rs.slots.size(); ++s)
    if (rs.slots[s].face < 0 && rs.slots[s].region != -2)
      throw InvalidTree("face walk missed a slot: encoding is not a tree");
  if (rs.num_faces != static_cast<int>(rs.ends_ccw.size()))
    throw InvalidTree("face/end count mismatch");
  return rs;
}

FaceStructure face_structure(const EmbeddedTree& t) {
  RotationSystem rs = rotation_system(t);
  FaceStructure fs;
  fs.origin_vertex = rs.origin;
  fs.east_ray = t.east.ray;
  fs.num_ends = rs.num_faces;
  for (const auto& v : rs.vertices) fs.vertex_kinds.push_back(v.kind);
  fs.vertex_faces.resize(rs.vertices.size());

  // corner between rotation positions i and i+1 carries the face of the
  // slot at position i+1 (the walk continues into it)
  for (std::size_t v = 0; v < rs.vertices.size(); ++v) {
    const auto& rot = rs.vertices[v].rot;
    std::set<int> fset;
    for (int s : rot)
      if (rs.slots[s].face >= 0) fset.insert(rs.slots[s].face);
    // ends also touch the following face
    for (int s : rot)
      if (rs.slots[s].twin < 0 && rs.slots[s].region != -2)
        fset.insert((rs.slots[s].face + 1) % rs.num_faces);
    fs.vertex_faces[v].assign(fset.begin(), fset.end());
  }
  fs.face_vertices.resize(rs.num_faces);
  for (std::size_t v = 0; v < fs.vertex_faces.size(); ++v)
    for (int f : fs.vertex_faces[v]) fs.face_vertices[f].push_back(static_cast<int>(v));

  std::set<int> seen;
  for (std::size_t s = 0; s < rs.slots.size(); ++s) {
    int tw = rs.slots[s].twin;
    if (tw < 0 || seen.count(static_cast<int>(s)) || seen.count(tw)) continue;
    seen.insert(static_cast<int>(s));
    fs.edge_faces.push_back({rs.slots[s].face, rs.slots[tw].face});
    fs.edge_kinds.push_back(
        {rs.vertices[rs.slots[s].vertex].kind, rs.vertices[rs.slots[tw].vertex].kind});
  }
  for (int s : rs.ends_ccw) {
    fs.edge_faces.push_back(
        {rs.slots[s].face, (rs.slots[s].face + 1) % rs.num_faces});
    fs.edge_kinds.push_back({rs.vertices[rs.slots[s].vertex].kind, VKind::Plain});
    fs.end_quadrant.push_back(rs.slots[s].region);
  }
  return fs;
}

std::vector<std::string> standard_labels(int d) {
  if (d == 4) return {"0", "a", "Ia", "0", "-a", "Ra"};
  if (d == 6) return {"0", "a", "0", "Ia", "0", "-a", "0", "Ra"};
  throw std::invalid_argument("standard_labels: only d = 4 and d = 6 are built in");
}

Proposition1Report check_proposition1(const EmbeddedTree& t, int d) {
  Proposition1Report rep;
  std::vector<std::string> labels =
      t.face_labels.empty() ? standard_labels(d) : t.face_labels;
  EmbeddedTree tt = t;
  tt.face_labels.clear();

  FaceStructure fs;
  try {
    fs = face_structure(tt);
    rep.tree_ok = true;
  } catch (const InvalidTree& e) {
    rep.violations.push_back(std::string("a: ") + e.what());
    return rep;
  }
  if (static_cast<int>(labels.size()) != fs.num_ends) {
    rep.violations.push_back("label count does not match face count");
    return rep;
  }

  rep.labels_distinct = true;
  for (std::size_t e = 0; e < fs.edge_faces.size(); ++e) {
    auto [f1, f2] = fs.edge_faces[e];
    if (labels[f1] == labels[f2]) {
      rep.labels_distinct = false;
      rep.violations.push_back("b: edge between two faces labeled " + labels[f1]);
      break;
    }
  }

  rep.o_off_zero_faces = true;
  for (int f = 0; f < fs.num_ends; ++f) {
    if (labels[f] != "0") continue;
    for (int v : fs.face_vertices[f])
      if (fs.vertex_kinds[v] == VKind::O) {
        rep.o_off_zero_faces = false;
        rep.violations.push_back("c: o-vertex on the boundary of a 0-face");
      }
  }

  rep.x_supported = true;
  {
    // adjacency to an o-vertex, via the edge list
    std::set<int> zero_face_vertices;
    for (int f = 0; f < fs.num_ends; ++f)
      if (labels[f] == "0")
        for (int v : fs.face_vertices[f]) zero_face_vertices.insert(v);
    // collect per-vertex o-adjacency by re-walking edges
    // edge_kinds holds endpoint kinds only; treat an edge with an O endpoint
    // as supporting its X endpoint.
    std::vector<bool> adj_o(fs.vertex_kinds.size(), false);
    // re-derive adjacency from the graph: rebuild (cheap)
    Graph g = build_graph(tt);
    for (std::size_t s = 0; s < g.slots.size(); ++s) {
      int tw = g.slots[s].twin;
      if (tw < 0) continue;
      if (g.vtx[g.slots[tw].vertex].kind == VKind::O)
        adj_o[g.slots[s].vertex] = true;
    }
    for (std::size_t v = 0; v < fs.vertex_kinds.size(); ++v) {
      if (fs.vertex_kinds[v] != VKind::X) continue;
      if (!adj_o[v] && !zero_face_vertices.count(static_cast<int>(v))) {
        rep.x_supported = false;
        rep.violations.push_back("d: x-vertex with no o-neighbor and no 0-face");
      }
    }
  }

  rep.ends_faces_count = fs.num_ends == d + 2;
  if (!rep.ends_faces_count)
    rep.violations.push_back("e: expected " + std::to_string(d + 2) + " ends, found " +
                             std::to_string(fs.num_ends));

  bool labels_zero = fs.num_ends == d + 2 && labels[0] == "0" &&
                     labels[(d / 2 + 1) % fs.num_ends] == "0";
  bool i_sym = i_image(tt) == tt;
  rep.zero_faces_swapped = labels_zero && i_sym && !t.east.ray && !t.west.ray;
  if (!rep.zero_faces_swapped)
    rep.violations.push_back("f: zero faces F0 and F_{d/2+1} not fixed/swapped correctly");

  if (d == 6) {
    rep.alternating_zero = true;
    for (int f = 0; f < fs.num_ends; ++f) {
      bool want_zero = f % 2 == 0;
      if ((labels[f] == "0") != want_zero) {
        rep.alternating_zero = false;
        rep.violations.push_back("alternating: face " + std::to_string(f) +
                                 " breaks the even-face-0 rule");
        break;
      }
    }
  }

  rep.pass = rep.tree_ok && rep.labels_distinct && rep.o_off_zero_faces && rep.x_supported &&
             rep.ends_faces_count && rep.zero_faces_swapped && rep.alternating_zero;
  return rep;
}

EmbeddedTree model_tree_quartic(int n) {
  if (n < 0) throw std::invalid_argument("model_tree_quartic: n must be >= 0");
  EmbeddedTree t;
  AxisArm vertical;
  if (n % 2 == 0) {
    t.origin = VKind::X;
    vertical.nodes.push_back({VKind::O, {}, {}});
    vertical.ray = true;
  } else {
    t.origin = VKind::O;
    vertical.nodes.push_back({VKind::X, {}, {}});
    vertical.nodes.push_back({VKind::O, {}, {}});
    vertical.ray = true;
  }
  t.north = vertical;
  t.south = vertical;
  if (n == 0) {
    t.q1 = {End()};
    t.q2 = {End()};
    t.q3 = {End()};
    t.q4 = {End()};
    return t;
  }
  AxisArm horizontal;
  // alternating chain ending in the pole that carries the two ends
  bool start_with_o = n % 2 == 0;
  for (int i = 0; i < n; ++i) {
    bool is_o = start_with_o ? i % 2 == 0 : i % 2 == 1;
    horizontal.nodes.push_back({is_o ? VKind::O : VKind::X, {}, {}});
  }
  horizontal.nodes.back().side_a = {End()};
  horizontal.nodes.back().side_b = {End()};
  if (horizontal.nodes.back().kind != VKind::X)
    throw std::logic_error("model_tree_quartic: chain must end at a pole");
  t.east = horizontal;
  t.west = horizontal;
  return t;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

// All subtrees / ordered forests with a given number of ends and no plain
// degree-2 vertices (internal vertices have >= 2 children).
class Catalog {
 public:
  const std::vector<Subtree>& subtrees(int ends) {
    auto it = sub_.find(ends);
    if (it != sub_.end()) return it->second;
    std::vector<Subtree> out;
    if (ends == 1) out.push_back(End());
    if (ends >= 2)
      for (const auto& lst : lists(ends, 2)) out.push_back(Node(lst));
    return sub_.emplace(ends, std::move(out)).first->second;
  }

  const std::vector<std::vector<Subtree>>& forests(int ends) {
    auto it = forest_.find(ends);
    if (it != forest_.end()) return it->second;
    std::vector<std::vector<Subtree>> out;
    if (ends == 0)
      out.push_back({});
    else
      out = lists(ends, 1);
    return forest_.emplace(ends, std::move(out)).first->second;
  }

 private:
  // Ordered lists with at least min_parts subtrees; the first-part bound
  // keeps lists(n, 2) from ever requesting subtrees(n) (no cycles).
  std::vector<std::vector<Subtree>> lists(int ends, int min_parts) {
    std::vector<std::vector<Subtree>> out;
    if (ends == 0) {
      if (min_parts <= 0) out.push_back({});
      return out;
    }
    int max_first = ends - std::max(0, min_parts - 1);
    for (int first = 1; first <= max_first; ++first)
      for (const auto& head : subtrees(first))
        for (const auto& tail : lists(ends - first, std::max(0, min_parts - 1))) {
          std::vector<Subtree> lst{head};
          lst.insert(lst.end(), tail.begin(), tail.end());
          out.push_back(std::move(lst));
        }
    return out;
  }

  std::map<int, std::vector<Subtree>> sub_;
  std::map<int, std::vector<std::vector<Subtree>>> forest_;
};

Catalog& catalog() {
  static Catalog c;
  return c;
}

// Mirror-symmetric subtrees (for rooted enumeration middles).
std::vector<Subtree> symmetric_subtrees(int ends);

// Palindromic child lists with the given total ends; min_half >= 1 keeps
// the list length at least 2 (and the recursion well founded).
std::vector<std::vector<Subtree>> symmetric_lists(int ends, bool allow_middle_end,
                                                  int min_half = 0) {
  std::vector<std::vector<Subtree>> out;
  for (int h = min_half; 2 * h <= ends; ++h) {
    int mid = ends - 2 * h;
    for (const auto& half : catalog().forests(h)) {
      if (h > 0 && half.empty()) continue;
      auto assemble = [&](const std::vector<Subtree>& middle_part) {
        std::vector<Subtree> lst = half;
        lst.insert(lst.end(), middle_part.begin(), middle_part.end());
        auto mh = mirror_list(half);
        lst.insert(lst.end(), mh.begin(), mh.end());
        if (!lst.empty()) out.push_back(std::move(lst));
      };
      if (mid == 0) {
        assemble({});
      } else {
        for (const auto& m : symmetric_subtrees(mid)) {
          if (m.end && !allow_middle_end) continue;
          assemble({m});
        }
      }
    }
  }
  return out;
}

std::vector<Subtree> symmetric_subtrees(int ends) {
  std::vector<Subtree> out;
  if (ends == 1) out.push_back(End());
  // children lists need >= 2 entries, so at least one mirrored pair
  for (const auto& lst : symmetric_lists(ends, true, 1)) out.push_back(Node(lst));
  return out;
}

// Self-reflection-symmetric axis arms with the given end count; each node
// has side_b = mirror(side_a) with side_a nonempty.
std::vector<AxisArm> symmetric_arms(int ends, bool allow_ray) {
  std::vector<AxisArm> out;
  bool ray = ends % 2 == 1;
  if (ray && !allow_ray) return out;
  int per_side = (ends - (ray ? 1 : 0)) / 2;
  // compositions of per_side into node side_a end counts >= 1
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      comps.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      rec(rest - part);
      cur.pop_back();
    }
  };
  rec(per_side);
  for (const auto& comp : comps) {
    if (comp.empty() && !ray) continue;  // no content at all
    std::vector<AxisArm> partial{AxisArm{{}, ray}};
    for (int part : comp) {
      std::vector<AxisArm> next;
      for (const auto& arm : partial)
        for (const auto& side : catalog().forests(part)) {
          if (side.empty()) continue;
          AxisArm a = arm;
          a.nodes.push_back({VKind::Plain, side, mirror_list(side)});
          next.push_back(std::move(a));
        }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

std::vector<EmbeddedTree> b_case_trees(int ends, bool ends_on_axes) {
  std::vector<EmbeddedTree> out;
  for (int eq = 0; 4 * eq <= ends; ++eq) {
    int rest = ends - 4 * eq;
    if (rest % 2 != 0) continue;
    int arm_e = rest / 2;
    std::vector<AxisArm> arms;
    if (arm_e == 0) {
      arms.push_back(AxisArm{});
    } else {
      arms = symmetric_arms(arm_e, ends_on_axes);
    }
    for (const auto& q1 : catalog().forests(eq))
      for (const auto& arm : arms) {
        if (eq == 0 && arm.empty()) continue;
        EmbeddedTree t;
        t.q1 = q1;
        t.q2 = mirror_list(q1);
        t.q3 = q1;
        t.q4 = mirror_list(q1);
        t.north = arm;
        t.south = arm_reflect(arm);
        out.push_back(std::move(t));
      }
  }
  return out;
}

std::vector<EmbeddedTree> a_case_trees(int ends, bool ends_on_axes) {
  std::vector<EmbeddedTree> out;
  for (int eh = 1; eh * 2 <= ends; ++eh)
    for (int ev = 1; 2 * eh + 2 * ev <= ends; ++ev) {
      int rest = ends - 2 * eh - 2 * ev;
      if (rest % 4 != 0) continue;
      int eq = rest / 4;
      for (const auto& east : symmetric_arms(eh, ends_on_axes))
        for (const auto& north : symmetric_arms(ev, ends_on_axes))
          for (const auto& q1 : catalog().forests(eq)) {
            EmbeddedTree t;
            t.east = east;
            t.west = arm_reflect(east);
            t.north = north;
            t.south = arm_reflect(north);
            t.q1 = q1;
            t.q2 = mirror_list(q1);
            t.q3 = q1;
            t.q4 = mirror_list(q1);
            out.push_back(std::move(t));
          }
    }
  return out;
}

}  // namespace

std::vector<std::string> enumerate_rooted_symmetric(int ends) {
  if (ends < 1) throw std::invalid_argument("enumerate_rooted_symmetric: ends must be >= 1");
  std::set<std::string> forms;
  for (const auto& lst : symmetric_lists(ends, true)) {
    std::string s = "R(";
    for (const auto& t : lst) s += ser_subtree(t);
    s += ")";
    forms.insert(s);
  }
  return {forms.begin(), forms.end()};
}

std::vector<EmbeddedTree> enumerate_double_symmetric_trees(int ends, bool ends_on_axes) {
  if (ends < 2 || ends % 2 != 0)
    throw std::invalid_argument("enumerate_double_symmetric: ends must be even and >= 2");
  std::vector<EmbeddedTree> all = b_case_trees(ends, ends_on_axes);
  {
    auto b = all;
    for (const auto& t : b) all.push_back(quarter_turn(t));
  }
  {
    auto a = a_case_trees(ends, ends_on_axes);
    all.insert(all.end(), a.begin(), a.end());
  }
  std::map<std::string, EmbeddedTree> dedup;
  for (auto& t : all) {
    if (!is_double_symmetric(t))
      throw std::logic_error("enumerate_double_symmetric: generator produced an asymmetric tree");
    dedup.emplace(canonical_form(t), std::move(t));
  }
  std::vector<EmbeddedTree> out;
  for (auto& [form, t] : dedup) out.push_back(std::move(t));
  return out;
}

std::vector<std::string> enumerate_double_symmetric(int ends, bool ends_on_axes) {
  std::vector<std::string> out;
  for (const auto& t : enumerate_double_symmetric_trees(ends, ends_on_axes))
    out.push_back(canonical_form(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subtree> all_rooted_trees(int ends, int max_root_children) {
  std::vector<Subtree> out;
  for (const auto& lst : catalog().forests(ends)) {
    if (lst.empty() || static_cast<int>(lst.size()) > max_root_children) continue;
    out.push_back(Subtree{false, VKind::Plain, lst});
  }
  return out;
}

std::vector<std::string> brute_force_double_symmetric(int ends, bool ends_on_axes) {
  // Independent generate-and-filter path: loop over all component splits
  // compatible with the symmetry on counts, generate every combination,
  // keep the structurally invariant ones.
  std::set<std::string> forms;
  auto arm_candidates = [&](int e) {
    std::vector<AxisArm> arms;
    if (e == 0) {
      arms.push_back(AxisArm{});
      return arms;
    }
    // free (not symmetry-constrained) arms: nodes with any side split,
    // optionally terminated by an axis ray
    std::function<void(AxisArm, int, bool)> rec = [&](AxisArm cur, int rest, bool ray) {
      if (rest == 0) {
        if (ray) {
          cur.ray = true;
          arms.push_back(std::move(cur));
        } else if (!cur.nodes.empty()) {
          arms.push_back(std::move(cur));
        }
        return;
      }
      for (int take = 1; take <= rest; ++take)
        for (int sa = 0; sa <= take; ++sa) {
          int sb = take - sa;
          for (const auto& fa : catalog().forests(sa))
            for (const auto& fb : catalog().forests(sb)) {
              if (fa.empty() && fb.empty()) continue;
              AxisArm a = cur;
              a.nodes.push_back({VKind::Plain, fa, fb});
              rec(a, rest - take, ray);
            }
        }
    };
    rec(AxisArm{}, e, false);
    if (ends_on_axes) rec(AxisArm{}, e - 1, true);
    return arms;
  };

  for (int eq = 0; 4 * eq <= ends; ++eq)
    for (int eh = 0; 4 * eq + 2 * eh <= ends; ++eh) {
      int rest = ends - 4 * eq - 2 * eh;
      if (rest % 2 != 0) continue;
      int ev = rest / 2;
      for (const auto& east : arm_candidates(eh))
        for (const auto& west : arm_candidates(eh))
          for (const auto& north : arm_candidates(ev))
            for (const auto& south : arm_candidates(ev))
              for (const auto& q1 : catalog().forests(eq))
                for (const auto& q2 : catalog().forests(eq))
                  for (const auto& q3 : catalog().forests(eq))
                    for (const auto& q4 : catalog().forests(eq)) {
                      EmbeddedTree t;
                      t.east = east;
                      t.west = west;
                      t.north = north;
                      t.south = south;
                      t.q1 = q1;
                      t.q2 = q2;
                      t.q3 = q3;
                      t.q4 = q4;
                      if (end_signature(t).total != ends) continue;
                      if (!is_double_symmetric(t)) continue;
                      forms.insert(canonical_form(t));
                    }
    }
  return {forms.begin(), forms.end()};
}

namespace {

struct RaySignature {
  int quadrant = 0;        // rays per quadrant
  bool vertical = false;   // rays on +-i
};

RaySignature required_signature(int d) {
  RaySignature sig;
  StokesGeometry g = stokes(d);
  for (const auto& ray : g.ray_angles) {
    if (ray.on_real_axis())
      throw std::logic_error("Stokes ray on the real axis is impossible for odd numerators");
    if (ray.on_imaginary_axis()) {
      sig.vertical = true;
      continue;
    }
    // count only the first quadrant; symmetry gives the rest
    if (2 * ray.num < ray.den) ++sig.quadrant;  // angle in (0, pi/2)
  }
  return sig;
}

bool matches_signature(const EmbeddedTree& t, const RaySignature& want) {
  EndSignature s = end_signature(t);
  if (s.axis_ray[0] || s.axis_ray[2]) return false;  // never on the real axis
  if (s.axis_ray[1] != want.vertical || s.axis_ray[3] != want.vertical) return false;
  for (int q = 0; q < 4; ++q)
    if (s.q[q] != want.quadrant) return false;
  return true;
}

bool passes_label_filter(const EmbeddedTree& t, int d) {
  FaceStructure fs = face_structure(t);
  auto labels = standard_labels(d);
  if (static_cast<int>(labels.size()) != fs.num_ends) return false;
  for (auto [f1, f2] : fs.edge_faces)
    if (labels[f1] == labels[f2]) return false;
  return true;
}

std::vector<EmbeddedTree> filtered_types(int d) {
  RaySignature want = required_signature(d);
  std::vector<EmbeddedTree> out;
  std::set<std::string> seen;
  for (const auto& t : enumerate_double_symmetric_trees(d + 2, want.vertical)) {
    if (!matches_signature(t, want)) continue;
    if (!passes_label_filter(t, d)) continue;
    std::string topo = topological_form(t);
    if (seen.insert(topo).second) out.push_back(t);
  }
  return out;
}

}  // namespace

int count_topological_types(int d) {
  if (d != 4 && d != 6) throw std::invalid_argument("count_topological_types: d must be 4 or 6");
  return static_cast<int>(filtered_types(d).size());
}

int count_decorated_types(int d) {
  if (d != 4 && d != 6) throw std::invalid_argument("count_decorated_types: d must be 4 or 6");
  auto labels = standard_labels(d);
  int total = 0;
  for (const auto& t : filtered_types(d)) {
    EmbeddedTree c = contract_tree(strip_kinds(t));
    FaceStructure fs = face_structure(c);
    int origin_degree = (c.east.empty() ? 0 : 1) + (c.north.empty() ? 0 : 1) +
                        (c.west.empty() ? 0 : 1) + (c.south.empty() ? 0 : 1) +
                        static_cast<int>(c.q1.size() + c.q2.size() + c.q3.size() + c.q4.size());
    if (origin_degree < 3) {
      total += 1;  // origin sits inside a pumped chain; one family
      continue;
    }
    bool on_zero_face = false;
    for (int f : fs.vertex_faces[fs.origin_vertex])
      if (labels[f] == "0") on_zero_face = true;
    total += on_zero_face ? 1 : 2;  // x forced on a 0-face, otherwise o or x
  }
  return total;
}

}  // namespace anharm::trees
