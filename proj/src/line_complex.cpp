#include "anharm/line_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "anharm/errors.hpp"

namespace anharm::lc {

namespace {

int pos_of(const LineComplex& L, int slot) {
  const auto& rot = L.vertices[L.slots[slot].vertex].rot;
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == slot) return static_cast<int>(i);
  throw std::logic_error("line complex: slot missing from rotation");
}

int next_in_face(const LineComplex& L, int slot) {
  int tw = L.slots[slot].twin;
  if (tw < 0) return -1;
  int v = L.slots[tw].vertex;
  const auto& rot = L.vertices[v].rot;
  int p = pos_of(L, tw);
  return rot[(p + 1) % rot.size()];
}

bool has_stub(const LineComplex& L, int v) {
  for (int s : L.vertices[v].rot)
    if (L.slots[s].twin < 0) return true;
  return false;
}

// Faces around vertex v in rotation order: corner i (between rot[i] and
// rot[i+1]) belongs to the face whose walk traverses rot[i+1]... for the
// line complex we instead record, per corner, the derived face id of the
// slot leaving the corner. Corner i is separated from corner i-1 by slot
// rot[i].
std::vector<int> corner_faces(const LineComplex& L, const std::vector<int>& face_of_slot,
                              int v) {
  const auto& rot = L.vertices[v].rot;
  std::vector<int> out(rot.size());
  for (std::size_t i = 0; i < rot.size(); ++i) out[i] = face_of_slot[rot[i]];
  return out;
}

}  // namespace

std::vector<Face> derive_faces(const LineComplex& L) {
  std::vector<Face> faces;
  std::vector<char> used(L.slots.size(), 0);

  auto trace = [&](int start, bool unbounded) {
    Face f;
    f.unbounded = unbounded;
    int cur = start;
    while (cur >= 0 && !used[cur]) {
      used[cur] = 1;
      f.out_slots.push_back(cur);
      if (L.slots[cur].twin < 0) break;  // exits along a stub
      cur = next_in_face(L, cur);
      if (cur == start) break;
    }
    faces.push_back(std::move(f));
  };

  // unbounded faces: start just after each stub
  for (std::size_t s = 0; s < L.slots.size(); ++s) {
    if (L.slots[s].twin >= 0) continue;
    int v = L.slots[s].vertex;
    const auto& rot = L.vertices[v].rot;
    int p = pos_of(L, static_cast<int>(s));
    int start = rot[(p + 1) % rot.size()];
    if (!used[start]) trace(start, true);
  }
  // bounded faces: remaining cycles
  for (std::size_t s = 0; s < L.slots.size(); ++s)
    if (!used[s]) trace(static_cast<int>(s), false);
  return faces;
}

std::optional<std::vector<int>> propagate_labels(const LineComplex& L, int seed_face,
                                                 int seed_label) {
  std::vector<Face> faces = derive_faces(L);
  std::vector<int> face_of_slot(L.slots.size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int s : faces[f].out_slots) face_of_slot[s] = static_cast<int>(f);

  std::vector<int> label(faces.size(), -1);
  if (seed_face < 0 || seed_face >= static_cast<int>(faces.size())) return std::nullopt;
  label[seed_face] = seed_label;
  // Around every vertex, crossing a realized (non-stub) slot advances the
  // label by +1 CCW at an o-vertex and -1 at an x-vertex.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < L.vertices.size(); ++v) {
      const auto& rot = L.vertices[v].rot;
      const int n = static_cast<int>(rot.size());
      std::vector<int> corners = corner_faces(L, face_of_slot, static_cast<int>(v));
      int step = L.vertices[v].kind == VKind::O ? 1 : L.q - 1;
      for (int i = 0; i < n; ++i) {
        // corners i and i+1 are separated by slot rot[i]
        int sep = rot[i];
        if (L.slots[sep].twin < 0) continue;  // cut tail hides part of the run
        int fa = corners[i];
        int fb = corners[(i + 1) % n];
        if (label[fa] >= 0 && label[fb] < 0) {
          label[fb] = (label[fa] + step) % L.q;
          changed = true;
        } else if (label[fb] >= 0 && label[fa] < 0) {
          label[fa] = (label[fb] - step % L.q + L.q) % L.q;
          changed = true;
        } else if (label[fa] >= 0 && label[fb] >= 0) {
          if (label[fb] != (label[fa] + step) % L.q) return std::nullopt;
        }
      }
    }
  }
  for (int l : label)
    if (l < 0) return std::nullopt;  // disconnected labeling
  return label;
}

LineComplexReport validate_line_complex(const LineComplex& L) {
  LineComplexReport rep;
  auto fail = [&](const std::string& msg) { rep.violations.push_back(msg); };

  // structure
  rep.structure_ok = L.q >= 2 && static_cast<int>(L.base_labels.size()) == L.q &&
                     !L.vertices.empty();
  std::vector<int> seen(L.slots.size(), 0);
  for (std::size_t v = 0; v < L.vertices.size() && rep.structure_ok; ++v)
    for (int s : L.vertices[v].rot) {
      if (s < 0 || s >= static_cast<int>(L.slots.size()) ||
          L.slots[s].vertex != static_cast<int>(v) || seen[s]++) {
        rep.structure_ok = false;
        fail("structure: bad slot bookkeeping");
        break;
      }
    }
  for (std::size_t s = 0; s < L.slots.size() && rep.structure_ok; ++s) {
    int tw = L.slots[s].twin;
    if (!seen[s]) {
      rep.structure_ok = false;
      fail("structure: orphan slot");
    } else if (tw >= 0 &&
               (tw >= static_cast<int>(L.slots.size()) ||
                L.slots[tw].twin != static_cast<int>(s))) {
      rep.structure_ok = false;
      fail("structure: twins not reciprocal");
    }
  }
  if (!rep.structure_ok) return rep;

  // bipartite, no loops
  rep.bipartite_ok = true;
  for (std::size_t s = 0; s < L.slots.size(); ++s) {
    int tw = L.slots[s].twin;
    if (tw < 0) continue;
    int u = L.slots[s].vertex, v = L.slots[tw].vertex;
    if (u == v) {
      rep.bipartite_ok = false;
      fail("bipartite: loop edge");
    } else if (L.vertices[u].kind == L.vertices[v].kind) {
      rep.bipartite_ok = false;
      fail("bipartite: edge joins two vertices of the same kind");
    }
  }

  // degree q at every full (stub-free) vertex
  rep.degree_ok = true;
  for (std::size_t v = 0; v < L.vertices.size(); ++v) {
    if (has_stub(L, static_cast<int>(v))) continue;
    if (static_cast<int>(L.vertices[v].rot.size()) != L.q) {
      rep.degree_ok = false;
      fail("degree: interior vertex of degree != q");
    }
  }

  // faces
  std::vector<Face> faces = derive_faces(L);
  std::vector<int> face_of_slot(L.slots.size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int s : faces[f].out_slots) face_of_slot[s] = static_cast<int>(f);
  rep.faces_ok = true;
  for (int f : face_of_slot)
    if (f < 0) {
      rep.faces_ok = false;
      fail("faces: slot not covered by any face walk");
    }
  for (const auto& f : faces)
    if (!f.unbounded && f.out_slots.size() != 2) {
      rep.faces_ok = false;
      fail("faces: bounded face is not a 2-gon");
    }
  if (L.face_labels.size() != faces.size()) {
    rep.faces_ok = false;
    fail("faces: label list size mismatch");
  }
  if (!rep.faces_ok) return rep;
  for (int l : L.face_labels)
    if (l < 0 || l >= L.q) {
      rep.faces_ok = false;
      fail("faces: label index out of range");
      return rep;
    }

  // distinct labels around full vertices; cyclic order everywhere else
  rep.labels_ok = true;
  rep.cyclic_order_ok = true;
  for (std::size_t v = 0; v < L.vertices.size(); ++v) {
    std::vector<int> corners = corner_faces(L, face_of_slot, static_cast<int>(v));
    const int n = static_cast<int>(corners.size());
    if (!has_stub(L, static_cast<int>(v))) {
      std::set<int> labels;
      for (int f : corners) labels.insert(L.face_labels[f]);
      if (static_cast<int>(labels.size()) != L.q) {
        rep.labels_ok = false;
        fail("labels: vertex does not bound q distinctly labeled faces");
      }
    }
    int step = L.vertices[v].kind == VKind::O ? 1 : L.q - 1;
    for (int i = 0; i < n; ++i) {
      if (L.slots[L.vertices[v].rot[i]].twin < 0) continue;
      int fa = corners[i];
      int fb = corners[(i + 1) % n];
      if (L.face_labels[fb] != (L.face_labels[fa] + step) % L.q) {
        rep.cyclic_order_ok = false;
        fail("cyclic: labels out of base order around a vertex");
      }
    }
  }

  // propagation uniqueness: the stored labeling must be the one forced by
  // any single seed
  auto prop = propagate_labels(L, 0, L.face_labels[0]);
  rep.propagation_ok = prop.has_value() && *prop == L.face_labels;
  if (!rep.propagation_ok) fail("propagation: labels not reproducible from one seed");

  rep.pass = rep.structure_ok && rep.bipartite_ok && rep.degree_ok && rep.faces_ok &&
             rep.labels_ok && rep.cyclic_order_ok && rep.propagation_ok;
  return rep;
}

LineComplex exp_chain(int interior_vertices) {
  if (interior_vertices < 0) throw std::invalid_argument("exp_chain: negative length");
  const int n = interior_vertices + 2;
  LineComplex L;
  L.q = 2;
  L.base_labels = {"0", "inf"};
  L.vertices.resize(n);
  for (int i = 0; i < n; ++i) L.vertices[i].kind = i % 2 ? VKind::X : VKind::O;
  auto add_slot = [&](int v) {
    L.slots.push_back({v, -1});
    int id = static_cast<int>(L.slots.size()) - 1;
    L.vertices[v].rot.push_back(id);
    return id;
  };
  // stub at the left end, chain edges, stub at the right end
  add_slot(0);
  for (int i = 0; i + 1 < n; ++i) {
    int a = add_slot(i);
    int b = add_slot(i + 1);
    L.slots[a].twin = b;
    L.slots[b].twin = a;
  }
  add_slot(n - 1);
  auto faces = derive_faces(L);
  if (faces.size() != 2) throw std::logic_error("exp_chain: expected two faces");
  L.face_labels = {0, 1};
  if (!validate_line_complex(L).pass) L.face_labels = {1, 0};
  return L;
}

namespace {

int cyc_dist(int from, int to, int q) {
  int d = (to - from) % q;
  if (d < 0) d += q;
  return d;
}

}  // namespace

std::optional<LineComplex> from_tree(const trees::EmbeddedTree& tree,
                                     const std::vector<int>& sector_label_idx,
                                     const std::vector<std::string>& base_labels,
                                     int periods) {
  const int q = static_cast<int>(base_labels.size());
  if (periods < 1) throw std::invalid_argument("from_tree: periods must be >= 1");
  trees::RotationSystem rs = trees::rotation_system(tree);
  if (static_cast<int>(sector_label_idx.size()) != rs.num_faces) return std::nullopt;

  // label of the corner face after each slot position
  auto corner_label = [&](int v, int i) {
    const auto& rot = rs.vertices[v].rot;
    int s = rot[(i + 1) % rot.size()];
    return sector_label_idx[rs.slots[s].face];
  };

  // The tree is the fully contracted skeleton: a plain degree-2 vertex
  // (the anchored origin on a straight run) is not a vertex of the complex.
  // Splice such vertices out by retwinning their neighbor slots.
  const int nv = static_cast<int>(rs.vertices.size());
  std::vector<char> dead(nv, 0);
  for (int v = 0; v < nv; ++v) {
    if (rs.vertices[v].kind != VKind::Plain) continue;
    std::vector<int> real;
    for (int s : rs.vertices[v].rot)
      if (rs.slots[s].region != -2) real.push_back(s);
    if (real.size() != 2) continue;
    int t0 = rs.slots[real[0]].twin, t1 = rs.slots[real[1]].twin;
    if (t0 < 0 || t1 < 0) continue;  // an end keeps its attach vertex
    rs.slots[t0].twin = t1;
    rs.slots[t1].twin = t0;
    rs.slots[real[0]].twin = -9;  // detached
    rs.slots[real[1]].twin = -9;
    dead[v] = 1;
  }

  // Vertex kinds are forced by the winding of corner labels: winding 1
  // reads the base order CCW (an o-vertex), winding deg-1 reads it CW.
  std::vector<VKind> kind(nv, VKind::O);
  for (int v = 0; v < nv; ++v) {
    if (dead[v]) continue;
    const auto& rot = rs.vertices[v].rot;
    int deg = 0;
    long long wind = 0;
    std::vector<int> labels;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (rs.slots[rot[i]].region == -2) continue;  // virtual anchor
      labels.push_back(corner_label(v, static_cast<int>(i)));
      ++deg;
    }
    if (deg <= 2) return std::nullopt;  // unsplicable chain stump
    for (int i = 0; i < deg; ++i) {
      int d = cyc_dist(labels[(i - 1 + deg) % deg], labels[i], q);
      if (d == 0) return std::nullopt;  // equal labels across an edge
      wind += d;
    }
    if (wind % q != 0) return std::nullopt;
    long long w = wind / q;
    if (w == 1)
      kind[v] = VKind::O;
    else if (w == deg - 1)
      kind[v] = VKind::X;
    else
      return std::nullopt;
  }

  // materialize
  LineComplex L;
  L.q = q;
  L.base_labels = base_labels;
  L.vertices.resize(nv);
  for (int v = 0; v < nv; ++v) L.vertices[v].kind = dead[v] ? VKind::O : kind[v];

  struct Strand {
    bool stub = false;
    int slot_u = -1, slot_v = -1;
  };
  std::vector<Strand> strands;
  // rot_plan[v][order] -> list of (strand id, side): expanded in key order
  std::map<int, std::map<int, std::vector<std::pair<int, int>>>> rot_plan;

  auto add_strand = [&](int u, int u_order, int v, int v_order, bool stub) {
    strands.push_back({stub, -1, -1});
    int id = static_cast<int>(strands.size()) - 1;
    rot_plan[u][u_order].push_back({id, 0});
    if (!stub) rot_plan[v][v_order].push_back({id, 1});
    return id;
  };

  auto alloc_vertex = [&](VKind k) {
    L.vertices.push_back({});
    L.vertices.back().kind = k;
    return static_cast<int>(L.vertices.size()) - 1;
  };

  auto gap_at = [&](int u, int pu) {
    int n = static_cast<int>(rs.vertices[u].rot.size());
    int la = corner_label(u, (pu - 1 + n) % n);  // corner before the slot
    int lb = corner_label(u, pu);                // corner after the slot
    return kind[u] == VKind::O ? cyc_dist(la, lb, q) : cyc_dist(lb, la, q);
  };

  auto add_bundle = [&](int u, int u_order, int v, int v_order, int mult) {
    for (int i = 0; i < mult; ++i) add_strand(u, u_order, v, v_order, false);
    auto& bucket = rot_plan[v][v_order];
    std::reverse(bucket.end() - mult, bucket.end());
  };

  // Tree edges become strand bundles (CCW at u, reversed at v). A contracted
  // chain vertex hides between endpoints of equal kind; the bundle then
  // flips multiplicity q - mult across it.
  std::set<int> done;
  for (std::size_t s = 0; s < rs.slots.size(); ++s) {
    int tw = rs.slots[s].twin;
    if (tw < 0 || done.count(static_cast<int>(s)) || done.count(tw)) continue;
    done.insert(static_cast<int>(s));
    int u = rs.slots[s].vertex, v = rs.slots[tw].vertex;
    int pu = rs.pos_of(static_cast<int>(s));
    int pv = rs.pos_of(tw);
    int gu = gap_at(u, pu), gv = gap_at(v, pv);
    if (gu < 1 || gv < 1) return std::nullopt;
    if (kind[u] != kind[v]) {
      if (gu != gv) return std::nullopt;
      add_bundle(u, pu, v, pv, gu);
    } else {
      if (gu != q - gv) return std::nullopt;
      int w = alloc_vertex(kind[u] == VKind::O ? VKind::X : VKind::O);
      add_bundle(u, pu, w, 0, gu);
      add_bundle(w, 1, v, pv, q - gu);
    }
  }

  // tree ends -> periodic tails with a final stub
  for (int es : rs.ends_ccw) {
    int u = rs.slots[es].vertex;
    int pu = rs.pos_of(es);
    int mult = gap_at(u, pu);
    if (mult < 1) return std::nullopt;
    int prev = u;
    int prev_order = pu;
    VKind k = kind[u];
    int m = mult;
    for (int step = 0; step < 2 * periods; ++step) {
      k = k == VKind::O ? VKind::X : VKind::O;
      int w = alloc_vertex(k);
      for (int i = 0; i < m; ++i) add_strand(prev, prev_order, w, 0, false);
      auto& bucket = rot_plan[w][0];
      std::reverse(bucket.end() - m, bucket.end());
      prev = w;
      prev_order = 1;
      m = q - m;
    }
    add_strand(prev, prev_order, -1, -1, true);
  }

  // expand the planned rotations into slots
  for (auto& [v, orders] : rot_plan)
    for (auto& [order, items] : orders)
      for (auto [id, side] : items) {
        L.slots.push_back({v, -1});
        int slot = static_cast<int>(L.slots.size()) - 1;
        L.vertices[v].rot.push_back(slot);
        (side == 0 ? strands[id].slot_u : strands[id].slot_v) = slot;
      }
  for (const auto& st : strands) {
    if (st.stub) continue;
    if (st.slot_u < 0 || st.slot_v < 0) return std::nullopt;
    L.slots[st.slot_u].twin = st.slot_v;
    L.slots[st.slot_v].twin = st.slot_u;
  }

  // drop spliced tree vertices (they received no slots)
  {
    std::vector<int> remap(L.vertices.size(), -1);
    std::vector<LineComplex::Vertex> keep;
    for (std::size_t v = 0; v < L.vertices.size(); ++v) {
      if (static_cast<int>(v) < nv && dead[v]) continue;
      remap[v] = static_cast<int>(keep.size());
      keep.push_back(std::move(L.vertices[v]));
    }
    L.vertices = std::move(keep);
    for (auto& s : L.slots) s.vertex = remap[s.vertex];
  }

  // label the derived faces by propagation from a known unbounded face:
  // the face entered right after the first tail's stub.
  auto faces = derive_faces(L);
  L.face_labels.assign(faces.size(), 0);
  auto trial = propagate_labels(L, 0, 0);
  if (!trial) return std::nullopt;
  // Fix the global shift: face 0 is the walk that starts after some stub;
  // rather than chase which sector it is, try all q shifts and keep the one
  // whose unbounded-face labels match the sector pattern as a multiset.
  std::vector<int> want = sector_label_idx;
  std::sort(want.begin(), want.end());
  for (int shift = 0; shift < q; ++shift) {
    auto lab = propagate_labels(L, 0, shift);
    if (!lab) continue;
    std::vector<int> got;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (faces[f].unbounded) got.push_back((*lab)[f]);
    std::sort(got.begin(), got.end());
    if (got == want) {
      L.face_labels = *lab;
      return L;
    }
  }
  return std::nullopt;
}

std::vector<LineComplex> theorem3_instances(int periods, std::size_t max_instances) {
  // d = 10: twelve sectors, values (0,a,0,b,0,a,0,Ra,0,Rb,0,Ra); base curve
  // order along the oriented imaginary axis gives (0,b,a,Ra,Rb).
  const std::vector<std::string> base = {"0", "b", "a", "Ra", "Rb"};
  const std::vector<int> sectors = {0, 2, 0, 1, 0, 2, 0, 3, 0, 4, 0, 3};
  std::vector<LineComplex> out;
  for (const auto& t : trees::enumerate_double_symmetric_trees(12, false)) {
    trees::EndSignature sig = trees::end_signature(t);
    bool quadrants_ok = sig.q[0] == 3 && sig.q[1] == 3 && sig.q[2] == 3 && sig.q[3] == 3;
    if (!quadrants_ok) continue;
    auto L = from_tree(t, sectors, base, periods);
    if (!L) continue;
    if (!validate_line_complex(*L).pass) continue;
    out.push_back(std::move(*L));
    if (out.size() >= max_instances) break;
  }
  return out;
}

std::string to_json(const LineComplex& L) {
  std::string s = "{\"q\":" + std::to_string(L.q) + ",\"base_labels\":[";
  for (std::size_t i = 0; i < L.base_labels.size(); ++i)
    s += (i ? ",\"" : "\"") + L.base_labels[i] + "\"";
  s += "],\"vertices\":[";
  for (std::size_t v = 0; v < L.vertices.size(); ++v) {
    if (v) s += ",";
    s += std::string("{\"kind\":\"") + (L.vertices[v].kind == VKind::O ? "o" : "x") +
         "\",\"rot\":[";
    for (std::size_t i = 0; i < L.vertices[v].rot.size(); ++i)
      s += (i ? "," : "") + std::to_string(L.vertices[v].rot[i]);
    s += "]}";
  }
  s += "],\"twins\":[";
  for (std::size_t i = 0; i < L.slots.size(); ++i)
    s += (i ? "," : "") + std::to_string(L.slots[i].twin);
  s += "],\"face_labels\":[";
  for (std::size_t i = 0; i < L.face_labels.size(); ++i)
    s += (i ? "," : "") + std::to_string(L.face_labels[i]);
  s += "]}";
  return s;
}

namespace {

std::vector<long long> parse_int_array(const std::string& text, std::size_t& pos) {
  std::vector<long long> out;
  pos = text.find('[', pos);
  std::size_t end = text.find(']', pos);
  std::string body = text.substr(pos + 1, end - pos - 1);
  pos = end + 1;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ',' || body[i] == ' ')) ++i;
    if (i >= body.size()) break;
    std::size_t used = 0;
    out.push_back(std::stoll(body.substr(i), &used));
    i += used;
  }
  return out;
}

}  // namespace

LineComplex from_json(const std::string& text) {
  LineComplex L;
  auto qpos = text.find("\"q\"");
  if (qpos == std::string::npos) throw std::invalid_argument("line complex JSON: missing q");
  L.q = std::stoi(text.substr(text.find(':', qpos) + 1));
  // base labels
  auto bl = text.find("\"base_labels\"");
  auto lb = text.find('[', bl);
  auto rb = text.find(']', lb);
  std::string body = text.substr(lb + 1, rb - lb - 1);
  std::size_t i = 0;
  while ((i = body.find('"', i)) != std::string::npos) {
    auto j = body.find('"', i + 1);
    L.base_labels.push_back(body.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  // vertices
  std::size_t vpos = text.find("\"vertices\"");
  std::size_t tpos = text.find("\"twins\"");
  std::size_t cur = vpos;
  while (true) {
    std::size_t kpos = text.find("\"kind\"", cur);
    if (kpos == std::string::npos || kpos > tpos) break;
    LineComplex::Vertex v;
    std::size_t quote = text.find(':', kpos);
    quote = text.find('"', quote);
    v.kind = text[quote + 1] == 'o' ? VKind::O : VKind::X;
    std::size_t rpos = text.find("\"rot\"", kpos);
    for (long long s : parse_int_array(text, rpos)) v.rot.push_back(static_cast<int>(s));
    L.vertices.push_back(std::move(v));
    cur = rpos;
  }
  std::size_t pos = tpos;
  std::vector<long long> twins = parse_int_array(text, pos);
  L.slots.resize(twins.size());
  for (std::size_t s = 0; s < twins.size(); ++s) L.slots[s].twin = static_cast<int>(twins[s]);
  for (std::size_t v = 0; v < L.vertices.size(); ++v)
    for (int s : L.vertices[v].rot) L.slots[s].vertex = static_cast<int>(v);
  std::size_t fpos = text.find("\"face_labels\"");
  std::vector<long long> fl = parse_int_array(text, fpos);
  for (long long l : fl) L.face_labels.push_back(static_cast<int>(l));
  return L;
}

}  // namespace anharm::lc
