#include <doctest.h>

#include <random>
#include <set>

#include "anharm/errors.hpp"
#include "anharm/trees.hpp"

using namespace anharm::trees;

namespace {

EmbeddedTree simple_star() {
  EmbeddedTree t;
  t.origin = VKind::O;
  t.q1 = {End()};
  t.q2 = {End()};
  t.q3 = {End()};
  t.q4 = {End()};
  return t;
}

}  // namespace

TEST_CASE("face walk orientation: ends appear CCW from the positive real axis") {
  EmbeddedTree t;
  t.q1 = {End()};
  t.q2 = {End(), End()};
  t.q3 = {End(), End(), End()};
  t.q4 = {End(), End(), End(), End()};
  FaceStructure fs = face_structure(t);
  REQUIRE(fs.num_ends == 10);
  std::vector<int> want = {0, 1, 1, 2, 2, 2, 3, 3, 3, 3};
  CHECK(fs.end_quadrant == want);
}

TEST_CASE("canonical form is stable under symmetric replanting") {
  EmbeddedTree t = simple_star();
  SUBCASE("half turn does not change the form") {
    CHECK(canonical_form(t) == canonical_form(half_turn(t)));
  }
  SUBCASE("plain degree-2 vertices are invisible") {
    EmbeddedTree padded = t;
    padded.q1 = {Node({End()})};  // plain chain vertex on the end edge
    CHECK(canonical_form(padded) == canonical_form(t));
    EmbeddedTree deep = t;
    deep.q1 = {Node({Node({End()})})};
    CHECK(canonical_form(deep) == canonical_form(t));
  }
  SUBCASE("kinded degree-2 vertices are kept") {
    EmbeddedTree marked = t;
    marked.q1 = {Node({End()}, VKind::X)};
    CHECK(canonical_form(marked) != canonical_form(t));
  }
}

TEST_CASE("mirror pairs differ, rotations by a half turn do not") {
  // an asymmetric tree: one quadrant carries a lopsided fork
  EmbeddedTree t = simple_star();
  t.q1 = {Node({End(), Node({End(), End()})})};
  t.q2.clear();
  EmbeddedTree mirror_t = i_image(t);
  CHECK(canonical_form(t) != canonical_form(mirror_t));
  CHECK(canonical_form(t) == canonical_form(half_turn(t)));
}

TEST_CASE("random replanting invariance") {
  std::mt19937 rng(42);
  auto trees = enumerate_double_symmetric_trees(8, false);
  REQUIRE(!trees.empty());
  for (int trial = 0; trial < 300; ++trial) {
    const EmbeddedTree& t = trees[rng() % trees.size()];
    std::string form = canonical_form(t);
    EmbeddedTree variant = rng() % 2 ? half_turn(t) : t;
    // splice plain degree-2 vertices into a random quadrant fan
    auto pad = [&](std::vector<Subtree>& fan) {
      for (auto& s : fan)
        if (rng() % 2) s = Node({s});
    };
    pad(variant.q1);
    pad(variant.q3);
    CHECK(canonical_form(variant) == form);
  }
}

TEST_CASE("rooted symmetric enumeration") {
  CHECK(enumerate_rooted_symmetric(4).size() == 6);
  CHECK(enumerate_rooted_symmetric(1).size() == 1);
  SUBCASE("count for two ends cross-checked against the generic generator") {
    auto all = all_rooted_trees(2, 2);
    int symmetric = 0;
    for (const auto& t : all)
      if (mirror(t) == t) ++symmetric;
    CHECK(enumerate_rooted_symmetric(2).size() == static_cast<std::size_t>(symmetric));
    CHECK(symmetric == 2);
  }
  SUBCASE("brute-force mirror filter agrees for 4 ends") {
    auto all = all_rooted_trees(4, 4);
    std::set<std::string> forms;
    for (const auto& t : all)
      if (mirror(t) == t) forms.insert("R(" + [](const Subtree& n) {
                                         std::string s;
                                         for (const auto& c : n.children)
                                           s += serialize_subtree(c);
                                         return s;
                                       }(t) + ")");
    CHECK(forms.size() == 6);
  }
}

TEST_CASE("double symmetric enumeration counts") {
  CHECK(enumerate_double_symmetric(8, false).size() == 11);
  SUBCASE("independent brute force agrees at 8 ends") {
    auto brute = brute_force_double_symmetric(8, false);
    auto assembled = enumerate_double_symmetric(8, false);
    CHECK(brute == assembled);
  }
  SUBCASE("independent brute force agrees at 4 and 6 ends") {
    for (int ends : {4, 6}) {
      CHECK(brute_force_double_symmetric(ends, false) ==
            enumerate_double_symmetric(ends, false));
    }
  }
  SUBCASE("every enumerated tree is double symmetric with the right signature") {
    for (const auto& t : enumerate_double_symmetric_trees(8, false)) {
      CHECK(is_double_symmetric(t));
      EndSignature sig = end_signature(t);
      CHECK(sig.total == 8);
      CHECK(!sig.axis_ray[0]);
      CHECK(!sig.axis_ray[1]);
    }
  }
}

TEST_CASE("filtered type counts for the two theorems") {
  CHECK(count_topological_types(4) == 2);
  CHECK(count_decorated_types(4) == 3);
  CHECK(count_topological_types(6) == 4);
  CHECK(count_decorated_types(6) == 5);
  CHECK_THROWS(count_topological_types(8));
}

TEST_CASE("proposition 1 clauses on the quartic models") {
  for (int n : {0, 1, 2, 3, 4, 5}) {
    EmbeddedTree t = model_tree_quartic(n);
    CHECK(is_double_symmetric(t));
    Proposition1Report rep = check_proposition1(t, 4);
    CHECK(rep.pass);
  }
}

TEST_CASE("proposition 1 violations are reported") {
  SUBCASE("two adjacent faces with the same label") {
    EmbeddedTree t = model_tree_quartic(0);
    t.face_labels = {"a", "a", "Ia", "0", "-a", "Ra"};
    Proposition1Report rep = check_proposition1(t, 4);
    CHECK(!rep.labels_distinct);
    CHECK(!rep.pass);
  }
  SUBCASE("alternating-zero rule for d = 6") {
    // an 8-end model with a 0 label parked on an odd face
    auto trees = enumerate_double_symmetric_trees(8, false);
    REQUIRE(!trees.empty());
    EmbeddedTree t = trees.front();
    t.face_labels = {"0", "a", "0", "Ia", "0", "-a", "Ra", "0"};
    Proposition1Report rep = check_proposition1(t, 6);
    CHECK(!rep.alternating_zero);
  }
  SUBCASE("wrong end count flags clause e") {
    Proposition1Report rep = check_proposition1(model_tree_quartic(0), 6);
    CHECK(!rep.ends_faces_count);
    CHECK(!rep.pass);
  }
}

TEST_CASE("invalid encodings are rejected") {
  EmbeddedTree bad;
  bad.q1 = {Subtree{false, VKind::Plain, {}}};  // leaf that is not an end
  CHECK_THROWS_AS(canonical_form(bad), anharm::InvalidTree);
  EmbeddedTree empty;
  CHECK_THROWS_AS(canonical_form(empty), anharm::InvalidTree);
  EmbeddedTree bare_tip;
  bare_tip.q1 = {End()};
  bare_tip.east.nodes.push_back({VKind::Plain, {}, {}});  // degree-1 axis tip
  CHECK_THROWS_AS(canonical_form(bare_tip), anharm::InvalidTree);
}
