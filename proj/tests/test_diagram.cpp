#include <gtest/gtest.h>

#include "altknot/diagram_io.hpp"
#include "altknot/families.hpp"
#include "altknot/surgery.hpp"
#include "oracles.hpp"

using namespace altknot;

namespace {

Diagram member(const char* spec) { return generate(parse_family_spec(spec)); }

Diagram figure_eight_twist() {
  return Diagram(DiagramKind::Twist,
                 {{0, 0, 1, Direction::Out}, {1, 0, 0, Direction::In}, {2, 0, 3, Direction::Out}, {3, 0, 2, Direction::In}},
                 {{0, 1, 2, 3}});
}

// Copy of d with every dart and vertex id shifted, placed beside d.
Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  std::vector<Dart> darts(a.darts().begin(), a.darts().end());
  std::vector<std::array<int, 4>> rot(a.rotation().begin(), a.rotation().end());
  const int dn = a.dart_count();
  const int vn = a.vertex_count();
  for (const Dart& d : b.darts()) darts.push_back({d.id + dn, d.vertex + vn, d.twin + dn, d.direction});
  for (auto r : b.rotation()) {
    for (int& x : r) x += dn;
    rot.push_back(r);
  }
  return Diagram(DiagramKind::Link, std::move(darts), std::move(rot));
}

}  // namespace

TEST(Validate, GeneratedDiagramsAreValid) {
  for (const char* s : {"cyclic:V=3", "cyclic:V=2", "twistchain:V=1", "f:j=2,k=2", "g:k=3,l=3,m=2", "lchain:k=2,n=3"})
    EXPECT_TRUE(validate(member(s)).ok()) << s << ": " << validate(member(s)).summary();
}

TEST(Validate, ThreeOutDartsBreakBalance) {
  const Diagram t = member("cyclic:V=3");
  std::vector<Dart> darts(t.darts().begin(), t.darts().end());
  const int in_dart = t.rotation(0)[1];
  darts[static_cast<std::size_t>(in_dart)].direction = Direction::Out;
  const Diagram bad(t.kind(), darts, {t.rotation().begin(), t.rotation().end()});
  EXPECT_TRUE(validate(bad).mentions("in/out balance"));
}

TEST(Validate, DisjointHopfLinksAreDisconnected) {
  const Diagram hopf = member("cyclic:V=2");
  EXPECT_TRUE(validate(disjoint_union(hopf, hopf)).mentions("connectivity"));
}

TEST(Validate, LoopsOnlyInTwists) {
  EXPECT_TRUE(validate(figure_eight_twist()).ok());
  EXPECT_TRUE(validate(figure_eight_twist().with_kind(DiagramKind::Knot)).mentions("loops"));
}

TEST(Validate, BrokenTwin) {
  const Diagram t = member("cyclic:V=3");
  std::vector<Dart> darts(t.darts().begin(), t.darts().end());
  darts[0].twin = 0;
  EXPECT_FALSE(validate(Diagram(t.kind(), darts, {t.rotation().begin(), t.rotation().end()})).ok());
  EXPECT_THROW(require_valid(Diagram(t.kind(), darts, {t.rotation().begin(), t.rotation().end()})), InvalidDiagram);
}

TEST(Faces, KnownCensuses) {
  const FaceTrace trefoil = faces(member("cyclic:V=3"));
  EXPECT_EQ(trefoil.census.count(2), 3);
  EXPECT_EQ(trefoil.census.count(3), 2);
  EXPECT_EQ(trefoil.census.total(), 5);

  const FaceTrace hopf = faces(member("cyclic:V=2"));
  EXPECT_EQ(hopf.census.count(2), 4);
  EXPECT_EQ(hopf.census.total(), 4);

  const FaceTrace twist = faces(figure_eight_twist());
  EXPECT_EQ(twist.census.count(1), 2);
  EXPECT_EQ(twist.census.count(2), 1);
  EXPECT_EQ(twist.census.weighted_total(), 4);
}

TEST(Faces, EulerAndDartCoverOnFamilies) {
  for (const char* s : {"cyclic:V=9", "f:j=5,k=3", "p:k=3,l=2,m=4", "g:k=2,l=3,m=4", "kribbon:k=3,m=3",
                        "hopftwist:V=7", "fourknottwist:V=8", "chain:k=5", "lchain:k=3,n=4"}) {
    const Diagram d = member(s);
    const FaceTrace ft = faces(d);
    EXPECT_EQ(ft.census.total(), oracle::euler_faces(d)) << s;
    EXPECT_EQ(ft.census.weighted_total(), d.dart_count()) << s;
  }
}

TEST(FaceIdentity, Census) {
  FaceCensus c;
  c.counts = {{2, 3}, {3, 2}};
  EXPECT_TRUE(check_face_identity(c));
  c.counts = {{2, 4}};
  EXPECT_TRUE(check_face_identity(c));
  c.counts = {{2, 1}, {3, 1}};
  EXPECT_FALSE(check_face_identity(c));
  c.counts = {{1, 2}, {2, 1}};
  EXPECT_THROW(check_face_identity(c), std::invalid_argument);
}

TEST(FaceIdentity, HoldsForLoopFreeMembers) {
  for (const char* s : {"cyclic:V=12", "f:j=6,k=4", "p:k=4,l=3,m=3", "g:k=4,l=4,m=1", "chain:k=4", "lchain:k=2,n=5"})
    EXPECT_TRUE(check_face_identity(faces(member(s)).census)) << s;
}

TEST(Orientation, AdjacentFacesDiffer) {
  for (const char* s : {"cyclic:V=3", "cyclic:V=2", "f:j=3,k=2", "twistchain:V=4", "g:k=2,l=2,m=2"}) {
    const Diagram d = member(s);
    const FaceTrace ft = faces(d);
    const auto sense = face_orientations(d);
    ASSERT_EQ(sense.size(), ft.faces.size());
    for (int e : d.edges()) {
      const int a = ft.face_of[static_cast<std::size_t>(e)];
      const int b = ft.face_of[static_cast<std::size_t>(d.dart(e).twin)];
      if (a != b) EXPECT_NE(sense[static_cast<std::size_t>(a)], sense[static_cast<std::size_t>(b)]) << s;
    }
  }
}

TEST(Io, JsonRoundTrip) {
  for (const char* s : {"cyclic:V=5", "twistchain:V=3", "p:k=2,l=2,m=3"}) {
    const Diagram d = member(s);
    const Diagram back = diagram_from_json(diagram_to_json(d));
    EXPECT_EQ(back, d) << s;
  }
  EXPECT_THROW(diagram_from_json("{\"version\":1}"), std::invalid_argument);
  EXPECT_THROW(diagram_from_json("not json"), std::invalid_argument);
}

TEST(Io, DotHasOneArcPerEdge) {
  const std::string dot = diagram_to_dot(member("cyclic:V=3"));
  std::size_t arcs = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arcs;
  EXPECT_EQ(arcs, 6u);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(Io, PolyRoundTrip) {
  const IntPoly p = pow(IntPoly{-3, 7}, 40);
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
}
