#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altknot/diagram.hpp"
#include "altknot/int_poly.hpp"

namespace altknot {

enum class Family {
  TwistChain,     // twistchain:V      (x-2) J_{V-1}
  HopfTwist,      // hopftwist:V       Hopf link with a twisted edge
  TrefoilTwist,   // trefoiltwist:V    trefoil with a twisted edge
  FourKnotTwist,  // fourknottwist:V   figure-eight knot with a twisted edge
  CyclicTorus,    // cyclic:V          (2,V) torus knots and links
  TwistKnots,     // twistknot:V
  TwoRibbon,      // f:j,k             F_{j,k}
  ThreeRibbonP,   // p:k,l,m           P_{k,l;m}
  ThreeRibbonG,   // g:k,l,m           G_{k,l,m}
  ClosedChain,    // chain:k           closed chain of k circles
  KRibbonCyclic,  // kribbon:k,m       k ribbons of m vertices
  ChainedCyclic,  // lchain:k,n        L_{k;n}
};

inline constexpr int kDefaultMaxVertices = 64;

struct FamilySpec {
  Family family = Family::CyclicTorus;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct FamilyInfo {
  Family family;
  std::string_view cli_name;
  std::string_view name;
  std::vector<std::string_view> params;
};

std::span<const FamilyInfo> family_table();
const FamilyInfo& info(Family f);

/// Parses `cyclic:V=5`, `f:j=4,k=2`, `p:k=3,l=2,m=2`, ... Throws
/// std::invalid_argument on syntax errors; ranges are checked by generate().
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Vertex count of the member, from the parameters alone.
int member_vertex_count(const FamilySpec& spec);

/// Throws std::out_of_range("<param> out of range") when a parameter is below
/// the family minimum or the member would exceed `max_vertices`.
void check_range(const FamilySpec& spec, int max_vertices = kDefaultMaxVertices);

/// Builds the member diagram from hard-coded seeds through ribbon expansion
/// and, for the twisted and chained families, composition.
Diagram generate(const FamilySpec& spec, int max_vertices = kDefaultMaxVertices);

/// The family's closed-form characteristic polynomial.
IntPoly closed_form(const FamilySpec& spec);

struct MemberCheck {
  bool match = false;
  IntPoly generated;
  IntPoly formula;
};

MemberCheck verify_member(const FamilySpec& spec, int max_vertices = kDefaultMaxVertices);

struct RecurrenceCheck {
  bool homogeneous = false;
  /// H with p2 - x p1 + p0 = (x-2) H, when the triple is not homogeneous.
  std::optional<IntPoly> source;
};

/// Throws std::invalid_argument("not a family triple") when the residual is
/// nonzero and not divisible by (x-2).
RecurrenceCheck check_family_recurrence(const IntPoly& p0, const IntPoly& p1, const IntPoly& p2);

struct IdentityCheck {
  std::string identity;
  std::string params;
  bool pass = false;
};

/// Exact polynomial identities between the families for every index up to
/// `max_index`: torus factorisations (a,b), the trefoil-symmetric G (c),
/// P/G agreement (d), F and the torus family (e), symmetries (f,g), the
/// chain families against their generators (h), composition as G_{k,l,0}
/// (i), plus the two colliding link families and the twist-knot/F match.
std::vector<IdentityCheck> check_identities(int max_index);

/// x^2 [(x^2 - 2) J_{V-4} - 2 J_{V-5} - 2], shared by two different families.
IntPoly collision_pair_formula(int vertices);

struct CollisionPair {
  Diagram from_torus_link;    // P_{2,2;V-4}, grows from the (2,4) torus link
  Diagram from_circle_chain;  // G_{2,2,V-4}, grows from a chain of three circles
};

CollisionPair generate_collision_pair(int vertices);

struct CatalogEntry {
  std::string rolfsen_label;
  FamilySpec family;
  std::vector<std::string> flags;
};

/// Knot-table correspondences as published alongside the family formulas.
/// Every entry carries the "paper_claimed" flag; no identification is done.
std::span<const CatalogEntry> catalog();
std::vector<CatalogEntry> lookup(std::string_view label);

}  // namespace altknot
