#include <map>

#include "altknot/families.hpp"

namespace altknot {

namespace {

CatalogEntry entry(std::string label, Family f, std::vector<int> params, std::vector<std::string> extra = {}) {
  std::vector<std::string> flags{"paper_claimed"};
  for (auto& e : extra) flags.push_back(std::move(e));
  return {std::move(label), {f, std::move(params)}, std::move(flags)};
}

std::vector<CatalogEntry> build() {
  using F = Family;
  std::vector<CatalogEntry> c{
      // two ribbons
      entry("4_1", F::TwoRibbon, {2, 2}),
      entry("5_2", F::TwoRibbon, {3, 2}),
      entry("6_1", F::TwoRibbon, {4, 2}),
      entry("7_2", F::TwoRibbon, {5, 2}),
      entry("7_3", F::TwoRibbon, {4, 3}),
      entry("8_1", F::TwoRibbon, {6, 2}),
      entry("8_3", F::TwoRibbon, {4, 4}),
      entry("9_2", F::TwoRibbon, {7, 2}),
      entry("9_3", F::TwoRibbon, {6, 3}),
      entry("9_4", F::TwoRibbon, {5, 4}),
      entry("10_1", F::TwoRibbon, {8, 2}),
      entry("6_2^2", F::TwoRibbon, {3, 3}),
      entry("8_2^2", F::TwoRibbon, {5, 3}),
      // three ribbons, P
      entry("6_2", F::ThreeRibbonP, {3, 2, 1}),
      entry("7_4", F::ThreeRibbonP, {3, 3, 1}),
      entry("7_5", F::ThreeRibbonP, {3, 2, 2}),
      entry("8_2", F::ThreeRibbonP, {5, 2, 1}),
      entry("8_4", F::ThreeRibbonP, {4, 3, 1}),
      entry("8_6", F::ThreeRibbonP, {3, 2, 3}, {"printed as 8.6"}),
      entry("9_6", F::ThreeRibbonP, {5, 2, 2}),
      entry("9_7", F::ThreeRibbonP, {3, 2, 4}),
      entry("9_9", F::ThreeRibbonP, {4, 3, 2}),
      entry("9_10", F::ThreeRibbonP, {3, 3, 3}),
      entry("10_4", F::ThreeRibbonP, {6, 1, 3}),
      entry("10_6", F::ThreeRibbonP, {5, 2, 3}),
      entry("10_11", F::ThreeRibbonP, {4, 3, 3}),
      entry("10_20", F::ThreeRibbonP, {5, 2, 3}),
      entry("6_2^3", F::ThreeRibbonP, {2, 2, 2}),
      entry("7_2^3", F::ThreeRibbonP, {2, 2, 3}),
      entry("8_2^3", F::ThreeRibbonP, {4, 2, 2}),
      entry("8_2^4", F::ThreeRibbonP, {3, 3, 2}),
      // three ribbons, G
      entry("3_1", F::ThreeRibbonG, {1, 1, 1}),
      entry("8_5", F::ThreeRibbonG, {3, 3, 2}),
      entry("9_35", F::ThreeRibbonG, {3, 3, 3}),
      entry("10_46", F::ThreeRibbonG, {5, 3, 2}),
      entry("10_61", F::ThreeRibbonG, {4, 3, 3}),
      entry("5_2^1", F::ThreeRibbonP, {2, 2, 1}),
      entry("7_1^2", F::ThreeRibbonG, {4, 2, 1}),
      entry("7_4^2", F::ThreeRibbonG, {3, 2, 2}),
      entry("8_1^3", F::ThreeRibbonG, {4, 2, 2}),
      // torus family
      entry("4_1^2", F::CyclicTorus, {4}),
      entry("5_1", F::CyclicTorus, {5}),
      entry("6_1^2", F::CyclicTorus, {6}),
      entry("7_1", F::CyclicTorus, {7}),
      entry("8_1^2", F::CyclicTorus, {8}),
      // twist knots
      entry("5_2", F::TwistKnots, {5}),
      entry("6_1", F::TwistKnots, {6}),
      entry("7_2", F::TwistKnots, {7}),
      entry("8_1", F::TwistKnots, {8}),
      entry("9_2", F::TwistKnots, {9}),
      entry("10_1", F::TwistKnots, {10}),
      // the two families sharing one polynomial
      entry("5_1^2", F::ThreeRibbonP, {2, 2, 1}),
      entry("6_3^2", F::ThreeRibbonP, {2, 2, 2}),
      entry("7_3^2", F::ThreeRibbonP, {2, 2, 3}),
      entry("8_6^2", F::ThreeRibbonP, {2, 2, 4}),
      entry("9_10^2", F::ThreeRibbonP, {2, 2, 5}),
      entry("5_1^2", F::ThreeRibbonG, {2, 2, 1}),
      entry("6_3^3", F::ThreeRibbonG, {2, 2, 2}, {"superscript differs from the sibling family"}),
      entry("7_3^2", F::ThreeRibbonG, {2, 2, 3}),
  };

  // One member given two different labels.
  std::map<std::string, std::vector<std::string>> labels;
  for (const auto& e : c) labels[to_string(e.family)].push_back(e.rolfsen_label);
  for (auto& e : c) {
    const auto& ls = labels[to_string(e.family)];
    for (const auto& l : ls)
      if (l != e.rolfsen_label) {
        e.flags.emplace_back("paper_inconsistent");
        break;
      }
  }
  return c;
}

}  // namespace

std::span<const CatalogEntry> catalog() {
  static const std::vector<CatalogEntry> table = build();
  return table;
}

std::vector<CatalogEntry> lookup(std::string_view label) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog())
    if (e.rolfsen_label == label) out.push_back(e);
  return out;
}

}  // namespace altknot
