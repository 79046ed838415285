#include <doctest.h>

#include "core/errors.hpp"
#include "support/oracles.hpp"

using namespace gl2h;
using L = SubgroupLabel;

TEST_CASE("character table orthogonality") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const CharacterTable t(PrimeContext::build(p));
    const auto rep = orthogonality_check(t);
    INFO(p << " " << rep.failure);
    CHECK(rep.passed);
    CHECK(rep.max_row_error < kIntegralityTolerance);
    CHECK(rep.max_column_error < kIntegralityTolerance);
    CHECK(rep.sum_dim_squared == group_order(p));
    CHECK(t.characters().size() == static_cast<std::size_t>(p) * p - 1);
  }
}

TEST_CASE("regular character vanishes off the identity") {
  const CharacterTable t(PrimeContext::build(7));
  const auto& ctx = t.context();
  for (std::size_t c = 0; c < t.classes().size(); ++c) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < t.characters().size(); ++i)
      sum += static_cast<double>(dimension(7, t.characters()[i])) * t.value(i, c);
    const bool identity = t.classes()[c] == classify(ctx, kIdentity);
    CHECK(std::abs(sum - Complex(identity ? static_cast<double>(group_order(7)) : 0.0)) < 1e-6);
  }
}

TEST_CASE("one-dimensional characters factor through the determinant") {
  const auto ctx = PrimeContext::build(11);
  gen::Source src(8);
  for (std::uint32_t j = 0; j < 10; ++j) {
    const IrredCharacter u{IrrepKind::U, j, 0};
    CHECK(dimension(11, u) == 1);
    for (int t = 0; t < 50; ++t) {
      const auto g = src.matrix(ctx);
      const auto h = src.matrix(ctx);
      const Complex prod = char_value(ctx, u, classify(ctx, multiply(ctx, g, h)));
      CHECK(std::abs(prod - char_value(ctx, u, classify(ctx, g)) * char_value(ctx, u, classify(ctx, h))) < 1e-9);
    }
  }
}

TEST_CASE("character names and dimensions") {
  CHECK(to_string(trivial_character()) == "U[0]");
  CHECK(to_string(IrredCharacter{IrrepKind::W, 2, 4}) == "W[2,4]");
  CHECK(dimension(7, steinberg_character()) == 7);
  CHECK(dimension(7, IrredCharacter{IrrepKind::W, 2, 4}) == 8);
  CHECK(dimension(7, IrredCharacter{IrrepKind::X, 6, 0}) == 6);
}

TEST_CASE("permutation characters count fixed cosets") {
  for (std::uint32_t p : {3u, 5u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const CharacterTable t(ws.context());
    for (auto label : kAllSubgroupLabels) {
      const auto pc = perm_character(ws, t, label);
      for (std::size_t c = 0; c < t.classes().size(); ++c) {
        const auto g = ws.group().index_of(class_representative(ws.context(), t.classes()[c]));
        CHECK(pc.values[c] == oracle::fixed_cosets(ws, label, g));
      }
    }
  }
}

TEST_CASE("decompositions match the predicted components") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const CharacterTable t(ws.context());
    for (auto label : {L::G, L::B, L::N, L::NPrime}) {
      INFO(p << " " << label_name(label));
      CHECK(decompose(ws, t, label) == predicted_decomposition(ws.context(), label));
    }
    const auto comps = nprime_components(ws.context());
    std::uint64_t dim = 0;
    for (const auto& chi : comps) dim += dimension(p, chi);
    CHECK(dim == ws.cosets(L::NPrime).size());
    CHECK(decompose(ws, t, L::B) == Decomposition{{trivial_character(), 1}, {steinberg_character(), 1}});
  }
}

TEST_CASE("permutation character identity 1_N' + 1_B = 1_N + 1_G") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const CharacterTable t(ws.context());
    const auto a = perm_character(ws, t, L::NPrime).values;
    const auto b = perm_character(ws, t, L::B).values;
    const auto n = perm_character(ws, t, L::N).values;
    const auto g = perm_character(ws, t, L::G).values;
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] + b[i] == n[i] + g[i]);
  }
}

TEST_CASE("multiplicity one, and its failure on C[G/C]") {
  bool c_fails_somewhere = false;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const CharacterTable t(ws.context());
    const auto rep = multiplicity_one_report(ws, t);
    CHECK(rep.passed);
    for (const auto& e : rep.entries) {
      if (e.asserted) CHECK(e.max_multiplicity == 1);
      if (e.label == L::C && e.max_multiplicity >= 2) c_fails_somewhere = true;
    }
  }
  CHECK(c_fails_somewhere);
}

TEST_CASE("lookups reject unknown entries") {
  const CharacterTable t(PrimeContext::build(5));
  CHECK_THROWS_AS(t.character_position(IrredCharacter{IrrepKind::W, 3, 1}), Error);
  CHECK_THROWS_AS(predicted_decomposition(t.context(), L::C), Error);
}
