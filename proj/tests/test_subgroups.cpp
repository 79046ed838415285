#include <doctest.h>

#include "support/oracles.hpp"

using namespace gl2h;
using L = SubgroupLabel;

TEST_CASE("subgroup orders and coset counts") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    for (auto label : kAllSubgroupLabels) {
      CHECK(ws.subgroup(label).order() == expected_subgroup_order(p, label));
      CHECK(ws.cosets(label).size() * ws.subgroup(label).order() == ws.group().size());
    }
  }
  const GroupWorkspace five(PrimeContext::build(5));
  CHECK(five.subgroup(L::NPrime).order() == 48);
  const GroupWorkspace seven(PrimeContext::build(7));
  CHECK(seven.cosets(L::B).size() == 8);
  CHECK(seven.cosets(L::N).size() == 28);
  CHECK(seven.cosets(L::NPrime).size() == 21);
}

TEST_CASE("labels round-trip") {
  for (auto label : kAllSubgroupLabels) CHECK(parse_label(label_name(label)) == label);
  CHECK(label_name(L::NDoublePrime) == "N''");
  CHECK_FALSE(parse_label("Q").has_value());
}

TEST_CASE("coset spaces") {
  gen::Source src(5);
  const GroupWorkspace ws(PrimeContext::build(5));
  const auto& group = ws.group();
  for (auto label : kAllSubgroupLabels) {
    const auto& cs = ws.cosets(label);
    const auto& sub = ws.subgroup(label);
    CHECK(std::is_sorted(cs.reps().begin(), cs.reps().end()));
    for (std::uint32_t i = 0; i < cs.size(); ++i) {
      const auto r = cs.reps()[i];
      CHECK(cs.index_of(r) == i);
      // representative is the least member of its coset
      for (auto h : sub.elements()) {
        CHECK(cs.index_of(group.multiply(r, h)) == i);
        CHECK(group.multiply(r, h) >= r);
      }
    }
    for (int t = 0; t < 200; ++t) {
      const auto g = src.element(group);
      const auto x = src.element(group);
      const auto i = static_cast<std::uint32_t>(src.below(cs.size()));
      CHECK(cs.act(group, group.multiply(g, x), i) == cs.act(group, g, cs.act(group, x, i)));
    }
  }
}

TEST_CASE("structural report passes") {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const auto rep = structural_checks(ws);
    for (const auto& item : rep.items) {
      INFO(p << ": " << item.name << " " << item.detail);
      CHECK(item.passed);
    }
  }
}

TEST_CASE("degree equals the number of right cosets in HgK (brute force)") {
  gen::Source src(77);
  const L labels[] = {L::G, L::B, L::N, L::NPrime, L::NDoublePrime, L::C, L::CPrime};
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    for (auto h : labels)
      for (auto k : labels) {
        if (h == L::G || k == L::G) continue;  // brute force would be quadratic in |G|
        for (int t = 0; t < 3; ++t) {
          const auto g = src.element(ws.group());
          CHECK(degree(ws, h, g, k) == oracle::right_cosets_in_double_coset(ws, h, g, k));
        }
      }
  }
}

TEST_CASE("double cosets partition G/K") {
  const L labels[] = {L::G, L::B, L::N, L::NPrime, L::NDoublePrime};
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    for (auto h : labels)
      for (auto k : labels) {
        const auto dcs = double_cosets(ws, h, k);
        std::vector<int> hit(ws.cosets(k).size(), 0);
        for (std::size_t i = 0; i < dcs.size(); ++i) {
          CHECK(dcs[i].degree == dcs[i].k_cosets.size());
          for (auto j : dcs[i].k_cosets) ++hit[j];
          CHECK(locate_double_coset(ws, dcs, dcs[i].rep) == i);
          if (i) CHECK(dcs[i - 1].rep < dcs[i].rep);
        }
        CHECK(std::all_of(hit.begin(), hit.end(), [](int n) { return n == 1; }));
      }
  }
}

TEST_CASE("N\\G/N basis: sigma_t labels and degrees") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const auto& ctx = ws.context();
    const auto dcs = double_cosets(ws, L::N, L::N);
    CHECK(dcs.size() == (p + 3) / 2);
    std::set<Residue> seen;
    for (const auto& dc : dcs) {
      if (!dc.sigma_t) {
        CHECK(dc.degree == 1);
        continue;
      }
      const Residue t = *dc.sigma_t;
      CHECK(t != 1);
      seen.insert(t);
      // sigma_t and sigma_{1/t} share a double coset
      const auto s = ws.group().index_of(sigma(ctx, t));
      CHECK(locate_double_coset(ws, dcs, s) == static_cast<std::size_t>(&dc - dcs.data()));
      if (t != 0) CHECK(locate_double_coset(ws, dcs, ws.group().index_of(sigma(ctx, ctx.inv(t)))) ==
                        static_cast<std::size_t>(&dc - dcs.data()));
      const std::uint64_t want = t == 0 ? 2 * (p - 1) : t == p - 1 ? (p - 1) / 2 : p - 1;
      CHECK(dc.degree == want);
    }
    CHECK(seen.size() == dcs.size() - 1);
  }
}
