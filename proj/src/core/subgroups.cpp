#include "core/subgroups.hpp"

#include <algorithm>
#include <random>

namespace gl2h {
namespace {

// A point of P^1(F_{p^2}).
struct ProjectivePoint {
  bool infinite = false;
  Fp2Element z{};
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

ProjectivePoint mobius(const PrimeContext& ctx, const GroupElement& g, const ProjectivePoint& pt) {
  if (pt.infinite) {
    if (g.c == 0) return {true, {}};
    return {false, ctx.fp2_embed(ctx.mul(g.a, ctx.inv(g.c)))};
  }
  Fp2Element num = ctx.fp2_add(ctx.fp2_mul(ctx.fp2_embed(g.a), pt.z), ctx.fp2_embed(g.b));
  Fp2Element den = ctx.fp2_add(ctx.fp2_mul(ctx.fp2_embed(g.c), pt.z), ctx.fp2_embed(g.d));
  if (ctx.fp2_is_zero(den)) return {true, {}};
  return {false, ctx.fp2_mul(num, ctx.fp2_inv(den))};
}

struct Definition {
  ProjectivePoint first;
  ProjectivePoint second;
  bool has_second = false;
  bool unordered = false;
};

Definition definition_of(const PrimeContext& ctx, SubgroupLabel label) {
  const ProjectivePoint inf{true, {}};
  const ProjectivePoint zero{false, {0, 0}};
  const ProjectivePoint root{false, {0, 1}};
  const ProjectivePoint neg_root{false, {0, ctx.neg(1)}};
  const ProjectivePoint one{false, {1, 0}};
  const ProjectivePoint minus_one{false, {ctx.neg(1), 0}};
  switch (label) {
    case SubgroupLabel::G:
      return {};
    case SubgroupLabel::B:
      return {inf, {}, false, false};
    case SubgroupLabel::C:
      return {inf, zero, true, false};
    case SubgroupLabel::N:
      return {inf, zero, true, true};
    case SubgroupLabel::CPrime:
      return {root, neg_root, true, false};
    case SubgroupLabel::NPrime:
      return {root, neg_root, true, true};
    case SubgroupLabel::CDoublePrime:
      return {one, minus_one, true, false};
    case SubgroupLabel::NDoublePrime:
      return {one, minus_one, true, true};
  }
  return {};
}

bool stabilises(const PrimeContext& ctx, const GroupElement& g, const Definition& def) {
  const ProjectivePoint a = mobius(ctx, g, def.first);
  if (!def.has_second) return a == def.first;
  const ProjectivePoint b = mobius(ctx, g, def.second);
  if (a == def.first && b == def.second) return true;
  return def.unordered && a == def.second && b == def.first;
}

CheckItem make_item(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

bool is_closed(const Group& group, const Subgroup& h) {
  if (!h.contains(group.identity())) return false;
  for (auto x : h.elements())
    if (!h.contains(group.inverse(x))) return false;
  const auto& els = h.elements();
  const std::size_t n = els.size();
  if (n * n <= 5'000'000) {
    for (auto x : els)
      for (auto y : els)
        if (!h.contains(group.multiply(x, y))) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed + n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int i = 0; i < 200'000; ++i)
    if (!h.contains(group.multiply(els[pick(rng)], els[pick(rng)]))) return false;
  return true;
}

// Least involution of `big` outside `small`.
std::optional<std::uint32_t> find_involution(const Group& group, const Subgroup& big, const Subgroup& small) {
  for (auto x : big.elements()) {
    if (small.contains(x) || x == group.identity()) continue;
    if (group.multiply(x, x) == group.identity()) return x;
  }
  return std::nullopt;
}

bool equals_union(const Group& group, const Subgroup& big, const Subgroup& small, std::uint32_t w) {
  std::vector<std::uint32_t> u(small.elements());
  for (auto c : small.elements()) u.push_back(group.multiply(w, c));
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u == big.elements();
}

bool normalises(const Group& group, std::uint32_t g, const Subgroup& c) {
  const std::uint32_t gi = group.inverse(g);
  for (auto x : c.elements())
    if (!c.contains(group.multiply(group.multiply(g, x), gi))) return false;
  return true;
}

}  // namespace

std::string_view label_name(SubgroupLabel label) {
  switch (label) {
    case SubgroupLabel::G: return "G";
    case SubgroupLabel::B: return "B";
    case SubgroupLabel::N: return "N";
    case SubgroupLabel::NPrime: return "N'";
    case SubgroupLabel::NDoublePrime: return "N''";
    case SubgroupLabel::C: return "C";
    case SubgroupLabel::CPrime: return "C'";
    case SubgroupLabel::CDoublePrime: return "C''";
  }
  return "?";
}

std::optional<SubgroupLabel> parse_label(std::string_view name) {
  for (auto l : kAllSubgroupLabels)
    if (label_name(l) == name) return l;
  return std::nullopt;
}

std::uint64_t expected_subgroup_order(std::uint32_t p, SubgroupLabel label) {
  const std::uint64_t q = p;
  switch (label) {
    case SubgroupLabel::G: return group_order(p);
    case SubgroupLabel::B: return q * (q - 1) * (q - 1);
    case SubgroupLabel::C:
    case SubgroupLabel::CDoublePrime: return (q - 1) * (q - 1);
    case SubgroupLabel::N:
    case SubgroupLabel::NDoublePrime: return 2 * (q - 1) * (q - 1);
    case SubgroupLabel::CPrime: return q * q - 1;
    case SubgroupLabel::NPrime: return 2 * (q * q - 1);
  }
  return 0;
}

Subgroup::Subgroup(SubgroupLabel label, std::vector<std::uint32_t> elements, std::size_t group_size)
    : label_(label), elements_(std::move(elements)), member_(group_size, 0) {
  std::sort(elements_.begin(), elements_.end());
  for (auto e : elements_) member_[e] = 1;
}

Subgroup build_subgroup(const Group& group, SubgroupLabel label) {
  const auto& ctx = group.context();
  std::vector<std::uint32_t> els;
  if (label == SubgroupLabel::G) {
    els.resize(group.size());
    for (std::uint32_t i = 0; i < group.size(); ++i) els[i] = i;
  } else {
    const Definition def = definition_of(ctx, label);
    for (std::uint32_t i = 0; i < group.size(); ++i)
      if (stabilises(ctx, group[i], def)) els.push_back(i);
  }
  return Subgroup(label, std::move(els), group.size());
}

CosetSpace::CosetSpace(const Group& group, const Subgroup& subgroup)
    : label_(subgroup.label()), coset_of_(group.size(), UINT32_MAX) {
  for (std::uint32_t g = 0; g < group.size(); ++g) {
    if (coset_of_[g] != UINT32_MAX) continue;
    const auto idx = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(g);
    for (auto h : subgroup.elements()) coset_of_[group.multiply(g, h)] = idx;
  }
}

GroupWorkspace::GroupWorkspace(const PrimeContext& ctx, std::uint32_t enumeration_limit)
    : group_(Group::enumerate(ctx, enumeration_limit)) {
  subgroups_.reserve(kAllSubgroupLabels.size());
  cosets_.reserve(kAllSubgroupLabels.size());
  for (auto label : kAllSubgroupLabels) {
    subgroups_.push_back(build_subgroup(group_, label));
    cosets_.emplace_back(group_, subgroups_.back());
  }
}

std::vector<DoubleCoset> double_cosets(const GroupWorkspace& ws, SubgroupLabel h, SubgroupLabel k) {
  const auto& group = ws.group();
  const auto& hs = ws.subgroup(h);
  const auto& ks = ws.cosets(k);
  std::vector<char> seen(ks.size(), 0);
  std::vector<DoubleCoset> out;
  for (std::uint32_t i = 0; i < ks.size(); ++i) {
    if (seen[i]) continue;
    DoubleCoset dc{h, k, ks.reps()[i], 0, {}, std::nullopt};
    for (auto x : hs.elements()) {
      const std::uint32_t j = ks.act(group, x, i);
      if (!seen[j]) {
        seen[j] = 1;
        dc.k_cosets.push_back(j);
      }
    }
    std::sort(dc.k_cosets.begin(), dc.k_cosets.end());
    dc.degree = dc.k_cosets.size();
    out.push_back(std::move(dc));
  }

  if (h == SubgroupLabel::N && k == SubgroupLabel::N) {
    const auto& ctx = ws.context();
    for (Residue t = 0; t < ctx.p(); ++t) {
      if (t == 1) continue;
      auto& dc = out[locate_double_coset(ws, out, group.index_of(sigma(ctx, t)))];
      if (!dc.sigma_t) dc.sigma_t = t;
    }
  }
  return out;
}

std::size_t locate_double_coset(const GroupWorkspace& ws, const std::vector<DoubleCoset>& dcs, std::uint32_t g) {
  for (std::size_t i = 0; i < dcs.size(); ++i) {
    const auto j = ws.cosets(dcs[i].right).index_of(g);
    if (std::binary_search(dcs[i].k_cosets.begin(), dcs[i].k_cosets.end(), j)) return i;
  }
  return dcs.size();
}

std::uint64_t degree(const GroupWorkspace& ws, SubgroupLabel h, std::uint32_t g, SubgroupLabel k) {
  const auto& group = ws.group();
  const auto& ks = ws.subgroup(k);
  const auto& hs = ws.subgroup(h);
  const std::uint32_t gi = group.inverse(g);
  std::uint64_t stab = 0;
  for (auto x : hs.elements())
    if (ks.contains(group.multiply(group.multiply(gi, x), g))) ++stab;
  return hs.order() / stab;
}

bool StructuralReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

StructuralReport structural_checks(const GroupWorkspace& ws) {
  StructuralReport report;
  const auto& group = ws.group();
  const auto& ctx = ws.context();
  const std::uint32_t p = ctx.p();

  report.items.push_back(make_item("|G| = (p^2-1)(p^2-p)", group.size() == group_order(p), std::to_string(group.size())));

  for (auto label : kAllSubgroupLabels) {
    const auto& h = ws.subgroup(label);
    const std::string name(label_name(label));
    report.items.push_back(make_item("order of " + name, h.order() == expected_subgroup_order(p, label),
                                     std::to_string(h.order())));
    report.items.push_back(make_item(name + " is a subgroup", is_closed(group, h)));
  }

  auto all_shaped = [&](SubgroupLabel label, auto pred) {
    const auto& h = ws.subgroup(label);
    return std::all_of(h.elements().begin(), h.elements().end(), [&](std::uint32_t i) { return pred(group[i]); });
  };
  const Residue lam = ctx.lambda();
  report.items.push_back(make_item("B is upper triangular", all_shaped(SubgroupLabel::B, [](const GroupElement& g) {
                                     return g.c == 0;
                                   })));
  report.items.push_back(make_item("C is diagonal", all_shaped(SubgroupLabel::C, [](const GroupElement& g) {
                                     return g.b == 0 && g.c == 0;
                                   })));
  report.items.push_back(make_item("N is monomial", all_shaped(SubgroupLabel::N, [](const GroupElement& g) {
                                     return (g.b == 0 && g.c == 0) || (g.a == 0 && g.d == 0);
                                   })));
  report.items.push_back(
      make_item("C' = {[x ly; y x]}", all_shaped(SubgroupLabel::CPrime, [&](const GroupElement& g) {
                  return g.a == g.d && g.b == ctx.mul(lam, g.c);
                })));
  report.items.push_back(
      make_item("C'' = {[x y; y x]}", all_shaped(SubgroupLabel::CDoublePrime, [](const GroupElement& g) {
                  return g.a == g.d && g.b == g.c;
                })));

  struct Pair {
    SubgroupLabel normaliser;
    SubgroupLabel cartan;
  };
  const Pair pairs[] = {{SubgroupLabel::N, SubgroupLabel::C},
                        {SubgroupLabel::NPrime, SubgroupLabel::CPrime},
                        {SubgroupLabel::NDoublePrime, SubgroupLabel::CDoublePrime}};
  for (const auto& [nl, cl] : pairs) {
    const auto& n = ws.subgroup(nl);
    const auto& c = ws.subgroup(cl);
    const std::string nn(label_name(nl)), cn(label_name(cl));

    std::optional<std::uint32_t> w;
    if (nl == SubgroupLabel::N) {
      w = group.index_of(kOmega);
      if (!n.contains(*w) || c.contains(*w)) w.reset();
    } else {
      w = find_involution(group, n, c);
    }
    const bool union_ok = w && equals_union(group, n, c, *w);
    report.items.push_back(make_item(nn + " = " + cn + " u w" + cn, union_ok,
                                     w ? "w = " + to_string(group[*w]) : "no involution in " + nn + " - " + cn));
    report.items.push_back(make_item("[" + nn + " : " + cn + "] = 2", n.order() == 2 * c.order()));

    bool normaliser_ok = true;
    std::string how;
    if (p <= 7) {
      std::vector<std::uint32_t> found;
      for (std::uint32_t g = 0; g < group.size(); ++g)
        if (normalises(group, g, c)) found.push_back(g);
      normaliser_ok = found == n.elements();
      how = "brute force";
    } else {
      for (auto x : n.elements())
        if (!normalises(group, x, c)) {
          normaliser_ok = false;
          break;
        }
      how = "index 2 and normalising";
    }
    report.items.push_back(make_item(nn + " is the normaliser of " + cn, normaliser_ok, how));
  }

  const GroupElement diag{1, 0, 0, ctx.neg(1)};
  const auto di = group.index_of(diag);
  report.items.push_back(make_item("diag(1,-1) lies in N' - C'",
                                   ws.subgroup(SubgroupLabel::NPrime).contains(di) &&
                                       !ws.subgroup(SubgroupLabel::CPrime).contains(di)));
  report.items.push_back(make_item("diag(1,-1) lies in N'' - C''",
                                   ws.subgroup(SubgroupLabel::NDoublePrime).contains(di) &&
                                       !ws.subgroup(SubgroupLabel::CDoublePrime).contains(di)));
  return report;
}

}  // namespace gl2h
