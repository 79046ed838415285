#include "core/operators.hpp"

#include <string>

#include "core/errors.hpp"

namespace gl2h {

CosetOperator operator_of_double_coset(const GroupWorkspace& ws, const DoubleCoset& dc) {
  const auto& group = ws.group();
  const auto& dom = ws.cosets(dc.left);
  const auto& cod = ws.cosets(dc.right);
  CosetOperator op{dc.left, dc.right, IntMatrix(cod.size(), dom.size())};
  std::vector<std::uint32_t> targets;
  targets.reserve(dc.k_cosets.size());
  for (auto j : dc.k_cosets) targets.push_back(cod.reps()[j]);
  for (std::uint32_t col = 0; col < dom.size(); ++col) {
    const std::uint32_t r = dom.reps()[col];
    for (auto w : targets) op.matrix.at(cod.index_of(group.multiply(r, w)), col) = 1;
  }
  return op;
}

CosetOperator double_coset_operator(const GroupWorkspace& ws, SubgroupLabel h, std::uint32_t g, SubgroupLabel k) {
  const auto& group = ws.group();
  const auto& hs = ws.subgroup(h);
  const auto& ks = ws.cosets(k);
  DoubleCoset dc{h, k, g, 0, {}, std::nullopt};
  std::vector<char> seen(ks.size(), 0);
  for (auto x : hs.elements()) {
    const auto j = ks.index_of(group.multiply(x, g));
    if (!seen[j]) {
      seen[j] = 1;
      dc.k_cosets.push_back(j);
    }
  }
  dc.degree = dc.k_cosets.size();
  return operator_of_double_coset(ws, dc);
}

CosetOperator standard_operator(const GroupWorkspace& ws, SubgroupLabel h, SubgroupLabel k) {
  return double_coset_operator(ws, h, ws.group().identity(), k);
}

CosetOperator compose(const CosetOperator& f, const CosetOperator& g) {
  if (f.codomain != g.domain || f.matrix.rows() != g.matrix.cols()) {
    throw Error(ErrorCode::InvalidArgument, "compose: codomain Z[G/" + std::string(label_name(f.codomain)) +
                                                "] does not match domain Z[G/" + std::string(label_name(g.domain)) + "]");
  }
  return {f.domain, g.codomain, g.matrix * f.matrix};
}

CosetOperator add(const CosetOperator& a, const CosetOperator& b) {
  if (a.domain != b.domain || a.codomain != b.codomain) throw Error(ErrorCode::InvalidArgument, "add: operator spaces differ");
  return {a.domain, a.codomain, a.matrix + b.matrix};
}

CosetOperator scale(const CosetOperator& a, const BigInt& s) { return {a.domain, a.codomain, a.matrix.scaled(s)}; }

CosetOperator averaging_operator(const GroupWorkspace& ws, SubgroupLabel h) {
  const std::size_t n = ws.cosets(h).size();
  const BigInt g_order = static_cast<unsigned long>(ws.group().size());
  const BigInt h_order = static_cast<unsigned long>(ws.subgroup(h).order());
  return {h, h, IntMatrix::identity(n).scaled(g_order) - IntMatrix::all_ones(n, n).scaled(h_order)};
}

CosetOperator identity_operator(const GroupWorkspace& ws, SubgroupLabel h) {
  return {h, h, IntMatrix::identity(ws.cosets(h).size())};
}

SequenceOperators sequence_operators(const GroupWorkspace& ws) {
  using L = SubgroupLabel;
  return {standard_operator(ws, L::B, L::G),
          compose(standard_operator(ws, L::N, L::B), averaging_operator(ws, L::B)),
          standard_operator(ws, L::NPrime, L::N)};
}

std::optional<std::vector<BigInt>> expand_in_theta_basis(const GroupWorkspace& ws, const CosetOperator& op,
                                                        const std::vector<DoubleCoset>& dcs) {
  const auto& dom = ws.cosets(op.domain);
  const auto& cod = ws.cosets(op.codomain);
  // The column of the trivial coset H determines the operator.
  const std::uint32_t base = dom.index_of(ws.group().identity());
  std::vector<BigInt> coeffs;
  coeffs.reserve(dcs.size());
  CosetOperator rebuilt{op.domain, op.codomain, IntMatrix(cod.size(), dom.size())};
  for (const auto& dc : dcs) {
    const BigInt& c = op.matrix.at(dc.k_cosets.front(), base);
    for (auto j : dc.k_cosets)
      if (op.matrix.at(j, base) != c) return std::nullopt;
    coeffs.push_back(c);
    if (sgn(c) != 0) rebuilt = add(rebuilt, scale(operator_of_double_coset(ws, dc), c));
  }
  if (!(rebuilt.matrix == op.matrix)) return std::nullopt;
  return coeffs;
}

std::vector<mpq_class> product_formula(const GroupWorkspace& ws, const DoubleCoset& hak, const DoubleCoset& kbm,
                                       const std::vector<DoubleCoset>& dcs_hm) {
  if (hak.right != kbm.left) throw Error(ErrorCode::InvalidArgument, "product_formula: middle subgroups differ");
  const auto& group = ws.group();
  const auto& ks = ws.subgroup(hak.right);
  std::vector<mpq_class> coeffs(dcs_hm.size(), 0);
  for (auto k : ks.elements()) {
    const std::uint32_t g = group.multiply(group.multiply(hak.rep, k), kbm.rep);
    const std::size_t pos = locate_double_coset(ws, dcs_hm, g);
    coeffs[pos] += mpq_class(static_cast<unsigned long>(hak.degree), static_cast<unsigned long>(dcs_hm[pos].degree));
  }
  const mpq_class outer(static_cast<unsigned long>(kbm.degree), static_cast<unsigned long>(ks.order()));
  for (auto& c : coeffs) {
    c *= outer;
    c.canonicalize();
  }
  return coeffs;
}

}  // namespace gl2h
