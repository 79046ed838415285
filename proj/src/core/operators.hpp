#pragma once

// Double coset operators as exact integer matrices between permutation
// modules Z[G/H].
//
// Convention: Theta(HgK) maps Z[G/H] -> Z[G/K]. Rows are indexed by the
// codomain cosets and columns by the domain cosets, so applying f and then g
// is the matrix product g * f. The product "A x B" of double coset operators
// means "A, then B", i.e. compose(A, B).

#include <optional>
#include <vector>

#include "core/int_matrix.hpp"
#include "core/subgroups.hpp"

namespace gl2h {

struct CosetOperator {
  SubgroupLabel domain;
  SubgroupLabel codomain;
  IntMatrix matrix;
};

CosetOperator operator_of_double_coset(const GroupWorkspace& ws, const DoubleCoset& dc);

/// Theta(H g K) for an arbitrary element g (group index).
CosetOperator double_coset_operator(const GroupWorkspace& ws, SubgroupLabel h, std::uint32_t g, SubgroupLabel k);

/// Theta(H 1 K), written HK.
CosetOperator standard_operator(const GroupWorkspace& ws, SubgroupLabel h, SubgroupLabel k);

/// f, then g. Throws Error(InvalidArgument) when f.codomain != g.domain.
CosetOperator compose(const CosetOperator& f, const CosetOperator& g);

CosetOperator add(const CosetOperator& a, const CosetOperator& b);
CosetOperator scale(const CosetOperator& a, const BigInt& s);

/// |G| (1 - pr_G) on Z[G/H], i.e. |G| I - |H| J.
CosetOperator averaging_operator(const GroupWorkspace& ws, SubgroupLabel h);

CosetOperator identity_operator(const GroupWorkspace& ws, SubgroupLabel h);

struct SequenceOperators {
  CosetOperator sigma_bg;       // Z[G/B]  -> Z[G/G]
  CosetOperator sigma_nb;       // Z[G/N]  -> Z[G/B]
  CosetOperator sigma_nprime_n; // Z[G/N'] -> Z[G/N]
};

SequenceOperators sequence_operators(const GroupWorkspace& ws);

/// Coefficients of `op` in the basis {Theta(D) : D in dcs}, where dcs lists
/// domain\G/codomain. Returns nullopt when op is not G-equivariant, i.e. not
/// a combination of double coset operators.
std::optional<std::vector<BigInt>> expand_in_theta_basis(const GroupWorkspace& ws, const CosetOperator& op,
                                                        const std::vector<DoubleCoset>& dcs);

/// HaK x KbM expanded in the basis H\G/M by the finite-group product formula
///   (deg(KbM)/|K|) sum_{k in K} (deg(HaK)/deg(HakbM)) HakbM.
/// Coefficients are returned as exact rationals.
std::vector<mpq_class> product_formula(const GroupWorkspace& ws, const DoubleCoset& hak, const DoubleCoset& kbm,
                                       const std::vector<DoubleCoset>& dcs_hm);

}  // namespace gl2h
