#pragma once

// Eigenvalues of double coset operators on multiplicity-one permutation
// modules, computed from character sums, plus the matrix-route counterparts
// used to cross-check them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/characters.hpp"
#include "core/int_matrix.hpp"
#include "core/operators.hpp"

namespace gl2h {

enum class EigenSource : std::uint8_t { TraceFormula, Legendre, SotoAndrade, VMixed, Relation, MatrixRoute };

std::string_view source_name(EigenSource s);

struct EigenRecord {
  IrredCharacter character;
  std::string op;  // e.g. "NN' x N'N"
  Complex lambda;
  EigenSource source;
};

using ClassCounts = std::map<ConjClassId, std::uint64_t>;

/// Class census of the multiset {k h : k in K, h in H}.
ClassCounts product_class_counts(const GroupWorkspace& ws, SubgroupLabel k, SubgroupLabel h);

/// lambda_chi(HK x KH) on C[G/H]:
///   (deg(HK)/|H|) (deg(KH)/|K|) sum_{k in K, h in H} conj(chi(kh)).
/// Zero (up to rounding) when chi does not occur in C[G/H].
Complex trace_pair_operator(const GroupWorkspace& ws, const CharacterTable& table, const IrredCharacter& chi,
                            SubgroupLabel h, SubgroupLabel k);

/// Same, reusing a census from product_class_counts(ws, k, h).
Complex trace_pair_operator(const GroupWorkspace& ws, const CharacterTable& table, const IrredCharacter& chi,
                            SubgroupLabel h, SubgroupLabel k, const ClassCounts& counts);

/// Number of elements of sigma_{-1} N with trace t and determinant n, for a
/// non-scalar class: 2 (1 + ((t^2 - 2n)/p)).
int sigma_minus_one_class_count(const PrimeContext& ctx, Residue t, Residue n);

/// Per-class count of sigma_{-1} N (zero on scalar classes).
std::uint64_t sigma_minus_one_class_count(const PrimeContext& ctx, const ConjClassId& c);

/// lambda_chi(N sigma_{-1} N) from the class-grouped trace
///   (deg(N sigma_{-1} N)/|N|) sum_{g in sigma_{-1} N} conj(chi(g)).
Complex sigma_minus_one_eigen_by_classes(const PrimeContext& ctx, const IrredCharacter& chi);

/// lambda(N sigma_{-1} N) on W_{a, a^-1}: (1/2) sum_d alpha(d) ((1+d^2)/p).
/// Throws Error(InvalidArgument) unless alpha^{(p-1)/2} = 1 and alpha^2 != 1.
Complex legendre_sum(const PrimeContext& ctx, std::uint32_t alpha_index);

/// lambda(N sigma_{-1} N) on X_phi:
///   -(1/(2(p-1))) sum_{gamma in F_{p^2}^x} phi(gamma) ((gamma^2 + conj(gamma)^2)/p).
/// Throws Error(InvalidArgument) unless phi^{p+1} = 1, phi^{(p+1)/2} != 1, phi^{p-1} != 1.
Complex soto_andrade_sum(const PrimeContext& ctx, std::uint64_t phi_index);

/// lambda(N sigma_{-1} N) on V_alpha, alpha the quadratic character, p = 1 mod 4.
/// Throws Error(InvalidArgument) for p = 3 mod 4.
Complex v_mixed_eigen(const PrimeContext& ctx);

/// lambda_chi(N sigma_{-1} N) for chi in C[G/N'], from the matching sum.
EigenRecord sigma_minus_one_eigen(const PrimeContext& ctx, const IrredCharacter& chi);

/// lambda_chi(NN' x N'N) for chi in C[G/N']: (p^2-1)/4 on U_1, otherwise
/// p - lambda_chi(N sigma_{-1} N)^2. Throws Error(InvalidArgument) when chi
/// does not occur in C[G/N'].
EigenRecord lambda_nn_prime(const PrimeContext& ctx, const IrredCharacter& chi);

/// Matrix route: lambda_chi of a G-endomorphism of Z[G/H], via
///   (1/|G|) sum_c |c| conj(chi(c)) tr(M P_c).
/// Requires C[G/H] to be multiplicity free at chi.
class MatrixEigenvalues {
 public:
  MatrixEigenvalues(const GroupWorkspace& ws, const CharacterTable& table, const CosetOperator& endo);
  Complex operator()(const IrredCharacter& chi) const;

 private:
  const CharacterTable* table_;
  std::vector<double> class_traces_;
};

/// Rounds to the nearest integer, or nullopt when off by more than the
/// integrality tolerance or the imaginary part does not vanish.
std::optional<BigInt> round_to_integer(const Complex& z);

struct Table2Row {
  std::uint32_t p = 0;
  std::optional<BigInt> det_total;  // matrix route, signed
  std::optional<BigInt> det_u, det_w, det_x, det_v;  // character-sum route
};

/// Exact det of N'N x NN' on Z[G/N'].
BigInt nprime_determinant(const GroupWorkspace& ws);

/// Component determinants from the character sums. Products are rounded per
/// Galois orbit of characters, then raised to the component dimension
/// exactly. Throws Error(Internal) on a rounding failure.
Table2Row table2_charsum(const PrimeContext& ctx);

struct NonvanishingReport {
  struct Entry {
    IrredCharacter character;
    Complex lambda_nn_prime;
    std::optional<Complex> sigma_eigen;  // absent on U_1
    bool nonzero = false;
    bool avoids_sqrt_p = true;
  };
  std::vector<Entry> entries;
  bool passed = true;
};

NonvanishingReport nonvanishing_check(const PrimeContext& ctx);

struct ExactnessReport {
  struct Entry {
    SubgroupLabel position;
    IrredCharacter character;
    Complex lambda_eps;
    Complex lambda_delta;
    bool hypothesis_holds = false;
  };
  std::vector<Entry> entries;
  bool passed = true;
  std::string failure;
};

/// For each module of the sequence and each chi in it: lambda(eps) = 0
/// implies lambda(delta) != 0, and lambda(eps) lambda(delta) = 0.
ExactnessReport exactness_hypotheses_check(const GroupWorkspace& ws, const CharacterTable& table);

}  // namespace gl2h
