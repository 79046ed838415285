#pragma once

// Irreducible characters of GL_2(F_p), permutation characters of the coset
// spaces, and the decomposition of C[G/H] into irreducibles.
//
// Multiplicative characters are indexed by exponent: the character of
// F_p^x with index j sends gen_fp^k to exp(2 pi i jk / (p-1)), and likewise
// for F_{p^2}^x with gen_fp2 and modulus p^2 - 1.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/group.hpp"
#include "core/subgroups.hpp"

namespace gl2h {

using Complex = std::complex<double>;

/// Integrality tolerance for every rounded character quantity.
inline constexpr double kIntegralityTolerance = 1e-6;
/// Tolerance on imaginary parts that must vanish.
inline constexpr double kImaginaryTolerance = 1e-9;

class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter(std::uint64_t modulus, std::uint64_t index) : modulus_(modulus), index_(index % modulus) {}
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t index() const { return index_; }
  /// Value at gen^k.
  Complex at_exponent(std::uint64_t k) const;
  MultiplicativeCharacter operator*(const MultiplicativeCharacter& o) const {
    return {modulus_, (index_ + o.index_) % modulus_};
  }
  bool trivial() const { return index_ == 0; }

 private:
  std::uint64_t modulus_;
  std::uint64_t index_;
};

enum class IrrepKind : std::uint8_t { U, V, W, X };

/// U_a, V_a: first = a. W_{a,b}: first < second. X_f: first = least index of
/// the orbit {f, f p} modulo p^2 - 1.
struct IrredCharacter {
  IrrepKind kind = IrrepKind::U;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  friend auto operator<=>(const IrredCharacter&, const IrredCharacter&) = default;
};

inline IrredCharacter trivial_character() { return {IrrepKind::U, 0, 0}; }
/// V_1, the Steinberg character.
inline IrredCharacter steinberg_character() { return {IrrepKind::V, 0, 0}; }

std::string to_string(const IrredCharacter& chi);
std::uint64_t dimension(std::uint32_t p, const IrredCharacter& chi);

/// All p^2 - 1 irreducible characters in canonical order.
std::vector<IrredCharacter> all_characters(const PrimeContext& ctx);

Complex char_value(const PrimeContext& ctx, const IrredCharacter& chi, const ConjClassId& c);

/// The class list, class sizes and value table of G. Values are indexed
/// [character][class] in the orders of all_characters / all_classes.
class CharacterTable {
 public:
  explicit CharacterTable(const PrimeContext& ctx);

  const PrimeContext& context() const { return ctx_; }
  const std::vector<IrredCharacter>& characters() const { return chars_; }
  const std::vector<ConjClassId>& classes() const { return classes_; }
  const std::vector<std::uint64_t>& class_sizes() const { return sizes_; }
  const Complex& value(std::size_t chi, std::size_t cls) const { return values_[chi * classes_.size() + cls]; }
  std::size_t character_position(const IrredCharacter& chi) const;
  std::size_t class_position(const ConjClassId& c) const;

  /// (1/|G|) sum_c |c| f(c) conj(chi(c)) for a class function f.
  Complex inner_product(const std::vector<Complex>& f, std::size_t chi) const;

 private:
  PrimeContext ctx_;
  std::vector<IrredCharacter> chars_;
  std::vector<ConjClassId> classes_;
  std::vector<std::uint64_t> sizes_;
  std::vector<Complex> values_;
};

struct OrthogonalityReport {
  bool passed = true;
  double max_row_error = 0.0;
  double max_column_error = 0.0;
  std::uint64_t sum_dim_squared = 0;
  std::string failure;  // first offending pair, if any
};

OrthogonalityReport orthogonality_check(const CharacterTable& table);

/// Fixed-coset counts of G acting on G/H, aligned with table.classes().
struct PermutationCharacter {
  SubgroupLabel label;
  std::vector<std::uint64_t> values;
};

PermutationCharacter perm_character(const GroupWorkspace& ws, const CharacterTable& table, SubgroupLabel h);

using Decomposition = std::map<IrredCharacter, std::uint64_t>;

/// Multiplicities <1_H, chi>, zero entries omitted. Throws Error(Internal)
/// if an inner product is not within tolerance of a non-negative integer.
Decomposition decompose(const GroupWorkspace& ws, const CharacterTable& table, SubgroupLabel h);

/// The components predicted for C[G/H], H in {G, B, N, N'}, from the
/// selection rules on alpha and phi.
Decomposition predicted_decomposition(const PrimeContext& ctx, SubgroupLabel h);

/// Irreducible components of C[G/N'] (all of multiplicity one).
std::vector<IrredCharacter> nprime_components(const PrimeContext& ctx);

struct MultiplicityReport {
  struct Entry {
    SubgroupLabel label;
    std::uint64_t max_multiplicity = 0;
    std::uint64_t components = 0;
    bool asserted = false;  // multiplicity one required
  };
  std::vector<Entry> entries;
  bool passed = true;
};

MultiplicityReport multiplicity_one_report(const GroupWorkspace& ws, const CharacterTable& table);

}  // namespace gl2h
