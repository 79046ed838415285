#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/prime_field.hpp"

namespace gl2h {

/// The matrix [a b; c d] over F_p.
struct GroupElement {
  Residue a = 1, b = 0, c = 0, d = 1;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement kIdentity{1, 0, 0, 1};
inline constexpr GroupElement kOmega{0, 1, 1, 0};

GroupElement multiply(const PrimeContext& ctx, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const PrimeContext& ctx, const GroupElement& g);
Residue determinant(const PrimeContext& ctx, const GroupElement& g);
Residue trace(const PrimeContext& ctx, const GroupElement& g);
GroupElement scalar(Residue x);

/// sigma_t = [1 1; 1 t].
GroupElement sigma(const PrimeContext& ctx, std::int64_t t);

std::string to_string(const GroupElement& g);

enum class ClassKind : std::uint8_t { Scalar, Unipotent, Split, NonSplit };

/// Canonical conjugacy class label. Scalar and Unipotent use x only; Split
/// has x < y; NonSplit has 1 <= y <= (p-1)/2 and stands for gamma = x + y*sqrt(lambda).
struct ConjClassId {
  ClassKind kind = ClassKind::Scalar;
  Residue x = 1;
  Residue y = 0;
  friend auto operator<=>(const ConjClassId&, const ConjClassId&) = default;
};

std::string to_string(const ConjClassId& c);

ConjClassId classify(const PrimeContext& ctx, const GroupElement& g);

/// h_x, b_x, kappa_{x,y} or gamma_{x,y}.
GroupElement class_representative(const PrimeContext& ctx, const ConjClassId& c);

/// All p^2 - 1 classes in canonical order.
std::vector<ConjClassId> all_classes(const PrimeContext& ctx);

std::uint64_t class_size(const PrimeContext& ctx, const ConjClassId& c);
std::map<ConjClassId, std::uint64_t> class_census(const PrimeContext& ctx);

std::uint64_t group_order(std::uint32_t p);

// Largest prime the element-enumeration routes will accept. The default
// keeps the exact matrix route inside the range it is validated for.
inline constexpr std::uint32_t kDefaultEnumerationLimit = 19;
inline constexpr std::uint32_t kHardEnumerationLimit = 61;

/// GL_2(F_p) listed in lexicographic (a, b, c, d) order, with an
/// element -> position index.
class Group {
 public:
  /// Throws Error(ResourceLimit) when p > limit.
  static Group enumerate(const PrimeContext& ctx, std::uint32_t limit = kDefaultEnumerationLimit);

  const PrimeContext& context() const { return ctx_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& operator[](std::uint32_t i) const { return elements_[i]; }

  std::uint32_t index_of(const GroupElement& g) const { return index_by_code_[code(g)]; }
  std::uint32_t multiply(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse(std::uint32_t i) const { return inverses_[i]; }
  std::uint32_t identity() const { return identity_; }

 private:
  explicit Group(const PrimeContext& ctx) : ctx_(ctx) {}

  std::size_t code(const GroupElement& g) const {
    const std::size_t p = ctx_.p();
    return ((static_cast<std::size_t>(g.a) * p + g.b) * p + g.c) * p + g.d;
  }

  PrimeContext ctx_;
  std::vector<GroupElement> elements_;
  std::vector<std::uint32_t> index_by_code_;
  std::vector<std::uint32_t> inverses_;
  std::uint32_t identity_ = 0;
};

}  // namespace gl2h
