#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/group.hpp"

namespace gl2h {

enum class SubgroupLabel : std::uint8_t { G, B, N, NPrime, NDoublePrime, C, CPrime, CDoublePrime };

inline constexpr std::array<SubgroupLabel, 8> kAllSubgroupLabels{
    SubgroupLabel::G,  SubgroupLabel::B,      SubgroupLabel::N,      SubgroupLabel::NPrime,
    SubgroupLabel::NDoublePrime, SubgroupLabel::C, SubgroupLabel::CPrime, SubgroupLabel::CDoublePrime};

std::string_view label_name(SubgroupLabel label);
std::optional<SubgroupLabel> parse_label(std::string_view name);

/// Expected order of each subgroup as a function of p.
std::uint64_t expected_subgroup_order(std::uint32_t p, SubgroupLabel label);

class Subgroup {
 public:
  Subgroup(SubgroupLabel label, std::vector<std::uint32_t> elements, std::size_t group_size);

  SubgroupLabel label() const { return label_; }
  /// Group indices in increasing (= lexicographic) order.
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::uint32_t g) const { return member_[g] != 0; }

 private:
  SubgroupLabel label_;
  std::vector<std::uint32_t> elements_;
  std::vector<char> member_;
};

/// Stabiliser of the defining point (or point pair) of `label` under the
/// Mobius action of G on P^1(F_{p^2}).
Subgroup build_subgroup(const Group& group, SubgroupLabel label);

/// Left cosets gH. Representatives are the least member of each coset, and
/// cosets are numbered in increasing order of representative.
class CosetSpace {
 public:
  CosetSpace(const Group& group, const Subgroup& subgroup);

  SubgroupLabel label() const { return label_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<std::uint32_t>& reps() const { return reps_; }
  std::uint32_t index_of(std::uint32_t g) const { return coset_of_[g]; }
  /// Coset index of g * reps[coset].
  std::uint32_t act(const Group& group, std::uint32_t g, std::uint32_t coset) const {
    return coset_of_[group.multiply(g, reps_[coset])];
  }

 private:
  SubgroupLabel label_;
  std::vector<std::uint32_t> reps_;
  std::vector<std::uint32_t> coset_of_;
};

/// The enumerated group with every distinguished subgroup and its coset
/// space. Immutable after construction.
class GroupWorkspace {
 public:
  explicit GroupWorkspace(const PrimeContext& ctx, std::uint32_t enumeration_limit = kDefaultEnumerationLimit);

  const PrimeContext& context() const { return group_.context(); }
  std::uint32_t p() const { return group_.context().p(); }
  const Group& group() const { return group_; }
  const Subgroup& subgroup(SubgroupLabel label) const { return subgroups_[static_cast<std::size_t>(label)]; }
  const CosetSpace& cosets(SubgroupLabel label) const { return cosets_[static_cast<std::size_t>(label)]; }

 private:
  Group group_;
  std::vector<Subgroup> subgroups_;
  std::vector<CosetSpace> cosets_;
};

struct DoubleCoset {
  SubgroupLabel left;
  SubgroupLabel right;
  std::uint32_t rep;     // least element of H g K
  std::uint64_t degree;  // number of K-cosets it contains
  std::vector<std::uint32_t> k_cosets;  // sorted indices into cosets(right)
  std::optional<Residue> sigma_t;       // N\G/N only: least t with sigma_t in it
};

/// H\G/K in increasing order of representative.
std::vector<DoubleCoset> double_cosets(const GroupWorkspace& ws, SubgroupLabel h, SubgroupLabel k);

/// Position in `dcs` of the double coset containing g.
std::size_t locate_double_coset(const GroupWorkspace& ws, const std::vector<DoubleCoset>& dcs, std::uint32_t g);

/// [H : H cap gKg^-1].
std::uint64_t degree(const GroupWorkspace& ws, SubgroupLabel h, std::uint32_t g, SubgroupLabel k);

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StructuralReport {
  std::vector<CheckItem> items;
  bool passed() const;
};

StructuralReport structural_checks(const GroupWorkspace& ws);

}  // namespace gl2h
