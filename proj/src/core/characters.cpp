#include "core/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace gl2h {
namespace {

Complex root_of_unity(std::uint64_t numerator, std::uint64_t modulus) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numerator % modulus) / static_cast<double>(modulus));
}

std::uint32_t canonical_x_index(std::uint32_t p, std::uint64_t f) {
  const std::uint64_t m = static_cast<std::uint64_t>(p) * p - 1;
  f %= m;
  return static_cast<std::uint32_t>(std::min(f, f * p % m));
}

}  // namespace

Complex MultiplicativeCharacter::at_exponent(std::uint64_t k) const {
  return root_of_unity((index_ * (k % modulus_)) % modulus_, modulus_);
}

std::string to_string(const IrredCharacter& chi) {
  switch (chi.kind) {
    case IrrepKind::U: return "U[" + std::to_string(chi.first) + "]";
    case IrrepKind::V: return "V[" + std::to_string(chi.first) + "]";
    case IrrepKind::W: return "W[" + std::to_string(chi.first) + "," + std::to_string(chi.second) + "]";
    case IrrepKind::X: return "X[" + std::to_string(chi.first) + "]";
  }
  return "?";
}

std::uint64_t dimension(std::uint32_t p, const IrredCharacter& chi) {
  switch (chi.kind) {
    case IrrepKind::U: return 1;
    case IrrepKind::V: return p;
    case IrrepKind::W: return p + 1;
    case IrrepKind::X: return p - 1;
  }
  return 0;
}

std::vector<IrredCharacter> all_characters(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.p();
  std::vector<IrredCharacter> out;
  for (std::uint32_t a = 0; a + 1 < p; ++a) out.push_back({IrrepKind::U, a, 0});
  for (std::uint32_t a = 0; a + 1 < p; ++a) out.push_back({IrrepKind::V, a, 0});
  for (std::uint32_t a = 0; a + 1 < p; ++a)
    for (std::uint32_t b = a + 1; b + 1 < p; ++b) out.push_back({IrrepKind::W, a, b});
  const std::uint64_t m = static_cast<std::uint64_t>(p) * p - 1;
  for (std::uint64_t f = 0; f < m; ++f) {
    if (f % (p + 1) == 0) continue;  // phi^p = phi
    if (canonical_x_index(p, f) == f) out.push_back({IrrepKind::X, static_cast<std::uint32_t>(f), 0});
  }
  return out;
}

Complex char_value(const PrimeContext& ctx, const IrredCharacter& chi, const ConjClassId& c) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m1 = p - 1;
  const std::uint64_t m2 = p * p - 1;
  auto alpha = [&](std::uint32_t idx, Residue x) { return root_of_unity(idx * static_cast<std::uint64_t>(ctx.dlog_fp(x)), m1); };
  auto phi = [&](std::uint32_t idx, Fp2Element u) { return root_of_unity(idx * static_cast<std::uint64_t>(ctx.dlog_fp2(u)), m2); };

  const Residue x = c.x, y = c.y;
  switch (chi.kind) {
    case IrrepKind::U:
    case IrrepKind::V: {
      const double sign_v = chi.kind == IrrepKind::V ? -1.0 : 1.0;
      switch (c.kind) {
        case ClassKind::Scalar:
          return (chi.kind == IrrepKind::V ? static_cast<double>(p) : 1.0) * alpha(chi.first, ctx.mul(x, x));
        case ClassKind::Unipotent:
          return chi.kind == IrrepKind::V ? Complex(0.0) : alpha(chi.first, ctx.mul(x, x));
        case ClassKind::Split:
          return alpha(chi.first, ctx.mul(x, y));
        case ClassKind::NonSplit:
          // gamma^{p+1} is the norm of gamma, an element of F_p^x.
          return sign_v * alpha(chi.first, ctx.fp2_norm({x, y}));
      }
      break;
    }
    case IrrepKind::W: {
      const auto a = chi.first, b = chi.second;
      switch (c.kind) {
        case ClassKind::Scalar:
          return static_cast<double>(p + 1) * alpha(a, x) * alpha(b, x);
        case ClassKind::Unipotent:
          return alpha(a, x) * alpha(b, x);
        case ClassKind::Split:
          return alpha(a, x) * alpha(b, y) + alpha(a, y) * alpha(b, x);
        case ClassKind::NonSplit:
          return 0.0;
      }
      break;
    }
    case IrrepKind::X: {
      const auto f = chi.first;
      switch (c.kind) {
        case ClassKind::Scalar:
          return static_cast<double>(p - 1) * phi(f, ctx.fp2_embed(x));
        case ClassKind::Unipotent:
          return -phi(f, ctx.fp2_embed(x));
        case ClassKind::Split:
          return 0.0;
        case ClassKind::NonSplit: {
          const Fp2Element g{x, y};
          return -(phi(f, g) + phi(f, ctx.fp2_conj(g)));
        }
      }
      break;
    }
  }
  return 0.0;
}

CharacterTable::CharacterTable(const PrimeContext& ctx)
    : ctx_(ctx), chars_(all_characters(ctx)), classes_(all_classes(ctx)) {
  sizes_.reserve(classes_.size());
  for (const auto& c : classes_) sizes_.push_back(class_size(ctx, c));
  values_.resize(chars_.size() * classes_.size());
  for (std::size_t i = 0; i < chars_.size(); ++i)
    for (std::size_t j = 0; j < classes_.size(); ++j) values_[i * classes_.size() + j] = char_value(ctx, chars_[i], classes_[j]);
}

std::size_t CharacterTable::character_position(const IrredCharacter& chi) const {
  auto it = std::lower_bound(chars_.begin(), chars_.end(), chi);
  if (it == chars_.end() || *it != chi) throw Error(ErrorCode::InvalidArgument, "unknown character " + to_string(chi));
  return static_cast<std::size_t>(it - chars_.begin());
}

std::size_t CharacterTable::class_position(const ConjClassId& c) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
  if (it == classes_.end() || *it != c) throw Error(ErrorCode::InvalidArgument, "unknown class " + to_string(c));
  return static_cast<std::size_t>(it - classes_.begin());
}

Complex CharacterTable::inner_product(const std::vector<Complex>& f, std::size_t chi) const {
  Complex s = 0.0;
  for (std::size_t j = 0; j < classes_.size(); ++j) s += static_cast<double>(sizes_[j]) * f[j] * std::conj(value(chi, j));
  return s / static_cast<double>(group_order(ctx_.p()));
}

OrthogonalityReport orthogonality_check(const CharacterTable& table) {
  OrthogonalityReport rep;
  const std::uint32_t p = table.context().p();
  const auto& chars = table.characters();
  const std::size_t nc = table.classes().size();
  const double order = static_cast<double>(group_order(p));

  for (const auto& chi : chars) rep.sum_dim_squared += dimension(p, chi) * dimension(p, chi);
  if (rep.sum_dim_squared != group_order(p)) {
    rep.passed = false;
    rep.failure = "sum of squared dimensions " + std::to_string(rep.sum_dim_squared) + " != |G|";
  }

  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = a; b < chars.size(); ++b) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < nc; ++j)
        s += static_cast<double>(table.class_sizes()[j]) * table.value(a, j) * std::conj(table.value(b, j));
      s /= order;
      const double err = std::abs(s - Complex(a == b ? 1.0 : 0.0));
      rep.max_row_error = std::max(rep.max_row_error, err);
      if (err > kIntegralityTolerance && rep.passed) {
        rep.passed = false;
        rep.failure = "<" + to_string(chars[a]) + ", " + to_string(chars[b]) + "> = " + std::to_string(s.real());
      }
    }

  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = i; j < nc; ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < chars.size(); ++a) s += table.value(a, i) * std::conj(table.value(a, j));
      const double expected = i == j ? order / static_cast<double>(table.class_sizes()[i]) : 0.0;
      const double err = std::abs(s - Complex(expected));
      rep.max_column_error = std::max(rep.max_column_error, err);
      if (err > kIntegralityTolerance && rep.passed) {
        rep.passed = false;
        rep.failure = "column " + to_string(table.classes()[i]) + " x " + to_string(table.classes()[j]);
      }
    }
  return rep;
}

PermutationCharacter perm_character(const GroupWorkspace& ws, const CharacterTable& table, SubgroupLabel h) {
  const auto& group = ws.group();
  const auto& ctx = ws.context();
  const auto& hs = ws.subgroup(h);
  const auto& cs = ws.cosets(h);
  PermutationCharacter pc{h, {}};
  pc.values.reserve(table.classes().size());
  for (const auto& c : table.classes()) {
    const std::uint32_t r = group.index_of(class_representative(ctx, c));
    std::uint64_t fixed = 0;
    for (auto g : cs.reps())
      if (hs.contains(group.multiply(group.multiply(group.inverse(g), r), g))) ++fixed;
    pc.values.push_back(fixed);
  }
  return pc;
}

Decomposition decompose(const GroupWorkspace& ws, const CharacterTable& table, SubgroupLabel h) {
  const auto pc = perm_character(ws, table, h);
  std::vector<Complex> f(pc.values.begin(), pc.values.end());
  Decomposition out;
  for (std::size_t i = 0; i < table.characters().size(); ++i) {
    const Complex m = table.inner_product(f, i);
    const double rounded = std::round(m.real());
    if (std::abs(m - Complex(rounded)) > kIntegralityTolerance || rounded < 0) {
      throw Error(ErrorCode::Internal, "<1_" + std::string(label_name(h)) + ", " + to_string(table.characters()[i]) +
                                           "> is not a non-negative integer");
    }
    if (rounded > 0) out.emplace(table.characters()[i], static_cast<std::uint64_t>(rounded));
  }
  return out;
}

std::vector<IrredCharacter> nprime_components(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.p();
  std::vector<IrredCharacter> out{trivial_character()};
  if (p % 4 == 1) out.push_back({IrrepKind::V, (p - 1) / 2, 0});
  for (std::uint32_t j = 2; j < p - 1 - j; j += 2) {
    if (j == (p - 1) / 2) continue;
    out.push_back({IrrepKind::W, j, p - 1 - j});
  }
  std::vector<IrredCharacter> xs;
  for (std::uint32_t m = 1; m <= p; m += 2) {
    if (2 * m == p + 1) continue;  // phi^{p-1} = 1
    xs.push_back({IrrepKind::X, canonical_x_index(p, static_cast<std::uint64_t>(p - 1) * m), 0});
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  out.insert(out.end(), xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition predicted_decomposition(const PrimeContext& ctx, SubgroupLabel h) {
  Decomposition out;
  switch (h) {
    case SubgroupLabel::G:
      out.emplace(trivial_character(), 1);
      break;
    case SubgroupLabel::B:
      out.emplace(trivial_character(), 1);
      out.emplace(steinberg_character(), 1);
      break;
    case SubgroupLabel::NPrime:
      for (const auto& chi : nprime_components(ctx)) out.emplace(chi, 1);
      break;
    case SubgroupLabel::N:
      for (const auto& chi : nprime_components(ctx)) out.emplace(chi, 1);
      out.emplace(steinberg_character(), 1);
      break;
    default:
      throw Error(ErrorCode::InvalidArgument, "no predicted decomposition for C[G/" + std::string(label_name(h)) + "]");
  }
  return out;
}

MultiplicityReport multiplicity_one_report(const GroupWorkspace& ws, const CharacterTable& table) {
  MultiplicityReport rep;
  const SubgroupLabel labels[] = {SubgroupLabel::G, SubgroupLabel::B, SubgroupLabel::N, SubgroupLabel::NPrime,
                                  SubgroupLabel::C, SubgroupLabel::CPrime};
  for (auto label : labels) {
    MultiplicityReport::Entry e{label};
    e.asserted = label != SubgroupLabel::C && label != SubgroupLabel::CPrime;
    for (const auto& [chi, mult] : decompose(ws, table, label)) {
      e.max_multiplicity = std::max(e.max_multiplicity, mult);
      ++e.components;
    }
    if (e.asserted && e.max_multiplicity > 1) rep.passed = false;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace gl2h
