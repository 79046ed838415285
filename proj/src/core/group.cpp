#include "core/group.hpp"

#include <limits>

#include "core/errors.hpp"

namespace gl2h {

GroupElement multiply(const PrimeContext& ctx, const GroupElement& g, const GroupElement& h) {
  return {ctx.add(ctx.mul(g.a, h.a), ctx.mul(g.b, h.c)), ctx.add(ctx.mul(g.a, h.b), ctx.mul(g.b, h.d)),
          ctx.add(ctx.mul(g.c, h.a), ctx.mul(g.d, h.c)), ctx.add(ctx.mul(g.c, h.b), ctx.mul(g.d, h.d))};
}

Residue determinant(const PrimeContext& ctx, const GroupElement& g) {
  return ctx.sub(ctx.mul(g.a, g.d), ctx.mul(g.b, g.c));
}

Residue trace(const PrimeContext& ctx, const GroupElement& g) { return ctx.add(g.a, g.d); }

GroupElement inverse(const PrimeContext& ctx, const GroupElement& g) {
  Residue di = ctx.inv(determinant(ctx, g));
  return {ctx.mul(g.d, di), ctx.mul(ctx.neg(g.b), di), ctx.mul(ctx.neg(g.c), di), ctx.mul(g.a, di)};
}

GroupElement scalar(Residue x) { return {x, 0, 0, x}; }

GroupElement sigma(const PrimeContext& ctx, std::int64_t t) { return {1, 1, 1, ctx.reduce(t)}; }

std::string to_string(const GroupElement& g) {
  return "[" + std::to_string(g.a) + " " + std::to_string(g.b) + "; " + std::to_string(g.c) + " " +
         std::to_string(g.d) + "]";
}

std::string to_string(const ConjClassId& c) {
  switch (c.kind) {
    case ClassKind::Scalar:
      return "h(" + std::to_string(c.x) + ")";
    case ClassKind::Unipotent:
      return "b(" + std::to_string(c.x) + ")";
    case ClassKind::Split:
      return "kappa(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    case ClassKind::NonSplit:
      return "gamma(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
  }
  return "?";
}

ConjClassId classify(const PrimeContext& ctx, const GroupElement& g) {
  if (g.b == 0 && g.c == 0 && g.a == g.d) return {ClassKind::Scalar, g.a, 0};
  const Residue t = trace(ctx, g);
  const Residue n = determinant(ctx, g);
  const Residue half = ctx.inv(2);
  const Residue disc = ctx.sub(ctx.mul(t, t), ctx.mul(4, n));
  if (disc == 0) return {ClassKind::Unipotent, ctx.mul(t, half), 0};
  if (auto root = ctx.sqrt(disc)) {
    Residue e1 = ctx.mul(ctx.add(t, *root), half);
    Residue e2 = ctx.mul(ctx.sub(t, *root), half);
    if (e1 > e2) std::swap(e1, e2);
    return {ClassKind::Split, e1, e2};
  }
  // Eigenvalues x +- y*sqrt(lambda) with x = t/2 and lambda*y^2 = x^2 - n.
  const Residue x = ctx.mul(t, half);
  const Residue y2 = ctx.mul(ctx.sub(ctx.mul(x, x), n), ctx.inv(ctx.lambda()));
  return {ClassKind::NonSplit, x, *ctx.sqrt(y2)};
}

GroupElement class_representative(const PrimeContext& ctx, const ConjClassId& c) {
  switch (c.kind) {
    case ClassKind::Scalar:
      return scalar(c.x);
    case ClassKind::Unipotent:
      return {c.x, 1, 0, c.x};
    case ClassKind::Split:
      return {c.x, 0, 0, c.y};
    case ClassKind::NonSplit:
      return {c.x, ctx.mul(ctx.lambda(), c.y), c.y, c.x};
  }
  return kIdentity;
}

std::vector<ConjClassId> all_classes(const PrimeContext& ctx) {
  const Residue p = ctx.p();
  std::vector<ConjClassId> out;
  out.reserve(static_cast<std::size_t>(p) * p - 1);
  for (Residue x = 1; x < p; ++x) out.push_back({ClassKind::Scalar, x, 0});
  for (Residue x = 1; x < p; ++x) out.push_back({ClassKind::Unipotent, x, 0});
  for (Residue x = 1; x < p; ++x)
    for (Residue y = x + 1; y < p; ++y) out.push_back({ClassKind::Split, x, y});
  for (Residue x = 0; x < p; ++x)
    for (Residue y = 1; y <= (p - 1) / 2; ++y) out.push_back({ClassKind::NonSplit, x, y});
  return out;
}

std::uint64_t class_size(const PrimeContext& ctx, const ConjClassId& c) {
  const std::uint64_t p = ctx.p();
  switch (c.kind) {
    case ClassKind::Scalar:
      return 1;
    case ClassKind::Unipotent:
      return p * p - 1;
    case ClassKind::Split:
      return p * (p + 1);
    case ClassKind::NonSplit:
      return p * (p - 1);
  }
  return 0;
}

std::map<ConjClassId, std::uint64_t> class_census(const PrimeContext& ctx) {
  std::map<ConjClassId, std::uint64_t> out;
  for (const auto& c : all_classes(ctx)) out.emplace(c, class_size(ctx, c));
  return out;
}

std::uint64_t group_order(std::uint32_t p) {
  const std::uint64_t q = p;
  return (q * q - 1) * (q * q - q);
}

Group Group::enumerate(const PrimeContext& ctx, std::uint32_t limit) {
  if (ctx.p() > limit || ctx.p() > kHardEnumerationLimit) {
    throw Error(ErrorCode::ResourceLimit, "group enumeration for p = " + std::to_string(ctx.p()) +
                                              " exceeds the enumeration limit " + std::to_string(limit));
  }
  Group g(ctx);
  const Residue p = ctx.p();
  const std::size_t codes = static_cast<std::size_t>(p) * p * p * p;
  g.index_by_code_.assign(codes, std::numeric_limits<std::uint32_t>::max());
  g.elements_.reserve(group_order(p));
  for (Residue a = 0; a < p; ++a)
    for (Residue b = 0; b < p; ++b)
      for (Residue c = 0; c < p; ++c)
        for (Residue d = 0; d < p; ++d) {
          GroupElement e{a, b, c, d};
          if (determinant(ctx, e) == 0) continue;
          g.index_by_code_[g.code(e)] = static_cast<std::uint32_t>(g.elements_.size());
          g.elements_.push_back(e);
        }
  g.identity_ = g.index_of(kIdentity);
  g.inverses_.resize(g.elements_.size());
  for (std::uint32_t i = 0; i < g.elements_.size(); ++i) g.inverses_[i] = g.index_of(gl2h::inverse(ctx, g.elements_[i]));
  return g;
}

std::uint32_t Group::multiply(std::uint32_t i, std::uint32_t j) const {
  return index_of(gl2h::multiply(ctx_, elements_[i], elements_[j]));
}

}  // namespace gl2h
