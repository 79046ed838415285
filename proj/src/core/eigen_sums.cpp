#include "core/eigen_sums.hpp"

#include <cmath>
#include <numeric>

#include "core/errors.hpp"

namespace gl2h {
namespace {

Complex unit_root(std::uint64_t numerator, std::uint64_t modulus) {
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(numerator % modulus) / static_cast<double>(modulus));
}

bool near_zero(const Complex& z) { return std::abs(z) <= kIntegralityTolerance; }

// Nontrivial scalar factor of |G|^2 (1 - pr_G): zero on U_1.
double averaging_factor(std::uint32_t p, const IrredCharacter& chi) {
  if (chi == trivial_character()) return 0.0;
  const double g = static_cast<double>(group_order(p));
  return g * g;
}

}  // namespace

std::string_view source_name(EigenSource s) {
  switch (s) {
    case EigenSource::TraceFormula: return "trace-formula";
    case EigenSource::Legendre: return "legendre";
    case EigenSource::SotoAndrade: return "soto-andrade";
    case EigenSource::VMixed: return "v-mixed";
    case EigenSource::Relation: return "relation";
    case EigenSource::MatrixRoute: return "matrix-route";
  }
  return "?";
}

ClassCounts product_class_counts(const GroupWorkspace& ws, SubgroupLabel k, SubgroupLabel h) {
  const auto& group = ws.group();
  const auto& ctx = ws.context();
  const auto& hc = ws.cosets(h);
  const auto& ks = ws.subgroup(k);
  const auto& hs = ws.subgroup(h);

  // K H is the union of the H-cosets in the K-orbit of H itself.
  std::vector<char> in_orbit(hc.size(), 0);
  const std::uint32_t base = hc.index_of(group.identity());
  for (auto x : ks.elements()) in_orbit[hc.index_of(group.multiply(x, hc.reps()[base]))] = 1;

  std::uint64_t overlap = 0;
  for (auto x : hs.elements())
    if (ks.contains(x)) ++overlap;

  ClassCounts counts;
  for (std::uint32_t g = 0; g < group.size(); ++g)
    if (in_orbit[hc.index_of(g)]) counts[classify(ctx, group[g])] += overlap;
  return counts;
}

Complex trace_pair_operator(const GroupWorkspace& ws, const CharacterTable& table, const IrredCharacter& chi,
                            SubgroupLabel h, SubgroupLabel k) {
  return trace_pair_operator(ws, table, chi, h, k, product_class_counts(ws, k, h));
}

Complex trace_pair_operator(const GroupWorkspace& ws, const CharacterTable& table, const IrredCharacter& chi,
                            SubgroupLabel h, SubgroupLabel k, const ClassCounts& counts) {
  const auto& hs = ws.subgroup(h);
  const auto& ks = ws.subgroup(k);
  std::uint64_t overlap = 0;
  for (auto x : hs.elements())
    if (ks.contains(x)) ++overlap;
  const double deg_hk = static_cast<double>(hs.order() / overlap);
  const double deg_kh = static_cast<double>(ks.order() / overlap);

  const std::size_t row = table.character_position(chi);
  Complex sum = 0.0;
  for (const auto& [cls, n] : counts) sum += static_cast<double>(n) * std::conj(table.value(row, table.class_position(cls)));
  return deg_hk / static_cast<double>(hs.order()) * (deg_kh / static_cast<double>(ks.order())) * sum;
}

int sigma_minus_one_class_count(const PrimeContext& ctx, Residue t, Residue n) {
  return 2 * (1 + ctx.legendre(static_cast<std::int64_t>(ctx.mul(t, t)) - 2 * static_cast<std::int64_t>(n)));
}

std::uint64_t sigma_minus_one_class_count(const PrimeContext& ctx, const ConjClassId& c) {
  if (c.kind == ClassKind::Scalar) return 0;
  const GroupElement r = class_representative(ctx, c);
  return static_cast<std::uint64_t>(sigma_minus_one_class_count(ctx, trace(ctx, r), determinant(ctx, r)));
}

Complex sigma_minus_one_eigen_by_classes(const PrimeContext& ctx, const IrredCharacter& chi) {
  const std::uint32_t p = ctx.p();
  Complex sum = 0.0;
  for (const auto& c : all_classes(ctx)) {
    const auto n = sigma_minus_one_class_count(ctx, c);
    if (n != 0) sum += static_cast<double>(n) * std::conj(char_value(ctx, chi, c));
  }
  // deg(N sigma_{-1} N) / |N| = ((p-1)/2) / (2 (p-1)^2).
  return sum / (4.0 * static_cast<double>(p - 1));
}

Complex legendre_sum(const PrimeContext& ctx, std::uint32_t alpha_index) {
  const std::uint32_t p = ctx.p();
  const std::uint64_t m = p - 1;
  const std::uint64_t j = alpha_index % m;
  if (j % 2 != 0 || (2 * j) % m == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "legendre_sum: alpha index " + std::to_string(alpha_index) + " is outside the W selection");
  }
  Complex sum = 0.0;
  for (Residue d = 1; d < p; ++d) {
    const int leg = ctx.legendre(1 + static_cast<std::int64_t>(ctx.mul(d, d)));
    if (leg != 0) sum += static_cast<double>(leg) * unit_root(j * ctx.dlog_fp(d), m);
  }
  return 0.5 * sum;
}

Complex soto_andrade_sum(const PrimeContext& ctx, std::uint64_t phi_index) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = p * p - 1;
  const std::uint64_t f = phi_index % m;
  const bool selected = (f * (p + 1)) % m == 0 && (f * ((p + 1) / 2)) % m != 0 && (f * (p - 1)) % m != 0;
  if (!selected) {
    throw Error(ErrorCode::InvalidArgument,
                "soto_andrade_sum: phi index " + std::to_string(phi_index) + " is outside the X selection");
  }
  Complex sum = 0.0;
  for (Residue x = 0; x < p; ++x)
    for (Residue y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      // gamma^2 + conj(gamma)^2 = 2 (x^2 + lambda y^2)
      const Residue s = ctx.mul(2, ctx.add(ctx.mul(x, x), ctx.mul(ctx.lambda(), ctx.mul(y, y))));
      const int leg = ctx.legendre(s);
      if (leg != 0) sum += static_cast<double>(leg) * unit_root(f * ctx.dlog_fp2({x, y}), m);
    }
  return -sum / (2.0 * static_cast<double>(p - 1));
}

Complex v_mixed_eigen(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.p();
  if (p % 4 != 1) throw Error(ErrorCode::InvalidArgument, "v_mixed_eigen requires p = 1 mod 4");
  double legendre_part = 0.0;
  for (Residue d = 1; d < p; ++d) legendre_part += ctx.legendre(d) * ctx.legendre(1 + static_cast<std::int64_t>(ctx.mul(d, d)));
  double cartan_part = 0.0;
  for (Residue x = 0; x < p; ++x)
    for (Residue y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      const Residue s = ctx.mul(2, ctx.add(ctx.mul(x, x), ctx.mul(ctx.lambda(), ctx.mul(y, y))));
      cartan_part += ctx.legendre(ctx.fp2_norm({x, y})) * ctx.legendre(s);
    }
  return legendre_part / 4.0 - cartan_part / (4.0 * static_cast<double>(p - 1));
}

EigenRecord sigma_minus_one_eigen(const PrimeContext& ctx, const IrredCharacter& chi) {
  const std::uint32_t p = ctx.p();
  const std::string op = "N s_-1 N";
  switch (chi.kind) {
    case IrrepKind::W:
      return {chi, op, legendre_sum(ctx, chi.first), EigenSource::Legendre};
    case IrrepKind::X:
      return {chi, op, soto_andrade_sum(ctx, chi.first), EigenSource::SotoAndrade};
    case IrrepKind::V:
      if (chi.first == (p - 1) / 2) return {chi, op, v_mixed_eigen(ctx), EigenSource::VMixed};
      break;
    case IrrepKind::U:
      if (chi.first == 0) return {chi, op, Complex(static_cast<double>(p - 1) / 2.0), EigenSource::TraceFormula};
      break;
  }
  throw Error(ErrorCode::InvalidArgument, to_string(chi) + " does not occur in C[G/N']");
}

EigenRecord lambda_nn_prime(const PrimeContext& ctx, const IrredCharacter& chi) {
  const std::uint32_t p = ctx.p();
  const auto comps = nprime_components(ctx);
  if (!std::binary_search(comps.begin(), comps.end(), chi)) {
    throw Error(ErrorCode::InvalidArgument, to_string(chi) + " does not occur in C[G/N']");
  }
  const std::string op = "NN' x N'N";
  if (chi == trivial_character()) {
    return {chi, op, Complex(static_cast<double>(static_cast<std::uint64_t>(p) * p - 1) / 4.0), EigenSource::Relation};
  }
  const Complex s = sigma_minus_one_eigen(ctx, chi).lambda;
  return {chi, op, static_cast<double>(p) - s * s, EigenSource::Relation};
}

MatrixEigenvalues::MatrixEigenvalues(const GroupWorkspace& ws, const CharacterTable& table, const CosetOperator& endo)
    : table_(&table) {
  if (endo.domain != endo.codomain) throw Error(ErrorCode::InvalidArgument, "matrix eigenvalues need an endomorphism");
  const auto& group = ws.group();
  const auto& cs = ws.cosets(endo.domain);
  class_traces_.reserve(table.classes().size());
  for (const auto& c : table.classes()) {
    const std::uint32_t r = group.index_of(class_representative(ws.context(), c));
    BigInt tr = 0;
    for (std::uint32_t i = 0; i < cs.size(); ++i) tr += endo.matrix.at(i, cs.act(group, r, i));
    class_traces_.push_back(tr.get_d());
  }
}

Complex MatrixEigenvalues::operator()(const IrredCharacter& chi) const {
  const std::size_t row = table_->character_position(chi);
  Complex sum = 0.0;
  for (std::size_t j = 0; j < class_traces_.size(); ++j)
    sum += static_cast<double>(table_->class_sizes()[j]) * std::conj(table_->value(row, j)) * class_traces_[j];
  return sum / static_cast<double>(group_order(table_->context().p()));
}

std::optional<BigInt> round_to_integer(const Complex& z) {
  const double mag = std::abs(z);
  if (!(mag < 0x1p50)) return std::nullopt;
  const double tol = std::max(kIntegralityTolerance, mag * 1e-12);
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) > tol || std::abs(z.imag()) > tol) return std::nullopt;
  return BigInt(r);
}

BigInt nprime_determinant(const GroupWorkspace& ws) {
  using L = SubgroupLabel;
  const auto eps = compose(standard_operator(ws, L::NPrime, L::N), standard_operator(ws, L::N, L::NPrime));
  return exact_determinant(eps.matrix);
}

Table2Row table2_charsum(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.p();
  Table2Row row;
  row.p = p;

  // Galois-stable families: W pairs sharing gcd(j, p-1), X orbits sharing
  // gcd(f, p^2-1). Each family's eigenvalue product is a rational integer.
  std::map<std::uint64_t, Complex> w_orbits, x_orbits;
  std::optional<Complex> v_value;
  for (const auto& chi : nprime_components(ctx)) {
    const Complex lam = lambda_nn_prime(ctx, chi).lambda;
    switch (chi.kind) {
      case IrrepKind::U:
        row.det_u = round_to_integer(lam);
        break;
      case IrrepKind::V:
        v_value = lam;
        break;
      case IrrepKind::W: {
        auto [it, fresh] = w_orbits.try_emplace(std::gcd<std::uint64_t>(chi.first, p - 1), 1.0);
        it->second *= lam;
        break;
      }
      case IrrepKind::X: {
        auto [it, fresh] = x_orbits.try_emplace(std::gcd<std::uint64_t>(chi.first, static_cast<std::uint64_t>(p) * p - 1), 1.0);
        it->second *= lam;
        break;
      }
    }
  }

  auto family = [&](const std::map<std::uint64_t, Complex>& orbits, unsigned long dim, const char* name) {
    BigInt product = 1;
    for (const auto& [key, value] : orbits) {
      auto r = round_to_integer(value);
      if (!r) {
        throw Error(ErrorCode::Internal, std::string(name) + "-orbit product at p = " + std::to_string(p) +
                                             " is not within tolerance of an integer");
      }
      product *= *r;
    }
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), product.get_mpz_t(), dim);
    return out;
  };

  if (!row.det_u) throw Error(ErrorCode::Internal, "U eigenvalue is not integral");
  row.det_w = family(w_orbits, p + 1, "W");
  row.det_x = family(x_orbits, p - 1, "X");
  if (v_value) {
    auto r = round_to_integer(*v_value);
    if (!r) throw Error(ErrorCode::Internal, "V eigenvalue is not integral at p = " + std::to_string(p));
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), r->get_mpz_t(), p);
    row.det_v = out;
  }
  return row;
}

NonvanishingReport nonvanishing_check(const PrimeContext& ctx) {
  NonvanishingReport rep;
  const double p = ctx.p();
  for (const auto& chi : nprime_components(ctx)) {
    NonvanishingReport::Entry e{chi, lambda_nn_prime(ctx, chi).lambda, std::nullopt};
    e.nonzero = !near_zero(e.lambda_nn_prime);
    if (chi != trivial_character()) {
      e.sigma_eigen = sigma_minus_one_eigen(ctx, chi).lambda;
      e.avoids_sqrt_p = !near_zero(*e.sigma_eigen * *e.sigma_eigen - p);
    }
    if (!e.nonzero || !e.avoids_sqrt_p) rep.passed = false;
    rep.entries.push_back(e);
  }
  return rep;
}

ExactnessReport exactness_hypotheses_check(const GroupWorkspace& ws, const CharacterTable& table) {
  using L = SubgroupLabel;
  ExactnessReport rep;
  const std::uint32_t p = ws.p();
  const auto nprime = nprime_components(ws.context());
  auto in_nprime = [&](const IrredCharacter& chi) { return std::binary_search(nprime.begin(), nprime.end(), chi); };

  const auto counts_bg = product_class_counts(ws, L::B, L::G);
  const auto counts_gb = product_class_counts(ws, L::G, L::B);
  const auto counts_nb = product_class_counts(ws, L::N, L::B);
  const auto counts_bn = product_class_counts(ws, L::B, L::N);
  const auto counts_nprime_n = product_class_counts(ws, L::NPrime, L::N);

  // Values are (scalar factor, eigenvalue) pairs so the zero test never sees
  // rounding noise magnified by |G|^2.
  using Scaled = std::pair<double, Complex>;
  auto is_zero = [](const Scaled& v) { return v.first == 0.0 || near_zero(v.second); };
  auto record = [&](L position, const IrredCharacter& chi, Scaled eps, Scaled delta) {
    ExactnessReport::Entry e{position, chi, eps.first * eps.second, delta.first * delta.second};
    const bool eps_zero = is_zero(eps);
    const bool delta_zero = is_zero(delta);
    e.hypothesis_holds = (!eps_zero || !delta_zero) && (eps_zero || delta_zero);
    if (!e.hypothesis_holds && rep.passed) {
      rep.passed = false;
      rep.failure = "position " + std::string(label_name(position)) + ", " + to_string(chi);
    }
    rep.entries.push_back(e);
  };

  for (const auto& [chi, mult] : decompose(ws, table, L::G)) {
    (void)mult;
    record(L::G, chi, {0.0, 0.0}, {1.0, trace_pair_operator(ws, table, chi, L::G, L::B, counts_bg)});
  }
  for (const auto& [chi, mult] : decompose(ws, table, L::B)) {
    (void)mult;
    record(L::B, chi, {1.0, trace_pair_operator(ws, table, chi, L::B, L::G, counts_gb)},
           {averaging_factor(p, chi), trace_pair_operator(ws, table, chi, L::B, L::N, counts_nb)});
  }
  for (const auto& [chi, mult] : decompose(ws, table, L::N)) {
    (void)mult;
    const Complex delta = in_nprime(chi) ? lambda_nn_prime(ws.context(), chi).lambda
                                         : trace_pair_operator(ws, table, chi, L::N, L::NPrime, counts_nprime_n);
    record(L::N, chi, {averaging_factor(p, chi), trace_pair_operator(ws, table, chi, L::N, L::B, counts_bn)},
           {1.0, delta});
  }
  for (const auto& [chi, mult] : decompose(ws, table, L::NPrime)) {
    (void)mult;
    record(L::NPrime, chi, {1.0, lambda_nn_prime(ws.context(), chi).lambda}, {0.0, 0.0});
  }
  return rep;
}

}  // namespace gl2h
