#include "core/prime_field.hpp"

#include <string>

#include "core/errors.hpp"

namespace gl2h {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeContext PrimeContext::build(std::uint32_t p) {
  if (p == 2) throw Error(ErrorCode::UnsupportedPrime, "p = 2 is not supported (characteristic 2)");
  if (!is_prime(p)) throw Error(ErrorCode::UnsupportedPrime, std::to_string(p) + " is not an odd prime");
  if (p > kMaxSupportedPrime) {
    throw Error(ErrorCode::UnsupportedPrime,
                "p = " + std::to_string(p) + " exceeds the supported maximum " + std::to_string(kMaxSupportedPrime));
  }

  PrimeContext ctx;
  ctx.p_ = p;
  auto tables = std::make_shared<Tables>();

  tables->sqrt_of.assign(p, -1);
  for (Residue r = 0; r <= p / 2; ++r) {
    Residue sq = ctx.mul(r, r);
    if (tables->sqrt_of[sq] < 0) tables->sqrt_of[sq] = static_cast<std::int32_t>(r);
  }
  for (Residue l = 2; l < p; ++l) {
    if (tables->sqrt_of[l] < 0) {
      ctx.lambda_ = l;
      break;
    }
  }

  const auto fp_factors = prime_factors(p - 1);
  for (Residue g = 1; g < p; ++g) {
    bool generates = true;
    for (auto q : fp_factors) {
      if (ctx.pow(g, (p - 1) / q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      ctx.gen_fp_ = g;
      break;
    }
  }

  const std::uint64_t order2 = static_cast<std::uint64_t>(p) * p - 1;
  const auto fp2_factors = prime_factors(order2);
  bool found = false;
  for (Residue x = 0; x < p && !found; ++x) {
    for (Residue y = 0; y < p && !found; ++y) {
      Fp2Element u{x, y};
      if (ctx.fp2_is_zero(u)) continue;
      bool generates = true;
      for (auto q : fp2_factors) {
        if (ctx.fp2_pow(u, order2 / q) == Fp2Element{1, 0}) {
          generates = false;
          break;
        }
      }
      if (generates) {
        ctx.gen_fp2_ = u;
        found = true;
      }
    }
  }

  tables->dlog_fp.assign(p, 0);
  Residue acc = 1;
  for (std::uint32_t k = 0; k + 1 < p; ++k) {
    tables->dlog_fp[acc] = k;
    acc = ctx.mul(acc, ctx.gen_fp_);
  }

  tables->dlog_fp2.assign(static_cast<std::size_t>(p) * p, 0);
  Fp2Element u{1, 0};
  for (std::uint64_t k = 0; k < order2; ++k) {
    tables->dlog_fp2[static_cast<std::size_t>(u.x) * p + u.y] = static_cast<std::uint32_t>(k);
    u = ctx.fp2_mul(u, ctx.gen_fp2_);
  }

  ctx.tables_ = std::move(tables);
  return ctx;
}

Residue PrimeContext::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue PrimeContext::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeContext::inv(Residue a) const { return pow(a, p_ - 2); }

int PrimeContext::legendre(std::int64_t a) const {
  Residue r = reduce(a);
  if (r == 0) return 0;
  if (tables_) return tables_->sqrt_of[r] >= 0 ? 1 : -1;
  return pow(r, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<Residue> PrimeContext::sqrt(Residue a) const {
  std::int32_t r = tables_->sqrt_of[a % p_];
  if (r < 0) return std::nullopt;
  return static_cast<Residue>(r);
}

Fp2Element PrimeContext::fp2_mul(Fp2Element u, Fp2Element v) const {
  return {add(mul(u.x, v.x), mul(lambda_, mul(u.y, v.y))), add(mul(u.x, v.y), mul(u.y, v.x))};
}

Fp2Element PrimeContext::fp2_pow(Fp2Element u, std::uint64_t e) const {
  Fp2Element result{1, 0};
  while (e > 0) {
    if (e & 1) result = fp2_mul(result, u);
    u = fp2_mul(u, u);
    e >>= 1;
  }
  return result;
}

Residue PrimeContext::fp2_norm(Fp2Element u) const {
  return sub(mul(u.x, u.x), mul(lambda_, mul(u.y, u.y)));
}

Fp2Element PrimeContext::fp2_inv(Fp2Element u) const {
  Residue n_inv = inv(fp2_norm(u));
  Fp2Element c = fp2_conj(u);
  return {mul(c.x, n_inv), mul(c.y, n_inv)};
}

std::uint32_t PrimeContext::dlog_fp(Residue a) const { return tables_->dlog_fp[a]; }

std::uint32_t PrimeContext::dlog_fp2(Fp2Element u) const {
  return tables_->dlog_fp2[static_cast<std::size_t>(u.x) * p_ + u.y];
}

}  // namespace gl2h
