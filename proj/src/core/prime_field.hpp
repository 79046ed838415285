#pragma once

// Arithmetic in F_p and in the quadratic extension F_{p^2} = F_p[sqrt(lambda)],
// with the canonical choices (least non-residue, least primitive roots) that
// make every downstream enumeration reproducible.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace gl2h {

using Residue = std::uint32_t;

// Largest prime accepted by build_context. The lookup tables are O(p^2).
inline constexpr std::uint32_t kMaxSupportedPrime = 1999;

bool is_prime(std::uint64_t n);

// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// x + y*sqrt(lambda), both coordinates reduced to [0, p-1].
struct Fp2Element {
  Residue x = 0;
  Residue y = 0;
  friend auto operator<=>(const Fp2Element&, const Fp2Element&) = default;
};

class PrimeContext {
 public:
  /// Throws Error(UnsupportedPrime) for p = 2, composite p, or p above
  /// kMaxSupportedPrime.
  static PrimeContext build(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  Residue lambda() const { return lambda_; }
  Residue gen_fp() const { return gen_fp_; }
  Fp2Element gen_fp2() const { return gen_fp2_; }

  // F_p. Inputs must already be reduced unless stated otherwise.
  Residue reduce(std::int64_t a) const;
  Residue add(Residue a, Residue b) const { return static_cast<Residue>((a + b) % p_); }
  Residue sub(Residue a, Residue b) const { return static_cast<Residue>((a + p_ - b) % p_); }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  Residue inv(Residue a) const;  // a != 0
  int legendre(std::int64_t a) const;
  /// Least square root r (r <= p - r) of a, if a is a square.
  std::optional<Residue> sqrt(Residue a) const;

  // F_{p^2}.
  Fp2Element fp2_embed(Residue a) const { return {a, 0}; }
  Fp2Element fp2_add(Fp2Element u, Fp2Element v) const { return {add(u.x, v.x), add(u.y, v.y)}; }
  Fp2Element fp2_sub(Fp2Element u, Fp2Element v) const { return {sub(u.x, v.x), sub(u.y, v.y)}; }
  Fp2Element fp2_mul(Fp2Element u, Fp2Element v) const;
  Fp2Element fp2_conj(Fp2Element u) const { return {u.x, neg(u.y)}; }
  Fp2Element fp2_pow(Fp2Element u, std::uint64_t e) const;
  Fp2Element fp2_inv(Fp2Element u) const;  // u != 0
  Residue fp2_norm(Fp2Element u) const;
  Residue fp2_trace(Fp2Element u) const { return add(u.x, u.x); }
  bool fp2_is_zero(Fp2Element u) const { return u.x == 0 && u.y == 0; }

  /// k with gen_fp^k = a, k in [0, p-1).
  std::uint32_t dlog_fp(Residue a) const;
  /// k with gen_fp2^k = u, k in [0, p^2-1).
  std::uint32_t dlog_fp2(Fp2Element u) const;

 private:
  struct Tables {
    std::vector<std::int32_t> sqrt_of;     // -1 for non-squares
    std::vector<std::uint32_t> dlog_fp;    // index a
    std::vector<std::uint32_t> dlog_fp2;   // index x*p + y
  };

  PrimeContext() = default;

  std::uint32_t p_ = 0;
  Residue lambda_ = 0;
  Residue gen_fp_ = 0;
  Fp2Element gen_fp2_{};
  std::shared_ptr<const Tables> tables_;
};

}  // namespace gl2h
