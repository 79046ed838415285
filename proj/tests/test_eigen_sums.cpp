#include <doctest.h>

#include "core/errors.hpp"
#include "core/eigen_sums.hpp"
#include "core/suite.hpp"
#include "support/oracles.hpp"

using namespace gl2h;
using L = SubgroupLabel;

namespace {

bool near(const Complex& a, const Complex& b) { return std::abs(a - b) < kIntegralityTolerance; }

CosetOperator pair_op(const GroupWorkspace& ws, L h, L k) {
  return compose(standard_operator(ws, h, k), standard_operator(ws, k, h));
}

}  // namespace

TEST_CASE("sigma_{-1} N class counts match enumeration") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const auto& ctx = ws.context();
    const auto census = oracle::sigma_minus_one_census(ws);
    for (const auto& c : all_classes(ctx)) {
      const auto it = census.find(c);
      const std::uint64_t brute = it == census.end() ? 0 : it->second;
      INFO(p << " " << to_string(c));
      CHECK(sigma_minus_one_class_count(ctx, c) == brute);
    }
  }
  const auto ctx = PrimeContext::build(7);
  CHECK(sigma_minus_one_class_count(ctx, 0, 2) == 0);  // -4 = 3 is a non-residue mod 7
  CHECK(sigma_minus_one_class_count(ctx, 2, 2) == 2);  // t^2 - 2n = 0
}

TEST_CASE("trace formula against direct sums and the matrix route") {
  const L labels[] = {L::G, L::B, L::N, L::NPrime};
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const CharacterTable t(ws.context());
    for (auto h : labels)
      for (auto k : labels) {
        if (h == k) continue;
        const MatrixEigenvalues me(ws, t, pair_op(ws, h, k));
        const auto on_h = decompose(ws, t, h);
        for (const auto& chi : t.characters()) {
          const auto lam = trace_pair_operator(ws, t, chi, h, k);
          INFO(p << " " << label_name(h) << label_name(k) << " " << to_string(chi));
          if (on_h.count(chi)) {
            CHECK(near(lam, me(chi)));
          } else {
            CHECK(near(lam, 0.0));
          }
          // symmetry of traces under swapping H and K
          const double dim = static_cast<double>(dimension(p, chi));
          const auto on_k = decompose(ws, t, k);
          if (on_h.count(chi) && on_k.count(chi)) CHECK(near(dim * lam, dim * trace_pair_operator(ws, t, chi, k, h)));
        }
      }
  }
}

TEST_CASE("direct element sum over K x H agrees with the census") {
  const GroupWorkspace ws(PrimeContext::build(5));
  const auto& group = ws.group();
  const CharacterTable t(ws.context());
  for (const auto& chi : t.characters()) {
    Complex brute = 0.0;
    for (auto k : ws.subgroup(L::N).elements())
      for (auto h : ws.subgroup(L::B).elements())
        brute += std::conj(char_value(ws.context(), chi, classify(ws.context(), group[group.multiply(k, h)])));
    const double scale = (static_cast<double>(degree(ws, L::B, group.identity(), L::N)) / ws.subgroup(L::B).order()) *
                         (static_cast<double>(degree(ws, L::N, group.identity(), L::B)) / ws.subgroup(L::N).order());
    CHECK(near(scale * brute, trace_pair_operator(ws, t, chi, L::B, L::N)));
  }
}

TEST_CASE("closed-form eigenvalues") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const CharacterTable t(ws.context());
    const double q = p;
    CHECK(near(trace_pair_operator(ws, t, trivial_character(), L::G, L::B), q + 1));
    CHECK(near(trace_pair_operator(ws, t, trivial_character(), L::B, L::N), 2 * q));
    // Both routes put V_1 on BN x NB at p - 1.
    CHECK(near(trace_pair_operator(ws, t, steinberg_character(), L::B, L::N), q - 1));
    CHECK(near(MatrixEigenvalues(ws, t, pair_op(ws, L::B, L::N))(steinberg_character()), q - 1));
    CHECK(near(trace_pair_operator(ws, t, trivial_character(), L::N, L::NPrime), (q * q - 1) / 4));
  }
  CHECK(lambda_nn_prime(PrimeContext::build(7), trivial_character()).lambda == Complex(12.0));
  CHECK(lambda_nn_prime(PrimeContext::build(19), trivial_character()).lambda == Complex(90.0));
}

TEST_CASE("Legendre sums") {
  const auto ctx3 = PrimeContext::build(3);
  for (std::uint32_t j = 0; j < 2; ++j) CHECK_THROWS_AS(legendre_sum(ctx3, j), Error);
  const auto ctx7 = PrimeContext::build(7);
  // order-3 characters of F_7^x: indices 2 and 4
  for (std::uint32_t j : {2u, 4u}) {
    const auto lam = legendre_sum(ctx7, j);
    CHECK(near(lam, 2.0));
    const IrredCharacter w{IrrepKind::W, 2, 4};
    CHECK(near(lambda_nn_prime(ctx7, w).lambda, 3.0));
  }
  CHECK_THROWS_AS(legendre_sum(ctx7, 3), Error);
  for (std::uint32_t p : {13u, 17u, 29u}) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint32_t j = 2; j < p - 1; j += 2) {
      if (2 * j == p - 1) continue;
      CHECK(std::abs(legendre_sum(ctx, j).imag()) < kImaginaryTolerance);
    }
  }
}

TEST_CASE("Soto-Andrade sums") {
  const auto ctx3 = PrimeContext::build(3);
  const auto lam = soto_andrade_sum(ctx3, 2);
  CHECK(std::abs(lam.imag()) < kImaginaryTolerance);
  CHECK(near(3.0 - lam * lam, 2.0));  // component determinant 2^2
  CHECK_THROWS_AS(soto_andrade_sum(ctx3, 4), Error);  // phi^{(p+1)/2} = 1
  CHECK_THROWS_AS(soto_andrade_sum(ctx3, 1), Error);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto ctx = PrimeContext::build(p);
    for (const auto& chi : nprime_components(ctx))
      if (chi.kind == IrrepKind::X) CHECK(std::abs(soto_andrade_sum(ctx, chi.first).imag()) < kImaginaryTolerance);
  }
}

TEST_CASE("V component eigenvalue") {
  CHECK_THROWS_AS(v_mixed_eigen(PrimeContext::build(7)), Error);
  for (std::uint32_t p : {5u, 13u, 17u, 29u}) {
    const auto lam = v_mixed_eigen(PrimeContext::build(p));
    CHECK(std::abs(lam.imag()) < kImaginaryTolerance);
    CHECK(std::abs(lam.real() - std::round(lam.real())) < kIntegralityTolerance);
  }
  CHECK(near(lambda_nn_prime(PrimeContext::build(5), IrredCharacter{IrrepKind::V, 2, 0}).lambda, 4.0));
}

TEST_CASE("sum route agrees with class-grouped sums and the matrix route") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const auto& ctx = ws.context();
    const CharacterTable t(ctx);
    const auto s = double_coset_operator(ws, L::N, ws.group().index_of(sigma(ctx, -1)), L::N);
    const MatrixEigenvalues by_matrix(ws, t, s);
    const MatrixEigenvalues nn(ws, t, pair_op(ws, L::N, L::NPrime));
    for (const auto& chi : nprime_components(ctx)) {
      INFO(p << " " << to_string(chi));
      const auto rec = sigma_minus_one_eigen(ctx, chi);
      CHECK(near(rec.lambda, sigma_minus_one_eigen_by_classes(ctx, chi)));
      CHECK(near(rec.lambda, by_matrix(chi)));
      CHECK(near(lambda_nn_prime(ctx, chi).lambda, nn(chi)));
    }
  }
}

TEST_CASE("lambda_nn_prime rejects characters outside C[G/N']") {
  CHECK_THROWS_AS(lambda_nn_prime(PrimeContext::build(5), steinberg_character()), Error);
}

TEST_CASE("rounding") {
  CHECK(round_to_integer(Complex(4.0000001, 0.0)) == BigInt(4));
  CHECK_FALSE(round_to_integer(Complex(4.01, 0.0)).has_value());
  CHECK_FALSE(round_to_integer(Complex(4.0, 0.1)).has_value());
  CHECK(round_to_integer(Complex(-3.0, 1e-12)) == BigInt(-3));
}

TEST_CASE("component determinants reproduce the published table") {
  for (auto p : kTable2Primes) {
    const auto row = table2_charsum(PrimeContext::build(p));
    const auto ref = *reference_row(p);
    INFO(p);
    CHECK(*row.det_u == expand(ref.u));
    CHECK(*row.det_w == expand(ref.w));
    CHECK(*row.det_x == expand(ref.x));
    CHECK(row.det_v.has_value() == ref.v.has_value());
    if (row.det_v) CHECK(*row.det_v == expand(*ref.v));
  }
}

TEST_CASE("non-vanishing") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    const auto rep = nonvanishing_check(PrimeContext::build(p));
    CHECK(rep.passed);
    CHECK(rep.entries.size() == nprime_components(PrimeContext::build(p)).size());
  }
}

TEST_CASE("exactness hypotheses") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GroupWorkspace ws(PrimeContext::build(p));
    const CharacterTable t(ws.context());
    const auto rep = exactness_hypotheses_check(ws, t);
    INFO(rep.failure);
    CHECK(rep.passed);
    const double g2 = static_cast<double>(group_order(p)) * static_cast<double>(group_order(p));
    for (const auto& e : rep.entries) {
      if (e.position == L::B && e.character == steinberg_character()) {
        CHECK(std::abs(e.lambda_eps) < kIntegralityTolerance);
        CHECK(std::abs(e.lambda_delta - Complex(g2 * (p - 1))) < 1e-3);
      }
      if (e.position == L::G) CHECK(near(e.lambda_delta, p + 1.0));
      if (e.position == L::N) {
        const bool in_nprime = std::ranges::binary_search(nprime_components(ws.context()), e.character);
        CHECK((std::abs(e.lambda_eps) > kIntegralityTolerance) == (e.character == steinberg_character()));
        CHECK((std::abs(e.lambda_delta) > kIntegralityTolerance) == in_nprime);
      }
    }
  }
}
