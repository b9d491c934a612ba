#include "fsieve/arith/factor.hpp"
#include "fsieve/arith/kronecker.hpp"
#include "fsieve/arith/number_field.hpp"
#include "fsieve/arith/quadratic.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <doctest.h>

#include <random>

using namespace fsieve;

namespace {

// Legendre symbol by Euler's criterion.
int euler_legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = powmod(mod(a, p), static_cast<std::uint64_t>((p - 1) / 2), p);
  return r == 0 ? 0 : r == 1 ? 1 : -1;
}

// Norm as the determinant of multiplication-by-alpha on the power basis.
Rational det_norm(const NfElem& alpha) {
  const int n = alpha.field->degree();
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> M(n, n);
  NfElem basis = NfElem::rational(alpha.field, 1);
  NfElem x = NfElem::generator(alpha.field);
  for (int j = 0; j < n; ++j) {
    NfElem col = alpha * basis;
    for (int i = 0; i < n; ++i) M(i, j) = col.coords[static_cast<std::size_t>(i)];
    basis = basis * x;
  }
  return M.fullPivLu().determinant();
}

NfElem random_elem(const NumberFieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> c;
  for (int i = 0; i < f->degree(); ++i) c.emplace_back(dist(rng), 1 + (dist(rng) + 9) % 4);
  return {f, c};
}

}  // namespace

TEST_CASE("kronecker: examples and Euler criterion") {
  CHECK(kronecker(1, 7) == 1);
  CHECK(kronecker(3, 5) == -1);
  CHECK(kronecker(26 * 78, 11) == kronecker(3, 11));
  CHECK(kronecker(2, 8) == 0);
  CHECK(kronecker(-1, -1) == -1);
  for (std::int64_t p : primes_up_to(300)) {
    if (p == 2) continue;
    for (std::int64_t a = -40; a <= 40; ++a) CHECK(kronecker(a, p) == euler_legendre(a, p));
  }
}

TEST_CASE("kronecker: multiplicativity on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 10000; ++i) {
    std::int64_t a = dist(rng), b = dist(rng), n = dist(rng);
    if (n == 0) n = 1;
    CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
    std::int64_t m = dist(rng);
    if (m == 0) m = 3;
    CHECK(kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m));
  }
}

TEST_CASE("factor: examples and recomposition") {
  CHECK(factor(27) == Factorization{{3, 3}});
  CHECK(factor(46656) == Factorization{{2, 6}, {3, 6}});
  CHECK(factor(32768) == Factorization{{2, 15}});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Integer n = Integer(rng() >> (i % 40)) * Integer(rng() % 1000003 + 1);
    if (n == 0) continue;
    Integer back = 1;
    for (const auto& pp : factor(n)) {
      CHECK(is_probable_prime(pp.prime));
      back *= ipow(pp.prime, pp.exponent);
    }
    CHECK(back == n);
  }
  Integer semi = Integer("1000000007") * Integer("998244353");
  auto f = factor(semi);
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == Integer("998244353"));
}

TEST_CASE("factor: incomplete factorization is reported") {
  FactorOptions tight;
  tight.rho_budget = 4;
  Integer semi = Integer("1000000007") * Integer("998244353");
  CHECK_THROWS_AS(factor(semi, tight), FactorizationIncomplete);
}

TEST_CASE("splitting_type: examples") {
  CHECK(splitting_type(3, 5).kind == SplitKind::split);
  CHECK(splitting_type(2, 11).kind == SplitKind::inert);
  CHECK(splitting_type(5, 5).kind == SplitKind::ramified);
  CHECK(splitting_type(2, 5).kind == SplitKind::ramified);
  CHECK(splitting_type(2, 7).kind == SplitKind::split);
  CHECK(splitting_type(3, 7).kind == SplitKind::inert);
  for (std::int64_t d : {1, 2, 3, 5, 6, 7, 11, 13, 15, 19}) {
    for (std::int64_t ell : primes_up_to(200)) {
      auto P = splitting_type(ell, d);
      CHECK((P.residue_degree == 2) == (P.kind == SplitKind::inert));
      if (P.kind == SplitKind::split && ell > 2) {
        CHECK(mod(*P.root * *P.root + d, ell) == 0);
        CHECK(2 * *P.root < ell);
      }
    }
  }
}

TEST_CASE("reduce_quad: examples") {
  auto P3 = splitting_type(3, 5);
  CHECK(reduce_quad(QuadElem::rational(7, 5), P3).a == 1);
  CHECK(reduce_quad(QuadElem::sqrt_minus_d(5), P3, false).a == 1);
  CHECK(reduce_quad(QuadElem::sqrt_minus_d(5), P3, true).a == 2);
  auto P2 = splitting_type(2, 11);
  FqElem t = reduce_quad(QuadElem::sqrt_minus_d(11), P2);
  CHECK(t * t == FqElem(t.field, 1));
  CHECK_THROWS_AS(reduce_quad(QuadElem(Rational(1, 3), 0, 5), P3), Error);
}

TEST_CASE("reduce_quad is a ring homomorphism") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (std::int64_t d : {1, 2, 5, 7, 11, 15, 19}) {
    for (std::int64_t ell : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
      for (auto& P : primes_above(ell, d)) {
        for (int i = 0; i < 30; ++i) {
          // Half-integral coordinates are allowed where omega is.
          int den = mod(-d, 4) == 1 && ell != 2 ? 2 : 1;
          int a = dist(rng), b = dist(rng), c = dist(rng), e = dist(rng);
          if (den == 2) {
            b = a % 2 == 0 ? 2 * (b / 2) : 2 * (b / 2) + 1;
            e = c % 2 == 0 ? 2 * (e / 2) : 2 * (e / 2) + 1;
          }
          QuadElem z(Rational(a, den), Rational(b, den), d), w(Rational(c, den), Rational(e, den), d);
          if (ell == 2 && mod(-d, 4) == 1) {
            z = QuadElem(Rational(a, 2), Rational(a + 2 * b, 2), d);
            w = QuadElem(Rational(c, 2), Rational(c + 2 * e, 2), d);
          }
          CHECK(reduce_quad(z * w, P) == reduce_quad(z, P) * reduce_quad(w, P));
          CHECK(reduce_quad(z + w, P) == reduce_quad(z, P) + reduce_quad(w, P));
        }
      }
    }
  }
}

TEST_CASE("valuation at primes of K") {
  // 2 = p2 * p2bar in Q(sqrt(-7)); omega = (1 + sqrt(-7))/2 has norm 2.
  auto ps = primes_above(2, 7);
  QuadElem omega(Rational(1, 2), Rational(1, 2), 7);
  CHECK(valuation(omega, ps[0]) + valuation(omega, ps[1]) == 1);
  CHECK(valuation(omega, ps[0]) == 1);
  QuadElem twice = QuadElem::rational(2, 7) * omega;
  CHECK(valuation(twice, ps[0]) == 2);
  CHECK(valuation(twice, ps[1]) == 1);
  CHECK(valuation(QuadElem(181, 1, 7), ps[0]) + valuation(QuadElem(181, 1, 7), ps[1]) == 15);
  auto p5 = primes_above(5, 5);
  CHECK(valuation(QuadElem::rational(5, 5), p5[0]) == 2);
  CHECK(valuation(QuadElem::sqrt_minus_d(5), p5[0]) == 1);
  CHECK(valuation(QuadElem::rational(Rational(1, 9), 5), primes_above(3, 5)[0]) == -2);
}

TEST_CASE("sqrt_in_field") {
  QuadElem z(3, 2, 5);
  auto r = sqrt_in_field(z * z);
  REQUIRE(r);
  CHECK(*r * *r == z * z);
  CHECK(!sqrt_in_field(QuadElem(2, 0, 5)));
  auto s = sqrt_in_field(QuadElem(-5, 0, 5));
  REQUIRE(s);
  CHECK(*s == QuadElem::sqrt_minus_d(5));
}

TEST_CASE("QuadElem: conjugation and norm") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-30, 30);
  for (int i = 0; i < 200; ++i) {
    QuadElem z(Rational(dist(rng), 1 + i % 5), dist(rng), 1 + i % 19);
    CHECK(conj(conj(z)) == z);
    CHECK((z * conj(z)) == QuadElem::rational(norm(z), z.d));
    CHECK(norm(z) >= 0);
    CHECK((norm(z) == 0) == z.is_zero());
  }
}

TEST_CASE("finite fields: group order and Frobenius") {
  std::mt19937_64 rng(9);
  for (std::int64_t p : {2, 3, 5, 7, 13, 19}) {
    for (auto f : {FiniteField::prime(p), FiniteField::quadratic(p)}) {
      for (int i = 0; i < 30; ++i) {
        FqElem x = FqElem::from_index(f, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.order())));
        if (x.is_zero()) continue;
        CHECK(pow(x, static_cast<std::uint64_t>(f.order() - 1)) == FqElem::one(f));
        CHECK(x * inverse(x) == FqElem::one(f));
        CHECK(frobenius(x) == pow(x, static_cast<std::uint64_t>(p)));
      }
    }
  }
}

TEST_CASE("nf_norm: examples and oracles") {
  auto f = make_number_field({Integer(-3), Integer(0), Integer(1)});
  CHECK(nf_norm(NfElem::generator(f)) == -3);
  CHECK(nf_norm(NfElem::rational(f, 2)) == 4);
  std::mt19937_64 rng(13);
  std::vector<NumberFieldPtr> fields{
      f, make_number_field({Integer(1), Integer(1), Integer(1)}),
      make_number_field({Integer(2), Integer(-1), Integer(0), Integer(1)}),
      make_number_field({Integer(5), Integer(0), Integer(-3), Integer(0), Integer(1)}),
      make_number_field({Integer(1), Integer(0), Integer(0), Integer(0), Integer(0), Integer(0), Integer(0), Integer(0), Integer(1)})};
  for (const auto& F : fields) {
    for (int i = 0; i < 20; ++i) {
      NfElem a = random_elem(F, rng), b = random_elem(F, rng);
      CHECK(nf_norm(a * b) == nf_norm(a) * nf_norm(b));
      CHECK(nf_norm(a) == det_norm(a));
    }
    CHECK(nf_norm(NfElem::rational(F, Rational(3, 2))) == rpow(Rational(3, 2), static_cast<unsigned>(F->degree())));
  }
}

TEST_CASE("nf_norm agrees with the product of embeddings") {
  std::mt19937_64 rng(17);
  auto f = make_number_field({Integer(7), Integer(-3), Integer(1)});
  PrecisionScope scope(60);
  for (int i = 0; i < 20; ++i) {
    NfElem a = random_elem(f, rng);
    auto e = embeddings(a, 50);
    REQUIRE(e.size() == 2);
    Real re = e[0].re * e[1].re - e[0].im * e[1].im;
    Real im = e[0].re * e[1].im + e[0].im * e[1].re;
    Real exact(nf_norm(a));
    CHECK(abs(re - exact) <= Real("1e-20") * abs(exact));
    CHECK(abs(im) <= Real("1e-20") * abs(exact));
  }
}
