#include "fsieve/arith/factor.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <random>

namespace fsieve {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1u) r = mul64(r, b, m);
    b = mul64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit n with this base set.
bool is_prime64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant of Pollard rho; returns a nontrivial divisor or 0.
u64 brent64(u64 n, std::mt19937_64& rng, u64 budget) {
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<u64> dist(1, n - 1);
  u64 spent = 0;
  while (spent < budget) {
    u64 y = dist(rng), c = dist(rng), g = 1, q = 1, x = 0, ys = 0;
    const u64 m = 128;
    for (u64 r = 1; g == 1 && spent < budget; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mul64(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mul64(y, y, n) + c) % n;
          q = mul64(q, x > y ? x - y : y - x, n);
        }
        g = gcd64(q, n);
        spent += m;
      }
    }
    if (g == n) {
      do {
        ys = (mul64(ys, ys, n) + c) % n;
        g = gcd64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

Integer brent_big(const Integer& n, std::mt19937_64& rng, u64 budget) {
  std::uniform_int_distribution<u64> dist(1, ~0ull >> 1);
  u64 spent = 0;
  while (spent < budget) {
    Integer y = Integer(dist(rng)) % n, c = Integer(dist(rng)) % n, g = 1, q = 1, x, ys;
    const u64 m = 128;
    for (u64 r = 1; g == 1 && spent < budget; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        spent += m;
      }
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

const Integer kU64Max = Integer(~0ull);

void split(const Integer& n, std::map<Integer, unsigned>& acc, std::vector<Integer>& stuck,
           std::mt19937_64& rng, const FactorOptions& options) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++acc[n];
    return;
  }
  Integer d;
  if (n <= kU64Max) {
    d = Integer(brent64(n.convert_to<u64>(), rng, options.rho_budget));
  } else {
    d = brent_big(n, rng, options.rho_budget);
  }
  if (d == 0) {
    stuck.push_back(n);
    return;
  }
  split(d, acc, stuck, rng, options);
  split(n / d, acc, stuck, rng, options);
}

std::atomic<std::uint64_t> g_seed{0x5eed};

}  // namespace

std::uint64_t default_factor_seed() { return g_seed.load(); }
void set_default_factor_seed(std::uint64_t seed) { g_seed.store(seed); }

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  if (n <= kU64Max) return is_prime64(n.convert_to<u64>());
  return boost::multiprecision::miller_rabin_test(n, 32);
}

Factorization factor(const Integer& n, const FactorOptions& options) {
  require(n != 0, ErrorKind::InvalidArgument, "factor(0)");
  Integer m = abs(n);
  std::map<Integer, unsigned> acc;
  for (u64 p = 2; p <= options.trial_bound && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      m /= p;
      ++acc[Integer(p)];
    }
  }
  std::vector<Integer> stuck;
  std::mt19937_64 rng(options.seed);
  split(m, acc, stuck, rng, options);

  Factorization out;
  for (auto& [p, e] : acc) out.push_back({p, e});
  if (!stuck.empty()) {
    Integer cof = 1;
    for (const auto& s : stuck) cof *= s;
    throw FactorizationIncomplete(std::move(out), cof);
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n, const FactorOptions& options) {
  std::vector<Integer> out;
  for (auto& pp : factor(n, options)) out.push_back(pp.prime);
  return out;
}

}  // namespace fsieve
