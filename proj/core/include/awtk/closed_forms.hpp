#pragma once

#include <map>
#include <vector>

#include "awtk/solver.hpp"

namespace awtk {

class ResultStore;

/// The m with 7*3^(m-2)+1 <= n <= 21*3^(m-2). These windows cover every
/// n >= 2 except n = 3, which gets m = 1 (3 = 3^1). Throws for n < 2.
int m_of(long long n);

/// Closed form for aw([n],3): m+2 when n is a power of 3, m+3 otherwise,
/// with f(1) = 2.
int f(long long n);

/// Smallest j with 3^j >= n, in integer arithmetic. Requires n >= 1.
int ceil_log3(long long n);

struct Log3Bound {
  int bound = 0;
  bool tight = false;  // n = 3^j or 2*3^j with j >= 1
};
Log3Bound log3_bound(long long n);

struct PrimePower {
  long long prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  long long n = 0;
  int exponent_of_2 = 0;
  std::vector<PrimePower> odd_factors;  // ascending primes
  /// aw(Z_p,3) per odd prime factor; filled by classify().
  std::map<long long, int> classification;
};

/// Trial division; requires 1 <= n <= 10^12 or so.
Factorization factorize(long long n);

bool is_prime(long long n);

inline constexpr long long kDefaultPrimeLimit = 100;

/// aw(Z_p,3) for an odd prime p <= limit, by exact search. Results are
/// memoized in process and, when `store` is given, read from and written to
/// it. Throws Unclassified for p > limit, std::invalid_argument if p is not
/// an odd prime.
int classify_prime(long long p, long long limit = kDefaultPrimeLimit,
                   ResultStore* store = nullptr, const SolverOptions& options = {});

/// Fill in the classification of every odd prime factor.
void classify(Factorization& fac, long long limit = kDefaultPrimeLimit,
              ResultStore* store = nullptr, const SolverOptions& options = {});

/// aw(Z_n,3) from the prime decomposition of n (n >= 2). Propagates
/// Unclassified from classify_prime.
int aw_zn3(long long n, long long limit = kDefaultPrimeLimit,
           ResultStore* store = nullptr, const SolverOptions& options = {});
int aw_zn3(const Factorization& classified);

void clear_classification_cache();

}  // namespace awtk
