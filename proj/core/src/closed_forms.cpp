#include "awtk/closed_forms.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "awtk/errors.hpp"
#include "awtk/group.hpp"
#include "awtk/result_store.hpp"

namespace awtk {

namespace {

bool is_power_of_3(long long n) {
  if (n < 1) return false;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

std::mutex classification_mutex;
std::map<long long, int> classification_cache;

}  // namespace

int m_of(long long n) {
  if (n < 2) throw std::invalid_argument("m_of requires n >= 2");
  if (n == 3) return 1;
  // 7*3^(m-2)+1 <= n <= 21*3^(m-2), scaled by 9: 7*3^m + 9 <= 9n <= 21*3^m.
  long long p = 1;
  for (int m = 0;; ++m, p *= 3) {
    if (7 * p + 9 <= 9 * n && 9 * n <= 21 * p) return m;
    if (7 * p + 9 > 9 * n) break;
  }
  throw std::logic_error("no window contains n = " + std::to_string(n));
}

int f(long long n) {
  if (n < 1) throw std::invalid_argument("f requires n >= 1");
  if (n == 1) return 2;
  return m_of(n) + (is_power_of_3(n) ? 2 : 3);
}

int ceil_log3(long long n) {
  if (n < 1) throw std::invalid_argument("ceil_log3 requires n >= 1");
  int j = 0;
  for (long long p = 1; p < n; p *= 3) ++j;
  return j;
}

Log3Bound log3_bound(long long n) {
  if (n < 3) throw std::invalid_argument("log3_bound requires n >= 3");
  long long odd = n % 2 == 0 ? n / 2 : n;
  return {ceil_log3(n) + 2, odd > 1 && is_power_of_3(odd)};
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  Factorization fac;
  fac.n = n;
  while (n % 2 == 0) {
    n /= 2;
    ++fac.exponent_of_2;
  }
  for (long long p = 3; p * p <= n; p += 2) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) fac.odd_factors.push_back({p, e});
  }
  if (n > 1) fac.odd_factors.push_back({n, 1});
  return fac;
}

int classify_prime(long long p, long long limit, ResultStore* store,
                   const SolverOptions& options) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
  if (p > limit) throw Unclassified(p, limit);
  {
    std::lock_guard lock(classification_mutex);
    if (auto it = classification_cache.find(p); it != classification_cache.end()) {
      return it->second;
    }
  }
  int value = 0;
  if (store) {
    if (auto hit = store->get(GroupKind::Cyclic, p, 3, false)) value = hit->aw_value;
  }
  if (value == 0) {
    const auto g = GroupInstance::cyclic(p);
    SolverOutcome outcome = aw(g, 3, options);
    value = outcome.aw_value;
    if (store) store->put(make_record(g, 3, outcome));
  }
  std::lock_guard lock(classification_mutex);
  classification_cache.emplace(p, value);
  return value;
}

void classify(Factorization& fac, long long limit, ResultStore* store,
              const SolverOptions& options) {
  for (auto [p, e] : fac.odd_factors) {
    fac.classification[p] = classify_prime(p, limit, store, options);
  }
}

int aw_zn3(const Factorization& fac) {
  if (fac.n < 2) throw std::invalid_argument("aw_zn3 requires n >= 2");
  int value = fac.exponent_of_2 == 0 ? 2 : 3;
  for (auto [p, e] : fac.odd_factors) {
    auto it = fac.classification.find(p);
    if (it == fac.classification.end()) {
      throw std::invalid_argument("prime " + std::to_string(p) + " is not classified");
    }
    value += it->second == 4 ? 2 * e : e;
  }
  return value;
}

int aw_zn3(long long n, long long limit, ResultStore* store, const SolverOptions& options) {
  Factorization fac = factorize(n);
  classify(fac, limit, store, options);
  return aw_zn3(fac);
}

void clear_classification_cache() {
  std::lock_guard lock(classification_mutex);
  classification_cache.clear();
}

}  // namespace awtk
