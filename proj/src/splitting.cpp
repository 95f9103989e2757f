#include "ddc/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace ddc {
namespace {

void require_valid_n(long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("splitting length must be odd and >= 3");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<long> sorted_complement(long n, const std::vector<long>& s1) {
  std::vector<char> in(n, 0);
  for (long x : s1) in[x] = 1;
  std::vector<long> out;
  for (long x = 1; x < n; ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

long multiplicative_order(long a, long n) {
  if (n < 2 || std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative order needs gcd(a, n) = 1");
  long x = ((a % n) + n) % n;
  long cur = x % n;
  long ord = 1;
  while (cur != 1) {
    cur = (cur * x) % n;
    ++ord;
  }
  return ord;
}

Multiplier Multiplier::make(long n, long a) {
  require_valid_n(n);
  long aa = ((a % n) + n) % n;
  if (std::gcd(aa, n) != 1) throw std::invalid_argument("multiplier must be a unit mod n");
  return {n, aa, multiplicative_order(aa, n)};
}

CosetPartition cyclotomic_cosets(long n, long base) {
  require_valid_n(n);
  if (base < 2) throw std::invalid_argument("coset base must be >= 2");
  if (std::gcd(base, n) != 1) throw std::invalid_argument("coset base must be coprime to n");
  CosetPartition part{n, base, {}};
  std::vector<char> seen(n, 0);
  for (long x = 1; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<long> coset;
    long y = x;
    while (!seen[y]) {
      seen[y] = 1;
      coset.push_back(y);
      y = (y * base) % n;
    }
    std::sort(coset.begin(), coset.end());
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

Splitting verify_splitting(long n, std::vector<long> s1, std::vector<long> s2) {
  require_valid_n(n);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  auto check_members = [n](const std::vector<long>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] >= n) throw std::invalid_argument("splitting members must lie in 1..n-1");
      if (i && s[i] == s[i - 1]) throw std::invalid_argument("splitting classes must not repeat members");
    }
  };
  check_members(s1);
  check_members(s2);
  if (s1.size() + s2.size() != static_cast<std::size_t>(n - 1) || sorted_complement(n, s1) != s2)
    throw std::invalid_argument("classes do not partition 1..n-1");
  // A multiplier swaps the classes, so both must contain (n-1)/2 elements.
  // With equal sizes, a*S1 being a subset of S2 already forces a*S1 == S2
  // (multiplication by a unit is injective), which the witness scan relies on.
  if (s1.size() != s2.size())
    throw std::invalid_argument("splitting classes must have equal size (n-1)/2");

  std::vector<char> in_s2(n, 0);
  for (long x : s2) in_s2[x] = 1;
  std::vector<long> witnesses;
  for (long a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    bool ok = true;
    for (long x : s1) {
      if (!in_s2[(x * a) % n]) {
        ok = false;
        break;
      }
    }
    if (ok) witnesses.push_back(a);
  }
  if (witnesses.empty()) throw std::domain_error("no multiplier maps s1 onto s2: not a duadic splitting");
  return {n, std::move(s1), std::move(s2), std::move(witnesses), std::nullopt};
}

Splitting half_splitting(long n) {
  require_valid_n(n);
  std::vector<long> s1, s2;
  for (long x = 1; x <= (n - 1) / 2; ++x) s1.push_back(x);
  for (long x = (n + 1) / 2; x < n; ++x) s2.push_back(x);
  return verify_splitting(n, std::move(s1), std::move(s2));
}

Splitting qr_splitting(long n) {
  require_valid_n(n);
  if (!is_prime(n)) throw std::domain_error("quadratic residue splitting requires a prime length");
  std::vector<char> is_qr(n, 0);
  for (long x = 1; x < n; ++x) is_qr[(x * x) % n] = 1;
  std::vector<long> s1, s2;
  for (long x = 1; x < n; ++x) (is_qr[x] ? s1 : s2).push_back(x);
  return verify_splitting(n, std::move(s1), std::move(s2));
}

bool reject_odd_order(long n, long a) {
  require_valid_n(n);
  return multiplicative_order(a, n) % 2 == 1;
}

std::vector<Splitting> enumerate_coset_splittings(long n, long base) {
  CosetPartition part = cyclotomic_cosets(n, base);
  const std::size_t m = part.cosets.size();
  std::vector<std::size_t> coset_of(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (long x : part.cosets[i]) coset_of[x] = i;

  std::set<std::vector<long>> canonical_s1;
  for (long a = 2; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    // induced permutation on cosets (multipliers commute with the base map)
    std::vector<std::size_t> pi(m);
    for (std::size_t i = 0; i < m; ++i) pi[i] = coset_of[(part.cosets[i][0] * a) % n];

    std::vector<std::vector<std::size_t>> orbits;
    std::vector<char> seen(m, 0);
    bool all_even = true;
    for (std::size_t i = 0; i < m && all_even; ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> orbit;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = 1;
        orbit.push_back(j);
        j = pi[j];
      }
      if (orbit.size() % 2 != 0) all_even = false;  // fixed cosets included
      orbits.push_back(std::move(orbit));
    }
    if (!all_even) continue;

    // each orbit alternates between the classes; two choices per orbit
    for (std::size_t mask = 0; mask < (std::size_t{1} << orbits.size()); ++mask) {
      std::vector<long> s1;
      for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        std::size_t pick = (mask >> oi) & 1;
        for (std::size_t pos = 0; pos < orbits[oi].size(); ++pos)
          if (pos % 2 == pick) {
            const auto& coset = part.cosets[orbits[oi][pos]];
            s1.insert(s1.end(), coset.begin(), coset.end());
          }
      }
      std::sort(s1.begin(), s1.end());
      std::vector<long> s2 = sorted_complement(n, s1);
      canonical_s1.insert(std::min(s1, s2));
    }
  }

  std::vector<Splitting> out;
  for (const auto& s1 : canonical_s1) {
    Splitting sp = verify_splitting(n, s1, sorted_complement(n, s1));
    sp.base = base;
    out.push_back(std::move(sp));
  }
  return out;  // std::set iteration is already lexicographic in s1
}

Splitting canonical(Splitting sp) {
  if (sp.s2 < sp.s1) std::swap(sp.s1, sp.s2);
  return sp;
}

}  // namespace ddc
