#pragma once

#include <optional>
#include <vector>

namespace ddc {

// Unit multiplier mu_a : i -> i*a (mod n) on Z_n, with its multiplicative
// order. A splitting witness must have even order.
struct Multiplier {
  long n = 0;
  long a = 0;
  long order = 0;

  static Multiplier make(long n, long a);  // requires gcd(a, n) = 1
};

long multiplicative_order(long a, long n);

// Duadic splitting of Z_n \ {0}: S1 and S2 partition 1..n-1 and some
// multiplier mu_a maps S1 onto S2 (and then S2 onto S1). Instances are only
// produced by the factories below, which validate the axioms.
struct Splitting {
  long n = 0;
  std::vector<long> s1;         // sorted
  std::vector<long> s2;         // sorted
  std::vector<long> witnesses;  // all a in 1..n-1 with S1 * a = S2, sorted
  std::optional<long> base;     // set when derived from b-cyclotomic cosets
};

// Orbits of i -> i*base (mod n) on 1..n-1; cosets sorted, listed by smallest
// representative. Requires n >= 3 odd and gcd(base, n) = 1.
struct CosetPartition {
  long n = 0;
  long base = 0;
  std::vector<std::vector<long>> cosets;
};

CosetPartition cyclotomic_cosets(long n, long base);

// The elements of 1..n-1 not in s1, sorted ascending.
std::vector<long> sorted_complement(long n, const std::vector<long>& s1);

// Validates the splitting axioms and finds every witness multiplier.
// Throws std::invalid_argument if (s1, s2) is not a partition of 1..n-1 and
// std::domain_error if no witness exists.
Splitting verify_splitting(long n, std::vector<long> s1, std::vector<long> s2);

// S1 = {1..(n-1)/2}, witnessed by mu_{-1}.
Splitting half_splitting(long n);

// Quadratic residue splitting for prime n; witnesses are the nonresidues.
Splitting qr_splitting(long n);

// True iff ord_n(a) is odd, i.e. a cannot witness any splitting.
bool reject_odd_order(long n, long a);

// All splittings whose classes are unions of base-cyclotomic cosets, obtained
// by alternating coset orbits of each candidate multiplier; canonicalized,
// deduplicated, sorted by s1. Nonempty iff base is a square mod n.
std::vector<Splitting> enumerate_coset_splittings(long n, long base);

// Representative with the lexicographically smaller class as s1.
Splitting canonical(Splitting sp);

}  // namespace ddc
