#include "ddc/codeprops.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "ddc/linalg.hpp"

namespace ddc {
namespace {

uint64_t pow_saturating(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  while (exp--) {
    if (r > std::numeric_limits<uint64_t>::max() / base) return std::numeric_limits<uint64_t>::max();
    r *= base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Packed codeword kernels. Each kernel stores the generator rows pre-scaled by
// every nonzero coefficient so that the hot loops only ever add a stored row
// into an accumulator state: add(y, r, c) performs y += c * row_r.
// ---------------------------------------------------------------------------

// GF(2): one bit plane per row, addition is XOR.
struct Gf2Kernel {
  using State = std::vector<uint64_t>;

  std::size_t n = 0, k = 0, words = 0;
  std::vector<uint64_t> rows;  // k x words

  void init(const Matrix& g) {
    n = g.cols();
    k = g.rows();
    words = (n + 63) / 64;
    rows.assign(k * words, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (g(r, c)) rows[r * words + c / 64] |= uint64_t{1} << (c % 64);
  }
  State zero() const { return State(words, 0); }
  void add(State& y, std::size_t r, uint8_t) const {
    const uint64_t* p = rows.data() + r * words;
    for (std::size_t i = 0; i < words; ++i) y[i] ^= p[i];
  }
  std::size_t weight(const State& y) const {
    std::size_t w = 0;
    for (uint64_t v : y) w += std::size_t(std::popcount(v));
    return w;
  }
  void unpack(const State& y, uint8_t* out) const {
    for (std::size_t i = 0; i < n; ++i) out[i] = uint8_t((y[i / 64] >> (i % 64)) & 1);
  }
};

// GF(3): two bit planes, lo = positions holding 1, hi = positions holding 2.
struct Gf3Kernel {
  using State = std::vector<uint64_t>;  // [lo words | hi words]

  std::size_t n = 0, k = 0, words = 0;
  std::vector<uint64_t> rows;  // [r][coef-1][plane][word]

  void init(const Matrix& g) {
    const Field& f = g.field();
    n = g.cols();
    k = g.rows();
    words = (n + 63) / 64;
    rows.assign(k * 2 * 2 * words, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (uint8_t coef = 1; coef <= 2; ++coef) {
        uint64_t* lo = rows.data() + ((r * 2 + coef - 1) * 2 + 0) * words;
        uint64_t* hi = lo + words;
        for (std::size_t c = 0; c < n; ++c) {
          uint8_t v = f.mul(coef, g(r, c));
          if (v == 1) lo[c / 64] |= uint64_t{1} << (c % 64);
          if (v == 2) hi[c / 64] |= uint64_t{1} << (c % 64);
        }
      }
  }
  State zero() const { return State(2 * words, 0); }
  void add(State& y, std::size_t r, uint8_t coef) const {
    const uint64_t* bl = rows.data() + ((r * 2 + coef - 1) * 2 + 0) * words;
    const uint64_t* bh = bl + words;
    uint64_t* al = y.data();
    uint64_t* ah = y.data() + words;
    for (std::size_t i = 0; i < words; ++i) {
      const uint64_t l = al[i], h = ah[i];
      const uint64_t za = ~(l | h), zb = ~(bl[i] | bh[i]);
      al[i] = (za & bl[i]) | (l & zb) | (h & bh[i]);
      ah[i] = (za & bh[i]) | (h & zb) | (l & bl[i]);
    }
  }
  std::size_t weight(const State& y) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words; ++i) w += std::size_t(std::popcount(y[i] | y[words + i]));
    return w;
  }
  void unpack(const State& y, uint8_t* out) const {
    for (std::size_t i = 0; i < n; ++i) {
      const uint64_t bit = uint64_t{1} << (i % 64);
      out[i] = (y[i / 64] & bit) ? 1 : (y[words + i / 64] & bit) ? 2 : 0;
    }
  }
};

// GF(4): two bit planes holding the two bits of the element code; addition is
// XOR on both planes.
struct Gf4Kernel {
  using State = std::vector<uint64_t>;  // [bit0 words | bit1 words]

  std::size_t n = 0, k = 0, words = 0;
  std::vector<uint64_t> rows;  // [r][coef-1][2*words], both planes contiguous

  void init(const Matrix& g) {
    const Field& f = g.field();
    n = g.cols();
    k = g.rows();
    words = (n + 63) / 64;
    rows.assign(k * 3 * 2 * words, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (uint8_t coef = 1; coef <= 3; ++coef) {
        uint64_t* p = rows.data() + (r * 3 + coef - 1) * 2 * words;
        for (std::size_t c = 0; c < n; ++c) {
          uint8_t v = f.mul(coef, g(r, c));
          if (v & 1) p[c / 64] |= uint64_t{1} << (c % 64);
          if (v & 2) p[words + c / 64] |= uint64_t{1} << (c % 64);
        }
      }
  }
  State zero() const { return State(2 * words, 0); }
  void add(State& y, std::size_t r, uint8_t coef) const {
    const uint64_t* p = rows.data() + (r * 3 + coef - 1) * 2 * words;
    for (std::size_t i = 0; i < 2 * words; ++i) y[i] ^= p[i];
  }
  std::size_t weight(const State& y) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words; ++i) w += std::size_t(std::popcount(y[i] | y[words + i]));
    return w;
  }
  void unpack(const State& y, uint8_t* out) const {
    for (std::size_t i = 0; i < n; ++i) {
      const uint64_t bit = uint64_t{1} << (i % 64);
      out[i] = uint8_t(((y[i / 64] & bit) ? 1 : 0) | ((y[words + i / 64] & bit) ? 2 : 0));
    }
  }
};

// GF(5) / GF(7): one byte per coordinate, addition by conditional subtraction.
struct ByteKernel {
  using State = std::vector<uint8_t>;

  std::size_t n = 0, k = 0;
  int q = 0;
  std::vector<uint8_t> rows;  // [r][coef-1][n]

  void init(const Matrix& g) {
    const Field& f = g.field();
    n = g.cols();
    k = g.rows();
    q = f.q();
    rows.assign(k * std::size_t(q - 1) * n, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (int coef = 1; coef < q; ++coef) {
        uint8_t* p = rows.data() + (r * std::size_t(q - 1) + std::size_t(coef - 1)) * n;
        for (std::size_t c = 0; c < n; ++c) p[c] = f.mul(uint8_t(coef), g(r, c));
      }
  }
  State zero() const { return State(n, 0); }
  void add(State& y, std::size_t r, uint8_t coef) const {
    const uint8_t* p = rows.data() + (r * std::size_t(q - 1) + std::size_t(coef - 1)) * n;
    const uint8_t qq = uint8_t(q);
    for (std::size_t i = 0; i < n; ++i) {
      uint8_t t = uint8_t(y[i] + p[i]);
      y[i] = t >= qq ? uint8_t(t - qq) : t;
    }
  }
  std::size_t weight(const State& y) const {
    std::size_t w = 0;
    for (uint8_t v : y) w += (v != 0);
    return w;
  }
  void unpack(const State& y, uint8_t* out) const { std::copy(y.begin(), y.end(), out); }
};

template <class Fn>
auto with_kernel(const Matrix& g, Fn&& fn) {
  switch (g.field().q()) {
    case 2: {
      Gf2Kernel k;
      k.init(g);
      return fn(k);
    }
    case 3: {
      Gf3Kernel k;
      k.init(g);
      return fn(k);
    }
    case 4: {
      Gf4Kernel k;
      k.init(g);
      return fn(k);
    }
    default: {
      ByteKernel k;
      k.init(g);
      return fn(k);
    }
  }
}

// ---------------------------------------------------------------------------
// Exhaustive message-space walk. Messages are mixed-radix counters over the
// digit codes 0..q-1; advancing one digit from d to d+1 (wrapping) adds
// delta[d] = (d+1 mod q) - d times the corresponding row, so every message is
// reached with O(1) amortized row additions.
// ---------------------------------------------------------------------------

template <class K>
void walk_counts(const K& kern, int q, const uint8_t* delta, std::size_t kdim, uint64_t begin,
                 uint64_t end, uint64_t* counts) {
  if (begin >= end) return;
  auto y = kern.zero();
  std::vector<uint8_t> digits(kdim, 0);
  uint64_t v = begin;
  for (std::size_t i = 0; i < kdim && v; ++i) {
    digits[i] = uint8_t(v % uint64_t(q));
    v /= uint64_t(q);
    if (digits[i]) kern.add(y, i, digits[i]);
  }
  for (uint64_t idx = begin;;) {
    if (idx) ++counts[kern.weight(y)];
    if (++idx == end) break;
    std::size_t i = 0;
    for (;;) {
      kern.add(y, i, delta[digits[i]]);
      if (uint8_t(digits[i] + 1) == uint8_t(q)) {
        digits[i] = 0;
        ++i;
      } else {
        ++digits[i];
        break;
      }
    }
  }
}

std::vector<uint64_t> enumerate_counts(const Matrix& g, uint64_t budget, int workers) {
  const Field& f = g.field();
  const int q = f.q();
  const std::size_t kdim = g.rows();
  const uint64_t total = pow_saturating(uint64_t(q), kdim);
  if (total > budget)
    throw BudgetExceeded("weight enumeration needs " + std::to_string(kdim) + " digits base " +
                         std::to_string(q) + ", over the budget of " + std::to_string(budget) +
                         " messages");
  uint8_t delta[8] = {};
  for (int d = 0; d < q; ++d) delta[d] = f.sub(uint8_t((d + 1) % q), uint8_t(d));

  int w = std::max(1, workers);
  if (total < 1 << 14) w = 1;

  return with_kernel(g, [&](const auto& kern) {
    std::vector<std::vector<uint64_t>> parts(std::size_t(w), std::vector<uint64_t>(g.cols() + 1, 0));
    if (w == 1) {
      walk_counts(kern, q, delta, kdim, 0, total, parts[0].data());
    } else {
      std::vector<std::thread> threads;
      const uint64_t chunk = total / uint64_t(w), rem = total % uint64_t(w);
      uint64_t lo = 0;
      for (int t = 0; t < w; ++t) {
        const uint64_t hi = lo + chunk + (uint64_t(t) < rem ? 1 : 0);
        threads.emplace_back([&, t, lo, hi] { walk_counts(kern, q, delta, kdim, lo, hi, parts[std::size_t(t)].data()); });
        lo = hi;
      }
      for (auto& th : threads) th.join();
    }
    std::vector<uint64_t> counts(g.cols() + 1, 0);
    counts[0] = 1;  // the zero message, skipped by the walk
    for (const auto& p : parts)
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
    return counts;
  });
}

// ---------------------------------------------------------------------------
// Information-set distance search.
// ---------------------------------------------------------------------------

struct InfoMatrix {
  Matrix m;
  long deficiency;  // pivot columns shared with earlier matrices
};

// Greedy family of systematic generator matrices, each preferring columns not
// yet pivoted on. Stops when a new matrix adds no fresh pivot column or is too
// redundant to tighten the bound.
std::vector<InfoMatrix> build_info_matrices(const Matrix& g) {
  const std::size_t k = g.rows(), n = g.cols();
  std::vector<char> used(n, 0);
  std::vector<InfoMatrix> out;
  for (;;) {
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) order.push_back(c);
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);
    std::vector<std::size_t> pivots;
    Matrix r = rref_in_column_order(g, order, &pivots);
    long fresh = 0;
    for (std::size_t c : pivots) fresh += !used[c];
    if (fresh == 0) break;
    const long def = long(k) - fresh;
    if (!out.empty() && 2 * def > long(k)) break;
    for (std::size_t c : pivots) used[c] = 1;
    out.push_back({std::move(r), def});
  }
  return out;
}

struct BzLocal {
  long best;
  std::unordered_set<std::string> words;  // canonical minimum words (counting mode)
};

template <class K>
struct BzWorker {
  const std::vector<K>* kerns = nullptr;
  const Field* f = nullptr;
  int q = 0;
  std::size_t kdim = 0, n = 0;
  long w = 0;
  bool counting = false;
  long prune_below = 0;
  const uint8_t* step = nullptr;
  uint8_t undo_full = 0, undo_one = 0;
  std::atomic<long>* shared_best = nullptr;
  std::atomic<bool>* stop = nullptr;

  BzLocal loc;
  typename K::State y;
  std::vector<uint8_t> scratch;
  const K* kern = nullptr;

  void record() {
    const long wt = long(kern->weight(y));
    const long hint = shared_best->load(std::memory_order_relaxed);
    if (wt > std::min(loc.best, hint)) return;
    if (wt < loc.best) {
      loc.words.clear();
      loc.best = wt;
    }
    if (wt < hint) {
      long cur = hint;
      while (wt < cur && !shared_best->compare_exchange_weak(cur, wt, std::memory_order_relaxed)) {
      }
    }
    if (prune_below > 0 && wt < prune_below) stop->store(true, std::memory_order_relaxed);
    if (counting) {
      kern->unpack(y, scratch.data());
      std::size_t first = 0;
      while (first < n && !scratch[first]) ++first;
      if (first < n && scratch[first] != 1) {
        const uint8_t scale = f->inv(scratch[first]);
        for (std::size_t i = first; i < n; ++i) scratch[i] = f->mul(scale, scratch[i]);
      }
      loc.words.emplace(reinterpret_cast<const char*>(scratch.data()), n);
    }
  }

  void descend(long level, std::size_t startpos) {
    const bool leaf = (level + 1 == w);
    for (std::size_t pos = startpos; pos + std::size_t(w - level) <= kdim; ++pos) {
      if (level <= 1 && stop->load(std::memory_order_relaxed)) return;
      kern->add(y, pos, 1);
      if (leaf)
        record();
      else
        descend(level + 1, pos + 1);
      for (int c = 2; c < q; ++c) {
        kern->add(y, pos, step[c]);
        if (leaf)
          record();
        else
          descend(level + 1, pos + 1);
      }
      kern->add(y, pos, undo_full);
    }
  }

  // One job: level-0 position fixed at p1 with coefficient 1 (each codeword is
  // enumerated once per matrix, up to scalars).
  void run_job(std::size_t mat, std::size_t p1) {
    kern = &(*kerns)[mat];
    kern->add(y, p1, 1);
    if (w == 1)
      record();
    else
      descend(1, p1 + 1);
    kern->add(y, p1, undo_one);
  }
};

template <class K>
DistanceResult bz_run(const Field& f, const std::vector<InfoMatrix>& mats,
                      const AcceleratedOptions& opts, std::size_t n) {
  const int q = f.q();
  const std::size_t kdim = mats.front().m.rows();
  std::vector<K> kerns(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) kerns[i].init(mats[i].m);

  uint8_t step[8] = {};
  for (int c = 1; c < q; ++c) step[c] = f.sub(uint8_t(c), uint8_t(c - 1));
  const uint8_t undo_full = f.neg(uint8_t(q - 1));
  const uint8_t undo_one = f.neg(1);
  const bool counting = opts.count_min_words;

  const long kInf = long(n) + 1;
  std::atomic<long> shared_best{kInf};
  std::atomic<bool> stop{false};
  long gbest = kInf;
  std::unordered_set<std::string> gwords;

  const int workers = std::max(1, opts.workers);

  for (long w = 1; w <= long(kdim); ++w) {
    struct Job {
      std::size_t mat, p1;
    };
    std::vector<Job> jobs;
    for (std::size_t mi = 0; mi < kerns.size(); ++mi)
      for (std::size_t p1 = 0; p1 + std::size_t(w) <= kdim; ++p1) jobs.push_back({mi, p1});

    auto make_worker = [&] {
      BzWorker<K> bw;
      bw.kerns = &kerns;
      bw.f = &f;
      bw.q = q;
      bw.kdim = kdim;
      bw.n = n;
      bw.w = w;
      bw.counting = counting;
      bw.prune_below = opts.prune_below;
      bw.step = step;
      bw.undo_full = undo_full;
      bw.undo_one = undo_one;
      bw.shared_best = &shared_best;
      bw.stop = &stop;
      bw.loc.best = gbest;
      bw.y = kerns.front().zero();
      bw.scratch.assign(n, 0);
      return bw;
    };

    std::vector<BzLocal> locals;
    if (workers == 1 || jobs.size() == 1) {
      auto bw = make_worker();
      for (const Job& j : jobs) {
        if (stop.load(std::memory_order_relaxed)) break;
        bw.run_job(j.mat, j.p1);
      }
      locals.push_back(std::move(bw.loc));
    } else {
      std::atomic<std::size_t> next{0};
      std::mutex mu;
      std::vector<std::thread> threads;
      const int nt = int(std::min<std::size_t>(std::size_t(workers), jobs.size()));
      for (int t = 0; t < nt; ++t)
        threads.emplace_back([&] {
          auto bw = make_worker();
          for (;;) {
            const std::size_t j = next.fetch_add(1, std::memory_order_relaxed);
            if (j >= jobs.size() || stop.load(std::memory_order_relaxed)) break;
            bw.run_job(jobs[j].mat, jobs[j].p1);
          }
          std::lock_guard<std::mutex> lk(mu);
          locals.push_back(std::move(bw.loc));
        });
      for (auto& th : threads) th.join();
    }

    for (const BzLocal& loc : locals)
      if (loc.best < gbest) {
        gbest = loc.best;
        gwords.clear();
      }
    if (counting)
      for (BzLocal& loc : locals)
        if (loc.best == gbest)
          for (auto it = loc.words.begin(); it != loc.words.end();)
            gwords.insert(std::move(loc.words.extract(it++).value()));

    if (stop.load(std::memory_order_relaxed))
      return {gbest, false, 0, false};  // pruned: gbest is an upper bound

    long lower = 0;
    for (const InfoMatrix& im : mats) lower += std::max<long>(0, w + 1 - im.deficiency);
    const bool exhausted = (w == long(kdim));
    const bool distance_done = exhausted || lower >= gbest;
    const bool count_done = exhausted || lower >= gbest + 1;
    if (counting ? count_done : distance_done) {
      const uint64_t a_d = counting ? uint64_t(gwords.size()) * uint64_t(q > 2 ? q - 1 : 1) : 0;
      return {gbest, true, a_d, counting};
    }
  }
  return {gbest, true, 0, false};  // unreachable: w == kdim exhausts the space
}

bool gram_is_zero(const Matrix& g, bool hermitian) {
  const Field& f = g.field();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.rows(); ++j) {
      uint8_t acc = 0;
      for (std::size_t c = 0; c < g.cols(); ++c) {
        const uint8_t b = hermitian ? f.conj(g(j, c)) : g(j, c);
        acc = f.add(acc, f.mul(g(i, c), b));
      }
      if (acc) return false;
    }
  return true;
}

}  // namespace

DistanceResult min_distance_exhaustive(const DdcCode& code, uint64_t budget, int workers) {
  const auto counts = enumerate_counts(code.generator, budget, workers);
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i]) return {long(i), true, counts[i], true};
  throw std::logic_error("no nonzero codeword found; generator cannot be full rank");
}

DistanceResult min_distance_accelerated(const DdcCode& code, const AcceleratedOptions& opts) {
  const Matrix& g = code.generator;
  const auto mats = build_info_matrices(g);
  switch (g.field().q()) {
    case 2:
      return bz_run<Gf2Kernel>(g.field(), mats, opts, g.cols());
    case 3:
      return bz_run<Gf3Kernel>(g.field(), mats, opts, g.cols());
    case 4:
      return bz_run<Gf4Kernel>(g.field(), mats, opts, g.cols());
    default:
      return bz_run<ByteKernel>(g.field(), mats, opts, g.cols());
  }
}

WeightDistribution weight_distribution(const DdcCode& code, uint64_t budget, int workers) {
  return {code.length(), code.generator.field().q(),
          enumerate_counts(code.generator, budget, workers)};
}

WeightDistribution macwilliams(const WeightDistribution& wd, long k) {
  using boost::multiprecision::cpp_int;
  const long n = wd.length;
  const int q = wd.q;
  if (long(wd.counts.size()) != n + 1)
    throw std::invalid_argument("weight distribution must list A_0..A_n");

  std::vector<std::vector<cpp_int>> binom(std::size_t(n + 1));
  for (long i = 0; i <= n; ++i) {
    binom[std::size_t(i)].assign(std::size_t(i + 1), 1);
    for (long j = 1; j < i; ++j)
      binom[std::size_t(i)][std::size_t(j)] =
          binom[std::size_t(i - 1)][std::size_t(j - 1)] + binom[std::size_t(i - 1)][std::size_t(j)];
  }
  auto choose = [&](long a, long b) -> const cpp_int& {
    static const cpp_int zero = 0;
    return (b < 0 || b > a) ? zero : binom[std::size_t(a)][std::size_t(b)];
  };

  cpp_int qk = boost::multiprecision::pow(cpp_int(q), unsigned(k));
  cpp_int sum = 0;
  for (uint64_t c : wd.counts) sum += c;
  if (sum != qk) throw std::invalid_argument("weight distribution counts must sum to q^k");

  WeightDistribution out{n, q, std::vector<uint64_t>(std::size_t(n + 1), 0)};
  for (long j = 0; j <= n; ++j) {
    cpp_int acc = 0;
    for (long i = 0; i <= n; ++i) {
      if (!wd.counts[std::size_t(i)]) continue;
      cpp_int kji = 0;  // Krawtchouk K_j(i)
      for (long s = 0; s <= j; ++s) {
        const cpp_int term = boost::multiprecision::pow(cpp_int(q - 1), unsigned(j - s)) *
                             choose(i, s) * choose(n - i, j - s);
        if (s & 1)
          kji -= term;
        else
          kji += term;
      }
      acc += cpp_int(wd.counts[std::size_t(i)]) * kji;
    }
    if (acc < 0 || acc % qk != 0)
      throw std::logic_error("MacWilliams transform produced a non-integral dual count");
    const cpp_int aj = acc / qk;
    if (aj > std::numeric_limits<uint64_t>::max())
      throw std::overflow_error("dual weight count exceeds 64 bits");
    out.counts[std::size_t(j)] = aj.convert_to<uint64_t>();
  }
  return out;
}

DualityClass classify(const DdcCode& code, uint64_t wd_budget) {
  const Matrix& g = code.generator;
  const Field& f = g.field();
  DualityClass dc;
  const bool half_rate = 2 * g.rows() == g.cols();
  dc.self_dual_euclidean = half_rate && gram_is_zero(g, false);
  if (f.q() == 4) dc.self_dual_hermitian = half_rate && gram_is_zero(g, true);
  if (f.q() == 2 && dc.self_dual_euclidean) {
    bool doubly_even = true;
    for (std::size_t r = 0; r < g.rows() && doubly_even; ++r)
      doubly_even = g.row(r).weight() % 4 == 0;
    dc.binary_type = doubly_even ? BinaryType::type_ii : BinaryType::type_i;
  }
  if (wd_budget > 0 && pow_saturating(uint64_t(f.q()), g.rows()) <= wd_budget) {
    const auto wd = weight_distribution(code, wd_budget, 1);
    dc.formally_self_dual = (macwilliams(wd, long(g.rows())) == wd);
  }
  return dc;
}

CodeReport analyze(const DdcCode& code, const AnalyzeOptions& opts) {
  CodeReport rep;
  rep.length = code.length();
  rep.dimension = code.dimension();
  const uint64_t total =
      pow_saturating(uint64_t(code.generator.field().q()), code.generator.rows());
  if (total <= opts.budget) {
    const auto dr = min_distance_exhaustive(code, opts.budget, opts.workers);
    rep.distance = dr.distance;
    rep.min_words = dr.min_words;
    rep.min_words_exact = true;
    rep.method = "exhaustive";
  } else {
    AcceleratedOptions ao;
    ao.workers = opts.workers;
    ao.count_min_words = opts.count_min_words;
    const auto dr = min_distance_accelerated(code, ao);
    rep.distance = dr.distance;
    rep.min_words = dr.min_words;
    rep.min_words_exact = dr.min_words_exact;
    rep.method = "accelerated";
  }
  rep.duality = classify(code, opts.budget);
  rep.code = code;
  return rep;
}

}  // namespace ddc
