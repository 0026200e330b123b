#include "zinbiel/generators.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace zinbiel {

std::string word_to_string(const Word& w) {
  std::string s;
  for (int x : w) s += x < 26 ? static_cast<char>('a' + x) : '?';
  return s.empty() ? "()" : s;
}

void accumulate(WordSum& acc, const WordSum& s, const BigInt& c) {
  for (const auto& [w, k] : s) {
    BigInt& slot = acc[w];
    slot += c * k;
    if (slot == 0) acc.erase(w);
  }
}

namespace {

// prefix · s for every word of s
WordSum prepend(int letter, const WordSum& s) {
  WordSum out;
  for (const auto& [w, c] : s) {
    Word x;
    x.reserve(w.size() + 1);
    x.push_back(letter);
    x.insert(x.end(), w.begin(), w.end());
    out.emplace(std::move(x), c);
  }
  return out;
}

}  // namespace

WordSum shuffle(const Word& u, const Word& v) {
  if (u.empty()) return {{v, 1}};
  if (v.empty()) return {{u, 1}};
  // u ⧢ v = a(u′ ⧢ v) + b(u ⧢ v′)
  WordSum out = prepend(u.front(), shuffle(Word(u.begin() + 1, u.end()), v));
  accumulate(out, prepend(v.front(), shuffle(u, Word(v.begin() + 1, v.end()))));
  return out;
}

WordSum half_shuffle(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw PreconditionError("half-shuffle of an empty word");
  return prepend(u.front(), shuffle(Word(u.begin() + 1, u.end()), v));
}

WordBasis::WordBasis(int generators, int max_degree)
    : generators_(generators), max_degree_(max_degree) {
  if (generators < 1 || max_degree < 1) throw PreconditionError("word basis needs g >= 1, N >= 1");
  std::vector<Word> layer{Word{}};
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int x = 0; x < generators; ++x) {
        Word y = w;
        y.push_back(x);
        next.push_back(std::move(y));
      }
    for (const Word& w : next) {
      index_.emplace(w, static_cast<Index>(words_.size()));
      words_.push_back(w);
    }
    layer = std::move(next);
  }
}

std::optional<Index> WordBasis::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- enumeration

namespace {

constexpr int kMaxEnumDim = 3;
constexpr int kMaxEntries = kMaxEnumDim * kMaxEnumDim * kMaxEnumDim;

using Digits = std::array<std::uint8_t, kMaxEntries>;

// Zinbiel identity on every basis triple, early exit on the first failure.
bool table_is_zinbiel(const Digits& c, int d, int p) {
  auto at = [&](int i, int j, int k) { return static_cast<int>(c[(i * d + j) * d + k]); };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int n = 0; n < d; ++n) {
          int diff = 0;
          for (int m = 0; m < d; ++m) {
            diff += at(i, j, m) * at(m, k, n);
            diff -= (at(j, k, m) + at(k, j, m)) * at(i, m, n);
          }
          if (diff % p != 0) return false;
        }
  return true;
}

Digits digits_of(std::uint32_t p, int entries, std::uint64_t index) {
  Digits c{};
  for (int t = entries - 1; t >= 0; --t) {
    c[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(index % p);
    index /= p;
  }
  return c;
}

Algebra<Modp> algebra_from_digits(const Digits& c, std::uint32_t p, int d) {
  const FieldSpec f = FieldSpec::prime(p);
  Algebra<Modp> a(f, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const int v = c[static_cast<std::size_t>((i * d + j) * d + k)];
        if (v != 0) a.set(i, j, k, Modp(v, p));
      }
  return a;
}

// Scans [lo, hi) with an odometer over the digits, last entry fastest.
template <class Visit>
std::uint64_t scan_range(std::uint32_t p, int d, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  if (lo >= hi) return 0;
  const int entries = d * d * d;
  Digits c = digits_of(p, entries, lo);
  std::uint64_t found = 0;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (table_is_zinbiel(c, d, static_cast<int>(p))) {
      ++found;
      if (!visit(idx, c)) return found;
    }
    int t = entries - 1;
    while (t >= 0 && ++c[static_cast<std::size_t>(t)] == p) c[static_cast<std::size_t>(t--)] = 0;
  }
  return found;
}

}  // namespace

std::uint64_t table_count(std::uint32_t p, int dim) {
  std::uint64_t n = 1;
  for (int t = 0; t < dim * dim * dim; ++t) n *= p;
  return n;
}

void validate_job(const EnumerationJob& job) {
  if (job.p != 2 && job.p != 3)
    throw UnsupportedOracle("exhaustive enumeration supports p in {2, 3}");
  if (job.dim < 0 || job.dim > kMaxEnumDim)
    throw UnsupportedOracle("exhaustive enumeration supports dimension <= 3");
  if (job.shard_count == 0 || job.shard_index >= job.shard_count)
    throw PreconditionError("shard index must lie in [0, shard count)");
  if (!job.allow_large && table_count(job.p, job.dim) > kDefaultTableCap)
    throw ResourceLimit(std::to_string(table_count(job.p, job.dim)) +
                        " candidate tables exceed the default cap; enable the large-run override");
  if (table_count(job.p, job.dim) > (std::uint64_t{1} << 50))
    throw ResourceLimit("table space too large to enumerate");
}

std::pair<std::uint64_t, std::uint64_t> shard_range(const EnumerationJob& job) {
  const unsigned __int128 total = table_count(job.p, job.dim);
  const auto lo = static_cast<std::uint64_t>(total * job.shard_index / job.shard_count);
  const auto hi = static_cast<std::uint64_t>(total * (job.shard_index + 1) / job.shard_count);
  return {lo, hi};
}

Algebra<Modp> table_from_index(std::uint32_t p, int dim, std::uint64_t index) {
  if (dim < 0 || dim > kMaxEnumDim) throw UnsupportedOracle("table index decoding supports dim <= 3");
  if (index >= table_count(p, dim)) throw PreconditionError("table index out of range");
  return algebra_from_digits(digits_of(p, dim * dim * dim, index), p, dim);
}

std::uint64_t enumerate_zinbiel(
    const EnumerationJob& job,
    const std::function<bool(std::uint64_t, const Algebra<Modp>&)>& visit) {
  validate_job(job);
  const auto [lo, hi] = shard_range(job);
  return scan_range(job.p, job.dim, lo, hi, [&](std::uint64_t idx, const Digits& c) {
    return visit(idx, algebra_from_digits(c, job.p, job.dim));
  });
}

std::uint64_t count_zinbiel(const EnumerationJob& job) {
  validate_job(job);
  const auto [lo, hi] = shard_range(job);
  return scan_range(job.p, job.dim, lo, hi, [](std::uint64_t, const Digits&) { return true; });
}

namespace {

std::vector<EnumerationJob> split(const EnumerationJob& job, unsigned workers) {
  // sub-shard i of the job's range; shard_range of the parent is refined by
  // treating the parent range as the whole space.
  std::vector<EnumerationJob> parts;
  for (unsigned w = 0; w < workers; ++w) {
    EnumerationJob j = job;
    j.shard_index = job.shard_index * workers + w;
    j.shard_count = job.shard_count * workers;
    parts.push_back(j);
  }
  return parts;
}

}  // namespace

std::uint64_t enumerate_zinbiel_parallel(
    const EnumerationJob& job, unsigned workers,
    const std::function<void(std::uint64_t, const Algebra<Modp>&)>& visit) {
  validate_job(job);
  workers = std::max(1u, workers);
  if (workers == 1) {
    return enumerate_zinbiel(job, [&](std::uint64_t idx, const Algebra<Modp>& a) {
      visit(idx, a);
      return true;
    });
  }
  const auto parts = split(job, workers);
  std::vector<std::vector<std::uint64_t>> found(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        const auto [lo, hi] = shard_range(parts[w]);
        scan_range(job.p, job.dim, lo, hi, [&](std::uint64_t idx, const Digits&) {
          found[w].push_back(idx);
          return true;
        });
      });
  }
  std::uint64_t n = 0;
  for (const auto& list : found)
    for (std::uint64_t idx : list) {
      visit(idx, table_from_index(job.p, job.dim, idx));
      ++n;
    }
  return n;
}

std::uint64_t count_zinbiel_parallel(const EnumerationJob& job, unsigned workers) {
  validate_job(job);
  workers = std::max(1u, workers);
  if (workers == 1) return count_zinbiel(job);
  const auto parts = split(job, workers);
  std::vector<std::uint64_t> counts(workers, 0);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] { counts[w] = count_zinbiel(parts[w]); });
  }
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

std::vector<Algebra<Modp>> enumerate_triangular_zinbiel(std::uint32_t p, int dim) {
  if (dim < 0 || dim > kMaxEnumDim) throw UnsupportedOracle("triangular enumeration supports dim <= 3");
  const FieldSpec f = FieldSpec::prime(p);
  std::vector<std::array<int, 3>> slots;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = std::max(i, j) + 1; k < dim; ++k) slots.push_back({i, j, k});
  std::vector<Algebra<Modp>> out;
  std::vector<std::uint32_t> digits(slots.size(), 0);
  while (true) {
    Algebra<Modp> a(f, dim);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (digits[s] != 0) a.set(slots[s][0], slots[s][1], slots[s][2], Modp(digits[s], p));
    if (is_zinbiel(a)) out.push_back(std::move(a));
    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == p) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------- random

FieldSpec recipe_field(const Recipe& r) {
  if (const auto* pick = std::get_if<EnumeratedPick>(&r)) return FieldSpec::prime(pick->p);
  if (const auto* fr = std::get_if<FreeTruncation>(&r)) return fr->field;
  return recipe_field(std::get<std::shared_ptr<DirectSumRecipe>>(r)->left);
}

namespace detail {

std::vector<Algebra<Modp>> enumerated_corpus(std::uint32_t p, int dim) {
  std::vector<Algebra<Modp>> out;
  enumerate_zinbiel(EnumerationJob{p, dim}, [&](std::uint64_t, const Algebra<Modp>& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace detail

}  // namespace zinbiel
