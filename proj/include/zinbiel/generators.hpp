#pragma once

// Test-instance generators: the half-shuffle product on words, truncated free
// Zinbiel algebras, exhaustive enumeration of Zinbiel tables over GF(2) and
// GF(3), and seeded random instances.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// A word over the alphabet {0, …, g-1}.
using Word = std::vector<int>;

/// Formal integer combination of words.
using WordSum = std::map<Word, BigInt>;

std::string word_to_string(const Word& w);

/// Shuffle product: every interleaving of u and v preserving the letter order
/// of each, counted with multiplicity.
WordSum shuffle(const Word& u, const Word& v);

/// Half-shuffle u∘v = x·(u′ ⧢ v) for u = x·u′. Throws PreconditionError on an
/// empty argument.
WordSum half_shuffle(const Word& u, const Word& v);

/// Adds c·s into acc, dropping zero coefficients.
void accumulate(WordSum& acc, const WordSum& s, const BigInt& c = 1);

/// All nonempty words of length <= N over g letters in graded-lexicographic
/// order (by length, then lexicographically).
class WordBasis {
 public:
  WordBasis(int generators, int max_degree);

  int generators() const { return generators_; }
  int max_degree() const { return max_degree_; }
  const std::vector<Word>& words() const { return words_; }
  Index size() const { return static_cast<Index>(words_.size()); }
  /// Position of `w`, or nullopt if it is empty or too long.
  std::optional<Index> index_of(const Word& w) const;

 private:
  int generators_;
  int max_degree_;
  std::vector<Word> words_;
  std::map<Word, Index> index_;
};

inline constexpr Index kMaxFreeDim = 200;

/// Free Zinbiel algebra on `g` generators modulo words longer than `N`, with
/// basis the WordBasis(g, N) and product the half-shuffle.
template <class S>
Algebra<S> free_zinbiel_truncated(int g, int N, const FieldSpec& field) {
  if (g < 1 || N < 1) throw PreconditionError("free Zinbiel algebra needs g >= 1 and N >= 1");
  // dimension g + g^2 + ... + g^N, with overflow-safe early exit
  Index dim = 0, pow = 1;
  for (int n = 1; n <= N; ++n) {
    pow *= g;
    dim += pow;
    if (dim > kMaxFreeDim)
      throw ResourceLimit("free Zinbiel truncation exceeds dimension cap " +
                          std::to_string(kMaxFreeDim));
  }
  const WordBasis basis(g, N);
  Algebra<S> a(field, basis.size(),
               "free(g=" + std::to_string(g) + ",N=" + std::to_string(N) + ")");
  const auto& words = basis.words();
  for (Index i = 0; i < basis.size(); ++i)
    for (Index j = 0; j < basis.size(); ++j) {
      const Word& u = words[static_cast<std::size_t>(i)];
      const Word& v = words[static_cast<std::size_t>(j)];
      if (static_cast<int>(u.size() + v.size()) > N) continue;
      for (const auto& [w, c] : half_shuffle(u, v)) {
        const S x = ScalarTraits<S>::from_big(field, c);
        if (!ScalarTraits<S>::is_zero(x)) a.set(i, j, *basis.index_of(w), x);
      }
    }
  return a;
}

/// Span of the basis words of length >= k in the truncated free algebra.
template <class S>
Subspace<S> words_of_length_at_least(const WordBasis& basis, const FieldSpec& field, int k) {
  std::vector<Vector<S>> rows;
  for (Index i = 0; i < basis.size(); ++i)
    if (static_cast<int>(basis.words()[static_cast<std::size_t>(i)].size()) >= k)
      rows.push_back(unit_vector<S>(field, basis.size(), i));
  return Subspace<S>::span(field, basis.size(), rows);
}

// ---------------------------------------------------------------- enumeration

/// One shard of the exhaustive search over all p^(d³) structure tables.
///
/// Tables are ordered lexicographically by the flattened tensor
/// (c[0][0][0], c[0][0][1], …, c[d-1][d-1][d-1]), first entry most
/// significant. Shard i of n covers table indices
/// [floor(i·T/n), floor((i+1)·T/n)), i.e. it is fixed by the high-order digits.
struct EnumerationJob {
  std::uint32_t p = 2;
  int dim = 1;
  std::uint64_t shard_index = 0;
  std::uint64_t shard_count = 1;
  /// Lifts the default cap of 3^8 tables (needed for GF(2), d = 3).
  bool allow_large = false;
};

/// Number of candidate tables p^(d³).
std::uint64_t table_count(std::uint32_t p, int dim);

/// Default cap on the table space without `allow_large`.
inline constexpr std::uint64_t kDefaultTableCap = 6561;  // 3^8

/// Half-open range of table indices covered by the job's shard.
std::pair<std::uint64_t, std::uint64_t> shard_range(const EnumerationJob& job);

/// Throws PreconditionError / UnsupportedOracle for out-of-range jobs.
void validate_job(const EnumerationJob& job);

/// Visits, in table order, every table of the shard satisfying the Zinbiel
/// identity. Returns the number visited. The visitor gets the table index and
/// the algebra; returning false stops the scan.
std::uint64_t enumerate_zinbiel(
    const EnumerationJob& job,
    const std::function<bool(std::uint64_t, const Algebra<Modp>&)>& visit);

/// Count-only scan of the shard.
std::uint64_t count_zinbiel(const EnumerationJob& job);

/// Runs the job split into `workers` sub-shards on separate threads. The
/// visitor is called on the calling thread, in table order, after the scan.
std::uint64_t enumerate_zinbiel_parallel(
    const EnumerationJob& job, unsigned workers,
    const std::function<void(std::uint64_t, const Algebra<Modp>&)>& visit);

std::uint64_t count_zinbiel_parallel(const EnumerationJob& job, unsigned workers);

/// Table with the given index (digits of the flattened tensor in base p).
Algebra<Modp> table_from_index(std::uint32_t p, int dim, std::uint64_t index);

/// Tables supported strictly above the diagonal: c[i][j][k] = 0 unless
/// k > max(i,j). Every nilpotent algebra has such a basis, which makes this a
/// cheap isomorphism-complete source of GF(3) dimension-3 instances.
std::vector<Algebra<Modp>> enumerate_triangular_zinbiel(std::uint32_t p, int dim);

// ---------------------------------------------------------------- random

struct EnumeratedPick {
  std::uint32_t p = 2;
  int dim = 2;
};

struct FreeTruncation {
  FieldSpec field;
  int max_generators = 2;
  int max_degree = 3;
};

struct DirectSumRecipe;

using Recipe = std::variant<EnumeratedPick, FreeTruncation, std::shared_ptr<DirectSumRecipe>>;

struct DirectSumRecipe {
  Recipe left;
  Recipe right;
};

FieldSpec recipe_field(const Recipe& r);

namespace detail {

template <class S>
Algebra<S> random_zinbiel_impl(std::mt19937_64& rng, const Recipe& recipe);

std::vector<Algebra<Modp>> enumerated_corpus(std::uint32_t p, int dim);

}  // namespace detail

/// Deterministic in `seed`; every output satisfies the Zinbiel identity by
/// construction.
template <class S>
Algebra<S> random_zinbiel(std::uint64_t seed, const Recipe& recipe) {
  std::mt19937_64 rng(seed);
  return detail::random_zinbiel_impl<S>(rng, recipe);
}

namespace detail {

template <class S>
Algebra<S> random_zinbiel_impl(std::mt19937_64& rng, const Recipe& recipe) {
  if (const auto* pick = std::get_if<EnumeratedPick>(&recipe)) {
    if constexpr (std::is_same_v<S, Modp>) {
      const auto corpus = enumerated_corpus(pick->p, pick->dim);
      std::uniform_int_distribution<std::size_t> dist(0, corpus.size() - 1);
      return corpus[dist(rng)];
    } else {
      throw FieldMismatch("enumerated-pick yields GF(p) algebras");
    }
  }
  if (const auto* fr = std::get_if<FreeTruncation>(&recipe)) {
    std::uniform_int_distribution<int> gd(1, fr->max_generators);
    std::uniform_int_distribution<int> nd(1, fr->max_degree);
    const int g = gd(rng);
    const int n = nd(rng);
    return free_zinbiel_truncated<S>(g, n, fr->field);
  }
  const auto& ds = *std::get<std::shared_ptr<DirectSumRecipe>>(recipe);
  Algebra<S> left = random_zinbiel_impl<S>(rng, ds.left);
  Algebra<S> right = random_zinbiel_impl<S>(rng, ds.right);
  return direct_sum(left, right);
}

}  // namespace detail

}  // namespace zinbiel
