#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "zinbiel/generators.hpp"
#include "zinbiel/structure.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

namespace {

// Interleavings by choosing which positions of the result hold u's letters.
WordSum interleavings(const Word& u, const Word& v) {
  const std::size_t n = u.size() + v.size();
  WordSum out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
    Word w;
    std::size_t a = 0, b = 0;
    for (std::size_t pos = 0; pos < n; ++pos) w.push_back((mask >> pos) & 1u ? u[a++] : v[b++]);
    out[w] += 1;
  }
  return out;
}

std::vector<Word> all_words(int letters, int max_len, bool include_empty) {
  std::vector<Word> out;
  if (include_empty) out.push_back({});
  std::vector<Word> layer{Word{}};
  for (int n = 1; n <= max_len; ++n) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int x = 0; x < letters; ++x) {
        Word y = w;
        y.push_back(x);
        next.push_back(y);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = next;
  }
  return out;
}

// Linear extension of the half-shuffle to formal sums.
WordSum half_shuffle(const WordSum& x, const WordSum& y) {
  WordSum out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) accumulate(out, zinbiel::half_shuffle(u, v), a * b);
  return out;
}

WordSum single(const Word& w) { return {{w, 1}}; }

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("shuffle examples") {
  const Word a{0}, b{1};
  CHECK(shuffle(a, {}) == single(a));
  CHECK(shuffle(a, a) == WordSum{{Word{0, 0}, 2}});
  CHECK(shuffle(a, b) == WordSum{{Word{0, 1}, 1}, {Word{1, 0}, 1}});
}

TEST_CASE("shuffle agrees with direct interleaving enumeration") {
  const auto words = all_words(2, 4, true);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 6) continue;
      const WordSum s = shuffle(u, v);
      CHECK(s == interleavings(u, v));
      CHECK(s == shuffle(v, u));
      BigInt total = 0;
      for (const auto& [w, c] : s) total += c;
      CHECK(total == binomial(static_cast<int>(u.size() + v.size()), static_cast<int>(u.size())));
    }
}

TEST_CASE("shuffle is associative") {
  const auto words = all_words(2, 2, true);
  for (const auto& u : words)
    for (const auto& v : words)
      for (const auto& w : words) {
        WordSum left, right;
        for (const auto& [x, c] : shuffle(u, v)) accumulate(left, shuffle(x, w), c);
        for (const auto& [x, c] : shuffle(v, w)) accumulate(right, shuffle(u, x), c);
        CHECK(left == right);
      }
}

TEST_CASE("half-shuffle examples") {
  const Word a{0};
  CHECK(zinbiel::half_shuffle(a, a) == single({0, 0}));
  CHECK(zinbiel::half_shuffle({0, 0}, a) == WordSum{{Word{0, 0, 0}, 2}});
  CHECK(zinbiel::half_shuffle(a, {0, 0}) == single({0, 0, 0}));
  CHECK_THROWS_AS(zinbiel::half_shuffle({}, a), PreconditionError);
  CHECK_THROWS_AS(zinbiel::half_shuffle(a, {}), PreconditionError);
  for (const auto& [w, c] : zinbiel::half_shuffle({1, 0}, {0, 1})) CHECK(w.front() == 1);
}

TEST_CASE("one-letter half-shuffle coefficients are binomials") {
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q) {
      const WordSum s = zinbiel::half_shuffle(Word(static_cast<std::size_t>(p), 0),
                                              Word(static_cast<std::size_t>(q), 0));
      REQUIRE(s.size() == 1);
      CHECK(s.begin()->first.size() == static_cast<std::size_t>(p + q));
      CHECK(s.begin()->second == binomial(p + q - 1, q));
    }
}

TEST_CASE("half-shuffle satisfies the Zinbiel identity on words") {
  const auto words = all_words(2, 4, false);
  for (const auto& u : words)
    for (const auto& v : words)
      for (const auto& w : words) {
        if (u.size() + v.size() + w.size() > 6) continue;
        const WordSum lhs = half_shuffle(half_shuffle(single(u), single(v)), single(w));
        WordSum rhs = half_shuffle(single(u), half_shuffle(single(v), single(w)));
        accumulate(rhs, half_shuffle(single(u), half_shuffle(single(w), single(v))));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("word basis") {
  const WordBasis b(2, 3);
  CHECK(b.size() == 2 + 4 + 8);
  CHECK(b.words()[0] == Word{0});
  CHECK(b.words()[1] == Word{1});
  CHECK(b.words()[2] == Word{0, 0});
  CHECK(b.words()[5] == Word{1, 1});
  CHECK(b.words()[6] == Word{0, 0, 0});
  for (std::size_t i = 1; i < b.words().size(); ++i) {
    const auto& x = b.words()[i - 1];
    const auto& y = b.words()[i];
    CHECK((x.size() < y.size() || (x.size() == y.size() && x < y)));
  }
  CHECK(b.index_of({1, 0}) == 4);
  CHECK_FALSE(b.index_of({0, 0, 0, 0}).has_value());
  CHECK_THROWS_AS(WordBasis(0, 2), PreconditionError);
}

TEST_CASE("truncated free Zinbiel algebras") {
  SUBCASE("g=1, N=3") {
    const auto a = free_zinbiel_truncated<Rational>(1, 3, Q());
    CHECK(a.dim() == 3);
    const auto s = series_report(a);
    CHECK(s.lcs_dims == std::vector<Index>{3, 2, 1, 0});
    CHECK(s.nilpotency_index == 4u);
    CHECK(a(1, 0, 2) == Rational(2));  // aa∘a = 2·aaa
    CHECK(a(0, 1, 2) == Rational(1));  // a∘aa = aaa
  }
  SUBCASE("g=1, N=2 is the running two-dimensional example") {
    CHECK(free_zinbiel_truncated<Rational>(1, 2, Q()) == nil2<Rational>(Q()));
    CHECK(free_zinbiel_truncated<Modp>(1, 2, GF(2)) == nil2<Modp>(GF(2)));
  }
  SUBCASE("g=2, N=2") {
    const auto a = free_zinbiel_truncated<Rational>(2, 2, Q());
    CHECK(a.dim() == 6);
    CHECK(check_zinbiel(a).empty());
  }
  SUBCASE("g=1, N=1 is the one-dimensional zero algebra") {
    CHECK(free_zinbiel_truncated<Rational>(1, 1, Q()) == Algebra<Rational>(Q(), 1));
  }
  SUBCASE("binomials reduce correctly mod p") {
    // aaa∘a = C(3,1) aaaa = 3·aaaa, which vanishes over GF(3)
    const auto a = free_zinbiel_truncated<Modp>(1, 4, GF(3));
    CHECK(a(2, 0, 3) == Modp(0, 3));
    CHECK(a(1, 1, 3) == Modp(0, 3));  // aa∘aa = C(3,2)·aaaa = 3·aaaa
    CHECK(check_zinbiel(a).empty());
  }
  SUBCASE("caps") {
    CHECK_THROWS_AS(free_zinbiel_truncated<Rational>(2, 8, Q()), ResourceLimit);
    CHECK_THROWS_AS(free_zinbiel_truncated<Rational>(0, 2, Q()), PreconditionError);
  }
}

TEST_CASE_TEMPLATE("free truncation is graded by word length", S, Rational, Modp) {
  const FieldSpec f = std::is_same_v<S, Rational> ? Q() : GF(2);
  for (int g = 1; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n) {
      const auto a = free_zinbiel_truncated<S>(g, n, f);
      const WordBasis basis(g, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const auto lhs = product(a, words_of_length_at_least<S>(basis, f, i),
                                   words_of_length_at_least<S>(basis, f, j));
          CHECK(words_of_length_at_least<S>(basis, f, i + j).contains(lhs));
        }
      const auto lcs = lower_central_series(a);
      for (std::size_t k = 0; k < lcs.size(); ++k)
        CHECK(lcs[k] == words_of_length_at_least<S>(basis, f, static_cast<int>(k) + 1));
    }
}

TEST_CASE("exhaustive enumeration counts") {
  // frozen from a generic check_zinbiel run over every table (see below)
  CHECK(count_zinbiel(EnumerationJob{2, 1}) == 1);
  CHECK(count_zinbiel(EnumerationJob{3, 1}) == 1);
  CHECK(count_zinbiel(EnumerationJob{2, 2}) == 4);
  CHECK(count_zinbiel(EnumerationJob{3, 2}) == 9);

  std::vector<Algebra<Modp>> only;
  enumerate_zinbiel(EnumerationJob{2, 1}, [&](std::uint64_t, const Algebra<Modp>& a) {
    only.push_back(a);
    return true;
  });
  REQUIRE(only.size() == 1);
  CHECK(only[0] == Algebra<Modp>(GF(2), 1));
}

TEST_CASE("fast table scan agrees with the generic identity checker") {
  for (std::uint32_t p : {2u, 3u})
    for (int d = 0; d <= 2; ++d) {
      std::vector<std::uint64_t> fast, generic;
      enumerate_zinbiel(EnumerationJob{p, d}, [&](std::uint64_t idx, const Algebra<Modp>& a) {
        fast.push_back(idx);
        CHECK(a == table_from_index(p, d, idx));
        return true;
      });
      for (std::uint64_t idx = 0; idx < table_count(p, d); ++idx)
        if (check_zinbiel(table_from_index(p, d, idx)).empty()) generic.push_back(idx);
      CHECK(fast == generic);
    }
}

TEST_CASE("table indices are lexicographic in the flattened tensor") {
  // index 1 sets only the last entry c[1][1][1]; index 2^7 only c[0][0][0]
  const auto a = table_from_index(2, 2, 1);
  CHECK(a(1, 1, 1) == Modp(1, 2));
  const auto b = table_from_index(2, 2, 128);
  CHECK(b(0, 0, 0) == Modp(1, 2));
  CHECK(b(1, 1, 1) == Modp(0, 2));
}

TEST_CASE("shards partition the stream") {
  for (std::uint32_t p : {2u, 3u}) {
    std::vector<std::uint64_t> whole;
    enumerate_zinbiel(EnumerationJob{p, 2}, [&](std::uint64_t idx, const Algebra<Modp>&) {
      whole.push_back(idx);
      return true;
    });
    for (std::uint64_t n : {1u, 2u, 5u, 7u, 64u}) {
      std::vector<std::uint64_t> joined;
      std::uint64_t covered = 0;
      for (std::uint64_t i = 0; i < n; ++i) {
        const EnumerationJob job{p, 2, i, n};
        const auto [lo, hi] = shard_range(job);
        covered += hi - lo;
        enumerate_zinbiel(job, [&](std::uint64_t idx, const Algebra<Modp>&) {
          CHECK(idx >= lo);
          CHECK(idx < hi);
          joined.push_back(idx);
          return true;
        });
      }
      CHECK(covered == table_count(p, 2));
      CHECK(joined == whole);
    }
    std::vector<std::uint64_t> threaded;
    enumerate_zinbiel_parallel(EnumerationJob{p, 2}, 3,
                               [&](std::uint64_t idx, const Algebra<Modp>&) { threaded.push_back(idx); });
    CHECK(threaded == whole);
    CHECK(count_zinbiel_parallel(EnumerationJob{p, 2}, 4) == whole.size());
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(count_zinbiel(EnumerationJob{5, 1}), UnsupportedOracle);
  CHECK_THROWS_AS(count_zinbiel(EnumerationJob{2, 4}), UnsupportedOracle);
  CHECK_THROWS_AS(count_zinbiel(EnumerationJob{2, 3}), ResourceLimit);
  CHECK_THROWS_AS(count_zinbiel(EnumerationJob{2, 2, 3, 3}), PreconditionError);
  CHECK_NOTHROW(shard_range(EnumerationJob{2, 3, 0, 1024, true}));
}

TEST_CASE("triangular tables are Zinbiel and nilpotent") {
  const auto list = enumerate_triangular_zinbiel(3, 3);
  CHECK_FALSE(list.empty());
  for (const auto& a : list) {
    CHECK(check_zinbiel(a).empty());
    CHECK(is_nilpotent(a));
  }
}

TEST_CASE("random instances") {
  const Recipe pick = EnumeratedPick{2, 2};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(random_zinbiel<Modp>(seed, pick) == random_zinbiel<Modp>(seed, pick));
    CHECK(check_zinbiel(random_zinbiel<Modp>(seed, pick)).empty());
  }
  const Recipe sum = std::make_shared<DirectSumRecipe>(
      DirectSumRecipe{FreeTruncation{Q(), 2, 2}, FreeTruncation{Q(), 1, 3}});
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(check_zinbiel(random_zinbiel<Rational>(seed, sum)).empty());
  CHECK(random_zinbiel<Rational>(3, FreeTruncation{Q(), 1, 1}) == Algebra<Rational>(Q(), 1));
  CHECK(recipe_field(sum) == Q());
  CHECK_THROWS_AS(random_zinbiel<Rational>(0, pick), FieldMismatch);
}
