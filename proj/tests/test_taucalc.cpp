#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "wpvol/tau.hpp"

using namespace wpvol;

namespace {

Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("TauKey is canonical") {
  CHECK(TauKey(1, {0, 2, 1}) == TauKey(1, {2, 1, 0}));
  CHECK(TauKey(1, {0, 2, 1}).indices() == std::vector<int>{2, 1, 0});
  CHECK(TauKey(2, {}).to_string() == "2|-");
  CHECK(TauKey(0, {0, 3, 0}).to_string() == "0|3,0,0");
  CHECK_FALSE(TauKey(0, {0, 0}).stable());
  CHECK(TauKey(1, {1}).stable());
}

TEST_CASE("tau examples") {
  TauCalculator calc;
  CHECK(calc.tau(0, {0, 0, 0}) == 1);
  CHECK(calc.tau(0, {0, 0, 1}) == 0);
  CHECK(calc.tau(0, {1, 0, 0, 0}) == 1);
  CHECK(calc.tau(1, {1}) == Q(1, 24));
  CHECK(calc.tau(0, {2, 0, 0, 0, 0}) == 1);
  // Golden: one-point genus-2 bracket, independently 1/(24^2 2!).
  CHECK(calc.tau(2, {4}) == Q(1, 1152));
  CHECK(calc.tau(2, {4}) == oracle::one_point(2));
}

TEST_CASE("unstable and off-dimension keys vanish") {
  TauCalculator calc;
  CHECK(calc.tau(0, {}) == 0);
  CHECK(calc.tau(0, {0}) == 0);
  CHECK(calc.tau(0, {0, 0}) == 0);
  CHECK(calc.tau(1, {}) == 0);
  CHECK(calc.tau(1, {2}) == 0);
  CHECK(calc.tau(2, {3}) == 0);
}

TEST_CASE("classical genus-2 values") {
  TauCalculator calc;
  CHECK(calc.tau(2, {2, 2, 2}) == Q(7, 240));
  CHECK(calc.tau(2, {3, 2}) == Q(29, 5760));
  CHECK(calc.tau(1, {1, 1}) == Q(1, 24));
  CHECK(calc.tau(1, {2, 0}) == Q(1, 24));
}

TEST_CASE("tau_batch expands the multi-index") {
  TauCalculator calc;
  CHECK(calc.tau_batch(2, MultiIndex({{2, 3}})) == calc.tau(2, {2, 2, 2}));
  CHECK(calc.tau_batch(2, MultiIndex({{2, 1}, {3, 1}})) == calc.tau(2, {3, 2}));
  CHECK(calc.tau_batch(2, MultiIndex({{4, 1}})) == calc.tau(2, {4}));
  CHECK(calc.tau_batch(0, MultiIndex({{2, 1}}), 4) == calc.tau(0, {2, 0, 0, 0, 0}));
}

TEST_CASE("DVV pins <tau_1>_1: 15 t = 3 t + 1/2") {
  // With <tau_1>_1 = t left free, one DVV step on <tau_2 tau_0>_1 is affine
  // in t. Read off its coefficients from two probe values of t.
  const TauKey key(1, {2, 0});
  TauCalculator at_zero(Rational(0));
  TauCalculator at_one(Rational(1));
  const Rational intercept = 15 * at_zero.via_dvv(key, 2);
  const Rational slope = 15 * at_one.via_dvv(key, 2) - intercept;
  CHECK(slope == 3);
  CHECK(intercept == Q(1, 2));
  // String equation: <tau_0 tau_2>_1 = t, so 15 t = 3 t + 1/2.
  const Rational t = intercept / (15 - slope);
  CHECK(t == Q(1, 24));
  TauCalculator calc;
  CHECK(calc.via_dvv(key, 2) == calc.via_string(key));
}

TEST_CASE("genus zero matches the multinomial closed form") {
  TauCalculator calc;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const TauKey key = oracle::random_dimensional_key(rng, 0, 10);
    CAPTURE(key.to_string());
    CHECK(calc.tau(key) == oracle::genus_zero_correlator(key.indices()));
  }
}

TEST_CASE("one-point functions") {
  TauCalculator calc;
  for (int g = 1; g <= 5; ++g) CHECK(calc.tau(g, {3 * g - 2}) == oracle::one_point(g));
}

TEST_CASE("permutation invariance, dimension gate, non-negativity") {
  TauCalculator calc;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    TauKey key = oracle::random_dimensional_key(rng, 3, 8);
    std::vector<int> shuffled = key.indices();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Rational value = calc.tau(key);
    CHECK(calc.tau(TauKey(key.genus(), shuffled)) == value);
    CHECK(value >= 0);
    Rational reduced = value;
    reduced.canonicalize();
    CHECK(to_string(reduced) == to_string(value));

    // Bump one index: dimension fails, value must vanish.
    shuffled.front() += 1;
    CHECK(calc.tau(TauKey(key.genus(), shuffled)) == 0);
  }
}

TEST_CASE("string and dilaton reductions agree") {
  TauCalculator calc;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const TauKey key = oracle::random_key_with_zero_and_one(rng);
    CAPTURE(key.to_string());
    CHECK(calc.via_string(key) == calc.via_dilaton(key));
  }
}

TEST_CASE("DVV on any index >= 2 gives the same value") {
  TauCalculator calc;
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 120; ++trial) {
    const TauKey key = oracle::random_dimensional_key(rng, 3, 6);
    std::vector<int> big;
    for (int d : key.indices()) {
      if (d >= 2 && std::find(big.begin(), big.end(), d) == big.end()) big.push_back(d);
    }
    if (big.empty()) continue;
    CAPTURE(key.to_string());
    const Rational value = calc.tau(key);
    for (int k : big) CHECK(calc.via_dvv(key, k) == value);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("reduction helpers reject missing indices") {
  TauCalculator calc;
  CHECK_THROWS_AS(calc.via_string(TauKey(1, {1})), std::invalid_argument);
  CHECK_THROWS_AS(calc.via_dilaton(TauKey(0, {0, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(calc.via_dvv(TauKey(1, {1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(calc.via_dvv(TauKey(1, {2, 0}), 3), std::invalid_argument);
}

TEST_CASE("cold and warm caches agree; concurrent filling matches serial") {
  std::vector<TauKey> keys;
  std::mt19937 rng(23);
  for (int i = 0; i < 80; ++i) keys.push_back(oracle::random_dimensional_key(rng, 3, 7));

  TauCalculator serial;
  std::vector<Rational> cold;
  for (const auto& k : keys) cold.push_back(serial.tau(k));
  for (std::size_t i = 0; i < keys.size(); ++i) CHECK(serial.tau(keys[i]) == cold[i]);

  TauCalculator parallel;
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      // Each worker walks the keys from a different starting point.
      pool.emplace_back([&, t] {
        for (std::size_t i = 0; i < keys.size(); ++i) parallel.tau(keys[(i + 20 * static_cast<std::size_t>(t)) % keys.size()]);
      });
    }
  }
  CHECK(parallel.store() == serial.store());

  TauCalculator warm(serial.store());
  for (std::size_t i = 0; i < keys.size(); ++i) CHECK(warm.tau(keys[i]) == cold[i]);
  CHECK(warm.store() == serial.store());
}

TEST_CASE("memo store is write-once") {
  MemoStore store;
  store.insert(TauKey(1, {1}), Q(1, 24));
  store.insert(TauKey(1, {1}), Q(5));
  CHECK(store.find(TauKey(1, {1})) == Q(1, 24));
  CHECK(store.size() == 1);
  CHECK_FALSE(store.find(TauKey(0, {0, 0, 0})).has_value());
}

TEST_CASE("cache lines") {
  CHECK(format_cache_line(TauKey(1, {1}), Q(1, 24)) == "1|1|1/24");
  CHECK(format_cache_line(TauKey(0, {0, 0, 0}), 1) == "0|0,0,0|1");
  CHECK(format_cache_line(TauKey(3, {}), 0) == "3|-|0");

  const auto [key, value] = parse_cache_line("1|1|1/24");
  CHECK(key == TauKey(1, {1}));
  CHECK(value == Q(1, 24));
  CHECK(parse_cache_line("2|-|0").first == TauKey(2, {}));

  CHECK_THROWS_AS(parse_cache_line("1|1|1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cache_line("1|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cache_line("1|0,1|1"), std::invalid_argument);  // not descending
  CHECK_THROWS_AS(parse_cache_line("x|1|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cache_line("1|1,|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cache_line("1||1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cache_line("1|1|1|1"), std::invalid_argument);
}

TEST_CASE("cache file round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "wpvol_tau_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "cache.txt";

  SUBCASE("single entry") {
    MemoStore store;
    store.insert(TauKey(0, {0, 0, 0}), 1);
    save_cache(store, path);
    CHECK(load_cache(path) == store);
  }

  SUBCASE("computed store, sorted lines") {
    TauCalculator calc;
    calc.tau(3, {2, 2, 2, 2, 2, 2, 0, 0});
    calc.tau(2, {5, 1, 0});
    save_cache(calc.store(), path);
    const MemoStore loaded = load_cache(path);
    CHECK(loaded == calc.store());

    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    CHECK(lines.size() == calc.store().size());
    CHECK(std::is_sorted(lines.begin(), lines.end()));
  }

  SUBCASE("malformed line reports its number") {
    {
      std::ofstream out(path);
      out << "1|1|1/24\n1|1|1/0\n";
    }
    try {
      load_cache(path);
      FAIL("expected CacheError");
    } catch (const CacheError& e) {
      CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
  }

  SUBCASE("missing file") { CHECK_THROWS_AS(load_cache(dir / "does-not-exist"), CacheError); }

  std::filesystem::remove_all(dir);
}
