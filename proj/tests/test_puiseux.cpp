#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "trop/puiseux.hpp"

using namespace trop;

namespace {

PuiseuxScalar ps(std::vector<std::pair<long, std::string>> terms) {
  std::vector<PuiseuxTerm> ts;
  for (auto& [c, e] : terms) ts.push_back({Rat(c), parse_rat(e)});
  return PuiseuxScalar(std::move(ts));
}

PuiseuxScalar random_scalar(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 3);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  int k = nterms(rng);
  std::vector<PuiseuxTerm> ts;
  for (int i = 0; i < k; ++i) {
    long c = coef(rng);
    if (c == 0) c = 1;
    ts.push_back({Rat(c), make_rat(num(rng), den(rng))});
  }
  PuiseuxScalar s{std::move(ts)};
  if (!allow_zero && s.is_zero()) return PuiseuxScalar::one();
  return s;
}

}  // namespace

TEST_CASE("valuation of basic elements") {
  CHECK(*ps_val(PuiseuxScalar::t_power(Rat(1))) == 1);
  CHECK(!ps_val(PuiseuxScalar::zero()).has_value());
  // 1 - t^(1/4) - t has valuation 0: the constant term dominates.
  auto a = ps({{1, "0"}, {-1, "1/4"}, {-1, "1"}});
  CHECK(*ps_val(a) == 0);
}

TEST_CASE("arithmetic merges and cancels terms") {
  auto a = ps({{1, "0"}, {-1, "1/3"}, {-1, "1"}});
  CHECK(a - PuiseuxScalar::one() == ps({{-1, "1/3"}, {-1, "1"}}));
  CHECK(PuiseuxScalar::t_power(make_rat(1, 2)) *
            PuiseuxScalar::t_power(make_rat(1, 3)) ==
        PuiseuxScalar::t_power(make_rat(5, 6)));
  auto b = ps({{1, "0"}, {1, "1"}});
  CHECK(b + PuiseuxScalar::constant(-1) == PuiseuxScalar::t_power(Rat(1)));
}

TEST_CASE("valuation is multiplicative and add-superadditive") {
  std::mt19937_64 rng(20260809);
  for (int iter = 0; iter < 200; ++iter) {
    auto a = random_scalar(rng, false);
    auto b = random_scalar(rng, false);
    CHECK(*ps_val(a * b) == *ps_val(a) + *ps_val(b));
    auto s = a + b;
    if (!s.is_zero()) {
      Rat lo = std::min(*ps_val(a), *ps_val(b));
      CHECK(*ps_val(s) >= lo);
      if (*ps_val(a) != *ps_val(b)) CHECK(*ps_val(s) == lo);
    }
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    auto a = random_scalar(rng, false);
    auto b = random_scalar(rng, false);
    auto p = a * b;
    CHECK(p.divide_exact(b) == a);
  }
  auto two = PuiseuxScalar::constant(2);
  auto one_plus_t = ps({{1, "0"}, {1, "1"}});
  CHECK_THROWS_AS(two.divide_exact(one_plus_t), std::domain_error);
}

TEST_CASE("string rendering is canonical") {
  CHECK(ps({{1, "0"}, {-1, "1/3"}, {-1, "1"}}).to_string() ==
        "1 - t^(1/3) - t");
  CHECK(PuiseuxScalar::zero().to_string() == "0");
  CHECK(ps({{2, "1/2"}}).to_string() == "2t^(1/2)");
  CHECK(ps({{1, "2"}}).to_string() == "t^2");
}
