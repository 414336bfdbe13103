#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "trop/poly.hpp"

using namespace trop;

namespace {

PuiseuxScalar ps(std::vector<std::pair<long, std::string>> terms) {
  std::vector<PuiseuxTerm> ts;
  for (auto& [c, e] : terms) ts.push_back({Rat(c), parse_rat(e)});
  return PuiseuxScalar(std::move(ts));
}

// Example 1.2 / 5.1 pair: f = c1 + c2 x + c3 y, g = c4 x + c5 xy + t c6 y.
BivariatePoly line_f(const PuiseuxScalar& c1) {
  BivariatePoly f;
  f.set(0, 0, c1);
  f.set(1, 0, PuiseuxScalar::one());
  f.set(0, 1, PuiseuxScalar::one());
  return f;
}

BivariatePoly conic_g() {
  BivariatePoly g;
  g.set(1, 0, PuiseuxScalar::one());
  g.set(1, 1, PuiseuxScalar::one());
  g.set(0, 1, PuiseuxScalar::t_power(Rat(1)));
  return g;
}

std::vector<Rat> expand(const RootValuations& rv) { return rv.expanded(); }

}  // namespace

TEST_CASE("resultant of the line/conic pair matches the closed form") {
  // c1 = 1 - t^(1/3) - t, all other coefficients 1. The middle coefficient
  // c3 c4 - c1 c5 - t c2 c6 collapses to t^(1/3).
  auto c1 = ps({{1, "0"}, {-1, "1/3"}, {-1, "1"}});
  UniPoly r = resultant_wrt(line_f(c1), conic_g(), Var::y);
  // -x^2 + t^(1/3) x - t (1 - t^(1/3) - t)
  std::vector<PuiseuxScalar> expect(3);
  expect[2] = PuiseuxScalar::constant(-1);
  expect[1] = PuiseuxScalar::t_power(make_rat(1, 3));
  expect[0] = -(PuiseuxScalar::t_power(Rat(1)) * c1);
  CHECK(r == UniPoly(expect));
}

TEST_CASE("degree-one resultant reduces to a 2x2 determinant") {
  BivariatePoly f, g;
  f.set(1, 0, PuiseuxScalar::one());
  f.set(0, 1, PuiseuxScalar::one());
  g.set(1, 0, PuiseuxScalar::one());
  g.set(0, 1, PuiseuxScalar::constant(-1));
  UniPoly r = resultant_wrt(f, g, Var::y);
  std::vector<PuiseuxScalar> expect(2);
  expect[1] = PuiseuxScalar::constant(2);
  CHECK(r == UniPoly(expect));
}

TEST_CASE("identical polynomials have identically zero resultant") {
  auto f = line_f(PuiseuxScalar::one());
  CHECK_THROWS_AS(resultant_wrt(f, f, Var::y), IdenticallyZeroResultant);
}

TEST_CASE("newton root valuations from coefficient valuation profiles") {
  auto poly_with_vals = [](std::vector<std::string> vals) {
    std::vector<PuiseuxScalar> c;
    for (auto& v : vals) c.push_back(PuiseuxScalar::t_power(parse_rat(v)));
    return UniPoly(std::move(c));
  };
  // (x^2 : 0, x : 0, 1 : t) -> valuations {0, 1}
  auto rv = newton_root_valuations(poly_with_vals({"1", "0", "0"}));
  CHECK(expand(rv) == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(rv.zero_roots == 0);
  // middle valuation r = 1/4 -> {1/4, 3/4}
  rv = newton_root_valuations(poly_with_vals({"1", "1/4", "0"}));
  CHECK(expand(rv) == std::vector<Rat>{make_rat(1, 4), make_rat(3, 4)});
  // middle valuation r = 3/4 above the hull -> two slopes of 1/2
  rv = newton_root_valuations(poly_with_vals({"1", "3/4", "0"}));
  CHECK(expand(rv) == std::vector<Rat>{make_rat(1, 2), make_rat(1, 2)});
}

TEST_CASE("zero roots are counted separately") {
  std::vector<PuiseuxScalar> c(4);
  c[1] = PuiseuxScalar::one();
  c[3] = PuiseuxScalar::t_power(Rat(2));
  UniPoly p(std::move(c));
  auto rv = newton_root_valuations(p);
  CHECK(rv.zero_roots == 1);
  CHECK(rv.total_multiplicity() == p.degree() - p.ord());
}

TEST_CASE("resultant is symmetric up to sign") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<long> expnum(0, 3);
  for (int iter = 0; iter < 30; ++iter) {
    BivariatePoly f, g;
    auto rnd = [&](int) {
      long c = coef(rng);
      if (c == 0) c = 1;
      return PuiseuxScalar::monomial(Rat(c), make_rat(expnum(rng), 2));
    };
    f.set(0, 0, rnd(0));
    f.set(1, 0, rnd(0));
    f.set(0, 1, rnd(0));
    f.set(1, 1, rnd(0));
    g.set(0, 0, rnd(0));
    g.set(2, 0, rnd(0));
    g.set(0, 1, rnd(0));
    g.set(1, 1, rnd(0));
    UniPoly rfg = resultant_wrt(f, g, Var::y);
    UniPoly rgf = resultant_wrt(g, f, Var::y);
    bool same = rfg == rgf || rfg == -rgf;
    REQUIRE(same);
    auto a = newton_root_valuations(rfg);
    auto b = newton_root_valuations(rgf);
    CHECK(a.expanded() == b.expanded());
    CHECK(a.zero_roots == b.zero_roots);
  }
}

TEST_CASE("resultant roots agree with factored-root oracle") {
  // f = (y - a1 x^k1 t^e1)(y - a2 x^k2 t^e2), g likewise; the resultant in y
  // is the product of pairwise differences of roots. Each difference is a
  // binomial in x whose root valuations follow directly from its two terms,
  // independent of the Sylvester path.
  struct Root {
    Rat a;
    long k;
    Rat e;
  };
  auto poly_from_roots = [](const std::vector<Root>& roots) {
    BivariatePoly acc;
    acc.set(0, 0, PuiseuxScalar::one());
    for (const auto& r : roots) {
      BivariatePoly lin;
      lin.set(0, 1, PuiseuxScalar::one());
      lin.set(r.k, 0, PuiseuxScalar::monomial(-r.a, r.e));
      acc = acc * lin;
    }
    return acc;
  };
  auto oracle_vals = [](const std::vector<Root>& fr,
                        const std::vector<Root>& gr) {
    // Valuations of x-roots of prod_{i,j} (a_i x^{k_i} t^{e_i} - b_j x^{k_j} t^{e_j}).
    std::vector<Rat> out;
    long zeros = 0;
    for (const auto& ri : fr)
      for (const auto& rj : gr) {
        if (ri.k == rj.k) {
          // (a t^e - b t^f) x^k: k roots at zero unless coefficient vanishes.
          if (ri.a == rj.a && ri.e == rj.e)
            throw std::runtime_error("common root; skip");
          zeros += ri.k;
        } else {
          long width = std::labs(ri.k - rj.k);
          Rat val = (ri.e - rj.e) / Rat(rj.k - ri.k);
          long lo = std::min(ri.k, rj.k);
          zeros += lo;
          for (long m = 0; m < width; ++m) out.push_back(val);
        }
      }
    std::sort(out.begin(), out.end());
    return std::make_pair(out, zeros);
  };

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> adist(1, 4);
  std::uniform_int_distribution<long> kdist(0, 2);
  std::uniform_int_distribution<long> edist(0, 4);
  int done = 0;
  while (done < 40) {
    std::vector<Root> fr = {{Rat(adist(rng)), kdist(rng), make_rat(edist(rng), 2)},
                            {Rat(adist(rng)), kdist(rng), make_rat(edist(rng), 2)}};
    std::vector<Root> gr = {{Rat(adist(rng)), kdist(rng), make_rat(edist(rng), 2)},
                            {Rat(adist(rng)), kdist(rng), make_rat(edist(rng), 2)}};
    std::pair<std::vector<Rat>, long> expect;
    try {
      expect = oracle_vals(fr, gr);
    } catch (const std::runtime_error&) {
      continue;
    }
    BivariatePoly f = poly_from_roots(fr), g = poly_from_roots(gr);
    UniPoly res;
    try {
      res = resultant_wrt(f, g, Var::y);
    } catch (const IdenticallyZeroResultant&) {
      continue;
    }
    auto rv = newton_root_valuations(res);
    CHECK(rv.expanded() == expect.first);
    CHECK(rv.zero_roots == expect.second);
    ++done;
  }
}
