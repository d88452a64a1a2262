#include <doctest.h>

#include "../support/helpers.hpp"
#include "tclass/errors.hpp"
#include "tclass/sampling.hpp"

using namespace testing;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(floor(Rational(-1, 3)) == -1);
  CHECK(ceil(Rational(-1, 3)) == 0);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("compare is lexicographic") {
  const auto z2 = Z2();
  const auto& g = *z2;
  CHECK(compare(g, elem({"1", "-5"}), elem({"0", "100"})) == std::strong_ordering::greater);
  CHECK(compare(g, elem({"1", "-5"}), elem({"1", "-5"})) == std::strong_ordering::equal);
  const auto h = group_of({Zc(), Zloc({2})});
  CHECK(compare(*h, elem({"0", "1/2"}), elem({"0", "3/4"})) == std::strong_ordering::less);
  CHECK_THROWS_AS(compare(g, elem({"1/2", "0"}), elem({"0", "0"})), MalformedElement);
  CHECK_THROWS_AS(compare(g, elem({"1"}), elem({"0", "0"})), MalformedElement);
}

TEST_CASE("add and neg") {
  const auto z2 = Z2();
  const auto& g = *z2;
  CHECK(add(g, elem({"1", "2"}), elem({"0", "-3"})) == elem({"1", "-1"}));
  const auto h = group_of({Zc(), Zloc({2})});
  CHECK(neg(*h, elem({"0", "1/2"})) == elem({"0", "-1/2"}));
  Sampler rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto a = rng.element(*h);
    CHECK(add(*h, a, neg(*h, a)) == zero(*h));
  }
}

TEST_CASE("component membership") {
  CHECK_FALSE(is_member(Zloc({2}), Rational(1, 3)));
  CHECK(is_member(Zloc({2}), Rational(5, 8)));
  CHECK_FALSE(is_member(Zc(), Rational(1, 2)));
  CHECK(is_member(Qc(), Rational(7, 9)));
  CHECK(is_member(Zloc({2, 3}), Rational(-5, 12)));
  CHECK_FALSE(is_member(Zloc({2, 3}), Rational(1, 10)));
  CHECK(Zloc({3, 2, 3}).primes() == std::vector<std::uint64_t>{2, 3});
  CHECK_THROWS_AS(Zloc({}), InvalidArgument);
  CHECK_THROWS_AS(Zloc({4}), InvalidArgument);
  CHECK(Zloc({3, 2}).describe() == "Z[1/2,1/3]");
}

TEST_CASE("component reduction") {
  CHECK(Zc().reduce(Rational(7, 2)) == Rational(1, 2));
  CHECK(Zc().reduce(Rational(-1, 3)) == Rational(2, 3));
  CHECK(Qc().reduce(Rational(5, 7)) == 0);
  // 5/12 = 5/(4*3): the 2-part is absorbed, 5 * 4^-1 = 5 * 1 = 2 mod 3.
  CHECK(Zloc({2}).reduce(Rational(5, 12)) == Rational(2, 3));
  CHECK(Zloc({2}).reduce(Rational(3, 8)) == 0);
  Sampler rng(9);
  for (const auto& c : {Zc(), Qc(), Zloc({2}), Zloc({3, 5})}) {
    for (int k = 0; k < 100; ++k) {
      Rational q(rng.between(-50, 50), rng.between(1, 60));
      q.canonicalize();
      const Rational r = c.reduce(q);
      CHECK(c.contains(q - r));
      CHECK(c.reduce(r) == r);
      CHECK(r >= 0);
      CHECK(r < 1);
    }
  }
}

TEST_CASE("quotient_has_least_positive") {
  CHECK(quotient_has_least_positive(*Z2(), ConvexSubgroup{1}));
  CHECK_FALSE(quotient_has_least_positive(*Q(), ConvexSubgroup{1}));
  const auto h = group_of({Zc(), Zloc({2})});
  CHECK_FALSE(quotient_has_least_positive(*h, ConvexSubgroup{2}));
  CHECK(quotient_has_least_positive(*h, ConvexSubgroup{1}));
  CHECK_THROWS_AS(quotient_has_least_positive(*h, ConvexSubgroup{0}), UndefinedQuotient);
  CHECK_THROWS_AS(quotient_has_least_positive(*h, ConvexSubgroup{3}), InvalidArgument);
}

TEST_CASE("Z[1/2] has no least positive element below 1") {
  // Halving any positive member stays a positive member.
  const auto c = Zloc({2});
  Rational x(1);
  for (int k = 0; k < 40; ++k) {
    x /= 2;
    CHECK(c.contains(x));
    CHECK(x > 0);
  }
}

TEST_CASE("order is compatible with addition") {
  Sampler rng(17);
  for (const auto& g : {Z2(), ZQ(), ZZthird(), Zhalf()}) {
    for (int k = 0; k < 200; ++k) {
      const auto a = rng.element(*g), b = rng.element(*g), c = rng.element(*g);
      if (compare(*g, a, b) == std::strong_ordering::less) {
        CHECK(compare(*g, add(*g, a, c), add(*g, b, c)) == std::strong_ordering::less);
      }
    }
  }
}

TEST_CASE("convex subgroup chain") {
  const auto g = group_of({Zc(), Qc(), Zloc({2})});
  const auto hs = convex_subgroups(*g);
  REQUIRE(hs.size() == 4);
  for (std::size_t i = 0; i < hs.size(); ++i) CHECK(hs[i].index == i);
  Sampler rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto a = rng.element(*g);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        if (contains(*g, hs[j], a)) CHECK(contains(*g, hs[i], a));
      }
    }
  }
  CHECK(contains(*g, hs[0], elem({"5", "1/3", "1/2"})));
  CHECK(contains(*g, hs[3], zero(*g)));
  CHECK_FALSE(contains(*g, hs[3], elem({"0", "0", "1/2"})));
}

TEST_CASE("strongly discrete detector agrees with prime idempotence") {
  for (const auto& g : {Z(), Z2(), Q(), ZQ(), ZZthird(), group_of({Zc(), Zc(), Zc()})}) {
    bool any_idempotent_prime = false;
    for (std::size_t i = 1; i <= g->rank(); ++i) {
      const bool idem = is_idempotent(prime_cut(g, i));
      CHECK(idem == !quotient_has_least_positive(*g, ConvexSubgroup{i}));
      any_idempotent_prime = any_idempotent_prime || idem;
    }
    CHECK(is_strongly_discrete(*g) == !any_idempotent_prime);
  }
}

TEST_CASE("truncated groups") {
  const auto g = group_of({Zc(), Qc(), Zloc({2})});
  CHECK(g->truncated(2).describe() == "(Z, Q)");
  CHECK(g->describe() == "(Z, Q, Z[1/2])");
  CHECK_THROWS_AS(g->truncated(0), InvalidArgument);
  CHECK_THROWS_AS(g->at_level(4), InvalidArgument);
  CHECK_THROWS_AS(ValueGroup({}), InvalidArgument);
}
