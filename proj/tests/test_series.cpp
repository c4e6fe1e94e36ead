#include "twophoton/laurent.hpp"
#include "twophoton/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace twophoton;

namespace {

Series random_series(std::mt19937 &rng, int order, bool zero_constant = false)
{
	std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
	Series s(order);
	for (int i = zero_constant ? 1 : 0; i <= order; ++i)
		s[i] = frac(num(rng), den(rng));
	return s;
}

Rational factorial(int n)
{
	Rational r = 1;
	for (int i = 2; i <= n; ++i)
		r *= i;
	return r;
}

// generalized binomial coefficient C(1/2, n)
Rational half_binomial(int n)
{
	Rational r = 1;
	for (int i = 0; i < n; ++i)
		r *= (Rational(1, 2) - i) / (i + 1);
	return r;
}

} // namespace

TEST_CASE("parse_rational accepts exact fractions and rejects the rest")
{
	CHECK(parse_rational("3/6") == Rational(1, 2));
	CHECK(parse_rational("-1/4") == Rational(-1, 4));
	CHECK(parse_rational("+7") == Rational(7));
	CHECK(parse_rational("0") == 0);
	for (char const *bad : {"", "1/", "/2", "1/0", "0.5", "1/-2", "a", "1 /2", "--1"})
		CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
	CHECK(to_string(parse_rational("10/4")) == "5/2");
}

TEST_CASE("complex rationals")
{
	ComplexRational a = parse_complex("1/2:-3"), b = parse_complex("2");
	CHECK(a.re == Rational(1, 2));
	CHECK(a.im == -3);
	CHECK(b.im == 0);
	CHECK(a * inverse(a) == ComplexRational(1));
	CHECK((a * b).im == -6);
	CHECK_THROWS_AS(inverse(ComplexRational(0)), std::domain_error);
	CHECK_THROWS_AS(parse_complex("1:x"), std::invalid_argument);
}

TEST_CASE("series ring axioms on random truncated series")
{
	std::mt19937 rng(20261016);
	for (int trial = 0; trial < 40; ++trial)
	{
		int k = trial % 7;
		Series a = random_series(rng, k), b = random_series(rng, k), c = random_series(rng, k);
		Series one = Series::constant(1, k), zero(k);
		CHECK(a + b == b + a);
		CHECK((a + b) + c == a + (b + c));
		CHECK(a * b == b * a);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK(a * one == a);
		CHECK(a + zero == a);
		CHECK((a - a).is_zero());
	}
}

TEST_CASE("truncation commutes with the ring operations")
{
	std::mt19937 rng(7);
	for (int trial = 0; trial < 30; ++trial)
	{
		Series a = random_series(rng, 6), b = random_series(rng, 6);
		for (int j = 0; j <= 6; ++j)
		{
			CHECK((a * b).truncate(j) == a.truncate(j) * b.truncate(j));
			CHECK((a + b).truncate(j) == a.truncate(j) + b.truncate(j));
		}
		CHECK(a.truncate(3).extend(6).truncate(3) == a.truncate(3));
	}
	CHECK_THROWS_AS(Series(2).truncate(3), SeriesError);
	CHECK_THROWS_AS(Series(2) + Series(3), SeriesError);
	CHECK_THROWS_AS(Series(-1), SeriesError);
}

TEST_CASE("exp matches the factorial series and is a homomorphism")
{
	int k = 8;
	Series z = Series::monomial(2, 1, k);
	Series e = series_exp(z);
	for (int n = 0; n <= k; ++n)
		CHECK(e[n] == Rational(mpz_class(1) << n) / factorial(n));

	std::mt19937 rng(11);
	for (int trial = 0; trial < 20; ++trial)
	{
		Series a = random_series(rng, 6, true), b = random_series(rng, 6, true);
		CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
		CHECK(series_exp(a) * series_exp(-a) == Series::constant(1, 6));
	}
	CHECK_THROWS_AS(series_exp(Series::constant(1, 3)), SeriesError);
}

TEST_CASE("sqrt matches the binomial series and squares back")
{
	int k = 9;
	Series s = Series::constant(1, k) + Series::monomial(1, 1, k);
	Series r = series_sqrt(s);
	for (int n = 0; n <= k; ++n)
		CHECK(r[n] == half_binomial(n));

	std::mt19937 rng(13);
	for (int trial = 0; trial < 20; ++trial)
	{
		Series a = Series::constant(1, 6) + random_series(rng, 6, true);
		Series q = series_sqrt(a);
		CHECK(q * q == a);
		CHECK(q[0] == 1);
	}
	CHECK_THROWS_AS(series_sqrt(Series::constant(4, 2)), SeriesError);
}

TEST_CASE("inverse series")
{
	std::mt19937 rng(17);
	for (int trial = 0; trial < 20; ++trial)
	{
		Series a = random_series(rng, 6);
		if (a[0] == 0)
			a[0] = 3;
		CHECK(series_inv(a) * a == Series::constant(1, 6));
	}
	// 1/(1 - z) = sum z^n
	Series g = series_inv(Series::constant(1, 5) - Series::monomial(1, 1, 5));
	for (int n = 0; n <= 5; ++n)
		CHECK(g[n] == 1);
	CHECK_THROWS(series_inv(Series::monomial(1, 1, 3)));
}

TEST_CASE("division by z, valuation and evaluation")
{
	Series a(4, {0, 0, 3, 1, 2});
	CHECK(a.valuation() == 2);
	Series d = a.divide_by_z(2);
	CHECK(d.order() == 2);
	CHECK(d == Series(2, {3, 1, 2}));
	CHECK_THROWS_AS(a.divide_by_z(3), SeriesError);
	CHECK(Series(3).valuation() == 4);
	CHECK(a.evaluate(Rational(1, 2)) == Rational(3, 4) + Rational(1, 8) + Rational(1, 8));
	CHECK(to_string(Series(2, {1, 0, Rational(-1, 2)})) == "1 + -1/2*z^2");
	CHECK(to_string(Series(2)) == "0");
}

TEST_CASE("Laurent coefficients cancel exactly")
{
	using L = LaurentPoly<Rational>;
	L a = L::monomial(2, -3) + L::monomial(1, 1);
	L b = L::monomial(Rational(1, 2), 3);
	L p = a * b;
	CHECK(p.coefficient(0) == 1);
	CHECK(p.coefficient(4) == Rational(1, 2));
	CHECK((p - p).is_zero());
	CHECK(inverse(b) * b == L(1));
	CHECK_THROWS(inverse(a));

	// series with Laurent coefficients: (e^{2z a^2} - 1)/(z a^2) is polynomial in a
	using LS = TruncatedSeries<L>;
	LS u = LS::monomial(L::monomial(2, 2), 1, 5);
	LS q = (series_exp(u) - LS::constant(L(1), 5)).divide_by_z() * LS::constant(L::monomial(1, -2), 4);
	for (int i = 0; i <= 4; ++i)
		CHECK(q[i].min_exponent() >= 0);
	CHECK(q[0] == L(2));
}
