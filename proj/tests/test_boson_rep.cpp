#include "twophoton/boson_rep.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace twophoton;

namespace {

using Poly = std::map<int, Series>; // alpha power -> z-series coefficient

void accumulate(Poly &p, int n, Series const &c)
{
	auto [it, inserted] = p.try_emplace(n, c);
	if (!inserted)
		it->second += c;
}

Poly derivative(Poly const &p)
{
	Poly d;
	for (auto const &[n, c] : p)
		if (n > 0)
			accumulate(d, n - 1, Rational(n) * c);
	std::erase_if(d, [](auto const &kv) { return kv.second.is_zero(); });
	return d;
}

// applies the operator to a polynomial by repeated differentiation, term by term
Poly act(RealDiffOperator const &op, Poly const &f)
{
	Poly out;
	for (auto const &[k, c] : op.terms())
	{
		Poly g = f;
		for (int i = 0; i < k.second; ++i)
			g = derivative(g);
		for (auto const &[n, v] : g)
			accumulate(out, n + k.first, c * v);
	}
	std::erase_if(out, [](auto const &kv) { return kv.second.is_zero(); });
	return out;
}

Poly monomial(int n, int order) { return {{n, Series::constant(1, order)}}; }

RealDiffOperator random_operator(std::mt19937 &rng, int order)
{
	std::uniform_int_distribution<int> pw(0, 3), c(-4, 4), zp(0, order);
	RealDiffOperator d(order);
	for (int t = 0; t < 4; ++t)
		d.add({pw(rng), pw(rng)}, Series::monomial(frac(c(rng), 1 + pw(rng)), zp(rng), order));
	return d;
}

// sum_j c_{j,l}(z) alpha^j at exact rational z and alpha
double coefficient_value(RealDiffOperator const &op, int l, Rational const &z, Rational const &alpha)
{
	Rational v = 0;
	for (auto const &[k, c] : op.terms())
		if (k.second == l)
		{
			Rational a = 1;
			for (int i = 0; i < k.first; ++i)
				a *= alpha;
			v += c.evaluate(z) * a;
		}
	return v.get_d();
}

} // namespace

TEST_CASE("composition follows the boson commutation relation")
{
	auto a = RealDiffOperator::alpha(0), d = RealDiffOperator::d_alpha(0);
	CHECK(compose(d, a) == RealDiffOperator::term(1, 1, 1, 0) + RealDiffOperator::constant(1, 0));
	CHECK(compose(a, a) == RealDiffOperator::term(1, 2, 0, 0));
	auto n = RealDiffOperator::term(1, 1, 1, 0);
	CHECK(compose(n, n) == RealDiffOperator::term(1, 2, 2, 0) + n);
	CHECK(commutator(d, a) == RealDiffOperator::constant(1, 0));
	CHECK(to_string(compose(d, a)) == "1 + 1*a*d");
	CHECK_THROWS_AS(compose(RealDiffOperator::alpha(1), a), SeriesError);
	CHECK_THROWS_AS(RealDiffOperator(0).add({-1, 0}, Series::constant(1, 0)), std::domain_error);
}

TEST_CASE("composition is associative and matches the action on monomials")
{
	std::mt19937 rng(41);
	for (int trial = 0; trial < 25; ++trial)
	{
		int k = trial % 3;
		auto a = random_operator(rng, k), b = random_operator(rng, k), c = random_operator(rng, k);
		CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
		for (int n = 0; n <= 12; ++n)
		{
			Poly f = monomial(n, k);
			CHECK(act(compose(a, b), f) == act(a, act(b, f)));
		}
	}
}

TEST_CASE("classical representation")
{
	CHECK(classical_rep("B-") == RealDiffOperator::term(1, 0, 2, 0));
	CHECK(classical_rep("M") == RealDiffOperator::constant(1, 0));
	CHECK(commutator(classical_rep("A-"), classical_rep("A+")) == classical_rep("M"));
	CHECK(commutator(classical_rep("N"), classical_rep("B+")) == Rational(2) * classical_rep("B+"));
	CHECK(commutator(classical_rep("B-"), classical_rep("B+")) ==
	      Rational(4) * classical_rep("N") + Rational(2) * classical_rep("M"));
	CHECK_THROWS_AS(classical_rep("Q"), std::invalid_argument);
}

TEST_CASE("deformed representation limits")
{
	for (auto const &g : twophoton_generators())
	{
		INFO(g);
		CHECK(deformed_rep(g, 0) == classical_rep(g, 0));
		CHECK(deformed_rep(g, 4).truncate(1) == first_order_rep(g));
	}
	// first-order coefficients
	auto z = [](Rational c) { return Series::monomial(c, 1, 1); };
	CHECK(first_order_rep("N").coefficient(3, 1) == z(1));
	CHECK(first_order_rep("A+").coefficient(3, 0) == z(Rational(-1, 2)));
	CHECK(first_order_rep("B-").coefficient(2, 2) == z(1));
	CHECK(first_order_rep("B-").coefficient(1, 1) == z(1));
	CHECK(first_order_rep("A-").coefficient(2, 1) == z(Rational(3, 2)));
}

TEST_CASE("deformed coefficients agree numerically with the closed forms")
{
	int k = 8;
	Rational zq(1, 100);
	double z = zq.get_d();
	for (Rational aq : {Rational(7, 10), Rational(-3, 2), Rational(1, 3)})
	{
		double a = aq.get_d(), u = 2 * z * a * a;
		// the branch of the square root analytic at alpha = 0
		double root = a * std::sqrt((1 - std::exp(-u)) / (2 * z * a * a));
		auto near = [](double got, double want) { return std::abs(got - want) <= 1e-11 * std::max(1.0, std::abs(want)); };
		CHECK(near(coefficient_value(deformed_rep("N", k), 1, zq, aq), (std::exp(u) - 1) / (2 * z * a)));
		CHECK(near(coefficient_value(deformed_rep("A+", k), 0, zq, aq), root));
		CHECK(near(coefficient_value(deformed_rep("A-", k), 1, zq, aq), std::exp(u) / a * root));
		CHECK(near(coefficient_value(deformed_rep("B-", k), 2, zq, aq), (std::exp(u) - 1) / (2 * z * a * a)));
		CHECK(near(coefficient_value(deformed_rep("B-", k), 1, zq, aq),
		           std::exp(u) / a + (1 - std::exp(u)) / (2 * z * a * a * a)));
	}
}

TEST_CASE("deformed representation satisfies every relation at orders 0..4")
{
	for (int k = 0; k <= 4; ++k)
	{
		auto rep = verify_rep(k);
		CHECK(rep.total() == 15);
		for (auto const &e : rep.entries())
		{
			INFO(e.name << " order " << k << ": " << e.residual);
			CHECK(e.pass);
		}
	}
}

TEST_CASE("eigen operators")
{
	using C = ComplexRational;
	EigenProblem p{{C(2), C(3), C(5), C(7), C(11)}, C(13)};
	auto cl = eigen_operator(p, 0, EigenMode::classical);
	auto k0 = [](C v, int j, int l) { return ComplexDiffOperator::term(v, j, l, 0); };
	CHECK(cl == k0(3, 0, 2) + k0(2, 1, 1) + k0(7, 0, 1) + k0(5, 2, 0) + k0(11, 1, 0) - k0(13, 0, 0));
	CHECK(eigen_operator(p, 0, EigenMode::full) == cl);

	EigenProblem q{{C(1, 2), C(Rational(1, 3)), C(0, -1), C(4), C(Rational(-1, 2), 1)}, C(1, 1)};
	CHECK(eigen_operator(q, 3, EigenMode::full).truncate(1) == eigen_operator(q, 1, EigenMode::first_order));
	// coefficient of d gains z (b1 a^3 + b2 a + 3 b4 a^2 / 2)
	auto fo = eigen_operator(p, 1, EigenMode::first_order);
	CHECK(fo.coefficient(3, 1)[1] == C(2));
	CHECK(fo.coefficient(1, 1)[1] == C(3));
	CHECK(fo.coefficient(2, 1)[1] == C(Rational(21, 2)));

	EigenProblem zero{{C(0), C(0), C(0), C(0), C(0)}, C(1)};
	CHECK_THROWS_AS(eigen_operator(zero, 1, EigenMode::full), std::invalid_argument);
}

TEST_CASE("number-operator eigenstates are monomials")
{
	using C = ComplexRational;
	for (int n = 0; n <= 8; ++n)
	{
		EigenProblem p{{C(1), C(0), C(0), C(0), C(0)}, C(n)};
		auto op = evaluate_at(eigen_operator(p, 0, EigenMode::classical), 0);
		auto sol = series_solve(op, 15);
		for (int i = 0; i <= 15; ++i)
			CHECK(sol.coeffs[i] == (i == n ? C(1) : C(0)));
		CHECK(sol.residual.empty());
	}
}

TEST_CASE("second-derivative eigenproblem follows its two-step recurrence")
{
	using C = ComplexRational;
	for (C lambda : {C(1), C(Rational(-4, 9)), C(2, 3)})
	{
		EigenProblem p{{C(0), C(1), C(0), C(0), C(0)}, lambda};
		auto op = evaluate_at(eigen_operator(p, 0, EigenMode::classical), 0);
		for (auto seeds : {std::map<int, C>{}, std::map<int, C>{{0, C(0)}, {1, C(1)}}})
		{
			auto sol = series_solve(op, 20, seeds);
			std::vector<C> want(21);
			want[0] = seeds.empty() ? C(1) : C(0);
			want[1] = seeds.empty() ? C(0) : C(1);
			for (int n = 0; n + 2 <= 20; ++n)
				want[n + 2] = lambda * want[n] * inverse(C((n + 1) * (n + 2)));
			CHECK(sol.coeffs == want);
			CHECK(sol.shift == 2);
			for (auto const &[deg, v] : sol.residual)
				CHECK(deg > 18);
		}
	}
}

TEST_CASE("first-order deformed solutions are exact below the truncation degree")
{
	using C = ComplexRational;
	EigenProblem p{{C(1), C(Rational(1, 2)), C(Rational(1, 3)), C(2), C(-1, 1)}, C(Rational(3, 2), Rational(-1, 4))};
	auto op = evaluate_at(eigen_operator(p, 1, EigenMode::first_order), Rational(1, 10));
	auto sol = series_solve(op, 30);
	CHECK(sol.shift == 2);
	CHECK(sol.coeffs[0] == C(1));
	CHECK(sol.coeffs[1] == C(0));
	CHECK_FALSE(sol.residual.empty());
	for (auto const &[deg, v] : sol.residual)
		CHECK(deg > 28);

	// independent substitution: sum over terms c alpha^j d^l applied to the series
	std::map<int, C> direct;
	for (auto const &[k, c] : op)
		for (int n = k.second; n <= 30; ++n)
		{
			Rational ff = 1;
			for (int i = 0; i < k.second; ++i)
				ff *= n - i;
			direct[n - k.second + k.first] += c * sol.coeffs[n] * ff;
		}
	for (int deg = 0; deg <= 28; ++deg)
		CHECK(direct[deg] == C(0));
}

TEST_CASE("singular heads, misplaced seeds and degenerate operators are reported")
{
	// a d^2 - 2 d + 1: head q(q - 3) vanishes at 3 while c_2 feeds the equation
	ScalarDiffOperator<Rational> op{{{1, 2}, 1}, {{0, 1}, -2}, {{0, 0}, 1}};
	auto ok = series_solve(op, 2);
	CHECK(ok.coeffs == std::vector<Rational>{1, Rational(1, 2), Rational(1, 4)});
	try
	{
		series_solve(op, 5);
		FAIL("expected a recurrence error");
	}
	catch (RecurrenceError const &e)
	{
		CHECK(e.index == 3);
	}
	CHECK_THROWS_AS(series_solve(op, 4, {{1, Rational(5)}}), RecurrenceError);
	CHECK_THROWS_AS(series_solve(ScalarDiffOperator<Rational>{}, 4), RecurrenceError);
	CHECK_THROWS_AS(series_solve(op, -1), std::invalid_argument);
}
