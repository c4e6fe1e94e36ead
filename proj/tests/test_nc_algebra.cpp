#include "twophoton/builtin_specs.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace twophoton;

namespace {

// a < b with [b, a] = 1: the Weyl algebra in normal order a^i b^j.
AlgebraSpec weyl_spec(int order)
{
	AlgebraSpec s;
	s.name = "weyl";
	s.generators = {"a", "b"};
	s.order = order;
	s.relations[{1, 0}] = NCElement::scalar(1, order);
	return s;
}

Word letters(int g, int n) { return Word(static_cast<std::size_t>(n), static_cast<char>(g)); }

Rational binom(int n, int k)
{
	Rational r = 1;
	for (int i = 0; i < k; ++i)
		r = r * (n - i) / (i + 1);
	return r;
}

NCElement random_element(std::mt19937 &rng, AlgebraSpec const &s, int max_len)
{
	std::uniform_int_distribution<int> gen(0, s.dimension() - 1), len(0, max_len), coef(-3, 3), pw(0, s.order);
	NCElement e(s.order);
	for (int t = 0; t < 3; ++t)
	{
		Word w;
		int n = len(rng);
		for (int i = 0; i < n; ++i)
			w.push_back(static_cast<char>(gen(rng)));
		std::sort(w.begin(), w.end());
		e.add(w, Series::monomial(coef(rng), pw(rng), s.order));
	}
	return e;
}

bool is_normal(Word const &w) { return std::is_sorted(w.begin(), w.end()); }

} // namespace

TEST_CASE("Weyl reordering matches the closed binomial formula")
{
	// b^n a^m = sum_k C(n,k) C(m,k) k! a^{m-k} b^{n-k}
	NCAlgebra alg(weyl_spec(0));
	for (int n = 0; n <= 5; ++n)
		for (int m = 0; m <= 5; ++m)
		{
			NCElement got = alg.normal_order({{letters(1, n) + letters(0, m), Series::constant(1, 0)}});
			NCElement want(0);
			Rational fact = 1;
			for (int k = 0; k <= std::min(n, m); ++k)
			{
				if (k > 0)
					fact *= k;
				want.add(letters(0, m - k) + letters(1, n - k), Series::constant(binom(n, k) * binom(m, k) * fact, 0));
			}
			CHECK(got == want);
		}
}

TEST_CASE("normal forms are ordered and normal ordering is idempotent")
{
	for (auto const &spec : {make_h6_spec(2), make_schrodinger_spec(2)})
	{
		NCAlgebra alg(spec);
		std::mt19937 rng(5);
		std::uniform_int_distribution<int> gen(0, 5), len(1, 5);
		for (int trial = 0; trial < 25; ++trial)
		{
			Word w;
			for (int i = len(rng); i > 0; --i)
				w.push_back(static_cast<char>(gen(rng)));
			NCElement n = alg.normal_order({{w, Series::constant(1, 2)}});
			for (auto const &[u, c] : n.terms())
				CHECK(is_normal(u));
			CHECK(alg.normal_order(n) == n);
		}
	}
}

TEST_CASE("multiplication is associative on random elements")
{
	for (auto const &spec : {make_h6_spec(2), make_schrodinger_spec(2)})
	{
		NCAlgebra alg(spec);
		std::mt19937 rng(99);
		for (int trial = 0; trial < 10; ++trial)
		{
			NCElement a = random_element(rng, spec, 2), b = random_element(rng, spec, 2), c = random_element(rng, spec, 2);
			CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
		}
	}
}

TEST_CASE("the deformed relations satisfy the Jacobi identity")
{
	for (auto const &spec : {make_h6_spec(3), make_schrodinger_spec(3)})
	{
		NCAlgebra alg(spec);
		int n = spec.dimension();
		for (int x = 0; x < n; ++x)
			for (int y = x + 1; y < n; ++y)
				for (int w = y + 1; w < n; ++w)
				{
					NCElement X = NCElement::generator(x, 3), Y = NCElement::generator(y, 3), W = NCElement::generator(w, 3);
					NCElement jac = alg.commutator(X, alg.commutator(Y, W)) + alg.commutator(Y, alg.commutator(W, X)) +
					                alg.commutator(W, alg.commutator(X, Y));
					INFO(spec.name << " " << spec.generators[x] << "," << spec.generators[y] << "," << spec.generators[w]);
					CHECK(jac.is_zero());
				}
	}
}

TEST_CASE("commutators reproduce the stored relations")
{
	auto spec = make_h6_spec(3);
	NCAlgebra alg(spec);
	int Bp = spec.index_of("B+");
	// [N, B+] = (e^{2zB+} - 1)/z = 2B+ + 2z B+^2 + ...
	NCElement nb = alg.commutator(spec.gen("N"), spec.gen("B+"));
	CHECK(nb.coefficient(letters(Bp, 1)) == Series(3, {2}));
	CHECK(nb.coefficient(letters(Bp, 2)) == Series(3, {0, 2}));
	CHECK(nb.coefficient(letters(Bp, 3)) == Series(3, {0, 0, Rational(4, 3)}));
	CHECK(alg.commutator(spec.gen("A-"), spec.gen("A+")) == spec.gen("M"));
	CHECK(alg.commutator(spec.gen("A+"), spec.gen("A-")) == -spec.gen("M"));
	CHECK(alg.commutator(spec.gen("A+"), spec.gen("N")) == -spec.gen("A+"));
}

TEST_CASE("central generators commute and missing relations are reported")
{
	auto spec = make_h6_spec(1);
	NCAlgebra alg(spec);
	for (int g = 0; g < spec.dimension(); ++g)
		CHECK(alg.commutator(spec.gen("M"), NCElement::generator(g, 1)).is_zero());

	AlgebraSpec partial = weyl_spec(0);
	partial.generators.push_back("c");
	NCAlgebra p(partial);
	CHECK(p.multiply(partial.gen("a"), partial.gen("c")) == NCElement::word(Word{0, 2}, 0));
	CHECK_THROWS_AS(p.multiply(partial.gen("c"), partial.gen("a")), NormalOrderError);
}

TEST_CASE("the rewrite budget stops runaway normal ordering")
{
	NCAlgebra alg(make_h6_spec(4), 50);
	NCElement big = alg.power(make_h6_spec(4).gen("B-"), 3);
	CHECK_THROWS_AS(alg.multiply(big, alg.power(make_h6_spec(4).gen("B+"), 3)), NormalOrderError);
}

TEST_CASE("exp of a nilpotent-in-z element and tensor utilities")
{
	auto spec = make_h6_spec(3);
	NCAlgebra alg(spec);
	NCElement x = Series::monomial(1, 1, 3) * spec.gen("B+");
	NCElement e = alg.exp(x);
	NCElement back = alg.exp(-x);
	CHECK(alg.multiply(e, back) == spec.one());
	CHECK_THROWS_AS(alg.exp(spec.gen("N")), SeriesError);

	Tensor<2> t = tensor(spec.gen("N"), spec.gen("B+"));
	CHECK(flip(flip(t)) == t);
	Tensor<3> e13 = embed(t, 0, 2);
	CHECK(e13.terms().begin()->first[1].empty());
	CHECK(to_string(t, spec.generators) == "1*[N | B+]");
	// B- B+ = B+ B- + 4N + 2 e^{2zB+} M
	NCElement bb = alg.multiply(spec.gen("B-"), spec.gen("B+"));
	int Bp = spec.index_of("B+"), M = spec.index_of("M");
	CHECK(bb.coefficient(Word{static_cast<char>(Bp), static_cast<char>(spec.index_of("B-"))}) == Series::constant(1, 3));
	CHECK(bb.coefficient(letters(spec.index_of("N"), 1)) == Series::constant(4, 3));
	CHECK(bb.coefficient(letters(M, 1)) == Series::constant(2, 3));
	CHECK(bb.coefficient(letters(Bp, 1) + letters(M, 1)) == Series::monomial(4, 1, 3));
	CHECK(bb.coefficient(letters(Bp, 2) + letters(M, 1)) == Series::monomial(4, 2, 3));
	CHECK(bb.coefficient(letters(Bp, 3) + letters(M, 1)) == Series::monomial(Rational(8, 3), 3, 3));
	CHECK(bb.terms().size() == 6);
}
