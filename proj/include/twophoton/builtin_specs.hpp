#pragma once

// The two built-in deformed algebras with their Hopf tables:
//   "h6-twophoton"  generators B+ < N < M < A+ < A- < B-
//   "schrodinger11" generators H < D < M < P < K < C
// Both are truncated at a caller-chosen order k in z.

#include "twophoton/nc_algebra.hpp"

#include <string>

namespace twophoton {

namespace detail {

/// sum_{n >= first} scale * base^n z^(n - shift) / n!  times the word g^n,
/// i.e. the z-expansion of functions of a single generator.
inline NCElement exp_like(int g, Rational const &base, Rational const &scale, int first, int shift, int order)
{
	NCElement r(order);
	Rational fact = 1;
	Rational pw = 1;
	for (int n = 0; n - shift <= order; ++n)
	{
		if (n > 0)
		{
			fact *= n;
			pw *= base;
		}
		if (n < first || n - shift < 0)
			continue;
		r.add(Word(static_cast<std::size_t>(n), static_cast<char>(g)), Series::monomial(scale * pw / fact, n - shift, order));
	}
	return r;
}

/// e^{c z g} for a single generator g.
inline NCElement exp_gen(int g, Rational const &c, int order) { return exp_like(g, c, 1, 0, 0, order); }

inline Series zs(Rational const &c, int order) { return Series::monomial(c, 1, order); }

} // namespace detail

/// U_z(h6): the two-photon algebra deformed along r = z N∧B+.
inline AlgebraSpec make_h6_spec(int order)
{
	using detail::exp_gen;
	using detail::zs;
	enum : int { Bp, N, M, Ap, Am, Bm };
	int k = order;

	AlgebraSpec s;
	s.name = "h6-twophoton";
	s.generators = {"B+", "N", "M", "A+", "A-", "B-"};
	s.order = k;
	s.central = {false, false, true, false, false, false};

	auto g = [&](int i, Rational c = 1) { return NCElement::generator(i, k, c); };
	auto w = [&](std::initializer_list<int> letters, Rational c = 1) {
		Word word;
		for (int l : letters)
			word.push_back(static_cast<char>(l));
		return NCElement::word(word, k, c);
	};

	// relations whose right-hand sides are single words or tails e^{..B+}
	s.relations[{N, Bp}] = detail::exp_like(Bp, 2, 1, 1, 1, k); // (e^{2zB+} - 1)/z
	s.relations[{Ap, Bp}] = NCElement(k);
	s.relations[{Ap, N}] = g(Ap, -1);
	s.relations[{Am, N}] = g(Am);
	s.relations[{Am, Ap}] = g(M);
	s.relations[{Bm, N}] = g(Bm, 2) + zs(4, k) * w({N, N});

	NCAlgebra partial(s);
	NCElement e2 = exp_gen(Bp, 2, k);
	s.relations[{Am, Bp}] = 2 * partial.multiply(e2, g(Ap));
	s.relations[{Bm, Bp}] = g(N, 4) + 2 * partial.multiply(e2, g(M));
	// [B-, A+] = 2A- - 2z(N A+ + A+ N);  [B-, A-] = 2z(N A- + A- N)
	s.relations[{Bm, Ap}] =
	    g(Am, 2) - zs(2, k) * (partial.multiply(g(N), g(Ap)) + partial.multiply(g(Ap), g(N)));
	s.relations[{Bm, Am}] = zs(2, k) * (partial.multiply(g(N), g(Am)) + partial.multiply(g(Am), g(N)));

	NCAlgebra alg(s);
	NCElement one = NCElement::scalar(1, k);
	NCElement em1 = exp_gen(Bp, -1, k);
	NCElement e1 = exp_gen(Bp, 1, k);
	NCElement em2 = exp_gen(Bp, -2, k);

	s.coproduct = {
	    tensor(one, g(Bp)) + tensor(g(Bp), one),
	    tensor(one, g(N)) + tensor(g(N), e2),
	    tensor(one, g(M)) + tensor(g(M), one),
	    tensor(one, g(Ap)) + tensor(g(Ap), em1),
	    tensor(one, g(Am)) + tensor(g(Am), e1) + zs(2, k) * tensor(g(N), alg.multiply(e2, g(Ap))),
	    tensor(one, g(Bm)) + tensor(g(Bm), e2) + zs(2, k) * tensor(g(N), alg.multiply(e2, g(M))),
	};
	s.antipode = {
	    g(Bp, -1),
	    -alg.multiply(g(N), em2),
	    g(M, -1),
	    -alg.multiply(g(Ap), e1),
	    -alg.multiply(g(Am) - zs(2, k) * alg.multiply(g(N), g(Ap)), em1),
	    -alg.multiply(g(Bm) - zs(2, k) * alg.multiply(g(N), g(M)), em2),
	};
	s.counit.assign(6, Series(k));
	s.r_factors = {zs(-1, k) * tensor(g(Bp), g(N)), zs(1, k) * tensor(g(N), g(Bp))};
	return s;
}

/// U_z(S(1+1)): the Schrödinger algebra with primitive time translation H.
inline AlgebraSpec make_schrodinger_spec(int order)
{
	using detail::exp_gen;
	using detail::zs;
	enum : int { H, D, M, P, K, C };
	int k = order;

	AlgebraSpec s;
	s.name = "schrodinger11";
	s.generators = {"H", "D", "M", "P", "K", "C"};
	s.order = k;
	s.central = {false, false, true, false, false, false};

	auto g = [&](int i, Rational c = 1) { return NCElement::generator(i, k, c); };

	NCElement one = NCElement::scalar(1, k);
	NCElement e4 = exp_gen(H, 4, k);

	s.relations[{D, H}] = detail::exp_like(H, 4, Rational(-1, 2), 1, 1, k); // (1 - e^{4zH})/(2z)
	s.relations[{P, H}] = NCElement(k);
	s.relations[{P, D}] = g(P);
	s.relations[{K, D}] = g(K, -1);
	s.relations[{K, P}] = g(M);

	NCAlgebra partial(s);
	s.relations[{K, H}] = partial.multiply(e4, g(P));
	// [C, H] = -[H, C] = -D - M (1 - e^{4zH})/2
	s.relations[{C, H}] = g(D, -1) + Rational(1, 2) * partial.multiply(e4 - one, g(M));

	NCAlgebra partial2(s);
	NCElement dm = g(D) + g(M, Rational(1, 2)); // D + M/2
	// [C, D] = -2C - 2z (D + M/2)^2
	s.relations[{C, D}] = g(C, -2) - zs(2, k) * partial2.multiply(dm, dm);
	// [C, P] = K + z (DP + PD + PM)
	s.relations[{C, P}] = g(K) + zs(1, k) * (partial2.multiply(g(D), g(P)) + partial2.multiply(g(P), g(D)) +
	                                         partial2.multiply(g(P), g(M)));
	// [C, K] = -z (DK + KD + KM)
	s.relations[{C, K}] = zs(-1, k) * (partial2.multiply(g(D), g(K)) + partial2.multiply(g(K), g(D)) +
	                                   partial2.multiply(g(K), g(M)));

	NCAlgebra alg(s);
	NCElement e2 = exp_gen(H, 2, k);
	NCElement em2 = exp_gen(H, -2, k);
	NCElement em4 = exp_gen(H, -4, k);

	s.coproduct = {
	    tensor(one, g(H)) + tensor(g(H), one),
	    tensor(one, g(D)) + tensor(g(D), e4) + tensor(g(M), Rational(1, 2) * (e4 - one)),
	    tensor(one, g(M)) + tensor(g(M), one),
	    tensor(one, g(P)) + tensor(g(P), em2),
	    tensor(one, g(K)) + tensor(g(K), e2) - zs(2, k) * tensor(dm, alg.multiply(e4, g(P))),
	    tensor(one, g(C)) + tensor(g(C), e4) - zs(1, k) * tensor(dm, alg.multiply(e4, g(M))),
	};
	// Derived from the two-photon antipode through D = -N - M/2, P = A+,
	// K = A-, H = B+/2, C = B-/2.
	s.antipode = {
	    g(H, -1),
	    -alg.multiply(dm, em4) + g(M, Rational(1, 2)),
	    g(M, -1),
	    -alg.multiply(g(P), e2),
	    -alg.multiply(g(K) + zs(2, k) * alg.multiply(dm, g(P)), em2),
	    -alg.multiply(g(C) + zs(1, k) * alg.multiply(dm, g(M)), em4),
	};
	s.counit.assign(6, Series(k));
	s.r_factors = {zs(2, k) * tensor(g(H), g(D)), zs(1, k) * tensor(g(H), g(M)), zs(-1, k) * tensor(g(M), g(H)),
	               zs(-2, k) * tensor(g(D), g(H))};
	return s;
}

inline AlgebraSpec make_builtin_spec(std::string const &name, int order)
{
	if (name == "h6-twophoton" || name == "h6")
		return make_h6_spec(order);
	if (name == "schrodinger11" || name == "sch")
		return make_schrodinger_spec(order);
	throw std::invalid_argument("unknown algebra '" + name + "'");
}

} // namespace twophoton
