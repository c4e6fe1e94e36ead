#pragma once

// Hopf structure maps (coproduct, counit, antipode) extended from the
// per-generator tables, the universal R-matrix, and the axiom checks.

#include "twophoton/nc_algebra.hpp"
#include "twophoton/report.hpp"

#include <map>
#include <string>
#include <unordered_map>

namespace twophoton {

class HopfAlgebra
{
	NCAlgebra alg_;
	std::unordered_map<Word, Tensor<2>> coproduct_cache_;
	std::unordered_map<Word, NCElement> antipode_cache_;

  public:
	explicit HopfAlgebra(AlgebraSpec spec, std::size_t fuel = NCAlgebra::default_fuel) : alg_(std::move(spec), fuel)
	{
		if (!alg_.spec().has_hopf_tables())
			throw std::invalid_argument("algebra " + alg_.spec().name + " has no Hopf tables");
	}

	NCAlgebra &algebra() { return alg_; }
	AlgebraSpec const &spec() const { return alg_.spec(); }
	int order() const { return alg_.order(); }
	std::vector<std::string> const &names() const { return alg_.names(); }
	NCElement gen(int i) const { return NCElement::generator(i, order()); }

	/// Δ on a normal word, multiplicatively: Δ(uv) = Δ(u)Δ(v).
	Tensor<2> const &coproduct_word(Word const &w)
	{
		if (auto it = coproduct_cache_.find(w); it != coproduct_cache_.end())
			return it->second;
		Tensor<2> r = w.empty() ? Tensor<2>::one(order())
		                        : alg_.multiply(coproduct_word(w.substr(0, w.size() - 1)),
		                                        spec().coproduct.at(static_cast<unsigned char>(w.back())));
		return coproduct_cache_.emplace(w, std::move(r)).first->second;
	}

	Tensor<2> coproduct(NCElement const &x)
	{
		Tensor<2> r(order());
		for (auto const &[w, c] : x.terms())
			r += c * coproduct_word(w);
		return r;
	}

	/// γ on a normal word, anti-multiplicatively: γ(uv) = γ(v)γ(u).
	NCElement const &antipode_word(Word const &w)
	{
		if (auto it = antipode_cache_.find(w); it != antipode_cache_.end())
			return it->second;
		NCElement r = w.empty() ? NCElement::scalar(1, order())
		                        : alg_.multiply(spec().antipode.at(static_cast<unsigned char>(w.back())),
		                                        antipode_word(w.substr(0, w.size() - 1)));
		return antipode_cache_.emplace(w, std::move(r)).first->second;
	}

	NCElement antipode(NCElement const &x)
	{
		NCElement r(order());
		for (auto const &[w, c] : x.terms())
			r.add_scaled(antipode_word(w), c);
		return r;
	}

	Series counit_word(Word const &w) const
	{
		Series r = Series::constant(1, order());
		for (char l : w)
			r = r * spec().counit.at(static_cast<unsigned char>(l));
		return r;
	}

	Series counit(NCElement const &x) const
	{
		Series r(order());
		for (auto const &[w, c] : x.terms())
			r += c * counit_word(w);
		return r;
	}

	/// Δ applied to one leg of a rank-2 tensor: leg 0 gives (Δ⊗id), leg 1 gives (id⊗Δ).
	Tensor<3> coproduct_on_leg(Tensor<2> const &t, int leg)
	{
		Tensor<3> r(order());
		for (auto const &[k, c] : t.terms())
			for (auto const &[d, dc] : coproduct_word(k[leg]).terms())
			{
				Tensor<3>::Key key = leg == 0 ? Tensor<3>::Key{d[0], d[1], k[1]} : Tensor<3>::Key{k[0], d[0], d[1]};
				r.add(key, c * dc);
			}
		return r;
	}

	/// ε applied to one leg.
	NCElement counit_on_leg(Tensor<2> const &t, int leg) const
	{
		NCElement r(order());
		for (auto const &[k, c] : t.terms())
			r.add(k[1 - leg], c * counit_word(k[leg]));
		return r;
	}

	/// m ∘ (γ ⊗ id) for leg 0, m ∘ (id ⊗ γ) for leg 1.
	NCElement antipode_multiply(Tensor<2> const &t, int leg)
	{
		NCElement r(order());
		for (auto const &[k, c] : t.terms())
		{
			NCElement a = leg == 0 ? antipode_word(k[0]) : NCElement::word(k[0], order());
			NCElement b = leg == 1 ? antipode_word(k[1]) : NCElement::word(k[1], order());
			r.add_scaled(alg_.multiply(a, b), c);
		}
		return r;
	}

	Tensor<2> r_matrix()
	{
		Tensor<2> r = Tensor<2>::one(order());
		for (auto const &f : spec().r_factors)
			r = alg_.multiply(r, alg_.exp(f));
		return r;
	}

	/// Reversed product of the factor inverses exp(-f).
	Tensor<2> r_matrix_inverse()
	{
		Tensor<2> r = Tensor<2>::one(order());
		auto const &fs = spec().r_factors;
		for (auto it = fs.rbegin(); it != fs.rend(); ++it)
			r = alg_.multiply(r, alg_.exp(Rational(-1) * *it));
		return r;
	}
};

namespace detail {

inline std::map<std::string, std::string> order_params(std::string const &algebra, int order)
{
	return {{"algebra", algebra}, {"order", std::to_string(order)}};
}

} // namespace detail

/// Coassociativity, counit, antipode and Δ-homomorphism checks on every
/// generator and generator pair.
inline VerificationReport verify_hopf(HopfAlgebra &h)
{
	VerificationReport rep;
	auto const &names = h.names();
	auto &alg = h.algebra();
	int n = h.spec().dimension();
	std::string tag = h.spec().name;
	auto params = detail::order_params(tag, h.order());
	auto render1 = [&](NCElement const &e) { return to_string(e, names); };
	auto render2 = [&](Tensor<2> const &t) { return to_string(t, names); };
	auto render3 = [&](Tensor<3> const &t) { return to_string(t, names); };

	for (int i = 0; i < n; ++i)
	{
		NCElement x = h.gen(i);
		std::string g = names[i];
		Tensor<2> const &dx = h.coproduct_word(x.terms().begin()->first);

		rep.add(residual_entry(tag + ".hopf.coassociativity[" + g + "]", params,
		                       h.coproduct_on_leg(dx, 0) - h.coproduct_on_leg(dx, 1), render3));
		rep.add(residual_entry(tag + ".hopf.counit-left[" + g + "]", params, h.counit_on_leg(dx, 0) - x, render1));
		rep.add(residual_entry(tag + ".hopf.counit-right[" + g + "]", params, h.counit_on_leg(dx, 1) - x, render1));
		NCElement eps = NCElement::scalar(h.counit(x));
		rep.add(residual_entry(tag + ".hopf.antipode-left[" + g + "]", params, h.antipode_multiply(dx, 0) - eps,
		                       render1));
		rep.add(residual_entry(tag + ".hopf.antipode-right[" + g + "]", params, h.antipode_multiply(dx, 1) - eps,
		                       render1));
	}
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < x; ++y)
		{
			Tensor<2> lhs = h.coproduct(h.spec().bracket(x, y));
			Tensor<2> rhs = alg.commutator(h.coproduct(h.gen(x)), h.coproduct(h.gen(y)));
			rep.add(residual_entry(tag + ".hopf.homomorphism[" + names[x] + "," + names[y] + "]", params, lhs - rhs,
			                       render2));
		}
	return rep;
}

/// Quantum Yang-Baxter equation and R Δ(X) R^{-1} = σ∘Δ(X) for every generator.
inline VerificationReport verify_rmatrix(HopfAlgebra &h)
{
	VerificationReport rep;
	auto const &names = h.names();
	auto &alg = h.algebra();
	std::string tag = h.spec().name;
	auto params = detail::order_params(tag, h.order());
	auto render2 = [&](Tensor<2> const &t) { return to_string(t, names); };
	auto render3 = [&](Tensor<3> const &t) { return to_string(t, names); };

	Tensor<2> r = h.r_matrix();
	Tensor<2> rinv = h.r_matrix_inverse();
	rep.add(residual_entry(tag + ".rmatrix.inverse", params, alg.multiply(r, rinv) - Tensor<2>::one(h.order()),
	                       render2));

	Tensor<3> r12 = embed(r, 0, 1), r13 = embed(r, 0, 2), r23 = embed(r, 1, 2);
	Tensor<3> lhs = alg.multiply(alg.multiply(r12, r13), r23);
	Tensor<3> rhs = alg.multiply(alg.multiply(r23, r13), r12);
	rep.add(residual_entry(tag + ".rmatrix.qybe", params, lhs - rhs, render3));

	for (int i = 0; i < h.spec().dimension(); ++i)
	{
		Tensor<2> dx = h.coproduct(h.gen(i));
		Tensor<2> res = alg.multiply(r, dx) - alg.multiply(flip(dx), r);
		rep.add(residual_entry(tag + ".rmatrix.intertwining[" + names[i] + "]", params, res, render2));
	}
	return rep;
}

/// z^1 part of Δ(X) - σ∘Δ(X); meaningful as a cocommutator when every term
/// is generator ⊗ generator.
inline Tensor<2> first_order_antisymmetric_coproduct(HopfAlgebra &h, int generator)
{
	Tensor<2> dx = h.coproduct(h.gen(generator));
	Tensor<2> diff = dx - flip(dx);
	Tensor<2> r(h.order());
	for (auto const &[k, c] : diff.terms())
		if (h.order() >= 1 && c[1] != 0)
			r.add(k, Series::monomial(c[1], 1, h.order()));
	return r;
}

} // namespace twophoton
