#pragma once

// Fock-Bargmann calculus: differential operators sum c(z) alpha^j d^l with
// every derivative to the right, the classical and deformed one-boson
// representations of the two-photon generators, and power-series solutions
// of the eigenstate equation.

#include "twophoton/builtin_specs.hpp"
#include "twophoton/laurent.hpp"
#include "twophoton/report.hpp"
#include "twophoton/series.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twophoton {

/// Canonical form sum c_{j,l}(z) alpha^j (d/dalpha)^l, j, l >= 0.
template <class S> class DiffOperator
{
  public:
	using Key = std::pair<int, int>; // (alpha power, derivative order)
	using Coeff = TruncatedSeries<S>;

  private:
	int order_ = 0;
	std::map<Key, Coeff> terms_;

  public:
	explicit DiffOperator(int order = 0) : order_(order) {}

	static DiffOperator constant(S c, int order) { return term(std::move(c), 0, 0, order); }
	static DiffOperator term(S c, int alpha_power, int derivative, int order)
	{
		DiffOperator d(order);
		d.add({alpha_power, derivative}, Coeff::constant(std::move(c), order));
		return d;
	}
	static DiffOperator alpha(int order) { return term(S(1), 1, 0, order); }
	static DiffOperator d_alpha(int order) { return term(S(1), 0, 1, order); }

	int order() const { return order_; }
	std::map<Key, Coeff> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Coeff coefficient(int j, int l) const
	{
		auto it = terms_.find({j, l});
		return it == terms_.end() ? Coeff(order_) : it->second;
	}

	void add(Key const &k, Coeff const &c)
	{
		if (k.first < 0 || k.second < 0)
			throw std::domain_error("negative power in a differential operator");
		if (c.order() != order_)
			throw SeriesError("differential operator order mismatch");
		if (c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(k, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	DiffOperator &operator+=(DiffOperator const &o)
	{
		for (auto const &[k, c] : o.terms_)
			add(k, c);
		return *this;
	}
	DiffOperator &operator-=(DiffOperator const &o)
	{
		for (auto const &[k, c] : o.terms_)
			add(k, -c);
		return *this;
	}
	friend DiffOperator operator+(DiffOperator a, DiffOperator const &b) { return a += b; }
	friend DiffOperator operator-(DiffOperator a, DiffOperator const &b) { return a -= b; }
	friend DiffOperator operator*(Coeff const &c, DiffOperator const &a)
	{
		DiffOperator r(a.order_);
		for (auto const &[k, s] : a.terms_)
			r.add(k, c * s);
		return r;
	}
	friend DiffOperator operator*(S const &c, DiffOperator const &a) { return Coeff::constant(c, a.order_) * a; }
	friend bool operator==(DiffOperator const &a, DiffOperator const &b)
	{
		return a.order_ == b.order_ && a.terms_ == b.terms_;
	}

	DiffOperator truncate(int new_order) const
	{
		DiffOperator r(new_order);
		for (auto const &[k, c] : terms_)
			r.add(k, c.truncate(new_order));
		return r;
	}

	template <class T> DiffOperator<T> convert() const
	{
		DiffOperator<T> r(order_);
		for (auto const &[k, c] : terms_)
			r.add(k, c.map([](S const &v) { return T(v); }));
		return r;
	}
};

/// a ∘ b, moving derivatives right with d^l alpha^p = sum_i C(l,i) p!/(p-i)! alpha^{p-i} d^{l-i}.
template <class S> DiffOperator<S> compose(DiffOperator<S> const &a, DiffOperator<S> const &b)
{
	if (a.order() != b.order())
		throw SeriesError("composing operators of different order");
	DiffOperator<S> r(a.order());
	for (auto const &[ka, ca] : a.terms())
		for (auto const &[kb, cb] : b.terms())
		{
			auto c = ca * cb;
			if (c.is_zero())
				continue;
			auto [j, l] = ka;
			auto [p, q] = kb;
			Rational binom = 1, falling = 1;
			for (int i = 0; i <= std::min(l, p); ++i)
			{
				if (i > 0)
				{
					binom = binom * (l - i + 1) / i;
					falling *= (p - i + 1);
				}
				r.add({j + p - i, l - i + q}, c * Rational(binom * falling));
			}
		}
	return r;
}

template <class S> DiffOperator<S> commutator(DiffOperator<S> const &a, DiffOperator<S> const &b)
{
	return compose(a, b) - compose(b, a);
}

template <class S> std::string to_string(DiffOperator<S> const &d)
{
	if (d.is_zero())
		return "0";
	std::string out;
	for (auto const &[k, c] : d.terms())
	{
		std::string cs = to_string(c);
		if (cs.find(' ') != std::string::npos)
			cs = "(" + cs + ")";
		out += (out.empty() ? "" : " + ") + cs;
		if (k.first)
			out += "*a" + (k.first > 1 ? "^" + std::to_string(k.first) : std::string());
		if (k.second)
			out += "*d" + (k.second > 1 ? "^" + std::to_string(k.second) : std::string());
	}
	return out;
}

using RealDiffOperator = DiffOperator<Rational>;
using ComplexDiffOperator = DiffOperator<ComplexRational>;

/// Generator order shared with the two-photon algebra spec.
inline std::array<std::string, 6> const &twophoton_generators()
{
	static std::array<std::string, 6> const names{"B+", "N", "M", "A+", "A-", "B-"};
	return names;
}

inline int twophoton_index(std::string const &g)
{
	auto const &n = twophoton_generators();
	for (int i = 0; i < 6; ++i)
		if (n[i] == g)
			return i;
	throw std::invalid_argument("unknown generator '" + g + "'");
}

/// N = alpha d, A+ = alpha, A- = d, M = 1, B+ = alpha^2, B- = d^2.
inline RealDiffOperator classical_rep(std::string const &g, int order = 0)
{
	switch (twophoton_index(g))
	{
	case 0: return RealDiffOperator::term(1, 2, 0, order);
	case 1: return RealDiffOperator::term(1, 1, 1, order);
	case 2: return RealDiffOperator::constant(1, order);
	case 3: return RealDiffOperator::term(1, 1, 0, order);
	case 4: return RealDiffOperator::term(1, 0, 1, order);
	default: return RealDiffOperator::term(1, 0, 2, order);
	}
}

namespace detail {

using LaurentSeries = TruncatedSeries<LaurentPoly<Rational>>;

inline LaurentSeries alpha_power(int e, Rational c, int order)
{
	return LaurentSeries::constant(LaurentPoly<Rational>::monomial(std::move(c), e), order);
}

/// Coefficient series with alpha-Laurent entries into operator terms with the given derivative order.
inline RealDiffOperator to_operator(LaurentSeries const &s, int derivative, std::string const &g)
{
	RealDiffOperator r(s.order());
	for (int i = 0; i <= s.order(); ++i)
		for (auto const &[e, c] : s[i].terms())
		{
			if (e < 0)
				throw std::logic_error("deformed " + g + ": alpha^" + std::to_string(e) + " survives at z^" +
				                       std::to_string(i));
			r.add({e, derivative}, Series::monomial(c, i, s.order()));
		}
	return r;
}

} // namespace detail

/// Deformed one-boson representation expanded to order k, from the closed forms
///   N  = (e^{2z a²} - 1)/(2z a) d
///   A+ = ((1 - e^{-2z a²})/(2z))^{1/2}
///   A- = e^{2z a²}/a ((1 - e^{-2z a²})/(2z))^{1/2} d
///   B- = (e^{2z a²} - 1)/(2z a²) d² + (e^{2z a²}/a + (1 - e^{2z a²})/(2z a³)) d
/// with a the creation operator alpha. The divisions by z are exact, so the
/// exponentials are expanded one order higher.
inline RealDiffOperator deformed_rep(std::string const &g, int k)
{
	using detail::alpha_power;
	using detail::LaurentSeries;
	int idx = twophoton_index(g);
	if (idx == 0 || idx == 2)
		return classical_rep(g, k);

	int K = k + 1;
	LaurentSeries u = LaurentSeries::monomial(LaurentPoly<Rational>::monomial(2, 2), 1, K); // 2 z alpha^2
	LaurentSeries one = LaurentSeries::constant(LaurentPoly<Rational>(1), K);
	LaurentSeries e_plus = series_exp(u);
	LaurentSeries e_minus = series_exp(-u);

	LaurentSeries ep_minus_1 = (e_plus - one).divide_by_z(); // (e^{2z a²} - 1)/z, order k
	// ((1 - e^{-2z a²})/(2z))^{1/2} = alpha * sqrt(series with constant term 1)
	LaurentSeries s_over_a2 = (one - e_minus).divide_by_z() * alpha_power(-2, Rational(1, 2), k);
	LaurentSeries root = series_sqrt(s_over_a2) * alpha_power(1, 1, k);
	LaurentSeries e_plus_k = e_plus.truncate(k);

	switch (idx)
	{
	case 1: return detail::to_operator(ep_minus_1 * alpha_power(-1, Rational(1, 2), k), 1, g);
	case 3: return detail::to_operator(root, 0, g);
	case 4: return detail::to_operator(e_plus_k * alpha_power(-1, 1, k) * root, 1, g);
	default:
	{
		auto second = detail::to_operator(ep_minus_1 * alpha_power(-2, Rational(1, 2), k), 2, g);
		auto first = detail::to_operator(e_plus_k * alpha_power(-1, 1, k) - ep_minus_1 * alpha_power(-3, Rational(1, 2), k), 1, g);
		return second + first;
	}
	}
}

/// First-order operators for small z:
///   N = (a + z a³) d, A+ = a - z a³/2, A- = (1 + 3z a²/2) d,
///   B- = (1 + z a²) d² + z a d, B+ = a², M = 1.
inline RealDiffOperator first_order_rep(std::string const &g)
{
	auto zt = [](Rational c, int j, int l) {
		RealDiffOperator d(1);
		d.add({j, l}, Series::monomial(std::move(c), 1, 1));
		return d;
	};
	auto c0 = [](Rational c, int j, int l) { return RealDiffOperator::term(std::move(c), j, l, 1); };
	switch (twophoton_index(g))
	{
	case 0: return c0(1, 2, 0);
	case 1: return c0(1, 1, 1) + zt(1, 3, 1);
	case 2: return c0(1, 0, 0);
	case 3: return c0(1, 1, 0) + zt(Rational(-1, 2), 3, 0);
	case 4: return c0(1, 0, 1) + zt(Rational(3, 2), 2, 1);
	default: return c0(1, 0, 2) + zt(1, 2, 2) + zt(1, 1, 1);
	}
}

/// Image of an algebra element: words map to products of generator images.
inline RealDiffOperator represent(NCElement const &x, std::vector<RealDiffOperator> const &images)
{
	RealDiffOperator r(x.order());
	for (auto const &[w, c] : x.terms())
	{
		RealDiffOperator p = RealDiffOperator::constant(1, x.order());
		for (char l : w)
			p = compose(p, images.at(static_cast<unsigned char>(l)));
		r += c * p;
	}
	return r;
}

/// Every defining relation of the deformed two-photon algebra, checked on the
/// deformed one-boson images at order k.
inline VerificationReport verify_rep(int k)
{
	VerificationReport rep;
	AlgebraSpec spec = make_h6_spec(k);
	std::vector<RealDiffOperator> images;
	for (auto const &g : spec.generators)
		images.push_back(deformed_rep(g, k));
	std::map<std::string, std::string> params{{"order", std::to_string(k)}};
	auto render = [](RealDiffOperator const &d) { return to_string(d); };
	for (int x = 0; x < spec.dimension(); ++x)
		for (int y = 0; y < x; ++y)
		{
			RealDiffOperator res = commutator(images[x], images[y]) - represent(spec.bracket(x, y), images);
			rep.add(residual_entry("rep.relation[" + spec.generators[x] + "," + spec.generators[y] + "]", params, res,
			                       render));
		}
	return rep;
}

// ---------------------------------------------------------------------------
// Eigenstate equation (beta1 N + beta2 B- + beta3 B+ + beta4 A- + beta5 A+) f = lambda f

struct EigenProblem
{
	std::array<ComplexRational, 5> beta;
	ComplexRational lambda;

	void validate() const
	{
		for (auto const &b : beta)
			if (!(b == ComplexRational(0)))
				return;
		throw std::invalid_argument("eigenproblem needs at least one nonzero beta");
	}
};

enum class EigenMode { classical, first_order, full };

/// Generator multiplying each beta_i.
inline std::array<std::string, 5> const &eigen_generators()
{
	static std::array<std::string, 5> const g{"N", "B-", "B+", "A-", "A+"};
	return g;
}

inline ComplexDiffOperator eigen_operator(EigenProblem const &p, int k, EigenMode mode)
{
	p.validate();
	using C = ComplexRational;
	auto const &b = p.beta;
	auto c0 = [](C c, int j, int l, int order) { return ComplexDiffOperator::term(std::move(c), j, l, order); };
	switch (mode)
	{
	case EigenMode::classical:
		// b2 f'' + (b1 a + b4) f' + (b3 a² + b5 a - lambda) f
		return c0(b[1], 0, 2, k) + c0(b[0], 1, 1, k) + c0(b[3], 0, 1, k) + c0(b[2], 2, 0, k) + c0(b[4], 1, 0, k) -
		       c0(p.lambda, 0, 0, k);
	case EigenMode::first_order:
	{
		// b2 (1 + z a²) f'' + (b1 a + b4 + z (b1 a³ + b2 a + 3 b4 a²/2)) f'
		//   + (b3 a² + b5 a - z b5 a³/2 - lambda) f
		auto zt = [](C c, int j, int l) {
			ComplexDiffOperator d(1);
			d.add({j, l}, TruncatedSeries<C>::monomial(std::move(c), 1, 1));
			return d;
		};
		return c0(b[1], 0, 2, 1) + zt(b[1], 2, 2) + c0(b[0], 1, 1, 1) + c0(b[3], 0, 1, 1) + zt(b[0], 3, 1) +
		       zt(b[1], 1, 1) + zt(b[3] * Rational(3, 2), 2, 1) + c0(b[2], 2, 0, 1) + c0(b[4], 1, 0, 1) +
		       zt(b[4] * Rational(-1, 2), 3, 0) - c0(p.lambda, 0, 0, 1);
	}
	case EigenMode::full:
	default:
	{
		ComplexDiffOperator r = ComplexDiffOperator(k) - c0(p.lambda, 0, 0, k);
		for (int i = 0; i < 5; ++i)
			if (!(b[i] == C(0)))
				r += b[i] * deformed_rep(eigen_generators()[i], k).convert<C>();
		return r;
	}
	}
}

// ---------------------------------------------------------------------------
// Power-series solutions f = sum c_n alpha^n

class RecurrenceError : public std::runtime_error
{
  public:
	int index;
	RecurrenceError(std::string const &what, int idx) : std::runtime_error(what), index(idx) {}
};

template <class S> struct SeriesSolution
{
	std::vector<S> coeffs;         // c_0 .. c_D
	std::map<int, S> residual;     // nonzero coefficients of op applied to the truncated series
	int shift = 0;                 // max(l - j): residual vanishes up to degree D - shift
};

/// Operator with plain scalar coefficients, obtained by fixing z.
template <class S> using ScalarDiffOperator = std::map<std::pair<int, int>, S>;

template <class S> ScalarDiffOperator<S> evaluate_at(DiffOperator<S> const &op, Rational const &z)
{
	ScalarDiffOperator<S> r;
	for (auto const &[k, c] : op.terms())
	{
		S v = c.evaluate(z);
		if (!(v == S(0)))
			r[k] = v;
	}
	return r;
}

namespace detail {

inline Rational falling_factorial(int n, int l)
{
	if (n < l)
		return 0;
	Rational r = 1;
	for (int i = 0; i < l; ++i)
		r *= n - i;
	return r;
}

} // namespace detail

/// op applied to sum_{n<=D} c_n alpha^n, as degree -> coefficient.
template <class S> std::map<int, S> apply_operator(ScalarDiffOperator<S> const &op, std::vector<S> const &f)
{
	std::map<int, S> out;
	for (auto const &[k, c] : op)
	{
		auto [j, l] = k;
		for (int n = l; n < static_cast<int>(f.size()); ++n)
			if (!(f[n] == S(0)))
				out[n - l + j] += c * f[n] * detail::falling_factorial(n, l);
	}
	std::erase_if(out, [](auto const &kv) { return kv.second == S(0); });
	return out;
}

/// Solves op f = 0 for the coefficients c_0..c_D by the triangular recurrence
/// that the highest index shift s = max(l - j) induces. Indices below s, and
/// indices whose recurrence head vanishes while their equation already holds,
/// are free. A free index takes its seed if one is given, otherwise 1 when all
/// earlier coefficients vanish and 0 after that. A vanishing head with an
/// unsatisfied equation stops the solve with that index.
template <class S>
SeriesSolution<S> series_solve(ScalarDiffOperator<S> const &op, int degree, std::map<int, S> const &seeds = {})
{
	if (op.empty())
		throw RecurrenceError("degenerate (zero) operator", -1);
	if (degree < 0)
		throw std::invalid_argument("negative degree");
	int shift = std::numeric_limits<int>::min();
	for (auto const &[k, c] : op)
		shift = std::max(shift, k.second - k.first);

	SeriesSolution<S> sol;
	sol.shift = shift;
	sol.coeffs.assign(static_cast<std::size_t>(degree) + 1, S(0));
	auto &f = sol.coeffs;
	for (int q = 0; q <= degree; ++q)
	{
		auto seed = seeds.find(q);
		int p = q - shift; // output degree whose equation determines c_q
		auto free_value = [&] {
			if (seed != seeds.end())
				return seed->second;
			bool all_zero = std::all_of(f.begin(), f.begin() + q, [](S const &c) { return c == S(0); });
			return all_zero ? S(1) : S(0);
		};
		if (p < 0)
		{
			f[q] = free_value();
			continue;
		}
		S lead(0), rest(0);
		for (auto const &[k, c] : op)
		{
			auto [j, l] = k;
			int n = p - j + l;
			if (n < 0)
				continue;
			S term = c * detail::falling_factorial(n, l);
			if (n == q)
				lead += term;
			else
				rest += term * f[n];
		}
		if (!(lead == S(0)))
		{
			if (seed != seeds.end())
				throw RecurrenceError("seed given for determined index " + std::to_string(q), q);
			f[q] = S(0) - rest * inverse(lead);
		}
		else if (rest == S(0))
			f[q] = free_value();
		else
			throw RecurrenceError("singular leading recurrence coefficient at n = " + std::to_string(q), q);
	}
	sol.residual = apply_operator(op, f);
	return sol;
}

} // namespace twophoton
