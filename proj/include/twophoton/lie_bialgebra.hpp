#pragma once

// First-order (classical) layer: structure constants, classical r-matrices,
// cocommutators, the classical Yang-Baxter equation and the 1-cocycle
// condition. Every tensor here is homogeneous of degree one in z, so z is
// kept as an implicit overall factor.

#include "twophoton/rational.hpp"
#include "twophoton/report.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace twophoton {

using Vector = std::vector<Rational>;

class LieAlgebraSpec
{
	std::string name_;
	std::vector<std::string> basis_;
	std::vector<Rational> c_; // c_[(i*d + j)*d + k] = coefficient of e_k in [e_i, e_j]

	std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim() + j) * dim() + k; }

  public:
	LieAlgebraSpec(std::string name, std::vector<std::string> basis)
	    : name_(std::move(name)), basis_(std::move(basis)), c_(dim() * dim() * dim())
	{
	}

	std::string const &name() const { return name_; }
	std::vector<std::string> const &basis() const { return basis_; }
	std::size_t dim() const { return basis_.size(); }

	std::size_t index_of(std::string const &s) const
	{
		for (std::size_t i = 0; i < dim(); ++i)
			if (basis_[i] == s)
				return i;
		throw std::invalid_argument("unknown basis element '" + s + "' in " + name_);
	}

	Rational const &constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[at(i, j, k)]; }

	/// Sets [x, y] = value and [y, x] = -value.
	void set_bracket(std::string const &x, std::string const &y, std::vector<std::pair<std::string, Rational>> const &value)
	{
		auto i = index_of(x), j = index_of(y);
		for (std::size_t k = 0; k < dim(); ++k)
		{
			c_[at(i, j, k)] = 0;
			c_[at(j, i, k)] = 0;
		}
		for (auto const &[s, c] : value)
		{
			auto k = index_of(s);
			c_[at(i, j, k)] += c;
			c_[at(j, i, k)] -= c;
		}
	}

	Vector bracket(std::size_t i, std::size_t j) const
	{
		Vector v(dim());
		for (std::size_t k = 0; k < dim(); ++k)
			v[k] = constant(i, j, k);
		return v;
	}

	Vector bracket(Vector const &a, Vector const &b) const
	{
		Vector v(dim());
		for (std::size_t i = 0; i < dim(); ++i)
		{
			if (a[i] == 0)
				continue;
			for (std::size_t j = 0; j < dim(); ++j)
			{
				if (b[j] == 0)
					continue;
				for (std::size_t k = 0; k < dim(); ++k)
					v[k] += a[i] * b[j] * constant(i, j, k);
			}
		}
		return v;
	}

	bool operator==(LieAlgebraSpec const &o) const { return basis_ == o.basis_ && c_ == o.c_; }

	std::string render(Vector const &v) const
	{
		std::string out;
		for (std::size_t k = 0; k < dim(); ++k)
			if (v[k] != 0)
				out += (out.empty() ? "" : " + ") + to_string(v[k]) + "*" + basis_[k];
		return out.empty() ? "0" : out;
	}
};

/// Two-photon algebra h6 in the order B+, N, M, A+, A-, B-.
inline LieAlgebraSpec h6_lie_algebra()
{
	LieAlgebraSpec s("h6", {"B+", "N", "M", "A+", "A-", "B-"});
	s.set_bracket("N", "A+", {{"A+", 1}});
	s.set_bracket("N", "A-", {{"A-", -1}});
	s.set_bracket("A-", "A+", {{"M", 1}});
	s.set_bracket("N", "B+", {{"B+", 2}});
	s.set_bracket("N", "B-", {{"B-", -2}});
	s.set_bracket("B-", "B+", {{"N", 4}, {"M", 2}});
	s.set_bracket("A+", "B-", {{"A-", -2}});
	s.set_bracket("A-", "B+", {{"A+", 2}});
	return s;
}

/// Schrödinger algebra S(1+1) in the order H, D, M, P, K, C.
inline LieAlgebraSpec schrodinger_lie_algebra()
{
	LieAlgebraSpec s("schrodinger", {"H", "D", "M", "P", "K", "C"});
	s.set_bracket("D", "P", {{"P", -1}});
	s.set_bracket("D", "K", {{"K", 1}});
	s.set_bracket("K", "P", {{"M", 1}});
	s.set_bracket("D", "H", {{"H", -2}});
	s.set_bracket("D", "C", {{"C", 2}});
	s.set_bracket("H", "C", {{"D", 1}});
	s.set_bracket("K", "H", {{"P", 1}});
	s.set_bracket("P", "C", {{"K", -1}});
	return s;
}

/// Sum over triples of [e_i,[e_j,e_k]] + cyclic, flattened; all zero for a Lie algebra.
inline std::vector<Vector> jacobi_residuals(LieAlgebraSpec const &s)
{
	std::vector<Vector> out;
	auto d = s.dim();
	auto unit = [&](std::size_t i) {
		Vector v(d);
		v[i] = 1;
		return v;
	};
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = i + 1; j < d; ++j)
			for (std::size_t k = j + 1; k < d; ++k)
			{
				Vector r(d);
				auto add = [&](Vector const &v) {
					for (std::size_t t = 0; t < d; ++t)
						r[t] += v[t];
				};
				add(s.bracket(unit(i), s.bracket(j, k)));
				add(s.bracket(unit(j), s.bracket(k, i)));
				add(s.bracket(unit(k), s.bracket(i, j)));
				out.push_back(r);
			}
	return out;
}

/// Dense rank-2 tensor sum m_ij e_i ⊗ e_j, implicitly multiplied by z.
class WedgeElement
{
	std::size_t dim_ = 0;
	std::vector<Rational> m_;

  public:
	WedgeElement() = default;
	explicit WedgeElement(std::size_t dim) : dim_(dim), m_(dim * dim) {}

	std::size_t dim() const { return dim_; }
	Rational const &operator()(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }
	Rational &operator()(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }

	/// this += c * (e_i ∧ e_j) with x ∧ y = x⊗y - y⊗x.
	WedgeElement &add_wedge(std::size_t i, std::size_t j, Rational const &c)
	{
		(*this)(i, j) += c;
		(*this)(j, i) -= c;
		return *this;
	}

	bool is_zero() const
	{
		for (auto const &c : m_)
			if (c != 0)
				return false;
		return true;
	}
	bool is_antisymmetric() const
	{
		for (std::size_t i = 0; i < dim_; ++i)
			for (std::size_t j = 0; j < dim_; ++j)
				if ((*this)(i, j) != -(*this)(j, i))
					return false;
		return true;
	}

	WedgeElement &operator+=(WedgeElement const &o)
	{
		for (std::size_t i = 0; i < m_.size(); ++i)
			m_[i] += o.m_[i];
		return *this;
	}
	WedgeElement &operator-=(WedgeElement const &o)
	{
		for (std::size_t i = 0; i < m_.size(); ++i)
			m_[i] -= o.m_[i];
		return *this;
	}
	friend WedgeElement operator+(WedgeElement a, WedgeElement const &b) { return a += b; }
	friend WedgeElement operator-(WedgeElement a, WedgeElement const &b) { return a -= b; }
	friend WedgeElement operator*(Rational const &c, WedgeElement a)
	{
		for (auto &x : a.m_)
			x *= c;
		return a;
	}
	friend bool operator==(WedgeElement const &a, WedgeElement const &b) { return a.m_ == b.m_; }

	/// "z*(c*X^Y + ...)" over pairs i < j for antisymmetric tensors, plain
	/// tensor terms otherwise.
	std::string render(std::vector<std::string> const &basis) const
	{
		std::string out;
		bool anti = is_antisymmetric();
		for (std::size_t i = 0; i < dim_; ++i)
			for (std::size_t j = anti ? i + 1 : 0; j < dim_; ++j)
				if ((*this)(i, j) != 0)
					out += (out.empty() ? "" : " + ") + to_string((*this)(i, j)) + "*" + basis[i] +
					       (anti ? "^" : "(x)") + basis[j];
		return out.empty() ? "0" : "z*(" + out + ")";
	}
};

/// Convenience: build a wedge element from (coefficient, X, Y) triples meaning c * X∧Y.
inline WedgeElement wedge(LieAlgebraSpec const &s, std::vector<std::tuple<Rational, std::string, std::string>> const &terms)
{
	WedgeElement w(s.dim());
	for (auto const &[c, x, y] : terms)
		w.add_wedge(s.index_of(x), s.index_of(y), c);
	return w;
}

/// ad_X acting on a rank-2 tensor: [X,a]⊗b + a⊗[X,b].
inline WedgeElement adjoint_action(LieAlgebraSpec const &s, std::size_t x, WedgeElement const &t)
{
	auto d = s.dim();
	WedgeElement out(d);
	for (std::size_t a = 0; a < d; ++a)
		for (std::size_t b = 0; b < d; ++b)
		{
			Rational const &c = t(a, b);
			if (c == 0)
				continue;
			for (std::size_t k = 0; k < d; ++k)
			{
				out(k, b) += c * s.constant(x, a, k);
				out(a, k) += c * s.constant(x, b, k);
			}
		}
	return out;
}

/// δ(X) = [X⊗1 + 1⊗X, r].
inline WedgeElement cocommutator_from_r(LieAlgebraSpec const &s, WedgeElement const &r, std::string const &x)
{
	return adjoint_action(s, s.index_of(x), r);
}

inline std::vector<WedgeElement> cocommutator_table(LieAlgebraSpec const &s, WedgeElement const &r)
{
	std::vector<WedgeElement> out;
	for (auto const &b : s.basis())
		out.push_back(cocommutator_from_r(s, r, b));
	return out;
}

/// Dense rank-3 tensor, index (i*d + j)*d + k.
using Rank3 = std::vector<Rational>;

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]; the z^2 factor is implicit.
inline Rank3 schouten_bracket(LieAlgebraSpec const &s, WedgeElement const &r)
{
	auto d = s.dim();
	Rank3 out(d * d * d);
	auto at = [d](std::size_t i, std::size_t j, std::size_t k) { return (i * d + j) * d + k; };
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
		{
			if (r(i, j) == 0)
				continue;
			for (std::size_t k = 0; k < d; ++k)
				for (std::size_t l = 0; l < d; ++l)
				{
					if (r(k, l) == 0)
						continue;
					Rational c = r(i, j) * r(k, l);
					for (std::size_t m = 0; m < d; ++m)
					{
						// [r12, r13] = r^ij r^kl [e_i, e_k] ⊗ e_j ⊗ e_l
						if (s.constant(i, k, m) != 0)
							out[at(m, j, l)] += c * s.constant(i, k, m);
						// [r12, r23] = r^ij r^kl e_i ⊗ [e_j, e_k] ⊗ e_l
						if (s.constant(j, k, m) != 0)
							out[at(i, m, l)] += c * s.constant(j, k, m);
						// [r13, r23] = r^ij r^kl e_i ⊗ e_k ⊗ [e_j, e_l]
						if (s.constant(j, l, m) != 0)
							out[at(i, k, m)] += c * s.constant(j, l, m);
					}
				}
		}
	return out;
}

inline std::string render_rank3(LieAlgebraSpec const &s, Rank3 const &t)
{
	auto d = s.dim();
	std::string out;
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			for (std::size_t k = 0; k < d; ++k)
			{
				auto const &c = t[(i * d + j) * d + k];
				if (c != 0)
					out += (out.empty() ? "" : " + ") + to_string(c) + "*" + s.basis()[i] + "(x)" + s.basis()[j] +
					       "(x)" + s.basis()[k];
			}
	return out.empty() ? "0" : "z^2*(" + out + ")";
}

inline bool is_zero(Rank3 const &t)
{
	for (auto const &c : t)
		if (c != 0)
			return false;
	return true;
}

inline CheckEntry verify_cybe(LieAlgebraSpec const &s, WedgeElement const &r, std::string const &label)
{
	Rank3 sb = schouten_bracket(s, r);
	CheckEntry e;
	e.name = "bialgebra.cybe[" + label + "]";
	e.parameters = {{"algebra", s.name()}, {"r", r.render(s.basis())}};
	e.pass = is_zero(sb);
	e.residual = e.pass ? "0" : render_rank3(s, sb);
	return e;
}

/// 1-cocycle condition δ([X,Y]) = ad_X δ(Y) - ad_Y δ(X) on all pairs and
/// co-Jacobi (cyclic sum of (δ⊗id)δ(X) vanishes) on all basis elements.
inline VerificationReport verify_cocycle(LieAlgebraSpec const &s, std::vector<WedgeElement> const &delta,
                                         std::string const &label)
{
	VerificationReport rep;
	auto d = s.dim();
	if (delta.size() != d)
		throw std::invalid_argument("cocommutator table has the wrong size");
	std::map<std::string, std::string> params{{"algebra", s.name()}, {"table", label}};
	auto render = [&](WedgeElement const &w) { return w.render(s.basis()); };

	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = i + 1; j < d; ++j)
		{
			WedgeElement lhs(d);
			for (std::size_t k = 0; k < d; ++k)
				if (s.constant(i, j, k) != 0)
					lhs += s.constant(i, j, k) * delta[k];
			WedgeElement res = lhs - (adjoint_action(s, i, delta[j]) - adjoint_action(s, j, delta[i]));
			rep.add(residual_entry("bialgebra.cocycle[" + label + "][" + s.basis()[i] + "," + s.basis()[j] + "]", params,
			                       res, render));
		}

	auto at = [d](std::size_t i, std::size_t j, std::size_t k) { return (i * d + j) * d + k; };
	for (std::size_t x = 0; x < d; ++x)
	{
		// (δ⊗id)δ(X) = sum d^{ab} δ(e_a) ⊗ e_b
		Rank3 t(d * d * d);
		for (std::size_t a = 0; a < d; ++a)
			for (std::size_t b = 0; b < d; ++b)
			{
				if (delta[x](a, b) == 0)
					continue;
				for (std::size_t p = 0; p < d; ++p)
					for (std::size_t q = 0; q < d; ++q)
						t[at(p, q, b)] += delta[x](a, b) * delta[a](p, q);
			}
		Rank3 cyc(d * d * d);
		for (std::size_t i = 0; i < d; ++i)
			for (std::size_t j = 0; j < d; ++j)
				for (std::size_t k = 0; k < d; ++k)
					cyc[at(i, j, k)] = t[at(i, j, k)] + t[at(j, k, i)] + t[at(k, i, j)];
		CheckEntry e;
		e.name = "bialgebra.co-jacobi[" + label + "][" + s.basis()[x] + "]";
		e.parameters = params;
		e.pass = is_zero(cyc);
		e.residual = e.pass ? "0" : render_rank3(s, cyc);
		rep.add(e);
	}
	return rep;
}

/// Square matrix inverse over the rationals; throws on a singular matrix.
inline std::vector<Vector> invert(std::vector<Vector> m)
{
	auto n = m.size();
	std::vector<Vector> inv(n, Vector(n));
	for (std::size_t i = 0; i < n; ++i)
		inv[i][i] = 1;
	for (std::size_t col = 0; col < n; ++col)
	{
		std::size_t piv = col;
		while (piv < n && m[piv][col] == 0)
			++piv;
		if (piv == n)
			throw std::domain_error("singular basis change");
		std::swap(m[piv], m[col]);
		std::swap(inv[piv], inv[col]);
		Rational p = m[col][col];
		for (std::size_t j = 0; j < n; ++j)
		{
			m[col][j] /= p;
			inv[col][j] /= p;
		}
		for (std::size_t r = 0; r < n; ++r)
		{
			if (r == col || m[r][col] == 0)
				continue;
			Rational f = m[r][col];
			for (std::size_t j = 0; j < n; ++j)
			{
				m[r][j] -= f * m[col][j];
				inv[r][j] -= f * inv[col][j];
			}
		}
	}
	return inv;
}

/// Linear change of basis: new_a = sum_i rows[a][i] * old_i.
struct LieBasisChange
{
	std::vector<std::string> new_basis;
	std::vector<Vector> rows;
};

inline LieBasisChange make_basis_change(LieAlgebraSpec const &s,
                                        std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rational>>>> const &defs)
{
	LieBasisChange bc;
	for (auto const &[name, combo] : defs)
	{
		bc.new_basis.push_back(name);
		Vector row(s.dim());
		for (auto const &[old, c] : combo)
			row[s.index_of(old)] += c;
		bc.rows.push_back(row);
	}
	return bc;
}

/// Structure constants in the new basis.
inline LieAlgebraSpec basis_change(LieAlgebraSpec const &s, LieBasisChange const &bc, std::string new_name)
{
	auto d = s.dim();
	if (bc.rows.size() != d || bc.new_basis.size() != d)
		throw std::invalid_argument("basis change has the wrong size");
	auto inv = invert(bc.rows); // old_k = sum_c inv[k][c] new_c
	LieAlgebraSpec out(std::move(new_name), bc.new_basis);
	for (std::size_t a = 0; a < d; ++a)
		for (std::size_t b = a + 1; b < d; ++b)
		{
			Vector v = s.bracket(bc.rows[a], bc.rows[b]);
			std::vector<std::pair<std::string, Rational>> value;
			for (std::size_t c = 0; c < d; ++c)
			{
				Rational coef = 0;
				for (std::size_t k = 0; k < d; ++k)
					coef += v[k] * inv[k][c];
				if (coef != 0)
					value.emplace_back(bc.new_basis[c], coef);
			}
			out.set_bracket(bc.new_basis[a], bc.new_basis[b], value);
		}
	return out;
}

/// Rewrites a rank-2 tensor in the new basis.
inline WedgeElement transform_tensor(WedgeElement const &t, LieBasisChange const &bc)
{
	auto d = t.dim();
	auto inv = invert(bc.rows);
	WedgeElement out(d);
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
		{
			if (t(i, j) == 0)
				continue;
			for (std::size_t a = 0; a < d; ++a)
				for (std::size_t b = 0; b < d; ++b)
					out(a, b) += t(i, j) * inv[i][a] * inv[j][b];
		}
	return out;
}

/// D = -N - M/2, P = A+, K = A-, H = B+/2, C = B-/2, listed in Schrödinger order.
inline LieBasisChange twophoton_to_schrodinger_basis(LieAlgebraSpec const &h6)
{
	return make_basis_change(h6, {{"H", {{"B+", Rational(1, 2)}}},
	                              {"D", {{"N", -1}, {"M", Rational(-1, 2)}}},
	                              {"M", {{"M", 1}}},
	                              {"P", {{"A+", 1}}},
	                              {"K", {{"A-", 1}}},
	                              {"C", {{"B-", Rational(1, 2)}}}});
}

/// J+ = B+/2, J- = -B-/2, J3 = N, I = -M/2 with A+, A- kept.
inline LieBasisChange twophoton_to_sl2_basis(LieAlgebraSpec const &h6)
{
	return make_basis_change(h6, {{"J+", {{"B+", Rational(1, 2)}}},
	                              {"J3", {{"N", 1}}},
	                              {"I", {{"M", Rational(-1, 2)}}},
	                              {"A+", {{"A+", 1}}},
	                              {"A-", {{"A-", 1}}},
	                              {"J-", {{"B-", Rational(-1, 2)}}}});
}

/// True when brackets among the named elements stay in their span.
inline bool is_closed_subalgebra(LieAlgebraSpec const &s, std::vector<std::string> const &subset)
{
	std::vector<bool> in(s.dim(), false);
	for (auto const &x : subset)
		in[s.index_of(x)] = true;
	for (std::size_t i = 0; i < s.dim(); ++i)
		for (std::size_t j = 0; j < s.dim(); ++j)
		{
			if (!in[i] || !in[j])
				continue;
			for (std::size_t k = 0; k < s.dim(); ++k)
				if (!in[k] && s.constant(i, j, k) != 0)
					return false;
		}
	return true;
}

/// Classical r-matrices and the reference cocommutator tables.
inline WedgeElement twophoton_r(LieAlgebraSpec const &h6) { return wedge(h6, {{1, "N", "B+"}}); }

inline WedgeElement schrodinger_r(LieAlgebraSpec const &sch)
{
	return wedge(sch, {{2, "H", "D"}, {1, "H", "M"}});
}

inline std::vector<WedgeElement> twophoton_cocommutators(LieAlgebraSpec const &h6)
{
	return {
	    WedgeElement(h6.dim()),                                   // B+
	    wedge(h6, {{2, "N", "B+"}}),                              // N
	    WedgeElement(h6.dim()),                                   // M
	    wedge(h6, {{-1, "A+", "B+"}}),                            // A+
	    wedge(h6, {{1, "A-", "B+"}, {2, "N", "A+"}}),             // A-
	    wedge(h6, {{2, "B-", "B+"}, {2, "N", "M"}}),              // B-
	};
}

inline std::vector<WedgeElement> schrodinger_cocommutators(LieAlgebraSpec const &sch)
{
	return {
	    WedgeElement(sch.dim()),                                        // H
	    wedge(sch, {{4, "D", "H"}, {2, "M", "H"}}),                     // D
	    WedgeElement(sch.dim()),                                        // M
	    wedge(sch, {{-2, "P", "H"}}),                                   // P
	    wedge(sch, {{2, "K", "H"}, {2, "P", "D"}, {1, "P", "M"}}),      // K
	    wedge(sch, {{4, "C", "H"}, {-1, "D", "M"}}),                    // C
	};
}

} // namespace twophoton
