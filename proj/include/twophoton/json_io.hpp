#pragma once

// JSON forms of specs, reports and series solutions. Rationals are
// [numerator, denominator] pairs of decimal strings.

#include "twophoton/boson_rep.hpp"
#include "twophoton/nc_algebra.hpp"
#include "twophoton/report.hpp"
#include "twophoton/schrodinger.hpp"

#include <json.hpp>

#include <string>

namespace twophoton {

using Json = nlohmann::ordered_json;

inline Json to_json(Rational const &r)
{
	return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

inline Json to_json(ComplexRational const &c) { return Json{{"re", to_json(c.re)}, {"im", to_json(c.im)}}; }

inline Json to_json(Series const &s)
{
	Json a = Json::array();
	for (int i = 0; i <= s.order(); ++i)
		a.push_back(to_json(s[i]));
	return a;
}

inline Json to_json(NCElement const &e, std::vector<std::string> const &names)
{
	Json a = Json::array();
	for (auto const &[w, c] : e.terms())
		a.push_back({{"word", render_word(w, names)}, {"coefficients", to_json(c)}});
	return a;
}

template <std::size_t N> Json to_json(Tensor<N> const &t, std::vector<std::string> const &names)
{
	Json a = Json::array();
	for (auto const &[k, c] : t.terms())
	{
		Json legs = Json::array();
		for (auto const &w : k)
			legs.push_back(render_word(w, names));
		a.push_back({{"legs", legs}, {"coefficients", to_json(c)}});
	}
	return a;
}

inline Json to_json(AlgebraSpec const &s)
{
	auto const &n = s.generators;
	Json j;
	j["name"] = s.name;
	j["order"] = s.order;
	j["generators"] = n;
	Json central = Json::array();
	for (int i = 0; i < s.dimension(); ++i)
		if (s.is_central(i))
			central.push_back(n[i]);
	j["central"] = central;
	Json rel = Json::array();
	for (auto const &[xy, v] : s.relations)
		rel.push_back({{"bracket", {n[xy.first], n[xy.second]}}, {"value", to_json(v, n)}});
	j["relations"] = rel;
	Json cop = Json::object(), ant = Json::object(), cou = Json::object();
	for (int i = 0; i < s.dimension(); ++i)
	{
		if (i < static_cast<int>(s.coproduct.size()))
			cop[n[i]] = to_json(s.coproduct[i], n);
		if (i < static_cast<int>(s.antipode.size()))
			ant[n[i]] = to_json(s.antipode[i], n);
		if (i < static_cast<int>(s.counit.size()))
			cou[n[i]] = to_json(s.counit[i]);
	}
	j["coproduct"] = cop;
	j["antipode"] = ant;
	j["counit"] = cou;
	Json rf = Json::array();
	for (auto const &f : s.r_factors)
		rf.push_back(to_json(f, n));
	j["r_matrix_exponents"] = rf;
	return j;
}

inline Json to_json(CheckEntry const &e)
{
	return Json{{"name", e.name}, {"parameters", Json(e.parameters)}, {"residual", e.residual}, {"pass", e.pass}};
}

/// {config, entries, summary}; entries are sorted so the document depends only on the config.
inline Json report_json(Json const &config, VerificationReport const &r)
{
	Json entries = Json::array();
	for (auto const &e : r.sorted())
		entries.push_back(to_json(e));
	return Json{{"config", config},
	            {"entries", entries},
	            {"summary", {{"total", r.total()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
}

template <class S> Json to_json(SeriesSolution<S> const &s)
{
	Json c = Json::array(), res = Json::array();
	for (auto const &v : s.coeffs)
		c.push_back(to_json(v));
	for (auto const &[deg, v] : s.residual)
		res.push_back({{"degree", deg}, {"value", to_json(v)}});
	return Json{{"coefficients", c}, {"exact_below_degree", static_cast<int>(s.coeffs.size()) - s.shift}, {"residual", res}};
}

inline Json to_json(EigenProblem const &p)
{
	Json b = Json::array();
	for (auto const &x : p.beta)
		b.push_back(to_json(x));
	return Json{{"beta", b}, {"lambda", to_json(p.lambda)}};
}

inline Json to_json(CertifiedSolution const &s)
{
	Json terms = Json::array();
	for (auto const &[k, c] : s.phi.terms())
		terms.push_back({{"coefficient", to_json(c)},
		                 {"x_power", k.p},
		                 {"t_power", k.q},
		                 {"kappa", to_json(k.kappa)},
		                 {"step_factor", to_json(k.rho)},
		                 {"omega", to_json(k.omega)}});
	return Json{{"label", s.label}, {"function", to_string(s.phi)}, {"terms", terms}, {"residual", to_string(s.residual)},
	            {"certified", s.residual.is_zero()}};
}

} // namespace twophoton
