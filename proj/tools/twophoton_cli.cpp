#include "twophoton/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace twophoton;

enum ExitCode { ok = 0, verification_failed = 1, usage = 2, internal = 3 };

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

Rational rational_arg(std::string const &s, char const *flag)
{
	try
	{
		return parse_rational(s);
	}
	catch (std::exception const &e)
	{
		throw UsageError(std::string(flag) + ": " + e.what());
	}
}

std::vector<std::string> split(std::string const &s, char sep)
{
	std::vector<std::string> out;
	std::stringstream ss(s);
	for (std::string item; std::getline(ss, item, sep);)
		if (!item.empty())
			out.push_back(item);
	return out;
}

std::array<ComplexRational, 5> beta_arg(std::string const &s)
{
	auto parts = split(s, ',');
	if (parts.size() != 5)
		throw UsageError("--beta needs five comma-separated values (re or re:im)");
	std::array<ComplexRational, 5> b;
	for (std::size_t i = 0; i < 5; ++i)
	{
		try
		{
			b[i] = parse_complex(parts[i]);
		}
		catch (std::exception const &e)
		{
			throw UsageError(std::string("--beta: ") + e.what());
		}
	}
	return b;
}

ComplexRational complex_arg(std::string const &s, char const *flag)
{
	try
	{
		return parse_complex(s);
	}
	catch (std::exception const &e)
	{
		throw UsageError(std::string(flag) + ": " + e.what());
	}
}

void write_output(std::string const &path, std::string const &text)
{
	if (path.empty() || path == "-")
	{
		std::cout << text;
		return;
	}
	std::ofstream f(path, std::ios::binary);
	if (!f)
		throw std::runtime_error("cannot write " + path);
	f << text;
}

struct VerifyArgs
{
	std::string algebra = "both", checks, out, beta, lambda = "1", z, mass, rep_param;
	int order = 3, degree = 30, workers = 1;
	bool timings = false, quiet = false;
};

int run_verify(VerifyArgs const &a)
{
	RunConfig cfg;
	cfg.algebra = a.algebra;
	cfg.order = a.order;
	cfg.degree = a.degree;
	cfg.workers = a.workers;
	if (!a.z.empty())
		cfg.z = rational_arg(a.z, "--z");
	if (!a.mass.empty())
		cfg.mass = rational_arg(a.mass, "--mass");
	if (!a.rep_param.empty())
		cfg.rep_param = rational_arg(a.rep_param, "--rep-param");
	if (!a.checks.empty())
	{
		cfg.checks.clear();
		for (auto const &c : split(a.checks, ','))
			cfg.checks.insert(c);
	}
	if (!a.beta.empty())
		cfg.eigen.beta = beta_arg(a.beta);
	cfg.eigen.lambda = complex_arg(a.lambda, "--lambda");
	try
	{
		cfg.validate();
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError(e.what());
	}

	RunResult result = run(cfg);
	Json doc = report_json(cfg.to_json(), result.report);
	if (a.timings)
	{
		Json t = Json::object();
		for (auto const &[label, ms] : result.timings)
			t[label] = ms;
		doc["timings"] = t;
	}
	if (!a.out.empty())
		write_output(a.out, doc.dump(2) + "\n");
	if (!a.quiet)
		std::cout << render_report(result.report);
	return result.report.all_passed() ? ok : verification_failed;
}

int run_export(std::string const &algebra, int order, std::string const &out)
{
	if (order < 0 || order > 8)
		throw UsageError("order must be in 0..8");
	AlgebraSpec spec;
	try
	{
		spec = make_builtin_spec(algebra, order);
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError(e.what());
	}
	write_output(out, to_json(spec).dump(2) + "\n");
	return ok;
}

struct SolveArgs
{
	std::string beta = "0,1,0,0,0", lambda = "1", z = "1/10", mode = "full", out, seeds;
	int order = 3, degree = 30;
};

int run_solve(SolveArgs const &a)
{
	EigenProblem p{beta_arg(a.beta), complex_arg(a.lambda, "--lambda")};
	try
	{
		p.validate();
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError(e.what());
	}
	EigenMode mode = a.mode == "classical" ? EigenMode::classical
	                 : a.mode == "first-order" ? EigenMode::first_order
	                 : a.mode == "full" ? EigenMode::full
	                                    : throw UsageError("--mode must be classical, first-order or full");
	Rational z = rational_arg(a.z, "--z");
	int k = mode == EigenMode::first_order ? 1 : a.order;
	std::map<int, ComplexRational> seeds;
	for (auto const &s : split(a.seeds, ','))
	{
		auto eq = s.find('=');
		if (eq == std::string::npos)
			throw UsageError("--seed entries look like n=value");
		seeds[std::stoi(s.substr(0, eq))] = complex_arg(s.substr(eq + 1), "--seed");
	}
	auto op = eigen_operator(p, k, mode);
	Json doc{{"problem", to_json(p)}, {"mode", a.mode}, {"z", to_json(z)}, {"order", k}, {"operator", to_string(op)}};
	try
	{
		doc["solution"] = to_json(series_solve(evaluate_at(op, mode == EigenMode::classical ? Rational(0) : z), a.degree, seeds));
	}
	catch (RecurrenceError const &e)
	{
		doc["error"] = {{"message", e.what()}, {"index", e.index}};
		write_output(a.out, doc.dump(2) + "\n");
		return verification_failed;
	}
	write_output(a.out, doc.dump(2) + "\n");
	return ok;
}

struct SolutionsArgs
{
	std::string z = "1/10", mass = "1", rep_param = "-1/2", family = "both", kappas = "1,1/2,2/3", out, csv;
	int degree = 5;
	bool classical = false;
};

int run_solutions(SolutionsArgs const &a)
{
	SchrodingerParams p{rational_arg(a.z, "--z"), rational_arg(a.mass, "--mass"), rational_arg(a.rep_param, "--rep-param"),
	                    a.classical};
	try
	{
		p.validate();
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError(e.what());
	}
	std::vector<CertifiedSolution> sols;
	if (a.family == "polynomial" || a.family == "both")
		sols = exact_solutions(p, SolutionFamily::polynomial, {Rational(a.degree)});
	if (a.family == "exponential" || a.family == "both")
	{
		std::vector<Rational> ks;
		for (auto const &s : split(a.kappas, ','))
			ks.push_back(rational_arg(s, "--kappa"));
		try
		{
			auto ex = exact_solutions(p, SolutionFamily::exponential, ks);
			sols.insert(sols.end(), ex.begin(), ex.end());
		}
		catch (std::domain_error const &e)
		{
			throw UsageError(std::string("--kappa: ") + e.what());
		}
	}
	if (a.family != "polynomial" && a.family != "exponential" && a.family != "both")
		throw UsageError("--family must be polynomial, exponential or both");

	VerificationReport rep;
	Json list = Json::array();
	for (auto const &s : sols)
	{
		list.push_back(to_json(s));
		for (auto const &g : schrodinger_generators())
			if (g != "C" || p.a == Rational(-1, 2))
				rep.add(apply_and_recheck(g, s, p));
	}
	Json doc{{"parameters", p.describe()}, {"solutions", list}, {"images", report_json(Json::object(), rep)["entries"]}};
	write_output(a.out, doc.dump(2) + "\n");

	if (!a.csv.empty())
	{
		std::ofstream f(a.csv);
		if (!f)
			throw std::runtime_error("cannot write " + a.csv);
		f << "solution,x,t,value\n";
		Rational z = p.classical ? Rational(1, 10) : p.z;
		for (auto const &s : sols)
			for (auto const &g : sample_grid(s.phi, z, Rational(-2), Rational(1, 4), 17, Rational(0), 11))
				f << '"' << s.label << "\"," << g.x << ',' << g.t << ',' << g.value << '\n';
	}
	bool all = std::all_of(sols.begin(), sols.end(), [](auto const &s) { return s.residual.is_zero(); });
	return all && rep.all_passed() ? ok : verification_failed;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact verification of the deformed two-photon and Schrödinger Hopf algebras"};
	app.require_subcommand(1);

	VerifyArgs v;
	auto *verify = app.add_subcommand("verify", "run the verification matrix");
	verify->add_option("--algebra", v.algebra, "h6, sch or both")->envname("TWOPHOTON_ALGEBRA")->capture_default_str();
	verify->add_option("--order", v.order, "truncation order k in z (0..8); checks run at 0..k")
	    ->envname("TWOPHOTON_ORDER")
	    ->capture_default_str();
	verify->add_option("--z", v.z, "deformation parameter p/q for the discrete equation and eigen checks")
	    ->envname("TWOPHOTON_Z");
	verify->add_option("--mass", v.mass, "mass m")->envname("TWOPHOTON_MASS");
	verify->add_option("--rep-param", v.rep_param, "representation parameter a")->envname("TWOPHOTON_REP_PARAM");
	verify->add_option("--checks", v.checks, "comma-separated subset of bialgebra,hopf,rmatrix,rep,eigen,discrete-se")
	    ->envname("TWOPHOTON_CHECKS");
	verify->add_option("--out", v.out, "JSON report path")->envname("TWOPHOTON_OUT");
	verify->add_option("--beta", v.beta, "eigenproblem coefficients b1..b5 (re or re:im)")->envname("TWOPHOTON_BETA");
	verify->add_option("--lambda", v.lambda, "eigenvalue (re or re:im)")->envname("TWOPHOTON_LAMBDA");
	verify->add_option("--degree", v.degree, "series degree for eigen checks")->envname("TWOPHOTON_DEGREE");
	verify->add_option("--workers", v.workers, "concurrent tasks")->envname("TWOPHOTON_WORKERS");
	verify->add_flag("--timings", v.timings, "add per-task wall times to the report")->envname("TWOPHOTON_TIMINGS");
	verify->add_flag("--quiet", v.quiet, "no text report on stdout")->envname("TWOPHOTON_QUIET");

	std::string ex_alg = "h6", ex_out;
	int ex_order = 3;
	auto *exp = app.add_subcommand("export-spec", "write a built-in algebra as JSON");
	exp->add_option("--algebra", ex_alg, "h6 or sch")->capture_default_str();
	exp->add_option("--order", ex_order, "truncation order")->capture_default_str();
	exp->add_option("--out", ex_out, "output path (default stdout)");

	SolveArgs s;
	auto *solve = app.add_subcommand("solve", "power-series solution of the boson eigenstate equation");
	solve->add_option("--beta", s.beta, "b1..b5 (re or re:im)")->capture_default_str();
	solve->add_option("--lambda", s.lambda, "eigenvalue")->capture_default_str();
	solve->add_option("--z", s.z, "deformation parameter")->capture_default_str();
	solve->add_option("--mode", s.mode, "classical, first-order or full")->capture_default_str();
	solve->add_option("--order", s.order, "order in z for full mode")->capture_default_str();
	solve->add_option("--degree", s.degree, "series degree")->capture_default_str();
	solve->add_option("--seed", s.seeds, "free coefficients, e.g. 0=1,1=0");
	solve->add_option("--out", s.out, "output path (default stdout)");

	SolutionsArgs so;
	auto *sols = app.add_subcommand("solutions", "exact solutions of the discrete-time Schrödinger equation");
	sols->add_option("--z", so.z, "deformation parameter")->capture_default_str();
	sols->add_option("--mass", so.mass, "mass")->capture_default_str();
	sols->add_option("--rep-param", so.rep_param, "representation parameter")->capture_default_str();
	sols->add_option("--family", so.family, "polynomial, exponential or both")->capture_default_str();
	sols->add_option("--degree", so.degree, "largest heat-polynomial degree")->capture_default_str();
	sols->add_option("--kappa", so.kappas, "comma-separated spatial rates")->capture_default_str();
	sols->add_flag("--classical", so.classical, "continuous-time equation");
	sols->add_option("--out", so.out, "output path (default stdout)");
	sols->add_option("--csv", so.csv, "grid samples for plotting");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int rc = app.exit(e);
		return rc == 0 ? ok : usage;
	}

	try
	{
		if (*verify)
			return run_verify(v);
		if (*exp)
			return run_export(ex_alg, ex_order, ex_out);
		if (*solve)
			return run_solve(s);
		if (*sols)
			return run_solutions(so);
	}
	catch (UsageError const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return usage;
	}
	catch (std::exception const &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return internal;
	}
	return usage;
}
