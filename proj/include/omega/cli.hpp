#ifndef OMEGA_CLI_HPP
#define OMEGA_CLI_HPP

// Command-line front end.  run() takes the arguments after the program name
// and returns the process exit status; all output goes to the given streams.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <new>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asymptotic.hpp"
#include "json_io.hpp"

namespace omega::cli {

  constexpr std::uint64_t default_node_limit = SearchLimits{}.max_nodes;

  struct Inputs {
    std::string   numerical;
    std::string   affine;
    std::string   twogen;
    std::string   lattice;
    std::size_t   arity = 0;
    std::string   spec_file;
    std::string   value;
    std::string   vector;
    std::string   expression;
    bool          json         = false;
    bool          cross_check  = false;
    bool          force_engine = false;
    std::uint64_t limit        = default_node_limit;
    std::size_t   nmax         = 10;
    std::string   suite;
  };

  namespace detail {

    inline Integer parse_integer(std::string const& token) {
      auto const b = token.find_first_not_of(" \t");
      auto const e = token.find_last_not_of(" \t");
      auto const s = b == std::string::npos ? std::string() : token.substr(b, e - b + 1);
      auto const digits = s.substr(!s.empty() && s[0] == '-' ? 1 : 0);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        raise(errc::parse, "\"" + token + "\" is not an integer");
      }
      return Integer(s);
    }

    inline std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       in(s);
      while (std::getline(in, cur, sep)) {
        out.push_back(cur);
      }
      if (!s.empty() && s.back() == sep) {
        out.emplace_back();
      }
      return out;
    }

    // "a,b,c"
    inline std::vector<Integer> parse_list(std::string const& s) {
      std::vector<Integer> out;
      for (auto const& t : split(s, ',')) {
        out.push_back(parse_integer(t));
      }
      if (out.empty()) {
        raise(errc::parse, "empty list");
      }
      return out;
    }

    inline NVec parse_nvec(std::string const& s) {
      auto xs = parse_list(s);
      for (auto const& x : xs) {
        if (x < 0) {
          raise(errc::parse, "\"" + s + "\" has a negative entry");
        }
      }
      return NVec(std::move(xs));
    }

    // "a,b;c,d": rows separated by ';'.
    inline std::vector<std::vector<Integer>> parse_rows(std::string const& s) {
      std::vector<std::vector<Integer>> rows;
      for (auto const& r : split(s, ';')) {
        rows.push_back(parse_list(r));
      }
      return rows;
    }

    inline json read_json_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        raise(errc::parse, "cannot open " + path);
      }
      try {
        return json::parse(in);
      } catch (json::exception const& e) {
        raise(errc::parse, path + ": " + e.what());
      }
    }

    struct Job {
      SemigroupSpec          spec;
      std::optional<Element> element;
    };

    inline Job job_from_inputs(Inputs const& in) {
      int const given = !in.numerical.empty() + !in.affine.empty() + !in.twogen.empty()
                        + !in.lattice.empty() + !in.spec_file.empty();
      if (given != 1) {
        raise(errc::parse,
              "give exactly one of --numerical, --affine, --twogen, --lattice, --spec");
      }
      std::optional<SemigroupSpec> spec;
      std::optional<Element>       element;
      if (!in.numerical.empty()) {
        spec = SemigroupSpec::numerical(parse_list(in.numerical));
      } else if (!in.affine.empty()) {
        std::vector<NVec> cols;
        for (auto const& r : parse_rows(in.affine)) {
          for (auto const& x : r) {
            if (x < 0) {
              raise(errc::parse, "affine generators are nonnegative");
            }
          }
          cols.emplace_back(r);
        }
        spec = SemigroupSpec::affine(std::move(cols));
      } else if (!in.twogen.empty()) {
        auto ab = parse_list(in.twogen);
        if (ab.size() != 2) {
          raise(errc::parse, "--twogen takes alpha,beta");
        }
        spec = SemigroupSpec::two_gen(ab[0], ab[1]);
      } else if (!in.lattice.empty()) {
        std::vector<ZVec> basis;
        for (auto const& r : parse_rows(in.lattice)) {
          basis.emplace_back(r);
        }
        auto const p = in.arity != 0 ? in.arity : basis.front().size();
        spec         = SemigroupSpec::lattice(p, std::move(basis));
      } else {
        auto const j = read_json_file(in.spec_file);
        spec         = spec_from_json(j.contains("spec") ? j.at("spec") : j);
        if (j.contains("element")) {
          element = element_from_json(j.at("element"));
        }
      }
      int const elems = !in.value.empty() + !in.vector.empty() + !in.expression.empty();
      if (elems > 1) {
        raise(errc::parse, "give at most one of --value, --vector, --expression");
      }
      if (!in.value.empty()) {
        auto v = parse_integer(in.value);
        if (v < 0) {
          raise(errc::parse, "--value must be nonnegative");
        }
        element = Element::value(std::move(v));
      } else if (!in.vector.empty()) {
        element = Element::ambient(parse_nvec(in.vector));
      } else if (!in.expression.empty()) {
        element = Element::expression(parse_nvec(in.expression));
      }
      return {*spec, element};
    }

    inline Element const& require_element(Job const& job) {
      if (!job.element) {
        raise(errc::parse, "this command needs --value, --vector or --expression");
      }
      return *job.element;
    }

    inline std::string join_integers(std::vector<Integer> const& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? "," : "") + xs[i].str();
      }
      return s;
    }

    // "{3,5,2,10}"
    inline std::string braces(NVec const& v) {
      return "{" + join_integers(v.entries()) + "}";
    }

    inline OmegaOptions omega_options(Inputs const& in) {
      OmegaOptions o;
      o.engine.limits.max_nodes = in.limit;
      o.cross_check             = in.cross_check;
      o.force_engine            = in.force_engine;
      return o;
    }

    inline std::string fixed_ms(double ms) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(3) << ms;
      return s.str();
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    inline int cmd_omega_elem(Job const& job, Inputs const& in, std::ostream& out) {
      auto const r = omega_element(job.spec, require_element(job), omega_options(in));
      if (in.json) {
        auto j    = report_to_json(r);
        j["spec"] = spec_to_json(job.spec);
        out << j.dump() << '\n';
        return 0;
      }
      out << "semigroup: " << job.spec.describe() << '\n';
      out << "The expression of the element is " << braces(r.expression) << '\n';
      out << "omega: " << r.value << '\n';
      out << "minimals: " << r.witnesses.size() << '\n';
      for (auto const& w : r.witnesses.argmax_norm()) {
        out << "maximal witness: " << w << '\n';
      }
      out << "method: " << to_string(r.method) << '\n';
      for (auto const& c : r.cross_checks) {
        out << "cross-check " << c.label << (c.diagnostic ? " (diagnostic)" : "") << ": "
            << c.value << '\n';
      }
      out << "elapsed_ms: " << fixed_ms(r.elapsed.count()) << '\n';
      return 0;
    }

    inline int cmd_omega_sg(Job const& job, Inputs const& in, std::ostream& out) {
      auto const start = std::chrono::steady_clock::now();
      auto const r     = omega_semigroup(job.spec, omega_options(in));
      std::chrono::duration<double, std::milli> const elapsed
          = std::chrono::steady_clock::now() - start;
      if (in.json) {
        json j;
        j["spec"]          = spec_to_json(job.spec);
        j["value"]         = integer_to_json(r.value);
        j["per_generator"] = vec_to_json(r.per_generator);
        j["elapsed_ms"]    = elapsed.count();
        out << j.dump() << '\n';
        return 0;
      }
      out << "semigroup: " << job.spec.describe() << '\n';
      out << "per-generator: " << join_integers(r.per_generator) << '\n';
      out << "omega: " << r.value << '\n';
      out << "elapsed_ms: " << fixed_ms(elapsed.count()) << '\n';
      return 0;
    }

    inline int cmd_minimals(Job const& job, Inputs const& in, std::ostream& out) {
      auto const gamma = resolve_expression(job.spec, require_element(job),
                                            SearchLimits{in.limit});
      EngineOptions eo;
      eo.limits.max_nodes = in.limit;
      auto const m        = ideal_preimage_minimals(job.spec, gamma, eo);
      if (in.json) {
        json j;
        j["expression"] = vec_to_json(gamma);
        j["minimals"]   = antichain_to_json(m);
        j["count"]      = m.size();
        out << j.dump() << '\n';
        return 0;
      }
      out << "The expression of the element is " << braces(gamma) << '\n';
      for (auto const& v : m) {
        out << v << '\n';
      }
      out << "count: " << m.size() << '\n';
      return 0;
    }

    inline int cmd_asymptotic_elem(Job const& job, Inputs const& in, std::ostream& out) {
      auto const r = asymptotic_omega_element(job.spec, require_element(job),
                                              SearchLimits{in.limit});
      if (in.json) {
        out << json{{"value", rational_to_json(r)}}.dump() << '\n';
      } else {
        out << "asymptotic omega: " << to_string(r) << '\n';
      }
      return 0;
    }

    inline int cmd_asymptotic_sg(Job const& job, Inputs const& in, std::ostream& out) {
      auto const r = asymptotic_omega_semigroup(job.spec);
      if (in.json) {
        out << json{{"value", rational_to_json(r)}}.dump() << '\n';
      } else {
        out << "asymptotic omega: " << to_string(r) << '\n';
      }
      return 0;
    }

    inline Element const& require_ambient(Job const& job) {
      auto const& e = require_element(job);
      if (e.is_expression()) {
        raise(errc::parse, "this command needs --value or --vector");
      }
      return e;
    }

    inline int cmd_membership(Job const& job, Inputs const& in, std::ostream& out) {
      auto const& e = require_ambient(job);
      auto const  w = membership(job.spec, e.vector(), SearchLimits{in.limit});
      if (in.json) {
        json j{{"member", w.has_value()}};
        if (w) {
          j["witness"] = vec_to_json(*w);
        }
        out << j.dump() << '\n';
        return 0;
      }
      out << "member: " << (w ? "yes" : "no") << '\n';
      if (w) {
        out << "The expression of the element is " << braces(*w) << '\n';
      }
      return 0;
    }

    inline int cmd_factorize(Job const& job, Inputs const& in, std::ostream& out) {
      auto const gamma = resolve_expression(job.spec, require_ambient(job),
                                            SearchLimits{in.limit});
      if (in.json) {
        out << json{{"expression", vec_to_json(gamma)}}.dump() << '\n';
      } else {
        out << "The expression of the element is " << braces(gamma) << '\n';
      }
      return 0;
    }

    inline int cmd_empirical(Job const& job, Inputs const& in, std::ostream& out) {
      auto const seq
          = empirical_ratio_sequence(job.spec, require_element(job), in.nmax, omega_options(in));
      std::optional<Rational> limit;
      if (is_quasi_archimedean(job.spec)) {
        limit = asymptotic_omega_element(job.spec, *job.element, SearchLimits{in.limit});
      }
      if (in.json) {
        json j;
        j["ratios"] = json::array();
        for (auto const& r : seq) {
          j["ratios"].push_back(rational_to_json(r));
        }
        if (limit) {
          j["asymptotic"] = rational_to_json(*limit);
        }
        out << j.dump() << '\n';
        return 0;
      }
      for (std::size_t n = 0; n < seq.size(); ++n) {
        out << (n + 1) << ' ' << to_string(seq[n]) << '\n';
      }
      if (limit) {
        out << "asymptotic omega: " << to_string(*limit) << '\n';
      }
      return 0;
    }

    ////////////////////////////////////////////////////////////////////////
    // Benchmark harness
    ////////////////////////////////////////////////////////////////////////

    struct BenchRow {
      std::string job_id;
      std::string mode;
      std::string command;
      std::string method;
      Integer     value;
      std::size_t minimals_count = 0;
      double      elapsed_ms     = 0;
      bool        agree          = true;
    };

    inline Method method_from_string(std::string const& s) {
      for (auto m : {Method::engine, Method::two_gen_closed, Method::oracle}) {
        if (s == to_string(m)) {
          return m;
        }
      }
      raise(errc::parse, "unknown method \"" + s + "\"");
    }

    // Rows of one element agree iff every method gave the same value and
    // the same minimal set.
    inline void mark_agreement(std::vector<BenchRow>& rows, std::vector<Antichain> const& sets) {
      bool agree = true;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        agree = agree && rows[i].value == rows[0].value && sets[i] == sets[0];
      }
      for (auto& r : rows) {
        r.agree = agree;
      }
    }

    // One row per method on one element.
    inline std::vector<BenchRow> bench_group(std::string const&         id,
                                             std::string const&         command,
                                             SemigroupSpec const&       spec,
                                             NVec const&                gamma,
                                             std::vector<Method> const& methods,
                                             EngineOptions const&       eo) {
      std::vector<BenchRow>  rows;
      std::vector<Antichain> sets;
      for (auto m : methods) {
        if (!method_applies(spec, m)) {
          raise(errc::unsupported_mode,
                std::string("method ") + to_string(m) + " does not apply to "
                    + spec.describe());
        }
        auto const start = std::chrono::steady_clock::now();
        auto       set   = minimals_by_method(spec, gamma, m, eo);
        auto       value = omega_by_method(spec, gamma, m, set);
        std::chrono::duration<double, std::milli> const elapsed
            = std::chrono::steady_clock::now() - start;
        rows.push_back({id, to_string(spec.mode()), command, to_string(m), value, set.size(),
                        elapsed.count(), true});
        sets.push_back(std::move(set));
      }
      mark_agreement(rows, sets);
      return rows;
    }

    inline std::vector<BenchRow> bench_job(json const& job, std::size_t index,
                                           EngineOptions const& eo) {
      std::string id = job.contains("id") ? (job.at("id").is_string()
                                                 ? job.at("id").get<std::string>()
                                                 : job.at("id").dump())
                                          : "job" + std::to_string(index + 1);
      auto const spec
          = normalize_spec(spec_from_json(omega::detail::field(job, "spec")), eo.limits);
      std::string command = job.value("command", std::string("omega-elem"));
      std::vector<Method> methods;
      if (job.contains("methods")) {
        auto const& ms = job.at("methods");
        if (ms.is_string() && ms.get<std::string>() == "auto") {
          for (auto m : {Method::engine, Method::two_gen_closed, Method::oracle}) {
            if (method_applies(spec, m)) {
              methods.push_back(m);
            }
          }
        } else if (ms.is_array()) {
          for (auto const& m : ms) {
            if (!m.is_string()) {
              omega::detail::bad_json("methods are strings");
            }
            methods.push_back(method_from_string(m.get<std::string>()));
          }
        } else {
          omega::detail::bad_json("\"methods\" is an array or \"auto\"");
        }
      } else {
        methods.push_back(Method::engine);
      }
      if (command == "omega-elem") {
        auto const elem  = element_from_json(omega::detail::field(job, "element"));
        auto const gamma = resolve_expression(spec, elem, eo.limits);
        return bench_group(id, command, spec, gamma, methods, eo);
      }
      if (command == "omega-sg") {
        std::vector<BenchRow> rows;
        for (std::size_t i = 0; i < spec.arity(); ++i) {
          auto g = bench_group(id + "/e" + std::to_string(i + 1), command, spec,
                               NVec::unit(spec.arity(), i), methods, eo);
          rows.insert(rows.end(), g.begin(), g.end());
        }
        return rows;
      }
      omega::detail::bad_json("bench commands are omega-elem and omega-sg, not \"" + command
                              + "\"");
    }

    inline int cmd_bench(Inputs const& in, std::ostream& out) {
      if (in.suite.empty()) {
        raise(errc::parse, "bench needs a suite file");
      }
      auto const  suite = read_json_file(in.suite);
      json const& jobs  = suite.is_array() ? suite : omega::detail::field(suite, "jobs");
      if (!jobs.is_array()) {
        omega::detail::bad_json("\"jobs\" must be an array");
      }
      EngineOptions eo;
      eo.limits.max_nodes = in.limit;
      std::vector<BenchRow> rows;
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        auto r = bench_job(jobs[i], i, eo);
        rows.insert(rows.end(), r.begin(), r.end());
      }
      bool const all_agree
          = std::all_of(rows.begin(), rows.end(), [](BenchRow const& r) { return r.agree; });
      if (in.json) {
        json j = json::array();
        for (auto const& r : rows) {
          j.push_back({{"job_id", r.job_id},
                       {"mode", r.mode},
                       {"command", r.command},
                       {"method", r.method},
                       {"value", integer_to_json(r.value)},
                       {"minimals_count", r.minimals_count},
                       {"elapsed_ms", r.elapsed_ms},
                       {"agree", r.agree}});
        }
        out << j.dump() << '\n';
      } else {
        out << "job_id,mode,command,method,value,minimals_count,elapsed_ms,agree\n";
        for (auto const& r : rows) {
          out << r.job_id << ',' << r.mode << ',' << r.command << ',' << r.method << ','
              << r.value << ',' << r.minimals_count << ',' << fixed_ms(r.elapsed_ms) << ','
              << (r.agree ? "true" : "false") << '\n';
        }
      }
      if (!all_agree) {
        raise(errc::invariant_violation, "methods disagree on at least one bench job");
      }
      return 0;
    }

    inline void add_spec_options(CLI::App* sub, Inputs& in) {
      sub->add_option("--numerical", in.numerical, "numerical semigroup generators a,b,...");
      sub->add_option("--affine", in.affine, "affine generators as columns a,b;c,d;...");
      sub->add_option("--twogen", in.twogen, "two-generated presentation alpha,beta");
      sub->add_option("--lattice", in.lattice, "lattice basis rows a,b;c,d;...");
      sub->add_option("--arity", in.arity, "number of generators of a lattice spec");
      sub->add_option("--spec", in.spec_file, "JSON spec file");
      sub->add_flag("--json", in.json, "machine-readable output");
      sub->add_option("--limit", in.limit, "frontier node cap")->check(CLI::PositiveNumber);
    }

    inline void add_element_options(CLI::App* sub, Inputs& in) {
      sub->add_option("--value", in.value, "numerical element");
      sub->add_option("--vector", in.vector, "affine element a,b,...");
      sub->add_option("--expression", in.expression, "exponent vector over the generators");
    }

  }  // namespace detail

  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"omega-primality of finitely generated monoids", "omega_cli"};
    app.require_subcommand(1);
    Inputs in;

    struct Command {
      char const* name;
      char const* help;
      bool        element;
    };
    Command const commands[] = {
        {"omega-elem", "omega of an element", true},
        {"omega-sg", "omega of the monoid and of each generator", false},
        {"minimals", "minimal elements of the preimage of the ideal", true},
        {"asymptotic-elem", "asymptotic omega of an element", true},
        {"asymptotic-sg", "asymptotic omega of the monoid", false},
        {"membership", "whether an ambient value lies in the monoid", true},
        {"factorize", "an expression of an ambient value", true},
        {"empirical", "omega(n x)/n for n = 1..nmax", true},
    };
    for (auto const& c : commands) {
      auto* sub = app.add_subcommand(c.name, c.help);
      detail::add_spec_options(sub, in);
      if (c.element) {
        detail::add_element_options(sub, in);
      }
      if (std::string(c.name) == "omega-elem" || std::string(c.name) == "omega-sg"
          || std::string(c.name) == "empirical") {
        sub->add_flag("--cross-check", in.cross_check, "verify against every other method");
        sub->add_flag("--force-engine", in.force_engine, "skip closed forms");
      }
      if (std::string(c.name) == "empirical") {
        sub->add_option("--nmax", in.nmax, "number of terms")->check(CLI::PositiveNumber);
      }
    }
    auto* bench = app.add_subcommand("bench", "run a benchmark suite and report CSV");
    bench->add_option("suite", in.suite, "suite JSON file")->required();
    bench->add_flag("--json", in.json, "JSON report instead of CSV");
    bench->add_option("--limit", in.limit, "frontier node cap")->check(CLI::PositiveNumber);

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : exit_status(errc::parse);
    }

    auto const name = app.get_subcommands().front()->get_name();
    try {
      if (name == "bench") {
        return detail::cmd_bench(in, out);
      }
      auto const raw = detail::job_from_inputs(in);
      detail::Job const job{normalize_spec(raw.spec, SearchLimits{in.limit}), raw.element};
      if (name == "omega-elem") {
        return detail::cmd_omega_elem(job, in, out);
      }
      if (name == "omega-sg") {
        return detail::cmd_omega_sg(job, in, out);
      }
      if (name == "minimals") {
        return detail::cmd_minimals(job, in, out);
      }
      if (name == "asymptotic-elem") {
        return detail::cmd_asymptotic_elem(job, in, out);
      }
      if (name == "asymptotic-sg") {
        return detail::cmd_asymptotic_sg(job, in, out);
      }
      if (name == "membership") {
        return detail::cmd_membership(job, in, out);
      }
      if (name == "factorize") {
        return detail::cmd_factorize(job, in, out);
      }
      return detail::cmd_empirical(job, in, out);
    } catch (omega_error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_status(e.code());
    } catch (json::exception const& e) {
      err << "error: ParseError: " << e.what() << '\n';
      return exit_status(errc::parse);
    } catch (std::bad_alloc const&) {
      err << "error: ResourceLimit: out of memory\n";
      return exit_status(errc::resource_limit);
    }
  }

}  // namespace omega::cli

#endif  // OMEGA_CLI_HPP
