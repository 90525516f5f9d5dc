#ifndef OMEGA_JSON_IO_HPP
#define OMEGA_JSON_IO_HPP

// JSON forms of specs, elements and reports.
//
//   spec:    {"mode": "numerical", "generators": [..]}
//            {"mode": "affine", "columns": [[..], ..]}
//            {"mode": "twogen", "alpha": a, "beta": b}
//            {"mode": "lattice", "basis": [[..], ..], "arity": p}
//   element: {"value": n} | {"vector": [..]} | {"expression": [..]}
//
// Integers are JSON integers, or decimal strings when they do not fit in 64
// bits.  Rationals are strings "n/d" (or "n").

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega.hpp"

namespace omega {

  using json = nlohmann::json;

  namespace detail {
    [[noreturn]] inline void bad_json(std::string const& what) {
      raise(errc::parse, "malformed JSON: " + what);
    }

    inline json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad_json(std::string("missing \"") + key + "\"");
      }
      return j.at(key);
    }
  }  // namespace detail

  inline Integer integer_from_json(json const& j) {
    if (j.is_number_unsigned()) {
      return Integer(j.get<std::uint64_t>());
    }
    if (j.is_number_integer()) {
      return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      auto const& s = j.get_ref<std::string const&>();
      auto const  digits = s.substr(!s.empty() && s[0] == '-' ? 1 : 0);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        detail::bad_json("\"" + s + "\" is not an integer");
      }
      return Integer(s);
    }
    detail::bad_json(j.dump() + " is not an integer");
  }

  inline json integer_to_json(Integer const& x) {
    if (x >= std::numeric_limits<std::int64_t>::min()
        && x <= std::numeric_limits<std::int64_t>::max()) {
      return json(static_cast<std::int64_t>(x));
    }
    return json(x.str());
  }

  inline std::vector<Integer> integers_from_json(json const& j) {
    if (!j.is_array()) {
      detail::bad_json(j.dump() + " is not an array");
    }
    std::vector<Integer> out;
    for (auto const& x : j) {
      out.push_back(integer_from_json(x));
    }
    return out;
  }

  inline NVec nvec_from_json(json const& j) {
    auto xs = integers_from_json(j);
    for (auto const& x : xs) {
      if (x < 0) {
        detail::bad_json(j.dump() + " has a negative entry");
      }
    }
    return NVec(std::move(xs));
  }

  template <typename V>
  json vec_to_json(V const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(integer_to_json(x));
    }
    return out;
  }

  inline json rational_to_json(Rational const& r) {
    return json(to_string(r));
  }

  inline SemigroupSpec spec_from_json(json const& j) {
    auto const& m = detail::field(j, "mode");
    if (!m.is_string()) {
      detail::bad_json("\"mode\" must be a string");
    }
    auto const mode = m.get<std::string>();
    if (mode == "numerical") {
      return SemigroupSpec::numerical(integers_from_json(detail::field(j, "generators")));
    }
    if (mode == "affine") {
      auto const& cols = detail::field(j, "columns");
      if (!cols.is_array()) {
        detail::bad_json("\"columns\" must be an array");
      }
      std::vector<NVec> columns;
      for (auto const& c : cols) {
        columns.push_back(nvec_from_json(c));
      }
      return SemigroupSpec::affine(std::move(columns));
    }
    if (mode == "twogen") {
      return SemigroupSpec::two_gen(integer_from_json(detail::field(j, "alpha")),
                                    integer_from_json(detail::field(j, "beta")));
    }
    if (mode == "lattice") {
      auto const& rows = detail::field(j, "basis");
      if (!rows.is_array()) {
        detail::bad_json("\"basis\" must be an array");
      }
      std::vector<ZVec> basis;
      for (auto const& r : rows) {
        basis.emplace_back(integers_from_json(r));
      }
      std::size_t arity = 0;
      if (j.contains("arity")) {
        auto const a = integer_from_json(j.at("arity"));
        if (a < 1 || a > 4096) {
          detail::bad_json("\"arity\" out of range");
        }
        arity = static_cast<std::size_t>(a);
      } else if (!basis.empty()) {
        arity = basis.front().size();
      } else {
        detail::bad_json("an empty lattice basis needs \"arity\"");
      }
      return SemigroupSpec::lattice(arity, std::move(basis));
    }
    detail::bad_json("unknown mode \"" + mode + "\"");
  }

  inline json spec_to_json(SemigroupSpec const& spec) {
    json j;
    j["mode"] = to_string(spec.mode());
    switch (spec.mode()) {
      case Mode::numerical: j["generators"] = vec_to_json(spec.as_numerical().generators); break;
      case Mode::affine: {
        j["columns"] = json::array();
        for (auto const& c : spec.as_affine().columns) {
          j["columns"].push_back(vec_to_json(c));
        }
        break;
      }
      case Mode::two_gen:
        j["alpha"] = integer_to_json(spec.as_two_gen().alpha);
        j["beta"]  = integer_to_json(spec.as_two_gen().beta);
        break;
      case Mode::lattice: {
        j["arity"] = spec.as_lattice().arity;
        j["basis"] = json::array();
        for (auto const& r : spec.as_lattice().basis) {
          j["basis"].push_back(vec_to_json(r));
        }
        break;
      }
    }
    return j;
  }

  inline Element element_from_json(json const& j) {
    if (!j.is_object() || j.size() != 1) {
      detail::bad_json("an element has exactly one of \"value\", \"vector\", \"expression\"");
    }
    if (j.contains("value")) {
      auto v = integer_from_json(j.at("value"));
      if (v < 0) {
        detail::bad_json("negative value");
      }
      return Element::value(std::move(v));
    }
    if (j.contains("vector")) {
      return Element::ambient(nvec_from_json(j.at("vector")));
    }
    if (j.contains("expression")) {
      return Element::expression(nvec_from_json(j.at("expression")));
    }
    detail::bad_json("unknown element kind " + j.dump());
  }

  inline json element_to_json(Element const& e) {
    if (e.is_expression()) {
      return {{"expression", vec_to_json(e.vector())}};
    }
    if (e.vector().size() == 1) {
      return {{"value", integer_to_json(e.vector()[0])}};
    }
    return {{"vector", vec_to_json(e.vector())}};
  }

  inline json antichain_to_json(Antichain const& a) {
    json out = json::array();
    for (auto const& v : a) {
      out.push_back(vec_to_json(v));
    }
    return out;
  }

  inline json report_to_json(OmegaReport const& r) {
    json j;
    j["value"]          = integer_to_json(r.value);
    j["witnesses"]      = antichain_to_json(r.witnesses);
    j["minimals_count"] = r.witnesses.size();
    j["method"]         = to_string(r.method);
    j["elapsed_ms"]     = r.elapsed.count();
    j["expression"]     = vec_to_json(r.expression);
    if (!r.cross_checks.empty()) {
      j["cross_checks"] = json::array();
      for (auto const& c : r.cross_checks) {
        j["cross_checks"].push_back({{"label", c.label},
                                     {"value", integer_to_json(c.value)},
                                     {"diagnostic", c.diagnostic}});
      }
    }
    return j;
  }

}  // namespace omega

#endif  // OMEGA_JSON_IO_HPP
