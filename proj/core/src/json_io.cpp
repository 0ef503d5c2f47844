#include "pa/json_io.hpp"

#include <json.hpp>

#include "pa/schurweyl.hpp"

namespace pa {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw JsonError(std::string("invalid JSON: ") + e.what());
  }
}

template <class C> json element_json(const BasicElement<C> &e) {
  json terms = json::array();
  for (const auto &[p, c] : e.terms()) {
    json coeff;
    if constexpr (std::is_same_v<C, Scalar>) {
      coeff = c.str();
    } else {
      coeff = json::array();
      for (const auto &s : c.coeffs())
        coeff.push_back(s.str());
    }
    terms.push_back(json{{"partition", p.str()}, {"coeff", coeff}});
  }
  return json{{"level", e.level().str()},
              {"basis", basis_name(e.basis())},
              {"xi", CoeffTraits<C>::xi_str(e.xi())},
              {"terms", terms}};
}

std::variant<Element, SymElement> element_value(const json &j) {
  try {
    Level level = Level::parse(j.at("level").get<std::string>());
    Basis basis = parse_basis(j.at("basis").get<std::string>());
    std::string xi = j.at("xi").get<std::string>();
    const json &terms = j.at("terms");
    if (xi == "symbolic") {
      SymElement e(level, basis, Symbolic{});
      for (const auto &t : terms) {
        std::vector<Scalar> c;
        for (const auto &s : t.at("coeff"))
          c.push_back(Scalar::parse(s.get<std::string>()));
        e.add(SetPartition::parse(t.at("partition").get<std::string>(), level.param()),
              SymScalar(std::move(c)));
      }
      return e;
    }
    Element e(level, basis, Scalar::parse(xi));
    for (const auto &t : terms)
      e.add(SetPartition::parse(t.at("partition").get<std::string>(), level.param()),
            Scalar::parse(t.at("coeff").get<std::string>()));
    return e;
  } catch (const json::exception &e) {
    throw JsonError(std::string("malformed element JSON: ") + e.what());
  }
}

json matrix_json(const SparseMatrix &m) {
  json entries = json::array();
  for (const auto &[key, v] : m.entries())
    entries.push_back(json{{"row", m.decode(key.first)}, {"col", m.decode(key.second)}, {"coeff", v.str()}});
  return json{{"n", m.n()}, {"k", m.k()}, {"entries", entries}};
}

json report_json(const Report &r) {
  json checks = json::array();
  for (const auto &c : r.checks) {
    json item{{"check", c.check}, {"pass", c.pass}};
    if (c.witness)
      item["witness"] = parse_json(*c.witness);
    checks.push_back(item);
  }
  if (r.rounds.empty() && !r.dim && !r.kernel_dim)
    return checks;
  json out{{"rounds", r.rounds}, {"pass", r.pass()}, {"checks", checks}};
  if (r.dim)
    out["dim"] = *r.dim;
  if (r.kernel_dim)
    out["kernel_dim"] = *r.kernel_dim;
  return out;
}

} // namespace

std::string element_to_json(const Element &e) { return element_json(e).dump(); }
std::string element_to_json(const SymElement &e) { return element_json(e).dump(); }

std::variant<Element, SymElement> element_from_json(std::string_view text) {
  return element_value(parse_json(text));
}

Element numeric_element_from_json(std::string_view text) {
  auto v = element_from_json(text);
  if (auto *e = std::get_if<Element>(&v))
    return *e;
  throw JsonError("expected a numeric element");
}

std::string matrix_to_json(const SparseMatrix &m) { return matrix_json(m).dump(); }

SparseMatrix matrix_from_json(std::string_view text) {
  json j = parse_json(text);
  try {
    SparseMatrix m(j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto &e : j.at("entries"))
      m.add(m.encode(e.at("row").get<Tuple>()), m.encode(e.at("col").get<Tuple>()),
            Scalar::parse(e.at("coeff").get<std::string>()));
    return m;
  } catch (const json::exception &e) {
    throw JsonError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string report_to_json(const Report &r) { return report_json(r).dump(); }

Report report_from_json(std::string_view text) {
  json j = parse_json(text);
  Report r;
  try {
    const json *checks = &j;
    if (j.is_object()) {
      r.rounds = j.at("rounds").get<std::vector<long>>();
      if (j.contains("dim"))
        r.dim = j.at("dim").get<long>();
      if (j.contains("kernel_dim"))
        r.kernel_dim = j.at("kernel_dim").get<long>();
      checks = &j.at("checks");
    }
    for (const auto &c : *checks) {
      CheckResult cr{c.at("check").get<std::string>(), c.at("pass").get<bool>(), std::nullopt};
      if (c.contains("witness"))
        cr.witness = c.at("witness").dump();
      r.checks.push_back(std::move(cr));
    }
  } catch (const json::exception &e) {
    throw JsonError(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

std::string canonical_json(std::string_view text) { return parse_json(text).dump(); }

} // namespace pa
