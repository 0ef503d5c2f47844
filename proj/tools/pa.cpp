#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pa/ideal.hpp"
#include "pa/idempotent.hpp"
#include "pa/json_io.hpp"
#include "pa/schurweyl.hpp"
#include "suites.hpp"

using json = nlohmann::ordered_json;
using namespace pa;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Global {
  bool json = false;
  bool meta = false;
  bool override_size_guard = false;
};

Global g;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prints JSON text, wrapped with run metadata under --meta.
void emit_json(const std::string &text) {
  if (!g.meta) {
    std::cout << text << "\n";
    return;
  }
  json out;
  out["meta"] = {{"tool", "pa"},
                 {"version", "0.1.0"},
                 {"timestamp", static_cast<long long>(std::time(nullptr))}};
  out["result"] = json::parse(text);
  std::cout << out.dump() << "\n";
}

int emit_report(const Report &rep) {
  if (g.json) {
    emit_json(report_to_json(rep));
  } else {
    for (const auto &c : rep.checks)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.check << "\n";
    if (!rep.rounds.empty()) {
      std::cout << "rounds:";
      for (long r : rep.rounds)
        std::cout << " " << r;
      std::cout << "\n";
    }
    if (rep.dim)
      std::cout << "dim: " << *rep.dim << "\n";
    if (rep.kernel_dim)
      std::cout << "kernel_dim: " << *rep.kernel_dim << "\n";
    std::cout << (rep.pass() ? "pass" : "fail") << " (" << rep.checks.size() << " checks, "
              << rep.failures().size() << " failed)\n";
  }
  return rep.pass() ? 0 : 1;
}

template <class E> void emit_element(const E &e) {
  if (g.json)
    emit_json(element_to_json(e));
  else
    std::cout << e.str() << "\n";
}

void emit_matrix(const SparseMatrix &m) {
  if (g.json) {
    emit_json(matrix_to_json(m));
    return;
  }
  if (m.dim() <= 64) {
    std::vector<std::vector<std::string>> cells(m.dim(), std::vector<std::string>(m.dim(), "0"));
    std::size_t width = 1;
    for (const auto &[key, v] : m.entries()) {
      cells[key.first][key.second] = v.str();
      width = std::max(width, cells[key.first][key.second].size());
    }
    for (const auto &row : cells) {
      for (std::size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? " " : "") << std::string(width - row[j].size(), ' ') << row[j];
      std::cout << "\n";
    }
    return;
  }
  auto tuple = [&](std::uint64_t code) {
    std::string s = "(";
    auto t = m.decode(code);
    for (std::size_t i = 0; i < t.size(); ++i)
      s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
  };
  for (const auto &[key, v] : m.entries())
    std::cout << tuple(key.first) << " <- " << tuple(key.second) << " : " << v.str() << "\n";
}

Level level_of(const std::string &text) { return Level::parse(text); }

bool is_symbolic(const std::string &xi) { return xi == "symbolic" || xi == "xi"; }

// Element given as a partition string or a JSON file.
std::variant<Element, SymElement> load_element(const std::string &partition,
                                               const std::string &file, const Level &level,
                                               Basis basis, const std::string &xi) {
  if (!file.empty())
    return element_from_json(read_file(file));
  if (partition.empty())
    throw UsageError("an element is required (partition string or --*-json file)");
  SetPartition p = SetPartition::parse(partition, level.param());
  if (is_symbolic(xi))
    return SymElement::single(level, basis, Symbolic{}, p);
  return Element::single(level, basis, Scalar::parse(xi), p);
}

Element numeric(const std::variant<Element, SymElement> &v) {
  if (auto *e = std::get_if<Element>(&v))
    return *e;
  throw UsageError("a numeric xi is required here");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computation in partition algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--meta", g.meta, "add run metadata to JSON output");
  app.add_flag("--override-size-guard", g.override_size_guard,
               "allow ideal closures above dimension 5000");

  std::function<int()> action;

  // enumerate
  std::string level_text = "2";
  auto *cmd_enum = app.add_subcommand("enumerate", "list the basis partitions of a level");
  cmd_enum->add_option("--level", level_text, "level, e.g. 3 or 5/2")->required();
  cmd_enum->callback([&] {
    action = [&] {
      auto parts = enumerate(level_of(level_text));
      if (g.json) {
        json out;
        out["level"] = level_of(level_text).str();
        out["count"] = parts.size();
        out["partitions"] = json::array();
        for (const auto &p : parts)
          out["partitions"].push_back(p.str());
        emit_json(out.dump());
      } else {
        for (const auto &p : parts)
          std::cout << p.str() << "\n";
      }
      return 0;
    };
  });

  // mul
  std::string basis_text = "diagram", xi_text = "symbolic", a_text, b_text, a_file, b_file;
  auto *cmd_mul = app.add_subcommand("mul", "multiply two elements");
  cmd_mul->add_option("--basis", basis_text, "diagram | orbit");
  cmd_mul->add_option("--level", level_text, "level")->required();
  cmd_mul->add_option("--xi", xi_text, "numeric value or 'symbolic'");
  cmd_mul->add_option("--a", a_text, "left partition");
  cmd_mul->add_option("--b", b_text, "right partition");
  cmd_mul->add_option("--a-json", a_file, "left element JSON file");
  cmd_mul->add_option("--b-json", b_file, "right element JSON file");
  cmd_mul->callback([&] {
    action = [&] {
      Level level = level_of(level_text);
      Basis basis = parse_basis(basis_text);
      auto a = load_element(a_text, a_file, level, basis, xi_text);
      auto b = load_element(b_text, b_file, level, basis, xi_text);
      std::visit(
          [](const auto &x, const auto &y) {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Y>)
              emit_element(mul(x, y));
            else
              throw UsageError("cannot multiply numeric and symbolic elements");
          },
          a, b);
      return 0;
    };
  });

  // convert
  std::string to_text = "orbit", element_file;
  auto *cmd_conv = app.add_subcommand("convert", "change basis");
  cmd_conv->add_option("--to", to_text, "target basis: diagram | orbit")->required();
  cmd_conv->add_option("--level", level_text, "level");
  cmd_conv->add_option("--xi", xi_text, "numeric value or 'symbolic'");
  cmd_conv->add_option("--partition", a_text, "single basis element in the other basis");
  cmd_conv->add_option("--element", element_file, "element JSON file");
  cmd_conv->callback([&] {
    action = [&] {
      Basis to = parse_basis(to_text);
      Basis from = to == Basis::Orbit ? Basis::Diagram : Basis::Orbit;
      auto e = load_element(a_text, element_file, level_of(level_text), from, xi_text);
      std::visit([&](const auto &x) { emit_element(to_basis(x, to)); }, e);
      return 0;
    };
  });

  // phi
  int n = 0;
  auto *cmd_phi = app.add_subcommand("phi", "matrix of an element on tensor space");
  cmd_phi->add_option("--level", level_text, "level");
  cmd_phi->add_option("--n", n, "n")->required();
  cmd_phi->add_option("--basis", basis_text, "diagram | orbit");
  cmd_phi->add_option("--partition", a_text, "basis element");
  cmd_phi->add_option("--element", element_file, "element JSON file");
  cmd_phi->callback([&] {
    action = [&] {
      Element e = numeric(load_element(a_text, element_file, level_of(level_text),
                                       parse_basis(basis_text), std::to_string(n)));
      emit_matrix(phi(e, n));
      return 0;
    };
  });

  // kernel
  bool with_rank = false;
  auto *cmd_kernel = app.add_subcommand("kernel", "kernel basis of Phi");
  cmd_kernel->add_option("--level", level_text, "level")->required();
  cmd_kernel->add_option("--n", n, "n")->required();
  cmd_kernel->add_flag("--rank", with_rank, "also compute the rank of the image");
  cmd_kernel->callback([&] {
    action = [&] {
      Level level = level_of(level_text);
      auto basis = kernel_basis(level, n);
      long cd = centralizer_dim(level, n);
      std::optional<long> rank;
      if (with_rank)
        rank = image_rank(level, n);
      if (g.json) {
        json out;
        out["level"] = level.str();
        out["n"] = n;
        out["kernel_dim"] = basis.size();
        out["centralizer_dim"] = cd;
        if (rank)
          out["image_rank"] = *rank;
        out["basis"] = json::array();
        for (const auto &e : basis)
          out["basis"].push_back(e.terms().begin()->first.str());
        emit_json(out.dump());
      } else {
        std::cout << "kernel_dim: " << basis.size() << "\ncentralizer_dim: " << cd << "\n";
        if (rank)
          std::cout << "image_rank: " << *rank << "\n";
        for (const auto &e : basis)
          std::cout << "x_" << e.terms().begin()->first.str() << "\n";
      }
      return 0;
    };
  });

  // idempotent
  int k = 0;
  bool half = false, diagram_out = false;
  auto *cmd_idem = app.add_subcommand("idempotent", "essential idempotents and constants");
  cmd_idem->require_subcommand(1);
  auto add_kn = [&](CLI::App *c) {
    c->add_option("--k", k, "k")->required();
    c->add_option("--n", n, "n")->required();
  };
  auto *idem_e = cmd_idem->add_subcommand("e", "e_{k,n} in the orbit basis");
  add_kn(idem_e);
  idem_e->add_flag("--half", half, "e_{k+1/2,n}");
  idem_e->add_flag("--diagram", diagram_out, "print in the diagram basis");
  idem_e->callback([&] {
    action = [&] {
      Element e = essential_idempotent(half ? Level::half(k) : Level::integer(k), n);
      emit_element(diagram_out ? to_diagram(e) : e);
      return 0;
    };
  });
  auto *idem_c = cmd_idem->add_subcommand("c", "the constant c_{k,n}");
  add_kn(idem_c);
  idem_c->callback([&] {
    action = [&] {
      Scalar c = c_const(k, n);
      if (g.json)
        emit_json(json({{"k", k}, {"n", n}, {"c", c.str()}}).dump());
      else
        std::cout << c.str() << "\n";
      return 0;
    };
  });
  auto *idem_hook = cmd_idem->add_subcommand("hook", "dimension of the S_n module [n-k,k]");
  add_kn(idem_hook);
  idem_hook->callback([&] {
    action = [&] {
      Scalar f = hook_dim_two_row(n, k);
      if (g.json)
        emit_json(json({{"n", n}, {"k", k}, {"dim", f.str()}}).dump());
      else
        std::cout << f.str() << "\n";
      return 0;
    };
  });

  // xi
  auto *cmd_xi = app.add_subcommand("xi", "the central idempotent Xi_{k,n}");
  add_kn(cmd_xi);
  cmd_xi->add_flag("--half", half, "Xi_{k+1/2,n}");
  cmd_xi->add_flag("--diagram", diagram_out, "print in the diagram basis");
  cmd_xi->callback([&] {
    action = [&] {
      Element e = half ? xi_half(k, n) : xi(k, n);
      emit_element(diagram_out ? to_diagram(e) : e);
      return 0;
    };
  });

  // ideal
  int ell = 0;
  auto *cmd_ideal = app.add_subcommand("ideal", "two-sided ideal closures");
  cmd_ideal->require_subcommand(1);
  bool stop_at_kernel = false;
  cmd_ideal->add_flag("--stop-at-kernel", stop_at_kernel,
                      "stop once the closure reaches dim ker Phi");
  auto closure_options = [&] {
    ClosureOptions co;
    co.override_size_guard = g.override_size_guard;
    co.stop_at_kernel_dim = stop_at_kernel;
    if (!g.json)
      co.on_round = [](long d) { std::cerr << "round: dim " << d << "\n"; };
    return co;
  };
  auto *ideal_kernel = cmd_ideal->add_subcommand("kernel", "closure of e_{k,n} versus ker Phi");
  ideal_kernel->add_option("--level", level_text, "level")->required();
  ideal_kernel->add_option("--n", n, "n")->required();
  ideal_kernel->callback([&] {
    action = [&] { return emit_report(verify_kernel_generation(level_of(level_text), n, closure_options())); };
  });
  auto *ideal_enn = cmd_ideal->add_subcommand("enn", "closure of e_{n,n} with k-n identity strands");
  ideal_enn->add_option("--level", level_text, "level")->required();
  ideal_enn->add_option("--n", n, "n")->required();
  ideal_enn->callback([&] {
    action = [&] { return emit_report(verify_enn_generation(level_of(level_text), n, closure_options())); };
  });
  auto *ideal_prop = cmd_ideal->add_subcommand("propagating", "span of diagrams with pn <= l");
  ideal_prop->add_option("--level", level_text, "level")->required();
  ideal_prop->add_option("--ell", ell, "l")->required();
  ideal_prop->add_option("--xi", xi_text, "xi")->required();
  ideal_prop->callback([&] {
    action = [&] { return emit_report(verify_propagating_ideal(level_of(level_text), ell, Scalar::parse(xi_text))); };
  });

  // verify
  std::string profile = "quick";
  int trials = 6;
  auto *cmd_verify = app.add_subcommand("verify", "verification suites");
  cmd_verify->require_subcommand(1);
  auto *v_pres = cmd_verify->add_subcommand("presentation", "generator relations");
  v_pres->add_option("--k", k, "k")->required();
  v_pres->add_option("--xi", xi_text, "xi")->required();
  v_pres->callback([&] { action = [&] { return emit_report(check_presentation(k, Scalar::parse(xi_text))); }; });
  auto *v_steps = cmd_verify->add_subcommand("steps", "basic properties of Xi_{k,n}");
  add_kn(v_steps);
  v_steps->callback([&] { action = [&] { return emit_report(verify_steps(k, n)); }; });
  auto *v_xief = cmd_verify->add_subcommand("xief", "Xi at n = 2k-1 and 2k");
  v_xief->add_option("--k", k, "k")->required();
  v_xief->callback([&] { action = [&] { return emit_report(verify_xief(k)); }; });
  auto *v_square = cmd_verify->add_subcommand("square", "square of e_{n,n} with identity strands");
  v_square->add_option("--n", n, "n")->required();
  v_square->add_option("--ell", ell, "number of strands")->required();
  v_square->callback([&] { action = [&] { return emit_report(verify_square_identity(n, ell)); }; });
  auto *v_central = cmd_verify->add_subcommand("noncentrality", "centrality of e_{k,n}");
  add_kn(v_central);
  v_central->callback([&] { action = [&] { return emit_report(verify_noncentrality(k, n)); }; });
  auto *v_comm = cmd_verify->add_subcommand("commutant", "image of Phi commutes with S_n");
  v_comm->add_option("--level", level_text, "level")->required();
  v_comm->add_option("--n", n, "n")->required();
  v_comm->add_option("--trials", trials, "permutations to test");
  v_comm->callback([&] { action = [&] { return emit_report(commutant_check(level_of(level_text), n, trials)); }; });
  auto *v_all = cmd_verify->add_subcommand("all", "aggregate suites");
  v_all->add_option("--profile", profile, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  v_all->callback([&] {
    action = [&] {
      suites::Options o;
      o.large_closure = g.override_size_guard;
      return emit_report(profile == "quick" ? suites::quick() : suites::full(o));
    };
  });

  // character
  int j = 0;
  std::string cycle_text;
  auto *cmd_char = app.add_subcommand("character", "two-row symmetric group characters");
  cmd_char->add_option("--n", n, "n")->required();
  cmd_char->add_option("--j", j, "shape [n-j,j]")->required();
  cmd_char->add_option("--cycle-type", cycle_text, "e.g. 2,1,1 (default: identity)");
  cmd_char->callback([&] {
    action = [&] {
      CycleType ct;
      if (cycle_text.empty()) {
        ct.assign(static_cast<std::size_t>(n), 1);
      } else {
        std::stringstream ss(cycle_text);
        for (std::string part; std::getline(ss, part, ',');)
          ct.push_back(std::stoi(part));
      }
      int total = 0;
      for (int c : ct)
        total += c;
      if (total != n)
        throw UsageError("cycle type must sum to n");
      long chi = two_row_character(ct, n, j);
      if (g.json)
        emit_json(json({{"n", n}, {"j", j}, {"cycle_type", ct}, {"value", chi}}).dump());
      else
        std::cout << chi << "\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "pa: " << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception &e) {
    std::cerr << "pa: " << e.what() << "\n";
    return 2;
  }
}
