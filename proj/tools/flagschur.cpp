// flagschur: command-line access to S_q(n,r), G(n,r) and H_0(n).
//
// Exit codes: 0 ok / all checks pass, 1 verification failure, 2 parse or
// usage error, 3 semantic mismatch (sizes or types that do not fit).

#include "flagschur/hecke.hpp"
#include "flagschur/io.hpp"
#include "flagschur/qschur.hpp"
#include "flagschur/serialize.hpp"
#include "flagschur/suites.hpp"
#include "flagschur/zeroschur.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

using namespace flagschur;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kParse = 2;
constexpr int kMismatch = 3;

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool looks_like_json(const std::string& s) {
  const auto k = s.find_first_not_of(" \t\n");
  return k != std::string::npos && (s[k] == '{' || s[k] == '[');
}

nlohmann::json parse_json(const std::string& s) {
  try {
    return nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <class El>
El operand(const std::string& text, El (*from_json)(const nlohmann::json&)) {
  if (looks_like_json(text)) return from_json(parse_json(text));
  const OrbitMatrix a = parse_matrix(text);
  return El::basis(a);
}

void check_size(int n, int r, std::optional<int> want_n, std::optional<int> want_r, const std::string& what) {
  if (want_n && *want_n != n) throw Mismatch(what + " has n=" + std::to_string(n) + ", expected " + std::to_string(*want_n));
  if (want_r && *want_r != r) throw Mismatch(what + " has r=" + std::to_string(r) + ", expected " + std::to_string(*want_r));
}

void guard(int n, int r, bool allow) {
  if ((n > 4 || r > 4) && !allow) {
    throw CLI::ValidationError("--n/--r", "n > 4 or r > 4 requires --allow-large");
  }
}

bool is_matrix_text(const std::string& s) { return s.find(',') != std::string::npos && s.find('(') == std::string::npos; }

Permutation perm_operand(const std::string& text, int n) {
  if (is_matrix_text(text)) {
    const OrbitMatrix a = parse_matrix(text);
    if (!a.is_permutation()) throw Mismatch("'" + text + "' is not a permutation matrix");
    return Permutation::from_matrix(a);
  }
  return Permutation::parse(text, n);
}

void print_report(const Report& rep, bool verbose) {
  for (const auto& c : rep.checks) {
    if (!c.passed) {
      std::cout << "FAIL " << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    } else if (verbose) {
      std::cout << "ok   " << c.name << "\n";
    }
  }
  std::cout << rep.suite << ": " << rep.checks.size() << " checks, " << rep.failures() << " failures\n";
}

Report run_suite(const std::string& suite, int n, int r) {
  Report all;
  all.suite = suite + " (" + std::to_string(n) + "," + std::to_string(r) + ")";
  auto add = [&](const Report& rep) {
    for (auto c : rep.checks) {
      c.name = rep.suite + ": " + c.name;
      all.checks.push_back(std::move(c));
    }
  };
  if (suite == "q-relations") {
    add(verify_relations_q(n, r));
  } else if (suite == "zero-relations") {
    add(verify_relations_0(n, r));
    add(check_star_associativity(n, r));
    add(check_matrix_block(n, r));
    if (n == 2) add(preprojective_check(r));
  } else if (suite == "hecke") {
    add(check_hecke(n));
  } else {
    reset_integrity_stats();
    if (n == 2 && r == 2) add(check_example_product());
    add(check_closed_forms(n, r));
    add(check_hall_numbers(n, r));
    std::vector<OrbitMatrix> uppers;
    for (const auto& a : orbit_matrices(n, r))
      if (a.is_upper()) uppers.push_back(a);
    add(check_chain_products(uppers));
    add(check_basis_B(n, r));
    add(check_open_orbit(n, r));
    add(check_psi(n, r));
    const auto st = integrity_stats();
    all.add("held-out prime checks", st.held_out_checks == st.interpolations,
            std::to_string(st.held_out_checks) + " of " + std::to_string(st.interpolations));
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Schur, 0-Schur and 0-Hecke algebra computations"};
  app.require_subcommand(1);

  std::optional<int> opt_n;
  std::optional<int> opt_r;

  std::string algebra = "qschur";
  std::string lhs;
  std::string rhs;
  std::string out_format;
  auto* mult = app.add_subcommand("mult", "Multiply two basis elements or elements");
  mult->add_option("--algebra", algebra, "qschur, zero or hecke")->check(CLI::IsMember({"qschur", "zero", "hecke"}));
  mult->add_option("--n", opt_n);
  mult->add_option("--r", opt_r);
  mult->add_option("--format", out_format, "hecke output: cycle (default) or matrix")
      ->check(CLI::IsMember({"cycle", "matrix"}));
  mult->add_option("A", lhs)->required();
  mult->add_option("B", rhs)->required();

  std::string word_format = "json";
  std::string dec_matrix;
  auto* decompose = app.add_subcommand("decompose", "Generator word of an orbit in G(n,r)");
  decompose->add_option("--format", word_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  decompose->add_option("A", dec_matrix)->required();

  std::string d_text;
  bool allow = false;
  std::string e_text;
  auto* deg = app.add_subcommand("deg-order", "Hasse diagram of the degeneration order on a block, in DOT");
  deg->add_option("--n", opt_n);
  deg->add_option("--r", opt_r);
  deg->add_option("--d", d_text)->required();
  deg->add_option("--e", e_text)->required();
  deg->add_flag("--allow-large", allow, "Permit n > 4 or r > 4");

  auto* open = app.add_subcommand("open-orbit", "Open orbit of type (d,e)");
  open->add_option("d", d_text)->required();
  open->add_option("e", e_text)->required();
  auto* closed = app.add_subcommand("closed-orbit", "Closed orbit of type (d,e)");
  closed->add_option("d", d_text)->required();
  closed->add_option("e", e_text)->required();

  auto* idem = app.add_subcommand("idempotents", "Nested open-orbit idempotents of k_d, one per composition of n");
  idem->add_option("--d", d_text)->required();

  std::string suite;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"q-relations", "zero-relations", "hecke", "oracle"}));
  verify->add_option("--n", opt_n)->required();
  verify->add_option("--r", opt_r);
  verify->add_flag("--allow-large", allow, "Permit n > 4 or r > 4");
  verify->add_flag("-v,--verbose", verbose, "List passing checks too");

  std::string sigma_text;
  auto* tsig = app.add_subcommand("hecke-tsigma", "Evaluate the staged product t^sigma in H_0(n)");
  tsig->add_option("--n", opt_n);
  tsig->add_option("sigma", sigma_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*mult) {
      if (algebra == "qschur") {
        const Element x = operand<Element>(lhs, element_from_json);
        const Element y = operand<Element>(rhs, element_from_json);
        check_size(x.n(), x.r(), opt_n, opt_r, "A");
        check_size(y.n(), y.r(), x.n(), x.r(), "B");
        std::cout << element_to_json(multiply(x, y)).dump() << "\n";
      } else if (algebra == "zero") {
        if (looks_like_json(lhs) || looks_like_json(rhs)) {
          const IntElement x = operand<IntElement>(lhs, int_element_from_json);
          const IntElement y = operand<IntElement>(rhs, int_element_from_json);
          check_size(x.n(), x.r(), opt_n, opt_r, "A");
          check_size(y.n(), y.r(), x.n(), x.r(), "B");
          std::cout << int_element_to_json(star(x, y)).dump() << "\n";
        } else {
          const OrbitMatrix a = parse_matrix(lhs);
          const OrbitMatrix b = parse_matrix(rhs);
          check_size(a.n(), a.r(), opt_n, opt_r, "A");
          check_size(b.n(), b.r(), a.n(), a.r(), "B");
          const auto s = star(a, b);
          std::cout << (s ? matrix_text(*s) : "0") << "\n";
        }
      } else {
        // Without --n both operands are read at the larger inferred size.
        const int n = opt_n.value_or(std::max(perm_operand(lhs, 0).n(), perm_operand(rhs, 0).n()));
        const Permutation x = perm_operand(lhs, n);
        const Permutation y = perm_operand(rhs, n);
        if (x.n() != y.n()) throw Mismatch("permutations of different sizes");
        check_size(x.n(), x.n(), opt_n, opt_r, "A");
        const Permutation p = hecke_mult(x, y);
        std::cout << (out_format == "matrix" ? matrix_text(p.to_matrix()) : p.to_cycle_string()) << "\n";
      }
    } else if (*decompose) {
      const GeneratorWord w = word_decompose(parse_matrix(dec_matrix));
      std::cout << (word_format == "text" ? to_string(w) : word_to_json(w).dump()) << "\n";
    } else if (*deg) {
      const Composition d = parse_composition(d_text);
      const Composition e = parse_composition(e_text);
      if (d.n() != e.n() || d.r() != e.r()) throw Mismatch("d and e must have the same n and r");
      check_size(d.n(), d.r(), opt_n, opt_r, "d");
      guard(d.n(), d.r(), allow);
      std::cout << hasse_dot(d, e);
    } else if (*open || *closed) {
      const Composition d = parse_composition(d_text);
      const Composition e = parse_composition(e_text);
      if (d.n() != e.n() || d.r() != e.r()) throw Mismatch("d and e must have the same n and r");
      std::cout << matrix_text(*open ? open_orbit(d, e) : closed_orbit(d, e)) << "\n";
    } else if (*idem) {
      const Composition d = parse_composition(d_text);
      for (const auto& nbar : positive_compositions(d.n())) {
        std::cout << nbar.to_string() << "\t" << matrix_text(nested_idempotent(d, nbar)) << "\n";
      }
    } else if (*verify) {
      const int n = *opt_n;
      const int r = opt_r.value_or(n);
      if (n < 1 || r < 0) throw CLI::ValidationError("--n/--r", "need n >= 1 and r >= 0");
      if (suite == "q-relations" || suite == "oracle") {
        guard(n, r, allow);
        set_allow_large(allow);
      }
      const Report rep = run_suite(suite, n, r);
      print_report(rep, verbose);
      return rep.passed() ? kOk : kVerifyFailed;
    } else if (*tsig) {
      const Permutation s = perm_operand(sigma_text, opt_n.value_or(0));
      std::cout << t_sigma(s).to_cycle_string() << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kParse;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
