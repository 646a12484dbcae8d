// Verification harness CLI: runs the registered structural checks and
// exposes the torsion / Lie-closure / calibration / root-system reports.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "octolab/checks.hpp"

namespace {

int write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace octolab;

  CLI::App app{"octolab: exact-arithmetic verification of an octonionic gauge construction"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run checks matching a selection glob");
  verify->fallthrough();
  std::string selection = "all";
  verify->add_option("selection", selection, "check-id glob, or 'all'");

  auto* torsion = app.add_subcommand("torsion", "torsion structure constants at a unit point");
  torsion->fallthrough();
  std::string x_literal = "1";
  torsion->add_option("--x", x_literal, "octonion literal for the base point")->required();

  auto* liegen_cmd = app.add_subcommand("liegen", "Lie closure report");
  liegen_cmd->fallthrough();
  std::string closure_kind = "left-mult";
  liegen_cmd->add_option("--closure", closure_kind, "generator set (left-mult)")
      ->check(CLI::IsMember({"left-mult"}));

  auto* calib = app.add_subcommand("calib", "quaternionic hull and its complement");
  calib->fallthrough();
  std::string hull_spec;
  calib->add_option("--hull", hull_spec, "two comma-separated octonion literals, e.g. e1,e2")
      ->required();

  auto* roots_cmd = app.add_subcommand("roots", "root-system identification report");
  roots_cmd->fallthrough();
  bool identify = false;
  roots_cmd->add_flag("--identify", identify, "identify the Dynkin type of the 24-root set");

  auto* dims = app.add_subcommand("dims", "dimension bookkeeping reports");
  dims->fallthrough();
  bool table = false;
  dims->add_flag("--table", table, "emit the symmetric-space dimension table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      const auto rep = run_verification(selection);
      if (rep.checks.empty()) {
        std::cerr << "selection matched no checks: " << selection << "\n";
        return 2;
      }
      int rc = write_out(format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text(), out_path);
      if (rc != 0) return rc;
      return rep.failed() ? 1 : 0;
    }

    if (torsion->parsed()) {
      const UnitPoint X(parse_octonion(x_literal));
      const auto T = torsion_tensor(X);
      if (format == "json") {
        Json out;
        out["base"] = format_octonion(X.value());
        out["entries"] = Json::array();
        for (int i = 1; i <= 7; ++i)
          for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k)
              if (T(i, j, k) != 0)
                out["entries"].push_back({{"i", i}, {"j", j}, {"k", k}, {"value", rat_str(T(i, j, k))}});
        return write_out(out.dump(2) + "\n", out_path);
      }
      std::string text;
      for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
          for (int k = 1; k <= 7; ++k)
            if (T(i, j, k) != 0)
              text += "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                      "): " + rat_str(T(i, j, k)) + "\n";
      return write_out(text, out_path);
    }

    if (liegen_cmd->parsed()) {
      const auto closure = lie_closure(left_mult_generators());
      if (format == "json") {
        Json out{{"generators", closure_kind},
                 {"dimension", closure.dimension()},
                 {"fingerprint", closure.fingerprint()}};
        return write_out(out.dump(2) + "\n", out_path);
      }
      return write_out("dimension: " + std::to_string(closure.dimension()) +
                           "\nfingerprint: " + std::to_string(closure.fingerprint()) + "\n",
                       out_path);
    }

    if (calib->parsed()) {
      const auto comma = hull_spec.find(',');
      if (comma == std::string::npos) {
        std::cerr << "--hull expects two comma-separated literals\n";
        return 2;
      }
      const Octonion a = parse_octonion(hull_spec.substr(0, comma));
      const Octonion b = parse_octonion(hull_spec.substr(comma + 1));
      const auto hull = quaternion_hull(a, b);
      const auto comp = coassociative_complement(hull);
      if (format == "json") {
        Json out;
        for (const auto& v : hull.basis) out["hull"].push_back(format_octonion(v));
        for (const auto& v : comp) out["complement"].push_back(format_octonion(v));
        return write_out(out.dump(2) + "\n", out_path);
      }
      std::string text = "hull:";
      for (const auto& v : hull.basis) text += " " + format_octonion(v);
      text += "\ncomplement:";
      for (const auto& v : comp) text += " " + format_octonion(v);
      return write_out(text + "\n", out_path);
    }

    if (roots_cmd->parsed()) {
      const auto rs = d4_roots();
      const auto axioms = root_axiom_check(rs);
      const auto type = dynkin_identify(rs);
      if (format == "json") {
        Json out{{"count", rs.vectors.size()},
                 {"axioms_pass", axioms.pass()},
                 {"dynkin", type.name},
                 {"rank", type.rank}};
        return write_out(out.dump(2) + "\n", out_path);
      }
      return write_out("roots: " + std::to_string(rs.vectors.size()) +
                           "\naxioms: " + (axioms.pass() ? "pass" : "fail") +
                           "\ndynkin: " + type.name + " (rank " + std::to_string(type.rank) + ")\n",
                       out_path);
    }

    if (dims->parsed()) {
      const auto rows = symmetric_space_check();
      const auto shilov = shilov_check();
      if (format == "json") {
        Json out;
        for (const auto& r : rows)
          out["symmetric_spaces"].push_back({{"gauge_group", r.gauge_group},
                                             {"symmetric_space", r.symmetric_space},
                                             {"psi_force", r.psi_force},
                                             {"coset_dim", r.coset_dim},
                                             {"listed_dim", r.listed_space_dim},
                                             {"status", status_name(r.status)}});
        for (const auto& c : shilov)
          out["shilov"].push_back({{"coset", c.coset},
                                   {"real_dim", c.real_dim},
                                   {"complex_dim", c.complex_dim},
                                   {"boundary_dim", c.boundary_dim},
                                   {"matches", c.matches}});
        return write_out(out.dump(2) + "\n", out_path);
      }
      std::string text;
      for (const auto& r : rows)
        text += r.symmetric_space + " -> coset dim " + std::to_string(r.coset_dim) + ", listed " +
                r.psi_force + " dim " + std::to_string(r.listed_space_dim) + " [" +
                status_name(r.status) + "]\n";
      for (const auto& c : shilov)
        text += c.coset + " -> real " + std::to_string(c.real_dim) + ", boundary " +
                std::to_string(c.boundary_dim) + (c.matches ? " [pass]" : " [fail]") + "\n";
      return write_out(text, out_path);
    }
  } catch (const octolab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
