#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amci/kernel_bases.hpp"
#include "amci/multiplicities.hpp"
#include "amci/render.hpp"
#include "amci/sl2_engine.hpp"

using namespace amci;

namespace {

struct VerifySection {
  std::string label;
  long long checked = 0;
  bool ok = true;
};

VerifySection verify_tables(int dmax) {
  VerifySection s;
  auto tables = cross_validate(dmax);
  bool ok = true;
  long long cells = 0;
  for (const auto& t : tables) {
    cells += static_cast<long long>(t.cells.size());
    if (!t.all_agree()) ok = false;
  }
  s.checked = cells;
  s.ok = ok;
  std::ostringstream oss;
  oss << "tables d = 3.." << dmax << ": " << cells << " cells, four pipelines agree: "
      << (ok ? "yes" : "NO");
  s.label = oss.str();
  return s;
}

VerifySection verify_bases(int dmax) {
  VerifySection s;
  bool ok = true;
  long long components = 0;
  for (int d = 3; d <= dmax; ++d)
    for (int j = 0; j <= max_valid_j(d); ++j) {
      auto t = trivial_basis(d, j);
      auto g = sign_basis(d, j);
      auto w = standard_basis(d, j);
      components += 3;
      if (!t.certified() || !g.certified() || !w.certified()) ok = false;
      if (MultiplicityTriple{t.multiplicity(), g.multiplicity(), w.multiplicity()} !=
          by_partitions(d, j))
        ok = false;
      if (t.multiplicity() + g.multiplicity() + 2 * w.multiplicity() !=
          kernel_dim_bruteforce(d, j))
        ok = false;
    }
  s.checked = components;
  s.ok = ok;
  std::ostringstream oss;
  oss << "bases d = 3.." << dmax << ": " << components
      << " components certified against the brute-force kernel: " << (ok ? "yes" : "NO");
  s.label = oss.str();
  return s;
}

VerifySection verify_echelon(int dmax) {
  VerifySection s;
  bool ok = true;
  long long matrices = 0;
  for (int d = 3; d <= dmax; ++d)
    for (auto cls : {PartitionClass::Plain, PartitionClass::Strict})
      for (int j = 1; j <= max_valid_j(d); ++j) {
        ++matrices;
        if (!echelon_certify(build_C(d, j, cls)).ok()) ok = false;
      }
  s.checked = matrices;
  s.ok = ok;
  std::ostringstream oss;
  oss << "echelon d = 3.." << dmax << ": " << matrices
      << " coefficient matrices of full row rank with staircase support: "
      << (ok ? "yes" : "NO");
  s.label = oss.str();
  return s;
}

VerifySection verify_lefschetz() {
  VerifySection s;
  bool ok = true;
  const std::pair<int, int> cases[] = {{3, 3}, {3, 4}, {3, 5}, {2, 6}};
  for (auto [n, d] : cases) {
    ++s.checked;
    if (!lefschetz_check(n, d).all_bijective()) ok = false;
  }
  s.ok = ok;
  std::ostringstream oss;
  oss << "lefschetz (3,3) (3,4) (3,5) (2,6): all power maps bijective: "
      << (ok ? "yes" : "NO");
  s.label = oss.str();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact S3 x sl2 structure of k[x1,x2,x3]/(x1^d, x2^d, x3^d): multiplicity\n"
      "tables, explicit kernel bases and cross-validation, all in exact arithmetic"};
  app.require_subcommand(1);

  auto format_check = CLI::IsMember({"plain", "json", "latex"});

  int table_d = 0;
  std::string table_format = "plain";
  auto* table_cmd = app.add_subcommand("table", "multiplicity table for one d");
  table_cmd->add_option("--d", table_d, "exponent d of the defining powers")->required();
  table_cmd->add_option("--format", table_format, "plain, json or latex")->check(format_check);

  int basis_d = 0, basis_j = 0;
  std::string basis_rep, basis_format = "plain";
  auto* basis_cmd = app.add_subcommand("basis", "explicit basis of one isotypic component");
  basis_cmd->add_option("--d", basis_d, "exponent d of the defining powers")->required();
  basis_cmd->add_option("--j", basis_j, "homogeneous degree")->required();
  basis_cmd->add_option("--rep", basis_rep, "trivial, sign or standard")
      ->required()
      ->check(CLI::IsMember({"trivial", "sign", "standard"}));
  basis_cmd->add_option("--format", basis_format, "plain, json or latex")->check(format_check);

  int hil_n = 0, hil_d = 0;
  auto* hil_cmd = app.add_subcommand("hilbert", "graded dimensions of A(n,d)");
  hil_cmd->add_option("--n", hil_n, "number of variables")->required();
  hil_cmd->add_option("--d", hil_d, "exponent d of the defining powers")->required();

  int dec_n = 0, dec_d = 0;
  auto* dec_cmd = app.add_subcommand("decompose", "irreducible sl2 content of A(n,d)");
  dec_cmd->add_option("--n", dec_n, "number of variables")->required();
  dec_cmd->add_option("--d", dec_d, "exponent d of the defining powers")->required();

  int cg_m = 0, cg_k = 0;
  auto* cg_cmd = app.add_subcommand("cg", "highest weights of V(m) tensor V(k)");
  cg_cmd->add_option("--m", cg_m, "first highest weight (m >= k)")->required();
  cg_cmd->add_option("--k", cg_k, "second highest weight")->required();

  int verify_dmax = 0;
  bool with_bases = false, with_lefschetz = false;
  std::string verify_format = "plain";
  auto* verify_cmd = app.add_subcommand("verify", "run the cross-validation suite");
  verify_cmd->add_option("--dmax", verify_dmax, "largest d to cross-validate")->required();
  verify_cmd->add_flag("--with-bases", with_bases,
                       "also certify every basis against the brute-force kernel");
  verify_cmd->add_flag("--with-lefschetz", with_lefschetz,
                       "also check the multiplication power maps on four algebras");
  verify_cmd->add_option("--format", verify_format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table_cmd) {
      auto t = multiplicity_table(table_d);
      if (table_format == "json")
        std::cout << table_to_json(t).dump() << '\n';
      else if (table_format == "latex")
        std::cout << table_to_latex(t);
      else
        std::cout << table_to_text(t);
      if (!t.all_agree()) {
        std::cerr << "error: the four pipelines disagree\n";
        return 1;
      }
    } else if (*basis_cmd) {
      RepType rep = rep_from_name(basis_rep);
      BasisReport b = rep == RepType::Trivial ? trivial_basis(basis_d, basis_j)
                      : rep == RepType::Sign  ? sign_basis(basis_d, basis_j)
                                              : standard_basis(basis_d, basis_j);
      if (basis_format == "json")
        std::cout << basis_to_json(b).dump() << '\n';
      else if (basis_format == "latex")
        std::cout << basis_to_latex(b);
      else
        std::cout << basis_to_text(b);
      if (!b.certified()) {
        std::cerr << "error: the basis failed certification\n";
        return 1;
      }
    } else if (*hil_cmd) {
      std::cout << hilbert_to_text(hilbert(hil_n, hil_d)) << '\n';
    } else if (*dec_cmd) {
      std::cout << decompose_to_text(sl2_decompose(dec_n, dec_d)) << '\n';
    } else if (*cg_cmd) {
      std::cout << weights_to_text(clebsch_gordan(cg_m, cg_k)) << '\n';
    } else if (*verify_cmd) {
      std::vector<VerifySection> sections;
      sections.push_back(verify_tables(verify_dmax));
      if (with_bases) sections.push_back(verify_bases(verify_dmax));
      if (with_bases) sections.push_back(verify_echelon(verify_dmax));
      if (with_lefschetz) sections.push_back(verify_lefschetz());
      bool pass = true;
      for (const auto& s : sections) pass = pass && s.ok;
      if (verify_format == "json") {
        Json out;
        out["dmax"] = verify_dmax;
        Json secs = Json::array();
        for (const auto& s : sections)
          secs.push_back(Json{{"label", s.label}, {"checked", s.checked}, {"ok", s.ok}});
        out["sections"] = std::move(secs);
        out["pass"] = pass;
        std::cout << out.dump() << '\n';
      } else {
        for (const auto& s : sections) std::cout << s.label << '\n';
        std::cout << (pass ? "VERIFY: PASS" : "VERIFY: FAIL") << '\n';
      }
      if (!pass) return 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
