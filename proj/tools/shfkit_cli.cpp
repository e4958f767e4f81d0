// shfkit command line: validate structures, build catalog families, scan the
// parameter plane, regenerate data files, and run the self-test suite.
//
// Exit codes: 0 all checks pass, 1 validation/tolerance failure, 2 usage or
// parse error.

#include <atomic>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "shfkit/catalog.hpp"
#include "shfkit/json_io.hpp"
#include "shfkit/selftest.hpp"
#include "shfkit/torsion.hpp"

namespace {

using namespace shfkit;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    write_file(out_path, text);
  }
}

int run_verify(const std::string& input_path, const std::string& algebra_path, double tol,
               const std::string& output, const std::string& out_path) {
  KForm omega, psi;
  su3_pair_from_json(read_file(input_path), omega, psi);

  ValidationReport rep = validation_report(omega, psi, tol);
  std::ostringstream text;
  bool pass = rep.valid;

  if (rep.valid && !algebra_path.empty()) {
    LieAlgebraData alg = load_lie_algebra(algebra_path);
    SU3Structure s = validate_su3(omega, psi, tol);
    try {
      TorsionReport torsion = ricci_report(s, alg, tol);
      ShfResiduals shf = check_shf(s, alg);
      bool shf_ok = shf.domega <= tol * (1 + omega.norm()) && shf.dpsi <= tol * (1 + psi.norm());
      pass = pass && shf_ok;
      if (output == "json") {
        text << "{\n\"validation\": " << validation_report_to_json(rep)
             << ",\n\"torsion\": " << torsion_report_to_json(torsion) << "\n}";
      } else {
        text << validation_report_to_text(rep);
        text << "d_omega: " << format_sig(shf.domega, 12) << "\n";
        text << "d_psi: " << format_sig(shf.dpsi, 12) << "\n";
        text << "scal: " << format_sig(torsion.scal, 12) << "\n";
        text << "torsion_free: " << (torsion.torsion_free ? "yes" : "no") << "\n";
        text << "j_hermitian_ricci: " << (torsion.j_hermitian_ricci ? "yes" : "no") << "\n";
      }
    } catch (const NotSHFConsistent& e) {
      pass = false;
      text << (output == "json" ? validation_report_to_json(rep)
                                : validation_report_to_text(rep));
      text << "\nnot SHF on the given algebra: " << e.what()
           << " (residual " << format_sig(e.residual(), 6) << ")\n";
    }
  } else {
    text << (output == "json" ? validation_report_to_json(rep)
                              : validation_report_to_text(rep));
  }
  emit(text.str(), out_path);
  return pass ? 0 : 1;
}

int run_catalog(const std::string& family, double a, double b, double tol,
                const std::string& output, const std::string& out_path) {
  FamilyBuild fb = (family == "su21") ? build_su21(a, b, tol) : build_so41(a, tol);
  TorsionReport torsion = ricci_report(fb.structure, fb.data->alg, tol);
  emit(output == "json" ? family_report_to_json(fb, torsion)
                        : family_report_to_text(fb, torsion),
       out_path);
  return 0;
}

struct ScanRow {
  double a = 0.0, b = 0.0;
  bool admissible = false;
  double q = 0.0, scal = 0.0, nu_norm = 0.0;
  bool in_v_shf = false;
};

std::string csv_cell(double x) { return format_sig(x, 12); }

int run_scan(const std::string& family, std::vector<double> grid, const std::string& out_path) {
  std::vector<ScanRow> rows;
  if (family == "su21") {
    if (grid.empty()) grid = {-2.4, -0.6, 41, 0.6, 4.6, 41};
    if (grid.size() != 6) throw ParseError("su21 scan grid needs amin amax asteps bmin bmax bsteps");
    int na = static_cast<int>(grid[2]), nb = static_cast<int>(grid[5]);
    if (na < 1 || nb < 1) throw ParseError("grid step counts must be >= 1");
    for (int i = 0; i < na; ++i) {
      double a = grid[0] + (na == 1 ? 0.0 : (grid[1] - grid[0]) * i / (na - 1));
      for (int j = 0; j < nb; ++j) {
        double b = grid[3] + (nb == 1 ? 0.0 : (grid[4] - grid[3]) * j / (nb - 1));
        ScanRow row;
        row.a = a;
        row.b = b;
        rows.push_back(row);
      }
    }
  } else {
    if (grid.empty()) grid = {-3.0, 3.0, 41};
    if (grid.size() != 3) throw ParseError("so41 scan grid needs amin amax asteps");
    int na = static_cast<int>(grid[2]);
    if (na < 1) throw ParseError("grid step counts must be >= 1");
    for (int i = 0; i < na; ++i) {
      ScanRow row;
      row.a = grid[0] + (na == 1 ? 0.0 : (grid[1] - grid[0]) * i / (na - 1));
      rows.push_back(row);
    }
  }

  auto compute = [&family](ScanRow& row) {
    try {
      FamilyBuild fb =
          (family == "su21") ? build_su21(row.a, row.b) : build_so41(row.a);
      TorsionReport rep = ricci_report(fb.structure, fb.data->alg);
      row.admissible = true;
      row.q = fb.point.q;
      row.scal = rep.scal;
      row.nu_norm = rep.residuals.at("nu_norm");
      row.in_v_shf = fb.point.region.in_fundamental;
    } catch (const Error&) {
      row.admissible = false;
    }
  };

  // Rows are independent; chunk them over a few workers and emit in order.
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&rows, &next, &compute] {
      for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
        compute(rows[i]);
    });
  }
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "a,b,q,scal,nu_norm,in_V_SHF\n";
  for (const ScanRow& row : rows) {
    csv << csv_cell(row.a) << ",";
    if (family == "su21") csv << csv_cell(row.b);
    csv << ",";
    if (row.admissible)
      csv << csv_cell(row.q) << "," << csv_cell(row.scal) << "," << csv_cell(row.nu_norm);
    else
      csv << ",,";
    csv << "," << (row.in_v_shf ? 1 : 0) << "\n";
  }
  emit(csv.str(), out_path);
  return 0;
}

int run_regen(const std::string& family, bool write) {
  namespace fs = std::filesystem;
  std::vector<Family> families;
  if (family == "all" || family == "su21") families.push_back(Family::SU21);
  if (family == "all" || family == "so41") families.push_back(Family::SO41);

  int status = 0;
  for (Family f : families) {
    GeneratedFamily gen = regenerate(f);
    fs::path file = fs::path(data_directory()) / family_file_name(f);
    if (write) {
      fs::create_directories(file.parent_path());
      save_lie_algebra(gen.alg, file.string());
      std::cout << family_name(f) << ": wrote " << file.string()
                << " (N2 = " << format_sig(gen.root.n2, 12) << ")\n";
      continue;
    }
    if (!fs::exists(file)) {
      std::cout << family_name(f) << ": data file missing: " << file.string() << "\n";
      status = 1;
      continue;
    }
    LieAlgebraData loaded = load_lie_algebra(file.string());
    double diff = data_agreement(loaded, gen.alg);
    if (diff <= 1e-12) {
      std::cout << family_name(f) << ": data file matches regeneration (max diff "
                << format_sig(diff, 3) << ", N2 = " << format_sig(gen.root.n2, 12) << ")\n";
    } else {
      std::cout << family_name(f) << ": MISMATCH, max diff " << format_sig(diff, 6) << "\n";
      status = 1;
    }
  }
  return status;
}

int run_selftest() {
  std::vector<CriterionResult> results = run_acceptance();
  std::cout << format_results(results);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shfkit: symplectic half-flat SU(3)-structure toolkit"};
  app.require_subcommand(1);

  std::string input_path, algebra_path, family = "su21", output = "text", out_path;
  double a = 0.0, b = 0.0, tol = 1e-9;
  std::vector<double> grid;
  bool write = false;

  CLI::App* verify = app.add_subcommand("verify", "validate an (omega, psi) JSON document");
  verify->add_option("--input", input_path, "structure JSON file")->required();
  verify->add_option("--algebra", algebra_path, "structure-constant JSON file");
  verify->add_option("--tol", tol, "validation tolerance");
  verify->add_option("--output", output)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report to this path");

  CLI::App* catalog = app.add_subcommand("catalog", "build a catalog family point");
  catalog->add_option("--family", family)->check(CLI::IsMember({"su21", "so41"}))->required();
  catalog->add_option("--a", a)->required();
  catalog->add_option("--b", b);
  catalog->add_option("--tol", tol);
  catalog->add_option("--output", output)->check(CLI::IsMember({"json", "text"}));
  catalog->add_option("--out", out_path);

  CLI::App* scan = app.add_subcommand("scan", "grid scan emitting CSV");
  scan->add_option("--family", family)->check(CLI::IsMember({"su21", "so41"}));
  scan->add_option("--grid", grid,
                   "su21: amin amax asteps bmin bmax bsteps; so41: amin amax asteps")
      ->expected(3, 6);
  scan->add_option("--out", out_path);

  CLI::App* regen = app.add_subcommand("regen", "regenerate structure-constant data files");
  regen->add_option("--family", family)->check(CLI::IsMember({"su21", "so41", "all"}));
  regen->add_flag("--write", write, "write the regenerated files");

  app.add_subcommand("selftest", "run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(input_path, algebra_path, tol, output, out_path);
    if (catalog->parsed()) {
      if (family == "su21" && !catalog->count("--b")) {
        std::cerr << "error: the su21 family needs both --a and --b\n";
        return 2;
      }
      return run_catalog(family, a, b, tol, output, out_path);
    }
    if (scan->parsed()) {
      if (!scan->count("--family")) family = "su21";
      return run_scan(family, grid, out_path);
    }
    if (regen->parsed()) {
      if (!regen->count("--family")) family = "all";
      return run_regen(family, write);
    }
    return run_selftest();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!std::isnan(e.residual())) std::cerr << " (residual " << e.residual() << ")";
    std::cerr << "\n";
    return 1;
  }
}
