// relper: periods of a relativistic particle in an even polynomial well.
// Thin front end over the C API; all numerics live in the library.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csv.hpp"
#include "relper.h"
#include "svg.hpp"

namespace {

using relcli::csv_table;
using relcli::g12;

int exit_for(relper_status st) {
  switch (st) {
    case RELPER_OK:
      return 0;
    case RELPER_ERR_QUADRATURE_NON_CONVERGENCE:
    case RELPER_ERR_SUPERLUMINAL_STATE:
    case RELPER_ERR_MAX_STEPS_EXCEEDED:
      return 3;
    case RELPER_ERR_IO:
      return 4;
    default:
      return 2;
  }
}

[[noreturn]] void die(relper_status st, const std::string& context = "") {
  std::cerr << "relper: " << relper_status_name(st);
  if (!context.empty()) std::cerr << " (" << context << ")";
  const char* msg = relper_last_error();
  if (msg && *msg) std::cerr << ": " << msg;
  std::cerr << "\n";
  std::exit(exit_for(st));
}

[[noreturn]] void die_usage(const std::string& msg) {
  std::cerr << "relper: " << msg << "\n";
  std::exit(2);
}

[[noreturn]] void die_io(const std::string& msg) {
  std::cerr << "relper: " << msg << "\n";
  std::exit(4);
}

void check(relper_status st, const std::string& context = "") {
  if (st != RELPER_OK) die(st, context);
}

struct potential_handle {
  relper_potential* p = nullptr;
  explicit potential_handle(const std::string& spec) {
    check(relper_potential_parse(spec.c_str(), &p), "potential '" + spec + "'");
  }
  ~potential_handle() { relper_potential_free(p); }
  potential_handle(const potential_handle&) = delete;
  potential_handle& operator=(const potential_handle&) = delete;
};

const std::vector<std::string> kMethods = {"closed", "pms", "elliptic", "quad", "ode"};

struct method_options {
  int nodes = 0;          // 0: library default / RELPER_QUAD_NODES
  double ode_tol = 0.0;   // 0: library default
  long ode_max_steps = 0; // 0: library default
};

double eval_method(const std::string& method, relper_potential* p, double A,
                   const method_options& mo) {
  double T = 0.0;
  relper_status st;
  if (method == "closed")
    st = relper_period_closed(p, A, &T);
  else if (method == "pms")
    st = relper_period_pms(p, A, &T);
  else if (method == "elliptic")
    st = relper_period_elliptic(p, A, &T);
  else if (method == "quad")
    st = relper_period_quadrature(p, A, mo.nodes, &T);
  else if (method == "ode")
    st = relper_period_ode_ex(p, A, mo.ode_tol, mo.ode_max_steps, &T, nullptr);
  else
    die_usage("unknown method '" + method + "'");
  check(st, method + " at A = " + g12(A));
  return T;
}

void require_known_method(const std::string& m) {
  for (const auto& k : kMethods)
    if (m == k) return;
  die_usage("unknown method '" + m + "' (choose from closed, pms, elliptic, quad, ode)");
}

struct grid_spec {
  double min = 0.0, max = 0.0;
  int count = 0;
  bool log = false;

  std::vector<double> points() const {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
      double t = static_cast<double>(i) / (count - 1);
      out[i] = log ? std::pow(10.0, std::log10(min) + t * (std::log10(max) - std::log10(min)))
                   : min + t * (max - min);
    }
    return out;
  }
};

grid_spec parse_grid(const std::string& text) {
  auto parts = relcli::split_fields(text, ':');
  if (parts.size() != 4) die_usage("grid must be min:max:count:lin|log, got '" + text + "'");
  grid_spec g;
  try {
    g.min = relcli::parse_cell(parts[0]);
    g.max = relcli::parse_cell(parts[1]);
    g.count = static_cast<int>(relcli::parse_cell(parts[2]));
  } catch (const std::exception& e) {
    die_usage(std::string("bad grid: ") + e.what());
  }
  if (parts[3] == "lin")
    g.log = false;
  else if (parts[3] == "log")
    g.log = true;
  else
    die_usage("grid scale must be lin or log, got '" + parts[3] + "'");
  if (!(g.min < g.max)) die_usage("grid needs min < max");
  if (g.count < 2) die_usage("grid needs count >= 2");
  if (g.log && !(g.min > 0.0)) die_usage("log grids need min > 0");
  return g;
}

std::vector<std::string> parse_methods(const std::string& text) {
  auto names = relcli::split_fields(text, ',');
  if (names.empty()) die_usage("no methods given");
  for (const auto& n : names) require_known_method(n);
  return names;
}

void write_text(const std::string& path, const std::string& body) {
  if (path == "-") {
    std::cout << body;
    if (!std::cout) die_io("failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) die_io("cannot open '" + path + "' for writing");
  out << body;
  out.flush();
  if (!out) die_io("failed writing '" + path + "'");
}

// ---- subcommands ----

struct sweep_args {
  std::string potential;
  std::string grid;
  std::string methods = "closed";
  std::string reference;
  std::string out = "-";
  method_options mo;
};

std::string run_sweep_csv(const std::string& pot_spec, const grid_spec& grid,
                          const std::vector<std::string>& methods,
                          const std::string& reference, const method_options& mo) {
  potential_handle pot(pot_spec);
  std::string body;
  body += "A,v_max";
  for (const auto& m : methods) body += ",T_" + m;
  if (!reference.empty()) {
    body += ",T_ref";
    for (const auto& m : methods) body += ",rel_err_" + m;
  }
  body += "\n";
  for (double A : grid.points()) {
    std::string ctx = "A = " + g12(A);
    double vmax = 0.0;
    check(relper_max_velocity(pot.p, A, &vmax), ctx);
    body += g12(A) + "," + g12(vmax);
    std::vector<double> periods;
    for (const auto& m : methods) {
      double T = eval_method(m, pot.p, A, mo);
      periods.push_back(T);
      body += "," + g12(T);
    }
    if (!reference.empty()) {
      double Tref = eval_method(reference, pot.p, A, mo);
      body += "," + g12(Tref);
      for (double T : periods) {
        double err = 0.0;
        check(relper_relative_error(T, Tref, &err), ctx);
        body += "," + g12(err);
      }
    }
    body += "\n";
  }
  return body;
}

struct figure_curve {
  std::string name;
  std::string spec;
};

struct figure_def {
  std::vector<figure_curve> curves;
  grid_spec grid;
  std::string reference;
};

figure_def figure_for(int id, int count_override) {
  figure_def def;
  switch (id) {
    case 1:
      def.curves = {{"harmonic", "harmonic"}};
      def.grid = {1e-2, 1e3, 300, true};
      def.reference = "elliptic";
      break;
    case 2:
      def.curves = {{"harmonic", "harmonic"}, {"aug2", "aug:2"},   {"aug3", "aug:3"},
                    {"aug4", "aug:4"},        {"aug20", "aug:20"}, {"aug500", "aug:500"}};
      def.grid = {1e-2, 1e2, 150, true};
      def.reference = "quad";
      break;
    case 3:
      def.curves = {{"sum3", "sum:3"}, {"sum5", "sum:5"}, {"sum10", "sum:10"},
                    {"sum100", "sum:100"}};
      def.grid = {1e-2, 1e2, 150, true};
      def.reference = "quad";
      break;
    case 4:
      def.curves = {{"pure2", "pure:2"}, {"pure3", "pure:3"}, {"pure4", "pure:4"},
                    {"pure20", "pure:20"}};
      def.grid = {0.05, 1e2, 150, true};
      def.reference = "quad";
      break;
    default:
      die_usage("figure id must be 1..4");
  }
  if (count_override > 0) def.grid.count = count_override;
  return def;
}

void run_figure(int id, const std::string& out_dir, int count_override,
                const method_options& mo) {
  figure_def def = figure_for(id, count_override);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) die_io("cannot create directory '" + out_dir + "': " + ec.message());

  std::vector<double> grid = def.grid.points();
  std::string errors_body;
  errors_body += "A";
  for (const auto& c : def.curves) errors_body += ",rel_err_" + c.name;
  errors_body += "\n";
  std::vector<std::vector<double>> err_cols(def.curves.size());

  for (size_t ci = 0; ci < def.curves.size(); ++ci) {
    const figure_curve& curve = def.curves[ci];
    potential_handle pot(curve.spec);
    std::string body = "A,v_max,T_closed,T_ref,rel_err_closed\n";
    for (double A : grid) {
      std::string ctx = curve.name + " at A = " + g12(A);
      double vmax = 0.0;
      check(relper_max_velocity(pot.p, A, &vmax), ctx);
      double T = eval_method("closed", pot.p, A, mo);
      double Tref = eval_method(def.reference, pot.p, A, mo);
      double err = 0.0;
      check(relper_relative_error(T, Tref, &err), ctx);
      err_cols[ci].push_back(err);
      body += g12(A) + "," + g12(vmax) + "," + g12(T) + "," + g12(Tref) + "," + g12(err) +
              "\n";
    }
    std::string path =
        (std::filesystem::path(out_dir) /
         ("fig" + std::to_string(id) + "_" + curve.name + ".csv")).string();
    write_text(path, body);
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    errors_body += g12(grid[i]);
    for (const auto& col : err_cols) errors_body += "," + g12(col[i]);
    errors_body += "\n";
  }
  std::string errors_path =
      (std::filesystem::path(out_dir) / ("fig" + std::to_string(id) + "_errors.csv")).string();
  write_text(errors_path, errors_body);
}

void run_svg(const std::string& in_path, const std::string& out_path, const std::string& x_axis,
             const std::string& y_axis, std::string title) {
  if (x_axis != "lin" && x_axis != "log") die_usage("--x must be lin or log");
  if (y_axis != "lin" && y_axis != "log") die_usage("--y must be lin or log");
  std::ifstream in(in_path, std::ios::binary);
  if (!in) die_io("cannot open '" + in_path + "'");
  csv_table table;
  try {
    table = relcli::parse_csv(in);
    if (table.rows.empty()) throw std::runtime_error("no data rows");
    relcli::svg_options opt;
    opt.x_log = (x_axis == "log");
    opt.y_log = (y_axis == "log");
    if (title.empty()) title = std::filesystem::path(in_path).stem().string();
    opt.title = title;
    write_text(out_path, relcli::render_svg(table, opt));
  } catch (const std::exception& e) {
    die_io("cannot plot '" + in_path + "': " + e.what());
  }
}

void run_lambda_table(int up_to, const std::string& out) {
  if (up_to < 2) die_usage("--up-to must be >= 2");
  std::vector<double> iter(static_cast<size_t>(up_to) + 1);
  check(relper_lambda_iterative(up_to, iter.data()));
  std::string body = "n,closed,iterative,difference\n";
  for (int n = 0; n <= up_to; ++n) {
    double closed = 0.0;
    check(relper_lambda_closed(n, &closed));
    body += std::to_string(n) + "," + g12(closed) + "," + g12(iter[n]) + "," +
            g12(closed - iter[n]) + "\n";
  }
  write_text(out, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Periods of a relativistic particle in an even polynomial potential well.\n"
      "Potential grammar: harmonic | aug:m | sum:m | pure:m | exp:coeff[,exp:coeff...]\n"
      "Methods: closed (structure-dispatched closed forms), pms (stand-in\n"
      "substitution, any even polynomial), elliptic (quadratic wells, exact),\n"
      "quad (Gauss-Legendre reference), ode (adaptive RK4 reference).\n"
      "RELPER_QUAD_NODES overrides the default quadrature rule size."};
  app.require_subcommand(1);

  // period
  std::string pot_spec, method = "closed";
  double amplitude = 0.0;
  method_options mo;
  CLI::App* period = app.add_subcommand("period", "Print one period to 12 significant digits");
  period->add_option("--potential,-p", pot_spec, "Potential spec")->required();
  period->add_option("-A,--amplitude", amplitude, "Oscillation amplitude")->required();
  period->add_option("--method,-m", method, "closed|pms|elliptic|quad|ode");
  period->add_option("--nodes", mo.nodes, "Quadrature rule size (0 = default)");
  period->add_option("--ode-tol", mo.ode_tol, "ODE local error tolerance (0 = default)");
  period->add_option("--ode-max-steps", mo.ode_max_steps, "ODE step budget (0 = default)");

  // sweep
  sweep_args sw;
  std::string grid_text;
  CLI::App* sweep = app.add_subcommand("sweep", "Amplitude sweep as CSV");
  sweep->add_option("--potential,-p", sw.potential, "Potential spec")->required();
  sweep->add_option("--grid", grid_text, "min:max:count:lin|log")->required();
  sweep->add_option("--method,-m", sw.methods, "Comma-separated methods (default closed)");
  sweep->add_option("--reference", sw.reference,
                    "Reference method; adds T_ref and rel_err_* columns");
  sweep->add_option("--out", sw.out, "Output file or - for stdout");
  sweep->add_option("--nodes", sw.mo.nodes, "Quadrature rule size (0 = default)");
  sweep->add_option("--ode-tol", sw.mo.ode_tol, "ODE local error tolerance (0 = default)");
  sweep->add_option("--ode-max-steps", sw.mo.ode_max_steps, "ODE step budget (0 = default)");

  // figure
  int fig_id = 0, fig_count = 0;
  std::string fig_out = ".";
  method_options fig_mo;
  CLI::App* figure = app.add_subcommand(
      "figure",
      "Emit a built-in error-comparison figure as CSV: one file per curve plus figN_errors.csv.\n"
      "fig 1: harmonic, closed vs elliptic, log grid [1e-2, 1e3], 300 points.\n"
      "fig 2: harmonic + aug m in {2,3,4,20,500}, closed vs quad, [1e-2, 1e2], 150 points.\n"
      "fig 3: sum m in {3,5,10,100}, closed vs quad, [1e-2, 1e2], 150 points.\n"
      "fig 4: pure m in {2,3,4,20}, closed vs quad, [0.05, 1e2], 150 points.");
  figure->add_option("id", fig_id, "Figure id (1-4)")->required();
  figure->add_option("--out", fig_out, "Output directory (default .)");
  figure->add_option("--count", fig_count, "Grid size override (0 = figure default)");
  figure->add_option("--nodes", fig_mo.nodes, "Quadrature rule size (0 = default)");

  // svg
  std::string svg_in, svg_out, svg_x = "lin", svg_y = "lin", svg_title;
  CLI::App* svg = app.add_subcommand("svg", "Render a CSV produced by this tool as an SVG plot");
  svg->add_option("--in", svg_in, "Input CSV")->required();
  svg->add_option("--out", svg_out, "Output SVG")->required();
  svg->add_option("--x", svg_x, "x axis: lin|log");
  svg->add_option("--y", svg_y, "y axis: lin|log");
  svg->add_option("--title", svg_title, "Plot title (default: input file stem)");

  // lambda-table
  int lt_up_to = 10;
  std::string lt_out = "-";
  CLI::App* lambda_cmd = app.add_subcommand(
      "lambda-table", "Stand-in coefficients: closed form vs bootstrap recursion");
  lambda_cmd->add_option("--up-to", lt_up_to, "Largest index n (lambda_{2n})");
  lambda_cmd->add_option("--out", lt_out, "Output file or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (period->parsed()) {
    require_known_method(method);
    potential_handle pot(pot_spec);
    double T = eval_method(method, pot.p, amplitude, mo);
    std::printf("%.12g\n", T);
    return 0;
  }
  if (sweep->parsed()) {
    grid_spec grid = parse_grid(grid_text);
    std::vector<std::string> methods = parse_methods(sw.methods);
    if (!sw.reference.empty()) require_known_method(sw.reference);
    write_text(sw.out, run_sweep_csv(sw.potential, grid, methods, sw.reference, sw.mo));
    return 0;
  }
  if (figure->parsed()) {
    run_figure(fig_id, fig_out, fig_count, fig_mo);
    return 0;
  }
  if (svg->parsed()) {
    run_svg(svg_in, svg_out, svg_x, svg_y, svg_title);
    return 0;
  }
  if (lambda_cmd->parsed()) {
    run_lambda_table(lt_up_to, lt_out);
    return 0;
  }
  return 2;
}
