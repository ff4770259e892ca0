#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fractlip/cover.hpp"
#include "fractlip/fractal_gen.hpp"
#include "fractlip/holder.hpp"
#include "fractlip/io.hpp"
#include "fractlip/lip_cover.hpp"
#include "fractlip/min_chain.hpp"
#include "fractlip/selfsimilar.hpp"
#include "fractlip/ultra.hpp"

using namespace fractlip;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string output;   // empty = stdout
  unsigned threads = 0; // 0 = auto; all operations are deterministic either way
  std::uint64_t seed = 0;
};

void emit(const GlobalOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw BadInput("cannot write '" + opts.output + "'");
  out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    values.push_back(std::stod(cell));
  }
  return values;
}

std::vector<std::size_t> parse_indices(const std::string& csv) {
  std::vector<std::size_t> values;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ','))
    if (!cell.empty()) values.push_back(std::stoul(cell));
  return values;
}

ordered_json result_json(const MinChainResult& res) {
  ordered_json j;
  j["value"] = res.value;
  j["order"] = res.order;
  j["exact"] = res.exact;
  j["method"] = res.method;
  j["nodes_explored"] = res.nodes_explored;
  return j;
}

// Distance access for either input schema: clouds evaluate on demand so
// large samples never materialize an n x n matrix.
class InputMetric {
 public:
  explicit InputMetric(LoadedInput input) : input_(std::move(input)) {
    if (!input_.space && input_.cloud) cloud_metric_.emplace(*input_.cloud);
    if (!input_.space && !input_.cloud)
      throw BadInput("input contains neither a matrix nor points");
  }
  const Metric& metric() const {
    if (input_.space) return *input_.space;
    return *cloud_metric_;
  }
  const LoadedInput& loaded() const { return input_; }

 private:
  LoadedInput input_;
  std::optional<PointCloudMetric> cloud_metric_;
};

MapTable read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedFile(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.contains("image") || !j["image"].is_array())
    throw MalformedFile("map file needs an \"image\" index array", 1, 1);
  MapTable table;
  table.image = j["image"].get<std::vector<std::size_t>>();
  return table;
}

std::string cloud_or_csv(const PointCloud& cloud, const std::string& format) {
  std::stringstream buf;
  if (format == "csv") {
    if (cloud.size() > 4096)
      throw TooManyPoints("matrix CSV export caps at 4096 points; use JSON");
    write_matrix_csv(buf, FiniteMetricSpace::from_points(cloud));
  } else {
    write_cloud_json(buf, cloud);
  }
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fractlip: chain energies, order-minimal parametrizations, covering\n"
      "numbers and Lipschitz cover diagnostics on finite metric spaces.\n"
      "Covering centers are restricted to sample points (closed balls); this\n"
      "shifts counts by at most a constant and never a log-log slope."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are legal after the subcommand too

  GlobalOpts opts;
  app.add_option("-o,--output", opts.output, "Write the result here instead of stdout");
  app.add_option("--threads", opts.threads,
                 "Parallelism cap; every operation is deterministic and"
                 " independent of it")
      ->check(CLI::Range(0u, 1024u));
  app.add_option("--seed", opts.seed, "Seed for randomized generators");

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Emit fixture point clouds and spaces");
  gen->require_subcommand(1);
  std::string gen_format = "json";
  std::size_t gen_depth = 3;

  auto* gen_cantor = gen->add_subcommand("cantor", "Middle-hole Cantor endpoints");
  double cantor_hole = 1.0 / 3.0;
  gen_cantor->add_option("--depth", gen_depth, "Construction depth (<= 20)");
  gen_cantor->add_option("--hole", cantor_hole, "Removed middle fraction in (0,1)");
  gen_cantor->add_option("--format", gen_format, "json|csv");

  auto* gen_ifs = gen->add_subcommand("ifs", "Similarity IFS cylinder sample");
  std::string ifs_ratios = "0.333333333333333315,0.333333333333333315";
  std::string ifs_translations = "0;0.66666666666666663";
  gen_ifs->add_option("--ratios", ifs_ratios, "Comma-separated ratios in (0,1)");
  gen_ifs->add_option("--translations", ifs_translations,
                      "Semicolon-separated translations, comma within tuples");
  gen_ifs->add_option("--depth", gen_depth, "Cylinder depth");
  gen_ifs->add_option("--format", gen_format, "json|csv");

  auto* gen_carpet = gen->add_subcommand("carpet", "Grid carpet cylinder sample");
  std::size_t carpet_m = 2, carpet_n = 2;
  std::string carpet_cells = "0,0;1,1";
  gen_carpet->add_option("--rows", carpet_m, "m >= 2");
  gen_carpet->add_option("--cols", carpet_n, "n >= m");
  gen_carpet->add_option("--cells", carpet_cells,
                         "Pattern cells col,row separated by semicolons");
  gen_carpet->add_option("--depth", gen_depth, "Cylinder depth");
  gen_carpet->add_option("--format", gen_format, "json|csv");
  bool carpet_dim_only = false;
  gen_carpet->add_flag("--ubdim-only", carpet_dim_only,
                       "Print the carpet box dimension instead of points");

  auto* gen_tree = gen->add_subcommand("tree", "Ultrametric tree space");
  std::string tree_arities = "2,2";
  std::string tree_diams = "1,0.25";
  gen_tree->add_option("--arities", tree_arities, "Per-level arities");
  gen_tree->add_option("--diams", tree_diams, "Strictly decreasing level diameters");
  gen_tree->add_option("--format", gen_format, "json|csv");

  auto* gen_random = gen->add_subcommand("random", "Uniform random cloud in [0,1]^d");
  std::size_t random_n = 8, random_dim = 1;
  gen_random->add_option("--n", random_n, "Point count");
  gen_random->add_option("--dim", random_dim, "Ambient dimension");
  gen_random->add_option("--format", gen_format, "json|csv");

  // validate ---------------------------------------------------------------
  auto* validate_cmd = app.add_subcommand("validate", "Check the metric invariants");
  std::string validate_file;
  validate_cmd->add_option("file", validate_file, "Space file (CSV or JSON)")
      ->required();

  // zscore -------------------------------------------------------------
  auto* zscore = app.add_subcommand("zscore", "Chain energy of an order");
  std::string z_file, z_order;
  double z_s = 1.0;
  bool z_sorted = false;
  zscore->add_option("file", z_file, "Space or cloud file")->required();
  zscore->add_option("--s", z_s, "Exponent s > 0")->required();
  zscore->add_option("--order", z_order, "Comma-separated point order");
  zscore->add_flag("--sorted", z_sorted, "Use ascending order of a 1-D cloud");

  // delta --------------------------------------------------------------
  auto* delta = app.add_subcommand("delta", "Order-minimal chain energy");
  std::string d_file, d_mode = "exact", d_profile, d_csv;
  double d_s = 1.0, d_u = 0.5;
  std::uint64_t d_budget = 0;
  std::size_t d_max_exact = 12;
  delta->add_option("file", d_file, "Space or cloud file")->required();
  delta->add_option("--s", d_s, "Exponent s > 0");
  delta->add_option("--mode", d_mode, "exact|nn|2opt|nettree|sorted");
  delta->add_option("--u", d_u, "Net-tree scale in (0,1)");
  delta->add_option("--budget", d_budget, "Exact-solver node budget (0 = unlimited)");
  delta->add_option("--max-exact-n", d_max_exact,
                    "Raise the exact-solver size guard at your own risk");
  delta->add_option("--profile", d_profile, "Comma-separated s grid");
  delta->add_option("--emit-csv", d_csv, "Write the profile as CSV here");

  // holder -------------------------------------------------------------
  auto* holder = app.add_subcommand("holder", "Prefix-energy parametrization");
  std::string h_file, h_order;
  double h_s = 1.0;
  bool h_exact_order = false;
  holder->add_option("file", h_file, "Space or cloud file")->required();
  holder->add_option("--s", h_s, "Exponent s > 0")->required();
  holder->add_option("--order", h_order, "Comma-separated point order");
  holder->add_flag("--exact-order", h_exact_order,
                   "Use the exact minimal order (n <= 12)");

  // cover / boxdim -------------------------------------------------------
  auto* cover = app.add_subcommand("cover", "Covering number at one radius");
  std::string c_file;
  double c_r = 0.5;
  bool c_exact = false;
  std::size_t c_cap = 64;
  cover->add_option("file", c_file, "Space or cloud file")->required();
  cover->add_option("--r", c_r, "Ball radius")->required();
  cover->add_flag("--exact", c_exact, "Exact minimal cover (n <= cap)");
  cover->add_option("--cap", c_cap, "Exact-cover size cap");

  auto* boxdim = app.add_subcommand("boxdim", "Box-dimension regression");
  std::string b_file, b_radii, b_csv;
  boxdim->add_option("file", b_file, "Space or cloud file")->required();
  boxdim->add_option("--radii", b_radii, "Comma-separated radii")->required();
  boxdim->add_option("--emit-csv", b_csv, "Write (log 1/r, log count) pairs here");

  // cantor-test ----------------------------------------------------------
  auto* cantor_test = app.add_subcommand(
      "cantor-test", "Cover-count trajectory against powers 3^-n vs 2^n");
  std::string ct_file;
  std::size_t ct_depth = 8;
  cantor_test->add_option("file", ct_file, "Space or cloud file")->required();
  cantor_test->add_option("--depth-max", ct_depth, "Largest n (<= 20)");

  // retract / extend ------------------------------------------------------
  auto* retract = app.add_subcommand("retract", "Distance-preserving retraction");
  std::string r_file, r_subset;
  retract->add_option("file", r_file, "Ultrametric space file")->required();
  retract->add_option("--subset", r_subset, "Comma-separated subset indices")
      ->required();

  auto* extend = app.add_subcommand("extend", "Extend a map along the retraction");
  std::string e_file, e_subset, e_codomain, e_map;
  double e_lip = 1.0;
  extend->add_option("file", e_file, "Ultrametric domain file")->required();
  extend->add_option("--subset", e_subset, "Comma-separated subset indices")
      ->required();
  extend->add_option("--codomain", e_codomain, "Target space file")->required();
  extend->add_option("--map", e_map, "JSON map file {\"image\": [...]}")->required();
  extend->add_option("--L", e_lip, "Certified Lipschitz constant")->required();

  // fab ------------------------------------------------------------------
  auto* fab = app.add_subcommand(
      "fab", "Minimal number of Lipschitz-1 images of A covering B");
  std::string f_a, f_b;
  bool f_experimental = false;
  fab->add_option("a", f_a, "Space file for A")->required();
  fab->add_option("b", f_b, "Space file for B")->required();
  fab->add_flag("--experimental-truncation", f_experimental,
                "Acknowledge that depth-truncated samples carry no"
                " convergence guarantee");

  // ssc-check --------------------------------------------------------------
  auto* ssc = app.add_subcommand("ssc-check",
                                 "Lipschitz-onto compatibility of self-similar systems");
  std::uint64_t ssc_q = 2;
  double ssc_r = 1.0 / 3.0, ssc_tol = 1e-9;
  std::string ssc_ratios, ssc_exact;
  ssc->add_option("--q", ssc_q, "Branch count of the homogeneous system")->required();
  ssc->add_option("--r", ssc_r, "Common ratio in (0,1)")->required();
  ssc->add_option("--ratios", ssc_ratios, "Comma-separated target ratios")->required();
  ssc->add_option("--tol", ssc_tol, "Dimension/integrality tolerance");
  ssc->add_option("--exact", ssc_exact,
                  "Symbolic exponents p1/q1,p2/q2,... meaning beta_j = r^(pj/qj)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      PointCloud cloud;
      if (gen_cantor->parsed()) {
        cloud = cantor_endpoints(gen_depth, cantor_hole);
      } else if (gen_ifs->parsed()) {
        IfsSpec spec;
        const auto ratios = parse_doubles(ifs_ratios);
        std::vector<std::vector<double>> translations;
        std::stringstream ss(ifs_translations);
        std::string tuple;
        while (std::getline(ss, tuple, ';'))
          translations.push_back(parse_doubles(tuple));
        if (ratios.size() != translations.size() || ratios.empty())
          throw BadInput("ratios and translations must pair up");
        spec.arity = translations.front().size();
        for (std::size_t i = 0; i < ratios.size(); ++i)
          spec.maps.push_back({ratios[i], translations[i]});
        cloud = ifs_sample(spec, gen_depth);
      } else if (gen_carpet->parsed()) {
        CarpetSpec spec;
        spec.rows = carpet_m;
        spec.cols = carpet_n;
        std::stringstream ss(carpet_cells);
        std::string tuple;
        while (std::getline(ss, tuple, ';')) {
          const auto pair = parse_indices(tuple);
          if (pair.size() != 2) throw BadInput("cells must be col,row pairs");
          spec.cells.push_back({pair[0], pair[1]});
        }
        if (carpet_dim_only) {
          ordered_json j;
          j["ubdim"] = mcmullen_dimension(spec);
          emit(opts, dump(j));
          return 0;
        }
        cloud = carpet_sample(spec, gen_depth);
      } else if (gen_tree->parsed()) {
        const auto arities = parse_indices(tree_arities);
        const auto diams = parse_doubles(tree_diams);
        const auto space = ultrametric_tree_space(arities, diams);
        std::stringstream buf;
        if (gen_format == "csv") {
          write_matrix_csv(buf, space);
        } else {
          write_space_json(buf, space);
        }
        emit(opts, buf.str());
        return 0;
      } else {
        cloud = random_cloud(random_n, random_dim, opts.seed);
      }
      emit(opts, cloud_or_csv(cloud, gen_format));
      return 0;
    }

    if (validate_cmd->parsed()) {
      const auto input = load_input_file(validate_file);
      if (input.cloud && !input.space && input.cloud->size() > 20000)
        throw TooManyPoints("full validation materializes the matrix; cap 20000");
      const auto space = as_space(input);  // from_points re-checks basics
      if (input.space) FiniteMetricSpace::validate(input.space->matrix());
      ordered_json j;
      j["valid"] = true;
      j["n"] = space.size();
      emit(opts, dump(j));
      return 0;
    }

    if (zscore->parsed()) {
      const auto input = load_input_file(z_file);
      ordered_json j;
      if (z_sorted) {
        if (!input.cloud || input.cloud->arity() != 1)
          throw BadInput("--sorted needs a 1-D point cloud input");
        const auto res = min_chain_line(*input.cloud, z_s);
        j["value"] = res.value;
        j["order"] = res.order;
        j["n"] = res.order.size();
      } else {
        const InputMetric in(input);
        std::vector<std::size_t> order;
        if (z_order.empty()) {
          order.resize(in.metric().size());
          for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        } else {
          order = parse_indices(z_order);
        }
        j["value"] = chain_energy(in.metric(), order, z_s);
        j["order"] = order;
        j["n"] = in.metric().size();
      }
      j["s"] = z_s;
      emit(opts, dump(j));
      return 0;
    }

    if (delta->parsed()) {
      const auto input = load_input_file(d_file);

      if (!d_profile.empty()) {
        const InputMetric in(input);
        const auto rows = dimension_profile(in.metric(), parse_doubles(d_profile), d_u);
        ordered_json j = ordered_json::array();
        std::stringstream csv;
        csv << "s,delta,method,bound\n";
        for (const auto& row : rows) {
          ordered_json item;
          item["s"] = row.s;
          item["delta"] = row.delta;
          item["method"] = row.method;
          item["bound"] = row.bound;
          j.push_back(item);
          csv << format_double(row.s) << "," << format_double(row.delta) << ","
              << row.method << "," << format_double(row.bound) << "\n";
        }
        if (!d_csv.empty()) {
          std::ofstream out(d_csv);
          if (!out) throw BadInput("cannot write '" + d_csv + "'");
          out << csv.str();
        }
        emit(opts, dump(j));
        return 0;
      }

      MinChainResult res;
      if (d_mode == "sorted") {
        if (!input.cloud || input.cloud->arity() != 1)
          throw BadInput("--mode sorted needs a 1-D point cloud input");
        res = min_chain_line(*input.cloud, d_s);
      } else {
        const InputMetric in(input);
        if (d_mode == "exact") {
          res = min_chain_exact(in.metric(), d_s, d_budget, d_max_exact);
        } else if (d_mode == "nn") {
          res = min_chain_heuristic(in.metric(), d_s, ChainHeuristic::nearest_neighbor);
        } else if (d_mode == "2opt") {
          res = min_chain_heuristic(in.metric(), d_s, ChainHeuristic::two_opt);
        } else if (d_mode == "nettree") {
          res = min_chain_heuristic(in.metric(), d_s, ChainHeuristic::net_tree, d_u);
        } else {
          throw BadInput("unknown mode '" + d_mode + "'");
        }
      }
      ordered_json j = result_json(res);
      j["s"] = d_s;
      emit(opts, dump(j));
      return 0;
    }

    if (holder->parsed()) {
      const InputMetric in(load_input_file(h_file));
      std::vector<std::size_t> order;
      if (h_exact_order) {
        order = min_chain_exact(in.metric(), h_s).order;
      } else if (!h_order.empty()) {
        order = parse_indices(h_order);
      } else {
        order.resize(in.metric().size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      }
      const auto param = build_parametrization(in.metric(), order, h_s);
      const auto cert =
          verify_holder(param.anchors, in.metric(), param.images, param.alpha);
      ordered_json j;
      j["anchors"] = param.anchors;
      j["images"] = param.images;
      j["alpha"] = param.alpha;
      j["C"] = param.constant;
      j["ell"] = param.ell;
      j["verified_worst_C"] = cert.worst_c;
      emit(opts, dump(j));
      return 0;
    }

    if (cover->parsed()) {
      const auto input = load_input_file(c_file);
      ordered_json j;
      const InputMetric in(input);
      CoverReport report;
      if (c_exact) {
        report = covering_number_exact(in.metric(), c_r, c_cap);
      } else {
        report = covering_number_greedy(in.metric(), c_r);
      }
      j["r"] = report.r;
      j["count"] = report.count;
      j["centers"] = report.centers;
      j["exact"] = report.exact;
      emit(opts, dump(j));
      return 0;
    }

    if (boxdim->parsed()) {
      const auto input = load_input_file(b_file);
      const auto radii = parse_doubles(b_radii);
      const InputMetric in(input);
      const BoxDimEstimate est = box_dimension_estimate(in.metric(), radii);
      if (!b_csv.empty()) {
        std::ofstream out(b_csv);
        if (!out) throw BadInput("cannot write '" + b_csv + "'");
        out << "log_inv_r,log_count\n";
        for (std::size_t k = 0; k < est.radii.size(); ++k)
          out << format_double(std::log(1.0 / est.radii[k])) << ","
              << format_double(std::log(static_cast<double>(est.counts[k]))) << "\n";
      }
      ordered_json j;
      j["radii"] = est.radii;
      j["counts"] = est.counts;
      j["slope"] = est.slope;
      j["residual"] = est.residual;
      emit(opts, dump(j));
      return 0;
    }

    if (cantor_test->parsed()) {
      const auto input = load_input_file(ct_file);
      const InputMetric in(input);
      const CantorImageReport report = cantor_image_test(in.metric(), ct_depth);
      ordered_json j;
      j["depth_max"] = ct_depth;
      j["b"] = report.b;
      j["count_exact"] = report.count_exact;
      j["ratios"] = report.ratios;
      j["partial_sums"] = report.partial_sums;
      j["sup_ratio"] = report.sup_ratio;
      j["verdict"] = report.verdict;
      emit(opts, dump(j));
      return 0;
    }

    if (retract->parsed()) {
      const InputMetric in(load_input_file(r_file));
      const auto g = retraction(in.metric(), parse_indices(r_subset));
      ordered_json j;
      j["image"] = g.image;
      emit(opts, dump(j));
      return 0;
    }

    if (extend->parsed()) {
      const InputMetric domain(load_input_file(e_file));
      const InputMetric codomain(load_input_file(e_codomain));
      const auto f = read_map_file(e_map);
      const auto extension = extend_lipschitz(domain.metric(), parse_indices(e_subset),
                                              codomain.metric(), f, e_lip);
      ordered_json j;
      j["image"] = extension.image;
      emit(opts, dump(j));
      return 0;
    }

    if (fab->parsed()) {
      const InputMetric a(load_input_file(f_a));
      const InputMetric b(load_input_file(f_b));
      const auto witness = f_cover_number(a.metric(), b.metric());
      ordered_json j;
      j["k"] = witness.k;
      ordered_json maps = ordered_json::array();
      for (const auto& m : witness.maps) maps.push_back(m.image);
      j["witness"] = maps;
      j["images"] = witness.images;
      if (f_experimental)
        j["note"] = "values computed on the given finite samples; no"
                    " convergence toward an underlying infinite set is implied";
      emit(opts, dump(j));
      return 0;
    }

    if (ssc->parsed()) {
      std::optional<std::vector<Rational>> exact;
      if (!ssc_exact.empty()) {
        std::vector<Rational> parsed;
        std::stringstream ss(ssc_exact);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
          const auto slash = cell.find('/');
          if (slash == std::string::npos) {
            parsed.emplace_back(std::stoll(cell), 1);
          } else {
            parsed.emplace_back(std::stoll(cell.substr(0, slash)),
                                std::stoll(cell.substr(slash + 1)));
          }
        }
        exact = std::move(parsed);
      }
      const auto report = lipschitz_onto_compatibility(
          HomogeneousSelfSimilar{ssc_q, ssc_r}, parse_doubles(ssc_ratios), ssc_tol,
          exact);
      ordered_json j;
      j["s_A"] = report.s_a;
      j["s_B"] = report.s_b;
      j["dimension_gap"] = report.dimension_gap;
      j["k"] = report.k;
      j["alphas"] = report.alphas;
      j["multiples"] = report.multiples;
      j["verdict"] = to_string(report.verdict);
      j["tol"] = report.tolerance;
      emit(opts, dump(j));
      return 0;
    }
  } catch (const CapacityError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
