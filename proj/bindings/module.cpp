#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fractlip/cover.hpp"
#include "fractlip/fractal_gen.hpp"
#include "fractlip/holder.hpp"
#include "fractlip/lip_cover.hpp"
#include "fractlip/min_chain.hpp"
#include "fractlip/selfsimilar.hpp"
#include "fractlip/ultra.hpp"

namespace py = pybind11;
using namespace fractlip;

namespace {

MetricKind kind_from_string(const std::string& name) {
  if (name == "euclidean") return MetricKind::euclidean;
  if (name == "chebyshev") return MetricKind::chebyshev;
  throw BadInput("metric must be 'euclidean' or 'chebyshev'");
}

PointCloud make_cloud(const std::vector<std::vector<double>>& points,
                      const std::string& metric) {
  PointCloud cloud;
  cloud.points = points;
  cloud.kind = kind_from_string(metric);
  cloud.arity();
  return cloud;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chain energies, minimal-order parametrizations, covering numbers "
            "and Lipschitz cover diagnostics on finite metric spaces.";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<PointCloud>(m, "PointCloud")
      .def(py::init(&make_cloud), py::arg("points"),
           py::arg("metric") = "euclidean")
      .def_readonly("points", &PointCloud::points)
      .def_property_readonly("metric",
                             [](const PointCloud& c) {
                               return c.kind == MetricKind::euclidean ? "euclidean"
                                                                      : "chebyshev";
                             })
      .def("__len__", &PointCloud::size);

  py::class_<FiniteMetricSpace>(m, "FiniteMetricSpace")
      .def_static("validate", &FiniteMetricSpace::validate, py::arg("dist"),
                  py::arg("labels") = std::vector<std::string>{})
      .def_static("from_points", &FiniteMetricSpace::from_points, py::arg("cloud"))
      .def("distance", &FiniteMetricSpace::distance)
      .def("matrix", &FiniteMetricSpace::matrix)
      .def_property_readonly("labels", &FiniteMetricSpace::labels)
      .def_property_readonly("diameter", &FiniteMetricSpace::diameter)
      .def("__len__", &FiniteMetricSpace::size);

  m.def("scale", &scale, py::arg("space"), py::arg("r"));

  py::class_<GappedUnion>(m, "GappedUnion")
      .def_readonly("space", &GappedUnion::space)
      .def_readonly("part", &GappedUnion::part);
  m.def("gapped_union", &gapped_union, py::arg("parts"), py::arg("gap"));

  // Fixture generators.
  m.def("cantor_endpoints", &cantor_endpoints, py::arg("depth"),
        py::arg("hole") = 1.0 / 3.0);
  py::class_<IfsSpec::Map>(m, "IfsMap")
      .def(py::init([](double ratio, std::vector<double> translation) {
             return IfsSpec::Map{ratio, std::move(translation)};
           }),
           py::arg("ratio"), py::arg("translation"));
  py::class_<IfsSpec>(m, "IfsSpec")
      .def(py::init([](std::vector<IfsSpec::Map> maps, std::size_t arity) {
             return IfsSpec{std::move(maps), arity};
           }),
           py::arg("maps"), py::arg("arity") = 1);
  m.def("ifs_sample", &ifs_sample, py::arg("spec"), py::arg("depth"));
  py::class_<CarpetSpec>(m, "CarpetSpec")
      .def(py::init([](std::size_t rows, std::size_t cols,
                       std::vector<std::pair<std::size_t, std::size_t>> cells) {
             CarpetSpec spec{rows, cols, std::move(cells)};
             spec.validate();
             return spec;
           }),
           py::arg("rows"), py::arg("cols"), py::arg("cells"));
  m.def("carpet_sample", &carpet_sample, py::arg("spec"), py::arg("depth"));
  m.def("mcmullen_dimension", &mcmullen_dimension, py::arg("spec"));
  m.def("ultrametric_tree_space", &ultrametric_tree_space, py::arg("arities"),
        py::arg("level_diams"));
  m.def("random_cloud", &random_cloud, py::arg("n"), py::arg("dim"), py::arg("seed"));

  // Chain energy.
  m.def("chain_energy",
        [](const FiniteMetricSpace& s, const std::vector<std::size_t>& order,
           double exp) { return chain_energy(s, order, exp); },
        py::arg("space"), py::arg("order"), py::arg("s"));
  m.def("chain_energy_bruteforce",
        [](const FiniteMetricSpace& s, const std::vector<std::size_t>& order,
           double exp) { return chain_energy_bruteforce(s, order, exp); },
        py::arg("space"), py::arg("order"), py::arg("s"));
  m.def("chain_energy_prefixes",
        [](const FiniteMetricSpace& s, const std::vector<std::size_t>& order,
           double exp) { return chain_energy_prefixes(s, order, exp); },
        py::arg("space"), py::arg("order"), py::arg("s"));
  py::class_<OrderedChain>(m, "OrderedChain")
      .def_readonly("order", &OrderedChain::order)
      .def_readonly("s", &OrderedChain::s)
      .def_readonly("value", &OrderedChain::value);
  m.def("make_chain",
        [](const FiniteMetricSpace& s, std::vector<std::size_t> order, double exp) {
          return make_chain(s, std::move(order), exp);
        },
        py::arg("space"), py::arg("order"), py::arg("s"));

  // Minimal orders.
  py::class_<MinChainResult>(m, "MinChainResult")
      .def_readonly("value", &MinChainResult::value)
      .def_readonly("order", &MinChainResult::order)
      .def_readonly("exact", &MinChainResult::exact)
      .def_readonly("method", &MinChainResult::method)
      .def_readonly("nodes_explored", &MinChainResult::nodes_explored);
  m.def("min_chain_exact",
        [](const FiniteMetricSpace& s, double exp, std::uint64_t budget,
           std::size_t cap) { return min_chain_exact(s, exp, budget, cap); },
        py::arg("space"), py::arg("s"), py::arg("node_budget") = 0,
        py::arg("max_points") = 12);
  m.def("min_chain_line", &min_chain_line, py::arg("cloud"), py::arg("s"),
        py::arg("cross_check_cap") = 12);
  m.def("min_chain_heuristic",
        [](const FiniteMetricSpace& s, double exp, const std::string& strategy,
           double u) {
          ChainHeuristic h;
          if (strategy == "nearest_neighbor") h = ChainHeuristic::nearest_neighbor;
          else if (strategy == "two_opt") h = ChainHeuristic::two_opt;
          else if (strategy == "net_tree") h = ChainHeuristic::net_tree;
          else throw BadInput("unknown strategy '" + strategy + "'");
          return min_chain_heuristic(s, exp, h, u);
        },
        py::arg("space"), py::arg("s"), py::arg("strategy") = "two_opt",
        py::arg("u") = 0.5);

  py::class_<NetTree>(m, "NetTree")
      .def_readonly("u", &NetTree::u)
      .def_readonly("diam", &NetTree::diam)
      .def_readonly("radii", &NetTree::radii)
      .def_readonly("levels", &NetTree::levels)
      .def_readonly("parents", &NetTree::parents)
      .def_property_readonly("depth", &NetTree::depth)
      .def("level_sizes", &NetTree::level_sizes);
  py::class_<NetTreeOrder>(m, "NetTreeOrder")
      .def_readonly("order", &NetTreeOrder::order)
      .def_readonly("tree", &NetTreeOrder::tree);
  m.def("net_tree_order",
        [](const FiniteMetricSpace& s, double u) { return net_tree_order(s, u); },
        py::arg("space"), py::arg("u"));
  m.def("net_cover_bound",
        py::overload_cast<const std::vector<double>&, double, double, double>(
            &net_cover_bound),
        py::arg("level_sizes"), py::arg("s"), py::arg("u"), py::arg("diam"));
  m.def("net_cover_bound",
        py::overload_cast<const NetTree&, double>(&net_cover_bound),
        py::arg("tree"), py::arg("s"));
  m.def("min_chain_energy",
        [](const FiniteMetricSpace& s, double exp, const std::string& mode) {
          return min_chain_energy(
              s, exp, mode == "exact" ? MinChainMode::exact : MinChainMode::heuristic);
        },
        py::arg("space"), py::arg("s"), py::arg("mode") = "exact");

  py::class_<ProfileRow>(m, "ProfileRow")
      .def_readonly("s", &ProfileRow::s)
      .def_readonly("delta", &ProfileRow::delta)
      .def_readonly("method", &ProfileRow::method)
      .def_readonly("bound", &ProfileRow::bound);
  m.def("dimension_profile",
        [](const FiniteMetricSpace& s, const std::vector<double>& grid, double u) {
          return dimension_profile(s, grid, u);
        },
        py::arg("space"), py::arg("s_grid"), py::arg("u"));

  // Parametrizations.
  py::class_<HolderParametrization>(m, "HolderParametrization")
      .def_readonly("anchors", &HolderParametrization::anchors)
      .def_readonly("images", &HolderParametrization::images)
      .def_readonly("alpha", &HolderParametrization::alpha)
      .def_readonly("constant", &HolderParametrization::constant)
      .def_readonly("ell", &HolderParametrization::ell);
  m.def("build_parametrization",
        [](const FiniteMetricSpace& s, const std::vector<std::size_t>& order,
           double exp) { return build_parametrization(s, order, exp); },
        py::arg("space"), py::arg("order"), py::arg("s"));
  py::class_<HolderCertificate>(m, "HolderCertificate")
      .def_readonly("worst_c", &HolderCertificate::worst_c)
      .def_readonly("witness_i", &HolderCertificate::witness_i)
      .def_readonly("witness_j", &HolderCertificate::witness_j);
  m.def("verify_holder",
        [](const std::vector<double>& anchors, const FiniteMetricSpace& target,
           const std::vector<std::size_t>& map, double alpha) {
          return verify_holder(anchors, target, map, alpha);
        },
        py::arg("anchors"), py::arg("target"), py::arg("map"), py::arg("alpha"));

  // Covering numbers.
  py::class_<CoverReport>(m, "CoverReport")
      .def_readonly("r", &CoverReport::r)
      .def_readonly("count", &CoverReport::count)
      .def_readonly("centers", &CoverReport::centers)
      .def_readonly("exact", &CoverReport::exact);
  m.def("covering_number_greedy",
        [](const FiniteMetricSpace& s, double r) {
          return covering_number_greedy(s, r);
        },
        py::arg("space"), py::arg("r"));
  m.def("covering_number_greedy",
        [](const PointCloud& cloud, double r) {
          PointCloudMetric metric(cloud);
          return covering_number_greedy(metric, r);
        },
        py::arg("cloud"), py::arg("r"));
  m.def("covering_number_exact",
        [](const FiniteMetricSpace& s, double r, std::size_t cap) {
          return covering_number_exact(s, r, cap);
        },
        py::arg("space"), py::arg("r"), py::arg("size_cap") = 64);

  py::class_<BoxDimEstimate>(m, "BoxDimEstimate")
      .def_readonly("radii", &BoxDimEstimate::radii)
      .def_readonly("counts", &BoxDimEstimate::counts)
      .def_readonly("slope", &BoxDimEstimate::slope)
      .def_readonly("residual", &BoxDimEstimate::residual);
  m.def("box_dimension_estimate",
        [](const FiniteMetricSpace& s, const std::vector<double>& radii) {
          return box_dimension_estimate(s, radii);
        },
        py::arg("space"), py::arg("radii"));
  m.def("box_dimension_estimate",
        [](const PointCloud& cloud, const std::vector<double>& radii) {
          PointCloudMetric metric(cloud);
          return box_dimension_estimate(metric, radii);
        },
        py::arg("cloud"), py::arg("radii"));

  py::class_<CantorImageReport>(m, "CantorImageReport")
      .def_readonly("b", &CantorImageReport::b)
      .def_readonly("count_exact", &CantorImageReport::count_exact)
      .def_readonly("ratios", &CantorImageReport::ratios)
      .def_readonly("partial_sums", &CantorImageReport::partial_sums)
      .def_readonly("sup_ratio", &CantorImageReport::sup_ratio)
      .def_readonly("verdict", &CantorImageReport::verdict);
  m.def("cantor_image_test",
        [](const FiniteMetricSpace& s, std::size_t depth) {
          return cantor_image_test(s, depth);
        },
        py::arg("space"), py::arg("depth_max"));
  m.def("cantor_image_test",
        [](const PointCloud& cloud, std::size_t depth) {
          PointCloudMetric metric(cloud);
          return cantor_image_test(metric, depth);
        },
        py::arg("cloud"), py::arg("depth_max"));

  // Ultrametric tools.
  py::class_<MapTable>(m, "MapTable")
      .def(py::init([](std::vector<std::size_t> image) {
             return MapTable{std::move(image)};
           }),
           py::arg("image"))
      .def_readonly("image", &MapTable::image);
  py::class_<UltrametricCheck>(m, "UltrametricCheck")
      .def_readonly("ok", &UltrametricCheck::ok)
      .def_readonly("x", &UltrametricCheck::x)
      .def_readonly("y", &UltrametricCheck::y)
      .def_readonly("z", &UltrametricCheck::z);
  m.def("is_ultrametric",
        [](const FiniteMetricSpace& s) { return is_ultrametric(s); },
        py::arg("space"));
  py::class_<LipschitzCheck>(m, "LipschitzCheck")
      .def_readonly("ok", &LipschitzCheck::ok)
      .def_readonly("worst_ratio", &LipschitzCheck::worst_ratio)
      .def_readonly("witness_i", &LipschitzCheck::witness_i)
      .def_readonly("witness_j", &LipschitzCheck::witness_j);
  m.def("verify_lipschitz",
        [](const FiniteMetricSpace& dom, const FiniteMetricSpace& cod,
           const MapTable& f, double L) { return verify_lipschitz(dom, cod, f, L); },
        py::arg("domain"), py::arg("codomain"), py::arg("f"), py::arg("L"));
  m.def("retraction",
        [](const FiniteMetricSpace& s, const std::vector<std::size_t>& subset) {
          return retraction(s, subset);
        },
        py::arg("space"), py::arg("subset"));
  m.def("extend_lipschitz",
        [](const FiniteMetricSpace& dom, const std::vector<std::size_t>& subset,
           const FiniteMetricSpace& cod, const MapTable& f, double L) {
          return extend_lipschitz(dom, subset, cod, f, L);
        },
        py::arg("domain"), py::arg("subset"), py::arg("codomain"), py::arg("f"),
        py::arg("L"));
  m.def("ball_partition_check",
        [](const FiniteMetricSpace& s, double r) {
          return ball_partition_check(s, r);
        },
        py::arg("space"), py::arg("r"));

  // Lipschitz-1 cover numbers.
  py::class_<ImageFamilyEntry>(m, "ImageFamilyEntry")
      .def_readonly("image_mask", &ImageFamilyEntry::image_mask)
      .def_readonly("witness_map", &ImageFamilyEntry::witness_map);
  m.def("lip1_image_family",
        [](const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
          return lip1_image_family(a, b);
        },
        py::arg("a"), py::arg("b"));
  py::class_<CoverWitness>(m, "CoverWitness")
      .def_readonly("k", &CoverWitness::k)
      .def_readonly("maps", &CoverWitness::maps)
      .def_readonly("images", &CoverWitness::images);
  m.def("f_cover_number",
        [](const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
          return f_cover_number(a, b);
        },
        py::arg("a"), py::arg("b"));

  // Self-similar compatibility.
  py::class_<HomogeneousSelfSimilar>(m, "HomogeneousSelfSimilar")
      .def(py::init([](std::uint64_t q, double r) {
             return HomogeneousSelfSimilar{q, r};
           }),
           py::arg("q"), py::arg("r"))
      .def_readonly("branches", &HomogeneousSelfSimilar::branches)
      .def_readonly("ratio", &HomogeneousSelfSimilar::ratio)
      .def_property_readonly("dimension", &HomogeneousSelfSimilar::dimension);
  m.def("max_integer_root", &max_integer_root, py::arg("q"));
  m.def("moran_dimension", &moran_dimension, py::arg("ratios"));
  py::class_<Rational>(m, "Rational")
      .def(py::init<long long, long long>(), py::arg("num"), py::arg("den") = 1)
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("is_integer", &Rational::is_integer);
  py::class_<PowerSumCheck>(m, "PowerSumCheck")
      .def_readonly("sums_to_one", &PowerSumCheck::sums_to_one)
      .def_readonly("all_integer", &PowerSumCheck::all_integer);
  m.def("power_sum_check", &power_sum_check, py::arg("q"), py::arg("exponents"));
  py::class_<CompatibilityReport>(m, "CompatibilityReport")
      .def_readonly("s_a", &CompatibilityReport::s_a)
      .def_readonly("s_b", &CompatibilityReport::s_b)
      .def_readonly("dimension_gap", &CompatibilityReport::dimension_gap)
      .def_readonly("k", &CompatibilityReport::k)
      .def_readonly("alphas", &CompatibilityReport::alphas)
      .def_readonly("multiples", &CompatibilityReport::multiples)
      .def_property_readonly("verdict",
                             [](const CompatibilityReport& r) {
                               return to_string(r.verdict);
                             })
      .def_readonly("tolerance", &CompatibilityReport::tolerance);
  m.def("lipschitz_onto_compatibility",
        [](const HomogeneousSelfSimilar& a, const std::vector<double>& ratios,
           double tol, const std::optional<std::vector<Rational>>& exact) {
          return lipschitz_onto_compatibility(a, ratios, tol, exact);
        },
        py::arg("a"), py::arg("b_ratios"), py::arg("tol") = 1e-9,
        py::arg("exact_exponents") = std::nullopt);
}
