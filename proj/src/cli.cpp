#include "hypermet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "hypermet/error.hpp"
#include "hypermet/io.hpp"

namespace hypermet {

namespace {

std::string join(const IntVector& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
    case ErrorCode::DimensionMismatch:
      return kUsage;
    case ErrorCode::BudgetExhausted:
      return kBudget;
    default:
      return kNegative;
  }
}

struct Options {
  std::uint64_t nodes = EnumerationBudget{}.node_limit;
  std::size_t iterations = ExploreBudget{}.max_iterations;
  std::size_t threads = 1;
  std::string out;
  bool orbits = false;
  bool projective = false;
  bool from_ray = false;
  bool inside = false;
  std::size_t limit = 0;
  std::string basis;
  std::string target;
  std::string r2;
  std::vector<std::string> files;
};

EnumerationBudget nodes_of(const Options& o) { return EnumerationBudget{o.nodes}; }

int cmd_check(const Options& o, std::ostream& out) {
  auto d = load_distance_vector(o.files.at(0));
  auto v = is_hypermetric(d, nodes_of(o));
  if (!v.hypermetric) {
    out << "VIOLATED b=" << format_bvector(*v.violation) << '\n';
    return kNegative;
  }
  out << "HYPERMETRIC";
  if (v.dimension < d.n()) out << " dimension=" << v.dimension;
  out << '\n';
  return kAffirmative;
}

int cmd_ann(const Options& o, std::ostream& out, std::ostream& err) {
  auto d = load_distance_vector(o.files.at(0));
  RatMatrix g = gram_of(d);
  if (d.has_zero_entry() || !is_positive_definite(g)) {
    err << "degenerate-gram: Gram matrix has rank " << rank(g) << " of " << d.n() << '\n';
    return kNegative;
  }
  auto v = ann(d, nodes_of(o));
  out << v.size() << '\n';
  for (const auto& b : v) out << join(b.entries()) << '\n';
  return kAffirmative;
}

int cmd_extreme(const Options& o, std::ostream& out) {
  auto p = load_polytope(o.files.at(0), nodes_of(o));
  auto e = is_extreme_polytope(p);
  out << (e.extreme ? "EXTREME" : "NOT EXTREME") << " rank=" << e.rank << '\n';
  return e.extreme ? kAffirmative : kNegative;
}

int cmd_aut(const Options& o, std::ostream& out) {
  auto p = load_polytope(o.files.at(0), nodes_of(o));
  auto g = automorphism_group(distance_colored_graph(p, o.projective));
  out << "|Aut| = " << to_string(g.order) << '\n';
  out << "generators " << g.generators.size() << '\n';
  for (const auto& gen : g.generators) out << join(gen) << '\n';
  return kAffirmative;
}

int cmd_iso(const Options& o, std::ostream& out) {
  auto a = load_polytope(o.files.at(0), nodes_of(o));
  auto b = load_polytope(o.files.at(1), nodes_of(o));
  auto perm = are_isomorphic(a, b, o.projective);
  if (!perm) {
    out << "NOT ISOMORPHIC\n";
    return kNegative;
  }
  out << "ISOMORPHIC\n" << join(*perm) << '\n';
  return kAffirmative;
}

int cmd_bases(const Options& o, std::ostream& out) {
  auto p = load_polytope(o.files.at(0), nodes_of(o));
  auto bases = find_affine_bases(p, o.limit);
  out << "bases " << bases.size() << '\n';
  if (!o.orbits) {
    for (const auto& s : bases) out << join(s) << '\n';
    return kAffirmative;
  }
  // Union of bases along the generators of Aut(P).
  auto group = automorphism_group(p);
  std::map<std::vector<std::size_t>, std::size_t> where;
  for (std::size_t i = 0; i < bases.size(); ++i) where[bases[i]] = i;
  std::vector<std::size_t> parent(bases.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool partial = false;
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (const auto& g : group.generators) {
      std::vector<std::size_t> img;
      for (auto v : bases[i]) img.push_back(g[v]);
      std::sort(img.begin(), img.end());
      auto it = where.find(img);
      if (it == where.end()) {
        partial = true;  // image lies beyond the --limit cut
        continue;
      }
      auto x = find(i), y = find(it->second);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  std::map<std::size_t, std::size_t> size;
  for (std::size_t i = 0; i < bases.size(); ++i) ++size[find(i)];
  out << "orbits " << size.size() << (partial ? " (partial: basis list truncated)" : "") << '\n';
  for (const auto& [rep, count] : size) out << "orbit size " << count << " representative " << join(bases[rep]) << '\n';
  return kAffirmative;
}

int cmd_cvp(const Options& o, std::ostream& out) {
  RatMatrix g = load_gram(o.files.at(0));
  RatVector x = parse_rational_list(o.target);
  if (x.size() != g.rows()) throw Error(ErrorCode::DimensionMismatch, "target length differs from the Gram size");
  CVPQuery q{g, x, parse_rational(o.r2)};
  auto pts = o.inside ? cvp_all_strictly_inside(q, nodes_of(o)) : cvp_at_exact_radius(q, nodes_of(o));
  out << pts.size() << '\n';
  for (const auto& w : pts) out << join(w) << '\n';
  return kAffirmative;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  f << text;
}

int cmd_explore(const Options& o, std::ostream& out) {
  ExploreBudget budget;
  budget.max_iterations = o.iterations;
  budget.enumeration = nodes_of(o);
  budget.threads = o.threads;
  ExplorationState st;
  if (o.from_ray) {
    auto d = load_distance_vector(o.files.at(0));
    st = initialize_from_ray(d.n(), primitive(d.entries()));
  } else {
    auto p = load_polytope(o.files.at(0), budget.enumeration);
    if (!o.basis.empty()) {
      std::vector<std::size_t> idx;
      for (const auto& x : parse_rational_list(o.basis)) {
        if (x.get_den() != 1 || x < 0 || x >= p.vertex_count())
          throw Error(ErrorCode::Parse, "--basis: vertex index out of range");
        idx.push_back(x.get_num().get_ui());
      }
      p = rebase(p, idx);
    }
    st = initialize(p);
  }
  auto res = explore(st, budget);
  std::ostringstream log, classes;
  write_exploration_log(log, st, res);
  write_exploration_classes(classes, st, res);
  write_file(o.out + ".log", log.str());
  write_file(o.out + ".classes", classes.str());
  out << classes.str();
  return res.complete ? kAffirmative : kBudget;
}

}  // namespace

void write_exploration_log(std::ostream& out, const ExplorationState& st, const ExplorationResult& res) {
  out << "# n " << st.n << " ray " << format_vector(st.ray) << '\n';
  out << "# iteration |F| candidate verdict ray [added b-vectors]\n";
  for (const auto& e : st.log) {
    out << e.iteration << ' ' << e.f_size << ' ' << e.candidate << ' ' << to_string(e.verdict) << ' '
        << format_vector(e.ray);
    if (!e.added.empty()) {
      out << " +" << e.added.size();
      for (const auto& b : e.added) out << ' ' << format_bvector(b);
    }
    out << '\n';
  }
  out << "# " << (res.complete ? "COMPLETE" : "INCOMPLETE") << " iterations " << res.iterations << " |F| "
      << st.cone.size() << '\n';
}

void write_exploration_classes(std::ostream& out, const ExplorationState& st, const ExplorationResult& res) {
  out << (res.complete ? "COMPLETE" : "INCOMPLETE") << '\n';
  out << "n " << st.n << '\n';
  out << "iterations " << res.iterations << '\n';
  out << "inequalities " << st.cone.size() << '\n';
  out << "neighbors " << res.neighbors.size() << '\n';
  std::vector<DelaunayPolytope> polys;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < res.neighbors.size(); ++i)
    if (res.neighbors[i].polytope) {
      polys.push_back(*res.neighbors[i].polytope);
      owner.push_back(i);
    }
  auto classes = classify_results(polys);
  out << "classes " << classes.size() << '\n';
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& k = classes[c];
    const auto& nb = res.neighbors[owner[k.representative]];
    out << "class " << c + 1 << " vertices " << k.vertex_count << " dimension " << k.dimension << " aut "
        << to_string(k.aut_order) << " extreme " << (k.extreme ? "yes" : "no") << " multiplicity "
        << k.members.size() << '\n';
    out << "  ray " << format_vector(nb.ray) << '\n';
    out << "  basis-points " << join(nb.points) << '\n';
    out << "  basis " << format_vector(polys[k.representative].basis_d.entries()) << '\n';
  }
  std::size_t no_basis = res.neighbors.size() - polys.size();
  out << "no-basis " << no_basis << '\n';
  for (const auto& nb : res.neighbors)
    if (!nb.polytope) out << "  ray " << format_vector(nb.ray) << " dimension " << nb.dimension << '\n';
  out << "unresolved " << res.unresolved.size() << '\n';
  for (const auto& r : res.unresolved) out << "  ray " << format_vector(r) << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypermetric cone and extreme Delaunay polytopes"};
  app.require_subcommand(1);
  Options o;

  auto nodes = [&](CLI::App* s) {
    s->add_option("--budget-nodes", o.nodes, "node limit per lattice enumeration")->check(CLI::PositiveNumber);
  };
  auto file = [&](CLI::App* s, const char* what) { s->add_option("file", o.files, what)->required()->expected(1); };

  auto* check = app.add_subcommand("check", "is a distance vector hypermetric");
  file(check, "distance file");
  nodes(check);
  auto* annc = app.add_subcommand("ann", "vertices of the Delaunay polytope of a distance vector");
  file(annc, "distance file");
  nodes(annc);
  auto* explorec = app.add_subcommand("explore", "adjacent extreme Delaunay polytopes");
  file(explorec, "polytope file (distance file with --from-ray)");
  nodes(explorec);
  explorec->add_option("--budget-iters", o.iterations, "outer iteration limit")->check(CLI::PositiveNumber);
  explorec->add_option("--threads", o.threads, "parallel candidate tests")->check(CLI::PositiveNumber);
  explorec->add_option("--out", o.out, "report prefix: <out>.log and <out>.classes")->required();
  explorec->add_flag("--from-ray", o.from_ray, "start from an extreme ray of the triangle cone");
  explorec->add_option("--basis", o.basis, "rebase to these vertex indices, comma-separated");
  auto* iso = app.add_subcommand("iso", "isometry test of two polytopes");
  iso->add_option("files", o.files, "two polytope files")->required()->expected(2);
  iso->add_flag("--projective", o.projective, "compare distances scaled to minimum 1");
  nodes(iso);
  auto* aut = app.add_subcommand("aut", "automorphism group order");
  file(aut, "polytope file");
  aut->add_flag("--projective", o.projective, "scale distances to minimum 1 (same group)");
  nodes(aut);
  auto* bases = app.add_subcommand("bases", "affine bases among the vertices");
  file(bases, "polytope file");
  bases->add_flag("--orbits", o.orbits, "group bases under the automorphism group");
  bases->add_option("--limit", o.limit, "stop after this many bases (0: all)");
  nodes(bases);
  auto* extreme = app.add_subcommand("extreme", "extremeness and rank of the vertex functionals");
  file(extreme, "polytope file");
  nodes(extreme);
  auto* cvp = app.add_subcommand("cvp", "lattice points at squared distance r2 from a target");
  file(cvp, "Gram file");
  cvp->add_option("--target", o.target, "comma-separated rationals")->required();
  cvp->add_option("--r2", o.r2, "squared radius")->required();
  cvp->add_flag("--inside", o.inside, "list points strictly inside instead");
  nodes(cvp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*annc) return cmd_ann(o, out, err);
    if (*explorec) return cmd_explore(o, out);
    if (*iso) return cmd_iso(o, out);
    if (*aut) return cmd_aut(o, out);
    if (*bases) return cmd_bases(o, out);
    if (*extreme) return cmd_extreme(o, out);
    if (*cvp) return cmd_cvp(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
  return kUsage;
}

}  // namespace hypermet
