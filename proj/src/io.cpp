#include "hypermet/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hypermet/error.hpp"

namespace hypermet {

namespace {

// Token stream over a whole file; '#' starts a comment.
class Tokens {
 public:
  explicit Tokens(std::istream& in) {
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      for (std::string t; ss >> t;) items_.push_back({no, std::move(t)});
    }
  }

  bool done() const { return pos_ == items_.size(); }

  std::string word(std::string_view what) { return take(what).text; }

  Rational rational(std::string_view what) {
    auto t = take(what);
    try {
      return parse_rational(t.text);
    } catch (const Error& e) {
      throw fail(t, e.detail());
    }
  }

  Integer integer(std::string_view what) {
    auto t = take(what);
    try {
      return parse_integer(t.text);
    } catch (const Error& e) {
      throw fail(t, e.detail());
    }
  }

  std::size_t count(std::string_view what, std::size_t limit = 100000) {
    const std::size_t at = pos_;
    Integer z = integer(what);
    const Item& t = items_[at];
    if (z < 0 || z > limit) throw fail(t, std::string(what) + " out of range");
    return z.get_ui();
  }

  void finish() {
    if (!done()) throw fail(items_[pos_], "unexpected trailing token");
  }

 private:
  struct Item {
    std::size_t line;
    std::string text;
  };

  const Item& take(std::string_view what) {
    if (done()) {
      std::size_t line = items_.empty() ? 1 : items_.back().line;
      throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": unexpected end of input, expected " +
                                        std::string(what));
    }
    return items_[pos_++];
  }

  static Error fail(const Item& t, const std::string& why) {
    return Error(ErrorCode::Parse, "line " + std::to_string(t.line) + ", token '" + t.text + "': " + why);
  }

  std::vector<Item> items_;
  std::size_t pos_ = 0;
};

DistanceVector distances_after_n(Tokens& t, std::size_t n) {
  RatVector e;
  for (std::size_t k = 0; k < DistanceVector::pair_count(n); ++k) e.push_back(t.rational("distance"));
  return DistanceVector(n, std::move(e));
}

template <class F>
auto with_file(const std::string& path, F f) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  try {
    return f(in);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, path + ": " + e.detail());
  }
}

}  // namespace

DistanceVector read_distance_vector(std::istream& in) {
  Tokens t(in);
  auto d = distances_after_n(t, t.count("n"));
  t.finish();
  return d;
}

void write_distance_vector(std::ostream& out, const DistanceVector& d) {
  out << d.n() << '\n';
  for (std::size_t k = 0; k < d.entries().size(); ++k) out << (k ? " " : "") << to_string(d.entries()[k]);
  out << '\n';
}

RatMatrix read_gram(std::istream& in) {
  Tokens t(in);
  const std::size_t n = t.count("n");
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = t.rational("matrix entry");
  t.finish();
  if (!g.is_symmetric()) throw Error(ErrorCode::Parse, "Gram matrix is not symmetric");
  return g;
}

DelaunayPolytope read_polytope(std::istream& in, const EnumerationBudget& budget) {
  Tokens t(in);
  std::string head = t.word("n or 'coordinates'");
  if (head == "coordinates") {
    const std::size_t k = t.count("coordinate count");
    const std::size_t m = t.count("point count");
    std::vector<RatVector> pts(m, RatVector(k));
    for (auto& p : pts)
      for (auto& x : p) x = t.rational("coordinate");
    t.finish();
    return polytope_from_coordinates(pts, budget);
  }
  Integer nz;
  try {
    nz = parse_integer(head);
  } catch (const Error&) {
    throw Error(ErrorCode::Parse, "line 1, token '" + head + "': expected n or 'coordinates'");
  }
  if (nz < 1 || nz > 1000) throw Error(ErrorCode::Parse, "line 1, token '" + head + "': n out of range");
  const std::size_t n = nz.get_ui();
  DistanceVector d = distances_after_n(t, n);
  const std::size_t m = t.count("vertex count");
  std::vector<BVector> listed;
  for (std::size_t v = 0; v < m; ++v) {
    IntVector b(n + 1);
    for (auto& x : b) x = t.integer("b-vector entry");
    try {
      listed.emplace_back(std::move(b));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "vertex " + std::to_string(v + 1) + ": " + e.detail());
    }
  }
  t.finish();
  DelaunayPolytope p = polytope_from_basis(d, budget);
  std::sort(listed.begin(), listed.end());
  if (listed != p.vertices)
    throw Error(ErrorCode::InvalidArgument, "the listed vertices (" + std::to_string(m) +
                                                ") differ from the empty-sphere vertices of the basis (" +
                                                std::to_string(p.vertex_count()) + ")");
  return p;
}

void write_polytope(std::ostream& out, const DelaunayPolytope& p) {
  write_distance_vector(out, p.basis_d);
  out << p.vertex_count() << '\n';
  for (const auto& b : p.vertices) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << to_string(b[i]);
    out << '\n';
  }
}

RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

DistanceVector load_distance_vector(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_distance_vector(in); });
}

RatMatrix load_gram(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_gram(in); });
}

DelaunayPolytope load_polytope(const std::string& path, const EnumerationBudget& budget) {
  return with_file(path, [&](std::istream& in) { return read_polytope(in, budget); });
}

}  // namespace hypermet
