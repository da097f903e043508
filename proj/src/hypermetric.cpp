#include "hypermet/hypermetric.hpp"

#include <algorithm>

#include "hypermet/error.hpp"

namespace hypermet {

DistanceVector::DistanceVector(std::size_t n, RatVector entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != pair_count(n))
    throw Error(ErrorCode::DimensionMismatch, "distance vector for n = " + std::to_string(n) + " needs " +
                                                  std::to_string(pair_count(n)) + " entries");
}

std::size_t DistanceVector::pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // rows 0..i-1 contribute (n - r) pairs each
  return i * n - i * (i - 1) / 2 + (j - i - 1);
}

Rational DistanceVector::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  return entries_[pair_index(n_, i, j)];
}

DistanceVector DistanceVector::scaled(const Rational& factor) const {
  RatVector e = entries_;
  for (auto& x : e) x *= factor;
  return DistanceVector(n_, std::move(e));
}

DistanceVector DistanceVector::restricted(const std::vector<std::size_t>& indices) const {
  if (indices.empty()) throw Error(ErrorCode::InvalidArgument, "restriction to an empty point set");
  const std::size_t m = indices.size() - 1;
  RatVector e;
  e.reserve(pair_count(m));
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b) e.push_back((*this)(indices[a], indices[b]));
  return DistanceVector(m, std::move(e));
}

bool DistanceVector::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x >= 0; });
}

bool DistanceVector::has_zero_entry() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

BVector::BVector(IntVector entries) : b_(std::move(entries)) {
  Integer s = 0;
  for (const auto& x : b_) s += x;
  if (s != 1) throw Error(ErrorCode::SumOfBNotOne, "b-vector " + format_vector(b_) + " sums to " + to_string(s));
}

BVector::BVector(std::initializer_list<long> entries)
    : BVector([&] {
        IntVector v;
        for (long x : entries) v.emplace_back(x);
        return v;
      }()) {}

BVector BVector::unit(std::size_t points, std::size_t i) {
  IntVector v(points);
  v[i] = 1;
  return BVector(std::move(v));
}

BVector BVector::from_offsets(std::size_t origin, const IntVector& w) {
  IntVector b(w.size() + 1);
  Integer s = 0;
  for (std::size_t k = 0, j = 0; k < b.size(); ++k) {
    if (k == origin) continue;
    b[k] = w[j++];
    s += b[k];
  }
  b[origin] = 1 - s;
  return BVector(std::move(b));
}

bool BVector::is_unit() const {
  std::size_t nonzero = 0;
  for (const auto& x : b_)
    if (x != 0) ++nonzero;
  return nonzero == 1;
}

std::string format_bvector(const BVector& b) { return format_vector(b.entries()); }

RatMatrix gram_of(const DistanceVector& d, std::size_t origin) {
  const std::size_t n = d.n();
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i <= n; ++i)
    if (i != origin) others.push_back(i);
  RatMatrix g(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t i = others[a], j = others[b];
      Rational v = (d(i, origin) + d(j, origin) - d(i, j)) / 2;
      g(a, b) = v;
      g(b, a) = v;
    }
  return g;
}

Circumsphere circumsphere(const RatMatrix& gram) {
  if (!is_positive_definite(gram))
    throw Error(ErrorCode::DegenerateGram, "Gram matrix of rank " + std::to_string(rank(gram)) +
                                               " is not positive definite");
  RatVector half = gram.diagonal();
  for (auto& x : half) x /= 2;
  Circumsphere s;
  s.alpha = solve_linear(gram, half).particular;
  s.radius2 = quadratic(gram, s.alpha);
  return s;
}

Rational hyp_value(const BVector& b, const DistanceVector& d) {
  if (b.size() != d.points())
    throw Error(ErrorCode::DimensionMismatch, "b-vector length " + std::to_string(b.size()) + " vs " +
                                                  std::to_string(d.points()) + " points");
  Rational h = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      h += Rational(b[i] * b[j]) * d(i, j);
    }
  }
  return h;
}

SphereIdentity sphere_identity_check(const BVector& b, const DistanceVector& d) {
  if (b.size() != d.points()) throw Error(ErrorCode::DimensionMismatch, "b-vector length");
  SphereIdentity out;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out.double_sum += Rational(b[i] * b[j]) * d(i, j);

  RatMatrix g = gram_of(d);
  Circumsphere s = circumsphere(g);
  RatVector offset(d.n());  // Σ b_i v_i - c in generator coordinates
  for (std::size_t i = 0; i < d.n(); ++i) offset[i] = Rational(b[i + 1]) - s.alpha[i];
  out.sphere_side = 2 * (s.radius2 - quadratic(g, offset));
  return out;
}

std::vector<BVector> ann(const DistanceVector& d, const EnumerationBudget& budget) {
  if (d.has_zero_entry()) throw Error(ErrorCode::DegenerateGram, "coincident points (zero distance)");
  RatMatrix g = gram_of(d);
  Circumsphere s = circumsphere(g);
  std::vector<BVector> out;
  for (const auto& w : cvp_at_exact_radius(CVPQuery{g, s.alpha, s.radius2}, budget))
    out.push_back(BVector::from_offsets(0, w));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Fn>
auto with_reducible_origin(const DistanceVector& d, Fn&& fn) {
  if (!d.nonnegative()) throw Error(ErrorCode::InvalidArgument, "distance vector has a negative entry");
  // Semidefinite input may only reduce integrally around some other origin.
  for (std::size_t origin = 0; origin <= d.n(); ++origin) {
    try {
      return fn(origin);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PsdIrreducible) throw;
    }
  }
  throw Error(ErrorCode::PsdIrreducible, "no affine subfamily expresses all points integrally");
}

InhomogeneousForm violation_form(const DistanceVector& d, std::size_t origin) {
  // -H(b)d = wᵀGw - diag(G)ᵀw for b = from_offsets(origin, w).
  RatMatrix g = gram_of(d, origin);
  RatVector diag = g.diagonal();
  return InhomogeneousForm{std::move(g), std::move(diag), Rational(0)};
}

}  // namespace

HypermetricVerdict is_hypermetric(const DistanceVector& d, const EnumerationBudget& budget) {
  return with_reducible_origin(d, [&](std::size_t origin) {
    NegativeSearch s = find_negative_points(violation_form(d, origin), false, budget);
    HypermetricVerdict v;
    v.form_class = s.form_class;
    v.dimension = s.rank;
    if (!s.witnesses.empty()) {
      v.hypermetric = false;
      v.violation = BVector::from_offsets(origin, s.witnesses.front());
    }
    return v;
  });
}

std::vector<BVector> hypermetric_violations(const DistanceVector& d, const EnumerationBudget& budget) {
  return with_reducible_origin(d, [&](std::size_t origin) {
    NegativeSearch s = find_negative_points(violation_form(d, origin), true, budget);
    std::vector<BVector> out;
    for (const auto& w : s.witnesses) out.push_back(BVector::from_offsets(origin, w));
    std::sort(out.begin(), out.end());
    return out;
  });
}

std::vector<BVector> triangle_bvectors(std::size_t n) {
  if (n < 2) return {};
  std::vector<BVector> out;
  const std::size_t p = n + 1;
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        if (i == k || j == k) continue;
        IntVector b(p);
        b[i] = 1;
        b[j] = 1;
        b[k] = -1;
        out.emplace_back(std::move(b));
      }
  std::sort(out.begin(), out.end());
  return out;
}

Integer lovasz_bound(std::size_t n) {
  Integer fact, binom;
  mpz_fac_ui(fact.get_mpz_t(), n);
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  Integer num = fact << static_cast<mp_bitcnt_t>(n);
  return num / binom;
}

HypermetricVerdict brute_force_is_hypermetric(const DistanceVector& d, long bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "brute-force bound must be positive");
  const std::size_t n = d.n();
  // Scale to integers so the inner loop is pure integer arithmetic.
  Integer l = 1;
  for (const auto& x : d.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> di(d.entries().size());
  for (std::size_t k = 0; k < di.size(); ++k) di[k] = d.entries()[k].get_num() * (l / d.entries()[k].get_den());

  HypermetricVerdict v;
  v.dimension = rank(gram_of(d));
  std::vector<long> b(n + 1, -bound);
  Integer h;
  for (;;) {
    long rest = 1;
    for (std::size_t i = 1; i <= n; ++i) rest -= b[i];
    b[0] = rest;
    if (rest >= -bound && rest <= bound) {
      h = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        if (b[i] == 0) continue;
        for (std::size_t j = i + 1; j <= n; ++j)
          if (b[j] != 0) h += di[DistanceVector::pair_index(n, i, j)] * (b[i] * b[j]);
      }
      if (h > 0) {
        v.hypermetric = false;
        IntVector bb(b.begin(), b.end());
        v.violation = BVector(std::move(bb));
        return v;
      }
    }
    std::size_t k = n;
    while (k >= 1 && b[k] == bound) b[k--] = -bound;
    if (k == 0) break;
    ++b[k];
  }
  return v;
}

}  // namespace hypermet
