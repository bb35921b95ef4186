#include <atlas/error.hpp>
#include <atlas/links.hpp>

#include <algorithm>
#include <sstream>

namespace atlas {

namespace {

std::string join(const std::vector<Integer>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  return out.str();
}

void require_nvars(const WeightSystem& ws, std::size_t n, const char* op) {
  if (ws.nvars() != n) {
    throw Error(ErrorKind::DimensionUnsupported,
                std::string(op) + " is defined for " + std::to_string(n) +
                    " variables, got " + std::to_string(ws.nvars()));
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// --- WeightSystem ----------------------------------------------------------

WeightSystem::WeightSystem(std::vector<Integer> weights, Integer degree)
    : weights_(std::move(weights)), degree_(std::move(degree)) {
  if (weights_.size() < 2)
    throw Error(ErrorKind::InvalidInput, "a weight system needs at least two weights");
  if (degree_ <= 0) throw Error(ErrorKind::InvalidInput, "degree must be positive");
  for (const auto& w : weights_)
    if (w <= 0) throw Error(ErrorKind::InvalidInput, "weights must be positive");

  const Integer g = gcd(gcd(std::span<const Integer>(weights_)), degree_);
  if (g != 1) {
    for (auto& w : weights_) w /= g;
    degree_ /= g;
  }
  if (gcd(std::span<const Integer>(weights_)) != 1) {
    throw Error(ErrorKind::InvalidInput,
                "weights have a common factor not dividing the degree");
  }
  std::sort(weights_.begin(), weights_.end());
}

Integer WeightSystem::weight_sum() const {
  Integer s = 0;
  for (const auto& w : weights_) s += w;
  return s;
}

std::string WeightSystem::key() const {
  return "w:" + join(weights_) + "@" + degree_.get_str();
}

// --- BPExponents -----------------------------------------------------------

BPExponents::BPExponents(std::vector<Integer> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.size() < 2)
    throw Error(ErrorKind::InvalidInput, "a Brieskorn-Pham link needs at least two exponents");
  for (const auto& a : exponents_) {
    if (a < 2) {
      throw Error(ErrorKind::DegenerateExponent,
                  "exponent " + a.get_str() + " < 2 gives a smooth point, not a singularity");
    }
  }
}

BPExponents::BPExponents(std::initializer_list<long> exponents)
    : BPExponents(std::vector<Integer>(exponents.begin(), exponents.end())) {}

BPExponents BPExponents::sorted() const {
  auto v = exponents_;
  std::sort(v.begin(), v.end());
  return BPExponents(std::move(v));
}

std::string BPExponents::key() const { return "bp:" + join(sorted().exponents_); }

std::string to_string(SignClass s) {
  switch (s) {
    case SignClass::Positive: return "positive";
    case SignClass::Null: return "null";
    case SignClass::Negative: return "negative";
  }
  return "?";
}

std::string to_string(Pi1Class c) {
  switch (c) {
    case Pi1Class::Finite: return "finite";
    case Pi1Class::InfiniteNilpotent: return "infinite-nilpotent";
    case Pi1Class::Infinite: return "infinite";
  }
  return "?";
}

// --- MonomialMatrix --------------------------------------------------------

MonomialMatrix::MonomialMatrix(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty())
    throw Error(ErrorKind::InvalidInput, "monomial matrix is empty");
  const std::size_t n = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "monomial rows differ in length");
    for (const auto& e : row)
      if (e < 0) throw Error(ErrorKind::InvalidInput, "negative monomial exponent");
  }
}

MonomialMatrix MonomialMatrix::brieskorn_pham(const BPExponents& a) {
  std::vector<std::vector<Integer>> rows(a.size(), std::vector<Integer>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) rows[i][i] = a[i];
  return MonomialMatrix(std::move(rows));
}

// --- operations ------------------------------------------------------------

WeightSystem bp_link(const BPExponents& a) {
  const Integer d = lcm(std::span<const Integer>(a.values()));
  std::vector<Integer> w;
  w.reserve(a.size());
  for (const auto& ai : a.values()) w.push_back(d / ai);
  return WeightSystem(std::move(w), d);
}

SignClass classify_sign(const WeightSystem& ws) {
  const int s = sgn(Integer(ws.degree() - ws.weight_sum()));
  if (s < 0) return SignClass::Positive;
  if (s == 0) return SignClass::Null;
  return SignClass::Negative;
}

SignClass classify_sign(const BPExponents& a) {
  Rational sum = 0;
  for (const auto& ai : a.values()) sum += Rational(1, ai);
  const int s = cmp(sum, 1);
  if (s > 0) return SignClass::Positive;
  if (s == 0) return SignClass::Null;
  return SignClass::Negative;
}

WeightSystem solve_weights(const MonomialMatrix& m, const std::optional<Integer>& required_degree) {
  const std::size_t n = m.nvars();
  // Unknowns (w_0, ..., w_{n-1}, d); each row reads m_i . w - d = 0.
  std::vector<std::vector<Rational>> a;
  a.reserve(m.rows().size());
  for (const auto& row : m.rows()) {
    std::vector<Rational> r(row.begin(), row.end());
    r.emplace_back(-1);
    a.push_back(std::move(r));
  }
  const auto pivots = row_reduce(a);
  if (pivots.size() < n) {
    throw Error(ErrorKind::RankDeficient,
                "monomials determine the weights only up to a " +
                    std::to_string(n + 1 - pivots.size()) + "-dimensional family");
  }
  if (pivots.size() == n + 1)
    throw Error(ErrorKind::NoPositiveSolution, "monomials admit only the zero weight vector");

  std::size_t free_col = 0;
  while (free_col < pivots.size() && pivots[free_col] == free_col) ++free_col;
  std::vector<Rational> x(n + 1, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free_col];

  Integer den = 1;
  for (const auto& q : x) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> v;
  v.reserve(n + 1);
  for (const auto& q : x) v.emplace_back(q * den);
  Integer g = gcd(std::span<const Integer>(v));
  if (v.back() < 0) g = -g;
  for (auto& z : v) z /= g;

  const Integer d = v.back();
  v.pop_back();
  if (d <= 0 || std::any_of(v.begin(), v.end(), [](const Integer& w) { return w <= 0; })) {
    throw Error(ErrorKind::NoPositiveSolution, "weighted degree forces a nonpositive weight");
  }
  if (required_degree && (*required_degree <= 0 || *required_degree % d != 0)) {
    throw Error(ErrorKind::NoPositiveSolution,
                "no integral weights of degree " + required_degree->get_str() +
                    "; primitive degree is " + d.get_str());
  }
  return WeightSystem(std::move(v), d);
}

Integer count_monomials(const WeightSystem& ws) {
  constexpr long kMaxDegree = 100'000'000;
  if (ws.degree() > kMaxDegree)
    throw Error(ErrorKind::BoundsTooLarge, "degree too large to count monomials");
  const auto d = static_cast<std::size_t>(ws.degree().get_ui());
  std::vector<Integer> ways(d + 1, 0);
  ways[0] = 1;
  for (const auto& wz : ws.weights()) {
    const auto w = static_cast<std::size_t>(wz.get_ui());
    for (std::size_t t = w; t <= d; ++t) ways[t] += ways[t - w];
  }
  return ways[d];
}

bool is_well_formed(const WeightSystem& ws) {
  require_nvars(ws, 4, "well-formedness");
  const auto& w = ws.weights();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (gcd(gcd(w[i], w[j]), w[k]) != 1) return false;
  return true;
}

Pi1Class pi1_class(const WeightSystem& ws) {
  require_nvars(ws, 3, "pi1_class");
  const int s = cmp(ws.degree(), ws.weight_sum());
  if (s < 0) return Pi1Class::Finite;
  if (s == 0) return Pi1Class::InfiniteNilpotent;
  return Pi1Class::Infinite;
}

std::string AdeLabel::to_string() const {
  const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, f) + "_" + std::to_string(index);
}

std::optional<AdeLabel> ade_match(const WeightSystem& ws) {
  if (ws.nvars() != 3 || classify_sign(ws) != SignClass::Positive) return std::nullopt;

  auto row = [](long e0, long e1, long e2) {
    return std::vector<Integer>{e0, e1, e2};
  };
  auto matches = [&](std::vector<std::vector<Integer>> rows) {
    return solve_weights(MonomialMatrix(std::move(rows))) == ws;
  };

  // The table's weighted degree is p or 2p for A_{p-1} and 2m for D_m, so the
  // parameter is pinned by d up to a factor of two.
  const Integer& d = ws.degree();
  std::vector<Integer> candidates{d};
  if (d % 2 == 0) candidates.push_back(d / 2);
  for (const auto& p : candidates) {
    if (p < 2 || !p.fits_slong_p()) continue;
    if (matches({row(p.get_si(), 0, 0), row(0, 2, 0), row(0, 0, 2)}))
      return AdeLabel{AdeLabel::Family::A, p.get_si() - 1};
  }
  for (const auto& m : candidates) {
    if (m < 3 || !m.fits_slong_p()) continue;
    if (matches({row(2, 1, 0), row(0, m.get_si(), 0), row(0, 0, 2)}))
      return AdeLabel{AdeLabel::Family::D, m.get_si()};
  }
  if (matches({row(4, 0, 0), row(0, 3, 0), row(0, 0, 2)})) return AdeLabel{AdeLabel::Family::E, 6};
  if (matches({row(3, 0, 0), row(1, 3, 0), row(0, 0, 2)})) return AdeLabel{AdeLabel::Family::E, 7};
  if (matches({row(5, 0, 0), row(0, 3, 0), row(0, 0, 2)})) return AdeLabel{AdeLabel::Family::E, 8};
  return std::nullopt;
}

}  // namespace atlas
