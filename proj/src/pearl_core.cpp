#include "pearl/pearl_core.hpp"

#include <algorithm>
#include <sstream>

#include "pearl/errors.hpp"
#include "pearl/homology.hpp"

namespace pearl {

namespace {

int floor_mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

// -- Cochain -----------------------------------------------------------------

Cochain Cochain::basis(std::size_t generators, std::size_t g, int exponent) {
  Cochain c(generators);
  c.coeffs_.at(g) = LaurentElement::monomial(exponent);
  return c;
}

bool Cochain::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& a) { return a.is_zero(); });
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (other.size() != size()) throw InvalidData("cochain length mismatch");
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] += other.coeffs_[g];
  return *this;
}

Cochain& Cochain::operator*=(const LaurentElement& scalar) {
  for (auto& a : coeffs_) a = a * scalar;
  return *this;
}

Cochain Cochain::shifted(int exponent) const {
  Cochain out = *this;
  for (auto& a : out.coeffs_) a = a.shifted(exponent);
  return out;
}

// -- PearlComplex ------------------------------------------------------------

void check_term_degree(const std::string& what, int target_index, int mu, int source_index,
                       int shift, int N) {
  if (target_index + mu * N != source_index + shift) {
    std::ostringstream msg;
    msg << what << ": index " << target_index << " + " << mu << "*" << N
        << " != " << source_index << " + " << shift;
    throw DegreeViolation(msg.str());
  }
}

PearlComplex::PearlComplex(RingSpec ring, std::vector<Generator> generators,
                           const std::vector<ComplexTerm>& terms)
    : ring_(ring), gens_(std::move(generators)), columns_(gens_.size()) {
  for (std::size_t g = 0; g < gens_.size(); ++g)
    if (!ids_.emplace(gens_[g].id, g).second)
      throw InvalidData("duplicate generator id '" + gens_[g].id + "'");

  std::vector<std::map<std::size_t, LaurentElement>> acc(gens_.size());
  for (const auto& term : terms) {
    if (term.source >= gens_.size() || term.target >= gens_.size())
      throw InvalidData("complex term refers to a generator position out of range");
    const auto& x = gens_[term.target];
    const auto& y = gens_[term.source];
    check_term_degree("term " + y.id + " -> " + x.id, x.index, term.exponent, y.index, 1,
                      ring_.generator_degree);
    if (ring_.kind == RingKind::positive && term.exponent < 0)
      throw NotPositive("term " + y.id + " -> " + x.id + " has exponent " +
                        std::to_string(term.exponent));
    acc[term.source][term.target] += LaurentElement::monomial(term.exponent);
  }
  for (std::size_t y = 0; y < gens_.size(); ++y)
    for (auto& [x, coeff] : acc[y])
      if (!coeff.is_zero()) {
        columns_[y].emplace_back(x, coeff);
        for (int e : coeff.exponents()) terms_.push_back({x, y, e});
      }
}

std::optional<std::size_t> PearlComplex::find(std::string_view id) const {
  auto it = ids_.find(id);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t PearlComplex::position(std::string_view id) const {
  if (auto g = find(id)) return *g;
  throw UnknownGenerator(std::string(id));
}

Cochain PearlComplex::differential(const Cochain& c) const {
  if (c.size() != size()) throw InvalidData("cochain length mismatch");
  Cochain out(size());
  for (std::size_t y = 0; y < size(); ++y) {
    if (c[y].is_zero()) continue;
    for (const auto& [x, coeff] : columns_[y]) out[x] += coeff * c[y];
  }
  return out;
}

std::optional<int> PearlComplex::degree_of(const Cochain& c) const {
  std::optional<int> deg;
  for (std::size_t g = 0; g < c.size(); ++g)
    for (int e : c[g].exponents()) {
      const int k = degree(g, e);
      if (deg && *deg != k) throw InvalidData("cochain " + format(c) + " is not homogeneous");
      deg = k;
    }
  return deg;
}

int PearlComplex::min_index() const {
  int m = 0;
  for (std::size_t g = 0; g < gens_.size(); ++g) m = g ? std::min(m, gens_[g].index) : gens_[g].index;
  return m;
}

int PearlComplex::max_index() const {
  int m = 0;
  for (std::size_t g = 0; g < gens_.size(); ++g) m = g ? std::max(m, gens_[g].index) : gens_[g].index;
  return m;
}

std::string PearlComplex::format(const Cochain& c) const {
  const char var = ring_.variable();
  std::string out;
  for (std::size_t g = 0; g < c.size(); ++g) {
    const auto& a = c[g];
    if (a.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += gens_[g].id;
    if (a == LaurentElement::one()) continue;
    if (a.is_monomial())
      out += " " + a.str(var);
    else
      out += " (" + a.str(var) + ")";
  }
  return out.empty() ? "0" : out;
}

// -- construction ------------------------------------------------------------

PearlComplex build_complex(const PearlData& data, RingSpec ring) {
  if (ring.kind != RingKind::ambient && ring.generator_degree != data.N)
    throw RingMismatch("ring " + to_string(ring) + " does not match N = " + std::to_string(data.N));
  if (ring.kind == RingKind::ambient)
    throw RingMismatch("build over the laurent ring and extend with the ambient variant");
  std::map<std::string, std::size_t, std::less<>> ids;
  for (std::size_t g = 0; g < data.generators.size(); ++g) ids.emplace(data.generators[g].id, g);
  auto lookup = [&](const std::string& id) {
    auto it = ids.find(id);
    if (it == ids.end()) throw UnknownGenerator(id);
    return it->second;
  };
  std::vector<ComplexTerm> terms;
  for (const auto& t : data.diff_terms) {
    const auto x = lookup(t.x);
    const auto y = lookup(t.y);
    if (t.mu_bar < 0) throw InvalidData("diff term " + t.y + " -> " + t.x + " has negative mu_bar");
    check_term_degree("diff term (x=" + t.x + ", y=" + t.y + ", mu_bar=" + std::to_string(t.mu_bar) + ")",
                      data.generators[x].index, t.mu_bar, data.generators[y].index, 1, data.N);
    if (t.count % 2 != 0) terms.push_back({x, y, t.mu_bar});
  }
  PearlComplex c(ring, data.generators, terms);
  if (data.unit) {
    const auto u = cochain_from_ids(c, *data.unit);
    const auto deg = c.degree_of(u);
    if (deg && *deg != 0) throw InvalidData("unit is not of degree 0");
  }
  return c;
}

PearlComplex build_complex(const PearlData& data) {
  return build_complex(data, RingSpec::laurent(data.N));
}

Cochain cochain_from_ids(const PearlComplex& c, const std::vector<std::string>& ids) {
  Cochain out = c.zero();
  for (const auto& id : ids) out[c.position(id)] += LaurentElement::one();
  return out;
}

DSquaredVerdict check_d_squared(const PearlComplex& c) {
  DSquaredVerdict verdict;
  for (std::size_t y = 0; y < c.size(); ++y) {
    const auto dd = c.differential(c.differential(c.basis(y)));
    for (std::size_t x = 0; x < c.size(); ++x)
      if (!dd[x].is_zero()) verdict.entries.push_back({y, x, dd[x]});
  }
  return verdict;
}

PeriodicComplex collapse_to_periodic(const PearlComplex& c) {
  PeriodicComplex p;
  p.period = c.ring().generator_degree;
  p.classes.resize(static_cast<std::size_t>(p.period));
  std::vector<std::size_t> slot(c.size());
  for (std::size_t g = 0; g < c.size(); ++g) {
    auto& cls = p.classes[static_cast<std::size_t>(floor_mod(c.index(g), p.period))];
    slot[g] = cls.size();
    cls.push_back(g);
  }
  for (int r = 0; r < p.period; ++r) {
    const auto& src = p.classes[static_cast<std::size_t>(r)];
    const auto& dst = p.classes[static_cast<std::size_t>((r + 1) % p.period)];
    gf2::BitMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [x, coeff] : c.column(src[j]))
        if (coeff.evaluate_at_one()) m.flip(slot[x], j);
    p.d.push_back(std::move(m));
  }
  return p;
}

std::size_t CohomologyTable::total() const {
  std::size_t n = 0;
  for (auto d : dims) n += d;
  return n;
}

namespace {

CohomologyTable periodic_cohomology(const PearlComplex& c) {
  const auto p = collapse_to_periodic(c);
  const int N = p.period;
  CohomologyTable table{c.ring(), {0, N - 1}, {}, {}};
  for (int r = 0; r < N; ++r) {
    const auto& in = p.d[static_cast<std::size_t>(floor_mod(r - 1, N))];
    const auto& out = p.d[static_cast<std::size_t>(r)];
    Homology h(in, out);
    table.dims.push_back(h.dim());
    std::vector<Cochain> reps;
    const auto& cls = p.classes[static_cast<std::size_t>(r)];
    for (const auto& v : h.representatives()) {
      Cochain rep = c.zero();
      for (std::size_t j = 0; j < cls.size(); ++j)
        if (v.test(j)) rep[cls[j]] = LaurentElement::monomial((r - c.index(cls[j])) / N);
      reps.push_back(std::move(rep));
    }
    table.representatives.push_back(std::move(reps));
  }
  return table;
}

// Degreewise computation for Λ⁺: the cells of degree k are x t^e with e ≥ 0.
struct PositiveSlice {
  std::vector<std::size_t> gens;
  std::vector<int> slot;
};

PositiveSlice positive_slice(const PearlComplex& c, int k) {
  const int N = c.ring().generator_degree;
  PositiveSlice s;
  s.slot.assign(c.size(), -1);
  for (std::size_t g = 0; g < c.size(); ++g) {
    const int diff = k - c.index(g);
    if (diff >= 0 && diff % N == 0) {
      s.slot[g] = static_cast<int>(s.gens.size());
      s.gens.push_back(g);
    }
  }
  return s;
}

gf2::BitMatrix positive_d(const PearlComplex& c, const PositiveSlice& src, const PositiveSlice& dst) {
  gf2::BitMatrix m(dst.gens.size(), src.gens.size());
  for (std::size_t j = 0; j < src.gens.size(); ++j)
    for (const auto& [x, coeff] : c.column(src.gens[j]))
      if (dst.slot[x] >= 0) m.flip(static_cast<std::size_t>(dst.slot[x]), j);
  return m;
}

}  // namespace

DegreeWindow default_positive_window(const PearlComplex& c) {
  const int N = c.ring().generator_degree;
  if (c.size() == 0) return {0, 2 * N};
  return {std::min(0, c.min_index()), c.max_index() + 2 * N};
}

CohomologyTable cohomology(const PearlComplex& c, std::optional<DegreeWindow> window) {
  if (!check_d_squared(c).ok()) throw DSquaredNonzero("d∘d is not zero");
  if (c.ring().kind != RingKind::positive) return periodic_cohomology(c);
  if (!window) throw WindowRequired("positive cohomology needs a degree window");
  if (window->hi < window->lo) throw InvalidData("empty degree window");

  const int N = c.ring().generator_degree;
  CohomologyTable table{c.ring(), *window, {}, {}};
  for (int k = window->lo; k <= window->hi; ++k) {
    const auto prev = positive_slice(c, k - 1);
    const auto cur = positive_slice(c, k);
    const auto next = positive_slice(c, k + 1);
    Homology h(positive_d(c, prev, cur), positive_d(c, cur, next));
    table.dims.push_back(h.dim());
    std::vector<Cochain> reps;
    for (const auto& v : h.representatives()) {
      Cochain rep = c.zero();
      for (std::size_t j = 0; j < cur.gens.size(); ++j)
        if (v.test(j)) rep[cur.gens[j]] = LaurentElement::monomial((k - c.index(cur.gens[j])) / N);
      reps.push_back(std::move(rep));
    }
    table.representatives.push_back(std::move(reps));
  }
  // Above the top index every degree sees all generators of its class, so
  // multiplication by t is an isomorphism there.
  if (c.size() > 0) {
    for (int k = std::max(window->lo, c.max_index() + 1); k + N <= window->hi; ++k)
      if (table.dim(k) != table.dim(k + N))
        throw std::logic_error("positive cohomology is not t-stable above the top index");
  }
  return table;
}

bool euler_characteristic_balanced(const PearlComplex& c) {
  const auto p = collapse_to_periodic(c);
  const int N = p.period;
  long long chain = 0;
  long long homology = 0;
  long long rank_sum = 0;
  long long total_chain = 0;
  long long total_h = 0;
  for (int r = 0; r < N; ++r) {
    const auto& in = p.d[static_cast<std::size_t>(floor_mod(r - 1, N))];
    const auto& out = p.d[static_cast<std::size_t>(r)];
    const auto dimc = static_cast<long long>(p.classes[static_cast<std::size_t>(r)].size());
    const auto dimh = static_cast<long long>(Homology(in, out).dim());
    const int sign = (r % 2 == 0) ? 1 : -1;
    chain += sign * dimc;
    homology += sign * dimh;
    total_chain += dimc;
    total_h += dimh;
    rank_sum += static_cast<long long>(out.rank());
  }
  if (N % 2 == 0) return chain == homology && total_chain - 2 * rank_sum == total_h;
  return total_chain - 2 * rank_sum == total_h;
}

}  // namespace pearl
