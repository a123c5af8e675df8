#include "pearl/graded.hpp"

#include <sstream>

#include "pearl/errors.hpp"

namespace pearl {

namespace {

ExponentRange natural_range(const RingSpec& ring) {
  if (ring.kind == RingKind::positive) return {0, std::nullopt};
  return {};
}

std::string cell_name(const PearlComplex& c, std::size_t g, int e) {
  std::ostringstream out;
  out << c.id(g) << " " << c.ring().variable() << "^" << e;
  return out.str();
}

}  // namespace

GradedSlices::GradedSlices(PearlComplex c) : c_(std::move(c)), range_(natural_range(c_.ring())) {}

GradedSlices::GradedSlices(PearlComplex c, ExponentRange range)
    : c_(std::move(c)), range_(range) {
  if (c_.ring().kind == RingKind::positive && (!range_.min || *range_.min < 0))
    throw NotPositive("a Λ⁺ slice range must start at an exponent >= 0");
}

std::vector<Cell> GradedSlices::cells(int k) const {
  const int N = c_.ring().generator_degree;
  std::vector<Cell> out;
  for (std::size_t g = 0; g < c_.size(); ++g) {
    const int diff = k - c_.index(g);
    if (diff % N != 0) continue;
    const int e = diff / N;
    if (range_.contains(e)) out.push_back({g, e});
  }
  return out;
}

std::optional<std::size_t> GradedSlices::position(int k, std::size_t g) const {
  const auto cs = cells(k);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].gen == g) return i;
  return std::nullopt;
}

gf2::BitVector GradedSlices::from_cochain(int k, const Cochain& c) const {
  if (c.size() != c_.size()) throw InvalidData("cochain length mismatch");
  const auto cs = cells(k);
  std::vector<int> slot(c_.size(), -1);
  for (std::size_t i = 0; i < cs.size(); ++i) slot[cs[i].gen] = static_cast<int>(i);
  gf2::BitVector v(cs.size());
  for (std::size_t g = 0; g < c.size(); ++g)
    for (int e : c[g].exponents()) {
      if (c_.degree(g, e) != k)
        throw InvalidData("term " + cell_name(c_, g, e) + " is not of degree " + std::to_string(k));
      if (range_.max && e > *range_.max) continue;
      if (range_.min && e < *range_.min)
        throw OutOfWindow("term " + cell_name(c_, g, e) + " lies below the exponent range");
      v.flip(static_cast<std::size_t>(slot[g]));
    }
  return v;
}

Cochain GradedSlices::to_cochain(int k, const gf2::BitVector& v) const {
  const auto cs = cells(k);
  if (v.size() != cs.size()) throw InvalidData("slice vector length mismatch");
  Cochain c = c_.zero();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (v.test(i)) c[cs[i].gen] = LaurentElement::monomial(cs[i].exponent);
  return c;
}

gf2::BitMatrix GradedSlices::d(int k) const {
  const auto src = cells(k);
  const auto dst = cells(k + 1);
  std::vector<int> slot(c_.size(), -1);
  for (std::size_t i = 0; i < dst.size(); ++i) slot[dst[i].gen] = static_cast<int>(i);
  gf2::BitMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [x, coeff] : c_.column(src[j].gen))
      for (int mu : coeff.exponents()) {
        const int e = src[j].exponent + mu;
        if (range_.max && e > *range_.max) continue;
        if (range_.min && e < *range_.min)
          throw OutOfWindow("the exponent range is not closed under d at " +
                            cell_name(c_, src[j].gen, src[j].exponent));
        m.flip(static_cast<std::size_t>(slot[x]), j);
      }
  return m;
}

// -- chain maps --------------------------------------------------------------

ChainMap::ChainMap(GradedSlices source, GradedSlices target, int shift, CellImage image)
    : src_(std::move(source)), dst_(std::move(target)), shift_(shift), image_(std::move(image)) {}

gf2::BitMatrix ChainMap::matrix(int k) const {
  const auto cs = src_.cells(k);
  std::vector<gf2::BitVector> cols;
  cols.reserve(cs.size());
  for (const auto& cell : cs) cols.push_back(dst_.from_cochain(k + shift_, image_(cell.gen, cell.exponent)));
  return gf2::BitMatrix::from_columns(dst_.dim(k + shift_), std::move(cols));
}

Cochain ChainMap::apply(const Cochain& c) const {
  Cochain out = dst_.complex().zero();
  for (std::size_t g = 0; g < c.size(); ++g)
    for (int e : c[g].exponents()) out += image_(g, e);
  return out;
}

bool ChainMap::commutes_at(int k) const {
  return dst_.d(k + shift_) * matrix(k) == matrix(k + 1) * src_.d(k);
}

gf2::BitMatrix induced_matrix(const Homology& from, const Homology& to, const gf2::BitMatrix& chain) {
  std::vector<gf2::BitVector> cols;
  for (const auto& r : from.representatives()) cols.push_back(to.coordinates(chain.apply(r)));
  return gf2::BitMatrix::from_columns(to.dim(), std::move(cols));
}

gf2::BitMatrix ChainMap::induced(int k) const {
  return induced_matrix(src_.homology(k), dst_.homology(k + shift_), matrix(k));
}

// -- exact sequences ---------------------------------------------------------

bool LesReport::exact() const {
  for (const auto& r : rows)
    if (!r.exact()) return false;
  return true;
}

bool short_exact_at(const ChainMap& f, const ChainMap& g, int k) {
  const auto F = f.matrix(k);
  const auto G = g.matrix(k);
  if (!(G * F).is_zero()) return false;
  const auto rf = F.rank();
  const auto rg = G.rank();
  return rf == F.cols() && rg == G.rows() && rf + rg == F.rows();
}

gf2::BitVector snake(const ChainMap& f, const ChainMap& g, int k, const gf2::BitVector& c) {
  const auto b = gf2::solve(g.matrix(k), c);
  if (!b) throw InvalidData("snake: cocycle has no preimage; g is not onto in degree " + std::to_string(k));
  const auto db = g.source().d(k).apply(*b);
  const auto a = gf2::solve(f.matrix(k + 1), db);
  if (!a) throw InvalidData("snake: d(lift) is not in the image of f in degree " + std::to_string(k + 1));
  return *a;
}

LesReport long_exact_sequence(const ChainMap& f, const ChainMap& g, DegreeWindow window) {
  if (f.shift() != 0) throw InvalidData("the first map of a long exact sequence must have degree 0");
  const int s = g.shift();
  LesReport report{s, window, {}};

  std::vector<LesRow> raw;
  for (int k = window.lo - 1; k <= window.hi; ++k) {
    const auto hA = f.source().homology(k);
    const auto hB = f.target().homology(k);
    const auto hC = g.target().homology(k + s);
    const auto hA1 = f.source().homology(k + 1);
    LesRow row;
    row.k = k;
    row.dim_a = hA.dim();
    row.dim_b = hB.dim();
    row.dim_c = hC.dim();
    row.f = induced_matrix(hA, hB, f.matrix(k));
    row.g = induced_matrix(hB, hC, g.matrix(k));
    std::vector<gf2::BitVector> cols;
    for (const auto& c : hC.representatives()) cols.push_back(hA1.coordinates(snake(f, g, k, c)));
    row.boundary = gf2::BitMatrix::from_columns(hA1.dim(), std::move(cols));

    const auto rf = row.f.rank();
    const auto rg = row.g.rank();
    const auto rd = row.boundary.rank();
    row.exact_at_b = (row.g * row.f).is_zero() && rf + rg == row.dim_b;
    row.exact_at_c = (row.boundary * row.g).is_zero() && rg + rd == row.dim_c;
    if (!raw.empty()) {
      const auto& prev = raw.back();
      row.exact_at_a =
          (row.f * prev.boundary).is_zero() && prev.boundary.rank() + rf == row.dim_a;
    }
    raw.push_back(std::move(row));
  }
  raw.erase(raw.begin());
  report.rows = std::move(raw);
  return report;
}

}  // namespace pearl
