#include "random_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace oracle {

using pearl::LaurentElement;

LMatrix LMatrix::zero(std::size_t n) {
  return {std::vector<std::vector<LaurentElement>>(n, std::vector<LaurentElement>(n))};
}

LMatrix LMatrix::identity(std::size_t n) {
  auto out = zero(n);
  for (std::size_t i = 0; i < n; ++i) out.m[i][i] = LaurentElement::one();
  return out;
}

bool LMatrix::is_zero() const {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  const auto n = a.size();
  auto out = LMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.m[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b.m[k][j].is_zero()) out.m[i][j] += a.m[i][k] * b.m[k][j];
    }
  return out;
}

LMatrix operator+(const LMatrix& a, const LMatrix& b) {
  auto out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.m[i][j] += b.m[i][j];
  return out;
}

namespace {

std::map<std::string, std::size_t> positions(const pearl::PearlData& d) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < d.generators.size(); ++i) pos[d.generators[i].id] = i;
  return pos;
}

bool coin(std::mt19937_64& rng, int one_in) {
  return std::uniform_int_distribution<int>(0, one_in - 1)(rng) == 0;
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Entry t^e with index(r) + e·N = index(c) + shift, when 0 <= e <= max_e.
std::optional<int> exponent_for(const pearl::PearlData& d, std::size_t r, std::size_t c, int shift,
                                int max_e) {
  const int diff = d.generators[c].index + shift - d.generators[r].index;
  if (diff < 0 || diff % d.N != 0 || diff / d.N > max_e) return std::nullopt;
  return diff / d.N;
}

LMatrix random_map(std::mt19937_64& rng, const pearl::PearlData& d, int shift, int one_in) {
  const auto n = d.generators.size();
  auto out = LMatrix::zero(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (const auto e = exponent_for(d, r, c, shift, 2); e && coin(rng, one_in))
        out.m[r][c] = LaurentElement::monomial(*e);
  return out;
}

}  // namespace

LMatrix from_diff(const pearl::PearlData& d) {
  const auto pos = positions(d);
  auto out = LMatrix::zero(d.generators.size());
  for (const auto& t : d.diff_terms)
    if (t.count % 2) out.m[pos.at(t.x)][pos.at(t.y)] += LaurentElement::monomial(t.mu_bar);
  return out;
}

LMatrix from_twist(const pearl::PearlData& d, const std::vector<pearl::TwistTerm>& twist) {
  const auto pos = positions(d);
  auto out = LMatrix::zero(d.generators.size());
  for (const auto& t : twist)
    if (t.count % 2) out.m[pos.at(t.x)][pos.at(t.y)] += LaurentElement::monomial(t.mu_bar);
  return out;
}

std::vector<pearl::DiffTerm> to_diff(const pearl::PearlData& d, const LMatrix& m) {
  std::vector<pearl::DiffTerm> out;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      for (int e : m.m[r][c].exponents()) out.push_back({d.generators[r].id, d.generators[c].id, e, 1});
  return out;
}

std::vector<pearl::TwistTerm> to_twist(const pearl::PearlData& d, const LMatrix& m) {
  std::vector<pearl::TwistTerm> out;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      for (int e : m.m[r][c].exponents()) out.push_back({d.generators[r].id, d.generators[c].id, e, 1});
  return out;
}

RandomCase random_case(std::mt19937_64& rng, int N) {
  struct Pending {
    int index;
    int partner;  // position of the paired generator in `pending`, or -1
    int mu;
  };
  std::vector<Pending> pending;
  const int free_count = pick(rng, 0, 4);
  const int pair_count = pick(rng, 0, 3);
  for (int i = 0; i < free_count; ++i) pending.push_back({pick(rng, 0, 4), -1, 0});
  for (int i = 0; i < pair_count; ++i) {
    const int iy = pick(rng, 0, 4);
    std::vector<int> mus;
    for (int mu = 0; mu <= 2; ++mu)
      if (iy + 1 - mu * N >= 0) mus.push_back(mu);
    const int mu = mus[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(mus.size()) - 1))];
    const int y = static_cast<int>(pending.size());
    pending.push_back({iy, y + 1, mu});         // source
    pending.push_back({iy + 1 - mu * N, -2, 0});  // target
  }

  std::vector<std::size_t> order(pending.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> where(pending.size());
  for (std::size_t p = 0; p < order.size(); ++p) where[order[p]] = p;

  RandomCase rc;
  rc.data.name = "random";
  rc.data.N = N;
  for (std::size_t p = 0; p < order.size(); ++p)
    rc.data.generators.push_back({"g" + std::to_string(p), pending[order[p]].index});

  const auto n = pending.size();
  auto D = LMatrix::zero(n);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (pending[i].partner >= 0)
      D.m[where[static_cast<std::size_t>(pending[i].partner)]][where[i]] = LaurentElement::monomial(pending[i].mu);
    if (pending[i].partner == -1) free.push_back(where[i]);
  }

  auto T = LMatrix::zero(n);
  for (auto f : free)
    for (auto g : free)
      if (const auto e = exponent_for(rc.data, f, g, 2, 2); e && coin(rng, 2))
        T.m[f][g] = LaurentElement::monomial(*e);

  auto U = LMatrix::zero(n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = h + 1; g < n; ++g)
      if (const auto e = exponent_for(rc.data, h, g, 0, 2); e && coin(rng, 3))
        U.m[h][g] = LaurentElement::monomial(*e);
  const auto P = LMatrix::identity(n) + U;
  auto Pinv = LMatrix::identity(n);
  auto power = LMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * U;
    Pinv = Pinv + power;
  }

  rc.data.diff_terms = to_diff(rc.data, P * D * Pinv);
  rc.twist = to_twist(rc.data, P * T * Pinv);
  rc.expected.assign(static_cast<std::size_t>(N), 0);
  for (auto f : free) ++rc.expected[static_cast<std::size_t>(rc.data.generators[f].index % N)];
  return rc;
}

std::vector<pearl::TwistTerm> perturb(std::mt19937_64& rng, const pearl::PearlData& d,
                                      const std::vector<pearl::TwistTerm>& twist) {
  const auto D = from_diff(d);
  const auto H = random_map(rng, d, 1, 3);
  return to_twist(d, from_twist(d, twist) + D * H + H * D);
}

std::vector<pearl::TwistTerm> random_twist(std::mt19937_64& rng, const pearl::PearlData& d) {
  return to_twist(d, random_map(rng, d, 2, 2));
}

Relabeled relabel(std::mt19937_64& rng, const pearl::PearlData& d,
                  const std::vector<pearl::TwistTerm>& twist) {
  std::vector<std::size_t> perm(d.generators.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < perm.size(); ++i) rename[d.generators[perm[i]].id] = "v" + std::to_string(i) + "_";

  Relabeled out;
  out.data.name = d.name + "_relabeled";
  out.data.N = d.N;
  for (auto p : perm) out.data.generators.push_back({rename[d.generators[p].id], d.generators[p].index});
  for (const auto& t : d.diff_terms) out.data.diff_terms.push_back({rename[t.x], rename[t.y], t.mu_bar, t.count});
  for (const auto& t : twist) out.twist.push_back({rename[t.x], rename[t.y], t.mu_bar, t.count});
  std::shuffle(out.data.diff_terms.begin(), out.data.diff_terms.end(), rng);
  std::shuffle(out.twist.begin(), out.twist.end(), rng);
  if (d.unit) {
    out.data.unit.emplace();
    for (const auto& u : *d.unit) out.data.unit->push_back(rename[u]);
  }
  return out;
}

}  // namespace oracle
