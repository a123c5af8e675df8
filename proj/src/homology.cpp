#include "pearl/homology.hpp"

#include <stdexcept>

#include "pearl/errors.hpp"

namespace pearl {

Homology::Homology(const gf2::BitMatrix& incoming, const gf2::BitMatrix& outgoing)
    : n_(outgoing.cols()),
      incoming_(incoming),
      outgoing_(outgoing),
      boundaries_(outgoing.cols(), 0),
      classes_(outgoing.cols(), 0) {
  if (incoming.rows() != n_) throw std::invalid_argument("Homology: incoming/outgoing mismatch");
  for (std::size_t c = 0; c < incoming.cols(); ++c)
    if (boundaries_.insert(incoming.column(c), gf2::BitVector(0))) ++boundary_rank_;

  gf2::Reducer span = boundaries_;
  for (auto& z : gf2::kernel_basis(outgoing))
    if (span.insert(z, gf2::BitVector(0))) reps_.push_back(std::move(z));

  classes_ = gf2::Reducer(n_, reps_.size());
  for (std::size_t c = 0; c < incoming.cols(); ++c)
    classes_.insert(incoming.column(c), gf2::BitVector(reps_.size()));
  for (std::size_t i = 0; i < reps_.size(); ++i)
    classes_.insert(reps_[i], gf2::BitVector::unit(reps_.size(), i));
}

bool Homology::is_coboundary(const gf2::BitVector& v) const { return boundaries_.contains(v); }

std::optional<gf2::BitVector> Homology::preimage(const gf2::BitVector& v) const {
  return gf2::solve(incoming_, v);
}

gf2::BitVector Homology::coordinates(const gf2::BitVector& v) const {
  if (!is_cocycle(v)) throw NotACocycle("cochain " + v.str() + " is not closed");
  auto red = classes_.reduce(v);
  if (red.remainder.any()) throw std::logic_error("Homology: cocycle outside the cocycle span");
  return red.tag;
}

gf2::BitVector Homology::representative(const gf2::BitVector& coords) const {
  gf2::BitVector v(n_);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (coords.test(i)) v ^= reps_[i];
  return v;
}

}  // namespace pearl
