#pragma once

// Cohomology of one degree of a GF(2) cochain complex
//   C^{k-1} --incoming--> C^k --outgoing--> C^{k+1}.

#include <optional>
#include <vector>

#include "pearl/gf2.hpp"

namespace pearl {

class Homology {
 public:
  Homology(const gf2::BitMatrix& incoming, const gf2::BitMatrix& outgoing);

  std::size_t dim() const { return reps_.size(); }
  std::size_t cochain_dim() const { return n_; }
  std::size_t boundary_rank() const { return boundary_rank_; }

  /// Cocycles whose classes form a basis, chosen by pivoting in cell order.
  const std::vector<gf2::BitVector>& representatives() const { return reps_; }

  bool is_cocycle(const gf2::BitVector& v) const { return outgoing_.apply(v).none(); }
  bool is_coboundary(const gf2::BitVector& v) const;
  /// Some u with incoming(u) = v.
  std::optional<gf2::BitVector> preimage(const gf2::BitVector& v) const;
  /// Class coordinates in the representative basis; throws NotACocycle.
  gf2::BitVector coordinates(const gf2::BitVector& v) const;
  /// Representative cocycle of the class with the given coordinates.
  gf2::BitVector representative(const gf2::BitVector& coords) const;

 private:
  std::size_t n_;
  std::size_t boundary_rank_ = 0;
  gf2::BitMatrix incoming_;
  gf2::BitMatrix outgoing_;
  std::vector<gf2::BitVector> reps_;
  gf2::Reducer boundaries_;  // image of incoming, untagged
  gf2::Reducer classes_;     // image of incoming, then reps tagged by position
};

}  // namespace pearl
