#pragma once

#include <array>
#include <cstdint>

#include "ppspace/incidence.hpp"

namespace ppspace {

/// Prime field GF(q). Primality is checked at construction.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t order() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_);
  }
  std::uint32_t inverse(std::uint32_t a) const;

private:
  std::uint32_t q_;
};

/// Homogeneous 4-tuple over GF(q), not all zero, normalized so that the
/// first nonzero coordinate equals 1. Used only by the PG(3,q) generator.
struct ProjVector {
  std::array<std::uint32_t, 4> coords{};

  friend bool operator==(const ProjVector&, const ProjVector&) = default;
  friend bool operator<(const ProjVector& a, const ProjVector& b) {
    return a.coords < b.coords;  // coords[0] most significant
  }
};

/// The unique scalar multiple of v whose first nonzero coordinate is 1.
/// Throws std::invalid_argument on the zero vector. Over GF(2) the only
/// scalar is 1, so every nonzero vector is already canonical.
ProjVector normalize(const std::array<std::uint32_t, 4>& v, const PrimeField& field);

inline constexpr std::uint32_t kDefaultMaxPgOrder = 7;

/// The classical projective space PG(3,q) over a prime field, as an
/// incidence structure between its points and its planes.
///
/// Ordering contract (bit-exact): both sorts are the normalized nonzero
/// 4-vectors over GF(q), listed in lexicographic order with coords[0] most
/// significant; incident(P, pi) iff sum_i P_i * pi_i == 0 (mod q). For q=2
/// this makes point i and plane j (0-based) incident exactly when
/// popcount((i+1) & (j+1)) is even, i.e. the 1-based index is the vector of
/// binary digits.
///
/// Throws std::invalid_argument for composite q and SizeBoundError for
/// q > max_order.
IncidenceStructure generate_pg3(std::uint32_t q, std::uint32_t max_order = kDefaultMaxPgOrder);

/// The normalized vectors enumerated in structure order (same for both
/// sorts). Exposed for label output; generate_pg3 uses the same enumeration.
std::vector<ProjVector> pg3_vectors(const PrimeField& field);

}  // namespace ppspace
