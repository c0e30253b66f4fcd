#include "ppspace/pg_models.hpp"

#include <stdexcept>
#include <string>

#include "ppspace/errors.hpp"

namespace ppspace {

namespace {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q))
    throw std::invalid_argument("field order " + std::to_string(q) + " is not prime");
}

std::uint32_t PrimeField::inverse(std::uint32_t a) const {
  if (a % q_ == 0) throw std::invalid_argument("zero has no inverse");
  // Fermat: a^(q-2) mod q.
  std::uint64_t base = a % q_, result = 1;
  for (std::uint32_t e = q_ - 2; e != 0; e >>= 1) {
    if (e & 1) result = (result * base) % q_;
    base = (base * base) % q_;
  }
  return static_cast<std::uint32_t>(result);
}

ProjVector normalize(const std::array<std::uint32_t, 4>& v, const PrimeField& field) {
  const std::uint32_t q = field.order();
  std::array<std::uint32_t, 4> reduced{};
  for (int i = 0; i < 4; ++i) reduced[i] = v[i] % q;

  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (reduced[i] != 0) {
      lead = i;
      break;
    }
  if (lead < 0) throw std::invalid_argument("cannot normalize the zero vector");

  const std::uint32_t scale = field.inverse(reduced[lead]);
  ProjVector out;
  for (int i = 0; i < 4; ++i) out.coords[i] = field.mul(reduced[i], scale);
  return out;
}

std::vector<ProjVector> pg3_vectors(const PrimeField& field) {
  const std::uint32_t q = field.order();
  std::vector<ProjVector> out;
  out.reserve(static_cast<std::size_t>(q) * q * q + q * q + q + 1);
  // Nested ascending loops with the leading-1 filter enumerate the
  // normalized vectors in lexicographic order directly.
  for (std::uint32_t c0 = 0; c0 < q; ++c0)
    for (std::uint32_t c1 = 0; c1 < q; ++c1)
      for (std::uint32_t c2 = 0; c2 < q; ++c2)
        for (std::uint32_t c3 = 0; c3 < q; ++c3) {
          const std::array<std::uint32_t, 4> v{c0, c1, c2, c3};
          std::uint32_t lead = 0;
          for (std::uint32_t c : v) {
            if (c != 0) {
              lead = c;
              break;
            }
          }
          if (lead == 1) out.push_back(ProjVector{v});
        }
  return out;
}

IncidenceStructure generate_pg3(std::uint32_t q, std::uint32_t max_order) {
  const PrimeField field(q);
  if (q > max_order)
    throw SizeBoundError("field order " + std::to_string(q) + " exceeds the configured bound " +
                         std::to_string(max_order));

  const std::vector<ProjVector> vectors = pg3_vectors(field);
  const std::size_t n = vectors.size();

  IncidenceBuilder builder(n, n);
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t h = 0; h < n; ++h) {
      std::uint32_t dot = 0;
      for (int i = 0; i < 4; ++i)
        dot = field.add(dot, field.mul(vectors[p].coords[i], vectors[h].coords[i]));
      if (dot == 0) builder.set(p, h);
    }
  }
  return builder.build();
}

}  // namespace ppspace
