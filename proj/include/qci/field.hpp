#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qci/error.hpp"

namespace qci {

// Element of F_{p^e}, stored as a code in [0, p^e). The base-p digits of the
// code are the coefficients of the element in the canonical generator,
// lowest degree first. For e = 1 the code is just the residue.
using FF = uint32_t;

class Field {
public:
  // Deterministic construction: the modulus is the lexicographically smallest
  // monic irreducible of degree e, coefficients compared low-degree-first.
  static Field create(int64_t p, int e);

  int64_t p() const { return p_; }
  int e() const { return e_; }
  uint32_t size() const { return size_; }
  // Monic modulus, e+1 coefficients low-degree-first; empty when e == 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FF zero() const { return 0; }
  FF one() const { return 1; }
  FF from_int(int64_t v) const;
  bool is_zero(FF a) const { return a == 0; }

  FF add(FF a, FF b) const;
  FF sub(FF a, FF b) const;
  FF neg(FF a) const;
  FF mul(FF a, FF b) const;
  FF inv(FF a) const;
  FF pow(FF a, int64_t k) const;

  // Multiplicative order of a nonzero element.
  int64_t order(FF a) const;

  // Entrywise embedding map into a larger field with the same characteristic:
  // result[c] is the image of code c. Requires e() | dst.e(). The canonical
  // generator is sent to the smallest root of our modulus in dst; the map is
  // verified to be a ring homomorphism.
  std::vector<FF> embedding_into(const Field& dst) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  Field() = default;

  std::vector<uint32_t> decode(FF a) const;  // e digits, low first
  FF encode(const std::vector<uint32_t>& digits) const;
  FF mul_nocache(FF a, FF b) const;

  int64_t p_ = 0;
  int e_ = 0;
  uint32_t size_ = 0;
  std::vector<uint32_t> modulus_;

  // Full operation tables for small fields; all fields the test corpora use
  // fit, so hot loops are pure lookups.
  struct Tables {
    std::vector<FF> mul, add, inv, neg;
  };
  std::shared_ptr<const Tables> tab_;
};

}  // namespace qci
