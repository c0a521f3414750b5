#include "qci/field.hpp"

#include <algorithm>

namespace qci {

namespace {

constexpr uint32_t kSizeGuard = 1u << 20;
constexpr uint32_t kTableLimit = 512;

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficients low-degree-first, no trailing
// zeros. Only used during construction (modulus search, inverses).
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

// Remainder of a by monic b.
Poly pmod(Poly a, const Poly& b, int64_t p) {
  trim(a);
  while (a.size() >= b.size()) {
    uint64_t lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t t = a[shift + i] + (p - 1) * lead % p * b[i];
      a[shift + i] = static_cast<uint32_t>(t % p);
    }
    trim(a);
  }
  return a;
}


}  // namespace

Field Field::create(int64_t p, int e) {
  if (!is_prime(p)) fail(Err::NonPrime, "characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) fail(Err::ExtensionTooLarge, "extension degree must be >= 1");
  uint64_t size = 1;
  for (int i = 0; i < e; ++i) {
    size *= static_cast<uint64_t>(p);
    if (size > kSizeGuard)
      fail(Err::ExtensionTooLarge,
           "field size " + std::to_string(p) + "^" + std::to_string(e) + " exceeds guard");
  }

  Field F;
  F.p_ = p;
  F.e_ = e;
  F.size_ = static_cast<uint32_t>(size);

  if (e > 1) {
    // Enumerate monic degree-e polynomials in low-degree-first lexicographic
    // order and take the first irreducible one. Irreducibility is checked by
    // trial division against every monic polynomial of degree <= e/2.
    std::vector<Poly> divisors;
    for (int d = 1; 2 * d <= e; ++d) {
      uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
      for (uint64_t code = 0; code < count; ++code) {
        Poly b(d + 1, 0);
        uint64_t c = code;
        for (int i = 0; i < d; ++i) {
          b[i] = static_cast<uint32_t>(c % p);
          c /= p;
        }
        b[d] = 1;
        divisors.push_back(b);
      }
    }
    uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t key = 0; key < count; ++key) {
      // key = c_0 * p^{e-1} + ... + c_{e-1}, so ascending key enumerates the
      // coefficient tuples (c_0, c_1, ...) in lexicographic order.
      Poly m(e + 1, 0);
      uint64_t k = key;
      for (int i = e - 1; i >= 0; --i) {
        m[i] = static_cast<uint32_t>(k % p);
        k /= p;
      }
      m[e] = 1;
      bool irred = true;
      for (const Poly& d : divisors) {
        if (pmod(m, d, p).empty()) {
          irred = false;
          break;
        }
      }
      if (irred) {
        F.modulus_ = m;
        break;
      }
    }
    check(!F.modulus_.empty(), Err::Internal, "no irreducible modulus found");
  }

  if (size <= kTableLimit) {
    auto tab = std::make_shared<Tables>();
    uint32_t n = F.size_;
    tab->mul.resize(static_cast<size_t>(n) * n);
    tab->add.resize(static_cast<size_t>(n) * n);
    tab->neg.resize(n);
    tab->inv.resize(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = 0; b < n; ++b) {
        FF m = F.mul_nocache(a, b);
        tab->mul[static_cast<size_t>(a) * n + b] = m;
        // Additions are digitwise.
        std::vector<uint32_t> da = F.decode(a), db = F.decode(b);
        for (int i = 0; i < e; ++i) da[i] = static_cast<uint32_t>((da[i] + db[i]) % p);
        tab->add[static_cast<size_t>(a) * n + b] = F.encode(da);
        if (m == 1) {
          tab->inv[a] = b;
        }
      }
      std::vector<uint32_t> da = F.decode(a);
      for (int i = 0; i < e; ++i) da[i] = static_cast<uint32_t>((p - da[i]) % p);
      tab->neg[a] = F.encode(da);
    }
    F.tab_ = tab;
  }
  return F;
}

std::vector<uint32_t> Field::decode(FF a) const {
  std::vector<uint32_t> d(e_);
  for (int i = 0; i < e_; ++i) {
    d[i] = static_cast<uint32_t>(a % p_);
    a = static_cast<FF>(a / p_);
  }
  return d;
}

FF Field::encode(const std::vector<uint32_t>& digits) const {
  uint64_t a = 0;
  for (int i = e_ - 1; i >= 0; --i) a = a * static_cast<uint64_t>(p_) + digits[i];
  return static_cast<FF>(a);
}

FF Field::from_int(int64_t v) const {
  int64_t r = v % p_;
  if (r < 0) r += p_;
  return static_cast<FF>(r);
}

FF Field::add(FF a, FF b) const {
  if (tab_) return tab_->add[static_cast<size_t>(a) * size_ + b];
  if (e_ == 1) return static_cast<FF>((static_cast<uint64_t>(a) + b) % p_);
  std::vector<uint32_t> da = decode(a), db = decode(b);
  for (int i = 0; i < e_; ++i) da[i] = static_cast<uint32_t>((da[i] + db[i]) % p_);
  return encode(da);
}

FF Field::neg(FF a) const {
  if (tab_) return tab_->neg[a];
  if (e_ == 1) return a == 0 ? 0 : static_cast<FF>(p_ - a);
  std::vector<uint32_t> da = decode(a);
  for (int i = 0; i < e_; ++i) da[i] = static_cast<uint32_t>((p_ - da[i]) % p_);
  return encode(da);
}

FF Field::sub(FF a, FF b) const { return add(a, neg(b)); }

FF Field::mul_nocache(FF a, FF b) const {
  if (e_ == 1) return static_cast<FF>(static_cast<uint64_t>(a) * b % p_);
  std::vector<uint32_t> da = decode(a), db = decode(b);
  while (!da.empty() && da.back() == 0) da.pop_back();
  while (!db.empty() && db.back() == 0) db.pop_back();
  Poly r = pmod(pmul(da, db, p_), modulus_, p_);
  r.resize(e_, 0);
  return encode(r);
}

FF Field::mul(FF a, FF b) const {
  if (tab_) return tab_->mul[static_cast<size_t>(a) * size_ + b];
  return mul_nocache(a, b);
}

FF Field::pow(FF a, int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  FF r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

FF Field::inv(FF a) const {
  check(a != 0, Err::Internal, "inverse of zero");
  if (tab_) return tab_->inv[a];
  return pow(a, static_cast<int64_t>(size_) - 2);
}

int64_t Field::order(FF a) const {
  check(a != 0, Err::Internal, "order of zero");
  FF x = a;
  int64_t k = 1;
  while (x != 1) {
    x = mul(x, a);
    ++k;
    check(k <= size_, Err::Internal, "order loop overran group");
  }
  return k;
}

std::vector<FF> Field::embedding_into(const Field& dst) const {
  check(p_ == dst.p_, Err::PreconditionViolated, "embeddings need equal characteristic");
  check(dst.e_ % e_ == 0, Err::PreconditionViolated, "extension degree must be a multiple");
  std::vector<FF> map(size_);
  if (e_ == 1) {
    // Prime subfield: constants keep their codes.
    for (uint32_t c = 0; c < size_; ++c) map[c] = c;
  } else {
    // Send the generator to the smallest root of our modulus in dst.
    FF root = 0;
    bool found = false;
    for (uint32_t cand = 0; cand < dst.size_ && !found; ++cand) {
      FF acc = 0;
      for (int i = e_; i >= 0; --i) acc = dst.add(dst.mul(acc, cand), modulus_[i] % dst.p_);
      if (acc == 0) {
        root = cand;
        found = true;
      }
    }
    check(found, Err::Internal, "modulus has no root in extension");
    for (uint32_t c = 0; c < size_; ++c) {
      std::vector<uint32_t> d = decode(c);
      FF acc = 0;
      for (int i = e_ - 1; i >= 0; --i) acc = dst.add(dst.mul(acc, root), d[i]);
      map[c] = acc;
    }
  }
  // The embedding must be a ring homomorphism.
  for (uint32_t a = 0; a < size_; ++a)
    for (uint32_t b = 0; b < size_; ++b) {
      check(map[add(a, b)] == dst.add(map[a], map[b]), Err::Internal, "embedding breaks +");
      check(map[mul(a, b)] == dst.mul(map[a], map[b]), Err::Internal, "embedding breaks *");
    }
  return map;
}

const char* err_name(Err e) {
  switch (e) {
    case Err::NonPrime: return "NonPrime";
    case Err::ExtensionTooLarge: return "ExtensionTooLarge";
    case Err::BadOrder: return "BadOrder";
    case Err::BadExponents: return "BadExponents";
    case Err::BadTruncation: return "BadTruncation";
    case Err::RegimeConflict: return "RegimeConflict";
    case Err::RelationViolated: return "RelationViolated";
    case Err::NilpotencyViolated: return "NilpotencyViolated";
    case Err::ZeroLinearPart: return "ZeroLinearPart";
    case Err::D2NonZero: return "D2NonZero";
    case Err::LiftResidue: return "LiftResidue";
    case Err::WindowTooSmall: return "WindowTooSmall";
    case Err::WindowOutOfRange: return "WindowOutOfRange";
    case Err::EnumerationTooLarge: return "EnumerationTooLarge";
    case Err::WrongRegime: return "WrongRegime";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::ZeroModule: return "ZeroModule";
    case Err::ParseError: return "ParseError";
    case Err::ValidationError: return "ValidationError";
    case Err::UnknownCommand: return "UnknownCommand";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qci
