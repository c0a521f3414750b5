#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "qci/matrix.hpp"

namespace qci {

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n} in normal order.
// Exponents stay small (< 2l in every code path), so uint8 is plenty.
struct Mono {
  std::vector<uint8_t> e;
  auto operator<=>(const Mono&) const = default;
  int total() const {
    int t = 0;
    for (uint8_t v : e) t += v;
    return t;
  }
};

Mono mono_zero(int n);
Mono mono_gen(int n, int i);  // x_i

// Linear combination of normal-order monomials; zero coefficients are never
// stored, so equality of maps is equality of elements.
using SkewPoly = std::map<Mono, FF>;

enum class Regime { Commutative, Quantum };
enum class Ring { Q, R };  // ambient skew polynomial ring vs its truncation

// k_q[x_1..x_n] with x_i x_j = q^{a_ij} x_j x_i, truncated by x_i^l in R.
class QciAlgebra {
public:
  static QciAlgebra create(const Field& F, int n, int l, FF q,
                           const std::vector<std::vector<int64_t>>& a);

  const Field& field() const { return F_; }
  int n() const { return n_; }
  int l() const { return l_; }
  FF q() const { return q_; }
  Regime regime() const { return regime_; }
  int global_dim() const { return n_; }
  int a(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }  // in [0, l)
  FF qpow(int64_t t) const {
    int64_t r = t % l_;
    if (r < 0) r += l_;
    return qpow_[static_cast<size_t>(r)];
  }

  uint32_t rdim() const { return rdim_; }  // l^n
  // Basis monomials of R in lexicographic order (x_1-exponent most
  // significant); index <-> monomial.
  const Mono& rmono(uint32_t idx) const { return rbasis_[idx]; }
  uint32_t rindex(const Mono& m) const;

  // Product of monomials: scalar * (a+b), or nothing in R when an exponent
  // overflows l. The scalar is q^{sum_{i>j} a_i b_j a_ij} from reordering.
  bool mono_mul(const Mono& a, const Mono& b, Ring ring, FF& scalar, Mono& out) const;

  SkewPoly mul(const SkewPoly& a, const SkewPoly& b, Ring ring) const;
  SkewPoly scale(const SkewPoly& a, FF s) const;
  SkewPoly add(const SkewPoly& a, const SkewPoly& b) const;

  // Normal form of coeff * x_{w_1} x_{w_2} ... (word of generator indices).
  SkewPoly normal_form(const std::vector<int>& word, FF coeff, Ring ring) const;

  // Left multiplication by x_i on the monomial basis of R.
  const Matrix& regular_action(int i) const { return reg_[static_cast<size_t>(i)]; }

  // Same parameters over F_{p^{e_total}}; emb_out receives the code map.
  QciAlgebra extended(int e_total, std::vector<FF>& emb_out) const;

private:
  QciAlgebra(const Field& F) : F_(F) {}

  Field F_;
  int n_ = 0, l_ = 0;
  FF q_ = 1;
  Regime regime_ = Regime::Commutative;
  std::vector<int> a_;       // n*n, reduced mod l
  std::vector<FF> qpow_;     // q^0 .. q^{l-1}
  uint32_t rdim_ = 1;
  std::vector<Mono> rbasis_;
  std::vector<Matrix> reg_;
};

void add_term(SkewPoly& p, const Mono& m, FF v, const Field& F);
bool is_zero(const SkewPoly& p);

}  // namespace qci
