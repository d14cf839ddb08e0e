#pragma once

#include <optional>
#include <vector>

#include "spanfact/errors.hpp"

namespace spanfact {

/// GF(q) for q ≡ 1 (mod 4), prime or prime power. Elements are integers
/// 0..q-1: residues for prime q, base-p digit encodings of polynomial
/// coefficients for extensions (index sum_i c_i p^i), so the canonical order
/// is just the integer order. Also carries the derived data the H_q
/// construction needs: the least primitive root z, the nonzero squares X,
/// and the least square w with 1+w neither zero nor a square.
class Field {
 public:
  /// poly: coefficients c_0..c_e of a monic irreducible degree-e polynomial
  /// over GF(p), required exactly when q = p^e with e > 1.
  static Field make(long long q,
                    std::optional<std::vector<int>> poly = std::nullopt);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int extension_degree() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int base, long long exponent) const;

  /// Image of the integer k under the prime-subfield embedding (k mod p).
  int of_int(long long k) const;

  int one() const { return 1; }
  int zero() const { return 0; }

  int z() const { return z_; }
  const std::vector<int>& squares() const { return squares_; }
  bool is_square(int a) const { return a != 0 && square_flag_[a]; }
  int w() const { return w_; }

 private:
  Field() = default;
  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
  int z_ = 0, w_ = 0;
  std::vector<int> squares_;
  std::vector<char> square_flag_;
};

}  // namespace spanfact
