#include "spanfact/gf.hpp"

#include <algorithm>

namespace spanfact {

namespace {

// (p, e) with q = p^e for the smallest prime divisor p, or nullopt.
std::optional<std::pair<int, int>> prime_power_split(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 0;
  for (long long c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) return std::pair<int, int>{static_cast<int>(q), 1};
  int e = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), e};
}

std::vector<int> poly_of_index(int index, int p, int e) {
  std::vector<int> coeffs(e, 0);
  for (int i = 0; i < e; ++i) {
    coeffs[i] = index % p;
    index /= p;
  }
  return coeffs;
}

int index_of_poly(const std::vector<int>& coeffs, int p) {
  int index = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    index = index * p + coeffs[i];
  return index;
}

// Product of two degree-<e polynomials reduced by the monic modulus.
int poly_mul(int a, int b, int p, int e, const std::vector<int>& modulus) {
  const auto ca = poly_of_index(a, p, e);
  const auto cb = poly_of_index(b, p, e);
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  // reduce: x^e = -(modulus[0] + ... + modulus[e-1] x^{e-1})
  for (int deg = 2 * e - 2; deg >= e; --deg) {
    const int lead = prod[deg];
    if (lead == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < e; ++i) {
      const int delta = (lead * modulus[i]) % p;
      prod[deg - e + i] = ((prod[deg - e + i] - delta) % p + p) % p;
    }
  }
  prod.resize(e);
  return index_of_poly(prod, p);
}

}  // namespace

Field Field::make(long long q, std::optional<std::vector<int>> poly) {
  const auto split = prime_power_split(q);
  if (!split) throw BadOrderError(std::to_string(q) + " is not a prime power");
  if (q % 4 != 1)
    throw BadOrderError(std::to_string(q) +
                        " is not congruent to 1 mod 4");
  Field f;
  f.q_ = static_cast<int>(q);
  f.p_ = split->first;
  f.e_ = split->second;

  if (f.e_ == 1) {
    if (poly)
      throw BadParamsError("an irreducible polynomial applies only to q = p^e "
                           "with e > 1");
    f.add_.resize(f.q_ * f.q_);
    f.mul_.resize(f.q_ * f.q_);
    for (int a = 0; a < f.q_; ++a)
      for (int b = 0; b < f.q_; ++b) {
        f.add_[a * f.q_ + b] = (a + b) % f.q_;
        f.mul_[a * f.q_ + b] = static_cast<int>(
            (static_cast<long long>(a) * b) % f.q_);
      }
  } else {
    if (!poly)
      throw BadParamsError("q = " + std::to_string(q) +
                           " = " + std::to_string(f.p_) + "^" +
                           std::to_string(f.e_) +
                           " needs an irreducible polynomial");
    if (static_cast<int>(poly->size()) != f.e_ + 1 || poly->back() != 1)
      throw BadParamsError("polynomial must be monic of degree " +
                           std::to_string(f.e_));
    for (int c : *poly)
      if (c < 0 || c >= f.p_)
        throw BadParamsError("polynomial coefficients must lie in [0, p)");
    std::vector<int> modulus(poly->begin(), poly->end() - 1);

    f.add_.resize(f.q_ * f.q_);
    f.mul_.resize(f.q_ * f.q_);
    for (int a = 0; a < f.q_; ++a)
      for (int b = 0; b < f.q_; ++b) {
        const auto ca = poly_of_index(a, f.p_, f.e_);
        const auto cb = poly_of_index(b, f.p_, f.e_);
        std::vector<int> sum(f.e_);
        for (int i = 0; i < f.e_; ++i) sum[i] = (ca[i] + cb[i]) % f.p_;
        f.add_[a * f.q_ + b] = index_of_poly(sum, f.p_);
        f.mul_[a * f.q_ + b] = poly_mul(a, b, f.p_, f.e_, modulus);
      }
    // Irreducible iff no nonzero non-unit annihilates: every nonzero element
    // must be invertible, i.e. a*b == 0 implies a == 0 or b == 0.
    for (int a = 1; a < f.q_; ++a)
      for (int b = 1; b < f.q_; ++b)
        if (f.mul_[a * f.q_ + b] == 0)
          throw NotIrreducibleError("polynomial is reducible over GF(" +
                                    std::to_string(f.p_) + ")");
  }

  f.neg_.resize(f.q_);
  for (int a = 0; a < f.q_; ++a)
    for (int b = 0; b < f.q_; ++b)
      if (f.add_[a * f.q_ + b] == 0) f.neg_[a] = b;

  f.inv_.assign(f.q_, 0);
  for (int a = 1; a < f.q_; ++a)
    for (int b = 1; b < f.q_; ++b)
      if (f.mul_[a * f.q_ + b] == 1) f.inv_[a] = b;

  // Least primitive root: smallest element of multiplicative order q-1.
  f.z_ = 0;
  for (int a = 2; a < f.q_ && f.z_ == 0; ++a) {
    int order = 1;
    int power = a;
    while (power != 1) {
      power = f.mul_[power * f.q_ + a];
      ++order;
    }
    if (order == f.q_ - 1) f.z_ = a;
  }
  if (f.z_ == 0)
    throw InternalInconsistencyError(
        "no primitive root found in GF(" + std::to_string(q) +
        "); the multiplicative group must be cyclic, so this is a bug");

  f.square_flag_.assign(f.q_, 0);
  for (int a = 1; a < f.q_; ++a) f.square_flag_[f.mul_[a * f.q_ + a]] = 1;
  for (int a = 1; a < f.q_; ++a)
    if (f.square_flag_[a]) f.squares_.push_back(a);

  f.w_ = -1;
  for (int x : f.squares_) {
    const int y = f.add_[x * f.q_ + 1];
    if (y != 0 && !f.square_flag_[y]) {
      f.w_ = x;
      break;
    }
  }
  if (f.w_ < 0)
    throw InternalInconsistencyError(
        "no square w with 1+w a non-square exists in GF(" + std::to_string(q) +
        ")");
  return f;
}

int Field::inv(int a) const {
  if (a == 0) throw UsageError("division by zero in GF(q)");
  return inv_[a];
}

int Field::pow(int base, long long exponent) const {
  if (exponent < 0) return pow(inv(base), -exponent);
  int result = 1;
  int acc = base;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, acc);
    acc = mul(acc, acc);
    exponent >>= 1;
  }
  return result;
}

int Field::of_int(long long k) const {
  const int r = static_cast<int>(((k % p_) + p_) % p_);
  return r;
}

}  // namespace spanfact
