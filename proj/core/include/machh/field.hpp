#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace machh {

/// Exact rationals backed by GMP.
class RationalField {
 public:
  using Scalar = mpq_class;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return Scalar(v); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }

  /// a -= f * b, the elimination kernel.
  void sub_mul(Scalar& a, const Scalar& f, const Scalar& b) const {
    a -= f * b;
  }

  std::string name() const { return "Q"; }
};

/// GF(p) for an odd prime p < 2^31.
class PrimeField {
 public:
  using Scalar = std::uint32_t;

  /// Throws InvalidArgument unless `prime` is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t prime = kDefaultPrime);

  static constexpr std::uint32_t kDefaultPrime = 32003;

  std::uint32_t prime() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }

  bool is_zero(Scalar a) const { return a == 0; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar add(Scalar a, Scalar b) const {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(std::uint64_t{a} * b % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  void sub_mul(Scalar& a, Scalar f, Scalar b) const { a = sub(a, mul(f, b)); }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint32_t p_;
};

bool is_odd_prime(std::uint64_t n);

/// Runtime choice of coefficient field.
struct FieldSpec {
  enum class Kind { kRational, kPrime };
  Kind kind = Kind::kRational;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  static FieldSpec rational() { return {}; }
  static FieldSpec gf(std::uint32_t p) { return {Kind::kPrime, p}; }

  /// Parses "q" / "Q" or "gf:<p>".
  static FieldSpec parse(const std::string& text);

  /// "Q" or "GF(p)".
  std::string name() const;
};

/// Calls fn(field) with a RationalField or PrimeField instance.
template <typename Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::kPrime) {
    return fn(PrimeField(spec.prime));
  }
  return fn(RationalField{});
}

}  // namespace machh
