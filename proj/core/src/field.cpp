#include "machh/field.hpp"

#include <charconv>

#include "machh/error.hpp"

namespace machh {

bool is_odd_prime(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p_(prime) {
  if (prime >= (1U << 31) || !is_odd_prime(prime)) {
    throw Error(ErrorCode::kInvalidArgument,
                "GF(p) needs an odd prime below 2^31, got " +
                    std::to_string(prime));
  }
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) {
    throw Error(ErrorCode::kInternalInconsistency, "division by zero in GF(p)");
  }
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Scalar>(t);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rational();
  if (text.rfind("gf:", 0) == 0 || text.rfind("GF:", 0) == 0) {
    std::uint64_t p = 0;
    const char* begin = text.data() + 3;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, p);
    if (ec != std::errc() || ptr != end || begin == end) {
      throw Error(ErrorCode::kInvalidArgument, "bad prime in field '" + text + "'");
    }
    if (p >= (1ULL << 31) || !is_odd_prime(p)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "GF(p) needs an odd prime below 2^31, got " + std::to_string(p));
    }
    return gf(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "field must be 'q' or 'gf:<prime>', got '" + text + "'");
}

std::string FieldSpec::name() const {
  return kind == Kind::kRational ? "Q" : "GF(" + std::to_string(prime) + ")";
}

}  // namespace machh
