#include "tcolor/ff.hpp"

#include <limits>
#include <string>

#include "tcolor/error.hpp"

namespace tcolor {

const char* to_string(PrimeSource source) {
  return source == PrimeSource::PaperBound ? "paper_bound" : "override";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t paper_prime_bound(std::uint64_t m, std::uint64_t delta) {
  return m * m * (2 * delta + 2);
}

Prime select_prime(std::uint64_t m, std::uint64_t delta,
                   std::optional<std::uint64_t> override_value) {
  if (m < 1 || delta < 1) {
    throw Error(ErrorCode::InvalidArgument, "select_prime needs m >= 1 and delta >= 1");
  }
  const std::uint64_t bound = paper_prime_bound(m, delta);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint32_t>::max() / 2;
  if (override_value) {
    if (!is_prime(*override_value)) {
      throw Error(ErrorCode::NotPrime, std::to_string(*override_value) + " is not prime");
    }
    if (*override_value > kMax) {
      throw Error(ErrorCode::InvalidArgument, "prime override too large");
    }
    return Prime{static_cast<std::uint32_t>(*override_value), PrimeSource::Override, bound};
  }
  std::uint64_t q = bound;
  while (!is_prime(q)) ++q;
  if (q > kMax) throw Error(ErrorCode::InvalidArgument, "paper prime bound too large");
  return Prime{static_cast<std::uint32_t>(q), PrimeSource::PaperBound, bound};
}

Zp::Zp(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

Fe Zp::pow(Fe a, std::uint64_t k) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a.v % p_;
  while (k > 0) {
    if (k & 1) result = result * base % p_;
    base = base * base % p_;
    k >>= 1;
  }
  return Fe{static_cast<std::uint32_t>(result)};
}

Fe Zp::inv(Fe a) const {
  if (a.v % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.v % p_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

Fe inv(Fe a, std::uint32_t p) { return Zp(p).inv(a); }

Fe pow_mod(Fe a, std::uint64_t k, std::uint32_t p) { return Zp(p).pow(a, k); }

}  // namespace tcolor
