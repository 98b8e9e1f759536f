#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

namespace tcolor {

enum class PrimeSource { PaperBound, Override };

const char* to_string(PrimeSource source);

// A prime modulus together with the provenance of the choice. `paper_bound`
// is m^2(2*delta+2) for the graph the prime was selected for.
struct Prime {
  std::uint32_t value = 0;
  PrimeSource source = PrimeSource::PaperBound;
  std::uint64_t paper_bound = 0;

  bool below_paper_bound() const { return value < paper_bound; }
};

// Residue in [0, p). The modulus lives in the Zp context, not in the value.
struct Fe {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

inline std::ostream& operator<<(std::ostream& os, Fe x) { return os << x.v; }

bool is_prime(std::uint64_t n);

std::uint64_t paper_prime_bound(std::uint64_t m, std::uint64_t delta);

// Smallest prime >= m^2(2*delta+2), or the override (which must be prime).
Prime select_prime(std::uint64_t m, std::uint64_t delta,
                   std::optional<std::uint64_t> override_value = std::nullopt);

class Zp {
 public:
  explicit Zp(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Fe from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fe{static_cast<std::uint32_t>(r)};
  }
  Fe add(Fe a, Fe b) const {
    std::uint32_t s = a.v + b.v;
    return Fe{s >= p_ ? s - p_ : s};
  }
  Fe sub(Fe a, Fe b) const { return Fe{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
  Fe neg(Fe a) const { return Fe{a.v == 0 ? 0 : p_ - a.v}; }
  Fe mul(Fe a, Fe b) const {
    return Fe{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  }
  Fe inv(Fe a) const;
  Fe pow(Fe a, std::uint64_t k) const;

 private:
  std::uint32_t p_;
};

Fe inv(Fe a, std::uint32_t p);
Fe pow_mod(Fe a, std::uint64_t k, std::uint32_t p);

}  // namespace tcolor
