#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace asynum {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt big_signed(std::int64_t v) {
  if (v >= 0) return big(static_cast<std::uint64_t>(v));
  BigInt r = big(static_cast<std::uint64_t>(-(v + 1)));
  r += 1;
  return -r;
}

/// Exact conversion; returns false when the value does not fit.
inline bool to_u64(const BigInt& v, std::uint64_t& out) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return false;
  out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return true;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRational& v) { return v.get_str(); }

}  // namespace asynum
