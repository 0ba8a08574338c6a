#include "emptri/detail/int_frame.hpp"

#include <stdexcept>

namespace emptri::detail {

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer to_integer(const i128& v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u & ~0ULL);
  Integer r(hi);
  r <<= 64;
  r += Integer(lo);
  return neg ? Integer(-r) : r;
}

Integer to_integer(const BigInt& v) { return Integer(v.str()); }

template <>
std::int64_t from_integer<std::int64_t>(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("from_integer: int64 overflow");
  return static_cast<std::int64_t>(v.get_si());
}

template <>
i128 from_integer<i128>(const Integer& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) throw std::overflow_error("from_integer: int128 overflow");
  Integer a = abs(v);
  Integer hi = a >> 64;
  Integer lo = a - (hi << 64);
  unsigned long hv = hi.get_ui();
  unsigned long lv = 0;
  mpz_export(&lv, nullptr, -1, sizeof(lv), 0, 0, lo.get_mpz_t());
  unsigned __int128 u = (static_cast<unsigned __int128>(hv) << 64) | lv;
  i128 r = static_cast<i128>(u);
  return sgn(v) < 0 ? -r : r;
}

template <>
BigInt from_integer<BigInt>(const Integer& v) {
  return BigInt(v.get_str());
}

ScaledPoints scale_points(std::span<const ExactPoint> pts, const Integer& multiplier) {
  ScaledPoints sp;
  Integer den = 1;
  for (const auto& p : pts) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.x.get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.y.get_den_mpz_t());
  }
  sp.scale = den * multiplier;
  sp.x.reserve(pts.size());
  sp.y.reserve(pts.size());
  for (const auto& p : pts) {
    Integer xs = p.x.get_num() * (sp.scale / p.x.get_den());
    Integer ys = p.y.get_num() * (sp.scale / p.y.get_den());
    sp.bits = std::max({sp.bits, mpz_sizeinbase(xs.get_mpz_t(), 2), mpz_sizeinbase(ys.get_mpz_t(), 2)});
    sp.x.push_back(std::move(xs));
    sp.y.push_back(std::move(ys));
  }
  return sp;
}

}  // namespace emptri::detail
