#include "aperykit/exponent.hpp"

#include <algorithm>
#include <string>

#include "aperykit/errors.hpp"

namespace aperykit {
namespace {

void require_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("exponent vectors of length " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in exponent arithmetic");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in exponent arithmetic");
  }
  return r;
}

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t c) { return c == 0; });
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t d = 0;
  for (std::int64_t c : coords_) d = checked_add(d, c);
  return d;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::unit(std::size_t size, std::size_t i) {
  ExponentVector e(size);
  e[i] = 1;
  return e;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace aperykit
