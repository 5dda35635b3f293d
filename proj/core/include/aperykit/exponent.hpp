#ifndef APERYKIT_EXPONENT_HPP
#define APERYKIT_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace aperykit {

/// A point of Z^m_{>=0} naming the monomial x^v. Coordinates are 64-bit;
/// the arithmetic helpers below throw OverflowError instead of wrapping.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t size) : coords_(size, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit ExponentVector(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const;
  std::int64_t total_degree() const;

  /// Coordinatewise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  static ExponentVector unit(std::size_t size, std::size_t i);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  // Plain lexicographic comparison on coordinates, for use as a map key.
  // This is not a monomial ordering; use OrderSpec::compare for those.
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// True iff no variable appears in both.
bool coprime(const ExponentVector& a, const ExponentVector& b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace aperykit

#endif  // APERYKIT_EXPONENT_HPP
