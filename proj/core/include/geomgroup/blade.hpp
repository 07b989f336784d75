#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "geomgroup/errors.hpp"

namespace geomgroup {

/// Largest supported algebra dimension.  Masks fit in 16 bits.
inline constexpr int kMaxDimension = 16;

/// Unsigned basis blade of C(n,0): a product of distinct basis vectors in
/// ascending order.  Bit j-1 of `mask` is set iff e_j is a factor; the empty
/// mask is the scalar 1.
struct Blade {
  std::uint16_t mask = 0;
  std::uint8_t dim = 0;

  friend bool operator==(const Blade&, const Blade&) = default;
};

/// Signed basis blade: +1 or -1 times a canonical Blade.  `neg` holds the
/// sign parity (false is +1).  These are the elements of every group handled
/// by this library.
struct SignedBlade {
  bool neg = false;
  Blade blade;

  static SignedBlade one(int dim);
  static SignedBlade minus_one(int dim);
  static SignedBlade basis_vector(int index, int dim);  // e_index
  static SignedBlade from_mask(std::uint16_t mask, int dim, bool neg = false);

  std::uint16_t mask() const { return blade.mask; }
  int dim() const { return blade.dim; }
  int sign() const { return neg ? -1 : +1; }
  SignedBlade negated() const { return {!neg, blade}; }

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

int grade(const Blade&);
int grade(const SignedBlade&);

/// Canonical element order: ascending mask, then +1 before -1.
bool canonical_less(const SignedBlade&, const SignedBlade&);

/// Parse a blade literal: `[+-]? ( "1" | "e" [1-9]+ )`, each digit a vector
/// index in 1..dim.  Repeated indices cancel through e_j^2 = 1 and the usual
/// swap signs apply, so "e21" parses to -e12.  Throws parse_error on any
/// token outside the grammar and on indices above `dim`.
SignedBlade parse_blade(std::string_view text, int dim);

/// Canonical literal: "1", "-1", "e13", "-e123", ...
std::string to_string(const SignedBlade&);

/// Geometric product.  The mask of the result is the XOR of the operand
/// masks; the reordering sign is the Walsh-style count of factor pairs that
/// must pass each other.  Throws dimension_mismatch when dims differ.
SignedBlade mul(const SignedBlade&, const SignedBlade&);

/// Reference product: multiply out an explicit word of vector indices by
/// literal adjacent swaps, cancelling equal neighbours via e_j^2 = 1.  This
/// deliberately shares no code with mul() so the two can check each other.
/// Throws std::out_of_range for indices outside 1..dim.
SignedBlade naive_reorder_sign(std::span<const int> factors, int dim);

/// Sign of the square: +1 or -1 depending only on the grade.
int square_sign(const SignedBlade&);

/// True iff ab = ba.  Sign factors never matter.
bool commutes(const SignedBlade&, const SignedBlade&);

/// The unique group inverse; same mask, sign fixed by square_sign.
SignedBlade inverse(const SignedBlade&);

}  // namespace geomgroup
