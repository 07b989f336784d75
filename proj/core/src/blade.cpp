#include "geomgroup/blade.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace geomgroup {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDimension)
    throw std::invalid_argument("dimension must be in 1.." +
                                std::to_string(kMaxDimension) + ", got " +
                                std::to_string(dim));
}

void check_same_dim(const SignedBlade& a, const SignedBlade& b) {
  if (a.dim() != b.dim())
    throw dimension_mismatch("operands live at different dimensions: " +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
}

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw parse_error("bad blade literal '" + std::string(text) + "': " + why +
                    "; expected [+-]?(\"1\"|\"e\"[1-9]+)");
}

}  // namespace

SignedBlade SignedBlade::one(int dim) { return from_mask(0, dim); }

SignedBlade SignedBlade::minus_one(int dim) { return from_mask(0, dim, true); }

SignedBlade SignedBlade::basis_vector(int index, int dim) {
  check_dim(dim);
  if (index < 1 || index > dim)
    throw std::invalid_argument("vector index " + std::to_string(index) +
                                " outside 1.." + std::to_string(dim));
  return from_mask(static_cast<std::uint16_t>(1u << (index - 1)), dim);
}

SignedBlade SignedBlade::from_mask(std::uint16_t mask, int dim, bool neg) {
  check_dim(dim);
  if (mask >> dim)
    throw std::invalid_argument("mask uses a vector index above dimension " +
                                std::to_string(dim));
  SignedBlade out;
  out.neg = neg;
  out.blade = {mask, static_cast<std::uint8_t>(dim)};
  return out;
}

int grade(const Blade& b) { return std::popcount(b.mask); }

int grade(const SignedBlade& b) { return grade(b.blade); }

bool canonical_less(const SignedBlade& a, const SignedBlade& b) {
  if (a.mask() != b.mask()) return a.mask() < b.mask();
  return !a.neg && b.neg;
}

SignedBlade parse_blade(std::string_view text, int dim) {
  check_dim(dim);
  std::string_view rest = text;
  bool neg = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    neg = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) bad_literal(text, "empty body");
  if (rest == "1") {
    SignedBlade out = SignedBlade::one(dim);
    out.neg = neg;
    return out;
  }
  if (rest.front() != 'e') bad_literal(text, "body must be \"1\" or start with 'e'");
  rest.remove_prefix(1);
  if (rest.empty()) bad_literal(text, "'e' needs at least one index digit");
  std::vector<int> factors;
  factors.reserve(rest.size());
  for (char c : rest) {
    if (c < '1' || c > '9') bad_literal(text, std::string("invalid index character '") + c + "'");
    int index = c - '0';
    if (index > dim)
      bad_literal(text, "index " + std::to_string(index) + " above dimension " +
                            std::to_string(dim));
    factors.push_back(index);
  }
  SignedBlade out = naive_reorder_sign(factors, dim);
  out.neg = out.neg != neg;
  return out;
}

std::string to_string(const SignedBlade& b) {
  std::string out;
  if (b.neg) out += '-';
  if (b.mask() == 0) {
    out += '1';
    return out;
  }
  out += 'e';
  for (int j = 1; j <= b.dim(); ++j)
    if (b.mask() >> (j - 1) & 1u) out += static_cast<char>('0' + j);
  return out;
}

SignedBlade mul(const SignedBlade& a, const SignedBlade& b) {
  check_same_dim(a, b);
  // Each factor e_k of b must pass every factor of a with a higher index.
  unsigned swaps = 0;
  for (int k = 0; k < a.dim(); ++k)
    if (b.mask() >> k & 1u)
      swaps += std::popcount(static_cast<unsigned>(a.mask()) >> (k + 1));
  SignedBlade out;
  out.neg = a.neg != b.neg;
  if (swaps & 1u) out.neg = !out.neg;
  out.blade = {static_cast<std::uint16_t>(a.mask() ^ b.mask()),
               static_cast<std::uint8_t>(a.dim())};
  return out;
}

SignedBlade naive_reorder_sign(std::span<const int> factors, int dim) {
  check_dim(dim);
  std::vector<int> word(factors.begin(), factors.end());
  for (int index : word)
    if (index < 1 || index > dim)
      throw std::out_of_range("vector index " + std::to_string(index) +
                              " outside 1.." + std::to_string(dim));
  bool neg = false;
  // Bubble the word into ascending order one adjacent swap at a time; each
  // swap of distinct vectors flips the sign.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        neg = !neg;
        moved = true;
      }
    }
  }
  // Adjacent equal factors cancel: e_j e_j = 1.
  std::vector<int> reduced;
  reduced.reserve(word.size());
  for (std::size_t i = 0; i < word.size();) {
    if (i + 1 < word.size() && word[i] == word[i + 1]) {
      i += 2;
    } else {
      reduced.push_back(word[i]);
      ++i;
    }
  }
  std::uint16_t mask = 0;
  for (int index : reduced) mask |= static_cast<std::uint16_t>(1u << (index - 1));
  return SignedBlade::from_mask(mask, dim, neg);
}

int square_sign(const SignedBlade& b) {
  int r = grade(b);
  return (r * (r - 1) / 2) % 2 == 0 ? +1 : -1;
}

bool commutes(const SignedBlade& a, const SignedBlade& b) {
  check_same_dim(a, b);
  int shared = std::popcount(static_cast<unsigned>(a.mask() & b.mask()));
  return ((grade(a) * grade(b) - shared) & 1) == 0;
}

SignedBlade inverse(const SignedBlade& b) {
  SignedBlade out = b;
  if (square_sign(b) < 0) out.neg = !out.neg;
  return out;
}

}  // namespace geomgroup
