#pragma once

// Symmetric-group combinatorics on the N! particle orderings: permutations
// in cycle notation, orderings (spatial domains), the particle and ordering
// actions, and their N!xN! well-permutation matrices.

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nearunitary/errors.hpp"

namespace nearunitary {

// Dense operator assembly is guarded at N! = 40320 wells.
inline constexpr int kMaxParticles = 8;

std::int64_t factorial(int n);

// A permutation of {1..N}. External I/O is 1-based to match cycle notation;
// internal storage is 0-based images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image_zero_based);
  static Permutation identity(int n);
  // Parses whitespace-insensitive cycle notation such as "(12)(3)" or "()".
  // Throws domain_error naming the offending character position.
  static Permutation from_cycles(const std::string& text, int n);
  static Permutation transposition(int n, int a, int b);  // 0-based a, b

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }  // 0-based
  const std::vector<int>& image() const { return image_; }
  std::vector<int> image_one_based() const;

  Permutation inverse() const;
  // (p * q)(i) = p(q(i))
  Permutation operator*(const Permutation& q) const;
  bool operator==(const Permutation&) const = default;

  int sign() const;
  // Cycle type as a descending partition of N, e.g. [2,1,1] for a 2-cycle in S4.
  std::vector<int> cycle_type() const;
  std::string to_cycles() const;  // 1-based, fixed points omitted

 private:
  std::vector<int> image_;
};

// A left-to-right spatial order of particle labels: seq = {i,j,k} means
// x_i < x_j < x_k. Labels are 0-based internally, 1-based in I/O.
class Ordering {
 public:
  explicit Ordering(std::vector<int> seq_zero_based);

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  std::vector<int> seq_one_based() const;

  // Rank in the lexicographic enumeration of all N! orderings.
  std::int64_t lex_index() const;
  static Ordering from_lex_index(int n, std::int64_t index);

  bool operator==(const Ordering&) const = default;
  std::string to_string() const;  // "<123>" style, 1-based

 private:
  std::vector<int> seq_;
};

// All N! orderings in strict lexicographic order; position defines the
// well-basis index. Requires 2 <= n <= kMaxParticles.
std::vector<Ordering> all_orderings(int n);

// Relabel particles in place: entry k becomes p(seq[k]).
Ordering particle_action(const Permutation& p, const Ordering& w);

// Permute positions: the q(k)-th entry of the result is seq[k].
Ordering ordering_action(const Permutation& q, const Ordering& w);

// A permutation of the N! wells, stored as the image of each well index.
// This is the common currency between actions and matrices.
class WellPermutation {
 public:
  explicit WellPermutation(std::vector<std::int64_t> image);
  // Induced well permutation of w -> f(w) over all orderings of n particles.
  // Throws domain_error if f is not a bijection.
  static WellPermutation from_ordering_map(
      int n, const std::function<Ordering(const Ordering&)>& f);
  static WellPermutation from_particle_action(int n, const Permutation& p);
  static WellPermutation from_ordering_action(int n, const Permutation& q);
  // Ordering reversal <i...k> -> <k...i>; realizes parity for symmetric traps.
  static WellPermutation reversal(int n);
  static WellPermutation transposition(std::int64_t dim, std::int64_t a,
                                       std::int64_t b);

  std::int64_t dim() const { return static_cast<std::int64_t>(image_.size()); }
  std::int64_t operator()(std::int64_t i) const { return image_[i]; }
  WellPermutation operator*(const WellPermutation& other) const;
  bool operator==(const WellPermutation&) const = default;

  // Matrix M with M[f(w), w] = 1 in the lexicographic well basis.
  Eigen::MatrixXd matrix() const;

 private:
  std::vector<std::int64_t> image_;
};

// Paper-facing letter labels for the N=3 wells: A..F in hexagon order
// A=<123>, B=<132>, C=<312>, D=<321>, E=<231>, F=<213>.
char well_letter3(std::int64_t lex_index);
std::int64_t well_index3(char letter);

}  // namespace nearunitary
