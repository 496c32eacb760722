#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sgp {

// A numerical semigroup S = <g1,...,gn>: all nonnegative integer
// combinations of the generators.  gcd(g1..gn) must be 1 so the complement
// in Z>=0 is finite.
//
// Membership is exact for every integer: z >= conductor is always a member,
// and below the conductor a bitset decides.  The bitset actually extends to
// a larger "window" so that order computations and ideal arithmetic have
// room to work; operations that would need to look past the window throw
// OutOfWindow instead of guessing.
class NumericalSemigroup {
 public:
  // window_min lets callers demand a larger window up front (deep power /
  // superficiality computations need one).  The default window is
  // 2*(conductor + 4*multiplicity).
  explicit NumericalSemigroup(std::vector<Int> generators, Int window_min = 0) {
    if (generators.empty()) throw EmptyGeneratorsError();
    for (Int g : generators)
      if (g <= 0) throw NonPositiveError(g);
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    Int g = 0;
    for (Int v : generators) g = std::gcd(g, v);
    if (g != 1) throw NonCoprimeError(g);

    const Int lo = generators.front();
    // Locate the conductor: the first start of lo consecutive members.  A
    // run of lo members forces membership of everything beyond it (keep
    // adding lo), so the first such start is exactly the conductor.  Grow
    // the scan window until the run appears.
    Int conductor = -1;
    for (Int size = 256; conductor < 0; size *= 2) {
      if (size > (Int{1} << 27))
        throw BoundExceededError("semigroup construction (conductor too large)");
      std::vector<char> reach(static_cast<std::size_t>(size), 0);
      fill_reachable(reach, generators);
      Int run = 0;
      for (Int z = 0; z < size; ++z) {
        run = reach[static_cast<std::size_t>(z)] ? run + 1 : 0;
        if (run == lo) {
          conductor = z - lo + 1;
          break;
        }
      }
    }
    frobenius_ = conductor - 1;
    conductor_ = conductor;
    multiplicity_ = lo;

    window_ = std::max<Int>(2 * (conductor_ + 4 * multiplicity_), window_min);
    window_ = std::max<Int>(window_, conductor_ + 2 * multiplicity_ + 2);
    if (window_ > (Int{1} << 26))
      throw BoundExceededError("semigroup window");
    std::vector<char> member(static_cast<std::size_t>(window_), 0);
    fill_reachable(member, generators);
    words_.assign(static_cast<std::size_t>((window_ + 63) / 64), 0);
    for (Int z = 0; z < window_; ++z)
      if (member[static_cast<std::size_t>(z)])
        words_[static_cast<std::size_t>(z >> 6)] |= std::uint64_t{1} << (z & 63);

    for (Int z = 1; z < conductor_; ++z)
      if (!bit(z)) gaps_.push_back(z);

    compute_minimal_generators();
    compute_ord_table();
    compute_pseudo_frobenius();
  }

  // Reconstructs the unique numerical semigroup whose gap set is exactly
  // `gaps`; throws PreconditionFailed if no semigroup has that complement.
  static NumericalSemigroup from_gaps(const std::vector<Int>& gaps,
                                      Int window_min = 0) {
    std::vector<Int> sorted(gaps);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != gaps.size())
      throw PreconditionFailedError("gap list has duplicates");
    for (Int z : sorted)
      if (z <= 0) throw PreconditionFailedError("gap list must be positive");
    const Int frob = sorted.empty() ? -1 : sorted.back();
    std::vector<char> member(static_cast<std::size_t>(frob + 2), 1);
    for (Int z : sorted) member[static_cast<std::size_t>(z)] = 0;
    // Minimal generators of the complement: members not expressible as a
    // sum of two smaller nonzero members.
    std::vector<Int> gens;
    auto is_member = [&](Int z) {
      return z >= 0 && (z > frob || member[static_cast<std::size_t>(z)]);
    };
    for (Int z = 1; z <= frob + 1 + first_member(member); ++z) {
      if (!is_member(z)) continue;
      bool decomposable = false;
      for (Int x = 1; x + x <= z && !decomposable; ++x)
        if (is_member(x) && is_member(z - x)) decomposable = true;
      if (!decomposable) gens.push_back(z);
    }
    NumericalSemigroup result(gens, window_min);
    if (result.gaps() != sorted)
      throw PreconditionFailedError("gap list is not closed under the semigroup laws");
    return result;
  }

  bool contains(Int z) const {
    if (z < 0) return false;
    if (z >= conductor_) return true;
    return bit(z);
  }

  Int multiplicity() const { return multiplicity_; }
  Int frobenius() const { return frobenius_; }
  Int conductor() const { return conductor_; }
  Int genus() const { return static_cast<Int>(gaps_.size()); }
  Int window() const { return window_; }
  const std::vector<Int>& gaps() const { return gaps_; }
  const std::vector<Int>& minimal_generators() const { return mingens_; }
  Int embedding_dimension() const { return static_cast<Int>(mingens_.size()); }
  const std::vector<Int>& pseudo_frobenius() const { return pf_; }
  // The full semigroup has no gaps and hence an empty pseudo-Frobenius set;
  // its ring is regular and counts as type 1.
  Int type() const {
    return genus() == 0 ? 1 : static_cast<Int>(pf_.size());
  }
  bool symmetric() const { return 2 * genus() == conductor_; }

  // Largest number of nonzero-member summands in a representation of s.
  Int ord(Int s) const {
    if (!contains(s)) throw NotInSemigroupError(s);
    if (s >= window_) throw OutOfWindowError(s + 1, window_);
    return static_cast<Int>(ord_[static_cast<std::size_t>(s)]);
  }

  // Apery set of S with respect to a nonzero member a: the a smallest
  // members in each residue class mod a, returned in increasing order.
  std::vector<Int> apery(Int a) const {
    if (a <= 0) throw NonPositiveError(a);
    if (!contains(a)) throw NotInSemigroupError(a);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(a));
    for (Int z = 0; static_cast<Int>(out.size()) < a; ++z)
      if (contains(z) && !contains(z - a)) out.push_back(z);
    return out;
  }

  // All members in [0, hi), increasing.
  std::vector<Int> members_below(Int hi) const {
    std::vector<Int> out;
    for (Int z = 0; z < hi; ++z)
      if (contains(z)) out.push_back(z);
    return out;
  }

  const std::vector<std::uint64_t>& membership_words() const { return words_; }

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.mingens_ == b.mingens_;
  }
  friend bool operator!=(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return !(a == b);
  }

 private:
  bool bit(Int z) const {
    return (words_[static_cast<std::size_t>(z >> 6)] >>
            (z & 63)) & 1;
  }

  static void fill_reachable(std::vector<char>& reach,
                             const std::vector<Int>& gens) {
    reach[0] = 1;
    const Int n = static_cast<Int>(reach.size());
    for (Int z = 1; z < n; ++z)
      for (Int g : gens) {
        if (g > z) break;
        if (reach[static_cast<std::size_t>(z - g)]) {
          reach[static_cast<std::size_t>(z)] = 1;
          break;
        }
      }
  }

  static Int first_member(const std::vector<char>& member) {
    for (std::size_t z = 1; z < member.size(); ++z)
      if (member[z]) return static_cast<Int>(z);
    return static_cast<Int>(member.size());
  }

  void compute_minimal_generators() {
    // Minimal generators all lie in [1, conductor + multiplicity]: each one
    // is either the multiplicity or an Apery element with respect to it.
    const Int hi = conductor_ + multiplicity_;
    for (Int z = 1; z <= hi; ++z) {
      if (!contains(z)) continue;
      bool decomposable = false;
      for (Int x = multiplicity_; x + x <= z && !decomposable; ++x)
        if (contains(x) && contains(z - x)) decomposable = true;
      if (!decomposable) mingens_.push_back(z);
    }
  }

  void compute_ord_table() {
    // A longest factorization only ever uses minimal generators (any other
    // summand could be split, making it longer), so a DP over the minimal
    // generators is exact.
    ord_.assign(static_cast<std::size_t>(window_), -1);
    ord_[0] = 0;
    for (Int z = 1; z < window_; ++z) {
      if (!contains(z)) continue;
      std::int32_t best = -1;
      for (Int g : mingens_) {
        if (g > z) break;
        const std::int32_t rest = ord_[static_cast<std::size_t>(z - g)];
        if (rest >= 0) best = std::max(best, static_cast<std::int32_t>(rest + 1));
      }
      ord_[static_cast<std::size_t>(z)] = best;
    }
  }

  void compute_pseudo_frobenius() {
    // f is pseudo-Frobenius iff f is outside S but f + g lands in S for
    // every minimal generator g (then f + s is in S for every nonzero
    // member s).  Only gaps qualify, so the full semigroup gets an empty
    // set.
    for (Int f : gaps_) {
      bool ok = true;
      for (Int g : mingens_)
        if (!contains(f + g)) {
          ok = false;
          break;
        }
      if (ok) pf_.push_back(f);
    }
  }

  Int multiplicity_ = 0;
  Int frobenius_ = 0;
  Int conductor_ = 0;
  Int window_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<Int> gaps_;
  std::vector<Int> mingens_;
  std::vector<Int> pf_;
  std::vector<std::int32_t> ord_;
};

}  // namespace sgp
