#pragma once

// Alternatives, preferences, histograms, permutations and the priority order.
//
// Alternatives are 1-indexed integers in [1, m]. A preference is either a
// committee (unordered set) or a list (ranking of distinct alternatives);
// decisions use the same representation.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace merv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration cap was hit before an exact answer was reached.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

enum class Kind : std::uint8_t { Committee, List };

char kind_letter(Kind kind);

class Preference {
 public:
  /// Members must be non-empty, positive and pairwise distinct. Committees are
  /// stored sorted; a single-member list is stored as a committee.
  Preference(Kind kind, std::vector<int> members);

  static Preference committee(std::vector<int> members) {
    return Preference(Kind::Committee, std::move(members));
  }
  static Preference list(std::vector<int> members) {
    return Preference(Kind::List, std::move(members));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_committee() const noexcept { return kind_ == Kind::Committee; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  std::span<const int> members() const noexcept { return members_; }
  int operator[](std::size_t position) const { return members_[position]; }
  bool contains(int alternative) const;
  int max_alternative() const;

  /// "C 1 2" or "L 3 4 1".
  std::string to_string() const;

  friend bool operator==(const Preference&, const Preference&) = default;

 private:
  Kind kind_;
  std::vector<int> members_;
};

using Decision = Preference;

/// The priority order: smaller size first, committees before lists of the same
/// size, then lexicographic on the stored member sequence. `less` means
/// higher priority.
std::strong_ordering priority_cmp(const Preference& a, const Preference& b);

struct PriorityLess {
  bool operator()(const Preference& a, const Preference& b) const {
    return priority_cmp(a, b) < 0;
  }
};

/// Sorted lists of (u, v) pairs with u < v, compared element-wise.
using Edge = std::pair<int, int>;
std::strong_ordering priority_cmp(std::span<const Edge> a, std::span<const Edge> b);

class Permutation {
 public:
  /// image[i] = sigma(i + 1); values are 1-based and must form a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int m);
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int alternative) const { return image_.at(alternative - 1); }
  std::span<const int> image() const noexcept { return image_; }
  bool is_identity() const;
  Permutation inverse() const;

  /// "(1,2)(3,4)", or "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (outer o inner)(a) = outer(inner(a)).
Permutation compose(const Permutation& outer, const Permutation& inner);

struct HistogramEntry {
  Preference preference;
  std::int64_t multiplicity;

  friend bool operator==(const HistogramEntry&, const HistogramEntry&) = default;
};

class Histogram {
 public:
  explicit Histogram(int m);
  /// Duplicate preferences are merged; entries end up sorted by priority.
  Histogram(int m, std::vector<HistogramEntry> entries);

  int m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t distinct() const noexcept { return entries_.size(); }
  std::span<const HistogramEntry> entries() const noexcept { return entries_; }
  std::int64_t multiplicity(const Preference& preference) const;

  /// Compact text rendering: "m <m>" then "<mult> x <C|L> <members>" lines.
  std::string render() const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  int m_;
  std::int64_t n_ = 0;
  std::vector<HistogramEntry> entries_;
};

/// Entry-by-entry comparison of compact renderings; on an equal preference the
/// higher multiplicity comes first. Histograms over different m are rejected.
std::strong_ordering priority_cmp(const Histogram& a, const Histogram& b);

class Profile {
 public:
  Profile(int m, std::vector<Preference> votes);

  int m() const noexcept { return m_; }
  std::span<const Preference> votes() const noexcept { return votes_; }
  std::size_t size() const noexcept { return votes_.size(); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int m_;
  std::vector<Preference> votes_;
};

Histogram hist(const Profile& profile);

/// Expands a histogram into a profile with votes listed in priority order.
Profile to_profile(const Histogram& h);

Preference apply_perm(const Permutation& sigma, const Preference& x);
Profile apply_perm(const Permutation& sigma, const Profile& x);
Histogram apply_perm(const Permutation& sigma, const Histogram& x);

struct DecisionSpace {
  Kind kind;
  int k;

  /// Throws InputError unless 1 <= k <= m.
  void validate(int m) const;
  bool contains(const Decision& d) const;
  /// "C:2" / "L:3".
  std::string to_string() const;
  static DecisionSpace parse(const std::string& text);

  friend bool operator==(const DecisionSpace&, const DecisionSpace&) = default;
};

/// Number of decisions in the space, saturating at UINT64_MAX.
std::uint64_t decision_count(DecisionSpace space, int m);

/// All decisions in ascending priority order. Throws BudgetExceeded when the
/// space holds more than `cap` decisions.
std::vector<Decision> enumerate_decisions(DecisionSpace space, int m, std::uint64_t cap);

/// All m! permutations in lexicographic order of their images; m <= 10.
std::vector<Permutation> all_permutations(int m);

}  // namespace merv
