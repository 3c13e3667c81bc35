#include "merv/core.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace merv {

char kind_letter(Kind kind) { return kind == Kind::Committee ? 'C' : 'L'; }

Preference::Preference(Kind kind, std::vector<int> members)
    : kind_(kind), members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("preference must be non-empty");
  std::vector<int> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw std::invalid_argument("alternatives are 1-based");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate alternative in preference");
  if (members_.size() == 1) kind_ = Kind::Committee;
  if (kind_ == Kind::Committee) members_ = std::move(sorted);
}

bool Preference::contains(int alternative) const {
  return std::find(members_.begin(), members_.end(), alternative) != members_.end();
}

int Preference::max_alternative() const {
  return *std::max_element(members_.begin(), members_.end());
}

std::string Preference::to_string() const {
  std::string out(1, kind_letter(kind_));
  for (int a : members_) {
    out += ' ';
    out += std::to_string(a);
  }
  return out;
}

std::strong_ordering priority_cmp(const Preference& a, const Preference& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members().begin(), a.members().end(),
                                                b.members().begin(), b.members().end());
}

std::strong_ordering priority_cmp(std::span<const Edge> a, std::span<const Edge> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> image(m);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(m);
  std::iota(image.begin(), image.end(), 1);
  std::vector<char> used(m + 1, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      if (a < 1 || a > m || used[a]) throw std::invalid_argument("bad cycle notation");
      used[a] = 1;
      image[a - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(image_.size() + 1, 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start] || image_[start - 1] == start) continue;
    out += '(';
    int a = start;
    bool first = true;
    while (!seen[a]) {
      seen[a] = 1;
      if (!first) out += ',';
      first = false;
      out += std::to_string(a);
      a = image_[a - 1];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> image(inner.size());
  for (int a = 1; a <= inner.size(); ++a) image[a - 1] = outer(inner(a));
  return Permutation(std::move(image));
}

Histogram::Histogram(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
}

Histogram::Histogram(int m, std::vector<HistogramEntry> entries) : Histogram(m) {
  std::map<Preference, std::int64_t, PriorityLess> merged;
  for (auto& e : entries) {
    if (e.multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
    if (e.preference.max_alternative() > m)
      throw std::invalid_argument("alternative out of range in histogram");
    merged[e.preference] += e.multiplicity;
  }
  entries_.reserve(merged.size());
  for (auto& [pref, mult] : merged) {
    entries_.push_back({pref, mult});
    n_ += mult;
  }
}

std::int64_t Histogram::multiplicity(const Preference& preference) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), preference,
                             [](const HistogramEntry& e, const Preference& p) {
                               return priority_cmp(e.preference, p) < 0;
                             });
  if (it != entries_.end() && it->preference == preference) return it->multiplicity;
  return 0;
}

std::string Histogram::render() const {
  std::string out = "m " + std::to_string(m_) + "\n";
  for (const auto& e : entries_) {
    out += std::to_string(e.multiplicity);
    out += " x ";
    out += e.preference.to_string();
    out += '\n';
  }
  return out;
}

std::strong_ordering priority_cmp(const Histogram& a, const Histogram& b) {
  if (a.m() != b.m()) throw std::invalid_argument("histograms over different m are not comparable");
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = priority_cmp(ea[i].preference, eb[i].preference); c != 0) return c;
    if (ea[i].multiplicity != eb[i].multiplicity)
      return ea[i].multiplicity > eb[i].multiplicity ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
  }
  return ea.size() <=> eb.size();
}

Profile::Profile(int m, std::vector<Preference> votes) : m_(m), votes_(std::move(votes)) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (votes_.empty()) throw std::invalid_argument("profile must be non-empty");
  for (const auto& v : votes_)
    if (v.max_alternative() > m) throw std::invalid_argument("alternative out of range in profile");
}

Histogram hist(const Profile& profile) {
  std::vector<HistogramEntry> entries;
  entries.reserve(profile.size());
  for (const auto& v : profile.votes()) entries.push_back({v, 1});
  return Histogram(profile.m(), std::move(entries));
}

Profile to_profile(const Histogram& h) {
  std::vector<Preference> votes;
  for (const auto& e : h.entries())
    for (std::int64_t i = 0; i < e.multiplicity; ++i) votes.push_back(e.preference);
  return Profile(h.m(), std::move(votes));
}

Preference apply_perm(const Permutation& sigma, const Preference& x) {
  if (x.max_alternative() > sigma.size())
    throw std::invalid_argument("permutation does not cover preference");
  std::vector<int> image;
  image.reserve(x.size());
  for (int a : x.members()) image.push_back(sigma(a));
  return Preference(x.kind(), std::move(image));
}

Profile apply_perm(const Permutation& sigma, const Profile& x) {
  if (sigma.size() != x.m()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Preference> votes;
  votes.reserve(x.size());
  for (const auto& v : x.votes()) votes.push_back(apply_perm(sigma, v));
  return Profile(x.m(), std::move(votes));
}

Histogram apply_perm(const Permutation& sigma, const Histogram& x) {
  if (sigma.size() != x.m()) throw std::invalid_argument("permutation size mismatch");
  std::vector<HistogramEntry> entries;
  entries.reserve(x.distinct());
  for (const auto& e : x.entries()) entries.push_back({apply_perm(sigma, e.preference), e.multiplicity});
  return Histogram(x.m(), std::move(entries));
}

void DecisionSpace::validate(int m) const {
  if (k < 1 || k > m)
    throw InputError("decision size " + std::to_string(k) + " outside [1, " + std::to_string(m) + "]");
}

bool DecisionSpace::contains(const Decision& d) const {
  if (d.size() != k) return false;
  return k == 1 || d.kind() == kind;
}

std::string DecisionSpace::to_string() const {
  return std::string(1, kind_letter(kind)) + ":" + std::to_string(k);
}

DecisionSpace DecisionSpace::parse(const std::string& text) {
  if (text.size() < 3 || text[1] != ':' || (text[0] != 'C' && text[0] != 'L'))
    throw InputError("decision space must look like C:<k> or L:<k>, got '" + text + "'");
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text.substr(2), &used);
  } catch (const std::exception&) {
    throw InputError("bad decision size in '" + text + "'");
  }
  if (used != text.size() - 2 || k < 1) throw InputError("bad decision size in '" + text + "'");
  Kind kind = text[0] == 'C' || k == 1 ? Kind::Committee : Kind::List;
  return {kind, k};
}

std::uint64_t decision_count(DecisionSpace space, int m) {
  const std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
  if (space.k < 0 || space.k > m) return 0;
  unsigned __int128 count = 1;
  for (int i = 0; i < space.k; ++i) {
    count *= static_cast<unsigned>(m - i);
    if (space.kind == Kind::Committee || space.k == 1) count /= static_cast<unsigned>(i + 1);
    if (count > sat) return sat;
  }
  return static_cast<std::uint64_t>(count);
}

namespace {

// Yields k-subsets of [1, m] in lexicographic order.
bool next_combination(std::vector<int>& c, int m) {
  int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == m - k + i + 1) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// Yields k-arrangements of [1, m] in lexicographic order.
void arrangements(int m, int k, std::vector<int>& cur, std::vector<char>& used,
                  std::vector<Decision>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(Preference::list(cur));
    return;
  }
  for (int a = 1; a <= m; ++a) {
    if (used[a]) continue;
    used[a] = 1;
    cur.push_back(a);
    arrangements(m, k, cur, used, out);
    cur.pop_back();
    used[a] = 0;
  }
}

}  // namespace

std::vector<Decision> enumerate_decisions(DecisionSpace space, int m, std::uint64_t cap) {
  space.validate(m);
  std::uint64_t count = decision_count(space, m);
  if (count > cap)
    throw BudgetExceeded("decision space " + space.to_string() + " over m=" + std::to_string(m) +
                         " exceeds enumeration cap");
  std::vector<Decision> out;
  out.reserve(count);
  if (space.kind == Kind::Committee || space.k == 1) {
    std::vector<int> c(space.k);
    std::iota(c.begin(), c.end(), 1);
    do {
      out.push_back(Preference::committee(c));
    } while (next_combination(c, m));
  } else {
    std::vector<int> cur;
    std::vector<char> used(m + 1, 0);
    arrangements(m, space.k, cur, used, out);
  }
  return out;
}

std::vector<Permutation> all_permutations(int m) {
  if (m > 10) throw BudgetExceeded("refusing to enumerate S_m for m > 10");
  std::vector<int> image(m);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace merv
