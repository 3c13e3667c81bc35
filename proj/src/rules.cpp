#include "merv/rules.hpp"

#include <algorithm>
#include <numeric>

namespace merv {

std::vector<std::int64_t> approval_scores(const Histogram& h, int t) {
  if (t < 1) throw std::invalid_argument("approval depth must be at least 1");
  std::vector<std::int64_t> scores(h.m(), 0);
  for (const auto& e : h.entries()) {
    const auto& r = e.preference;
    int top = r.is_committee() ? r.size() : std::min(t, r.size());
    for (int i = 0; i < top; ++i) scores[r[i] - 1] += e.multiplicity;
  }
  return scores;
}

std::vector<std::int64_t> approval_scores(const Profile& p, int t) { return approval_scores(hist(p), t); }

std::vector<Decision> cowinners(const Histogram& h, int t, DecisionSpace space, std::uint64_t cap) {
  space.validate(h.m());
  const int m = h.m();
  const int k = space.k;
  auto scores = approval_scores(h, t);
  std::vector<std::int64_t> sorted = scores;
  std::sort(sorted.rbegin(), sorted.rend());
  std::int64_t cut = sorted[k - 1];
  std::vector<int> above, tied;
  for (int a = 1; a <= m; ++a) {
    if (scores[a - 1] > cut) above.push_back(a);
    else if (scores[a - 1] == cut) tied.push_back(a);
  }
  const int need = k - static_cast<int>(above.size());
  const bool lists = space.kind == Kind::List && k >= 2;

  std::uint64_t subsets = decision_count({Kind::Committee, need}, static_cast<int>(tied.size()));
  std::uint64_t orders = 1;
  if (lists)
    for (int i = 2; i <= k; ++i) orders *= static_cast<std::uint64_t>(i);
  if (subsets > cap || (subsets > 0 && orders > cap / subsets))
    throw BudgetExceeded("co-winner set exceeds cap");

  std::vector<Decision> out;
  std::vector<char> pick(tied.size(), 0);
  std::fill(pick.begin(), pick.begin() + need, 1);
  do {
    std::vector<int> members = above;
    for (std::size_t i = 0; i < tied.size(); ++i)
      if (pick[i]) members.push_back(tied[i]);
    std::sort(members.begin(), members.end());
    if (!lists) {
      out.push_back(Preference::committee(members));
      continue;
    }
    do {
      out.push_back(Preference::list(members));
    } while (std::next_permutation(members.begin(), members.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(), PriorityLess{});
  return out;
}

std::vector<Decision> cowinners(const Profile& p, int t, DecisionSpace space, std::uint64_t cap) {
  return cowinners(hist(p), t, space, cap);
}

int parse_approval_rule(const std::string& text) {
  if (text.rfind("app:", 0) != 0) throw InputError("rule must look like app:<t>, got '" + text + "'");
  std::size_t used = 0;
  int t = 0;
  try {
    t = std::stoi(text.substr(4), &used);
  } catch (const std::exception&) {
    throw InputError("bad approval depth in '" + text + "'");
  }
  if (used != text.size() - 4 || t < 1) throw InputError("bad approval depth in '" + text + "'");
  return t;
}

}  // namespace merv
