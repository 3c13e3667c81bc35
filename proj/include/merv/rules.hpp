#pragma once

// Top-t approval scoring and its co-winner sets over committee and list
// decision spaces.

#include <cstdint>
#include <string>
#include <vector>

#include "merv/core.hpp"

namespace merv {

/// scores[a-1] is the score of alternative a. Committees give a point to every
/// member; lists to their top min(t, length) alternatives.
std::vector<std::int64_t> approval_scores(const Profile& p, int t);
std::vector<std::int64_t> approval_scores(const Histogram& h, int t);

/// C_k: every k-subset of maximum total score. L_k: every ordering of such a
/// subset. Returned in priority order; throws BudgetExceeded over `cap`.
std::vector<Decision> cowinners(const Histogram& h, int t, DecisionSpace space, std::uint64_t cap = 1'000'000);
std::vector<Decision> cowinners(const Profile& p, int t, DecisionSpace space, std::uint64_t cap = 1'000'000);

/// Parses "app:<t>" and returns t.
int parse_approval_rule(const std::string& text);

}  // namespace merv
