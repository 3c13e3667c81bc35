#include "merv/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace merv::io {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

class LineError {
 public:
  LineError(std::string source, int line) : source_(std::move(source)), line_(line) {}
  [[noreturn]] void fail(const std::string& reason) const {
    throw InputError(source_ + ":" + std::to_string(line_) + ": " + reason);
  }

 private:
  std::string source_;
  int line_;
};

long long parse_int(const std::string& t, const LineError& err, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) err.fail(std::string("expected integer ") + what + ", got '" + t + "'");
  return v;
}

}  // namespace

Profile parse_profile_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int m = 0;
  std::vector<Preference> votes;
  while (std::getline(in, raw)) {
    ++line_no;
    LineError err(source, line_no);
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (m == 0) {
      if (t.size() != 2 || t[0] != "m") err.fail("expected 'm <number of alternatives>'");
      long long v = parse_int(t[1], err, "m");
      if (v < 1 || v > 1'000'000) err.fail("m must be a positive integer");
      m = static_cast<int>(v);
      continue;
    }
    if (t.size() < 4 || t[1] != "x" || (t[2] != "C" && t[2] != "L"))
      err.fail("expected '<mult> x C|L <alternatives...>'");
    long long mult = parse_int(t[0], err, "multiplicity");
    if (mult < 1) err.fail("multiplicity must be positive");
    if (mult > 1'000'000) err.fail("multiplicity too large");
    std::vector<int> members;
    std::vector<char> seen(m + 1, 0);
    for (std::size_t i = 3; i < t.size(); ++i) {
      long long a = parse_int(t[i], err, "alternative");
      if (a < 1 || a > m) err.fail("alternative " + t[i] + " outside [1, " + std::to_string(m) + "]");
      if (seen[a]) err.fail("duplicate alternative " + t[i]);
      seen[a] = 1;
      members.push_back(static_cast<int>(a));
    }
    Preference pref(t[2] == "C" ? Kind::Committee : Kind::List, std::move(members));
    for (long long i = 0; i < mult; ++i) votes.push_back(pref);
  }
  if (m == 0) throw InputError(source + ": missing 'm' line");
  if (votes.empty()) throw InputError(source + ": profile has no votes");
  return Profile(m, std::move(votes));
}

Profile parse_profile(const std::string& path) { return parse_profile_text(read_file(path), path); }

std::string write_profile(const Profile& p) {
  std::string out = "m " + std::to_string(p.m()) + "\n";
  auto votes = p.votes();
  for (std::size_t i = 0; i < votes.size();) {
    std::size_t j = i;
    while (j < votes.size() && votes[j] == votes[i]) ++j;
    out += std::to_string(j - i) + " x " + votes[i].to_string() + "\n";
    i = j;
  }
  return out;
}

std::optional<DecisionSpace> declared_decision(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash == std::string::npos) continue;
    auto t = tokens(raw.substr(hash + 1));
    if (t.size() == 2 && t[0] == "decision") return DecisionSpace::parse(t[1]);
  }
  return std::nullopt;
}

ColoredGraph parse_graph_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> colors;
  while (std::getline(in, raw)) {
    ++line_no;
    LineError err(source, line_no);
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (n < 0) {
      if (t.size() != 2 || t[0] != "p") err.fail("expected 'p <number of vertices>'");
      long long v = parse_int(t[1], err, "vertex count");
      if (v < 0 || v > 10'000'000) err.fail("bad vertex count");
      n = static_cast<int>(v);
      colors.assign(n, 0);
      continue;
    }
    if (t[0] == "e") {
      if (t.size() != 3) err.fail("expected 'e <u> <v>'");
      long long u = parse_int(t[1], err, "vertex"), v = parse_int(t[2], err, "vertex");
      if (u < 1 || u > n || v < 1 || v > n) err.fail("vertex outside [1, " + std::to_string(n) + "]");
      if (u == v) err.fail("self-loop");
      edges.emplace_back(static_cast<int>(std::min(u, v)) - 1, static_cast<int>(std::max(u, v)) - 1);
    } else if (t[0] == "c") {
      if (t.size() != 3) err.fail("expected 'c <vertex> <colour>'");
      long long v = parse_int(t[1], err, "vertex"), c = parse_int(t[2], err, "colour");
      if (v < 1 || v > n) err.fail("vertex outside [1, " + std::to_string(n) + "]");
      if (c < 0 || c > 1'000'000'000) err.fail("colour must be non-negative");
      colors[v - 1] = static_cast<int>(c);
    } else {
      err.fail("unknown line type '" + t[0] + "'");
    }
  }
  if (n < 0) throw InputError(source + ": missing 'p' line");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError(source + ": duplicate edge");
  return ColoredGraph(n, std::move(edges), std::move(colors));
}

ColoredGraph parse_graph(const std::string& path) { return parse_graph_text(read_file(path), path); }

std::string render_edges(int num_vertices, const std::vector<Edge>& edges) {
  std::string out = "p " + std::to_string(num_vertices) + "\n";
  for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string write_graph(const ColoredGraph& g) {
  std::string out = render_edges(g.num_vertices(), g.edges());
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.colors()[v] != 0) out += "c " + std::to_string(v + 1) + " " + std::to_string(g.colors()[v]) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << content;
  if (!out) throw InputError(path + ": write failed");
}

}  // namespace merv::io
