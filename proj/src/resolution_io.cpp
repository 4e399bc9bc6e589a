#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "ztop/error.hpp"
#include "ztop/resolution.hpp"

namespace ztop::resolution {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw Error(ErrorCode::BadData, "line " + std::to_string(line_no) + ": " + msg);
}

std::int64_t to_int(std::string_view tok, int line_no) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line_no, "expected integer, got '" + std::string(tok) + "'");
  return v;
}

std::vector<ComponentId> parse_members(const std::string& tok, int line_no) {
  std::vector<ComponentId> out;
  if (tok == "empty") return out;
  std::stringstream ss(tok);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(static_cast<ComponentId>(to_int(part, line_no)));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) fail(line_no, "repeated member in stratum");
  return out;
}

}  // namespace

ResolutionData parse_resolution(std::istream& in) {
  ResolutionData data;
  bool have_dim = false;
  std::set<ComponentId> ids;
  std::set<std::vector<ComponentId>> member_sets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "dim") {
      if (tok.size() != 2) fail(line_no, "usage: dim <n>");
      data.dim = static_cast<int>(to_int(tok[1], line_no));
      if (data.dim < 1) fail(line_no, "dim must be positive");
      have_dim = true;
    } else if (kw == "variant") {
      if (tok.size() != 2 || (tok[1] != "local" && tok[1] != "global")) fail(line_no, "usage: variant <local|global>");
      data.variant = tok[1] == "local" ? Variant::Local : Variant::Global;
    } else if (kw == "component") {
      if (tok.size() != 5 && tok.size() != 6) fail(line_no, "usage: component <id> <N> <nu> <exceptional|strict> [fiber]");
      Component c;
      c.id = static_cast<ComponentId>(to_int(tok[1], line_no));
      c.n_mult = to_int(tok[2], line_no);
      c.v_mult = to_int(tok[3], line_no);
      if (c.n_mult < 1 || c.v_mult < 1) fail(line_no, "N and nu must be positive");
      if (tok[4] == "exceptional") {
        c.kind = Kind::Exceptional;
      } else if (tok[4] == "strict") {
        c.kind = Kind::Strict;
      } else {
        fail(line_no, "unknown component kind '" + tok[4] + "'");
      }
      c.meets_fiber = false;
      if (tok.size() == 6) {
        if (tok[5] != "fiber") fail(line_no, "unexpected token '" + tok[5] + "'");
        c.meets_fiber = true;
      }
      if (!ids.insert(c.id).second) fail(line_no, "duplicate component id " + tok[1]);
      data.components.push_back(c);
    } else if (kw == "stratum") {
      if (tok.size() != 3) fail(line_no, "usage: stratum <id>[,<id>...]|empty <chi>");
      Stratum s{parse_members(tok[1], line_no), to_int(tok[2], line_no)};
      if (!member_sets.insert(s.members).second) fail(line_no, "duplicate stratum " + tok[1]);
      data.strata.push_back(std::move(s));
    } else {
      fail(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_dim) throw Error(ErrorCode::BadData, "missing 'dim' line");
  validate(data);
  return data;
}

ResolutionData parse_resolution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadData, "cannot open " + path);
  return parse_resolution(in);
}

std::string render_resolution(const ResolutionData& data) {
  std::ostringstream os;
  os << "dim " << data.dim << '\n';
  os << "variant " << (data.variant == Variant::Local ? "local" : "global") << '\n';
  for (const auto& c : data.components) {
    os << "component " << c.id << ' ' << c.n_mult << ' ' << c.v_mult << ' '
       << (c.kind == Kind::Exceptional ? "exceptional" : "strict");
    if (c.meets_fiber) os << " fiber";
    os << '\n';
  }
  for (const auto& s : data.strata) {
    os << "stratum ";
    if (s.members.empty()) {
      os << "empty";
    } else {
      for (std::size_t k = 0; k < s.members.size(); ++k) os << (k ? "," : "") << s.members[k];
    }
    os << ' ' << s.chi << '\n';
  }
  return os.str();
}

}  // namespace ztop::resolution
