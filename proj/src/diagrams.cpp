#include "lltlab/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace llt {

AreaSequence::AreaSequence(std::vector<int> entries) : a(std::move(entries)) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] > static_cast<int>(i))
      fail(ErrorCode::BadParams,
           "area entry a_" + std::to_string(i + 1) + " out of range in " + str());
    if (i + 1 < a.size() && a[i + 1] > a[i] + 1)
      fail(ErrorCode::BadParams, "area sequence rises by more than one in " + str());
  }
}

int AreaSequence::area_sum() const { return std::accumulate(a.begin(), a.end(), 0); }

bool AreaSequence::has_edge(int u, int v) const {
  if (u < 1 || v < u + 1 || v > n()) return false;
  return v - at(v) <= u;
}

std::string AreaSequence::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a[i];
  }
  return out.str();
}

AreaSequence area_from_string(const std::string& text) {
  std::vector<int> entries;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      entries.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad area entry '" + tok + "'");
    }
  }
  try {
    return AreaSequence(std::move(entries));
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

std::vector<AreaSequence> enumerate_area_sequences(int n) {
  if (n < 0) fail(ErrorCode::BadParams, "negative length");
  std::vector<AreaSequence> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      AreaSequence s;
      s.a = cur;
      out.push_back(std::move(s));
      return;
    }
    const int hi = i == 1 ? 0 : std::min(i - 1, cur.back() + 1);
    for (int v = 0; v <= hi; ++v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Edge> edges_of(const AreaSequence& a) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(a.area_sum()));
  for (int v = 1; v <= a.n(); ++v)
    for (int u = v - a.at(v); u < v; ++u) out.emplace_back(u, v);
  return out;
}

AreaSequence transpose(const AreaSequence& a) {
  const int n = a.n();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges_of(a)) {
    // reversed and relabeled: edge (n+1-v, n+1-u)
    ++indeg[static_cast<std::size_t>(n - u)];
  }
  AreaSequence t;
  t.a.assign(indeg.begin(), indeg.end());
  return AreaSequence(std::move(t.a));
}

StripDiagram::StripDiagram(AreaSequence a, std::vector<Edge> s)
    : area(std::move(a)), strict(std::move(s)) {
  std::sort(strict.begin(), strict.end());
  strict.erase(std::unique(strict.begin(), strict.end()), strict.end());
  for (const auto& [u, v] : strict) {
    if (u < 1 || u >= v || v > n())
      fail(ErrorCode::BadParams, "strict edge out of range");
    if (area.has_edge(u, v))
      fail(ErrorCode::BadParams, "strict edge " + std::to_string(u) + "-" +
                                     std::to_string(v) + " is already an edge of the graph");
  }
}

bool StripDiagram::is_canonical() const {
  const StripDiagram bare(area);
  const auto corners = outer_corners(bare);
  return std::all_of(strict.begin(), strict.end(), [&](const Edge& e) {
    return std::find(corners.begin(), corners.end(), e) != corners.end();
  });
}

std::string StripDiagram::str() const {
  std::string out = area.str();
  if (!strict.empty()) {
    out += " strict ";
    for (std::size_t i = 0; i < strict.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(strict[i].first) + "-" + std::to_string(strict[i].second);
    }
  }
  return out;
}

std::vector<Edge> strict_from_string(const std::string& text) {
  std::vector<Edge> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos)
      fail(ErrorCode::ParseError, "strict edge '" + tok + "' is not of the form u-v");
    try {
      out.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad strict edge '" + tok + "'");
    }
  }
  return out;
}

std::vector<Edge> outer_corners(const StripDiagram& d) {
  std::vector<Edge> out;
  const AreaSequence& a = d.area;
  for (int v = 2; v <= a.n(); ++v)
    for (int u = 1; u < v; ++u) {
      if (a.has_edge(u, v)) continue;
      if (std::find(d.strict.begin(), d.strict.end(), Edge{u, v}) != d.strict.end()) continue;
      const bool corner = (u + 1 == v) || (a.has_edge(u + 1, v) && a.has_edge(u, v - 1));
      if (corner) out.emplace_back(u, v);
    }
  std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
    return std::make_pair(x.second, x.first) < std::make_pair(y.second, y.first);
  });
  return out;
}

Family family_from_name(const std::string& name) {
  if (name == "complete") return Family::Complete;
  if (name == "line") return Family::Line;
  if (name == "lollipop") return Family::Lollipop;
  if (name == "melting_lollipop") return Family::MeltingLollipop;
  if (name == "melting_complete") return Family::MeltingComplete;
  if (name == "rectangular") return Family::Rectangular;
  fail(ErrorCode::BadParams, "unknown family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::Line: return "line";
    case Family::Lollipop: return "lollipop";
    case Family::MeltingLollipop: return "melting_lollipop";
    case Family::MeltingComplete: return "melting_complete";
    case Family::Rectangular: return "rectangular";
  }
  return "?";
}

AreaSequence family(Family kind, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      fail(ErrorCode::BadParams, std::string(family_name(kind)) + " takes " +
                                     std::to_string(k) + " parameter(s)");
  };
  std::vector<int> a;
  switch (kind) {
    case Family::Complete: {
      need(1);
      const int n = params[0];
      if (n < 0) fail(ErrorCode::BadParams, "complete needs n >= 0");
      for (int i = 1; i <= n; ++i) a.push_back(i - 1);
      break;
    }
    case Family::Line: {
      need(1);
      const int n = params[0];
      if (n < 1) fail(ErrorCode::BadParams, "line needs n >= 1");
      a.push_back(0);
      for (int i = 2; i <= n; ++i) a.push_back(1);
      break;
    }
    case Family::Lollipop: {
      need(2);
      const int m = params[0], n = params[1];
      if (m < 1 || n < 1) fail(ErrorCode::BadParams, "lollipop needs m,n >= 1");
      for (int i = 1; i <= m; ++i) a.push_back(i - 1);
      for (int i = 0; i < n; ++i) a.push_back(1);
      break;
    }
    case Family::MeltingComplete: {
      need(2);
      const int n = params[0], k = params[1];
      if (n < 1 || k < 0 || k > n - 1)
        fail(ErrorCode::BadParams, "melting_complete needs n >= 1, 0 <= k <= n-1");
      for (int i = 1; i < n; ++i) a.push_back(i - 1);
      a.push_back(n - k - 1);
      break;
    }
    case Family::MeltingLollipop: {
      need(3);
      const int m = params[0], k = params[1], n = params[2];
      if (m < 1 || n < 1 || k < 0 || k > m - 1)
        fail(ErrorCode::BadParams, "melting_lollipop needs m,n >= 1, 0 <= k <= m-1");
      for (int i = 1; i < m; ++i) a.push_back(i - 1);
      a.push_back(m - 1 - k);
      for (int i = 0; i < n; ++i) a.push_back(1);
      break;
    }
    case Family::Rectangular: {
      need(2);
      const int k = params[0], n = params[1];
      if (n < 0 || k < 1 || k > n) fail(ErrorCode::BadParams, "rectangular needs 1 <= k <= n");
      for (int i = 1; i <= k; ++i) a.push_back(i - 1);
      for (int j = k + 1; j <= n; ++j) a.push_back(j - k - 1);
      break;
    }
  }
  return AreaSequence(std::move(a));
}

namespace {

bool matches_rectangular(const AreaSequence& a, int k) {
  const int n = a.n();
  for (int i = 1; i <= std::min(k, n); ++i)
    if (a.at(i) != i - 1) return false;
  for (int j = k + 1; j <= n; ++j)
    if (a.at(j) != j - k - 1) return false;
  return true;
}

std::vector<Edge> admissible_edges(const AreaSequence& a) {
  std::vector<Edge> out;
  const int n = a.n();
  if (n < 3) return out;
  for (int j = 3; j <= n; ++j) {
    const int aj = a.at(j);
    if (aj < 2) continue;
    if (j != n && aj < a.at(j + 1) + 1) continue;
    const int i = j - aj;
    if (a.at(i) + 1 != a.at(i + 1)) continue;
    out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

Classification classify(const AreaSequence& a) {
  Classification c;
  const int n = a.n();
  for (int k = 1; k <= n && !c.is_rectangular; ++k)
    c.is_rectangular = matches_rectangular(a, k);
  if (n == 0) c.is_rectangular = true;
  for (int k = 1; k <= n && !c.is_abelian; ++k) {
    bool dominated = true;
    const AreaSequence rect = family(Family::Rectangular, {k, n});
    for (int i = 1; i <= n && dominated; ++i) dominated = a.at(i) >= rect.at(i);
    c.is_abelian = dominated;
  }
  if (n == 0) c.is_abelian = true;

  c.admissible = admissible_edges(a);
  for (const auto& [p, q] : admissible_edges(transpose(a)))
    c.dual_admissible.emplace_back(n + 1 - q, n + 1 - p);
  std::sort(c.dual_admissible.begin(), c.dual_admissible.end());
  return c;
}

Partition staircase_partition(const AreaSequence& a) {
  const int n = a.n();
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) {
    const int li = n - i - a.at(n + 1 - i);
    if (li > 0) parts.push_back(li);
  }
  return Partition(std::move(parts));
}

AreaSequence area_from_staircase(const Partition& lam, int n) {
  if (lam.length() > n || (lam.length() > 0 && lam.part(1) > n - 1))
    fail(ErrorCode::NotInStaircase, lam.str() + " does not fit in the staircase of " +
                                        std::to_string(n));
  std::vector<int> a;
  for (int j = 1; j <= n; ++j) {
    const int v = j - 1 - lam.part(n + 1 - j);
    if (v < 0)
      fail(ErrorCode::NotInStaircase,
           lam.str() + " does not fit in the staircase of " + std::to_string(n));
    a.push_back(v);
  }
  return AreaSequence(std::move(a));
}

bool staircase_is_abelian(const Partition& lam, int n) {
  if (lam.empty()) return true;
  return lam.part(1) + lam.length() <= n;
}

bool staircase_is_rectangular(const Partition& lam, int n) {
  if (lam.empty()) return true;
  const int k = lam.part(1);
  if (lam.length() != n - k) return false;
  return std::all_of(lam.parts.begin(), lam.parts.end(), [&](int p) { return p == k; });
}

}  // namespace llt
