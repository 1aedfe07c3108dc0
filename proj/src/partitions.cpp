#include "lltlab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace llt {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) fail(ErrorCode::BadParams, "partition part must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      fail(ErrorCode::BadParams, "partition parts must weakly decrease");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const { return "(" + join_ints(parts) + ")"; }

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) fail(ErrorCode::BadParams, "composition part must be positive");
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::str() const { return "(" + join_ints(parts) + ")"; }

Partition Composition::sorted() const {
  std::vector<int> p = parts;
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(ErrorCode::BadParams, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> gen = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back();
      out.back().parts = cur;
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      gen(rest - p, p);
      cur.pop_back();
    }
  };
  gen(n, n);
  return out;
}

Partition conjugate(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  for (int i = 1; i <= lam.parts[0]; ++i) {
    int col = 0;
    for (int p : lam.parts)
      if (p >= i) ++col;
    out.parts.push_back(col);
  }
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size())
    fail(ErrorCode::SizeMismatch, "dominance order compares partitions of equal size");
  int pm = 0, pl = 0;
  const int k = std::max(mu.length(), lam.length());
  for (int i = 1; i <= k; ++i) {
    pm += mu.part(i);
    pl += lam.part(i);
    if (pm > pl) return false;
  }
  return true;
}

long z_of(const Partition& lam) {
  long z = 1;
  int i = 0;
  const int len = lam.length();
  while (i < len) {
    int j = i;
    while (j < len && lam.parts[j] == lam.parts[i]) ++j;
    const long mult = j - i;
    for (long t = 1; t <= mult; ++t) z *= t * lam.parts[i];
    // z *= part^mult * mult!, folded into one loop
    i = j;
  }
  return z;
}

std::set<int> d_set(const Composition& gamma) {
  std::set<int> out;
  int s = 0;
  for (int p : gamma.parts) {
    s += p;
    out.insert(s);
  }
  return out;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i + 1 < rows.size() && rows[i + 1].size() > rows[i].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i][j] >= rows[i + 1][j])
        return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& r : rows)
    for (int x : r) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
      seen[static_cast<std::size_t>(x)] = true;
    }
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(size()));
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::set<int> Tableau::descent_set() const {
  if (!is_standard()) fail(ErrorCode::NotStandard, "descent set needs a standard tableau");
  const auto w = reading_word();
  const int n = size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
  std::set<int> des;
  for (int i = 1; i < n; ++i)
    if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) des.insert(i);
  return des;
}

Tableau Tableau::transposed() const {
  Tableau t;
  if (rows.empty()) return t;
  const std::size_t cols = rows[0].size();
  t.rows.resize(cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& r : rows)
      if (j < r.size()) t.rows[j].push_back(r[j]);
  return t;
}

std::string Tableau::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out << "/";
    out << join_ints(rows[i]);
  }
  return out.str();
}

std::vector<std::pair<Tableau, std::set<int>>> syt_enumerate(const Partition& lam) {
  std::vector<std::pair<Tableau, std::set<int>>> out;
  const int n = lam.size();
  Tableau t;
  t.rows.resize(static_cast<std::size_t>(lam.length()));
  std::vector<int> fill(static_cast<std::size_t>(lam.length()), 0);  // cells used per row
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      out.emplace_back(t, t.descent_set());
      return;
    }
    for (int r = 0; r < lam.length(); ++r) {
      const int c = fill[static_cast<std::size_t>(r)];
      if (c >= lam.parts[static_cast<std::size_t>(r)]) continue;
      if (r > 0 && fill[static_cast<std::size_t>(r - 1)] <= c) continue;
      t.rows[static_cast<std::size_t>(r)].push_back(v);
      ++fill[static_cast<std::size_t>(r)];
      place(v + 1);
      --fill[static_cast<std::size_t>(r)];
      t.rows[static_cast<std::size_t>(r)].pop_back();
    }
  };
  place(1);
  return out;
}

std::vector<Tableau> ssyt_enumerate(const Partition& lam, const Composition& gamma) {
  if (lam.size() != gamma.size())
    fail(ErrorCode::SizeMismatch, "shape and content must have equal size");
  std::vector<Tableau> out;
  const int maxval = gamma.length();
  std::vector<int> remaining = gamma.parts;
  Tableau t;
  t.rows.resize(static_cast<std::size_t>(lam.length()));

  std::function<void(int, int)> place = [&](int r, int c) {
    if (r == lam.length()) {
      out.push_back(t);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lam.parts[static_cast<std::size_t>(r)]) {
      nr = r + 1;
      nc = 0;
    }
    const int lo_row = c > 0 ? t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] : 1;
    const int lo_col =
        r > 0 ? t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1 : 1;
    for (int v = std::max(lo_row, lo_col); v <= maxval; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      t.rows[static_cast<std::size_t>(r)].push_back(v);
      place(nr, nc);
      t.rows[static_cast<std::size_t>(r)].pop_back();
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  place(0, 0);
  return out;
}

long kostka(const Partition& lam, const Composition& gamma) {
  return static_cast<long>(ssyt_enumerate(lam, gamma).size());
}

}  // namespace llt
