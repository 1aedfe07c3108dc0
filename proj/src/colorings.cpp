#include "lltlab/colorings.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lltlab/parallel.hpp"

namespace llt {

namespace {

// Accumulates q^asc counts per content vector.  Contents are packed five
// bits per color count, which caps the engine at 12 vertices.
constexpr int kPackBits = 5;
constexpr int kHardVertexCap = 12;

using Buckets = std::unordered_map<std::uint64_t, std::vector<std::uint64_t>>;

struct ColoringProblem {
  int n = 0;
  int max_asc = 0;
  bool proper = false;
  // per vertex: earlier neighbors along graph edges and strict edges
  std::vector<std::vector<int>> edge_in;
  std::vector<std::vector<int>> strict_in;
};

void enumerate_range(const ColoringProblem& p, int first_lo, int first_hi, Buckets& out) {
  const int n = p.n;
  std::vector<int> colors(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> asc_at(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::uint64_t> key_at(static_cast<std::size_t>(n) + 1, 0);

  // iterative DFS over vertices 1..n with colors in [1, n]
  std::vector<int> choice(static_cast<std::size_t>(n) + 1, 0);
  int v = 1;
  choice[1] = first_lo - 1;
  while (v >= 1) {
    const int limit = v == 1 ? first_hi : n;
    int c = ++choice[static_cast<std::size_t>(v)];
    if (c > limit) {
      --v;
      continue;
    }
    bool ok = true;
    for (int u : p.strict_in[static_cast<std::size_t>(v)])
      if (colors[static_cast<std::size_t>(u)] >= c) {
        ok = false;
        break;
      }
    int delta = 0;
    if (ok) {
      for (int u : p.edge_in[static_cast<std::size_t>(v)]) {
        const int cu = colors[static_cast<std::size_t>(u)];
        if (p.proper && cu == c) {
          ok = false;
          break;
        }
        if (cu < c) ++delta;
      }
    }
    if (!ok) continue;
    colors[static_cast<std::size_t>(v)] = c;
    asc_at[static_cast<std::size_t>(v)] = asc_at[static_cast<std::size_t>(v - 1)] + delta;
    key_at[static_cast<std::size_t>(v)] =
        key_at[static_cast<std::size_t>(v - 1)] +
        (std::uint64_t{1} << (kPackBits * (c - 1)));
    if (v == n) {
      auto& counts = out[key_at[static_cast<std::size_t>(n)]];
      if (counts.empty()) counts.assign(static_cast<std::size_t>(p.max_asc) + 1, 0);
      ++counts[static_cast<std::size_t>(asc_at[static_cast<std::size_t>(n)])];
    } else {
      ++v;
      choice[static_cast<std::size_t>(v)] = 0;
    }
  }
}

SymFunc bin_buckets(int n, int max_asc, const Buckets& buckets) {
  // Group contents by their rearrangement class; the class value is the
  // monomial coefficient.  Differing values inside a class would mean the
  // enumeration produced a non-symmetric function, which is a bug.
  std::map<Partition, LaurentPoly> coeffs;
  for (const auto& [key, counts] : buckets) {
    std::vector<int> parts;
    for (int c = 0; c < n; ++c) {
      const int cnt = static_cast<int>((key >> (kPackBits * c)) & ((1u << kPackBits) - 1));
      if (cnt > 0) parts.push_back(cnt);
    }
    std::sort(parts.rbegin(), parts.rend());
    std::vector<mpz_class> poly;
    poly.reserve(static_cast<std::size_t>(max_asc) + 1);
    for (std::uint64_t c : counts) poly.emplace_back(static_cast<unsigned long>(c));
    LaurentPoly value(0, std::move(poly));
    auto [it, fresh] = coeffs.emplace(Partition(std::move(parts)), value);
    if (!fresh && it->second != value)
      throw std::logic_error(
          "coloring engine produced a non-symmetric monomial table");
  }
  return sf_from_monomials(n, coeffs);
}

SymFunc run_coloring_engine(const StripDiagram& d, bool proper, const EnumOptions& opt) {
  const int n = d.n();
  if (n > opt.max_vertices || n > kHardVertexCap)
    fail(ErrorCode::ResourceLimit,
         "coloring enumeration bound exceeded: n = " + std::to_string(n) +
             " > " + std::to_string(std::min(opt.max_vertices, kHardVertexCap)));
  if (n == 0) return SymFunc::one();

  ColoringProblem p;
  p.n = n;
  p.max_asc = d.area.area_sum();
  p.proper = proper;
  p.edge_in.assign(static_cast<std::size_t>(n) + 1, {});
  p.strict_in.assign(static_cast<std::size_t>(n) + 1, {});
  for (const auto& [u, v] : edges_of(d.area)) p.edge_in[static_cast<std::size_t>(v)].push_back(u);
  for (const auto& [u, v] : d.strict) p.strict_in[static_cast<std::size_t>(v)].push_back(u);

  const int threads = opt.threads > 0 ? opt.threads : default_thread_count();
  std::vector<Buckets> partial(static_cast<std::size_t>(threads));
  parallel_chunks(static_cast<std::size_t>(n), threads,
                  [&](int w, std::size_t lo, std::size_t hi) {
                    if (lo < hi)
                      enumerate_range(p, static_cast<int>(lo) + 1, static_cast<int>(hi),
                                      partial[static_cast<std::size_t>(w)]);
                  });
  Buckets merged;
  for (auto& part : partial)
    for (auto& [key, counts] : part) {
      auto& dst = merged[key];
      if (dst.empty()) {
        dst = std::move(counts);
      } else {
        for (std::size_t i = 0; i < counts.size(); ++i) dst[i] += counts[i];
      }
    }
  return bin_buckets(n, p.max_asc, merged);
}

}  // namespace

SymFunc llt_poly(const StripDiagram& d, const EnumOptions& opt) {
  return run_coloring_engine(d, /*proper=*/false, opt);
}

SymFunc chromatic_qsym(const AreaSequence& a, const EnumOptions& opt) {
  return run_coloring_engine(StripDiagram(a), /*proper=*/true, opt);
}

bool check_pleth_relation(const AreaSequence& a, const EnumOptions& opt) {
  const RatSymFunc lhs = pleth_scale_qminus1(llt_poly(StripDiagram(a), opt));
  const LaurentPoly qm1 = LaurentPoly::q() - LaurentPoly(1);
  const RatSymFunc rhs =
      to_p_basis(chromatic_qsym(a, opt)) * RatLaurentPoly(lp_pow(qm1, static_cast<unsigned long>(a.n())));
  return lhs.equals(rhs);
}

int asc_of_coloring(const StripDiagram& d, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != d.n())
    fail(ErrorCode::SizeMismatch, "coloring size differs from the vertex count");
  auto color = [&](int v) { return colors[static_cast<std::size_t>(v - 1)]; };
  for (const auto& [u, v] : d.strict)
    if (color(u) >= color(v))
      fail(ErrorCode::BadParams, "coloring violates strict edge " + std::to_string(u) +
                                     "-" + std::to_string(v));
  int asc = 0;
  for (const auto& [u, v] : edges_of(d.area))
    if (color(u) < color(v)) ++asc;
  return asc;
}

}  // namespace llt
