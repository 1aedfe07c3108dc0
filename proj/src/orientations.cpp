#include "lltlab/orientations.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "lltlab/parallel.hpp"

namespace llt {

OrientationContext::OrientationContext(StripDiagram d, const EnumOptions& opt)
    : diagram_(std::move(d)), edges_(edges_of(diagram_.area)) {
  if (edge_count() > opt.max_bits || edge_count() > 62)
    fail(ErrorCode::ResourceLimit,
         "orientation enumeration bound exceeded: " + std::to_string(edge_count()) +
             " edges > " + std::to_string(std::min(opt.max_bits, 62)));
  const int n = diagram_.n();
  out_edges_.assign(static_cast<std::size_t>(n) + 1, {});
  strict_out_.assign(static_cast<std::size_t>(n) + 1, {});
  in_mask_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int b = 0; b < edge_count(); ++b) {
    const auto& [u, v] = edges_[static_cast<std::size_t>(b)];
    out_edges_[static_cast<std::size_t>(u)].emplace_back(b, v);
    in_mask_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << b;
  }
  for (const auto& [u, v] : diagram_.strict) strict_out_[static_cast<std::size_t>(u)].push_back(v);
}

int OrientationContext::asc(std::uint64_t mask) const { return std::popcount(mask); }

std::vector<int> OrientationContext::hrv(std::uint64_t mask) const {
  const int n = diagram_.n();
  std::vector<int> h(static_cast<std::size_t>(n) + 1);
  for (int v = n; v >= 1; --v) {
    int best = v;
    for (const auto& [bit, w] : out_edges_[static_cast<std::size_t>(v)])
      if ((mask >> bit) & 1) best = std::max(best, h[static_cast<std::size_t>(w)]);
    for (int w : strict_out_[static_cast<std::size_t>(v)])
      best = std::max(best, h[static_cast<std::size_t>(w)]);
    h[static_cast<std::size_t>(v)] = best;
  }
  h.erase(h.begin());
  return h;
}

Partition OrientationContext::hrvpp(std::uint64_t mask) const {
  const auto h = hrv(mask);
  const int n = diagram_.n();
  std::vector<int> fiber(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) ++fiber[static_cast<std::size_t>(h[static_cast<std::size_t>(v - 1)])];
  std::vector<int> parts;
  for (int v = 1; v <= n; ++v)
    if (fiber[static_cast<std::size_t>(v)] > 0) parts.push_back(fiber[static_cast<std::size_t>(v)]);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

Composition OrientationContext::sigma(std::uint64_t mask) const {
  if (!diagram_.is_unicellular())
    fail(ErrorCode::StrictEdgesPresent, "sigma is defined for unicellular diagrams only");
  const int n = diagram_.n();
  std::vector<int> bottoms;  // collected decreasingly
  for (int v = n; v >= 1; --v)
    if ((mask & in_mask_[static_cast<std::size_t>(v)]) == 0) bottoms.push_back(v);
  std::vector<int> parts;
  int prev = n + 1;
  for (int b : bottoms) {
    parts.push_back(prev - b);
    prev = b;
  }
  return Composition(std::move(parts));
}

SymFunc orientation_sum_impl(const OrientationContext& ctx, bool use_sigma,
                             const EnumOptions& opt) {
  const int n = ctx.n();
  if (n == 0) return SymFunc::one(Basis::E);
  const std::uint64_t total = ctx.count();
  const int max_asc = ctx.edge_count();
  const int threads = opt.threads > 0 ? opt.threads : default_thread_count();

  using Acc = std::map<Partition, std::vector<std::uint64_t>>;
  std::vector<Acc> partial(static_cast<std::size_t>(threads));
  parallel_chunks(static_cast<std::size_t>(total), threads,
                  [&](int w, std::size_t lo, std::size_t hi) {
                    Acc& acc = partial[static_cast<std::size_t>(w)];
                    for (std::uint64_t mask = lo; mask < hi; ++mask) {
                      const Partition key =
                          use_sigma ? ctx.sigma(mask).sorted() : ctx.hrvpp(mask);
                      auto& counts = acc[key];
                      if (counts.empty())
                        counts.assign(static_cast<std::size_t>(max_asc) + 1, 0);
                      ++counts[static_cast<std::size_t>(ctx.asc(mask))];
                    }
                  });
  Acc merged;
  for (auto& part : partial)
    for (auto& [key, counts] : part) {
      auto& dst = merged[key];
      if (dst.empty()) {
        dst = std::move(counts);
      } else {
        for (std::size_t i = 0; i < counts.size(); ++i) dst[i] += counts[i];
      }
    }
  SymFunc out(n, Basis::E);
  for (const auto& [key, counts] : merged) {
    std::vector<mpz_class> poly;
    poly.reserve(counts.size());
    for (std::uint64_t c : counts) poly.emplace_back(static_cast<unsigned long>(c));
    out.add_term(key, LaurentPoly(0, std::move(poly)));
  }
  return out;
}

SymFunc lltc_poly(const StripDiagram& d, Form form, const EnumOptions& opt) {
  const OrientationContext ctx(d, opt);
  const SymFunc shifted = orientation_sum_impl(ctx, /*use_sigma=*/false, opt);
  return form == Form::Shifted ? shifted : shifted.shifted_coeffs(VarShift::QMinusOne);
}

SymFunc charge_rhs(const AreaSequence& a, Form form, const EnumOptions& opt) {
  const OrientationContext ctx(StripDiagram(a), opt);
  const SymFunc shifted = orientation_sum_impl(ctx, /*use_sigma=*/true, opt);
  return form == Form::Shifted ? shifted : shifted.shifted_coeffs(VarShift::QMinusOne);
}

bool check_main_conjecture(const StripDiagram& d, const EnumOptions& opt) {
  const SymFunc g_shifted = llt_poly(d, opt).shifted_coeffs(VarShift::QPlusOne);
  const SymFunc c_shifted = lltc_poly(d, Form::Shifted, opt);
  return g_shifted.equals(c_shifted);
}

std::vector<OrientationRecord> dump_orientations(const StripDiagram& d,
                                                 const EnumOptions& opt) {
  const OrientationContext ctx(d, opt);
  std::vector<OrientationRecord> out;
  out.reserve(static_cast<std::size_t>(ctx.count()));
  for (std::uint64_t mask = 0; mask < ctx.count(); ++mask) {
    OrientationRecord rec;
    rec.mask = mask;
    rec.asc = ctx.asc(mask);
    rec.hrvpp = ctx.hrvpp(mask);
    if (d.is_unicellular()) rec.sigma = ctx.sigma(mask);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace llt
