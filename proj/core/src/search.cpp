#include "kuwata/search.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace kuwata {

CapExceeded::CapExceeded(BigInt space)
    : std::runtime_error("search space of " + space.str() + " candidate pairs exceeds the cap"),
      space_(std::move(space)) {}

bool verify_candidate(const KummerSurface& s, const RatFunc& x0, const RatFunc& x1) {
  return kummer_equation_holds(s, x0, x1);
}

namespace {

Poly poly_from_index(const FieldPtr& f, unsigned max_degree, BigInt idx) {
  std::vector<FieldElement> c;
  c.reserve(max_degree + 1);
  for (unsigned i = 0; i <= max_degree; ++i) {
    c.push_back(element_at(f, idx % f->order));
    idx /= f->order;
  }
  return Poly(f, std::move(c));
}

// monic denominators of degree <= d, indexed across all degrees
std::vector<Poly> monic_denominators(const FieldPtr& f, unsigned d) {
  std::vector<Poly> out;
  for (unsigned e = 0; e <= d; ++e) {
    BigInt count = pow_bigint(f->order, e);
    for (BigInt i = 0; i < count; ++i) {
      Poly low = poly_from_index(f, e == 0 ? 0 : e - 1, i);
      std::vector<FieldElement> c(e + 1, FieldElement::from_int(f, 0));
      for (int j = 0; j <= low.degree(); ++j) c[static_cast<size_t>(j)] = low.coeff(j);
      c[e] = FieldElement::from_int(f, 1);
      out.push_back(Poly(f, std::move(c)));
    }
  }
  return out;
}

bool pair_less(const std::pair<RatFunc, RatFunc>& a, const std::pair<RatFunc, RatFunc>& b) {
  if (a.first.num() != b.first.num()) return a.first.num() < b.first.num();
  if (a.first.den() != b.first.den()) return a.first.den() < b.first.den();
  if (a.second.num() != b.second.num()) return a.second.num() < b.second.num();
  return a.second.den() < b.second.den();
}

}  // namespace

SearchResult search_sections(const SearchSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldPtr& f = spec.field;
  const unsigned d = spec.max_degree;
  const BigInt q = f->order;

  SearchResult res;
  res.nominal_space = pow_bigint(q, 2 * (2 * d + 2));
  res.family = spec.rational ? "rational" : "polynomial";

  const unsigned m = spec.surface.t_exponent;
  const Poly tm = Poly::t(f).pow(m);
  const FieldElement b = spec.surface.b, c = spec.surface.c;
  const Poly bconst = Poly::constant(b);

  if (!spec.rational) {
    BigInt per_coord = pow_bigint(q, d + 1);
    res.family_space = per_coord * per_coord;
    if (res.family_space > spec.cap) throw CapExceeded(res.family_space);
    const auto n_candidates = static_cast<std::uint64_t>(per_coord);
    // all cubes once; (x1^3 - b) t^m and c (x0^3 - b) are then cheap
    std::vector<Poly> lhs(n_candidates), rhs(n_candidates);
    for (std::uint64_t i = 0; i < n_candidates; ++i) {
      Poly x = poly_from_index(f, d, BigInt(i));
      Poly cube = x * x * x - bconst;
      lhs[i] = cube * tm;
      rhs[i] = cube * c;
    }
    const unsigned jobs = std::max(1u, spec.jobs);
    std::vector<std::vector<std::pair<RatFunc, RatFunc>>> hits(jobs);
    auto worker = [&](unsigned w) {
      for (std::uint64_t i1 = w; i1 < n_candidates; i1 += jobs)
        for (std::uint64_t i0 = 0; i0 < n_candidates; ++i0)
          if (lhs[i1] == rhs[i0])
            hits[w].emplace_back(RatFunc(poly_from_index(f, d, BigInt(i0))),
                                 RatFunc(poly_from_index(f, d, BigInt(i1))));
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
      for (auto& th : pool) th.join();
    }
    for (auto& h : hits)
      res.found.insert(res.found.end(), std::make_move_iterator(h.begin()),
                       std::make_move_iterator(h.end()));
  } else {
    std::vector<Poly> nums;
    {
      BigInt per = pow_bigint(q, d + 1);
      for (BigInt i = 0; i < per; ++i) nums.push_back(poly_from_index(f, d, i));
    }
    std::vector<Poly> dens = monic_denominators(f, d);
    std::vector<RatFunc> candidates;
    for (const auto& nm : nums)
      for (const auto& dn : dens) {
        if (!nm.is_zero() && gcd(nm, dn).degree() > 0) continue;  // skip non-reduced
        if (nm.is_zero() && dn.degree() > 0) continue;
        candidates.emplace_back(nm, dn);
      }
    res.family_space = BigInt(candidates.size()) * BigInt(candidates.size());
    if (res.family_space > spec.cap) throw CapExceeded(res.family_space);
    for (const auto& x1 : candidates)
      for (const auto& x0 : candidates)
        if (kummer_equation_holds(spec.surface, x0, x1)) res.found.emplace_back(x0, x1);
  }

  std::sort(res.found.begin(), res.found.end(), pair_less);
  res.exhausted = true;
  for (const auto& [x0, x1] : res.found)
    if (!verify_candidate(spec.surface, x0, x1))
      throw std::logic_error("search soundness check failed");
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<ParamPair> enumerate_valid_params(const FieldPtr& base, bool include_relaxed) {
  std::vector<ParamPair> out;
  if ((base->order - 1) % 3 != 0) return out;
  if (base->k != 1) throw std::invalid_argument("parameter scan expects a prime base field");
  for (std::uint64_t c = 1; c < base->p; ++c) {
    FieldElement ce = FieldElement::from_int(base, static_cast<std::int64_t>(c));
    if (cube_roots(ce).empty() || legendre(ce) != -1) continue;
    for (std::uint64_t b = 1; b < base->p; ++b) {
      FieldElement be = FieldElement::from_int(base, static_cast<std::int64_t>(b));
      bool b_cube = !cube_roots(be).empty();
      if (b_cube && !include_relaxed) continue;
      out.push_back(ParamPair{b, c, b_cube});
    }
  }
  std::sort(out.begin(), out.end(), [](const ParamPair& a, const ParamPair& b) {
    return std::tie(a.b, a.c) < std::tie(b.b, b.c);
  });
  return out;
}

}  // namespace kuwata
