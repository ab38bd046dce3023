#pragma once

#include "kuwata/family.hpp"

namespace kuwata {

/// Exhaustive bounded-degree hunt for affine sections (x0(t), x1(t)) of a
/// K2/K6n surface over the base field. The default family is polynomial
/// pairs of degree <= d; rational pairs (reduced, monic denominators of
/// degree <= d) are searched on request.
struct SearchSpec {
  KummerSurface surface;
  FieldPtr field;
  unsigned max_degree = 1;
  bool rational = false;
  BigInt cap = BigInt(1000000000);
  unsigned jobs = 1;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(BigInt space);
  const BigInt& space() const { return space_; }

 private:
  BigInt space_;
};

struct SearchResult {
  std::vector<std::pair<RatFunc, RatFunc>> found;  // canonically sorted
  bool exhausted = false;
  BigInt family_space;   // candidate pairs actually enumerated
  BigInt nominal_space;  // q^(2(2d+2)): unrestricted rational-pair count
  std::string family;    // "polynomial" or "rational"
  double elapsed_seconds = 0.0;
};

/// Every returned pair satisfies the defining equation identically
/// (coefficient comparison, no sampling). Throws CapExceeded before doing
/// any work when the family size passes the cap.
SearchResult search_sections(const SearchSpec& spec);

/// Exact identity check for one candidate.
bool verify_candidate(const KummerSurface& s, const RatFunc& x0, const RatFunc& x1);

/// All valid (b, c) pairs for a base field, for parameter sweeps.
struct ParamPair {
  std::uint64_t b, c;
  bool b_is_cube;
};
std::vector<ParamPair> enumerate_valid_params(const FieldPtr& base, bool include_relaxed);

}  // namespace kuwata
