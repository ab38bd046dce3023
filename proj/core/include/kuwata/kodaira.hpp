#pragma once

#include <map>
#include <string>
#include <vector>

#include "kuwata/family.hpp"

namespace kuwata {

/// Kodaira types that can occur for y^2 = x^3 + B(t) with char > 3:
/// v(B) in {1..5} gives II, IV, I0*, IV*, II*; other types are listed for
/// completeness of the vocabulary but never produced by this family.
enum class FiberType { II, III, IV, I0star, IVstar, IIstar, IIIstar, Im, Imstar };

enum class RootLattice { None, A1, A2, D4, E6, E7, E8 };

std::string fiber_type_str(FiberType t);
std::string root_lattice_str(RootLattice l);
int root_lattice_rank(RootLattice l);

struct KodairaFiber {
  Place place;
  FiberType type;
  int components;       // m_v in the Shioda-Tate formula
  int euler;            // e(F_v)
  std::string component_group;  // "0", "Z/2", "Z/3", "(Z/2)^2"
  RootLattice lattice;
};

/// Fiber type from the valuation of B at a minimal place; good reduction
/// returns no fiber. Throws on v(B) >= 6 (non-minimal input).
std::optional<KodairaFiber> tate_at_place(const CurvePtr<RatFunc>& e, const Place& v);

struct MwGroup {
  int rank = 0;
  std::string torsion = "0";  // "0", "Z/3"
  std::string str() const;
};

struct FibrationReport {
  std::string surface;                 // label, e.g. "E1"
  int chi = 0;                         // Euler characteristic, sum(deg*e)/12
  long euler_sum = 0;                  // sum over places of deg * e
  std::vector<KodairaFiber> fibers;    // closed points over the base field
  std::map<RootLattice, int> lattice;  // T as a degree-weighted multiset
  int lattice_rank = 0;                // rank of T

  std::string lattice_str() const;     // e.g. "A2 + D4"
  std::string fibers_str() const;      // e.g. "II + IV + I0*"
};

/// Factors the discriminant support over the base field, runs Tate at every
/// closed point and at infinity (in the s = 1/t chart), and checks the Euler
/// budget sum(deg * e) = 12 chi exactly.
FibrationReport fiber_configuration(const CurvePtr<RatFunc>& e, const std::string& label = "");

/// Geometric Mordell-Weil group looked up from the embedded classification
/// data, keyed by the trivial lattice T. Returns nullopt for configurations
/// outside the table (never guesses).
struct GeometricMw {
  MwGroup mw;
  std::string provenance;  // which classification supplied the row
};
std::optional<GeometricMw> geometric_mw(const FibrationReport& rep);

/// Shioda-Tate: rho = 2 + rank(T) + rank(MW).
int shioda_tate_rho(const FibrationReport& rep, const MwGroup& mw);

}  // namespace kuwata
