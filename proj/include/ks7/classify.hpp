#pragma once

// Which homotopy spheres and which k S^2xS^5 # l S^3xS^4 # Sigma_r carry
// free circle actions.

#include "ks7/kreckstolz.hpp"
#include "ks7/sixfold.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace ks7::classify {

using exactmath::Integer;
using sixfold::SpinType;
using sixfold::TypeIBase;

inline constexpr int kSphereCount = 28;

/// { (18 eps u^2 + 4u) mod 28 : eps = +-1, u in Z/14 }, i.e. the r with
/// r/28 = (9 eps u^2 + 2u)/14 mod 1.
std::set<int> sphere_action_set();

/// r values printed in the literature list for homotopy spheres with free
/// circle actions. Kept so the verify report can show how it differs from
/// sphere_action_set().
std::set<int> printed_sphere_list();

bool sphere_admits_free_action(int r);

/// k S^2 x S^5 # l S^3 x S^4 # Sigma_r.
struct ManifoldSpec {
    long k = 0;
    long l = 0;
    int r = 0;
};

struct Decision {
    bool admits = false;
    int case_number = 0; ///< 1..5
    /// Set when the verdict depends on whether Sigma_r admits a free action.
    std::optional<bool> sphere_member;
};

/// Throws BadInput for negative k, l or r outside [0, 28).
Decision admits_free_circle_action(const ManifoldSpec& spec);

enum class Possibility { No, Possible, Unknown };
std::string to_string(Possibility p);

/// Can a spin cohomology k S^2 x S^5 have a free circle action with nonspin
/// orbit? Even k: no (the cup-with-e matrix would be an odd-size invertible
/// matrix with zero diagonal mod 2). k = 1: yes for even r. Odd k >= 3: not
/// decided. Throws PreconditionViolation for k < 1.
Possibility nonspin_orbit_possible(long k);

struct RealizationSet {
    std::set<int> members;
    std::map<int, TypeIBase> witnesses;
};

/// Searches spin-type bases with det M_e = -1 for total spaces homeomorphic
/// to S^2 x S^5 (28 s1 = s2 = s3 = 0) and records r = 28 s1.
///
/// Spin: A = 8 A1 (forced by 28 s1 = A/8), B^2 = 8 A1 C + 1.
/// NonspinE: A = 2 A1, C = 2 C1, B^2 = 4 A1 C1 + 1.
/// The reduced coordinates (A1, B, C or C1, D) and u, v range over
/// [-bound, bound]. The witness for each r is the lexicographically least
/// (A, B, C, D, u, v).
RealizationSet realization_set(SpinType orbit, long bound);

/// The residue r with s1 = r/28, or nullopt if 28 s1 != 0.
std::optional<int> sphere_residue(const kreckstolz::SInvariants& s);

/// Some base whose total space has invariants (r/28, 0, 0, 0), re-verified
/// through the generic pipeline.
std::optional<TypeIBase> find_witness(int r, SpinType orbit, long bound);

/// Congruences on the reduced coordinates equivalent to s2 = s3 = 0 for
/// every u, v:
///   spin:    A1 (C^2 - BD - D^2) = 0 (mod 3), D odd
///   nonspin: (B^2 - 1) C1 = A1 D (B + D) (mod 3),  A1 D (B + D) = 0 (mod 4)
bool reduced_congruences_hold(const TypeIBase& base);

} // namespace ks7::classify
