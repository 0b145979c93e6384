#pragma once

#include "qlab/fps.hpp"
#include "qlab/partitions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qlab {

/// The six injections between partition families, each with its own
/// published case analysis.
enum class MapKind {
  GammaStar,   ///< gamma*: A_{2,2} -> A_{2,1}, L = 2
  Gamma,       ///< gamma:  A_{L,2} -> A_{L,1}, L >= 3
  Gamma1Star,  ///< Gamma_1*: B_{3,2} -> B_{3,1}, L = 3
  Gamma1,      ///< Gamma_1:  B_{L,2} -> B_{L,1}, odd L >= 5
  Gamma2Star,  ///< Gamma_2*: B_{4,2} -> B_{4,1}, L = 4
  Gamma2       ///< Gamma_2:  B_{L,2} -> B_{L,1}, even L >= 6
};

struct InjectionId {
  MapKind kind;
  int L;

  /// Validates the L-range for the variant; throws std::invalid_argument.
  static InjectionId make(MapKind kind, int L);
  /// CLI names: gammastar, gamma, gamma1star, gamma1, gamma2star, gamma2.
  static InjectionId parse(const std::string& name, int L);
  std::string name() const;
};

/// Raised when the input is outside the map's domain family.
class MapDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for domain partitions whose norm the published case analysis
/// excludes; carries the reason.
class ExcludedInputError : public std::domain_error {
 public:
  ExcludedInputError(long long norm, std::string reason)
      : std::domain_error("excluded input at norm " + std::to_string(norm) +
                          ": " + reason),
        norm_(norm),
        reason_(std::move(reason)) {}
  long long norm() const noexcept { return norm_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  long long norm_;
  std::string reason_;
};

ConstraintSet domain_set(const InjectionId& id);
ConstraintSet codomain_set(const InjectionId& id);

/// True when the case analysis excludes this norm (the B-family maps skip
/// norm 3); reason receives the published wording when non-null.
bool input_excluded(const InjectionId& id, long long norm,
                    std::string* reason = nullptr);

/// Image of p under the map. The input must lie in the domain family and
/// not be norm-excluded. Every domain partition matches exactly one case;
/// an unmatched input is a hard logic error (transcription bug).
Partition apply(const InjectionId& id, const Partition& p);

struct Collision {
  Partition pre1, pre2, image;
  long long norm = 0;
};

struct MapReport {
  InjectionId id;
  long long checked_norm_max = 0;
  bool injectivity_ok = false;     ///< no collisions at all
  bool norm_preserved_ok = false;
  bool codomain_ok = false;
  std::vector<Collision> collisions;  ///< one entry per extra preimage
  std::vector<std::pair<long long, std::string>> excluded_inputs;
  long long domain_partitions_checked = 0;
};

/// Applies the map to every domain partition of norm <= N_max, checking
/// norm preservation, codomain membership and injectivity per norm class.
/// Failures are report content, not errors.
MapReport verify_injection(const InjectionId& id, long long N_max);

/// Codomain partitions of norm N not attained by the map, canonical order.
/// Computed by exhaustive set difference, never from the published
/// complement catalogs (those are what gets verified against this).
std::vector<Partition> image_complement(const InjectionId& id, long long N);

/// Generating function of the image complement: coefficient of q^N is
/// |image_complement(id, N)| for N < prec.
PowerSeries complement_genfun(const InjectionId& id, std::size_t prec);

}  // namespace qlab
