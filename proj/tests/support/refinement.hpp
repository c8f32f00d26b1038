#ifndef OAF_TESTS_REFINEMENT_HPP
#define OAF_TESTS_REFINEMENT_HPP

#include <string>

#include "oaf/library.hpp"

// Enumerated predicate-subtype instances over dttCurry.
//
// Theory Refine: object types A, B, C and the function types A => B, B => C;
// elements a1..a6, b1..b3, c1 c2, f1..f3, g1 g2 with `of` proofs for all but
// a6 (a1 and f1 have two). Expressions are the atoms and every `app' h x` for
// a function atom h. Membership `e : tmOf T` is decided by the kernel over a
// pool of candidate witnesses and compared with a closure computed on names.

namespace oaf::testing {

Library refinementLibrary();

struct RefinementOutcome {
  int membershipInstances = 0;
  int membershipMismatches = 0;
  int members = 0;
  int roundTripInstances = 0;  // SubOut(SubIn(e, w)) == e
  int roundTripFailures = 0;
  int irrelevancePairs = 0;  // SubIn(e, w) == SubIn(e', w') iff e == e'
  int irrelevanceFailures = 0;
  bool theoryChecks = false;
  std::string firstFailure;
  bool ok() const {
    return theoryChecks && membershipInstances > 0 && membershipMismatches == 0 &&
           roundTripFailures == 0 && irrelevanceFailures == 0;
  }
};

RefinementOutcome refinementSuite();

}  // namespace oaf::testing

#endif  // OAF_TESTS_REFINEMENT_HPP
