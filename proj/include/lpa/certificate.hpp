#pragma once

#include <vector>

namespace lpa {

// Witness that gr-IBN fails: exponent multisets P, Q with |P| != |Q| and
// sum_{p in P} 1^T A^p == sum_{q in Q} 1^T A^q. Canonical form keeps both
// sides sorted and disjoint (common exponents cancelled).
struct Certificate {
  std::vector<int> p;
  std::vector<int> q;

  bool operator==(const Certificate&) const = default;
};

// Sorts both sides and cancels exponents common to P and Q. Cancellation
// preserves validity and cannot empty a side of a valid certificate.
Certificate canonicalize(Certificate cert);

}  // namespace lpa
