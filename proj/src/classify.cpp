#include "lkgraph/classify.hpp"

#include <sstream>

#include "lkgraph/linking.hpp"

namespace lkgraph {

std::string_view to_string(VerdictResult result) {
  switch (result) {
    case VerdictResult::Equivalent: return "Equivalent";
    case VerdictResult::Inequivalent: return "Inequivalent";
    case VerdictResult::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

std::string_view to_string(Pairing pairing) {
  switch (pairing) {
    case Pairing::Ordered: return "ordered";
    case Pairing::Swapped: return "swapped";
    case Pairing::None: return "none";
  }
  return "unknown";
}

std::string Verdict::summary() const {
  std::ostringstream out;
  out << to_string(result);
  if (!obstruction.empty()) out << " (obstruction: " << obstruction << ")";
  if (pairing != Pairing::None) out << " (pairing: " << to_string(pairing) << ")";
  const char* label = handlebody ? "genus" : "rank";
  out << "; Lk = " << first.to_string() << " vs " << second.to_string() << "; " << label << " (" << ranks[0] << ", "
      << ranks[1] << ") vs (" << ranks[2] << ", " << ranks[3] << ")";
  return out.str();
}

Verdict classify(const Diagram& a, const Diagram& b, bool ordered) {
  const LinkingMatrix ma = linking_matrix(a);
  const LinkingMatrix mb = linking_matrix(b);

  Verdict v;
  v.ranks = {ma.rows(), ma.cols(), mb.rows(), mb.cols()};
  v.first = lk_invariant(ma.entries);
  // Elementary divisors are transpose invariant, so one invariant serves both pairings.
  v.second = lk_invariant(mb.entries);

  const bool ordered_match = ma.rows() == mb.rows() && ma.cols() == mb.cols();
  const bool swapped_match = !ordered && ma.rows() == mb.cols() && ma.cols() == mb.rows();
  if (!ordered_match && !swapped_match) {
    v.result = VerdictResult::Inequivalent;
    v.obstruction = "rank";
    return v;
  }
  if (v.first != v.second) {
    v.result = VerdictResult::Inequivalent;
    v.obstruction = "divisors";
    return v;
  }
  v.result = VerdictResult::Equivalent;
  v.pairing = ordered_match ? Pairing::Ordered : Pairing::Swapped;
  return v;
}

Verdict handlebody_mode(const Diagram& a, const Diagram& b) {
  Verdict v = classify(a, b, false);
  v.handlebody = true;
  return v;
}

}  // namespace lkgraph
