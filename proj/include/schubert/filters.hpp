// Cheap necessary conditions for a structure constant to be nonzero.
// Each filter, given (u, v, w), either produces a certificate that the
// coefficient of S_w in S_u * S_v vanishes, or stays silent.  Silence
// decides nothing.
//
// The five filters, probed in this fixed order by filter_vanish:
//   Degree    inversion counts must add up;
//   Bruhat    u and v must both lie below w;
//   Descents  w cannot have more descents than u and v combined;
//   Knutson   a position descending in both u and v must descend in w;
//   ZetaRows  the diagram of w cannot occupy more rows than the diagrams
//             of u and v combined.

#ifndef SCHUBERT_FILTERS_HPP
#define SCHUBERT_FILTERS_HPP

#include "schubert/weyl.hpp"

#include <optional>
#include <string>

namespace schubert {

enum class VanishFilter { Degree, Bruhat, Descents, Knutson, ZetaRows };

const char* filter_name(VanishFilter f);

struct FilterCertificate {
  VanishFilter filter;
  std::string witness;  // human-readable reason, e.g. the violated counts
};

// Probe one filter.
std::optional<FilterCertificate> apply_filter(VanishFilter f, const Permutation& u,
                                              const Permutation& v, const Permutation& w);

// Probe all filters in the fixed order; first certificate wins.
std::optional<FilterCertificate> filter_vanish(const Permutation& u, const Permutation& v,
                                               const Permutation& w);

}  // namespace schubert

#endif  // SCHUBERT_FILTERS_HPP
