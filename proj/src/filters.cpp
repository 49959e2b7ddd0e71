#include "schubert/filters.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

const char* filter_name(VanishFilter f) {
  switch (f) {
    case VanishFilter::Degree: return "degree";
    case VanishFilter::Bruhat: return "bruhat";
    case VanishFilter::Descents: return "descents";
    case VanishFilter::Knutson: return "knutson";
    case VanishFilter::ZetaRows: return "zeta-rows";
  }
  return "?";
}

namespace {

std::optional<FilterCertificate> degree_filter(const Permutation& u, const Permutation& v,
                                               const Permutation& w) {
  const int lu = inversions(u), lv = inversions(v), lw = inversions(w);
  if (lu + lv == lw) return std::nullopt;
  std::ostringstream why;
  why << "inv(u)+inv(v) = " << lu + lv << " but inv(w) = " << lw;
  return FilterCertificate{VanishFilter::Degree, why.str()};
}

std::optional<FilterCertificate> bruhat_filter(const Permutation& u, const Permutation& v,
                                               const Permutation& w) {
  if (!bruhat_leq(u, w))
    return FilterCertificate{VanishFilter::Bruhat, "u is not below w in Bruhat order"};
  if (!bruhat_leq(v, w))
    return FilterCertificate{VanishFilter::Bruhat, "v is not below w in Bruhat order"};
  return std::nullopt;
}

std::optional<FilterCertificate> descents_filter(const Permutation& u, const Permutation& v,
                                                 const Permutation& w) {
  const int du = descent_count(u), dv = descent_count(v), dw = descent_count(w);
  if (dw <= du + dv) return std::nullopt;
  std::ostringstream why;
  why << "w has " << dw << " descents, more than " << du << " + " << dv;
  return FilterCertificate{VanishFilter::Descents, why.str()};
}

std::optional<FilterCertificate> knutson_filter(const Permutation& u, const Permutation& v,
                                                const Permutation& w) {
  // Positions descending in both u and v must also descend in w; the
  // stabilized evaluation w(i) < w(i+1) works beyond w's window.
  const std::vector<int> du = descent_set(u), dv = descent_set(v);
  std::vector<int> common;
  std::set_intersection(du.begin(), du.end(), dv.begin(), dv.end(), std::back_inserter(common));
  for (int i : common) {
    if (w(i) < w(i + 1)) {
      std::ostringstream why;
      why << "position " << i << " descends in u and v but ascends in w";
      return FilterCertificate{VanishFilter::Knutson, why.str()};
    }
  }
  return std::nullopt;
}

std::optional<FilterCertificate> zeta_filter(const Permutation& u, const Permutation& v,
                                             const Permutation& w) {
  const int zu = zeta_rows(u), zv = zeta_rows(v), zw = zeta_rows(w);
  if (zw <= zu + zv) return std::nullopt;
  std::ostringstream why;
  why << "diagram of w occupies " << zw << " rows, more than " << zu << " + " << zv;
  return FilterCertificate{VanishFilter::ZetaRows, why.str()};
}

}  // namespace

std::optional<FilterCertificate> apply_filter(VanishFilter f, const Permutation& u,
                                              const Permutation& v, const Permutation& w) {
  switch (f) {
    case VanishFilter::Degree: return degree_filter(u, v, w);
    case VanishFilter::Bruhat: return bruhat_filter(u, v, w);
    case VanishFilter::Descents: return descents_filter(u, v, w);
    case VanishFilter::Knutson: return knutson_filter(u, v, w);
    case VanishFilter::ZetaRows: return zeta_filter(u, v, w);
  }
  return std::nullopt;
}

std::optional<FilterCertificate> filter_vanish(const Permutation& u, const Permutation& v,
                                               const Permutation& w) {
  for (const VanishFilter f : {VanishFilter::Degree, VanishFilter::Bruhat,
                               VanishFilter::Descents, VanishFilter::Knutson,
                               VanishFilter::ZetaRows}) {
    if (auto cert = apply_filter(f, u, v, w)) return cert;
  }
  return std::nullopt;
}

}  // namespace schubert
