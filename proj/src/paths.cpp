#include "edss/paths.hpp"

namespace edss {

const char* path_name(PathLabel label) {
  switch (label) {
    case PathLabel::Worsening: return "Worsening";
    case PathLabel::Improver: return "Improver";
    case PathLabel::Stable: return "Stable";
    case PathLabel::Cycler: return "Cycler";
  }
  return "Unknown";
}

PathLabel classify(const Subject& subject, const GroupScheme& scheme, const PathOptions& opts) {
  bool above = false;
  bool below = false;
  bool any_post = false;
  const Visit& base = subject.visits.front();
  for (std::size_t k = 1; k < subject.visits.size(); ++k) {
    const Visit& v = subject.visits[k];
    if (v.month > opts.horizon_months) break;
    any_post = true;
    if (opts.group_level) {
      int g = scheme.group_of(v.edss);
      int gb = scheme.group_of(base.edss);
      above = above || g > gb;
      below = below || g < gb;
    } else {
      above = above || v.edss > base.edss;
      below = below || v.edss < base.edss;
    }
  }
  if (!any_post) {
    throw Error(Err::NoPostBaselineVisits,
                "subject " + subject.id + " has no post-baseline visit within the horizon");
  }
  if (above && below) return PathLabel::Cycler;
  if (above) return PathLabel::Worsening;
  if (below) return PathLabel::Improver;
  return PathLabel::Stable;
}

std::vector<std::optional<PathLabel>> classify_all(const Cohort& cohort,
                                                   const GroupScheme& scheme,
                                                   const PathOptions& opts) {
  std::vector<std::optional<PathLabel>> out;
  out.reserve(cohort.size());
  for (const Subject& s : cohort.subjects) {
    try {
      out.push_back(classify(s, scheme, opts));
    } catch (const Error& e) {
      if (e.code() != Err::NoPostBaselineVisits) throw;
      out.push_back(std::nullopt);
    }
  }
  return out;
}

PathSummary path_proportions(const Cohort& cohort, const GroupScheme& scheme,
                             const PathOptions& opts) {
  if (cohort.subjects.empty()) throw Error(Err::EmptyCohort, "cannot classify an empty cohort");
  PathSummary summary;
  for (const std::optional<PathLabel>& label : classify_all(cohort, scheme, opts)) {
    if (!label) {
      ++summary.excluded;
      continue;
    }
    ++summary.counts[static_cast<std::size_t>(*label)];
    ++summary.classified;
  }
  if (summary.classified > 0) {
    for (std::size_t k = 0; k < 4; ++k) {
      summary.proportions[k] = static_cast<double>(summary.counts[k]) /
                               static_cast<double>(summary.classified);
    }
  }
  return summary;
}

}  // namespace edss
