#pragma once

#include <string>

#include "isoprod/datum.hpp"
#include "isoprod/document.hpp"
#include "isoprod/search.hpp"

namespace isoprod::report {

using document::Json;

struct Sections {
  bool invariants = false;
  bool hodge = false;
  bool aut0 = false;
  bool kernels = false;
  bool oracle = false;
};

Sections all_sections();

/// Validation section, then the requested sections when the datum is
/// usable (well formed, every curve of genus >= 2). Freeness failures are
/// reported and processing continues.
Json datum_report(const AlgebraicDatum& d, const Sections& sections,
                  const std::string& provenance = {});

/// True when the "validation" section of a report marks the datum unusable.
bool validation_failed(const Json& report);

Json survey_report(const Survey& s);

/// Human-readable rendering of a report produced above.
std::string render_text(const Json& report);

}  // namespace isoprod::report
