#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cochar/partition.hpp"
#include "cochar/series.hpp"

namespace cochar {

enum class ClosedForm { E, UT2E, UT3E_hook11, UT2E_parts2, UT3E_parts2 };

// Accepts "E", "UT2E", "UT3E_hook11", "UT2E_parts2", "UT3E_parts2".
ClosedForm parse_closed_form(std::string_view tag);
std::string closed_form_name(ClosedForm f);

// Published multiplicity of lam, or nullopt when no row of the table applies
// (multiplicity 0). Rows are tried in printed order and the first match wins.
// Throws std::domain_error when lam is outside the table's domain: H(1,1) for
// UT3E_hook11, at most two parts for the *_parts2 tables.
std::optional<mpz_class> closed_multiplicity(ClosedForm f, const Partition& lam);

// Whether lam lies in the table's declared domain.
bool closed_form_covers(ClosedForm f, const Partition& lam);

enum class Transcription { Corrected, AsPrinted };

// Named rational displays expanded to total degree N:
//   M'_E_2vars, M'_UT2_2vars, M'_UT3_2vars        over v1, v2
//   Mhat_E_11, Mhat_UT3_11                         over v1, t1, y1
//   G1_of_1_H23, G2sq_of_1_H23, G2sq_of_v1_H23,
//   Mhat_UT2_23                                    over v1, v2, t1, t2, y1, y2, y3
// AsPrinted reproduces three displays literally, misprints included
// (M'_UT3_2vars, G2sq_of_1_H23, G2sq_of_v1_H23); for every other name the two
// transcriptions coincide. Throws std::invalid_argument on an unknown name.
Series reference_series(std::string_view name, int bound,
                        Transcription t = Transcription::Corrected);
std::vector<std::string> reference_series_names();

}  // namespace cochar
