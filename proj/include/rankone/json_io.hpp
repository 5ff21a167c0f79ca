#pragma once

// JSON encodings shared by the CLI and its tests.
//
//   weight:  {"n": int, "entries": [int, ...]}
//   measure: {"atoms": [{"t", "w_re", "w_im"}],
//             "densities": [{"a", "b", "coeffs_re": [...], "coeffs_im": [...]}]}
//   model:   {"d", "delta", "tempered_amplitude",
//             "channels": [{"sigma", "measure", "coeff_re", "coeff_im"}]}
//   matrix:  {"re": [[..],[..]], "im": [[..],[..]]}

#include <json.hpp>

#include "rankone/cfunction.hpp"
#include "rankone/compact_duals.hpp"
#include "rankone/gap_params.hpp"
#include "rankone/ktype_search.hpp"
#include "rankone/laplace_sim.hpp"
#include "rankone/measure.hpp"
#include "rankone/stieltjes.hpp"

namespace rankone::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "rankone-gap/1";

// Rounds to 15 significant digits so that emitted numbers stay short.
double round15(double v);

json to_json(const HighestWeight& w);
HighestWeight weight_from_json(const json& j);

json to_json(const RealLineMeasure& m);
RealLineMeasure measure_from_json(const json& j);

json to_json(const SpectralModel& m);
// Parses without validate_model(); callers decide which checks apply.
SpectralModel model_from_json(const json& j);

json to_json(const Matrix2c& q);
Matrix2c matrix_from_json(const json& j);

json to_json(const Rational& r);
json to_json(const WitnessReport& w);
json to_json(const GapParameters& p);
json to_json(const SsgVerdict& v);
json to_json(const InversionResult& r);
json to_json(const DetectorReport& r);
json to_json(const CompareReport& r);
json to_json(const PoleProbeReport& r);

json complex_json(Complex c);

// Reads a whole file; throws Error{ParseError}.
json load_file(const std::string& path);

}  // namespace rankone::io
