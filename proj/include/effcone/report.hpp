#pragma once

#include <ostream>
#include <vector>

#include <json.hpp>

#include "effcone/ehrhart.hpp"
#include "effcone/fracsum.hpp"
#include "effcone/threshold.hpp"
#include "effcone/verify.hpp"

namespace effcone::report {

// Rationals are rendered as "num/den" strings (integers as "n") so exact
// values survive serialization. Object keys come out sorted.
using Json = nlohmann::json;

Json rational(const Rational& x);
Json surface(const WeightedSurface& s);
Json classification(const Classification& c);
Json ehrhart(const EhrhartCoeffs& e, std::int64_t count);
Json gamma(const WeightedSurface& s, const GammaSearch& g, std::int64_t n_max);
Json reduction(const ReductionChain& chain, std::int64_t u0, const ReductionResult& r);
Json margin_report(const MarginReport& r);
Json sweep(const SweepResult& r, std::int64_t n_max);
Json calibration(const DeltaCalibration& c);

// CSV tables with a header row.
void gamma_csv(std::ostream& os, const GammaSearch& g);
void sweep_csv(std::ostream& os, const SweepResult& r);
void calibration_csv(std::ostream& os, const DeltaCalibration& c);

}  // namespace effcone::report
