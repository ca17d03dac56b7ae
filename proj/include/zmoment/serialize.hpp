#pragma once

#include <string>

#include <json.hpp>

#include "zmoment/arith.hpp"
#include "zmoment/moments.hpp"

namespace zmoment {

nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const MainTermPolynomial& p);
nlohmann::json to_json(const TheoremMainTerm& m);
nlohmann::json to_json(const Comparison& c);
nlohmann::json to_json(const WeightedMoment& w);
nlohmann::json to_json(const GonekCheck& g);
/// Zero list with counts; records as objects with the CSV column names.
nlohmann::json zeros_json(const ZeroSet& z);
/// gamma_0 .. gamma_order, eta coefficients, the residue polynomial of
/// (zeta'/zeta) zeta'^2 x^s/s and its printed-form check. 0 <= order <= 8.
nlohmann::json constants_json(int order);
/// Main-term polynomials and their values at t_max.
nlohmann::json asymptotics_json(const TheoremMainTerm& m, const StieltjesTable& gammas, double t_max);

std::string report_csv_header();
std::string to_csv_row(const MomentReport& r);

}  // namespace zmoment
