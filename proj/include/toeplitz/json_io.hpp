#ifndef TOEPLITZ_JSON_IO_HPP
#define TOEPLITZ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "toeplitz/duality.hpp"
#include "toeplitz/trig_core.hpp"

namespace toeplitz {

using json = nlohmann::json;

//
// Encodings
//   complex          [re, im]
//   TrigPoly         {"d", "coeffs": [...]} for k = -d..d
//   BlockTrigPoly    {"d", "m", "coeffs": [m x m arrays]}
//   ToeplitzMat      {"n", "symbols": [...]} for k = -n+1..n-1
//   BlockToeplitz    {"n", "m", "symbols": [m x m arrays]}
//   AtomicMeasure    {"m", "atoms": [{"lambda", "w"}]}, w scalar when m = 1
// Parsers throw std::invalid_argument on schema violations.
//

json to_json(cplx z);
json to_json(const Mat& m);
json to_json(const TrigPoly& f);
json to_json(const BlockTrigPoly& f);
json to_json(const ToeplitzMat& t);
json to_json(const BlockToeplitz& t);
json to_json(const AtomicMeasure& mu);

cplx complex_from_json(const json& j);
Mat matrix_from_json(const json& j, int rows, int cols);
TrigPoly trig_poly_from_json(const json& j);
BlockTrigPoly block_trig_poly_from_json(const json& j);
ToeplitzMat toeplitz_from_json(const json& j);
BlockToeplitz block_toeplitz_from_json(const json& j);
AtomicMeasure measure_from_json(const json& j);

/// Serializes with every double printed to 17 significant digits, so equal
/// values give equal bytes and the text re-parses to the same doubles.
std::string dump17(const json& j, int indent = 2);

json read_json_file(const std::string& path);

}  // namespace toeplitz

#endif  // TOEPLITZ_JSON_IO_HPP
