#ifndef NBHD_IO_HPP
#define NBHD_IO_HPP

#include <string>
#include <string_view>

#include "nbhd/filtration.hpp"
#include "nbhd/model.hpp"

namespace nbhd {

// File format: {"worlds": n, "box": [u_0, ..., u_{2^n-1}], "valuation": {"p": u, ...}}
// with each u the bitmask of a subset. "valuation" is optional. Unknown keys
// are ignored on input, so filtration results and witnesses load as models.

std::string frame_to_json(const Frame& frame);
std::string model_to_json(const Model& m);
/// Model fields plus "partition" (class bitmasks over source worlds) and "kind".
std::string filtration_to_json(const FiltrationResult& fr);

/// Throws FormatError on malformed documents or invalid frames/valuations.
Model model_from_json(std::string_view text);
/// Like model_from_json, but ignores any valuation.
Frame frame_from_json(std::string_view text);

Model load_model(const std::string& path);
Frame load_frame(const std::string& path);

}  // namespace nbhd

#endif  // NBHD_IO_HPP
