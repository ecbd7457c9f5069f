#pragma once

#include <iosfwd>
#include <string>

#include "tenfold/models.hpp"
#include "tenfold/symmetry.hpp"

namespace tenfold {

/// Key-value model description with [model], [params], optional [terms] and
/// [symmetry.*] sections. Terms are products of a coefficient (literal or
/// parameter name), sin/cos factors per axis, and one Pauli string:
///
///   [model]
///   name = my_chain
///   dim = 1
///
///   [params]
///   mu = 0.5
///
///   [terms]
///   term = -mu * pauli:z
///   term = -1.0 * cos(k1) * pauli:z
///   term = 1.0 * sin(k1) * pauli:y
///
///   [symmetry.phs]
///   u = pauli:x
///   antiunitary = true
///
/// A file naming a builtin model and giving no [terms] configures the builtin.
/// `overrides` wins over the file's [params] values.
BlochModel parse_model_stream(std::istream& in, const std::string& origin,
                              const ModelParams& overrides = {});

BlochModel load_model_file(const std::string& path, const ModelParams& overrides = {});

} // namespace tenfold
