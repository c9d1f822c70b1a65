#pragma once

// Whole computations from JSON inputs to JSON reports. These back both the
// command-line tool and the Python module. Malformed or invalid inputs throw
// io::ValidationError; verification outcomes are reported in the result
// ("passed" fields) rather than thrown.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ncspectrum/io.hpp"

namespace ncs::api {

using json = nlohmann::json;

/// method is "standard" or "diagram". With `nonunital`, the diagram method
/// computes the kernel of the unitalization map instead.
json k0(const json& algebra, const std::string& method, std::size_t m = 2, const std::optional<json>& spec = {},
        bool nonunital = false);

/// Invariant factors and eta for the algebra, plus the naturality square for
/// the given hom and for `random_homs` random unital homs drawn from `seed`.
json verify_theorem1(const json& algebra, const std::optional<json>& hom = {}, const std::optional<json>& spec = {},
                     std::size_t m = 2, std::size_t random_homs = 0, std::uint64_t seed = 0);

json colimit(const json& diagram);
json limit(const json& diagram);

json subdiagram(const json& algebra, const std::optional<json>& spec = {});
json ideals(const json& algebra, const std::optional<json>& spec = {});

/// file: {"algebra", "spec"?, "choice": {node id: [atom, ...]} | [[atom, ...], ...]}.
json partial_ideal_check(const json& file);

json snf(const json& matrix);

}  // namespace ncs::api
