#pragma once

#include <string>

#include <json.hpp>

#include "formrank/analyze.hpp"
#include "formrank/enumerate.hpp"

namespace formrank::io {

using nlohmann::json;

inline constexpr const char* kToolName = "formrank";
inline constexpr const char* kToolVersion = "0.1.0";

json field_to_json(const gf::Field& F);
gf::Field field_from_json(const json& j);

/// Canonical form-space document:
///   { "field": {"p", "k", "modulus"[, "q0"]}, "n", "kind",
///     "basis": [matrix...] [, "family": {"name", "params"}] }
/// where matrix is an n x n array of little-endian coefficient arrays of
/// length k with entries in [0, p).
json formspace_to_json(const formspace::FormSpace& M);
formspace::FormSpace formspace_from_json(const json& j);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// write(read(write(M))) is byte-identical to write(M).
std::string canonical_text(const json& j);
std::string write_formspace(const formspace::FormSpace& M);

formspace::FormSpace read_formspace_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

json tool_info();
json input_summary(const formspace::FormSpace& M);

json profile_to_json(const formspace::FormSpace& M, const enumerate::RankProfile& prof);
json common_zeros_to_json(const enumerate::CommonZerosReport& rep);
json hermitian_to_json(const enumerate::HermitianReport& rep);
json pfaffian_div_to_json(const enumerate::PfaffianDivReport& rep);
json bounds_to_json(const enumerate::BoundsReport& rep);
json subspace_to_json(const linalg::Subspace& S);
json spread_to_json(const analyze::SpreadReport& rep);
json decomposition_to_json(const analyze::DecompositionReport& rep);
json bijection_to_json(const analyze::BijectionReport& rep);
json const_rank_to_json(const analyze::ConstRankReport& rep);
json isotropic_to_json(const analyze::IsotropicReport& rep);
json inverse_subspace_to_json(const analyze::InverseSubspaceReport& rep);

}  // namespace formrank::io
