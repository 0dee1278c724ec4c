#pragma once

#include <string>

#include <json.hpp>

#include "kflag/positivity.hpp"

namespace kflag {

using nlohmann::json;

/// Canonical term list [[exponent vector], coefficient], sorted.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, int rank);
json ypoly_to_json(const YPoly& p);

json report_to_json(const PositivityReport& r);

/// Structure-constant table over W (or W^P): one object per (u, v) pair with
/// {u_word, v_word, constants: {w_word: {laurent, y_poly?, grading_sign}}}.
/// y_poly carries the signed y-expansion for the bases with an alternation
/// statement (o_upper, xi_upper in e^{-alpha}-1; dualizing in e^{alpha}-1).
json build_table(const KRing& k, Basis basis, const std::vector<int>& parabolic_1based,
                 int degree_cap, int jobs);
std::string table_to_csv(const json& table);

/// Basis-class cache, one file per (type, rank): versioned header, the
/// canonical O_w and xi_w restriction tables keyed by reduced words, and the
/// hash of the word choices.  Byte-identical across runs for a fixed setup.
bool save_cache(const KRing& k, const std::string& dir);
bool load_cache(const KRing& k, const std::string& dir);
std::string cache_path(const KRing& k, const std::string& dir);

SubtorusBasis read_subtorus_file(const std::string& path, int rank);

}  // namespace kflag
