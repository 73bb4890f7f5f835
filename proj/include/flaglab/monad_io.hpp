#pragma once

#include "flaglab/monad.hpp"

#include <json.hpp>

#include <string>

namespace flaglab::monad {

// {"charge": k, "J": "standard" | [[q,...],...], "x_columns": k x (4k+2) x 3,
//  "y_columns": k x (4k+2) x 3}, rationals as "num/den".
nlohmann::json to_json(const MonadData& m);

// Throws std::invalid_argument on malformed input; the result passes check_shape.
MonadData monad_from_json(const nlohmann::json& j);

nlohmann::json report_json(const ValidationReport& r);

// s_index,p_x,p_y,q_x,q_y,s with coordinates written as a:b:c.
std::string scan_csv(const ScanResult& r);

std::string projective_string(const Vector& v);

}  // namespace flaglab::monad
