#pragma once

#include <string>

#include <json.hpp>

#include "hsc/bounds.hpp"
#include "hsc/convexity.hpp"
#include "hsc/verify.hpp"

namespace hsc::report {

/// %.17g; JSON gets `null` for non-finite values.
std::string format_double(double v);

/// Serializes with every floating value at 17 significant digits, keys in
/// sorted order, two-space indent.
std::string dump(const nlohmann::json& doc);

nlohmann::json to_json(const convexity::ConvexityReport& r);
nlohmann::json to_json(const bounds::BoundResult& r);
nlohmann::json to_json(const verify::VerifyReport& r);
nlohmann::json to_json(const bounds::LambdaArgs& a);

/// Fixed header: theorem,x,a,b,s,q,p,M,lhs,rhs,slack,hypothesis_ok
std::string csv_header();
std::string csv_row(const bounds::BoundResult& r);

}  // namespace hsc::report
