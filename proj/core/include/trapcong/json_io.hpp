#pragma once

#include <nlohmann/json.hpp>

#include "trapcong/classic.hpp"
#include "trapcong/dcong.hpp"
#include "trapcong/ecq.hpp"
#include "trapcong/icong.hpp"
#include "trapcong/kcong.hpp"
#include "trapcong/model.hpp"

// Exact values serialize as strings: integers as "n", rationals as
// "num/den" (or "num" when integral). nlohmann objects keep sorted keys,
// so equal inputs always produce byte-identical output.
namespace trapcong {

using nlohmann::json;

void to_json(json& j, const Rat& q);
void to_json(json& j, const TrapezoidI& t);
void to_json(json& j, const TrapezoidK& t);
void to_json(json& j, const TrapezoidD& t);
void to_json(json& j, const RightTriangleQ& t);
void to_json(json& j, const CurveQ& E);
void to_json(json& j, const PointQ& P);
void to_json(json& j, const QuarticRow& r);
void to_json(json& j, const D0Entry& e);
void to_json(json& j, const IForm& f);
void to_json(json& j, const Prop11Certificate& c);
void to_json(json& j, const DSearchEntry& e);

// Flat offset-witness record {n, d, a, b, c, source}.
json d_witness_record(const Int& n, const TrapezoidD& t, const std::string& source);

json int_json(const Int& n);

}  // namespace trapcong
