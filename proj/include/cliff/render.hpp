#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cliff/brauer_wall.hpp"
#include "cliff/classify.hpp"
#include "cliff/spin_reps.hpp"
#include "cliff/spinor.hpp"
#include "cliff/tensor_iso.hpp"

namespace cliff {

using Json = nlohmann::json;

enum class Format { text, json, csv };
Format parse_format(const std::string& name);

/// Compact JSON with sorted keys and a trailing newline.
std::string dump_json(const Json& j);

Json to_json(const AlgebraClass& c);
std::string to_text(const AlgebraClass& c);
std::string classification_csv(const std::vector<AlgebraClass>& cells);

Json to_json(const IdempotentData& d, const DivisionRingData& ring, const MinimalLeftIdeal& ideal);
std::string to_text(const IdempotentData& d, const DivisionRingData& ring, const MinimalLeftIdeal& ideal);

Json to_json(const Chessboard& board);
std::string to_text(const Chessboard& board);

Json transition_json(const Transition& t);
std::string transition_text(const Transition& t);
Json clock_json();
std::string clock_text();

Json to_json(const RepLabel& label);
std::string to_text(const RepLabel& label);
Json to_json(const SpinChain& chain);
std::string to_text(const SpinChain& chain);
Json to_json(const RepresentationBlock& block);
std::string to_text(const RepresentationBlock& block);

Json to_json(const IsoProof& proof);
Json to_json(const PhiPsiReport& report);
Json to_json(const QuotientReport& report);

Json complex_json(cplx z);            // [re, im]
Json matrix_json(const Mat2& m);      // [[[re, im], ...], ...]
Json spinor_json(const TwoSpinor& s);
std::string complex_text(cplx z);
std::string matrix_text(const Mat2& m);

}  // namespace cliff
