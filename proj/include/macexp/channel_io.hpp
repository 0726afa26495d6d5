#pragma once

#include <optional>
#include <string>

#include "macexp/channels.hpp"
#include "macexp/linear_codes.hpp"
#include "macexp/transform.hpp"

namespace macexp {

// Channel documents:
//   {"kind": "additive", "m": m, "probs": [n0, ..., n_{m-1}]}
//   {"kind": "dmc", "probs": [[row0], [row1], ...]}
//   {"kind": "mac2", "m1": a, "m2": b, "probs": [[...], ...]}  rows indexed x1*m2+x2
enum class channel_kind { additive, dmc2, mac2pair };

struct channel_doc {
  channel_kind kind;
  std::optional<additive_noise_channel> additive;
  std::optional<dmc> single;
  std::optional<mac2> mac;
};

channel_doc channel_from_json_text(const std::string& text);
std::string channel_to_json_text(const additive_noise_channel& ch);
std::string channel_to_json_text(const dmc& ch);
std::string channel_to_json_text(const mac2& ch);

// {"m": ..., "f1": [...], "f2": [...], "k1": ..., "k2": ..., "g": [...]}
transform_spec transform_spec_from_json_text(const std::string& text);
std::string transform_spec_to_json_text(const transform_spec& spec);

// {"p": ..., "rows": [[...], ...]}
generator_matrix generator_from_json_text(const std::string& text);
std::string generator_to_json_text(const generator_matrix& g);

// One codeword per line, symbols separated by single spaces.
std::string codebook_to_text(const generator_matrix& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace macexp
