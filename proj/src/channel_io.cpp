#include "macexp/channel_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace macexp {

namespace {

using json = nlohmann::ordered_json;

std::vector<double> probs_row(const json& j) {
  std::vector<double> row;
  for (const auto& v : j) row.push_back(v.get<double>());
  return row;
}

std::vector<int> int_row(const json& j) {
  std::vector<int> row;
  for (const auto& v : j) row.push_back(v.get<int>());
  return row;
}

}  // namespace

channel_doc channel_from_json_text(const std::string& text) {
  json j = json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  channel_doc doc;
  if (kind == "additive") {
    int m = j.at("m").get<int>();
    pmf noise(probs_row(j.at("probs")));
    if (noise.size() != m) {
      throw std::invalid_argument("additive channel: m does not match probs length");
    }
    doc.kind = channel_kind::additive;
    doc.additive.emplace(m, noise);
  } else if (kind == "dmc") {
    std::vector<pmf> rows;
    for (const auto& r : j.at("probs")) rows.emplace_back(probs_row(r));
    doc.kind = channel_kind::dmc2;
    doc.single.emplace(std::move(rows));
  } else if (kind == "mac2") {
    int m1 = j.at("m1").get<int>();
    int m2 = j.at("m2").get<int>();
    std::vector<pmf> rows;
    for (const auto& r : j.at("probs")) rows.emplace_back(probs_row(r));
    doc.kind = channel_kind::mac2pair;
    doc.mac.emplace(m1, m2, std::move(rows));
  } else {
    throw std::invalid_argument("channel: unrecognized kind '" + kind + "'");
  }
  return doc;
}

std::string channel_to_json_text(const additive_noise_channel& ch) {
  json j;
  j["kind"] = "additive";
  j["m"] = ch.modulus();
  j["probs"] = json::array();
  for (int i = 0; i < ch.noise().size(); ++i) j["probs"].push_back(ch.noise()[i]);
  return j.dump(2) + "\n";
}

std::string channel_to_json_text(const dmc& ch) {
  json j;
  j["kind"] = "dmc";
  j["probs"] = json::array();
  for (int x = 0; x < ch.input_size(); ++x) {
    json row = json::array();
    for (int y = 0; y < ch.output_size(); ++y) row.push_back(ch.prob(y, x));
    j["probs"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string channel_to_json_text(const mac2& ch) {
  json j;
  j["kind"] = "mac2";
  j["m1"] = ch.input1_size();
  j["m2"] = ch.input2_size();
  j["probs"] = json::array();
  for (int x1 = 0; x1 < ch.input1_size(); ++x1) {
    for (int x2 = 0; x2 < ch.input2_size(); ++x2) {
      json row = json::array();
      for (int y = 0; y < ch.output_size(); ++y) row.push_back(ch.prob(y, x1, x2));
      j["probs"].push_back(std::move(row));
    }
  }
  return j.dump(2) + "\n";
}

transform_spec transform_spec_from_json_text(const std::string& text) {
  json j = json::parse(text);
  transform_spec spec;
  spec.m = j.at("m").get<int>();
  spec.f1 = int_row(j.at("f1"));
  spec.f2 = int_row(j.at("f2"));
  spec.k1 = j.at("k1").get<int>();
  spec.k2 = j.at("k2").get<int>();
  spec.g = int_row(j.at("g"));
  return spec;
}

std::string transform_spec_to_json_text(const transform_spec& spec) {
  json j;
  j["m"] = spec.m;
  j["f1"] = spec.f1;
  j["f2"] = spec.f2;
  j["k1"] = spec.k1;
  j["k2"] = spec.k2;
  j["g"] = spec.g;
  return j.dump(2) + "\n";
}

generator_matrix generator_from_json_text(const std::string& text) {
  json j = json::parse(text);
  int p = j.at("p").get<int>();
  std::vector<std::vector<int>> rows;
  for (const auto& r : j.at("rows")) rows.push_back(int_row(r));
  int k = static_cast<int>(rows.size());
  int n = k > 0 ? static_cast<int>(rows[0].size()) : j.at("n").get<int>();
  std::vector<int> entries;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) {
      throw std::invalid_argument("generator: ragged rows");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return generator_matrix(p, k, n, std::move(entries));
}

std::string generator_to_json_text(const generator_matrix& g) {
  json j;
  j["p"] = g.p();
  if (g.k() == 0) j["n"] = g.n();
  j["rows"] = json::array();
  for (int i = 0; i < g.k(); ++i) {
    json row = json::array();
    for (int c = 0; c < g.n(); ++c) row.push_back(g.entry(i, c));
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string codebook_to_text(const generator_matrix& g) {
  std::ostringstream out;
  for (const auto& c : g.codebook()) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace macexp
