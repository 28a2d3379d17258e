// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adaptive_submod/instance_io.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {
namespace {

using nlohmann::json;

std::string real_string(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string real_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += '"' + real_string(values[i]) + '"';
  }
  return out + "]";
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t read_count(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("key '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double read_real(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size()) return d;
  }
  throw ParseError(where + " is not a real number");
}

std::vector<double> read_reals(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_array()) throw ParseError(std::string("key '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(read_real(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <class Inst>
Inst checked(Inst inst) {
  try {
    inst.validate();
  } catch (const InvalidInputError& e) {
    throw ParseError(std::string("validation error: ") + e.what());
  }
  return inst;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  if (const auto* c = std::get_if<CoverageInstance>(&inst)) {
    out << "{\n\"kind\": \"coverage\",\n\"n\": " << c->n() << ",\n\"universe_size\": "
        << c->universe_size << ",\n\"weights\": " << real_array(c->weights) << ",\n\"sets\": [";
    for (std::size_t i = 0; i < c->sets.size(); ++i) {
      out << (i ? ",\n" : "\n") << json(c->sets[i]).dump();
    }
    out << "\n]\n}\n";
  } else if (const auto* f = std::get_if<FacilityInstance>(&inst)) {
    out << "{\n\"kind\": \"facility\",\n\"n\": " << f->n() << ",\n\"clients\": " << f->clients()
        << ",\n\"similarity\": [";
    for (std::size_t i = 0; i < f->similarity.size(); ++i) {
      out << (i ? ",\n" : "\n") << real_array(f->similarity[i]);
    }
    out << "\n]\n}\n";
  } else {
    const auto& a = std::get<AdditiveInstance>(inst);
    out << "{\n\"kind\": \"additive\",\n\"n\": " << a.n()
        << ",\n\"weights\": " << real_array(a.weights) << "\n}\n";
  }
  return out.str();
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed instance at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  const json& kind = require(doc, "kind");
  if (!kind.is_string()) throw ParseError("key 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "coverage") {
      CoverageInstance c;
      const std::size_t n = read_count(doc, "n");
      c.universe_size = read_count(doc, "universe_size");
      c.weights = read_reals(doc, "weights");
      const json& sets = require(doc, "sets");
      if (!sets.is_array()) throw ParseError("key 'sets' must be an array");
      if (sets.size() != n) throw ParseError("key 'sets' must have n entries");
      c.sets.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        c.sets.push_back(sets[i].get<std::vector<std::uint32_t>>());
      }
      return checked(std::move(c));
    }
    if (k == "facility") {
      FacilityInstance f;
      const std::size_t n = read_count(doc, "n");
      const std::size_t clients = read_count(doc, "clients");
      const json& rows = require(doc, "similarity");
      if (!rows.is_array() || rows.size() != n) {
        throw ParseError("key 'similarity' must be an array of n rows");
      }
      f.similarity.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "similarity[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != clients) {
          throw ParseError(where + " must have 'clients' entries");
        }
        for (std::size_t j = 0; j < clients; ++j) {
          f.similarity[i].push_back(read_real(rows[i][j], where + "[" + std::to_string(j) + "]"));
        }
      }
      return checked(std::move(f));
    }
    if (k == "additive") {
      AdditiveInstance a;
      const std::size_t n = read_count(doc, "n");
      a.weights = read_reals(doc, "weights");
      if (a.weights.size() != n) throw ParseError("key 'weights' must have n entries");
      return checked(std::move(a));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  throw ParseError("unknown instance kind '" + k + "'");
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write instance file " + path.string());
  out << serialize_instance(inst);
  if (!out) throw ParseError("failed writing instance file " + path.string());
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace adaptive_submod
