#include "horoclif/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace horoclif {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + escape(s) + "\""; }

// Parses a coefficient map into an existing zero multivector.
void read_coeffs(const ordered_json& j, Multivector& m) {
  if (!j.is_object())
    throw DomainError("coefficient map must be a JSON object", 0.0);
  const int n = m.n();
  for (const auto& [key, val] : j.items()) {
    if (!val.is_number())
      throw DomainError("coefficient values must be numbers", 0.0);
    std::uint32_t mask = 0;
    if (!key.empty()) {
      std::istringstream ss(key);
      std::string piece;
      int prev = 0;
      while (std::getline(ss, piece, ',')) {
        std::size_t used = 0;
        int g = 0;
        try {
          g = std::stoi(piece, &used);
        } catch (const std::exception&) {
          throw DomainError("blade key is not a generator list", 0.0);
        }
        if (used != piece.size() || g < 1 || g > n || g <= prev)
          throw DomainError("blade key must list distinct ascending generators", 0.0);
        mask |= 1u << (g - 1);
        prev = g;
      }
      if (mask == 0) throw DomainError("blade key is not a generator list", 0.0);
    }
    m[mask] = val.get<double>();
  }
}

ordered_json parse_or_throw(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw DomainError("malformed JSON input", 0.0);
  }
}

int get_dimension(const ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw DomainError("missing integer dimension field", 0.0);
  return j.at("n").get<int>();
}

Multivector coeffs_field(const ordered_json& j, const char* key, int n) {
  if (!j.contains(key))
    throw DomainError(std::string("missing field ") + key, 0.0);
  Multivector m{Signature{0, n}};
  read_coeffs(j.at(key), m);
  return m;
}

void csv_flatten(const ordered_json& j, const std::string& path,
                 std::string& out);

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += "\"\"";
    else q += ch;
  }
  q += "\"";
  return q;
}

std::string csv_scalar(const ordered_json& j) {
  if (j.is_string()) return csv_quote(j.get<std::string>());
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return format_double(j.get<double>());
  if (j.is_null()) return "";
  return csv_quote(j.dump());
}

void csv_flatten(const ordered_json& j, const std::string& path,
                 std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items())
      csv_flatten(val, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& val : j) {
      csv_flatten(val, path + "." + std::to_string(i), out);
      ++i;
    }
  } else {
    out += csv_quote(path);
    out += ",";
    out += csv_scalar(j);
    out += "\n";
  }
}

}  // namespace

std::string blade_key(std::uint32_t mask) {
  std::string key;
  for (int g = 1; mask != 0; ++g, mask >>= 1) {
    if (mask & 1u) {
      if (!key.empty()) key += ",";
      key += std::to_string(g);
    }
  }
  return key;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_coeffs(const Multivector& m) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0.0) continue;
    if (!first) out += ",";
    first = false;
    out += quoted(blade_key(i)) + ":" + format_double(m[i]);
  }
  out += "}";
  return out;
}

std::string json_multivector(const Multivector& m) {
  return "{\"p\":" + std::to_string(m.sig.p) + ",\"q\":" + std::to_string(m.sig.q) +
         ",\"coeffs\":" + json_coeffs(m) + "}";
}

std::string json_spinor(const Spinor& k) {
  return "{\"n\":" + std::to_string(k.n()) + ",\"xi\":" + json_coeffs(k.xi) +
         ",\"eta\":" + json_coeffs(k.eta) + "}";
}

std::string json_matrix(const CliffordMatrix& m) {
  return "{\"n\":" + std::to_string(m.n()) + ",\"a\":" + json_coeffs(m.a) +
         ",\"b\":" + json_coeffs(m.b) + ",\"c\":" + json_coeffs(m.c) +
         ",\"d\":" + json_coeffs(m.d) + "}";
}

std::string json_minkowski(const MinkowskiPoint& p) {
  std::string out = "{\"T\":" + format_double(p.T) + ",\"Z\":" + format_double(p.Z) +
                    ",\"X\":[";
  for (std::size_t i = 0; i < p.X.size(); ++i) {
    if (i) out += ",";
    out += format_double(p.X[i]);
  }
  out += "]}";
  return out;
}

std::string json_multiflag(const Multiflag& mf) {
  std::string out = "{\"base\":" + json_minkowski(mf.base) + ",\"vectors\":[";
  for (std::size_t i = 0; i < mf.vectors.size(); ++i) {
    if (i) out += ",";
    out += json_minkowski(mf.vectors[i]);
  }
  out += "]}";
  return out;
}

std::string json_horosphere(const DecoratedHorosphere& h) {
  std::string out;
  if (h.kind == HorosphereKind::Plane) {
    out = "{\"kind\":\"plane\",\"height\":" + format_double(h.height);
  } else {
    out = "{\"kind\":\"sphere\",\"center\":" + json_coeffs(h.center) +
          ",\"diameter\":" + format_double(h.diameter);
  }
  out += ",\"decorations\":[";
  for (std::size_t i = 0; i < h.decorations.size(); ++i) {
    if (i) out += ",";
    out += json_coeffs(h.decorations[i]);
  }
  out += "]}";
  return out;
}

std::string json_boundary_point(const ParavectorPoint& p) {
  if (p.infinite) return "\"inf\"";
  return json_coeffs(p.value);
}

std::string json_geodesic(const Geodesic& g) {
  return "{\"from\":" + json_boundary_point(g.from) +
         ",\"to\":" + json_boundary_point(g.to) + "}";
}

std::string json_lambda_matrix(const LambdaMatrix& lm) {
  const int n = lm.spinors.empty() ? 0 : lm.spinors.front().n();
  std::string out = "{\"n\":" + std::to_string(n) + ",\"spinors\":[";
  for (std::size_t i = 0; i < lm.spinors.size(); ++i) {
    if (i) out += ",";
    out += json_spinor(lm.spinors[i]);
  }
  out += "],\"lambda\":[";
  for (std::size_t i = 0; i < lm.lambda.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < lm.lambda[i].size(); ++j) {
      if (j) out += ",";
      out += json_coeffs(lm.lambda[i][j]);
    }
    out += "]";
  }
  out += "]}";
  return out;
}

std::string json_error(const Error& e) {
  return "{\"clause\":" + quoted(e.clause) +
         ",\"residual\":" + format_double(e.residual) + "}";
}

std::string json_relation_report(const std::string& relation, double residual,
                                 double conditioning, bool pass) {
  return "{\"relation\":" + quoted(relation) + ",\"residual\":" + format_double(residual) +
         ",\"conditioning\":" + format_double(conditioning) +
         ",\"pass\":" + (pass ? std::string("true") : std::string("false")) + "}";
}

Multivector parse_multivector(const std::string& text) {
  const ordered_json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("p") || !j.contains("q") ||
      !j.at("p").is_number_integer() || !j.at("q").is_number_integer())
    throw DomainError("multivector JSON needs integer p and q", 0.0);
  Multivector m{Signature{j.at("p").get<int>(), j.at("q").get<int>()}};
  if (j.contains("coeffs")) read_coeffs(j.at("coeffs"), m);
  return m;
}

Spinor parse_spinor(const std::string& text) {
  const ordered_json j = parse_or_throw(text);
  const int n = get_dimension(j);
  Multivector xi = coeffs_field(j, "xi", n);
  Multivector eta = coeffs_field(j, "eta", n);
  return make_spinor(xi, eta);
}

std::vector<Spinor> parse_spinors(const std::string& text) {
  const ordered_json j = parse_or_throw(text);
  std::vector<Spinor> out;
  const ordered_json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("spinors")) {
    if (!j.at("spinors").is_array())
      throw DomainError("spinors field must be an array", 0.0);
    arr = &j.at("spinors");
  } else {
    out.push_back(parse_spinor(text));
    return out;
  }
  for (const auto& item : *arr) {
    const int n = get_dimension(item);
    Multivector xi = coeffs_field(item, "xi", n);
    Multivector eta = coeffs_field(item, "eta", n);
    out.push_back(make_spinor(xi, eta));
  }
  return out;
}

CliffordMatrix parse_matrix(const std::string& text, MatrixFlavor flavor) {
  const ordered_json j = parse_or_throw(text);
  const int n = get_dimension(j);
  Multivector a = coeffs_field(j, "a", n);
  Multivector b = coeffs_field(j, "b", n);
  Multivector c = coeffs_field(j, "c", n);
  Multivector d = coeffs_field(j, "d", n);
  return make_matrix(a, b, c, d, flavor);
}

std::string json_to_csv(const std::string& json_text) {
  const ordered_json j = parse_or_throw(json_text);
  std::string out = "key,value\n";
  csv_flatten(j, "", out);
  return out;
}

}  // namespace horoclif
