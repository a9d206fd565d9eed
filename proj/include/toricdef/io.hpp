#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "toricdef/cone.hpp"

namespace toricdef {

using json = nlohmann::ordered_json;

inline std::vector<long> parse_int_list(std::string text) {
  for (char& ch : text)
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw InputError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

inline QVec parse_rational_list(const std::string& text) {
  QVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw InputError("empty entry in rational list");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw InputError("empty rational list");
  return out;
}

inline MVector mvector_from(const std::vector<long>& v) {
  if (v.empty() || v.size() > static_cast<std::size_t>(kMaxRank)) throw InputError("lattice vectors have rank 2 or 3");
  MVector m = MVector::zero(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m[i] = v[i];
  return m;
}

inline NVector nvector_from(const std::vector<long>& v) { return retag<NVector>(mvector_from(v)); }

// Degrees: "Rstar", "<m>Rstar" or an explicit coordinate list.
inline MVector parse_degree(const Cone& c, const std::string& text) {
  auto pos = text.find("Rstar");
  if (pos != std::string::npos) {
    if (!c.rstar) throw InputError("cone is not Gorenstein, Rstar is undefined");
    if (pos + 5 != text.size()) throw InputError("bad degree '" + text + "'");
    long m = 1;
    if (pos > 0) m = parse_int_list(text.substr(0, pos)).at(0);
    return m * *c.rstar;
  }
  MVector R = mvector_from(parse_int_list(text));
  if (R.n != c.rank) throw InputError("degree rank does not match the cone");
  return R;
}

inline Cone cone_from_json(const json& j) {
  if (!j.is_object()) throw InputError("cone description must be a JSON object");
  try {
    if (j.contains("polytope")) {
      Polytope2 p;
      for (const auto& v : j.at("polytope")) {
        auto xs = v.get<std::vector<long>>();
        if (xs.size() != 2) throw InputError("polytope vertices have two coordinates");
        p.vertices.push_back({xs[0], xs[1]});
      }
      return cone_over_polytope(p);
    }
    if (j.contains("rays")) {
      std::vector<NVector> rays;
      for (const auto& v : j.at("rays")) rays.push_back(nvector_from(v.get<std::vector<long>>()));
      int rank = j.value("rank", rays.empty() ? 0 : rays[0].n);
      for (const auto& a : rays)
        if (a.n != rank) throw InputError("ray of wrong rank");
      if (rank == 2) {
        if (rays.size() != 2) throw InputError("a rank 2 cone has exactly two rays");
        return cone_2d(rays[0], rays[1]);
      }
      if (rank == 3) return cone_over_polytope(rays);
      throw InputError("rank must be 2 or 3");
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed cone description: ") + e.what());
  }
  throw InputError("cone description needs 'polytope' or 'rays'");
}

inline Polytope2 builtin_polytope(const std::string& name) {
  if (name == "hexagon") return {{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}}};
  if (name == "square") return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  if (name == "p123") return {{{-1, -1}, {2, -1}, {-1, 1}}};
  if (name == "triangle2") return {{{0, 0}, {2, 0}, {0, 2}}};
  if (name == "trapezoid") return {{{0, 0}, {2, 0}, {1, 1}, {0, 1}}};
  throw InputError("unknown cone '" + name + "'");
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"hexagon", "square", "p123", "triangle2", "trapezoid", "example", "an:N"};
  return names;
}

inline Cone builtin_cone(const std::string& name) {
  if (name == "example") return cone_2d(NVector{-1, 2}, NVector{1, 2});
  if (name.rfind("an:", 0) == 0) {
    auto v = parse_int_list(name.substr(3));
    if (v.size() != 1 || v[0] < 1) throw InputError("an:N needs N >= 1");
    return an_surface_cone(static_cast<int>(v[0]));
  }
  return cone_over_polytope(builtin_polytope(name));
}

// A path to a JSON file, or a builtin name.
inline Cone load_cone(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InputError("cannot parse " + source + ": " + e.what());
    }
    return cone_from_json(j);
  }
  return builtin_cone(source);
}

// Ordered key/value report rendered as text lines or JSON.
class Report {
 public:
  Report& set(const std::string& key, json value) {
    doc_[key] = std::move(value);
    return *this;
  }
  const json& doc() const { return doc_; }

  std::string text() const {
    std::string out;
    for (const auto& [k, v] : doc_.items()) out += k + " = " + render(v) + "\n";
    return out;
  }
  std::string as_json() const { return doc_.dump(2) + "\n"; }

 private:
  static std::string render(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
      return s + "]";
    }
    return v.dump();
  }
  json doc_ = json::object();
};

inline json to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json to_json(const MVector& m) { return m.str(); }

}  // namespace toricdef
