#include "core/io.hpp"

#include <map>

#include "core/errors.hpp"
#include "json.hpp"

namespace mvalg {

namespace {

using Json = nlohmann::ordered_json;

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(key, "missing key");
  return j[key];
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> parse_names(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    throw ParseError(path, "expected a nonempty array of names");
  std::vector<std::string> out;
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string s = get_string(j[i], at(path, i));
    if (!seen.emplace(s, 1).second)
      throw ParseError(at(path, i), "duplicate name '" + s + "'");
    out.push_back(std::move(s));
  }
  return out;
}

struct NameIndex {
  std::map<std::string, int> idx;
  explicit NameIndex(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      idx[names[i]] = static_cast<int>(i);
  }
  int resolve(const Json& j, const std::string& path) const {
    std::string s = get_string(j, path);
    auto it = idx.find(s);
    if (it == idx.end())
      throw ParseError(path, "unknown element name '" + s + "'");
    return it->second;
  }
};

std::vector<int> parse_row(const Json& j, const NameIndex& names, int n,
                           const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(path, "expected an array of " + std::to_string(n) +
                               " element names");
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = names.resolve(j[i], at(path, i));
  return out;
}

std::vector<int> parse_table(const Json& j, const NameIndex& names, int n,
                             const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(path, "expected " + std::to_string(n) + " rows");
  std::vector<int> out;
  out.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    auto row = parse_row(j[i], names, n, at(path, i));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

FiniteMultiring parse_multiring(const Json& j) {
  FiniteMultiring A;
  if (j.contains("name")) A.name = get_string(j["name"], "name");
  A.elems = parse_names(field(j, "elements"), "elements");
  const int n = A.size();
  NameIndex names(A.elems);
  A.zero = names.resolve(field(j, "zero"), "zero");
  A.one = names.resolve(field(j, "one"), "one");
  A.neg = parse_row(field(j, "neg"), names, n, "neg");
  A.mul_table = parse_table(field(j, "mul"), names, n, "mul");
  const Json& add = field(j, "add");
  if (!add.is_array() || static_cast<int>(add.size()) != n)
    throw ParseError("add", "expected " + std::to_string(n) + " rows");
  A.add_table.assign(n * n, ElemSet(n));
  for (int a = 0; a < n; ++a) {
    const Json& row = add[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(at("add", a), "expected " + std::to_string(n) + " cells");
    for (int b = 0; b < n; ++b) {
      const Json& cell = row[b];
      std::string path = at(at("add", a), b);
      if (!cell.is_array()) throw ParseError(path, "expected an array");
      if (cell.empty()) throw ParseError(path, "empty sum");
      ElemSet s(n);
      for (std::size_t i = 0; i < cell.size(); ++i)
        s.set(names.resolve(cell[i], at(path, i)));
      A.plus_mut(a, b) = s;
    }
  }
  A.validate();
  return A;
}

RealSemigroupData parse_semigroup(const Json& j) {
  RealSemigroupData G;
  if (j.contains("name")) G.name = get_string(j["name"], "name");
  G.elems = parse_names(field(j, "elements"), "elements");
  const int n = G.size();
  NameIndex names(G.elems);
  G.one = names.resolve(field(j, "one"), "one");
  G.zero = names.resolve(field(j, "zero"), "zero");
  G.minus_one = names.resolve(field(j, "minus_one"), "minus_one");
  G.mul_table = parse_table(field(j, "mul"), names, n, "mul");
  std::string pres = get_string(field(j, "presentation"), "presentation");
  if (pres == "D") G.presentation = RsPresentation::D;
  else if (pres == "Dt") G.presentation = RsPresentation::Dt;
  else throw ParseError("presentation", "expected \"D\" or \"Dt\"");
  const Json& rel = field(j, "rel");
  if (!rel.is_array()) throw ParseError("rel", "expected an array of triples");
  G.rel.assign(n * n, ElemSet(n));
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const Json& t = rel[i];
    std::string path = at("rel", i);
    if (!t.is_array() || t.size() != 3)
      throw ParseError(path, "expected a [d, a, b] triple");
    int d = names.resolve(t[0], at(path, 0));
    int a = names.resolve(t[1], at(path, 1));
    int b = names.resolve(t[2], at(path, 2));
    G.rel[a * n + b].set(d);
  }
  G.validate();
  return G;
}

ARSData parse_ars(const Json& j) {
  ARSData S;
  if (j.contains("name")) S.name = get_string(j["name"], "name");
  S.points = parse_names(field(j, "points"), "points");
  const Json& funcs = field(j, "funcs");
  if (!funcs.is_array() || funcs.empty())
    throw ParseError("funcs", "expected a nonempty array of sign rows");
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    const Json& row = funcs[i];
    std::string path = at("funcs", i);
    if (!row.is_array() || row.size() != S.points.size())
      throw ParseError(path, "expected " + std::to_string(S.points.size()) +
                                 " signs");
    SignRow r(S.points.size());
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (!row[x].is_number_integer())
        throw ParseError(at(path, x), "expected -1, 0 or 1");
      int v = row[x].get<int>();
      if (v < -1 || v > 1) throw ParseError(at(path, x), "expected -1, 0 or 1");
      r[x] = static_cast<std::int8_t>(v);
    }
    S.funcs.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < S.funcs.size(); ++i)
    for (std::size_t k = i + 1; k < S.funcs.size(); ++k)
      if (S.funcs[i] == S.funcs[k])
        throw ParseError(at("funcs", k), "duplicate sign row");
  S.canonicalize();
  return S;
}

}  // namespace

std::string Structure::kind() const {
  if (multiring()) return "multiring";
  if (semigroup()) return "realsemigroup";
  return "ars";
}

const std::string& Structure::name() const {
  if (const auto* m = multiring()) return m->name;
  if (const auto* g = semigroup()) return g->name;
  return ars()->name;
}

Structure parse_structure(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", e.what());
  }
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  std::string kind = get_string(field(j, "kind"), "kind");
  try {
    if (kind == "multiring") return Structure{parse_multiring(j)};
    if (kind == "realsemigroup") return Structure{parse_semigroup(j)};
    if (kind == "ars") return Structure{parse_ars(j)};
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    throw ParseError("", e.what());
  }
  throw ParseError("kind", "unknown kind '" + kind + "'");
}

namespace {

Json names_of(const std::vector<std::string>& elems,
              const std::vector<int>& idx) {
  Json a = Json::array();
  for (int i : idx) a.push_back(elems[i]);
  return a;
}

}  // namespace

std::string serialize(const FiniteMultiring& A) {
  const int n = A.size();
  Json j;
  j["kind"] = "multiring";
  j["name"] = A.name;
  j["elements"] = A.elems;
  j["zero"] = A.elems[A.zero];
  j["one"] = A.elems[A.one];
  j["neg"] = names_of(A.elems, A.neg);
  Json mul = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(A.elems[A.times(a, b)]);
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  Json add = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b)
      row.push_back(names_of(A.elems, A.plus(a, b).members()));
    add.push_back(std::move(row));
  }
  j["add"] = std::move(add);
  return j.dump(2) + "\n";
}

std::string serialize(const RealSemigroupData& G) {
  const int n = G.size();
  Json j;
  j["kind"] = "realsemigroup";
  j["name"] = G.name;
  j["elements"] = G.elems;
  j["one"] = G.elems[G.one];
  j["zero"] = G.elems[G.zero];
  j["minus_one"] = G.elems[G.minus_one];
  Json mul = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(G.elems[G.times(a, b)]);
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  j["presentation"] = G.presentation == RsPresentation::D ? "D" : "Dt";
  Json rel = Json::array();
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (G.rel[a * n + b].test(d))
          rel.push_back(Json::array({G.elems[d], G.elems[a], G.elems[b]}));
  j["rel"] = std::move(rel);
  return j.dump(2) + "\n";
}

std::string serialize(const ARSData& S) {
  Json j;
  j["kind"] = "ars";
  j["name"] = S.name;
  j["points"] = S.points;
  Json funcs = Json::array();
  for (const SignRow& row : S.funcs) {
    Json r = Json::array();
    for (int v : row) r.push_back(v);
    funcs.push_back(std::move(r));
  }
  j["funcs"] = std::move(funcs);
  return j.dump(2) + "\n";
}

std::string serialize(const Structure& s) {
  if (const auto* m = s.multiring()) return serialize(*m);
  if (const auto* g = s.semigroup()) return serialize(*g);
  return serialize(*s.ars());
}

}  // namespace mvalg
