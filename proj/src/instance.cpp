#include "taut/instance.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "taut/errors.hpp"

namespace taut {

using nlohmann::json;

namespace {

Rat json_rat(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  } catch (const std::exception& e) {
    throw ValidationError(where + ": " + e.what());
  }
  throw ValidationError(where + ": rationals must be integers or \"p/q\" strings");
}

const json& need(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

const Character& Instance::character(const std::string& name) const {
  auto it = characters.find(name);
  if (it == characters.end())
    throw ValidationError("instance has no character named \"" + name + "\"");
  return it->second;
}

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance must be a JSON object");

  // Lie algebra
  const json& lie_obj = need(doc, "lie", "instance");
  int m = need(lie_obj, "dim", "lie").get<int>();
  std::vector<std::tuple<int, int, std::vector<Rat>>> table;
  if (lie_obj.contains("brackets")) {
    for (auto& entry : lie_obj["brackets"]) {
      if (!entry.is_array() || entry.size() != 3)
        throw ValidationError("lie.brackets entries must be [i, j, [c_1..c_m]]");
      int i = entry[0].get<int>(), j = entry[1].get<int>();
      std::vector<Rat> coeffs;
      std::ostringstream where;
      where << "lie.brackets(" << i << "," << j << ")";
      for (auto& c : entry[2]) coeffs.push_back(json_rat(c, where.str()));
      if (static_cast<int>(coeffs.size()) != m)
        throw ValidationError(where.str() + ": coefficient vector must have length " +
                              std::to_string(m));
      table.emplace_back(i - 1, j - 1, std::move(coeffs));
    }
  }
  std::optional<int> scaling;
  if (lie_obj.contains("scaling_element")) scaling = lie_obj["scaling_element"].get<int>() - 1;
  LieAlgebra lie = LieAlgebra::from_brackets(m, table, scaling);

  // representation
  const json& rep_obj = need(doc, "rep", "instance");
  int N = need(rep_obj, "N", "rep").get<int>();
  const json& mats = need(rep_obj, "matrices", "rep");
  if (!mats.is_array() || static_cast<int>(mats.size()) != m)
    throw ValidationError("rep.matrices must list one N x N matrix per basis element");
  std::vector<RatMatrix> matrices;
  for (int j = 0; j < m; ++j) {
    RatMatrix M;
    const json& rows = mats[j];
    if (!rows.is_array() || static_cast<int>(rows.size()) != N)
      throw ValidationError("rep.matrices[" + std::to_string(j + 1) + "] must have N rows");
    for (int r = 0; r < N; ++r) {
      const json& row = rows[r];
      if (!row.is_array() || static_cast<int>(row.size()) != N)
        throw ValidationError("rep.matrices[" + std::to_string(j + 1) + "] row " +
                              std::to_string(r + 1) + " must have N entries");
      M.emplace_back();
      for (int c = 0; c < N; ++c) {
        std::ostringstream where;
        where << "rep.matrices[" << j + 1 << "][" << r + 1 << "][" << c + 1 << "]";
        M.back().push_back(json_rat(row[c], where.str()));
      }
    }
    matrices.push_back(std::move(M));
  }
  RepData rep(std::move(lie), N, std::move(matrices));

  // orbit closure
  std::vector<Poly> gens;
  for (auto& s : need(doc, "ideal", "instance")) {
    if (!s.is_string()) throw ValidationError("ideal entries must be polynomial strings");
    try {
      gens.push_back(parse_poly(s.get<std::string>(), N));
    } catch (const std::exception& e) {
      throw ValidationError("ideal generator \"" + s.get<std::string>() + "\": " + e.what());
    }
  }
  int dim_Y = need(doc, "dim_Y", "instance").get<int>();
  std::optional<std::vector<Rat>> gamma;
  if (doc.contains("gamma")) {
    gamma.emplace();
    int i = 0;
    for (auto& v : doc["gamma"]) gamma->push_back(json_rat(v, "gamma[" + std::to_string(++i) + "]"));
  }
  std::optional<std::vector<int>> ci;
  if (doc.contains("ci_degrees")) {
    ci.emplace();
    for (auto& v : doc["ci_degrees"]) ci->push_back(v.get<int>());
  }
  OrbitClosureData orbit(PolyIdeal(N, std::move(gens)), dim_Y, std::move(gamma), std::move(ci));

  // characters
  std::map<std::string, Character> characters;
  if (doc.contains("characters")) {
    for (auto& [name, arr] : doc["characters"].items()) {
      std::vector<Rat> vals;
      int i = 0;
      for (auto& v : arr)
        vals.push_back(json_rat(v, "characters." + name + "[" + std::to_string(++i) + "]"));
      try {
        characters.emplace(name, rep.character(std::move(vals)));
      } catch (const std::exception& e) {
        throw ValidationError("characters." + name + ": " + e.what());
      }
    }
  }

  std::vector<std::string> tasks;
  if (doc.contains("tasks")) {
    for (auto& t : doc["tasks"]) {
      if (!t.is_string())
        throw ValidationError("tasks must be an array of subcommand names");
      tasks.push_back(t.get<std::string>());
    }
  }

  // reconstruct the torus matrix when every action matrix is diagonal and the
  // algebra is abelian (enables the GKZ gamma derivation)
  std::optional<IntMat> A;
  bool abelian = true;
  for (int i = 0; i < m && abelian; ++i)
    for (int j = 0; j < m && abelian; ++j)
      for (int k = 0; k < m; ++k)
        if (rep.lie().bracket(i, j)[k] != 0) abelian = false;
  if (abelian) {
    IntMat cand(m, std::vector<mpz_class>(N));
    bool diagonal = true;
    for (int i = 0; i < m && diagonal; ++i)
      for (int r = 0; r < N && diagonal; ++r)
        for (int c = 0; c < N; ++c) {
          const Rat& v = rep.matrix(i)[r][c];
          if (r != c && v != 0) diagonal = false;
          if (r == c) {
            if (!rat_is_integer(v)) diagonal = false;
            else cand[i][r] = v.get_num();
          }
        }
    if (diagonal) A = std::move(cand);
  }

  return {std::move(rep), std::move(orbit), std::move(characters), std::move(tasks),
          std::move(A)};
}

LFDInstance parse_lfd_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("file is not valid JSON: ") + e.what());
  }
  const json& lfd = need(doc, "lfd", "file");
  LFDInstance out;
  out.n = need(lfd, "n", "lfd").get<int>();
  int i = 0;
  for (auto& r : need(lfd, "roots_bD", "lfd"))
    out.roots_bD.push_back(json_rat(r, "lfd.roots_bD[" + std::to_string(++i) + "]"));
  if (lfd.contains("beta_e")) out.beta_e = json_rat(lfd["beta_e"], "lfd.beta_e");
  return out;
}

LoadedFile load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedFile out;
  out.raw = buf.str();
  json doc;
  try {
    doc = json::parse(out.raw);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("lfd"))
    out.lfd = parse_lfd_json(out.raw);
  else
    out.instance = parse_instance_json(out.raw);
  return out;
}

}  // namespace taut
