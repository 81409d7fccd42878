#include "hecke/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hecke {

using nlohmann::json;

namespace {

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j, int dim) {
  Mat m(dim, dim);
  if ((int)j.size() != dim) throw std::runtime_error("module JSON: bad matrix height");
  for (int i = 0; i < dim; ++i) {
    if ((int)j[i].size() != dim)
      throw std::runtime_error("module JSON: bad matrix width");
    for (int c = 0; c < dim; ++c)
      m.at(i, c) = Scalar::parse(j[i][c].get<std::string>());
  }
  return m;
}

}  // namespace

json desc_to_json(const AlgebraDesc& d) {
  json j;
  j["n"] = d.n;
  j["p"] = d.p.str();
  j["q"] = d.q.str();
  std::string v = d.variant_str();
  if (v == "B" || v == "R" || v == "A" || v == "Lattice") {
    j["variant"] = v;
  } else if (d.fam == Family::B) {
    j["variant"] = "ParabolicB";
    auto s = ParabolicShape::from_gens(d.n, d.tgens, true);
    j["shape"] = json::array();
    j["shape"].push_back(s.m0);
    for (int m : s.parts) j["shape"].push_back(m);
  } else {
    j["variant"] = "ParabolicA";
    auto s = ParabolicShape::from_gens(d.n, d.tgens, false);
    j["shape"] = json::array();
    for (int m : s.parts) j["shape"].push_back(m);
  }
  return j;
}

AlgebraDesc desc_from_json(const json& j) {
  int n = j.at("n").get<int>();
  Scalar p = Scalar::parse(j.at("p").get<std::string>());
  Scalar q = Scalar::parse(j.at("q").get<std::string>());
  std::string v = j.at("variant").get<std::string>();
  if (v == "B") return AlgebraDesc::full_B(n, p, q);
  if (v == "R") return AlgebraDesc::full_R(n, p, q);
  if (v == "A") return AlgebraDesc::full_A(n, p, q);
  if (v == "Lattice") return AlgebraDesc::lattice_B(n, p, q);
  if (v == "ParabolicB" || v == "ParabolicA") {
    ParabolicShape s;
    s.has_b = v == "ParabolicB";
    auto arr = j.at("shape");
    size_t k = 0;
    if (s.has_b) s.m0 = arr.at(k++).get<int>();
    for (; k < arr.size(); ++k) s.parts.push_back(arr.at(k).get<int>());
    if (s.total() != n) throw std::runtime_error("desc JSON: shape does not sum to n");
    return AlgebraDesc::parabolic(s.has_b ? Family::B : Family::R, n, p, q, s.gens());
  }
  throw std::runtime_error("desc JSON: unknown variant '" + v + "'");
}

json module_to_json(const ModuleRep& M) {
  json j = desc_to_json(M.desc());
  j["dim"] = M.dim();
  json mats;
  for (auto& [name, m] : M.mats()) mats[name] = mat_to_json(m);
  j["mats"] = mats;
  return j;
}

ModuleRep module_from_json(const json& j) {
  AlgebraDesc d = desc_from_json(j);
  int dim = j.at("dim").get<int>();
  ModuleRep M(d, dim);
  const json& mats = j.at("mats");
  for (int i : d.tgens) {
    std::string nm = "T" + std::to_string(i);
    M.set_T(i, mat_from_json(mats.at(nm), dim));
  }
  for (int x = d.lat_min(); x <= d.n; ++x) {
    std::string nm = "X" + std::to_string(x);
    M.set_X(x, mat_from_json(mats.at(nm), dim));
  }
  return M;
}

json character_to_json(const FormalCharacter& ch) {
  json arr = json::array();
  for (auto& [tu, m] : ch.entries) {
    json e;
    e["tuple"] = json::array();
    for (auto& v : tu) e["tuple"].push_back(v.str());
    e["mult"] = m;
    arr.push_back(e);
  }
  return arr;
}

FormalCharacter character_from_json(const json& j) {
  FormalCharacter ch;
  bool first = true;
  for (auto& e : j) {
    std::vector<Scalar> tu;
    for (auto& v : e.at("tuple")) tu.push_back(Scalar::parse(v.get<std::string>()));
    if (first) {
      ch.rank = (int)tu.size();
      first = false;
    }
    ch.add(tu, e.at("mult").get<long long>());
  }
  return ch;
}

std::string character_to_csv(const FormalCharacter& ch) {
  std::ostringstream os;
  for (int i = 0; i < ch.rank; ++i) os << "x" << i << ",";
  os << "mult\n";
  for (auto& [tu, m] : ch.entries) {
    for (auto& v : tu) os << v.str() << ",";
    os << m << "\n";
  }
  return os.str();
}

json nf_to_json(const NormalFormElem& h) {
  json arr = json::array();
  for (auto& [w, f] : h.terms()) {
    json term;
    term["word"] = json::array();
    for (int i : w.reduced_word()) term["word"].push_back(i);
    term["monomials"] = json::array();
    for (auto& [wt, c] : f.terms()) {
      json mono;
      mono["exponents"] = wt.e;
      mono["coeff"] = c.str();
      term["monomials"].push_back(mono);
    }
    arr.push_back(term);
  }
  return arr;
}

json crystal_result_to_json(const CrystalResult& r) {
  json j;
  switch (r.tag) {
    case CrystalResult::Tag::Irreducible:
      j["tag"] = "Irreducible";
      j["module"] = module_to_json(r.a);
      break;
    case CrystalResult::Tag::SplitPair:
      j["tag"] = "SplitPair";
      j["parts"] = json::array({module_to_json(r.a), module_to_json(r.b)});
      break;
    case CrystalResult::Tag::ReducibleCosocle:
      j["tag"] = "ReducibleCosocle";
      j["cosocle"] = module_to_json(r.a);
      break;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json clifford_to_json(const CliffordReport& r) {
  json j;
  j["mu"] = r.mu.str();
  j["outcome"] = r.splits ? "Splits" : "Irreducible";
  j["sigma_selfiso"] = r.sigma_selfiso;
  j["minus_one_present"] = r.minus_one_present;
  if (r.splits) {
    j["parts"] = json::array({module_to_json(r.part1), module_to_json(r.part2)});
    j["intertwiner"] = mat_to_json(r.intertwiner);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json graph_to_json(const CrystalGraph& g) {
  json j;
  j["nodes"] = json::array();
  for (auto& node : g.nodes) {
    json n;
    n["path"] = json::array();
    for (auto& a : node.path) n["path"].push_back(a.str());
    n["dim"] = node.mod.dim();
    n["depth"] = node.depth;
    n["marks"] = node.marks;
    j["nodes"].push_back(n);
  }
  j["edges"] = json::array();
  for (auto& e : g.edges) {
    json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["a"] = e.a.str();
    j["edges"].push_back(je);
  }
  return j;
}

json mseg_to_json(const Multisegment& ms) {
  json j;
  j["segments"] = json::array();
  for (auto& s : ms.segs) j["segments"].push_back(json::array({s.lo, s.hi}));
  return j;
}

Multisegment mseg_from_json(const json& j) {
  Multisegment ms;
  for (auto& s : j.at("segments")) ms.segs.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
  return ms;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace hecke
