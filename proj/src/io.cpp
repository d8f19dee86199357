#include "relqh/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace relqh {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t need_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ValidationError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw InternalError("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

Json field_to_json(const Field& f) {
  if (f.is_prime()) return {{"kind", "prime"}, {"p", f.p()}};
  return {{"kind", "rational"}};
}

Field field_from_json(const Json& j) {
  const std::string kind = need(j, "kind", "field").get<std::string>();
  if (kind == "prime") {
    auto p = need_index(need(j, "p", "field"), "field.p");
    if (!is_prime_number(p)) throw ValidationError("field.p: " + std::to_string(p) + " is not prime");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  if (kind == "rational" || kind == "rationals" || kind == "Q") return Field::rationals();
  throw ValidationError("field.kind: unknown kind \"" + kind + "\"");
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  throw ValidationError("coefficient must be a string or an integer, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m.at(i, k).str());
    rows.push_back(std::move(r));
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ValidationError("matrix: expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ValidationError("matrix row " + std::to_string(i) + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, scalar_from_json(f, j[i][k]));
  }
  return m;
}

Json vector_to_json(const Matrix& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(v.at(i, 0).str());
  return out;
}

Json algebra_to_json(const Algebra& a) {
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.left(i).is_zero_at(k, j)) mult.push_back({i, j, k, a.left(i).at(k, j).str()});
  Json out{{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"mult", mult}, {"one", vector_to_json(a.one())}};
  if (!a.basis_labels.empty()) out["basis_labels"] = a.basis_labels;
  return out;
}

QuiverPresentation quiver_from_json(const Json& j) {
  QuiverPresentation q;
  q.vertices = static_cast<int>(need_index(need(j, "vertices", "quiver"), "quiver.vertices"));
  const Json& arrows = need(j, "arrows", "quiver");
  if (!arrows.is_array()) throw ValidationError("quiver.arrows: expected an array");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string where = "quiver.arrows[" + std::to_string(i) + "]";
    QuiverArrow a;
    a.name = need(arrows[i], "name", where).get<std::string>();
    a.from = static_cast<int>(need_index(need(arrows[i], "from", where), where + ".from"));
    a.to = static_cast<int>(need_index(need(arrows[i], "to", where), where + ".to"));
    if (a.from >= q.vertices || a.to >= q.vertices) throw ValidationError(where + ": vertex out of range");
    q.arrows.push_back(a);
  }
  if (j.contains("relations")) {
    const Json& rels = j.at("relations");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      std::vector<QuiverTerm> rel;
      for (std::size_t t = 0; t < rels[r].size(); ++t) {
        std::string where = "quiver.relations[" + std::to_string(r) + "][" + std::to_string(t) + "]";
        QuiverTerm term;
        term.path = need(rels[r][t], "path", where).get<std::vector<std::string>>();
        if (rels[r][t].contains("coeff")) {
          const Json& c = rels[r][t].at("coeff");
          term.coeff = c.is_string() ? c.get<std::string>() : c.dump();
        }
        rel.push_back(term);
      }
      q.relations.push_back(rel);
    }
  }
  return q;
}

AlgebraPtr algebra_from_json(const Json& j, const Field& fallback) {
  try {
    if (j.is_object() && j.contains("vertices")) {
      Field f = j.contains("field") ? field_from_json(j.at("field")) : fallback;
      return from_quiver(quiver_from_json(j), f);
    }
    Field f = field_from_json(need(j, "field", "algebra"));
    std::size_t dim = need_index(need(j, "dim", "algebra"), "algebra.dim");
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> mult;
    const Json& m = need(j, "mult", "algebra");
    for (std::size_t t = 0; t < m.size(); ++t) {
      std::string where = "algebra.mult[" + std::to_string(t) + "]";
      if (!m[t].is_array() || m[t].size() != 4) throw ValidationError(where + ": expected [i, j, k, coeff]");
      mult.emplace_back(need_index(m[t][0], where), need_index(m[t][1], where), need_index(m[t][2], where),
                        scalar_from_json(f, m[t][3]));
    }
    const Json& one = need(j, "one", "algebra");
    if (!one.is_array() || one.size() != dim) throw ValidationError("algebra.one: expected " + std::to_string(dim) + " entries");
    Matrix u(f, dim, 1);
    for (std::size_t i = 0; i < dim; ++i) u.set(i, 0, scalar_from_json(f, one[i]));
    auto a = Algebra::from_structure_constants(f, dim, mult, u);
    if (j.contains("basis_labels")) {
      auto labels = j.at("basis_labels").get<std::vector<std::string>>();
      if (labels.size() == dim) std::const_pointer_cast<Algebra>(a)->basis_labels = labels;
    }
    return a;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("algebra: ") + e.what());
  }
}

Json module_to_json(const Module& m, const Json& algebra_ref) {
  Json act = Json::array();
  for (const auto& x : m.actions()) act.push_back(matrix_to_json(x));
  Json out{{"algebra", algebra_ref}, {"dim", m.dim()}, {"action", act}};
  if (!m.name.empty()) out["name"] = m.name;
  return out;
}

ModulePtr module_from_json(const Json& j, const std::filesystem::path& base_dir, const AlgebraPtr& same) {
  try {
    const Json& ref = need(j, "algebra", "module");
    AlgebraPtr a;
    if (ref.is_string()) {
      auto path = base_dir / ref.get<std::string>();
      a = algebra_from_json(read_json_file(path), same ? same->field() : Field::prime(3));
    } else {
      a = algebra_from_json(ref, same ? same->field() : Field::prime(3));
    }
    if (same && same_algebra(*a, *same)) a = same;
    std::size_t dim = need_index(need(j, "dim", "module"), "module.dim");
    const Json& act = need(j, "action", "module");
    if (!act.is_array() || act.size() != a->dim())
      throw ValidationError("module.action: expected one matrix per algebra basis element (" + std::to_string(a->dim()) + ")");
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < act.size(); ++i) {
      try {
        mats.push_back(matrix_from_json(a->field(), act[i], dim, dim));
      } catch (const ValidationError& e) {
        throw ValidationError("module.action[" + std::to_string(i) + "]: " + e.what());
      }
    }
    return Module::make(a, std::move(mats), true, j.value("name", std::string()));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("module: ") + e.what());
  }
}

Json poset_to_json(const WeightPoset& p) {
  Json less = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.lt(i, j)) less.push_back({i, j});
  return {{"labels", p.labels}, {"less_than", less}, {"simple_of", p.simple_of}};
}

WeightPoset poset_from_json(const Json& j) {
  try {
    auto labels = need(j, "labels", "poset").get<std::vector<std::string>>();
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (const auto& e : need(j, "less_than", "poset")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("poset.less_than: expected pairs [i, j]");
      std::size_t a = need_index(e[0], "poset.less_than"), b = need_index(e[1], "poset.less_than");
      if (a >= labels.size() || b >= labels.size()) throw ValidationError("poset.less_than: label index out of range");
      rel.emplace_back(a, b);
    }
    auto simple_of = need(j, "simple_of", "poset").get<std::vector<std::size_t>>();
    if (simple_of.size() != labels.size()) throw ValidationError("poset.simple_of: one class per label expected");
    return WeightPoset::from_pairs(labels, rel, simple_of);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("poset: ") + e.what());
  }
}

Json to_json(const DimValue& v) {
  switch (v.kind) {
    case DimValue::Kind::Exact:
      return {{"kind", "Exact"}, {"n", v.n}};
    case DimValue::Kind::AtLeast:
      return {{"kind", "AtLeast"}, {"n", v.n}};
    case DimValue::Kind::Infinite:
      break;
  }
  return {{"kind", "Infinite"}};
}

Json to_json(const MuellerReport& r) {
  return {{"value", to_json(r.value)},
          {"method", "mueller"},
          {"B_dim", r.b_dim},
          {"hom_dim", r.hom_dim},
          {"tensor_dim", r.tensor_dim},
          {"chi_surjective", r.chi_surjective},
          {"chi_injective", r.chi_injective},
          {"tor_dims", r.tor_dims},
          {"resolution_terminated", r.resolution_terminated}};
}

Json to_json(const ChainReport& r, bool witness) {
  Json out{{"value", to_json(r.value)}, {"method", "chain"}, {"kernel_dims", r.kernel_dims}};
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step{{"source_dim", s.map.src->dim()},
              {"target_dim", s.map.tgt->dim()},
              {"surjective", s.surjective},
              {"injective", s.injective}};
    if (witness) step["matrix"] = matrix_to_json(s.map.m);
    steps.push_back(std::move(step));
  }
  out["witness"] = steps;
  return out;
}

Json to_json(const QHReport& r) {
  return {{"pass", r.pass},
          {"failed_axiom", r.failed_axiom},
          {"detail", r.detail},
          {"standard_dims", r.standard_dims},
          {"costandard_dims", r.costandard_dims},
          {"hom_delta_delta", r.hom_delta_delta},
          {"hom_delta_nabla", r.hom_delta_nabla},
          {"ext1_delta_nabla", r.ext1_delta_nabla}};
}

Json to_json(const CoverReport& r) {
  Json units = Json::array();
  for (const auto& u : r.eta_standard)
    units.push_back({{"injective", u.injective}, {"iso", u.iso}, {"source_dim", u.source_dim}, {"target_dim", u.target_dim}});
  Json out{{"projective", r.projective},
           {"fully_faithful", r.fully_faithful},
           {"double_centralizer", r.double_centralizer},
           {"is_cover", r.is_cover},
           {"B_dim", r.b_dim},
           {"FA_dim", r.fa_dim},
           {"eta_standard", units},
           {"eta_tilting_iso", r.eta_tilting_iso},
           {"ext_dims", r.ext},
           {"certification", r.certification},
           {"random_checked", r.random_checked},
           {"random_ok", r.random_ok},
           {"summary", r.str()}};
  if (r.is_cover) out["hn"] = to_json(r.hn);
  return out;
}

Json to_json(const RingelCoverVerdict& v) {
  return {{"n", to_json(v.n)}, {"cover", to_json(v.cover)}, {"applicable", v.applicable}, {"pass", v.pass},
          {"detail", v.detail}};
}

}  // namespace relqh
