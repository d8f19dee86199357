#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "relqh/covers.hpp"
#include "relqh/gallery.hpp"
#include "relqh/io.hpp"

using namespace relqh;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kInput = 2, kCheck = 3, kCapLimited = 4 };

struct Options {
  std::string gallery;
  std::size_t m = 2, n = 2, d = 2;
  std::uint32_t p = 3;
  long long u = 1;
  std::string algebra_file, poset_file, module_arg, wrt_arg;
  std::size_t cap = 20;
  std::string method = "mueller";
  std::string out;
  std::uint64_t seed = 0x5eed;
  bool strict = false, json = false, witness = false, ringel = false, inject_mismatch = false;
};

struct Mismatch : Error {
  using Error::Error;
};

std::string kind_name(const std::string& kind, const std::string& label) {
  return label.size() && label.front() == '(' ? kind + label : kind + "(" + label + ")";
}

// The algebra under study with its named modules, built from a gallery entry or from files.
struct Context {
  const Options& opt;
  AlgebraPtr algebra;
  std::optional<WeightPoset> poset;
  std::optional<Schur> schur;
  std::optional<Hecke> hecke;
  std::string description;
  Json inputs = Json::array();
  mutable std::optional<QHStructure> qh_cache;
  mutable std::optional<Tilting> tilting_cache;

  explicit Context(const Options& o) : opt(o) {
    if (!o.gallery.empty()) {
      if (!o.algebra_file.empty()) throw UsageError("--gallery and --algebra are exclusive");
      Field f = o.p == 0 ? Field::rationals() : Field::prime(o.p);
      if (o.p && !is_prime_number(o.p)) throw UsageError("--p must be prime or 0 for the rationals");
      std::ostringstream s;
      if (o.gallery == "am") {
        if (o.m < 1) throw UsageError("--m must be positive");
        algebra = build_Am(o.m, f);
        poset = am_poset(algebra);
        s << "am m=" << o.m;
      } else if (o.gallery == "hecke") {
        hecke = build_hecke(o.d, Scalar(f, o.u));
        algebra = hecke->algebra;
        s << "hecke d=" << o.d << " u=" << o.u;
      } else if (o.gallery == "schur") {
        schur = build_schur(o.n, o.d, Scalar(f, o.u));
        algebra = schur->algebra;
        poset = schur_poset(*schur);
        s << "schur n=" << o.n << " d=" << o.d << " u=" << o.u;
      } else {
        throw UsageError("unknown gallery \"" + o.gallery + "\" (am, hecke, schur)");
      }
      s << " field=" << f.name();
      description = s.str();
      inputs.push_back({{"gallery", description}, {"sha256", sha256_hex(description)}});
    } else if (!o.algebra_file.empty()) {
      algebra = algebra_from_json(read_json_file(o.algebra_file), o.p == 0 ? Field::rationals() : Field::prime(o.p));
      description = o.algebra_file;
      inputs.push_back({{"file", o.algebra_file}, {"sha256", file_sha256(o.algebra_file)}});
    }
    if (!o.poset_file.empty()) {
      poset = poset_from_json(read_json_file(o.poset_file));
      inputs.push_back({{"file", o.poset_file}, {"sha256", file_sha256(o.poset_file)}});
    }
  }

  const QHStructure& qh() const {
    if (!poset) throw UsageError("this command needs a weight poset (--poset or a gallery with one)");
    if (!qh_cache) {
      poset->validate(algebra->idempotents().num_classes());
      qh_cache = qh_structure(algebra, *poset);
    }
    return *qh_cache;
  }
  const Tilting& tilting() const {
    if (!tilting_cache) tilting_cache = characteristic_tilting(qh());
    return *tilting_cache;
  }

  // Module names understood by --module and --wrt besides JSON files.
  std::vector<std::pair<std::string, ModulePtr>> named() const {
    std::vector<std::pair<std::string, ModulePtr>> out;
    out.emplace_back("regular", regular_module(algebra));
    out.emplace_back("dual-regular", dual(regular_module(opposite(algebra))));
    auto pi = find_projective_injectives(algebra).module;
    if (pi->dim()) out.emplace_back("pi", pi);
    if (schur) out.emplace_back("tensor-space", schur->tensor);
    if (poset) {
      const auto& q = qh();
      const auto& t = tilting();
      for (std::size_t l = 0; l < q.size(); ++l) {
        const auto& lab = q.poset.labels[l];
        out.emplace_back(kind_name("P", lab), q.proj[l]);
        out.emplace_back(kind_name("I", lab), q.inj[l]);
        out.emplace_back(kind_name("S", lab), simple(algebra, q.poset.simple_of[l]));
        out.emplace_back(kind_name("Delta", lab), q.delta(l));
        out.emplace_back(kind_name("Nabla", lab), q.nabla(l));
        out.emplace_back(kind_name("T", lab), t.summands[l]);
      }
      out.emplace_back("T", t.module);
    } else {
      for (std::size_t c = 0; c < algebra->idempotents().num_classes(); ++c) {
        out.emplace_back("P" + std::to_string(c), projective(algebra, c));
        out.emplace_back("S" + std::to_string(c), simple(algebra, c));
      }
    }
    return out;
  }

  ModulePtr module(const std::string& arg, const char* flag) {
    if (arg.empty()) throw UsageError(std::string(flag) + " is required");
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
      fs::path path(arg);
      auto m = module_from_json(read_json_file(path), path.parent_path(), algebra);
      if (!algebra) algebra = m->algebra();
      if (m->algebra() != algebra) throw UsageError(arg + ": module is over a different algebra");
      inputs.push_back({{"file", arg}, {"sha256", file_sha256(path)}});
      return m;
    }
    if (!algebra) throw UsageError(std::string(flag) + " " + arg + ": no algebra given (--gallery or --algebra)");
    for (auto& [name, m] : named())
      if (name == arg) return m;
    std::string known;
    for (auto& [name, m] : named()) known += " " + name;
    throw UsageError(std::string(flag) + ": unknown module \"" + arg + "\"; known:" + known);
  }

  void need_algebra() const {
    if (!algebra) throw UsageError("no algebra given (--gallery or --algebra)");
  }
};

Json base_report(const std::string& command, const Context& c, const Options& o) {
  return {{"tool", "relqh"},
          {"version", kVersion},
          {"command", command},
          {"inputs", c.inputs},
          {"seed", o.seed},
          {"cap", o.cap}};
}

int finish(const Json& report, const std::string& text, const Options& o, bool cap_limited) {
  if (o.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
  if (!o.out.empty()) write_json_file(o.out, report);
  return o.strict && cap_limited ? kCapLimited : kOk;
}

bool capped(const DimValue& v) { return v.kind == DimValue::Kind::AtLeast; }

void check_method(const std::string& m) {
  if (m != "mueller" && m != "chain" && m != "both") throw UsageError("--method must be mueller, chain or both");
}

int run_relative(const std::string& command, Options& o, bool co) {
  check_method(o.method);
  if (o.cap < 2) throw UsageError("--cap must be at least 2");
  Context c(o);
  ModulePtr q = c.module(o.wrt_arg, "--wrt");
  ModulePtr m = c.module(o.module_arg, "--module");
  require_same_algebra(*q, *m, command.c_str());
  Json rep = base_report(command, c, o);
  rep["method"] = o.method;
  std::ostringstream text;
  std::optional<DimValue> mv, cv;
  if (o.method != "chain") {
    auto r = co ? relative_codomdim(q, m, o.cap) : relative_domdim(q, m, o.cap);
    mv = r.value;
    rep["mueller"] = to_json(r);
  }
  if (o.method != "mueller") {
    auto r = co ? codomdim_chain(q, m, o.cap) : domdim_chain(q, m, o.cap);
    cv = o.inject_mismatch ? DimValue::exact(r.value.lower() == 0 ? 1 : 0) : r.value;
    Json j = to_json(r, o.witness);
    j["value"] = to_json(*cv);
    rep["chain"] = j;
  }
  DimValue v = mv ? *mv : *cv;
  rep["value"] = to_json(v);
  text << v.str() << "\n";
  if (mv && cv) {
    rep["agree"] = *mv == *cv;
    if (*mv != *cv) {
      std::cout << (o.json ? rep.dump(2) + "\n" : "");
      if (!o.out.empty()) write_json_file(o.out, rep);
      throw Mismatch("methods disagree: mueller " + mv->str() + ", chain " + cv->str());
    }
  }
  if (capped(v)) text << "cap-limited at " << o.cap << "\n";
  return finish(rep, text.str(), o, capped(v));
}

int run_domdim(Options& o) {
  check_method(o.method);
  Context c(o);
  c.need_algebra();
  Json rep = base_report("domdim", c, o);
  rep["method"] = o.method;
  auto pi = find_projective_injectives(c.algebra);
  rep["projective_injective_classes"] = pi.classes;
  std::optional<DimValue> mv, cv;
  if (o.method != "chain") {
    auto r = classical_domdim(c.algebra, o.cap);
    mv = r.value;
    rep["mueller"] = to_json(r);
  }
  if (o.method != "mueller") {
    if (pi.module->dim() == 0) {
      cv = DimValue::exact(0);
      rep["chain"] = {{"value", to_json(*cv)}, {"method", "chain"}};
    } else {
      auto r = domdim_chain(pi.module, regular_module(c.algebra), o.cap);
      cv = r.value;
      rep["chain"] = to_json(r, o.witness);
    }
    if (o.inject_mismatch) cv = DimValue::exact(cv->lower() == 0 ? 1 : 0);
  }
  DimValue v = mv ? *mv : *cv;
  rep["value"] = to_json(v);
  if (mv && cv && *mv != *cv) throw Mismatch("methods disagree: mueller " + mv->str() + ", chain " + cv->str());
  return finish(rep, v.str() + "\n", o, capped(v));
}

int run_qh_verify(Options& o) {
  Context c(o);
  c.need_algebra();
  auto r = verify_split_qh(c.qh());
  Json rep = base_report("qh-verify", c, o);
  rep["poset"] = poset_to_json(*c.poset);
  rep["report"] = to_json(r);
  std::ostringstream text;
  text << (r.pass ? "pass" : "fail");
  if (!r.pass) text << " (axiom " << r.failed_axiom << ": " << r.detail << ")";
  text << "\nstandard dims:";
  for (auto x : r.standard_dims) text << " " << x;
  text << "\ncostandard dims:";
  for (auto x : r.costandard_dims) text << " " << x;
  text << "\n";
  return finish(rep, text.str(), o, false);
}

int run_tilting(Options& o) {
  Context c(o);
  c.need_algebra();
  const auto& t = c.tilting();
  const auto& qh = c.qh();
  Json rep = base_report("tilting", c, o);
  Json summands = Json::array();
  std::ostringstream text;
  for (std::size_t l = 0; l < t.summands.size(); ++l) {
    summands.push_back({{"label", qh.poset.labels[l]},
                        {"dim", t.summands[l]->dim()},
                        {"delta_multiplicities", t.delta_mult[l]},
                        {"nabla_multiplicities", t.nabla_mult[l]},
                        {"extension_steps", t.extension_steps[l]}});
    text << kind_name("T", qh.poset.labels[l]) << ": dim " << t.summands[l]->dim() << "\n";
  }
  rep["summands"] = summands;
  rep["dim"] = t.module->dim();
  if (o.witness) rep["module"] = module_to_json(*t.module, algebra_to_json(*c.algebra));
  text << "T: dim " << t.module->dim() << "\n";
  return finish(rep, text.str(), o, false);
}

int run_ringel_dual(Options& o) {
  Context c(o);
  c.need_algebra();
  auto rd = ringel_dual(c.qh(), c.tilting());
  auto inv = morita_invariants(rd.qh);
  Json rep = base_report("ringel-dual", c, o);
  rep["dim"] = rd.algebra->dim();
  rep["poset"] = poset_to_json(rd.qh.poset);
  rep["report"] = to_json(rd.report);
  rep["morita"] = {{"basic_dim", inv.basic_dim}, {"cartan", inv.cartan}, {"delta_dims", inv.delta_dims}};
  if (o.witness) rep["algebra"] = algebra_to_json(*rd.algebra);
  std::ostringstream text;
  text << "Ringel dual: dim " << rd.algebra->dim() << ", split quasi-hereditary "
       << (rd.report.pass ? "verified" : "FAILED (" + rd.report.detail + ")") << "\n";
  if (!rd.report.pass) throw InternalError("Ringel dual failed verification: " + rd.report.detail);
  return finish(rep, text.str(), o, false);
}

int run_cover(Options& o) {
  Context c(o);
  c.need_algebra();
  CoverOptions copt;
  copt.cap = o.cap;
  copt.seed = o.seed;
  ModulePtr q = c.module(o.wrt_arg, "--wrt");
  Json rep = base_report("cover", c, o);
  std::ostringstream text;
  if (o.ringel) {
    auto v = verify_ringel_cover_theorem(c.qh(), q, copt);
    rep["verdict"] = to_json(v);
    text << "n = " << v.n.str() << ", hn = " << v.cover.str() << ", theorem " << (v.pass ? "verified" : "VIOLATED")
         << "\n"
         << v.cover.certification << "\n";
    if (!v.pass) {
      if (o.json) std::cout << rep.dump(2) << "\n";
      throw Mismatch("cover theorem violated: " + v.detail);
    }
    return finish(rep, text.str(), o, capped(v.n) || capped(v.cover.hn));
  }
  auto r = hn_dimension(c.qh(), q, copt);
  rep["cover"] = to_json(r);
  text << "cover: " << (r.is_cover ? "yes" : "no") << ", double centralizer: " << (r.double_centralizer ? "yes" : "no")
       << "\nhn = " << r.str() << "\n"
       << r.certification << "\n";
  if (r.is_cover && !r.random_ok) throw Mismatch("random Delta-filtered cross-check disagrees");
  return finish(rep, text.str(), o, r.is_cover && capped(r.hn));
}

std::string file_name(const std::string& name) {
  std::string s;
  for (char ch : name) {
    if (ch == '(' || ch == ')') {
      if (!s.empty() && s.back() != '_') s += '_';
    } else if (ch == ',') {
      s += '-';
    } else {
      s += ch;
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s + ".json";
}

int run_gallery(Options& o) {
  if (o.gallery.empty()) throw UsageError("gallery needs --gallery");
  if (o.out.empty()) throw UsageError("gallery needs --out DIR");
  Context c(o);
  fs::path dir(o.out);
  fs::create_directories(dir);
  write_json_file(dir / "algebra.json", algebra_to_json(*c.algebra));
  Json manifest = base_report("gallery", c, o);
  manifest["algebra"] = "algebra.json";
  if (c.poset) {
    write_json_file(dir / "poset.json", poset_to_json(*c.poset));
    manifest["poset"] = "poset.json";
  }
  Json mods = Json::object();
  for (auto& [name, m] : c.named()) {
    std::string fn = file_name(name);
    write_json_file(dir / fn, module_to_json(*m, "algebra.json"));
    mods[name] = {{"file", fn}, {"dim", m->dim()}};
  }
  manifest["modules"] = mods;
  Json elems = Json::object();
  if (c.schur) {
    for (std::size_t i = 0; i < c.schur->weights.size(); ++i) {
      std::string label = "(";
      for (std::size_t k = 0; k < c.schur->weights[i].size(); ++k)
        label += (k ? "," : "") + std::to_string(c.schur->weights[i][k]);
      elems["xi" + label + ")"] = vector_to_json(c.schur->weight_idempotents[i]);
    }
    if (c.schur->space.n == c.schur->space.d)
      for (std::size_t k = 1; k < c.schur->space.d; ++k)
        elems["f" + std::to_string(k)] = vector_to_json(truncation_idempotent(*c.schur, k));
  }
  if (c.poset) {
    const auto& hint = c.algebra->idempotent_hint();
    for (std::size_t i = 0; i < hint.size(); ++i) elems["e" + std::to_string(i + 1)] = vector_to_json(hint[i]);
  }
  manifest["elements"] = elems;
  write_json_file(dir / "manifest.json", manifest);
  std::ostringstream text;
  text << "wrote " << mods.size() + 2 + (c.poset ? 1 : 0) << " files to " << o.out << "\n";
  Options quiet = o;
  quiet.out.clear();
  return finish(manifest, text.str(), quiet, false);
}

void add_common(CLI::App* s, Options& o, bool modules, bool wrt) {
  s->add_option("--gallery", o.gallery, "gallery algebra: am, hecke or schur");
  s->add_option("--m", o.m, "A_m size");
  s->add_option("--n", o.n, "Schur n");
  s->add_option("--d", o.d, "Schur or Hecke degree");
  s->add_option("--p", o.p, "field characteristic, 0 for the rationals");
  s->add_option("--u", o.u, "Hecke parameter");
  s->add_option("--algebra", o.algebra_file, "algebra or quiver JSON");
  s->add_option("--poset", o.poset_file, "weight poset JSON");
  s->add_option("--cap", o.cap, "cap for resolutions and ladders");
  s->add_option("--out", o.out, "write the JSON report (gallery: output directory)");
  s->add_option("--seed", o.seed, "seed for randomized checks");
  s->add_flag("--strict", o.strict, "exit 4 when a value is cap-limited");
  s->add_flag("--json", o.json, "print the JSON report");
  s->add_flag("--witness", o.witness, "include witness matrices");
  if (modules) s->add_option("--module", o.module_arg, "module JSON or named module");
  if (wrt) s->add_option("--wrt", o.wrt_arg, "module JSON or named module");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative dominant dimension and quasi-hereditary covers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  std::map<std::string, std::function<int()>> run;

  auto* dd = app.add_subcommand("domdim", "classical dominant dimension of an algebra");
  add_common(dd, o, false, false);
  dd->add_option("--method", o.method, "mueller, chain or both");
  dd->add_flag("--inject-mismatch", o.inject_mismatch, "perturb the chain value (tests the exit path)")->group("");
  run["domdim"] = [&] { return run_domdim(o); };

  for (auto [name, co] : {std::pair<const char*, bool>{"reldomdim", false}, {"relcodomdim", true}}) {
    auto* s = app.add_subcommand(name, co ? "Q-codominant dimension of a module" : "Q-dominant dimension of a module");
    add_common(s, o, true, true);
    s->add_option("--method", o.method, "mueller, chain or both");
    s->add_flag("--inject-mismatch", o.inject_mismatch, "perturb the chain value (tests the exit path)")->group("");
    std::string n = name;
    run[n] = [&o, n, co = co] { return run_relative(n, o, co); };
  }

  auto* qv = app.add_subcommand("qh-verify", "verify a split quasi-hereditary structure");
  add_common(qv, o, false, false);
  run["qh-verify"] = [&] { return run_qh_verify(o); };

  auto* tl = app.add_subcommand("tilting", "characteristic tilting module");
  add_common(tl, o, false, false);
  run["tilting"] = [&] { return run_tilting(o); };

  auto* rd = app.add_subcommand("ringel-dual", "Ringel dual and its verification");
  add_common(rd, o, false, false);
  run["ringel-dual"] = [&] { return run_ringel_dual(o); };

  auto* cv = app.add_subcommand("cover", "cover report of a projective, or the Ringel dual cover verdict");
  add_common(cv, o, false, true);
  cv->add_flag("--ringel", o.ringel, "treat --wrt as a partial tilting module and check the Ringel dual cover");
  run["cover"] = [&] { return run_cover(o); };

  auto* gl = app.add_subcommand("gallery", "write a gallery algebra, its modules and a manifest");
  add_common(gl, o, false, false);
  run["gallery"] = [&] { return run_gallery(o); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    for (auto* s : app.get_subcommands()) return run.at(s->get_name())();
  } catch (const Mismatch& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheck;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheck;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheck;
  }
  return kOk;
}
