#include "mz/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "mz/errors.hpp"
#include "mz/oracle.hpp"
#include "mz/reptheory.hpp"
#include "mz/topo.hpp"
#include "mz/verify.hpp"
#include "mz/zeta.hpp"

namespace mz {
namespace {

using Json = nlohmann::ordered_json;
constexpr const char* kSchema = "mednykh-zeta/1";

const char* kClassSpecHelp =
    "CLASSSPEC: c1:k (central x), c2:k (unipotent x), c3:i,j (diagonal x, y), c4:k (elliptic lambda).\n"
    "Field elements are discrete logs: x = g^k for the canonical primitive root g of F_q,\n"
    "lambda = G^k for the canonical primitive root G of F_{q^2} (see show-field).\n"
    "For pgl2 any GL(2) label is accepted and mapped to the class of its image.";

struct Options {
  std::string group = "gl2";
  long q = 0;
  std::string format = "ascii";
  int jobs = 1;
  std::string cache;
  bool deep = false;
};

// A rendered command result: JSON document plus a key/value preamble and table for ascii/csv.
struct Output {
  Json doc;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    };
    if (!o.header.empty()) line(o.header);
    for (const auto& r : o.rows) line(r);
    return;
  }
  for (const auto& [k, v] : o.meta) out << k << ": " << v << "\n";
  if (o.header.empty() && o.rows.empty()) return;
  if (!o.meta.empty()) out << "\n";
  std::vector<std::size_t> width(o.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(o.header);
  for (const auto& r : o.rows) widen(r);
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += "  ";
      s += row[i] + std::string(width[i] - row[i].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  if (!o.header.empty()) {
    line(o.header);
    std::size_t total = 0;
    for (std::size_t w : width) total += w + 2;
    out << std::string(total > 2 ? total - 2 : 0, '-') << "\n";
  }
  for (const auto& r : o.rows) line(r);
}

std::string float_text(Complex z) {
  char buf[96];
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  if (std::abs(im) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.12g", std::abs(re) < 1e-12 ? 0.0 : re);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", std::abs(re) < 1e-12 ? 0.0 : re, im);
  }
  return buf;
}

// Rational, or the power-basis coefficient list "zN[c0 c1 ...]".
std::string exact_text(const CycNumber& z) {
  if (auto r = z.as_rational()) return r->to_string();
  std::string s = "z" + std::to_string(z.conductor()) + "[";
  const auto& c = z.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i].to_string();
  return s + "]";
}

std::string ascii_text(const CycNumber& z) {
  if (auto r = z.as_rational()) return r->to_string();
  return float_text(z.to_complex());
}

Json cyc_json(const CycNumber& z) {
  Json j;
  j["conductor"] = z.conductor();
  Json coeffs = Json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(c.to_string());
  j["coefficients"] = coeffs;
  if (auto r = z.as_rational()) j["rational"] = r->to_string();
  j["float"] = float_text(z.to_complex());
  return j;
}

Json header_json(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

GroupKind parse_kind(const std::string& s) {
  if (s == "gl2") return GroupKind::GL2;
  if (s == "pgl2") return GroupKind::PGL2;
  throw UsageError("group must be gl2 or pgl2");
}

std::shared_ptr<const Group> build_group(const Options& o) {
  if (o.q < 2) throw UsageError("--q must be a prime power >= 2");
  return Group::build(parse_kind(o.group), o.q);
}

std::vector<int> parse_insertions(const Group& g, const std::vector<std::string>& specs) {
  std::vector<int> out;
  for (const auto& s : specs) out.push_back(parse_class_spec(g, s));
  return out;
}

std::vector<std::string> class_labels(const Group& g, const std::vector<int>& cls) {
  std::vector<std::string> out;
  for (int c : cls) out.push_back(g.class_info(c).label);
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// Integer, or a real/complex number such as 1.5, 0.5+2i, -3i.
std::variant<long, Complex> parse_s(const std::string& text) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc() && ptr == text.data() + text.size() && !text.empty()) return v;
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    double d = 0;
    try {
      d = std::stod(part, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse s = '" + text + "'");
    }
    if (used != part.size()) throw UsageError("cannot parse s = '" + text + "'");
    return d;
  };
  if (text.empty()) throw UsageError("empty s");
  if (text.back() != 'i') return Complex(number(text), 0.0);
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return number(part);
  };
  if (split == std::string::npos) return Complex(0.0, imag(body));
  return Complex(number(body.substr(0, split)), imag(body.substr(split)));
}

// ---------------------------------------------------------------------------
// theta cache

std::filesystem::path cache_path(const std::string& dir, const Group& g) {
  return std::filesystem::path(dir) /
         ("theta-" + std::string(g.is_pgl() ? "pgl2" : "gl2") + "-q" + std::to_string(g.q()) + ".json");
}

void load_cached_theta(Oracle& o, const std::string& dir) {
  if (dir.empty()) return;
  const auto path = cache_path(dir, o.group());
  std::ifstream in(path);
  if (!in) return;
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception&) {
    throw UsageError("cache file " + path.string() + " is not valid JSON");
  }
  if (j.value("schema", "") != kSchema || j.value("group", "") != o.group().name()) {
    throw UsageError("cache file " + path.string() + " belongs to another group or schema");
  }
  const auto& labels = j.at("classes");
  if (static_cast<int>(labels.size()) != o.group().num_classes()) throw UsageError("cache has the wrong class count");
  std::vector<Rational> torus, square;
  for (int c = 0; c < o.group().num_classes(); ++c) {
    if (labels[static_cast<std::size_t>(c)].get<std::string>() != o.group().class_info(c).label) {
      throw UsageError("cache class labels do not match");
    }
    torus.push_back(Rational::from_string(j.at("theta_torus")[static_cast<std::size_t>(c)].get<std::string>()));
    square.push_back(Rational::from_string(j.at("theta_square")[static_cast<std::size_t>(c)].get<std::string>()));
  }
  o.set_theta(torus, square);
}

void save_cached_theta(const Oracle& o, const std::string& dir) {
  if (dir.empty()) return;
  Json j;
  j["schema"] = kSchema;
  j["group"] = o.group().name();
  j["q"] = o.group().q();
  Json labels = Json::array(), torus = Json::array(), square = Json::array();
  for (int c = 0; c < o.group().num_classes(); ++c) {
    labels.push_back(o.group().class_info(c).label);
    torus.push_back(o.theta_torus()[c].as_rational()->to_string());
    square.push_back(o.theta_square()[c].as_rational()->to_string());
  }
  j["classes"] = labels;
  j["theta_torus"] = torus;
  j["theta_square"] = square;
  std::filesystem::create_directories(dir);
  std::ofstream(cache_path(dir, o.group())) << j.dump(2) << "\n";
}

// Loads the cache or enumerates and stores; enumeration caps are not errors here.
void prepare_oracle(Oracle& o, const std::string& dir) {
  if (dir.empty()) return;
  load_cached_theta(o, dir);
  if (o.has_theta_torus()) return;
  try {
    save_cached_theta(o, dir);
  } catch (const CapExceeded&) {
  }
}

// ---------------------------------------------------------------------------
// commands

int cmd_chartable(const Options& o, std::ostream& out) {
  const auto g = build_group(o);
  const auto t = CharacterTable::build(g);
  Output r;
  r.doc = header_json("chartable");
  r.doc["group"] = g->name();
  r.doc["q"] = g->q();
  r.doc["conductor"] = t->conductor();
  Json classes = Json::array();
  for (const auto& c : g->classes()) {
    Json cj;
    cj["label"] = c.label;
    cj["size"] = c.size;
    cj["centralizer_order"] = c.centralizer_order;
    classes.push_back(cj);
  }
  r.doc["classes"] = classes;
  Json irreps = Json::array(), values = Json::array();
  for (int i = 0; i < t->num_irreps(); ++i) {
    Json ij;
    ij["label"] = irrep_label(t->irrep(i));
    ij["dim"] = t->dim(i);
    ij["fs"] = t->fs(i);
    irreps.push_back(ij);
    Json row = Json::array();
    for (int c = 0; c < g->num_classes(); ++c) row.push_back(cyc_json(t->value(i, c)));
    values.push_back(row);
  }
  r.doc["irreps"] = irreps;
  r.doc["values"] = values;

  r.meta = {{"group", g->name()},
            {"order", std::to_string(g->order())},
            {"classes", std::to_string(g->num_classes())},
            {"values in", "Q(zeta_" + std::to_string(t->conductor()) + ")"}};
  r.header = {"irrep", "dim", "fs"};
  for (const auto& c : g->classes()) r.header.push_back(c.label);
  std::vector<std::string> sizes = {"|class|", "", ""};
  for (const auto& c : g->classes()) sizes.push_back(std::to_string(c.size));
  r.rows.push_back(sizes);
  for (int i = 0; i < t->num_irreps(); ++i) {
    std::vector<std::string> row = {irrep_label(t->irrep(i)), std::to_string(t->dim(i)), std::to_string(t->fs(i))};
    for (int c = 0; c < g->num_classes(); ++c) {
      row.push_back(o.format == "csv" ? exact_text(t->value(i, c)) : ascii_text(t->value(i, c)));
    }
    r.rows.push_back(row);
  }
  emit(r, o.format, out);
  return kExitOk;
}

struct ZetaArgs {
  std::string s;
  std::vector<std::string> insert;
  std::optional<std::string> fs;
  bool dbl = false;
  bool closed = false, generic = false, both = false;
};

int parse_indicator(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "0") return 0;
  if (s == "-1") return -1;
  throw UsageError("--fs takes +1, 0 or -1");
}

int cmd_zeta(const Options& o, const ZetaArgs& a, std::ostream& out) {
  const auto g = build_group(o);
  const auto t = CharacterTable::build(g);
  if (static_cast<int>(a.closed) + static_cast<int>(a.generic) + static_cast<int>(a.both) > 1) {
    throw UsageError("choose one of --closed-form, --generic, --both");
  }
  const bool want_closed = a.closed || a.both;
  const bool want_generic = a.generic || a.both || !a.closed;
  const auto cls = parse_insertions(*g, a.insert);
  if (a.dbl && (!cls.empty() || a.fs)) throw UsageError("--double does not combine with --insert or --fs");
  if (a.fs && !cls.empty()) throw UsageError("--fs does not combine with --insert");
  const std::optional<int> ind = a.fs ? std::optional<int>(parse_indicator(*a.fs)) : std::nullopt;
  const auto s = parse_s(a.s);

  using Value = std::variant<Rational, Complex>;
  auto eval = [&](bool closed) -> Value {
    return std::visit(
        [&](auto x) -> Value {
          if (a.dbl) return closed ? zeta_double_closed(g->q(), x) : zeta_double(*t, x);
          if (ind) return closed ? zeta_fs_closed(g->kind(), g->q(), *ind, x) : zeta_fs(*t, *ind, x);
          if (!cls.empty()) return closed ? zeta_insert_closed(*g, cls, x) : zeta_insert(*t, cls, x);
          return closed ? zeta_closed(g->kind(), g->q(), x) : zeta(*t, x);
        },
        s);
  };
  auto text = [](const Value& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
    return float_text(std::get<Complex>(v));
  };

  Output r;
  r.doc = header_json("zeta");
  r.doc["group"] = g->name();
  r.doc["q"] = g->q();
  r.doc["s"] = a.s;
  r.doc["insert"] = class_labels(*g, cls);
  if (ind) r.doc["fs"] = *ind;
  r.doc["double"] = a.dbl;
  r.meta = {{"group", g->name()}, {"s", a.s}};
  if (!cls.empty()) r.meta.push_back({"insert", join(class_labels(*g, cls), " ")});
  if (ind) r.meta.push_back({"fs", std::to_string(*ind)});
  if (a.dbl) r.meta.push_back({"function", "quantum double"});
  r.header = {"path", "value"};

  std::optional<Value> closed, generic;
  if (want_closed) closed = eval(true);
  if (want_generic) generic = eval(false);
  if (closed) {
    r.doc["closed_form"] = text(*closed);
    r.rows.push_back({"closed-form", text(*closed)});
  }
  if (generic) {
    r.doc["generic"] = text(*generic);
    r.rows.push_back({"generic", text(*generic)});
  }
  int code = kExitOk;
  if (closed && generic) {
    bool match;
    std::string diff;
    if (std::holds_alternative<Rational>(*closed)) {
      const Rational d = std::get<Rational>(*closed) - std::get<Rational>(*generic);
      match = d.is_zero();
      diff = d.to_string();
    } else {
      const Complex d = std::get<Complex>(*closed) - std::get<Complex>(*generic);
      match = std::abs(d) < 1e-9;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3e", std::abs(d));
      diff = buf;
    }
    r.doc["difference"] = diff;
    r.doc["match"] = match;
    r.rows.push_back({"difference", diff});
    r.rows.push_back({"verdict", match ? "MATCH" : "MISMATCH"});
    if (!match) code = kExitMismatch;
  }
  emit(r, o.format, out);
  return code;
}

struct CountArgs {
  long genus = 0;
  bool orientable = false, non_orientable = false;
  std::vector<std::string> insert;
  bool quotient = false;
  bool oracle = false;
};

int cmd_count(const Options& o, const CountArgs& a, std::ostream& out) {
  const auto g = build_group(o);
  const auto t = CharacterTable::build(g);
  if (a.orientable && a.non_orientable) throw UsageError("choose one of --orientable, --non-orientable");
  const SurfaceSpec spec{!a.non_orientable, a.genus, parse_insertions(*g, a.insert)};
  spec.validate(*g);
  const Rational value = a.quotient ? quotient_count(*t, spec).value : hom_count(*t, spec).value;

  Output r;
  r.doc = header_json("count");
  r.doc["group"] = g->name();
  r.doc["q"] = g->q();
  r.doc["genus"] = spec.genus;
  r.doc["orientable"] = spec.orientable;
  r.doc["euler_characteristic"] = spec.euler_characteristic();
  r.doc["insert"] = class_labels(*g, spec.boundaries);
  r.doc["kind"] = a.quotient ? "quotient" : "raw";
  r.doc["value"] = value.to_string();
  r.meta = {{"group", g->name()},
            {"surface", std::string(spec.orientable ? "orientable" : "non-orientable") + ", genus " +
                            std::to_string(spec.genus)}};
  if (!spec.boundaries.empty()) r.meta.push_back({"insert", join(class_labels(*g, spec.boundaries), " ")});
  r.header = {"quantity", "value"};
  r.rows.push_back({a.quotient ? "|Hom/AdG|" : "|Hom|", value.to_string()});
  if (!a.quotient) {
    const Rational per = value / Rational(g->order());
    r.doc["per_group_order"] = per.to_string();
    r.rows.push_back({"|Hom|/|G|", per.to_string()});
  }
  int code = kExitOk;
  if (a.oracle) {
    Oracle oracle(g, {caps_for(o.deep), o.jobs});
    prepare_oracle(oracle, o.cache);
    const Rational brute = a.quotient ? oracle.quotient_count_burnside(spec) : oracle.hom_count(spec);
    const bool match = brute == value;
    Json oj;
    oj["value"] = brute.to_string();
    oj["method"] = a.quotient ? "Burnside over enumerated centralizers" : "convolution of enumerated theta functions";
    oj["verdict"] = match ? "MATCH" : "MISMATCH";
    r.doc["oracle"] = oj;
    r.rows.push_back({"oracle", brute.to_string()});
    r.rows.push_back({"verdict", match ? "MATCH" : "MISMATCH"});
    if (!match) code = kExitMismatch;
  }
  emit(r, o.format, out);
  return code;
}

struct FusionArgs {
  std::vector<std::string> triple;
  bool all = false;
};

int cmd_fusion(const Options& o, const FusionArgs& a, std::ostream& out) {
  const auto g = build_group(o);
  const auto t = CharacterTable::build(g);
  const int n = t->num_irreps();
  Output r;
  r.doc = header_json("fusion");
  r.doc["group"] = g->name();
  r.doc["q"] = g->q();
  r.meta = {{"group", g->name()}};
  int code = kExitOk;
  if (!a.triple.empty()) {
    if (a.triple.size() != 3) throw UsageError("--triple takes three irrep labels");
    int idx[3];
    for (int k = 0; k < 3; ++k) idx[k] = t->irrep_index(parse_irrep_label(a.triple[static_cast<std::size_t>(k)]));
    const long mult = t->fusion_coeff(idx[0], idx[1], idx[2]);
    const Rational bracket = t->triple_bracket(idx[0], idx[1], idx[2]);
    Json trip = Json::array();
    for (int k : idx) trip.push_back(irrep_label(t->irrep(k)));
    r.doc["triple"] = trip;
    r.doc["multiplicity"] = mult;
    r.doc["bracket"] = bracket.to_string();
    r.header = {"quantity", "value"};
    r.rows.push_back({"multiplicity of " + trip[2].get<std::string>() + " in " + trip[0].get<std::string>() + " x " +
                          trip[1].get<std::string>(),
                      std::to_string(mult)});
    r.rows.push_back({"<pi pi' pi''>", bracket.to_string()});
    if (!g->is_pgl()) {
      const Rational closed = closed_form_bracket(t->chars(), t->irrep(idx[0]), t->irrep(idx[1]), t->irrep(idx[2]));
      const bool match = closed == bracket;
      r.doc["closed_form"] = closed.to_string();
      r.doc["verdict"] = match ? "MATCH" : "MISMATCH";
      r.rows.push_back({"closed form", closed.to_string()});
      r.rows.push_back({"verdict", match ? "MATCH" : "MISMATCH"});
      if (!match) code = kExitMismatch;
    }
    if (!a.all) {
      emit(r, o.format, out);
      return code;
    }
  }
  // Full tensor N[i][j][k] = multiplicity of k in i (x) j.
  Json irreps = Json::array();
  for (int i = 0; i < n; ++i) irreps.push_back(irrep_label(t->irrep(i)));
  r.doc["irreps"] = irreps;
  Json tensor = Json::array();
  bool all_match = true;
  r.header = {"product", "decomposition"};
  r.rows.clear();
  for (int i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < n; ++j) {
      Json line = Json::array();
      std::string decomp;
      for (int k = 0; k < n; ++k) {
        const long m = t->fusion_coeff(i, j, k);
        line.push_back(m);
        if (m > 0) decomp += (decomp.empty() ? "" : " + ") + (m > 1 ? std::to_string(m) + " " : "") + irreps[k].get<std::string>();
        if (!g->is_pgl() &&
            t->triple_bracket(i, j, k) != closed_form_bracket(t->chars(), t->irrep(i), t->irrep(j), t->irrep(k))) {
          all_match = false;
        }
      }
      plane.push_back(line);
      r.rows.push_back({irreps[i].get<std::string>() + " x " + irreps[j].get<std::string>(), decomp});
    }
    tensor.push_back(plane);
  }
  r.doc["tensor"] = tensor;
  r.doc["closed_form_verdict"] = g->is_pgl() ? "n/a" : (all_match ? "MATCH" : "MISMATCH");
  r.meta.push_back({"closed-form comparison", g->is_pgl() ? "n/a" : (all_match ? "MATCH" : "MISMATCH")});
  if (!all_match) code = kExitMismatch;
  emit(r, o.format, out);
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.q < 2) throw UsageError("--q must be a prime power >= 2");
  VerifyOptions vo;
  vo.q = static_cast<int>(o.q);
  vo.deep = o.deep;
  vo.jobs = o.jobs;
  const std::string cache = o.cache;
  if (!cache.empty()) vo.prepare_oracle = [cache](Oracle& oracle) { prepare_oracle(oracle, cache); };
  const auto results = verify_suite(vo);
  Output r;
  r.doc = header_json("verify");
  r.doc["q"] = o.q;
  r.doc["deep"] = o.deep;
  Json checks = Json::array();
  long counts[4] = {0, 0, 0, 0};
  r.header = {"status", "group", "check", "detail"};
  for (const auto& c : results) {
    Json cj;
    cj["name"] = c.name;
    cj["formula"] = c.formula;
    cj["group"] = c.group;
    cj["status"] = status_name(c.status);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
    ++counts[static_cast<int>(c.status)];
    r.rows.push_back({status_name(c.status), c.group, c.name, c.detail});
  }
  r.doc["checks"] = checks;
  Json summary;
  summary["pass"] = counts[static_cast<int>(CheckStatus::Pass)];
  summary["fail"] = counts[static_cast<int>(CheckStatus::Fail)];
  summary["skipped"] = counts[static_cast<int>(CheckStatus::Skipped)];
  summary["documented_discrepancy"] = counts[static_cast<int>(CheckStatus::Discrepancy)];
  r.doc["summary"] = summary;
  const bool ok = counts[static_cast<int>(CheckStatus::Fail)] == 0;
  r.doc["ok"] = ok;
  r.meta = {{"q", std::to_string(o.q)},
            {"result", ok ? "PASS" : "FAIL"},
            {"pass", std::to_string(counts[0])},
            {"fail", std::to_string(counts[1])},
            {"skipped", std::to_string(counts[2])},
            {"documented discrepancies", std::to_string(counts[3])}};
  emit(r, o.format, out);
  return ok ? kExitOk : kExitMismatch;
}

std::string field_text(const FiniteField& F, FieldElement x) {
  if (F.e() == 1) return std::to_string(x.v);
  const auto c = F.coeffs(x);
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s + "]";
}

int cmd_show_field(const Options& o, std::ostream& out) {
  if (o.q < 2) throw UsageError("--q must be a prime power >= 2");
  const auto F = FiniteField::build_q(o.q);
  const auto E = QuadraticExtension::build(F);
  Output r;
  r.doc = header_json("show-field");
  r.doc["q"] = F->q();
  r.doc["p"] = F->p();
  r.doc["e"] = F->e();
  r.doc["modulus"] = F->modulus();
  const std::string ext_rule = E->odd() ? "t^2 = " + field_text(*F, E->nonresidue())
                                        : "t^2 = t + " + field_text(*F, E->nonresidue());
  r.doc["extension"] = ext_rule;
  Json base = Json::array(), ext = Json::array();
  for (long k = 0; k < F->q() - 1; ++k) base.push_back(field_text(*F, F->exp(k)));
  for (long k = 0; k < E->order() - 1; ++k) {
    const ExtElement x = E->exp(k);
    Json pair = Json::array({field_text(*F, E->a(x)), field_text(*F, E->b(x))});
    ext.push_back(pair);
  }
  r.doc["base_powers"] = base;
  r.doc["extension_powers"] = ext;
  std::string modulus;
  for (std::size_t i = 0; i < F->modulus().size(); ++i) modulus += (i ? " " : "") + std::to_string(F->modulus()[i]);
  r.meta = {{"field", "F_" + std::to_string(F->q())},
            {"modulus (low degree first)", modulus},
            {"extension", "F_" + std::to_string(F->q()) + "^2 = F[t], " + ext_rule},
            {"elements", "g^k in F; G^k = a + b t in the extension"}};
  r.header = {"k", "g^k", "G^k (a, b)"};
  for (long k = 0; k < E->order() - 1; ++k) {
    const ExtElement x = E->exp(k);
    r.rows.push_back({std::to_string(k), k < F->q() - 1 ? field_text(*F, F->exp(k)) : "",
                      field_text(*F, E->a(x)) + ", " + field_text(*F, E->b(x))});
  }
  emit(r, o.format, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation theory, zeta functions and Mednykh counts for GL(2,F_q) and PGL(2,F_q)", "mednykh-zeta"};
  app.footer(kClassSpecHelp);
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool with_group) {
    if (with_group) sub->add_option("--group", o.group, "gl2 or pgl2")->check(CLI::IsMember({"gl2", "pgl2"}));
    sub->add_option("--q", o.q, "field order (prime power)")->required();
    sub->add_option("--format", o.format, "ascii, json or csv")->check(CLI::IsMember({"ascii", "json", "csv"}));
    sub->add_option("--jobs", o.jobs, "oracle worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", o.cache, "directory for memoized theta functions");
    sub->add_flag("--deep", o.deep, "raise enumeration caps");
  };

  auto* chartable = app.add_subcommand("chartable", "character table with class sizes, dims and FS indicators");
  common(chartable, true);

  ZetaArgs za;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta function values");
  common(zeta_cmd, true);
  zeta_cmd->add_option("--s", za.s, "argument: integer (exact) or real/complex such as 0.5+2i")->required();
  zeta_cmd->add_option("--insert", za.insert, "boundary insertion CLASSSPEC (repeatable)")->take_all();
  zeta_cmd->add_option("--fs", za.fs, "restrict to Frobenius-Schur indicator +1, 0 or -1");
  zeta_cmd->add_flag("--double", za.dbl, "zeta function of the quantum double D(G) (gl2)");
  zeta_cmd->add_flag("--closed-form", za.closed, "closed form only");
  zeta_cmd->add_flag("--generic", za.generic, "sum over the character table only (default)");
  zeta_cmd->add_flag("--both", za.both, "both paths and their difference");

  CountArgs ca;
  auto* count = app.add_subcommand("count", "number of homomorphisms from a surface group");
  common(count, true);
  count->add_option("--genus", ca.genus, "genus")->required();
  count->add_flag("--orientable", ca.orientable, "orientable surface (default)");
  count->add_flag("--non-orientable", ca.non_orientable, "connected sum of projective planes");
  count->add_option("--insert", ca.insert, "boundary holonomy CLASSSPEC (repeatable)")->take_all();
  count->add_flag("--quotient", ca.quotient, "count conjugation orbits (gl2)");
  count->add_flag("--oracle", ca.oracle, "also count by enumeration and compare");

  FusionArgs fa;
  auto* fusion = app.add_subcommand("fusion", "tensor product multiplicities");
  common(fusion, true);
  fusion->add_option("--triple", fa.triple, "three irrep labels, e.g. St(0) I(0,1) C(1)")->expected(3);
  fusion->add_flag("--all", fa.all, "full fusion tensor with closed-form comparison (default)");

  auto* verify = app.add_subcommand("verify", "run the invariant suite at one q");
  common(verify, false);

  auto* show_field = app.add_subcommand("show-field", "discrete-log tables of F_q and F_{q^2}");
  common(show_field, false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (chartable->parsed()) return cmd_chartable(o, out);
    if (zeta_cmd->parsed()) return cmd_zeta(o, za, out);
    if (count->parsed()) return cmd_count(o, ca, out);
    if (fusion->parsed()) return cmd_fusion(o, fa, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (show_field->parsed()) return cmd_show_field(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const ConsistencyError& e) {
    err << "internal consistency check failed: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace mz
