#include "ncinv/app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ncinv/action.hpp"
#include "ncinv/bounds.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/group.hpp"
#include "ncinv/invariants.hpp"
#include "ncinv/nagata_higman.hpp"
#include "ncinv/ncparse.hpp"
#include "ncinv/structure_algebra.hpp"
#include "ncinv/tideal.hpp"

namespace ncinv::app {

namespace {

constexpr std::size_t kMaxVariable = 64;

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  throw UsageError("config field '" + field + "': " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string join(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const Json* find(const Json& object, const std::string& key) {
  if (!object.is_object()) return nullptr;
  auto it = object.find(key);
  return it == object.end() || it->is_null() ? nullptr : &*it;
}

const Json& require(const Json& object, const std::string& key, const std::string& path) {
  const Json* v = find(object, key);
  if (!v) bad_field(join(path, key), "missing");
  return *v;
}

std::uint64_t as_unsigned(const Json& v, const std::string& field) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    bad_field(field, "expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::int64_t as_integer(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) bad_field(field, "expected an integer");
  return v.get<std::int64_t>();
}

bool as_bool(const Json& v, const std::string& field) {
  if (!v.is_boolean()) bad_field(field, "expected true or false");
  return v.get<bool>();
}

std::string as_string(const Json& v, const std::string& field) {
  if (!v.is_string()) bad_field(field, "expected a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& v, const std::string& field) {
  if (!v.is_array()) bad_field(field, "expected an array");
  return v;
}

Rational as_rational(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      bad_field(field, e.what());
    }
  }
  bad_field(field, "expected a rational \"p/q\" string or an integer");
}

std::string json_of(const Rational& q) { return to_string(q); }

NCPoly parse_polynomial(const Json& v, const std::string& field) {
  std::string text = as_string(v, field);
  if (text.size() >= 2 && text[0] == 's' &&
      std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    unsigned k = static_cast<unsigned>(std::stoul(text.substr(1)));
    if (k == 0 || k > 9) bad_field(field, "standard polynomial alias needs 1 <= k <= 9");
    return standard_polynomial(k);
  }
  try {
    return parse_ncpoly(text, kMaxVariable);
  } catch (const Error& e) {
    bad_field(field, e.what());
  }
}

// Shared settings resolved from the config and the command line.
struct Context {
  const Json& config;
  const Json& params;
  std::string task;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> degree_cap;
  ComputeOptions options;
  std::vector<std::string>* warnings;
  Json inputs = Json::object();

  void warn(const std::string& message) const {
    if (warnings) warnings->push_back(message);
  }

  std::size_t cap(const std::string& task_name) const {
    if (!degree_cap) bad_field("degree_cap", "required for task '" + task_name + "'");
    return *degree_cap;
  }

  std::uint64_t param_unsigned(const std::string& key) const {
    return as_unsigned(require(params, key, "params"), join("params", key));
  }
  std::optional<std::uint64_t> optional_param(const std::string& key) const {
    const Json* v = find(params, key);
    if (!v) return std::nullopt;
    return as_unsigned(*v, join("params", key));
  }
};

Limits parse_limits(const Json& config) {
  Limits limits;
  const Json* l = find(config, "limits");
  if (!l) return limits;
  if (!l->is_object()) bad_field("limits", "expected an object");
  for (const auto& [key, value] : l->items()) {
    const std::string field = join("limits", key);
    std::uint64_t x = as_unsigned(value, field);
    if (key == "max_component_words") {
      limits.max_component_words = x;
    } else if (key == "max_spanning_elements") {
      limits.max_spanning_elements = x;
    } else if (key == "nh_max_m") {
      limits.nh_max_m = static_cast<unsigned>(x);
    } else if (key == "max_p") {
      limits.max_p = static_cast<unsigned>(x);
    } else if (key == "max_degree") {
      limits.max_degree = static_cast<unsigned>(x);
    } else {
      bad_field(field, "unknown limit");
    }
  }
  return limits;
}

// ----- variety -----

Variety parse_variety(Context& ctx) {
  const Json* v = find(ctx.config, "variety");
  if (!v) bad_field("variety", "missing");
  if (v->is_string()) {
    std::string name = v->get<std::string>();
    ctx.inputs["variety"] = name;
    if (name == "free") return Variety::free_algebra();
    if (name == "commutative") return Variety::commutative();
    bad_field("variety", "expected \"free\", \"commutative\" or an object");
  }
  if (!v->is_object()) bad_field("variety", "expected an object");
  bool unitary = true;
  if (const Json* u = find(*v, "unitary")) unitary = as_bool(*u, "variety.unitary");
  std::vector<NCPoly> identities;
  Json echo = Json::array();
  if (const Json* ids = find(*v, "identities")) {
    as_array(*ids, "variety.identities");
    for (std::size_t i = 0; i < ids->size(); ++i) {
      const std::string field = join("variety.identities", i);
      identities.push_back(parse_polynomial((*ids)[i], field));
      echo.push_back(format_ncpoly(identities.back()));
    }
  }
  ctx.inputs["variety"] = {{"identities", echo}, {"unitary", unitary}};
  try {
    return Variety(std::move(identities), unitary);
  } catch (const UsageError& e) {
    bad_field("variety", e.what());
  }
}

bool is_commutative_variety(const Variety& v) {
  return v.unitary() && v.generators() == Variety::commutative().generators();
}

// ----- group and action -----

FiniteGroup parse_group(Context& ctx) {
  const Json& g = require(ctx.config, "group", "");
  if (!g.is_object()) bad_field("group", "expected an object");
  const std::string kind = as_string(require(g, "kind", "group"), "group.kind");
  Json echo = {{"kind", kind}};
  if (kind == "trivial") {
    ctx.inputs["group"] = echo;
    return FiniteGroup::trivial();
  }
  if (kind == "cyclic") {
    auto m = as_unsigned(require(g, "order", "group"), "group.order");
    if (m == 0 || m > 4096) bad_field("group.order", "expected 1 <= order <= 4096");
    echo["order"] = m;
    ctx.inputs["group"] = echo;
    return FiniteGroup::cyclic(static_cast<unsigned>(m));
  }
  if (kind == "abelian") {
    const Json& orders = as_array(require(g, "orders", "group"), "group.orders");
    std::vector<unsigned> ms;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      auto m = as_unsigned(orders[i], join("group.orders", i));
      if (m == 0) bad_field(join("group.orders", i), "orders must be positive");
      total *= m;
      if (total > 4096) bad_field("group.orders", "group order above 4096");
      ms.push_back(static_cast<unsigned>(m));
    }
    if (ms.empty()) bad_field("group.orders", "at least one cyclic factor required");
    echo["orders"] = ms;
    ctx.inputs["group"] = echo;
    return FiniteGroup::product_of_cyclic(ms);
  }
  if (kind == "klein") {
    ctx.inputs["group"] = echo;
    return FiniteGroup::klein_four();
  }
  if (kind == "symmetric") {
    auto k = as_unsigned(require(g, "degree", "group"), "group.degree");
    if (k == 0 || k > 6) bad_field("group.degree", "expected 1 <= degree <= 6");
    echo["degree"] = k;
    ctx.inputs["group"] = echo;
    return FiniteGroup::symmetric(static_cast<unsigned>(k));
  }
  if (kind == "table") {
    const Json& rows = as_array(require(g, "table", "group"), "group.table");
    std::vector<std::vector<FiniteGroup::Element>> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Json& row = as_array(rows[i], join("group.table", i));
      std::vector<FiniteGroup::Element> r;
      for (std::size_t j = 0; j < row.size(); ++j) {
        r.push_back(static_cast<FiniteGroup::Element>(
            as_unsigned(row[j], join(join("group.table", i), j))));
      }
      table.push_back(std::move(r));
    }
    echo["table"] = rows;
    ctx.inputs["group"] = echo;
    try {
      FiniteGroup group(std::move(table));
      if (!group.validated()) {
        ctx.warn("group table of order " + std::to_string(group.order()) +
                 " accepted without checking associativity");
      }
      return group;
    } catch (const UsageError& e) {
      bad_field("group.table", e.what());
    }
  }
  bad_field("group.kind", "unknown kind '" + kind + "'");
}

std::vector<std::vector<int>> parse_characters(const Json& v, const std::string& field,
                                               std::size_t factors) {
  const Json& rows = as_array(v, field);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string f = join(field, i);
    std::vector<int> chi;
    if (rows[i].is_number_integer()) {
      chi.push_back(static_cast<int>(as_integer(rows[i], f)));
    } else {
      const Json& r = as_array(rows[i], f);
      for (std::size_t j = 0; j < r.size(); ++j) chi.push_back(static_cast<int>(as_integer(r[j], join(f, j))));
    }
    if (chi.size() != factors) {
      bad_field(f, "expected " + std::to_string(factors) + " exponents, one per cyclic factor");
    }
    out.push_back(std::move(chi));
  }
  return out;
}

GroupAction parse_action(Context& ctx) {
  FiniteGroup group = parse_group(ctx);
  const Json& a = require(ctx.config, "action", "");
  if (!a.is_object()) bad_field("action", "expected an object");
  const std::string kind = as_string(require(a, "kind", "action"), "action.kind");
  Json echo = {{"kind", kind}};
  auto finish = [&](GroupAction action) {
    ctx.inputs["action"] = echo;
    if (const Json* d = find(ctx.config, "dimension")) {
      if (as_unsigned(*d, "dimension") != action.dim()) {
        bad_field("dimension", "the action acts on " + std::to_string(action.dim()) + " variables");
      }
    }
    ctx.inputs["dimension"] = action.dim();
    return action;
  };
  try {
    if (kind == "diagonal") {
      if (!group.cyclic_factors()) {
        bad_field("action.kind", "diagonal actions need a cyclic, abelian or klein group");
      }
      const std::size_t factors = group.cyclic_factors()->size();
      const Json* chars = find(a, "characters");
      std::string field = "action.characters";
      if (!chars) {
        chars = find(require(ctx.config, "group", ""), "characters");
        field = "group.characters";
      }
      if (!chars) bad_field("action.characters", "missing");
      auto characters = parse_characters(*chars, field, factors);
      if (characters.empty()) bad_field(field, "at least one variable required");
      echo["characters"] = characters;
      return finish(MonomialAction(std::move(group), std::move(characters)));
    }
    if (kind == "regular") return finish(regular_action(group));
    if (kind == "permutation") {
      const Json& images = as_array(require(a, "images", "action"), "action.images");
      echo["images"] = images;
      auto read_perm = [&](const Json& row, const std::string& field) {
        as_array(row, field);
        std::vector<std::size_t> perm;
        for (std::size_t j = 0; j < row.size(); ++j) {
          auto k = as_unsigned(row[j], join(field, j));
          if (k == 0 || k > row.size()) bad_field(join(field, j), "variable index out of range");
          perm.push_back(static_cast<std::size_t>(k - 1));
        }
        return perm;
      };
      if (!images.empty() && images[0].is_number()) {
        if (!group.is_cyclic()) bad_field("action.images", "a single permutation needs a cyclic group");
        return finish(cyclic_permutation_action(static_cast<unsigned>(group.order()),
                                                read_perm(images, "action.images")));
      }
      if (images.size() != group.order()) {
        bad_field("action.images", "expected one permutation per group element");
      }
      std::vector<std::vector<std::size_t>> perms;
      for (std::size_t g = 0; g < images.size(); ++g) perms.push_back(read_perm(images[g], join("action.images", g)));
      return finish(permutation_action(group, perms));
    }
    if (kind == "matrix") {
      const Json& ms = as_array(require(a, "matrices", "action"), "action.matrices");
      std::vector<MatrixAction::Matrix> matrices;
      for (std::size_t g = 0; g < ms.size(); ++g) {
        const std::string fg = join("action.matrices", g);
        MatrixAction::Matrix m;
        const Json& rows = as_array(ms[g], fg);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const std::string fi = join(fg, i);
          std::vector<Rational> row;
          for (std::size_t j = 0; j < as_array(rows[i], fi).size(); ++j) {
            row.push_back(as_rational(rows[i][j], join(fi, j)));
          }
          m.push_back(std::move(row));
        }
        matrices.push_back(std::move(m));
      }
      echo["matrices"] = ms;
      return finish(MatrixAction(std::move(group), std::move(matrices)));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const PreconditionError&) {
    throw;
  } catch (const UsageError& e) {
    const std::string what = e.what();
    if (what.rfind("config field", 0) == 0) throw;
    bad_field("action", what);
  }
  bad_field("action.kind", "unknown kind '" + kind + "'");
}

std::size_t parse_dimension(Context& ctx, std::size_t minimum) {
  const Json& d = require(ctx.config, "dimension", "");
  auto value = as_unsigned(d, "dimension");
  if (value < minimum) bad_field("dimension", "must be at least " + std::to_string(minimum));
  if (value > kMaxVariable) bad_field("dimension", "must be at most " + std::to_string(kMaxVariable));
  ctx.inputs["dimension"] = value;
  return static_cast<std::size_t>(value);
}

// ----- results -----

Json poly_list(const std::vector<NCPoly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(format_ncpoly(p));
  return out;
}

Json verification_json(const VerificationReport& r) {
  Json degrees = Json::array();
  for (const auto& c : r.degrees) {
    degrees.push_back({{"degree", c.degree}, {"expected", c.expected}, {"achieved", c.achieved},
                       {"holds", c.holds()}});
  }
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"target", r.target}, {"holds", r.holds}, {"degrees", degrees}, {"parameters", params}};
}

Json pair_map(const std::map<std::pair<unsigned, unsigned>, Rational>& m) {
  Json out = Json::object();
  for (const auto& [ij, c] : m) {
    out[std::to_string(ij.first) + "," + std::to_string(ij.second)] = json_of(c);
  }
  return out;
}

Json shape_json(const IdentityShape& s) {
  return {{"n", s.n},
          {"gamma", json_of(s.gamma)},
          {"alpha", pair_map(s.alpha)},
          {"beta", pair_map(s.beta)},
          {"polynomial", format_ncpoly(s.polynomial())}};
}

Json special_json(const SpecialIdentity& s) {
  return {{"n", s.n},
          {"n_R", s.n_r()},
          {"h", format_ncpoly(s.h)},
          {"h1", format_ncpoly(s.h1)},
          {"h2", format_ncpoly(s.h2)}};
}

Json certificate_json(const PowerCertificate& c) {
  Json terms = Json::array();
  for (const auto& [coef, u] : c.terms) {
    terms.push_back({{"coefficient", json_of(coef)}, {"u", format_ncpoly(u)}});
  }
  return {{"n", c.n}, {"m", c.m}, {"terms", terms}, {"verified", c.verify()}};
}

struct Outcome {
  Json results = Json::object();
  bool conclusive = true;
  std::size_t verified_up_to = 0;
};

unsigned shape_search_dimension(std::size_t d) { return static_cast<unsigned>(std::max<std::size_t>(d, 3)); }

// ----- tasks -----

Outcome task_nu(Context& ctx) {
  auto n = ctx.param_unsigned("n");
  if (n == 0 || n > 16) bad_field("params.n", "expected 1 <= n <= 16");
  auto m_max = ctx.optional_param("m_max").value_or(ctx.options.limits.nh_max_m);
  ctx.inputs["params"] = {{"n", n}, {"m_max", m_max}};
  Outcome out;
  auto value = nu(static_cast<unsigned>(n), static_cast<unsigned>(m_max), ctx.options.limits);
  out.results["nu"] = value ? Json(*value) : Json(nullptr);
  out.results["bracket"] = {{"lower", n * (n + 1) / 2}, {"upper", n * n}};
  const Json* want_cert = find(ctx.params, "certificate");
  if (value && want_cert && as_bool(*want_cert, "params.certificate")) {
    out.results["certificate"] =
        certificate_json(power_decomposition(static_cast<unsigned>(n), *value, ctx.options.limits));
  }
  out.conclusive = value.has_value();
  out.verified_up_to = m_max;
  return out;
}

Outcome task_beta(Context& ctx) {
  Variety variety = parse_variety(ctx);
  GroupAction action = parse_action(ctx);
  std::optional<std::size_t> proven;
  if (auto p = ctx.optional_param("proven_bound")) {
    proven = *p;
    ctx.inputs["proven_bound"] = {{"value", *p}, {"source", "user-supplied"}};
  } else if (is_commutative_variety(variety)) {
    proven = noether_bound(action.group().order());
    ctx.inputs["proven_bound"] = {{"value", *proven}, {"source", "noether"}};
  }
  std::size_t cap = ctx.degree_cap ? *ctx.degree_cap : proven.value_or(0);
  if (cap == 0) bad_field("degree_cap", "required when no proven bound is available");
  ctx.inputs["degree_cap"] = cap;
  RelativelyFreeAlgebra algebra(variety, action.dim(), ctx.options);
  GeneratorReport r = generator_degrees(algebra, action, cap, proven);
  Outcome out;
  Json degrees = Json::object();
  for (const auto& [n, c] : r.counts) degrees[std::to_string(n)] = c;
  Json witnesses = Json::array();
  for (const auto& [n, w] : r.witnesses()) witnesses.push_back({{"degree", n}, {"polynomial", format_ncpoly(w)}});
  Json generators = Json::object();
  for (const auto& [n, g] : r.generators) generators[std::to_string(n)] = poly_list(g);
  out.results = {{"degrees", degrees}, {"beta", r.beta}, {"witnesses", witnesses},
                 {"generators", generators}};
  out.conclusive = r.conclusive;
  out.verified_up_to = r.verified_up_to;
  return out;
}

Outcome task_invariant_basis(Context& ctx) {
  Variety variety = parse_variety(ctx);
  GroupAction action = parse_action(ctx);
  std::size_t n = ctx.param_unsigned("degree");
  ctx.inputs["params"] = {{"degree", n}};
  RelativelyFreeAlgebra algebra(variety, action.dim(), ctx.options);
  auto basis = invariant_basis(algebra, action, n);
  Outcome out;
  out.results = {{"degree", n},
                 {"dimension", basis.size()},
                 {"quotient_dimension", algebra.component(n).quotient_dimension()},
                 {"basis", poly_list(basis)}};
  out.verified_up_to = n;
  return out;
}

Outcome task_identity_shape(Context& ctx) {
  Variety variety = parse_variety(ctx);
  std::size_t d = 3;
  if (find(ctx.config, "dimension")) d = parse_dimension(ctx, 3);
  std::string kind = "both";
  if (const Json* k = find(ctx.params, "shape")) kind = as_string(*k, "params.shape");
  if (kind != "both" && kind != "viii" && kind != "3.2") {
    bad_field("params.shape", "expected \"viii\", \"3.2\" or \"both\"");
  }
  auto n_max = ctx.optional_param("n_max").value_or(4);
  ctx.inputs["params"] = {{"shape", kind}, {"n_max", n_max}};
  RelativelyFreeAlgebra algebra(variety, d, ctx.options);
  Outcome out;
  out.conclusive = true;
  if (kind != "3.2") {
    auto s = find_identity_shape_viii(algebra, static_cast<unsigned>(n_max));
    out.results["viii"] = s ? shape_json(*s) : Json(nullptr);
    out.conclusive = out.conclusive && s.has_value();
  }
  if (kind != "viii") {
    auto s = find_identity_shape_3_2(algebra, static_cast<unsigned>(n_max));
    out.results["3.2"] = s ? special_json(*s) : Json(nullptr);
    out.conclusive = out.conclusive && s.has_value();
  }
  out.verified_up_to = n_max;
  return out;
}

Outcome task_verify(Context& ctx) {
  const std::string target = as_string(require(ctx.params, "target", "params"), "params.target");
  Outcome out;
  VerificationReport report;
  if (target == "lemma-2-8") {
    GroupAction action = parse_action(ctx);
    std::size_t cap = ctx.cap("verify");
    ctx.inputs["degree_cap"] = cap;
    report = check_inclusion_lemma_2_8(action, cap, ctx.options);
  } else if (target == "corollary-squares") {
    Variety variety = parse_variety(ctx);
    GroupAction action = parse_action(ctx);
    std::size_t cap = ctx.cap("verify");
    ctx.inputs["degree_cap"] = cap;
    RelativelyFreeAlgebra algebra(variety, action.dim(), ctx.options);
    report = check_corollary_squares(algebra, action, cap);
  } else if (target == "lemma-3-1") {
    Variety variety = parse_variety(ctx);
    std::size_t d = parse_dimension(ctx, 2);
    auto p = ctx.optional_param("p").value_or(1);
    if (p == 0) bad_field("params.p", "expected p >= 1");
    std::size_t cap = ctx.cap("verify");
    ctx.inputs["degree_cap"] = cap;
    RelativelyFreeAlgebra algebra(variety, d, ctx.options);
    std::optional<SpecialIdentity> shape;
    if (p >= 2) {
      auto n_max = ctx.optional_param("n_max").value_or(4);
      RelativelyFreeAlgebra search(variety, shape_search_dimension(d), ctx.options);
      shape = find_identity_shape_3_2(search, static_cast<unsigned>(n_max));
      if (!shape) {
        throw PreconditionError("config field 'variety': no identity x2 x1^(n+1) x3 + x1 h1 + h2 x1 with n <= " +
                                std::to_string(n_max));
      }
      out.results["shape"] = special_json(*shape);
    }
    ctx.inputs["params"] = {{"target", target}, {"p", p}};
    report = check_lemma_3_1(algebra, static_cast<unsigned>(p), cap, shape);
  } else if (target == "invariant-subword") {
    auto instances = ctx.optional_param("instances").value_or(1000);
    auto max_order = ctx.optional_param("max_order").value_or(6);
    auto max_length = ctx.optional_param("max_length").value_or(6);
    if (max_order < 2) bad_field("params.max_order", "expected at least 2");
    if (max_length < 1) bad_field("params.max_length", "expected at least 1");
    ctx.inputs["params"] = {{"target", target}, {"instances", instances}, {"max_order", max_order},
                            {"max_length", max_length}};
    report = check_invariant_subword(ctx.seed, instances, static_cast<unsigned>(max_order),
                                     static_cast<unsigned>(max_length));
    out.results.update(verification_json(report));
    out.conclusive = true;
    out.verified_up_to = instances;
    return out;
  } else {
    bad_field("params.target",
              "expected \"lemma-2-8\", \"corollary-squares\", \"lemma-3-1\" or \"invariant-subword\"");
  }
  if (!ctx.inputs.contains("params")) ctx.inputs["params"] = {{"target", target}};
  out.results.update(verification_json(report));
  out.conclusive = !report.degrees.empty();
  out.verified_up_to = report.verified_up_to;
  return out;
}

Json bound_json(const BoundValue& b) { return {{"value", b.value}, {"nu_mode", to_string(b.mode)}}; }

Outcome task_bounds(Context& ctx) {
  Outcome out;
  out.verified_up_to = ctx.degree_cap.value_or(0);
  std::optional<FiniteGroup> group;
  if (find(ctx.config, "group")) group = parse_group(ctx);
  std::optional<Variety> variety;
  if (find(ctx.config, "variety")) variety = parse_variety(ctx);

  auto record = [&](const std::string& name, std::uint64_t value, const std::string& source) {
    ctx.inputs["parameters"][name] = {{"value", value}, {"source", source}};
    return value;
  };
  auto need_variety = [&](const std::string& name) -> const Variety& {
    if (!variety) bad_field("params." + name, "missing, and no variety to compute it from");
    return *variety;
  };

  std::optional<std::uint64_t> order;
  if (auto v = ctx.optional_param("order")) {
    order = record("order", *v, "user-supplied");
  } else if (group) {
    order = record("order", group->order(), "computed");
  }
  std::optional<std::uint64_t> beta_g;
  if (auto v = ctx.optional_param("beta_G")) {
    beta_g = record("beta_G", *v, "user-supplied");
  } else if (group) {
    if (auto b = known_beta(*group)) beta_g = record("beta_G", *b, "paper-table");
  }
  std::size_t d = 0;
  if (auto v = ctx.optional_param("d")) {
    d = record("d", *v, "user-supplied");
  } else if (find(ctx.config, "dimension")) {
    d = record("d", parse_dimension(ctx, 2), "user-supplied");
  }

  std::optional<std::uint64_t> n_r;
  if (auto v = ctx.optional_param("n_R")) {
    n_r = record("n_R", *v, "user-supplied");
  } else if (variety) {
    auto n_max = ctx.optional_param("n_max").value_or(4);
    RelativelyFreeAlgebra search(*variety, shape_search_dimension(d), ctx.options);
    if (auto s = find_identity_shape_3_2(search, static_cast<unsigned>(n_max))) {
      n_r = record("n_R", s->n_r(), "computed");
    } else {
      out.conclusive = false;
      out.results["notes"].push_back("no identity of shape x2 x1^(n+1) x3 + x1 h1 + h2 x1 found");
    }
  }
  auto nilpotency = [&](const std::string& name, std::size_t dim) -> std::optional<std::uint64_t> {
    if (auto v = ctx.optional_param(name)) return record(name, *v, "user-supplied");
    if (!variety || dim == 0) return std::nullopt;
    std::size_t cap = ctx.cap("bounds");
    RelativelyFreeAlgebra algebra(need_variety(name), dim, ctx.options);
    auto r = nilpotency_class_up_to(algebra, cap, ctx.options.limits.max_p);
    if (!r.ell) {
      out.conclusive = false;
      out.results["notes"].push_back(name + " not determined up to degree " + std::to_string(cap));
      return std::nullopt;
    }
    return record(name, *r.ell, "computed");
  };
  auto ell = nilpotency("ell", d);
  auto ell_g = nilpotency("ell_G", order.value_or(0));

  if (order) out.results["noether"] = noether_bound(*order);
  if (n_r && ell && d && beta_g) {
    out.results["thm_3_2"] = bound_json(bound_thm_3_2(static_cast<unsigned>(*n_r), static_cast<unsigned>(*ell),
                                                      static_cast<unsigned>(d), *beta_g));
  }
  if (n_r && ell_g && beta_g) {
    auto b = bound_thm_3_3(static_cast<unsigned>(*n_r), static_cast<unsigned>(*ell_g), *beta_g);
    Json j = {{"razmyslov_upper", b.razmyslov_upper},
              {"kuzmin_conjectural", b.kuzmin_conjectural},
              {"kuzmin_flag", "conjectural"}};
    j["exact"] = b.exact ? Json(*b.exact) : Json(nullptr);
    out.results["thm_3_3"] = j;
  }
  if (n_r && order) {
    if (group && !group->is_abelian()) {
      out.results["notes"].push_back("thm_3_4 skipped: the group is not abelian");
    } else {
      out.results["thm_3_4"] = bound_json(bound_thm_3_4(static_cast<unsigned>(*n_r), *order));
    }
  }
  if (n_r) {
    auto nu_val = nu_upper(static_cast<unsigned>(*n_r));
    out.results["nu_n_R"] = {{"value", nu_val.value},
                             {"nu_mode", to_string(nu_val.mode)},
                             {"kuzmin_conjectural", nu_kuzmin(static_cast<unsigned>(*n_r))}};
  }
  return out;
}

StructureAlgebra parse_structure_algebra(const Json& v) {
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    if (name == "M2") return StructureAlgebra::matrices_2x2();
    if (name == "U2") return StructureAlgebra::upper_triangular_2x2();
    if (name == "K") return StructureAlgebra::field();
    bad_field("params.algebra", "expected \"M2\", \"U2\", \"K\", {\"Rk\": k} or structure constants");
  }
  if (!v.is_object()) bad_field("params.algebra", "expected a string or an object");
  if (const Json* k = find(v, "Rk")) {
    auto kk = as_unsigned(*k, "params.algebra.Rk");
    if (kk == 0 || kk > 6) bad_field("params.algebra.Rk", "expected 1 <= k <= 6");
    return StructureAlgebra::rk_algebra(static_cast<unsigned>(kk));
  }
  const std::string field = "params.algebra.structure_constants";
  const Json& c = as_array(require(v, "structure_constants", "params.algebra"), field);
  const std::size_t dim = c.size();
  if (dim == 0) bad_field(field, "empty");
  std::vector<std::vector<StructureAlgebra::Vector>> constants(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Json& ci = as_array(c[i], join(field, i));
    if (ci.size() != dim) bad_field(join(field, i), "expected " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j) {
      const std::string fij = join(join(field, i), j);
      const Json& cij = as_array(ci[j], fij);
      if (cij.size() != dim) bad_field(fij, "expected " + std::to_string(dim) + " entries");
      StructureAlgebra::Vector vec;
      for (std::size_t k = 0; k < dim; ++k) vec.push_back(as_rational(cij[k], join(fij, k)));
      constants[i].push_back(std::move(vec));
    }
  }
  std::optional<StructureAlgebra::Vector> unit;
  if (const Json* u = find(v, "unit")) {
    as_array(*u, "params.algebra.unit");
    if (u->size() != dim) bad_field("params.algebra.unit", "expected " + std::to_string(dim) + " entries");
    unit.emplace();
    for (std::size_t k = 0; k < dim; ++k) unit->push_back(as_rational((*u)[k], join("params.algebra.unit", k)));
  }
  try {
    return StructureAlgebra(std::move(constants), std::move(unit));
  } catch (const UsageError& e) {
    bad_field("params.algebra", e.what());
  }
}

Outcome task_check_identity(Context& ctx) {
  NCPoly f = parse_polynomial(require(ctx.params, "identity", "params"), "params.identity");
  const Json& alg = require(ctx.params, "algebra", "params");
  StructureAlgebra algebra = parse_structure_algebra(alg);
  ctx.inputs["params"] = {{"identity", format_ncpoly(f)}, {"algebra", alg}};
  Outcome out;
  out.results = {{"holds", holds_in_algebra(f, algebra)}, {"algebra_dimension", algebra.dim()}};
  out.verified_up_to = f.degree();
  return out;
}

using TaskFn = Outcome (*)(Context&);

const std::map<std::string, TaskFn>& task_table() {
  static const std::map<std::string, TaskFn> table = {
      {"nu", task_nu},
      {"beta", task_beta},
      {"invariant-basis", task_invariant_basis},
      {"identity-shape", task_identity_shape},
      {"verify", task_verify},
      {"bounds", task_bounds},
      {"check-identity", task_check_identity},
  };
  return table;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, join(prefix, k), rows);
    return;
  }
  if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], join(prefix, i), rows);
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

Json run_task(const Json& config, const Overrides& overrides, std::vector<std::string>* warnings) {
  const auto start = std::chrono::steady_clock::now();
  if (!config.is_object()) throw UsageError("config: expected a JSON object");
  static const Json empty = Json::object();
  const Json* params = find(config, "params");
  if (params && !params->is_object()) bad_field("params", "expected an object");

  std::string task;
  if (overrides.task) {
    task = *overrides.task;
  } else {
    task = as_string(require(config, "task", ""), "task");
  }
  auto it = task_table().find(task);
  if (it == task_table().end()) bad_field("task", "unknown task '" + task + "'");

  Context ctx{config, params ? *params : empty, task, 1, 0, std::nullopt, {}, warnings};
  ctx.options.limits = parse_limits(config);
  if (overrides.threads) {
    ctx.threads = *overrides.threads;
  } else if (const Json* t = find(config, "threads")) {
    ctx.threads = static_cast<unsigned>(as_unsigned(*t, "threads"));
  }
  if (ctx.threads == 0) bad_field("threads", "must be at least 1");
  ctx.options.threads = ctx.threads;
  if (overrides.seed) {
    ctx.seed = *overrides.seed;
  } else if (const Json* s = find(config, "seed")) {
    ctx.seed = as_unsigned(*s, "seed");
  }
  if (overrides.degree_cap) {
    ctx.degree_cap = *overrides.degree_cap;
  } else if (const Json* c = find(config, "degree_cap")) {
    ctx.degree_cap = as_unsigned(*c, "degree_cap");
  }
  if (ctx.degree_cap && *ctx.degree_cap > ctx.options.limits.max_degree) {
    bad_field("degree_cap", "exceeds limits.max_degree = " + std::to_string(ctx.options.limits.max_degree));
  }
  ctx.inputs["seed"] = ctx.seed;
  if (ctx.degree_cap) ctx.inputs["degree_cap"] = *ctx.degree_cap;

  Outcome out = it->second(ctx);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  Json report = Json::object();
  report["task"] = task;
  report["inputs"] = ctx.inputs;
  report["results"] = out.results;
  report["conclusive"] = out.conclusive;
  report["verified_up_to"] = out.verified_up_to;
  report["timings_ms"] = {{"total", std::round(elapsed.count() * 1000.0) / 1000.0}};
  return report;
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config: invalid JSON in '" + path + "': " + e.what());
  }
}

Json strip_timings(Json report) {
  if (report.is_object()) report.erase("timings_ms");
  return report;
}

std::string render_table(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const char* key : {"task", "conclusive", "verified_up_to"}) {
    if (report.contains(key)) flatten(report[key], key, rows);
  }
  for (const char* key : {"inputs", "results", "timings_ms"}) {
    if (report.contains(key)) flatten(report[key], key, rows);
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

int exit_code(const std::exception& error) {
  if (dynamic_cast<const UsageError*>(&error)) return 1;
  if (dynamic_cast<const ResourceError*>(&error)) return 2;
  if (dynamic_cast<const Json::exception*>(&error)) return 1;
  return 3;
}

}  // namespace ncinv::app
