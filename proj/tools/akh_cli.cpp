// akh: batch front end for the library.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "akh/characters.hpp"
#include "akh/coeff/value.hpp"
#include "akh/crystal.hpp"
#include "akh/jantzen.hpp"
#include "akh/schur.hpp"
#include "akh/selftest.hpp"
#include "akh/specht.hpp"
#include "akh/tensor.hpp"

namespace {

using akh::ConsistencyError;
using akh::DomainError;
using akh::Multipartition;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";
constexpr long long kDeskLimit = 20000;

struct RunConfig {
  std::string subcommand;
  int r = 0;
  int n = -1;
  std::string field = "QQ";
  std::optional<std::string> q, Q, v;
  int e = 0;
  std::string charge;
  bool symbolic = false;
  std::string format = "json";
  std::string out;
  int jobs = 1;
  bool override_scale = false;
  bool timing = false;
  // subcommand options
  std::string lambda, mu, rule = "standard", level = "quick", d_split = "1,1";
  bool hecke_submatrix = false, check_linkage = false, verify = false, commutant = false;

  json echo() const {
    json j;
    j["subcommand"] = subcommand;
    j["r"] = r;
    j["n"] = n;
    j["field"] = field;
    j["q"] = q ? json(*q) : json(nullptr);
    j["Q"] = Q ? json(*Q) : json(nullptr);
    j["v"] = v ? json(*v) : json(nullptr);
    j["e"] = e;
    j["charge"] = charge;
    j["symbolic"] = symbolic;
    j["format"] = format;
    j["out"] = out;
    j["jobs"] = jobs;
    j["override_scale"] = override_scale;
    j["lambda"] = lambda;
    j["mu"] = mu;
    j["rule"] = rule;
    j["level"] = level;
    j["d_split"] = d_split;
    j["hecke_submatrix"] = hecke_submatrix;
    j["check_linkage"] = check_linkage;
    j["verify"] = verify;
    j["commutant"] = commutant;
    return j;
  }
};

struct Output {
  json payload;
  std::vector<std::string> warnings;
  std::optional<std::string> csv;  // matrix payloads only
};

// ------------------------------------------------------------ parsing

// "(2,1)", "((2,1),(1))", "((),(2))" or "2,1|1".
akh::Shape parse_shape(const std::string& text, bool need_partition) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  akh::Shape out;
  if (s.empty()) throw DomainError("empty shape");
  if (s.front() != '(') {
    std::string cur;
    auto flush = [&] {
      std::vector<int> comp;
      for (const auto& x : akh::split_list(cur))
        if (!x.empty()) comp.push_back(static_cast<int>(akh::detail::parse_int(x, "shape")));
      out.push_back(comp);
      cur.clear();
    };
    for (char c : s) {
      if (c == '|') flush();
      else cur += c;
    }
    flush();
  } else {
    std::size_t pos = 0;
    auto expect = [&](char c) {
      if (pos >= s.size() || s[pos] != c) throw DomainError("malformed shape '" + text + "'");
      ++pos;
    };
    auto parse_ints = [&] {
      std::vector<int> comp;
      expect('(');
      while (pos < s.size() && s[pos] != ')') {
        std::size_t end = s.find_first_of(",)", pos);
        if (end == std::string::npos) throw DomainError("malformed shape '" + text + "'");
        comp.push_back(static_cast<int>(akh::detail::parse_int(s.substr(pos, end - pos), "shape")));
        pos = end;
        if (s[pos] == ',') ++pos;
      }
      expect(')');
      return comp;
    };
    if (s.size() > 1 && s[1] == '(') {
      expect('(');
      while (pos < s.size() && s[pos] != ')') {
        out.push_back(parse_ints());
        if (pos < s.size() && s[pos] == ',') ++pos;
      }
      expect(')');
    } else {
      out.push_back(parse_ints());
    }
    if (pos != s.size()) throw DomainError("trailing characters in shape '" + text + "'");
  }
  akh::validate_shape(out, need_partition);
  return akh::canonical(out);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& x : akh::split_list(text)) out.push_back(static_cast<int>(akh::detail::parse_int(x, what)));
  return out;
}

json tableau_json(const akh::StandardTableau& t) { return json(t.entries); }

json semistandard_json(const akh::SemistandardTableau& t) {
  json comps = json::array();
  for (const auto& comp : t.entries) {
    json rows = json::array();
    for (const auto& row : comp) {
      json cells = json::array();
      for (const auto& x : row) cells.push_back(json::array({x.i, x.s}));
      rows.push_back(cells);
    }
    comps.push_back(rows);
  }
  return comps;
}

json shapes_json(const std::vector<akh::Shape>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(akh::shape_str(s));
  return a;
}

template <class F>
json matrix_json(const akh::Matrix<F>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class F>
std::string matrix_csv(const akh::Matrix<F>& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << csv_quote(m(i, j).str());
    os << "\n";
  }
  return os.str();
}

std::string labelled_csv(const std::vector<Multipartition>& rows, const std::vector<Multipartition>& cols, const std::vector<std::vector<int>>& m) {
  std::ostringstream os;
  os << "row";
  for (const auto& c : cols) os << "," << csv_quote(akh::shape_str(c));
  os << "\n";
  for (std::size_t a = 0; a < rows.size(); ++a) {
    os << csv_quote(akh::shape_str(rows[a]));
    for (int x : m[a]) os << "," << x;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------- validation

void need_rn(const RunConfig& c) {
  if (c.r < 1) throw DomainError("--r must be given and >= 1");
  if (c.n < 0) throw DomainError("--n must be given and >= 0");
}

void desk_guard(const RunConfig& c, int r, int n) {
  long long order = akh::ipow(r, n) * akh::factorial(n);
  if (n > 12 || order > kDeskLimit) {
    if (!c.override_scale)
      throw DomainError("r^n n! = " + (n > 12 ? std::string("too large") : std::to_string(order)) + " exceeds the desk limit " +
                        std::to_string(kDeskLimit) + "; pass --override-scale to run anyway");
  }
}

template <class F>
akh::HeckeParams<F> numeric_params(const RunConfig& c, const akh::FieldSpec& fs, int r) {
  if (!c.q) throw DomainError("--q is required (or --symbolic where supported)");
  if (!c.Q) throw DomainError("--Q is required (or --symbolic where supported)");
  akh::HeckeParams<F> p;
  p.r = r;
  p.q = akh::parse_value<F>(*c.q, fs);
  if (p.q.is_zero()) throw DomainError("q must be nonzero");
  p.Q = akh::parse_values<F>(*c.Q, fs);
  if (static_cast<int>(p.Q.size()) != r) throw DomainError("--Q needs exactly r = " + std::to_string(r) + " values");
  return p;
}

// Calls fn(params) with params over the field named by --field.
template <class Fn>
auto with_field(const RunConfig& c, int r, Fn&& fn) {
  auto fs = akh::parse_field(c.field);
  switch (fs.kind) {
    case akh::FieldSpec::Kind::kPrime: return fn(numeric_params<akh::ModP>(c, fs, r));
    case akh::FieldSpec::Kind::kCyclotomic: return fn(numeric_params<akh::Cyclo>(c, fs, r));
    case akh::FieldSpec::Kind::kRationals: break;
  }
  return fn(numeric_params<akh::Rational>(c, fs, r));
}

template <class F>
json params_json(const akh::HeckeParams<F>& p) {
  json j;
  j["q"] = p.q.str();
  json Q = json::array();
  for (const auto& x : p.Q) Q.push_back(x.str());
  j["Q"] = Q;
  if constexpr (!std::is_same_v<F, akh::RatFunc>) j["e"] = akh::multiplicative_order(p.q);
  return j;
}

// ------------------------------------------------------------ commands

Output cmd_multipartitions(const RunConfig& c) {
  need_rn(c);
  auto v = akh::enumerate_multipartitions(c.r, c.n);
  Output o;
  o.payload["order"] = "more dominant first";
  o.payload["count"] = v.size();
  o.payload["multipartitions"] = shapes_json(v);
  return o;
}

Output cmd_tableaux(const RunConfig& c) {
  if (c.lambda.empty()) throw DomainError("--lambda is required");
  auto lam = parse_shape(c.lambda, true);
  if (c.r && c.r != static_cast<int>(lam.size())) throw DomainError("--r does not match the number of components of --lambda");
  Output o;
  o.payload["lambda"] = akh::shape_str(lam);
  if (c.mu.empty()) {
    json list = json::array();
    for (const auto& t : akh::standard_tableaux(lam)) list.push_back(tableau_json(t));
    o.payload["kind"] = "standard";
    o.payload["count"] = list.size();
    o.payload["tableaux"] = list;
  } else {
    auto mu = parse_shape(c.mu, false);
    if (mu.size() != lam.size() || akh::shape_size(mu) != akh::shape_size(lam)) throw DomainError("--mu must have the size and component count of --lambda");
    json list = json::array();
    for (const auto& t : akh::semistandard_tableaux(lam, mu)) list.push_back(semistandard_json(t));
    o.payload["kind"] = "semistandard";
    o.payload["mu"] = akh::shape_str(mu);
    o.payload["entry_format"] = "[row, component]";
    o.payload["count"] = list.size();
    o.payload["tableaux"] = list;
  }
  return o;
}

template <class F>
Output gram_for(const akh::HeckeParams<F>& p, const Multipartition& lam) {
  int n = akh::shape_size(lam);
  akh::HeckeAlgebra<F> alg(p, n);
  akh::MurphyBasis<F> mb(alg);
  auto g = mb.gram_matrix(lam);
  Output o;
  o.payload["lambda"] = akh::shape_str(lam);
  o.payload["params"] = params_json(p);
  o.payload["dim"] = g.rows();
  o.payload["rank"] = akh::rank(g);
  json basis = json::array();
  for (const auto& t : mb.cell(lam).tableaux) basis.push_back(tableau_json(t));
  o.payload["basis"] = basis;
  o.payload["matrix"] = matrix_json(g);
  o.csv = matrix_csv(g);
  return o;
}

Output cmd_gram(const RunConfig& c) {
  if (c.lambda.empty()) throw DomainError("--lambda is required");
  auto lam = parse_shape(c.lambda, true);
  int r = static_cast<int>(lam.size());
  if (c.r && c.r != r) throw DomainError("--r does not match the number of components of --lambda");
  desk_guard(c, r, akh::shape_size(lam));
  if (c.symbolic) return gram_for(akh::symbolic_params(r), lam);
  return with_field(c, r, [&](const auto& p) { return gram_for(p, lam); });
}

Output cmd_weyl_gram(const RunConfig& c) {
  if (c.lambda.empty() || c.mu.empty()) throw DomainError("--lambda and --mu are required");
  auto lam = parse_shape(c.lambda, true);
  auto mu = parse_shape(c.mu, false);
  int r = static_cast<int>(lam.size());
  int n = akh::shape_size(lam);
  if (static_cast<int>(mu.size()) != r || akh::shape_size(mu) != n) throw DomainError("--mu must have the size and component count of --lambda");
  desk_guard(c, r, n);
  return with_field(c, r, [&](const auto& p) {
    using F = std::decay_t<decltype(p.q)>;
    akh::HeckeAlgebra<F> alg(p, n);
    akh::MurphyBasis<F> mb(alg);
    akh::WeylModules<F> wm(mb);
    auto g = wm.weight_gram(lam, mu);
    Output o;
    o.payload["lambda"] = akh::shape_str(lam);
    o.payload["mu"] = akh::shape_str(mu);
    o.payload["params"] = params_json(p);
    o.payload["dim"] = g.rows();
    o.payload["rank"] = g.rows() == 0 ? 0 : akh::rank(g);
    json basis = json::array();
    for (const auto& t : akh::semistandard_tableaux(lam, mu)) basis.push_back(semistandard_json(t));
    o.payload["basis"] = basis;
    o.payload["matrix"] = matrix_json(g);
    o.csv = matrix_csv(g);
    return o;
  });
}

Output cmd_simples(const RunConfig& c) {
  need_rn(c);
  desk_guard(c, c.r, c.n);
  return with_field(c, c.r, [&](const auto& p) {
    using F = std::decay_t<decltype(p.q)>;
    akh::HeckeAlgebra<F> alg(p, c.n);
    akh::MurphyBasis<F> mb(alg);
    Output o;
    o.payload["params"] = params_json(p);
    json list = json::array();
    int nonzero = 0;
    for (const auto& s : akh::simple_dimensions(mb)) {
      list.push_back({{"lambda", akh::shape_str(s.shape)}, {"dim_specht", s.dim_specht}, {"dim_simple", s.dim_simple}});
      if (s.dim_simple > 0) ++nonzero;
    }
    o.payload["simples"] = list;
    o.payload["nonzero_count"] = nonzero;
    return o;
  });
}

template <class F>
akh::DecompositionMatrix decomposition_for(const akh::HeckeParams<F>& p, int n) {
  akh::HeckeAlgebra<F> alg(p, n);
  akh::MurphyBasis<F> mb(alg);
  akh::WeylModules<F> wm(mb);
  return akh::decomposition_matrix(wm, akh::enumerate_multicompositions(p.r, n));
}

Output cmd_blocks(const RunConfig& c) {
  need_rn(c);
  desk_guard(c, c.r, c.n);
  return with_field(c, c.r, [&](const auto& p) {
    Output o;
    o.payload["params"] = params_json(p);
    auto blocks = akh::residue_blocks(p, c.n);
    json list = json::array();
    for (const auto& b : blocks) list.push_back(shapes_json(b));
    o.payload["count"] = blocks.size();
    o.payload["blocks"] = list;
    if (c.check_linkage) {
      auto link = akh::linkage_classes(decomposition_for(p, c.n));
      bool same = akh::selftest::as_partition(blocks) == akh::selftest::as_partition(link);
      if (!same) throw ConsistencyError("residue classes differ from the linkage classes of the decomposition matrix");
      o.payload["linkage_agrees"] = true;
    }
    return o;
  });
}

Output cmd_decomp(const RunConfig& c) {
  need_rn(c);
  desk_guard(c, c.r, c.n);
  return with_field(c, c.r, [&](const auto& p) {
    auto d = decomposition_for(p, c.n);
    Output o;
    o.payload["params"] = params_json(p);
    o.payload["ordering"] = {{"rows", "Weyl modules W^lambda, least dominant first"},
                             {"cols", "simple modules L^mu, same order as rows"},
                             {"entry", "[W^row : L^col]"},
                             {"shape", "lower unitriangular"}};
    o.payload["rows"] = shapes_json(d.rows);
    o.payload["cols"] = shapes_json(d.cols);
    o.payload["entries"] = d.entries;
    o.csv = labelled_csv(d.rows, d.cols, d.entries);
    if (c.hecke_submatrix) {
      if (!d.has_hecke) throw DomainError("the weight set lacks omega");
      o.payload["hecke"] = {{"rows", shapes_json(d.rows)}, {"cols", shapes_json(d.hecke_cols)}, {"entries", d.hecke_entries}, {"entry", "[S^row : D^col]"}};
      o.csv = labelled_csv(d.rows, d.hecke_cols, d.hecke_entries);
    }
    return o;
  });
}

Output cmd_schur_elements(const RunConfig& c) {
  need_rn(c);
  if (c.r > akh::kMaxSymbolicR) throw DomainError("schur-elements supports r <= 6");
  auto shapes = akh::enumerate_multipartitions(c.r, c.n);
  Output o;
  json values;
  if (c.symbolic) {
    for (const auto& lam : shapes) values[akh::shape_str(lam)] = akh::schur_element(lam).value.str();
  } else {
    o.payload["params"] = with_field(c, c.r, [&](const auto& p) {
      for (const auto& lam : shapes) {
        try {
          values[akh::shape_str(lam)] = akh::specialize(akh::schur_element(lam).value, p).str();
        } catch (const DomainError&) {
          throw DomainError("s_" + akh::shape_str(lam) + " has a pole at these parameters");
        }
      }
      return params_json(p);
    });
  }
  o.payload["schur_elements"] = values;
  return o;
}

template <class F>
json semisimple_payload(const akh::HeckeParams<F>& p, int n, const RunConfig& c, Output& o) {
  json j;
  F ph = akh::p_hecke(p, n);
  j["P_H"] = ph.str();
  if constexpr (std::is_same_v<F, akh::RatFunc>) {
    j["semisimple_generically"] = !ph.is_zero();
    return j;
  } else {
    bool semisimple = !ph.is_zero();
    j["params"] = params_json(p);
    j["semisimple"] = semisimple;
    json zeros = json::array();
    for (int i = 2; i <= n; ++i) {
      F s(0);
      for (int k = 0; k < i; ++k) s += akh::power(p.q, k);
      if (s.is_zero()) zeros.push_back("1+q+...+q^" + std::to_string(i - 1));
    }
    for (int i = 1; i <= p.r; ++i)
      for (int jj = i + 1; jj <= p.r; ++jj)
        for (int d = -n + 1; d < n; ++d)
          if ((akh::power(p.q, d) * p.Q[i - 1] - p.Q[jj - 1]).is_zero())
            zeros.push_back("q^" + std::to_string(d) + "*Q" + std::to_string(i) + "-Q" + std::to_string(jj));
    j["vanishing_factors"] = zeros;
    desk_guard(c, p.r, n);
    akh::HeckeAlgebra<F> alg(p, n);
    akh::MurphyBasis<F> mb(alg);
    bool all = true;
    for (const auto& cell : mb.cells())
      if (akh::rank(mb.gram_matrix(cell.shape)) != cell.dim()) all = false;
    j["all_gram_nonsingular"] = all;
    if (all != semisimple) throw ConsistencyError("Gram nonsingularity and P_H != 0 disagree");
    (void)o;
    return j;
  }
}

Output cmd_semisimple(const RunConfig& c) {
  need_rn(c);
  Output o;
  if (c.symbolic) o.payload = semisimple_payload(akh::symbolic_params(c.r), c.n, c, o);
  else o.payload = with_field(c, c.r, [&](const auto& p) { return semisimple_payload(p, c.n, c, o); });
  return o;
}

Output cmd_kleshchev(const RunConfig& c) {
  need_rn(c);
  if (c.n > 12 && !c.override_scale) throw DomainError("n > 12 exceeds the desk limit; pass --override-scale");
  std::vector<int> charge = c.charge.empty() ? std::vector<int>(c.r, 0) : parse_int_list(c.charge, "charge");
  if (static_cast<int>(charge.size()) != c.r) throw DomainError("--charge needs exactly r entries");
  akh::NormalRule rule;
  if (c.rule == "standard") rule = akh::NormalRule::kStandard;
  else if (c.rule == "signature") rule = akh::NormalRule::kSignature;
  else if (c.rule == "literal") rule = akh::NormalRule::kLiteral;
  else throw DomainError("--rule must be standard, signature or literal");
  auto cfg = akh::make_config(c.e, charge);
  auto k = akh::kleshchev_levels(c.n, cfg, rule);
  Output o;
  o.payload["e"] = c.e;
  o.payload["charge"] = cfg.charge;
  o.payload["rule"] = c.rule;
  o.payload["count"] = k.levels[c.n].size();
  o.payload["multipartitions"] = shapes_json(k.levels[c.n]);
  json edges = json::array();
  for (int m = 1; m <= c.n; ++m)
    for (const auto& ed : k.edges[m])
      edges.push_back({{"from", akh::shape_str(ed.from)}, {"to", akh::shape_str(ed.to)}, {"residue", ed.residue}});
  o.payload["edges"] = edges;
  if (rule == akh::NormalRule::kLiteral) o.warnings.push_back("the literal normal-node rule does not reproduce the Kleshchev labels in general");
  return o;
}

Output cmd_jantzen(const RunConfig& c) {
  need_rn(c);
  desk_guard(c, c.r, c.n);
  std::vector<Multipartition> only;
  if (!c.lambda.empty()) only.push_back(parse_shape(c.lambda, true));
  return with_field(c, c.r, [&](const auto& p) {
    using F = std::decay_t<decltype(p.q)>;
    akh::ModularSystem<F> sys{p, c.n};
    auto weights = akh::enumerate_multicompositions(c.r, c.n);
    auto rep = akh::sum_formula_check(sys, weights, only);
    Output o;
    o.payload["params"] = params_json(p);
    json entries = json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"lambda", akh::shape_str(e.lambda)}, {"nu", akh::shape_str(e.nu)}, {"det_valuation", e.lhs}, {"rim_hook_side", e.rhs}, {"match", e.ok()}});
      if (!e.ok())
        throw ConsistencyError("sum formula fails at lambda=" + akh::shape_str(e.lambda) + " nu=" + akh::shape_str(e.nu) + ": " + std::to_string(e.lhs) +
                               " != " + std::to_string(e.rhs));
    }
    o.payload["entries"] = entries;
    json gs = json::array();
    auto shapes = akh::dominant_shapes(weights, c.r, c.n);
    for (const auto& lam : shapes) {
      if (!only.empty() && lam != only[0]) continue;
      for (const auto& mu : shapes)
        if (akh::dominates_strictly(lam, mu)) {
          auto g = akh::g_factor(lam, mu, sys);
          gs.push_back({{"lambda", akh::shape_str(lam)}, {"mu", akh::shape_str(mu)}, {"valuation", g.valuation}, {"pairs", g.pairs}});
        }
    }
    o.payload["g_factors"] = gs;
    json dvg = json::array();
    int differ = 0;
    for (const auto& d : rep.det_vs_g) {
      dvg.push_back({{"lambda", akh::shape_str(d.lambda)}, {"mu", akh::shape_str(d.mu)}, {"det_valuation", d.det_valuation}, {"g_valuation", d.g_valuation},
                     {"equal_up_to_sign", d.equal_up_to_sign}});
      if (!d.equal_up_to_sign) ++differ;
    }
    o.payload["det_vs_g"] = dvg;
    o.payload["all_match"] = rep.all_ok();
    if (differ)
      o.warnings.push_back("det-vs-g: det G^lambda_mu differs from +-g_lambda,mu for " + std::to_string(differ) + " of " +
                           std::to_string(rep.det_vs_g.size()) + " dominant pairs (informational)");
    return o;
  });
}

Output cmd_census(const RunConfig& c) {
  need_rn(c);
  desk_guard(c, c.r, c.n);
  std::vector<akh::Multicomposition> weights;
  if (!c.mu.empty()) weights.push_back(parse_shape(c.mu, false));
  else weights = akh::enumerate_multicompositions(c.r, c.n);
  for (const auto& mu : weights)
    if (static_cast<int>(mu.size()) != c.r || akh::shape_size(mu) != c.n) throw DomainError("--mu must have r components and size n");
  Output o;
  json mods = json::array();
  std::vector<long long> dims;
  for (const auto& mu : weights) {
    auto pc = akh::permutation_module_census(mu, c.r);
    json mult = json::array();
    for (const auto& [lam, k] : pc.multiplicity) mult.push_back({{"lambda", akh::shape_str(lam)}, {"sstd", k}});
    mods.push_back({{"mu", akh::shape_str(mu)}, {"dim", pc.dim}, {"specht_multiplicities", mult}});
    dims.push_back(pc.dim);
  }
  o.payload["permutation_modules"] = mods;
  if (c.mu.empty()) {
    o.payload["schur_dimension"] = akh::schur_dimension(weights, c.r, c.n);
    auto b = akh::borel_census(c.r, c.n);
    o.payload["borel"] = {{"minus", b.minus},
                          {"plus", b.plus},
                          {"star_bijection", b.star_bijection},
                          {"product_filtered", b.product_filtered},
                          {"product_literal", b.product_literal},
                          {"schur_dimension", b.schur_dim}};
    if (b.product_filtered != b.schur_dim && b.product_literal != b.schur_dim)
      o.warnings.push_back("neither Borel product count equals dim S (" + std::to_string(b.product_filtered) + ", " + std::to_string(b.product_literal) +
                           " vs " + std::to_string(b.schur_dim) + ")");
  }
  if (c.verify) {
    o.payload["verified"] = with_field(c, c.r, [&](const auto& p) {
      using F = std::decay_t<decltype(p.q)>;
      akh::HeckeAlgebra<F> alg(p, c.n);
      json ranks = json::array();
      for (std::size_t a = 0; a < weights.size(); ++a) {
        akh::PermutationModule<F> pm(alg, weights[a]);
        if (pm.dim() != dims[a])
          throw ConsistencyError("rank of m_mu H is " + std::to_string(pm.dim()) + " but the census gives " + std::to_string(dims[a]) + " for mu=" +
                                 akh::shape_str(weights[a]));
        ranks.push_back({{"mu", akh::shape_str(weights[a])}, {"rank", pm.dim()}});
      }
      return json{{"params", params_json(p)}, {"ranks", ranks}};
    });
  }
  return o;
}

// v with v² = q when q is a square in the field.
template <class F>
std::optional<F> square_root(const F& q) {
  if constexpr (std::is_same_v<F, akh::Rational>) {
    mpz_class a = q.num(), b = q.den();
    if (a < 0 || !mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
    mpz_class ra, rb;
    mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
    mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
    return akh::Rational(mpq_class(ra, rb));
  } else if constexpr (std::is_same_v<F, akh::ModP>) {
    if (!q.bound()) return std::nullopt;
    for (std::uint32_t x = 1; x < q.prime(); ++x)
      if (akh::ModP(q.prime(), x) * akh::ModP(q.prime(), x) == q) return akh::ModP(q.prime(), x);
    return std::nullopt;
  } else {
    return std::nullopt;
  }
}

template <class F>
json tensor_payload(const akh::TensorSpace& V, const F& v, const std::vector<F>& Q, const RunConfig& c, Output& o) {
  json j;
  auto gens = akh::tensor_generators(V, v, Q);
  auto p = akh::tensor_params(v, Q);
  std::string why;
  bool ok = akh::relations_hold(gens, p, &why);
  if (!ok) throw ConsistencyError("tensor operators violate " + why);
  j["relations"] = {{"ok", true}, {"checked", "order, quadratic, T0T1T0T1, commuting, braid"}};
  auto cnt = akh::schur_weyl_counts(V);
  if (cnt.tensor_dim != cnt.bimodule_dim) throw ConsistencyError("d^n differs from the bimodule count");
  j["tensor_dim"] = cnt.tensor_dim;
  j["bimodule_dim"] = cnt.bimodule_dim;
  j["expected_commutant"] = cnt.expected_commutant;
  if (c.commutant) {
    if (V.dim() > 81 && !c.override_scale) throw DomainError("commutant of a space of dimension > 81 exceeds the desk limit; pass --override-scale");
    long long k = akh::commutant_dimension(gens, V.dim());
    j["commutant_dim"] = k;
    if (k != cnt.expected_commutant)
      o.warnings.push_back("commutant dimension " + std::to_string(k) + " differs from the semisimple count " + std::to_string(cnt.expected_commutant));
  }
  return j;
}

Output cmd_tensor_check(const RunConfig& c) {
  if (c.n < 0) throw DomainError("--n must be given and >= 0");
  auto split = parse_int_list(c.d_split, "d-split");
  akh::TensorSpace V(split, c.n);
  if (c.r && c.r != V.r()) throw DomainError("--r does not match the length of --d-split");
  Output o;
  bool numeric = c.v || c.q;
  if (!numeric || c.symbolic) {
    std::vector<akh::RatFunc> Q;
    for (int s = 1; s <= V.r(); ++s) Q.push_back(akh::RatFunc::var(s));
    o.payload = tensor_payload(V, akh::RatFunc::var(akh::kVarV), Q, c, o);
    o.payload["mode"] = "symbolic";
    return o;
  }
  auto fs = akh::parse_field(c.field);
  auto run = [&](auto tag) {
    using F = decltype(tag);
    if (!c.Q) throw DomainError("--Q is required in numeric mode");
    auto Q = akh::parse_values<F>(*c.Q, fs);
    if (static_cast<int>(Q.size()) != V.r()) throw DomainError("--Q needs one value per component of --d-split");
    F v;
    if (c.v) {
      v = akh::parse_value<F>(*c.v, fs);
      if (c.q && !(v * v == akh::parse_value<F>(*c.q, fs))) throw DomainError("--v squared differs from --q");
    } else {
      auto root = square_root(akh::parse_value<F>(*c.q, fs));
      if (!root) throw DomainError("q is not a square in " + fs.str() + "; pass --v");
      v = *root;
    }
    json j = tensor_payload(V, v, Q, c, o);
    j["mode"] = "numeric";
    j["v"] = v.str();
    return j;
  };
  switch (fs.kind) {
    case akh::FieldSpec::Kind::kPrime: o.payload = run(akh::ModP()); break;
    case akh::FieldSpec::Kind::kCyclotomic: o.payload = run(akh::Cyclo()); break;
    case akh::FieldSpec::Kind::kRationals: o.payload = run(akh::Rational()); break;
  }
  return o;
}

Output cmd_selftest(const RunConfig& c, bool& failed) {
  akh::SelftestLevel level;
  if (c.level == "quick") level = akh::SelftestLevel::kQuick;
  else if (c.level == "standard") level = akh::SelftestLevel::kStandard;
  else if (c.level == "full") level = akh::SelftestLevel::kFull;
  else throw DomainError("--level must be quick, standard or full");
  Output o;
  json list = json::array();
  std::vector<std::string> bad;
  double total = 0;
  for (const auto& r : akh::run_selftest(level)) {
    json j{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"skipped", r.skipped}};
    if (c.timing) j["seconds"] = r.seconds;
    list.push_back(j);
    total += r.seconds;
    if (!r.pass) bad.push_back(std::to_string(r.id) + " " + r.name + ": " + r.detail);
  }
  o.payload["level"] = c.level;
  o.payload["criteria"] = list;
  o.payload["passed"] = 12 - static_cast<int>(bad.size());
  if (level == akh::SelftestLevel::kQuick && total > 120) o.warnings.push_back("quick level took longer than 2 minutes");
  failed = !bad.empty();
  for (const auto& b : bad) std::cerr << "akh: criterion " << b << "\n";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ariki-Koike algebras, cyclotomic q-Schur algebras and their representations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  RunConfig c;
  std::string q, Q, v;
  app.add_option("--r", c.r, "number of components r");
  app.add_option("--n", c.n, "rank n");
  app.add_option("--field", c.field, "QQ, GF(p) or cyclo(e)")->capture_default_str();
  app.add_option("--q", q, "parameter q (a, a/b, zeta^k)");
  app.add_option("--Q", Q, "comma-separated Q_1,...,Q_r");
  app.add_option("--e", c.e, "quantum characteristic e (0 for infinity)");
  app.add_option("--charge", c.charge, "comma-separated charge a_1,...,a_r");
  app.add_flag("--symbolic", c.symbolic, "generic parameters q, Q_1, ..., Q_r");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", c.out, "write output to this file");
  app.add_option("--jobs", c.jobs, "parallelism degree")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--override-scale", c.override_scale, "allow r^n n! above 20000");
  app.add_flag("--timing", c.timing, "include wall-clock timing in the envelope");

  auto add = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };
  add("multipartitions", "list the multipartitions of n with r components");
  auto* tab = add("tableaux", "standard (or semistandard with --mu) tableaux of a shape");
  tab->add_option("--lambda", c.lambda, "shape, e.g. ((2,1),(1)) or 2,1|1");
  tab->add_option("--mu", c.mu, "weight for semistandard tableaux");
  auto* gram = add("gram", "Gram matrix of a Specht module");
  gram->add_option("--lambda", c.lambda, "multipartition");
  auto* wg = add("weyl-gram", "Gram matrix of a weight space of a Weyl module");
  wg->add_option("--lambda", c.lambda, "multipartition");
  wg->add_option("--mu", c.mu, "multicomposition");
  add("simples", "dimensions of the simple modules D^lambda");
  auto* bl = add("blocks", "residue classes of multipartitions");
  bl->add_flag("--check-linkage", c.check_linkage, "compare with the linkage classes of the decomposition matrix");
  auto* dc = add("decomp", "decomposition matrix of the cyclotomic q-Schur algebra");
  dc->add_flag("--hecke-submatrix", c.hecke_submatrix, "also emit [S^lambda : D^mu]");
  add("schur-elements", "Schur elements s_lambda");
  add("semisimple", "semisimplicity criterion");
  auto* kl = add("kleshchev", "Kleshchev multipartitions and crystal edges");
  kl->add_option("--rule", c.rule, "normal node rule: standard, signature or literal")->capture_default_str();
  auto* ja = add("jantzen", "Jantzen sum formula valuations");
  ja->add_option("--lambda", c.lambda, "restrict to one multipartition");
  auto* ce = add("census", "permutation module and Borel basis counts");
  ce->add_option("--mu", c.mu, "restrict to one weight");
  ce->add_flag("--verify", c.verify, "check dim M^mu as the rank of m_mu H at --field/--q/--Q");
  auto* tc = add("tensor-check", "Sakamoto-Shoji action on tensor space");
  tc->add_option("--d-split", c.d_split, "comma-separated d_1,...,d_r")->capture_default_str();
  tc->add_option("--v", v, "square root of q (numeric mode)");
  tc->add_flag("--commutant", c.commutant, "compute the commutant dimension");
  auto* st = add("selftest", "run the acceptance criteria");
  st->add_option("--level", c.level, "quick, standard or full")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return 1;
  }
  if (!q.empty()) c.q = q;
  if (!Q.empty()) c.Q = Q;
  if (!v.empty()) c.v = v;
  c.subcommand = app.get_subcommands().front()->get_name();

  auto start = std::chrono::steady_clock::now();
  Output o;
  bool selftest_failed = false;
  try {
    const std::string& s = c.subcommand;
    if (s == "multipartitions") o = cmd_multipartitions(c);
    else if (s == "tableaux") o = cmd_tableaux(c);
    else if (s == "gram") o = cmd_gram(c);
    else if (s == "weyl-gram") o = cmd_weyl_gram(c);
    else if (s == "simples") o = cmd_simples(c);
    else if (s == "blocks") o = cmd_blocks(c);
    else if (s == "decomp") o = cmd_decomp(c);
    else if (s == "schur-elements") o = cmd_schur_elements(c);
    else if (s == "semisimple") o = cmd_semisimple(c);
    else if (s == "kleshchev") o = cmd_kleshchev(c);
    else if (s == "jantzen") o = cmd_jantzen(c);
    else if (s == "census") o = cmd_census(c);
    else if (s == "tensor-check") o = cmd_tensor_check(c);
    else if (s == "selftest") o = cmd_selftest(c, selftest_failed);
    if (c.format == "csv" && !o.csv) throw DomainError("csv output is only available for matrix payloads (gram, weyl-gram, decomp)");
  } catch (const DomainError& e) {
    std::cerr << "akh: domain error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "akh: consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "akh: consistency failure: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  if (c.format == "csv") {
    text = *o.csv;
  } else {
    json env;
    env["tool"] = "akh";
    env["version"] = kVersion;
    env["config"] = c.echo();
    if (c.timing) env["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    env["payload"] = o.payload;
    env["warnings"] = o.warnings;
    text = env.dump(2) + "\n";
  }
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "akh: cannot write " << c.out << "\n";
      return 1;
    }
    f << text;
  }
  return selftest_failed ? 2 : 0;
}
