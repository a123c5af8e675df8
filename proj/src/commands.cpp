#include "pearl/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "pearl/dataset.hpp"
#include "pearl/errors.hpp"
#include "pearl/gysin_bundle.hpp"
#include "pearl/positivity.hpp"
#include "pearl/quantum_algebra.hpp"

namespace pearl {

namespace {

using json = nlohmann::ordered_json;

template <class T>
std::string tuple_str(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> as_ints(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

class Report {
 public:
  void check(std::string name, bool ok, std::string detail = {}) {
    items_.push_back({std::move(name), ok, std::move(detail), false});
  }
  void expect(std::string name, bool ok, std::string detail = {}) {
    items_.push_back({std::move(name), ok, std::move(detail), true});
  }
  void line(std::string text) { lines_.push_back(std::move(text)); }

  json values = json::object();

  int exit_code() const {
    bool expectation_failed = false;
    for (const auto& i : items_) {
      if (!i.ok && !i.expectation) return kExitStructural;
      if (!i.ok) expectation_failed = true;
    }
    return expectation_failed ? kExitExpectation : kExitOk;
  }

  void print(std::ostream& out, bool as_json, const std::string& command, const std::string& dataset) const {
    const int code = exit_code();
    const char* result = code == kExitOk ? "pass" : code == kExitStructural ? "structural failure"
                                                                             : "expectation mismatch";
    if (as_json) {
      json j;
      j["command"] = command;
      j["dataset"] = dataset;
      j["values"] = values;
      j["checks"] = json::array();
      for (const auto& i : items_) {
        json c;
        c["name"] = i.name;
        c["kind"] = i.expectation ? "expectation" : "structural";
        c["ok"] = i.ok;
        c["detail"] = i.detail;
        j["checks"].push_back(std::move(c));
      }
      j["result"] = result;
      j["exit_code"] = code;
      out << j.dump(2) << "\n";
      return;
    }
    out << command << ": " << dataset << "\n";
    for (const auto& l : lines_) out << "  " << l << "\n";
    if (!items_.empty()) out << "checks:\n";
    for (const auto& i : items_) {
      out << "  " << (i.ok ? "ok  " : "FAIL") << "  " << (i.expectation ? "expected " : "") << i.name;
      if (!i.detail.empty()) out << ": " << i.detail;
      out << "\n";
    }
    out << "result: " << result << "\n";
  }

 private:
  struct Item {
    std::string name;
    bool ok;
    std::string detail;
    bool expectation;
  };
  std::vector<Item> items_;
  std::vector<std::string> lines_;
};

struct Context {
  DatasetFile data;
  PearlComplex laurent;
  std::optional<Cochain> unit;
  std::vector<TwistTerm> twist;
  std::optional<Product> product;
  std::optional<BundleComplex> bundle;
  std::string bundle_error;

  explicit Context(DatasetFile d)
      : data(std::move(d)), laurent(build_complex(data.pearl)), twist(data.twist.value_or(std::vector<TwistTerm>{})) {
    if (data.pearl.unit)
      unit = cochain_from_ids(laurent, *data.pearl.unit);
    else if (data.product)
      unit = cochain_from_ids(laurent, data.product->unit);
    if (data.product) product.emplace(laurent, *data.product);
    try {
      bundle = build_bundle_complex(laurent, resolve_twist(laurent, twist));
    } catch (const TwistNotCocycle& e) {
      bundle_error = e.what();
      for (const auto& entry : e.entries()) {
        bundle_error += "; " + entry.source + " -> " + entry.target + " exponents";
        for (int x : entry.exponents) bundle_error += " " + std::to_string(x);
      }
    } catch (const DSquaredNonzero& e) {
      bundle_error = e.what();
    }
  }

  int N() const { return data.pearl.N; }
  bool morse_indices() const {
    for (const auto& g : data.pearl.generators)
      if (g.index < 0) return false;
    return true;
  }
  std::vector<std::size_t> qh_dims() const { return cohomology(laurent).dims; }
  std::vector<std::size_t> gamma_dims() const { return cohomology(bundle->total()).dims; }
  bool gamma_vanishes() const {
    for (auto d : gamma_dims())
      if (d) return false;
    return true;
  }
  std::optional<ClassRef> euler() const {
    if (!bundle || !unit) return std::nullopt;
    return euler_class(*bundle, *unit);
  }
  BundleComplex positive_bundle() const {
    return build_bundle_complex(data.pearl, twist, RingSpec::positive(N()));
  }
};

std::string class_text(const PearlComplex& c, const ClassRef& e, const std::string& group) {
  if (e.is_zero()) return "0";
  const GradedSlices s(c);
  std::string text = "[" + c.format(e.representative) + "]";
  if (s.homology(e.degree).dim() == 1) text += " (generator of " + group + "^" + std::to_string(e.degree) + ")";
  return text;
}

std::string matrix_text(const gf2::BitMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "0x0";
  std::string s = m.str();
  for (auto& ch : s)
    if (ch == '\n') ch = '/';
  return s;
}

json les_json(const LesReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j;
    j["k"] = row.k;
    j["dim_a"] = row.dim_a;
    j["dim_b"] = row.dim_b;
    j["dim_c"] = row.dim_c;
    j["f"] = row.f.str();
    j["g"] = row.g.str();
    j["boundary"] = row.boundary.str();
    j["exact"] = row.exact();
    rows.push_back(std::move(j));
  }
  return rows;
}

void les_lines(Report& rep, const LesReport& r, const std::string& base, const std::string& total) {
  std::vector<std::vector<std::string>> table{
      {"k", base + "^k", total + "^k", base + "^(k-1)", "i", "p", "delta", "exact"}};
  for (const auto& row : r.rows)
    table.push_back({std::to_string(row.k), std::to_string(row.dim_a), std::to_string(row.dim_b),
                     std::to_string(row.dim_c), matrix_text(row.f), matrix_text(row.g),
                     matrix_text(row.boundary), row.exact() ? "yes" : "NO"});
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& cells : table)
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  for (const auto& cells : table) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      line += cells[i];
      if (i + 1 < cells.size()) line += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    rep.line(line);
  }
}

enum class Exp { cohomology, gamma, classical, euler, ambient_euler, gamma_vanishes, invertible };

void verify_expectations(const Context& ctx, Report& rep, std::initializer_list<Exp> which) {
  if (!ctx.data.expectations) return;
  const auto& e = *ctx.data.expectations;
  for (auto w : which) {
    switch (w) {
      case Exp::cohomology:
        if (e.cohomology_dims) {
          const auto got = as_ints(ctx.qh_dims());
          rep.expect("cohomology dims " + tuple_str(*e.cohomology_dims), got == *e.cohomology_dims,
                     "computed " + tuple_str(got));
        }
        break;
      case Exp::gamma:
        if (e.gamma_dims) {
          if (!ctx.bundle) {
            rep.expect("bundle cohomology dims", false, "bundle not built");
            break;
          }
          const auto got = as_ints(ctx.gamma_dims());
          rep.expect("bundle cohomology dims " + tuple_str(*e.gamma_dims), got == *e.gamma_dims,
                     "computed " + tuple_str(got));
        }
        break;
      case Exp::classical:
        if (e.classical_gamma_dims) {
          const auto cg = classical_gysin(ctx.data.pearl, ctx.twist);
          const auto got = as_ints(cg.total_dims);
          rep.expect("classical bundle cohomology " + tuple_str(*e.classical_gamma_dims),
                     got == *e.classical_gamma_dims, "computed " + tuple_str(got));
        }
        break;
      case Exp::euler:
        if (e.euler_class) {
          const auto ef = ctx.euler();
          if (!ef) {
            rep.expect("euler class", false, "needs a unit and a valid bundle");
            break;
          }
          const auto want = cochain_from_terms(ctx.laurent, *e.euler_class);
          bool ok = false;
          try {
            ok = class_of(GradedSlices(ctx.laurent), 2, want).coordinates == ef->coordinates;
          } catch (const Error&) {
          }
          rep.expect("euler class [" + ctx.laurent.format(want) + "]", ok,
                     "computed [" + ctx.laurent.format(ef->representative) + "]");
        }
        break;
      case Exp::ambient_euler:
        if (e.ambient_euler_class) {
          if (!ctx.bundle || !ctx.unit || ctx.N() % 2 != 0) {
            rep.expect("ambient euler class", false, "needs a unit, a valid bundle and even N");
            break;
          }
          const auto amb = ambient_variant(*ctx.bundle, ctx.unit);
          const auto& base = amb.bundle.base();
          const auto want = cochain_from_terms(base, *e.ambient_euler_class);
          bool ok = false;
          try {
            ok = class_of(base_slices(amb.bundle), 2, want).coordinates == amb.euler->coordinates;
          } catch (const Error&) {
          }
          rep.expect("ambient euler class [" + base.format(want) + "]", ok,
                     "computed [" + base.format(amb.euler->representative) + "]");
        }
        break;
      case Exp::gamma_vanishes:
        if (e.expect_gamma_vanishes) {
          if (!ctx.bundle) {
            rep.expect("bundle cohomology vanishing", false, "bundle not built");
            break;
          }
          const bool got = ctx.gamma_vanishes();
          rep.expect(std::string("bundle cohomology ") + (*e.expect_gamma_vanishes ? "vanishes" : "nonzero"),
                     got == *e.expect_gamma_vanishes);
        }
        break;
      case Exp::invertible:
        if (e.euler_invertible) {
          const auto ef = ctx.euler();
          if (!ef || !ctx.product) {
            rep.expect("euler class invertibility", false, "needs product data and a valid bundle");
            break;
          }
          bool got = true;
          try {
            invertibility(*ctx.product, ef->representative);
          } catch (const NotInvertible&) {
            got = false;
          }
          rep.expect(std::string("euler class ") + (*e.euler_invertible ? "invertible" : "not invertible"),
                     got == *e.euler_invertible);
        }
        break;
    }
  }
}

DegreeWindow positive_window(const PearlComplex& c) {
  const int N = c.ring().generator_degree;
  if (c.size() == 0) return {-1, N + 2};
  return {std::min(0, c.min_index()) - 1, c.max_index() + N + 2};
}

// -- commands ----------------------------------------------------------------

void cmd_check(const Context& ctx, Report& rep) {
  const auto& c = ctx.laurent;
  const int N = ctx.N();
  rep.line("generators: " + std::to_string(c.size()) + ", N = " + std::to_string(N));
  const auto dd = check_d_squared(c);
  rep.check("d^2 = 0", dd.ok(),
            dd.ok() ? "" : std::to_string(dd.entries.size()) + " nonzero entries, first at " +
                               c.id(dd.entries.front().source) + " -> " + c.id(dd.entries.front().target));
  if (!dd.ok()) return;
  rep.check("euler characteristic balance", euler_characteristic_balanced(c));
  rep.check("morse indices are nonnegative", ctx.morse_indices());
  const auto dims = ctx.qh_dims();
  rep.line("QH dims over one period: " + tuple_str(dims));
  rep.values["cohomology_dims"] = dims;

  rep.check("twist anticommutes with d", ctx.bundle.has_value(), ctx.bundle_error);
  if (ctx.bundle) {
    const auto& b = *ctx.bundle;
    const auto window = default_window(b);
    rep.check("bundle d^2 = 0", check_d_squared(b.total()).ok());
    const auto maps = verify_bundle_maps(b, window);
    rep.check("i is a chain map", maps.i_commutes);
    rep.check("p is a chain map", maps.p_commutes);
    rep.check("p o i = 0", maps.p_after_i_zero);
    rep.check("im i = ker p at chain level", maps.chain_exact);
    rep.check("long exact sequence is exact", long_exact_sequence(b).exact());
    bool agree = true;
    for (int k = 0; k < N; ++k) {
      const auto cmp = connecting_map(b, k);
      agree = agree && cmp.chain_equal && cmp.homology_equal;
    }
    rep.check("connecting map matches the twist", agree);
    rep.values["gamma_dims"] = ctx.gamma_dims();
  }

  if (ctx.product) {
    const auto& pd = *ctx.product;
    const auto leib = check_leibniz(pd);
    std::string detail;
    for (const auto& [x, y] : leib.violations) detail += (detail.empty() ? "" : ", ") + x + "*" + y;
    rep.check("leibniz rule", leib.ok(), detail);
    const auto ring = check_homology_ring(pd);
    rep.check("product unit is closed", ring.unit_closed);
    rep.check("products of cocycles are closed", ring.products_closed);
    rep.check("unit acts as identity on classes", ring.unital);
    rep.check("product is associative on classes", ring.associative);
    if (ctx.bundle) {
      const auto lifted = lift_product(pd, *ctx.bundle);
      const auto lv = check_lifted_product(pd, lifted, *ctx.bundle);
      rep.check("i(x*y) = i(x)*i(y)", lv.i_multiplicative);
      rep.check("p(x*i(y)) = p(x)*y", lv.p_right);
      rep.check("p(i(x)*y) = x*p(y)", lv.p_left);
      rep.check("lifted product satisfies leibniz", lv.leibniz);
      rep.check("lifted unit acts as identity", lv.unit_in_homology);
      const auto dm = delta_equals_mult_eF(*ctx.bundle, pd);
      rep.check("delta(a) = e_F*a = a*e_F", dm.ok());
    }
  }

  if (ctx.bundle && ctx.morse_indices()) {
    const auto pb = ctx.positive_bundle();
    const auto window = positive_window(pb.base());
    rep.check("sigma is a chain map", sigma_report(pb.base(), window).chain_map);
    const auto ladder = comparison_ladder(pb, window);
    rep.check("sigma ladder commutes", ladder.ok());
    const auto theta = theta_ladder(pb, *ctx.bundle, window);
    rep.check("theta ladder commutes", theta.ok());
    const auto inj = injectivity_window(pb.base());
    rep.check("sigma injective below N", inj.injective, "kernel dims " + tuple_str(inj.kernel_dims));
    rep.check("t-multiple pair sequence is exact", inj.pair_chain_exact && inj.pair_les_exact);
    if (ctx.unit) {
      const auto cmp = compare_euler_classes(pb, *ctx.bundle, *ctx.unit);
      rep.check("theta(e_F+) = e_F", cmp.theta_matches);
      rep.check("sigma(e_F+) = e", cmp.sigma_matches);
    }
  }

  if (ctx.bundle && N % 2 == 0) {
    const auto amb = ambient_variant(*ctx.bundle, ctx.unit);
    rep.check("ambient bundle d^2 = 0", check_d_squared(amb.bundle.total()).ok());
    rep.check("delta_M = delta_W + q", amb.delta_relation);
    if (ctx.unit) rep.check("e'_F = e_F + q", amb.euler_relation);
    rep.check("ambient long exact sequence is exact", amb.les.exact());
  }

  verify_expectations(ctx, rep,
                      {Exp::cohomology, Exp::gamma, Exp::classical, Exp::euler, Exp::ambient_euler,
                       Exp::gamma_vanishes, Exp::invertible});
}

void cmd_les(const Context& ctx, Report& rep, const CommandOptions& opt) {
  if (!ctx.bundle) {
    rep.check("twist anticommutes with d", false, ctx.bundle_error);
    return;
  }
  const auto& b = *ctx.bundle;
  if (opt.ambient) {
    const auto amb = ambient_variant(b, ctx.unit);
    const auto les = long_exact_sequence(amb.bundle, opt.window);
    les_lines(rep, les, "QH_M(L)", "QH_M(G)");
    rep.values["les"] = les_json(les);
    rep.check("long exact sequence is exact", les.exact());
    rep.check("delta_M = delta_W + q", amb.delta_relation);
    const auto dims = cohomology(amb.bundle.total()).dims;
    const auto base_dims = cohomology(amb.bundle.base()).dims;
    bool split = true;
    for (int k = 0; k < 2; ++k)
      split = split && dims[static_cast<std::size_t>(k)] ==
                           base_dims[static_cast<std::size_t>(k)] + base_dims[static_cast<std::size_t>((k + 1) % 2)];
    rep.line("QH_M(G) dims over one period: " + tuple_str(dims));
    rep.line(std::string("sequence splits: ") + (split ? "yes" : "no"));
    rep.values["ambient_gamma_dims"] = dims;
    rep.values["splits"] = split;
    if (amb.euler) {
      rep.line("e'_F = " + class_text(amb.bundle.base(), *amb.euler, "QH_M"));
      rep.values["ambient_euler_class"] = amb.bundle.base().format(amb.euler->representative);
      rep.check("e'_F = e_F + q", amb.euler_relation);
    }
    verify_expectations(ctx, rep, {Exp::ambient_euler});
    return;
  }
  const auto les = long_exact_sequence(b, opt.window);
  les_lines(rep, les, "QH(L)", "QH(G)");
  rep.values["les"] = les_json(les);
  rep.check("long exact sequence is exact", les.exact());
  const auto dims = ctx.gamma_dims();
  rep.line("QH(G) dims over one period: " + tuple_str(dims));
  rep.line(std::string("QH(G) = 0: ") + (ctx.gamma_vanishes() ? "yes" : "no"));
  rep.values["gamma_dims"] = dims;
  rep.values["gamma_vanishes"] = ctx.gamma_vanishes();
  if (const auto ef = ctx.euler()) {
    rep.line("e_F = " + class_text(ctx.laurent, *ef, "QH"));
    rep.values["euler_class"] = ctx.laurent.format(ef->representative);
  }
  verify_expectations(ctx, rep, {Exp::cohomology, Exp::gamma, Exp::gamma_vanishes, Exp::euler});
}

void cmd_euler(const Context& ctx, Report& rep) {
  if (!ctx.bundle) {
    rep.check("twist anticommutes with d", false, ctx.bundle_error);
    return;
  }
  if (!ctx.unit) {
    rep.check("unit is given", false, "the dataset has no unit");
    return;
  }
  const auto ef = *ctx.euler();
  rep.line("e_F = " + class_text(ctx.laurent, ef, "QH"));
  rep.values["euler_class"] = ctx.laurent.format(ef.representative);
  rep.values["euler_coordinates"] = ef.coordinates.str();
  rep.values["euler_zero"] = ef.is_zero();
  if (ctx.product) {
    try {
      const auto inv = invertibility(*ctx.product, ef.representative);
      rep.line("e_F is invertible, inverse [" + ctx.laurent.format(inv.representative) + "]");
      rep.values["inverse"] = ctx.laurent.format(inv.representative);
    } catch (const NotInvertible& e) {
      rep.line(std::string("e_F is not invertible: ") + e.what());
      rep.values["inverse"] = nullptr;
    }
  }
  if (ctx.morse_indices()) {
    const auto pb = ctx.positive_bundle();
    const auto cmp = compare_euler_classes(pb, *ctx.bundle, *ctx.unit);
    rep.line("classical e = " + (cmp.classical.is_zero() ? std::string("0")
                                                         : "[" + pb.base().format(cmp.classical.representative) + "]"));
    rep.values["classical_euler_zero"] = cmp.classical.is_zero();
    rep.check("sigma(e_F+) = e", cmp.sigma_matches);
    rep.check("theta(e_F+) = e_F", cmp.theta_matches);
  }
  if (ctx.data.module_action) {
    for (const auto& cls : ctx.data.module_action->ambient_classes) {
      if (cls.degree != 2) continue;
      const auto r = quantum_restriction(ctx.laurent, *ctx.data.module_action, cls.id, *ctx.unit);
      rep.line("r(" + cls.id + ") = " + class_text(ctx.laurent, r, "QH"));
      rep.check("r(" + cls.id + ") = e_F", r.coordinates == ef.coordinates);
    }
  }
  verify_expectations(ctx, rep, {Exp::euler, Exp::invertible});
}

void cmd_product(const Context& ctx, Report& rep) {
  if (!ctx.product) {
    rep.line("no product data");
    return;
  }
  const auto& pd = *ctx.product;
  const auto leib = check_leibniz(pd);
  rep.check("leibniz rule", leib.ok());
  const auto ring = check_homology_ring(pd);
  rep.check("unit", ring.unit_closed && ring.unital);
  rep.check("associativity", ring.products_closed && ring.associative);
  rep.values["leibniz"] = leib.ok();
  rep.values["associative"] = ring.associative;
  if (ctx.bundle) {
    const auto lifted = lift_product(pd, *ctx.bundle);
    const auto lv = check_lifted_product(pd, lifted, *ctx.bundle);
    rep.check("lifted product identities", lv.identities());
    rep.check("delta(a) = e_F*a = a*e_F", delta_equals_mult_eF(*ctx.bundle, pd).ok());
    const auto ef = *ctx.euler();
    bool invertible = true;
    try {
      invertibility(pd, ef.representative);
    } catch (const NotInvertible&) {
      invertible = false;
    }
    rep.line(std::string("e_F invertible: ") + (invertible ? "yes" : "no"));
    rep.values["euler_invertible"] = invertible;
    rep.check("e_F invertible iff QH(G) = 0 and QH(L) != 0",
              invertible == (ctx.gamma_vanishes() && ctx.qh_dims() != std::vector<std::size_t>(ctx.qh_dims().size(), 0)));
  }
  verify_expectations(ctx, rep, {Exp::invertible});
}

void cmd_classical(const Context& ctx, Report& rep, const CommandOptions& opt) {
  const auto cg = classical_gysin(ctx.data.pearl, ctx.twist);
  rep.line("degrees " + std::to_string(cg.dims_window.lo) + ".." + std::to_string(cg.dims_window.hi));
  rep.line("H(L):  " + tuple_str(cg.base_dims));
  rep.line("H(G):  " + tuple_str(cg.total_dims));
  rep.values["base_dims"] = cg.base_dims;
  rep.values["gamma_dims"] = cg.total_dims;
  const auto les = opt.window ? long_exact_sequence(cg.bundle, opt.window, ExponentRange{0, 0}) : cg.les;
  les_lines(rep, les, "H(L)", "H(G)");
  rep.values["les"] = les_json(les);
  rep.check("classical sequence is exact", les.exact());
  verify_expectations(ctx, rep, {Exp::classical});
}

void cmd_periodicity(const Context& ctx, Report& rep) {
  const auto dims = ctx.qh_dims();
  rep.line("QH dims over one period: " + tuple_str(dims));
  rep.values["cohomology_dims"] = dims;
  if (ctx.bundle) {
    const bool vanishes = ctx.gamma_vanishes();
    const auto v = periodicity_check(dims, ctx.N(), vanishes);
    if (!v.applicable) {
      rep.line("2-periodic: not applicable (QH(G) != 0)");
    } else {
      rep.line(std::string("2-periodic: ") + (v.periodic ? "yes" : "no"));
      rep.check("2-periodicity", v.periodic);
    }
    rep.values["applicable"] = v.applicable;
    rep.values["periodic"] = v.periodic;
    if (ctx.unit && ctx.morse_indices()) {
      const auto cmp = compare_euler_classes(ctx.positive_bundle(), *ctx.bundle, *ctx.unit);
      bool qh_nonzero = false;
      for (auto d : dims) qh_nonzero = qh_nonzero || d != 0;
      const auto sub = subcritical_euler_check(ctx.N(), qh_nonzero, vanishes, !cmp.classical.is_zero());
      if (sub) rep.check("classical euler class nonzero", *sub);
    }
  } else {
    rep.check("twist anticommutes with d", false, ctx.bundle_error);
  }
  if (ctx.data.pearl.betti_hint) {
    const bool holds = narrowness_obstruction(*ctx.data.pearl.betti_hint, ctx.N());
    rep.line(std::string("non-narrowness criterion: ") + (holds ? "holds (QH != 0)" : "inconclusive"));
    rep.values["narrowness_criterion"] = holds;
  }
  verify_expectations(ctx, rep, {Exp::cohomology, Exp::gamma_vanishes});
}

}  // namespace

DegreeWindow parse_window(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw SchemaError("window must look like a..b, got '" + text + "'");
  DegreeWindow w{std::stoi(m[1]), std::stoi(m[2])};
  if (w.hi < w.lo) throw SchemaError("window " + text + " is empty");
  return w;
}

std::filesystem::path resolve_dataset_path(const std::string& arg) {
  std::filesystem::path p(arg);
  if (std::filesystem::exists(p)) return p;
  if (const char* dir = std::getenv("ENGINE_CORPUS_DIR")) {
    std::filesystem::path q = std::filesystem::path(dir) / p;
    if (std::filesystem::exists(q)) return q;
    if (q.extension() != ".json") {
      q += ".json";
      if (std::filesystem::exists(q)) return q;
    }
  }
  return p;
}

int run_command(const std::string& command, const std::string& file, const CommandOptions& options,
                std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> known{"check", "les", "euler", "product", "classical", "periodicity", "fmt"};
  if (std::find(known.begin(), known.end(), command) == known.end()) {
    err << "unknown command '" << command << "'\n";
    return kExitInput;
  }
  const auto path = resolve_dataset_path(file);
  DatasetFile data;
  try {
    data = load_dataset(path);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (command == "fmt") {
    const auto text = format_dataset(data);
    if (options.write) {
      save_dataset(data, path);
    } else {
      out << text;
    }
    return kExitOk;
  }

  std::optional<Context> built;
  try {
    built.emplace(data);
  } catch (const DegreeViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnknownGenerator& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidData& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Report rep;
  try {
    const Context& ctx = *built;
    if (command == "check")
      cmd_check(ctx, rep);
    else if (command == "les")
      cmd_les(ctx, rep, options);
    else if (command == "euler")
      cmd_euler(ctx, rep);
    else if (command == "product")
      cmd_product(ctx, rep);
    else if (command == "classical")
      cmd_classical(ctx, rep, options);
    else
      cmd_periodicity(ctx, rep);
  } catch (const Error& e) {
    rep.check("dataset builds", false, e.what());
  }
  rep.print(out, options.json, command, data.pearl.name);
  return rep.exit_code();
}

}  // namespace pearl
