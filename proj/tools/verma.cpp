// verma: command-line front end. Every report is a JSON object carrying
// "schema":"verma/1" and the budgets it ran with. Exit codes:
//   0 ok, 2 invalid input, 3 truncation or insufficient data, 4 invariant breach.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verma/checks.hpp"
#include "verma/json_io.hpp"
#include "verma/recurrence.hpp"
#include "verma/rootsys.hpp"
#include "verma/shapovalov.hpp"
#include "verma/singular.hpp"

using namespace verma;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kUndetermined = 3, kBreach = 4 };

// ---------------------------------------------------------------------------
// Command table

struct FlagSpec {
  std::string key;
  std::string help;
  bool repeatable = false;
  bool is_flag = false;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<FlagSpec> flags;
  std::vector<std::string> required;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> table = {
      {"expand",
       "Laurent expansion of a rational function at u = infinity",
       {{"mu", "rational function, e.g. \"(u+2)/(u+1)\""}, {"order", "number of u^-1 coefficients (default 8)"}},
       {"mu"}},
      {"detect",
       "linear recurrence search on a coefficient tail",
       {{"coeffs", "tail nu_1,nu_2,... as comma separated rationals"},
        {"max_order", "largest recurrence order tried (default 3)"}},
       {"coeffs"}},
      {"act",
       "apply a word of generators to a vector of M(mu)",
       {{"mu", "rational weight (canonical realization)"},
        {"coeffs", "truncated weight tail (lambda1 = mu, lambda2 = 1)"},
        {"word", "letters right to left acting last first, e.g. \"t12:1,t21:2\" or \"e:0,f:1\""},
        {"mono", "ascending t21 indices of the start monomial (default: highest vector)"},
        {"vector", "start vector as JSON {\"terms\":[{\"mono\":[..],\"coef\":\"..\"}]}"}},
       {"word"}},
      {"singular",
       "singular vectors at a level among f-monomials of bounded index sum",
       {{"mu", "rational weight"},
        {"coeffs", "truncated weight tail"},
        {"level", "level of the search (default 1)"},
        {"degree", "bound D on the index sum (default 1)"}},
       {}},
      {"gram",
       "ranks of the contravariant form on levels 0..max-level",
       {{"mu", "rational weight"}, {"max_level", "largest level (default 3)"}},
       {"mu"}},
      {"character",
       "irreducible quotient dimensions from the root strings of P and Q",
       {{"mu", "rational weight with P, Q split over Q"}, {"max_level", "largest level (default 3)"}},
       {"mu"}},
      {"roots",
       "positive roots, symmetrizers and spanning counts of a Cartan matrix",
       {{"cartan", "type label such as \"G2\" or JSON rows \"[[2,-1],[-1,2]]\""},
        {"p", "degrees p_i for a spanning count, e.g. \"1,1\""},
        {"k", "weight k for a spanning count, e.g. \"1,1\""}},
       {"cartan"}},
      {"verdict",
       "reducibility and finiteness verdicts for a tuple of weight components",
       {{"mu", "one component: a rational function, or a coefficient tail \"1,1/2,...\"", true},
        {"cartan", "Cartan matrix for the finite-dimensionality criterion"},
        {"budget", "recurrence order budget (default 3)"}},
       {"mu"}},
      {"selftest",
       "invariant suite at desk scale (levels <= 2, degrees <= 4, r <= 3)",
       {{"seed", "seed of the random test weights (default 0)"},
        {"inject_fault", "flip the commutator sign in the module action", false, true}},
       {}},
  };
  return table;
}

const CommandSpec* find_command(const std::string& name) {
  for (const auto& c : commands())
    if (c.name == name) return &c;
  return nullptr;
}

std::string flag_of(const std::string& key) {
  std::string out = "--" + key;
  for (char& ch : out)
    if (ch == '_') ch = '-';
  return out;
}

// ---------------------------------------------------------------------------
// Parameter access. Values come either from flags (strings) or from a JSON
// record (typed); both are validated here before any computation.

class Params {
 public:
  explicit Params(json j) : j_(std::move(j)) {}

  bool has(const std::string& k) const { return j_.contains(k); }
  const json& raw() const { return j_; }

  std::size_t count(const std::string& k, std::size_t def) const {
    if (!has(k)) return def;
    const json& v = j_[k];
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    if (v.is_number_integer()) fail(k, "must be a nonnegative integer");
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
        fail(k, "must be a nonnegative integer");
      return std::stoul(s);
    }
    fail(k, "must be a nonnegative integer");
  }

  std::string str(const std::string& k) const {
    const json& v = j_.at(k);
    if (!v.is_string()) fail(k, "must be a string");
    return v.get<std::string>();
  }

  bool flag(const std::string& k) const {
    if (!has(k)) return false;
    if (!j_[k].is_boolean()) fail(k, "must be a boolean");
    return j_[k].get<bool>();
  }

  std::vector<Rat> rat_list(const std::string& k) const {
    const json& v = j_.at(k);
    if (v.is_string()) return parse_rat_list(v.get<std::string>());
    if (!v.is_array()) fail(k, "must be a comma separated string or an array");
    std::vector<Rat> out;
    for (const auto& x : v) {
      if (x.is_string()) out.push_back(Rat::parse(x.get<std::string>()));
      else if (x.is_number_integer()) out.emplace_back(x.get<long>());
      else fail(k, "entries must be rational strings or integers");
    }
    return out;
  }

  std::vector<long> long_list(const std::string& k) const {
    std::vector<long> out;
    for (const Rat& r : rat_list(k)) {
      if (!r.is_integer() || !r.numerator().fits_slong_p()) fail(k, "entries must be integers");
      out.push_back(r.numerator().get_si());
    }
    return out;
  }

  std::vector<std::string> str_list(const std::string& k) const {
    const json& v = j_.at(k);
    if (v.is_string()) return {v.get<std::string>()};
    if (!v.is_array() || v.empty()) fail(k, "must be a string or a nonempty array of strings");
    std::vector<std::string> out;
    for (const auto& x : v) {
      if (!x.is_string()) fail(k, "entries must be strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  IntMatrix cartan(const std::string& k) const {
    const json& v = j_.at(k);
    if (v.is_array()) return cartan_from_json(v);
    return parse_cartan(str(k));
  }

  [[noreturn]] static void fail(const std::string& k, const std::string& why) {
    throw invalid_input("parameter \"" + k + "\" " + why);
  }

 private:
  json j_;
};

// ---------------------------------------------------------------------------
// Weights

struct Weight {
  WeightInput input;
  json echo;
};

Weight weight_from(const Params& ps) {
  if (ps.has("mu") && ps.has("coeffs")) throw invalid_input("give either \"mu\" or \"coeffs\", not both");
  if (ps.has("mu")) {
    RationalFn f = parse_rational_fn(ps.str("mu"));
    return {f, {{"mu", format_rational_fn(f)}}};
  }
  if (ps.has("coeffs")) {
    auto tail = ps.rat_list("coeffs");
    return {SeriesU::from_tail(tail, false), {{"coeffs", rat_list_json(tail)}, {"order", tail.size()}}};
  }
  throw invalid_input("a weight is required: \"mu\" or \"coeffs\"");
}

RationalFn rational_from(const Params& ps) { return parse_rational_fn(ps.str("mu")); }

/// Verdict components: text containing "u" is a rational function, otherwise a coefficient tail.
WeightInput component_from(const std::string& text) {
  if (text.find('u') != std::string::npos) return parse_rational_fn(text);
  return SeriesU::from_tail(parse_rat_list(text), false);
}

json component_echo(const WeightInput& w) {
  if (const auto* f = std::get_if<RationalFn>(&w)) return format_rational_fn(*f);
  return rat_list_json(series_tail(std::get<SeriesU>(w)));
}

json report(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

void merge(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

// ---------------------------------------------------------------------------
// Commands. Each returns the report and sets the exit code.

json cmd_expand(const Params& ps, unsigned, int&) {
  RationalFn f = rational_from(ps);
  std::size_t order = ps.count("order", 8);
  SeriesU s = expand_rational(f, order);
  std::vector<Rat> c;
  for (std::size_t r = 0; r <= order; ++r) c.push_back(s[r]);
  json out = report("expand");
  out["mu"] = format_rational_fn(f);
  out["order"] = order;
  out["coeffs"] = rat_list_json(c);
  out["series"] = format_series(SeriesU(c, false));
  return out;
}

json cmd_detect(const Params& ps, unsigned, int&) {
  auto tail = ps.rat_list("coeffs");
  std::size_t max_order = ps.count("max_order", 3);
  auto w = detect_recurrence(tail, max_order);
  json out = report("detect");
  out["max_order"] = max_order;
  out["length"] = tail.size();
  out["verdict"] = to_string(w ? RationalityKind::rational : RationalityKind::no_recurrence_up_to);
  out["witness"] = w ? to_json(*w) : json(nullptr);
  out["rational"] = w ? json(format_rational_fn(w->recovered)) : json(nullptr);
  return out;
}

std::vector<std::pair<std::string, unsigned>> parse_word(const std::string& text) {
  std::vector<std::pair<std::string, unsigned>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    auto colon = item.find(':');
    if (colon == std::string::npos) throw invalid_input("word letter '" + item + "' must look like name:index");
    std::string name = item.substr(0, colon), idx = item.substr(colon + 1);
    static const std::vector<std::string> names = {"t11", "t12", "t21", "t22", "e", "f", "h"};
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw invalid_input("unknown generator '" + name + "'");
    if (idx.empty() || idx.size() > 6 || idx.find_first_not_of("0123456789") != std::string::npos)
      throw invalid_input("index of '" + item + "' must be a nonnegative integer");
    out.emplace_back(name, static_cast<unsigned>(std::stoul(idx)));
  }
  if (out.empty()) throw invalid_input("word is empty");
  return out;
}

json cmd_act(const Params& ps, unsigned, int&) {
  Weight w = weight_from(ps);
  auto word = parse_word(ps.str("word"));
  if (ps.has("mono") && ps.has("vector")) throw invalid_input("give either \"mono\" or \"vector\", not both");
  ModuleVector v = ModuleVector::highest();
  if (ps.has("mono")) {
    std::vector<unsigned> idx;
    for (long x : ps.long_list("mono")) {
      if (x < 1) Params::fail("mono", "indices must be positive");
      idx.push_back(static_cast<unsigned>(x));
    }
    Monomial m(idx);
    if (m.indices() != idx) Params::fail("mono", "indices must be ascending");
    v = ModuleVector(m);
  } else if (ps.has("vector")) {
    const json& jv = ps.raw()["vector"];
    v = module_vector_from_json(jv.is_string() ? json::parse(jv.get<std::string>()) : jv);
  }
  VermaModule mod(realization(w.input));
  json out = report("act");
  merge(out, w.echo);
  out["word"] = ps.str("word");
  out["input"] = to_json(v);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto& [name, r] = *it;
    if (name == "e") v = act_e(mod, r, v);
    else if (name == "f") v = act_f(mod, r, v);
    else if (name == "h") v = act_h(mod, r, v);
    else v = mod.act(gen(name[1] - '0', name[2] - '0'), r, v);
  }
  out["result"] = to_json(v);
  return out;
}

json cmd_singular(const Params& ps, unsigned workers, int&) {
  Weight w = weight_from(ps);
  std::size_t level = ps.count("level", 1);
  std::size_t degree = ps.count("degree", 1);
  auto res = find_singular(w.input, level, static_cast<long>(degree), {.workers = workers});
  json out = report("singular");
  merge(out, w.echo);
  merge(out, to_json(res));
  if (const auto* f = std::get_if<RationalFn>(&w.input); f && level == 1) {
    json ex = json::array();
    for (std::size_t s = f->degree(); s <= degree; ++s) {
      auto z = twisted_singular_vector(*f, static_cast<unsigned>(s));
      ex.push_back({{"s", s}, {"f_coeffs", rat_list_json(z.f_coeffs)}, {"vector", to_json(z.vector)}});
    }
    out["explicit"] = ex;
  }
  return out;
}

json cmd_gram(const Params& ps, unsigned workers, int&) {
  RationalFn f = rational_from(ps);
  std::size_t max_level = ps.count("max_level", 3);
  auto reps = l_weight_dims(f, max_level, workers);
  json out = report("gram");
  out["mu"] = format_rational_fn(f);
  out["max_level"] = max_level;
  json levels = json::array(), dims = json::array();
  for (const auto& r : reps) {
    levels.push_back(to_json(r));
    dims.push_back(r.rank);
  }
  out["levels"] = levels;
  out["dims"] = dims;
  return out;
}

json cmd_character(const Params& ps, unsigned, int&) {
  RationalFn f = rational_from(ps);
  std::size_t max_level = ps.count("max_level", 3);
  json out = report("character");
  out["mu"] = format_rational_fn(f);
  out["max_level"] = max_level;
  merge(out, to_json(character_formula(f, max_level)));
  return out;
}

json cmd_roots(const Params& ps, unsigned, int&) {
  CartanData cd(ps.cartan("cartan"));
  constexpr long kHeightCap = 100;
  auto rs = positive_roots(cd.A, kHeightCap);
  json out = report("roots");
  out["cartan"] = cd.A;
  out["height_cap"] = kHeightCap;
  out["symmetrizers"] = cd.d;
  merge(out, to_json(rs));
  if (ps.has("p") != ps.has("k")) throw invalid_input("a spanning count needs both \"p\" and \"k\"");
  if (ps.has("p")) {
    auto p = ps.long_list("p"), k = ps.long_list("k");
    out["spanning_count"] = {{"p", p}, {"k", k}, {"count", spanning_count(p, k, cd.A).get_str()}};
  }
  return out;
}

json verdict_json(const std::vector<RationalityVerdict>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

json cmd_verdict(const Params& ps, unsigned, int& code) {
  HighestWeightTuple mu;
  for (const auto& s : ps.str_list("mu")) mu.push_back(component_from(s));
  std::size_t budget = ps.count("budget", 3);
  auto red = verdict_reducible(mu, budget);
  auto fin = verdict_weight_finiteness(mu, budget);
  json out = report("verdict");
  json comps = json::array();
  for (const auto& c : mu) comps.push_back(component_echo(c));
  out["mu"] = comps;
  out["budget"] = budget;
  out["components"] = verdict_json(red.components);
  out["reducible"] = to_string(red.overall);
  out["weight_finiteness"] = to_string(fin.overall);
  if (ps.has("cartan")) {
    CartanData cd(ps.cartan("cartan"));
    out["cartan"] = cd.A;
    out["symmetrizers"] = cd.d;
    out["finite_dimensional"] = to_string(verdict_finite_dimensional(mu, cd));
  } else {
    out["finite_dimensional"] = nullptr;
  }
  if (red.overall == Reducibility::undetermined || fin.overall == WeightFiniteness::undetermined)
    code = kUndetermined;
  return out;
}

// ---------------------------------------------------------------------------
// selftest

Rat random_rat(std::mt19937_64& rng, long height) {
  long num = static_cast<long>(rng() % (2 * height + 1)) - height;
  long den = static_cast<long>(rng() % height) + 1;
  return Rat(num, den);
}

PolyQ random_monic(std::mt19937_64& rng, std::size_t deg) {
  std::vector<Rat> c(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c[i] = random_rat(rng, 9);
  c[deg] = Rat(1);
  return PolyQ(c);
}

/// Product of (u + a_i) over the given integer roots.
PolyQ split_poly(const std::vector<long>& as) {
  PolyQ p(Rat(1));
  for (long a : as) p = p * PolyQ(std::vector<Rat>{Rat(a), Rat(1)});
  return p;
}

struct Property {
  std::string name;
  CheckReport rep;
};

json cmd_selftest(const Params& ps, unsigned workers, int& code) {
  constexpr unsigned kMaxR = 3;
  constexpr std::size_t kMaxLevel = 2;
  constexpr unsigned kMaxDegree = 4;
  constexpr std::size_t kTruncation = 16;
  const std::size_t seed = ps.count("seed", 0);
  const bool fault = ps.flag("inject_fault");
  std::mt19937_64 rng(seed);

  RationalFn fixed = parse_rational_fn("(u+2)/(u+1)");
  std::size_t rdeg = 1 + rng() % 2;
  RationalFn random_mu(random_monic(rng, rdeg), random_monic(rng, rdeg));
  std::vector<Rat> a, b;
  for (std::size_t r = 0; r < kTruncation; ++r) {
    a.push_back(random_rat(rng, 9));
    b.push_back(random_rat(rng, 9));
  }
  struct TestWeight {
    std::string name;
    HighestWeightGL2 hw;
    std::optional<RationalFn> mu;
  };
  std::vector<TestWeight> weights = {
      {format_rational_fn(fixed), canonical_polynomial_weights(fixed), fixed},
      {format_rational_fn(random_mu), canonical_polynomial_weights(random_mu), random_mu},
      {"truncated order " + std::to_string(kTruncation),
       {SeriesU::from_tail(a, false), SeriesU::from_tail(b, false)},
       std::nullopt},
  };
  ActionOptions opts{.memoize = true, .inject_sign_flip = fault};

  std::vector<Property> props;
  auto run = [&](const std::string& name, auto&& body) {
    Property p{name, {}};
    try {
      body(p.rep);
    } catch (const std::exception& e) {
      p.rep.record(false, std::string("exception: ") + e.what());
    }
    props.push_back(std::move(p));
  };
  auto absorb = [](CheckReport& into, const CheckReport& r, const std::string& tag) {
    into.checked += r.checked;
    if (r.failures && !into.failures) into.first_failure = tag + ": " + r.first_failure;
    into.failures += r.failures;
  };

  run("relation_consistency", [&](CheckReport& rep) {
    for (const auto& w : weights)
      absorb(rep, relation_suite(VermaModule(w.hw, opts), kMaxR, kMaxLevel, kMaxDegree), w.name);
  });
  run("centrality", [&](CheckReport& rep) {
    for (const auto& w : weights)
      absorb(rep, centrality_suite(VermaModule(w.hw, opts), kMaxR, kMaxLevel, kMaxDegree), w.name);
  });
  run("k_stability", [&](CheckReport& rep) {
    for (const auto& w : weights)
      if (w.mu)
        absorb(rep,
               k_stability_suite(VermaModule(w.hw, opts), static_cast<unsigned>(w.mu->degree()), kMaxR, kMaxLevel,
                                 kMaxDegree),
               w.name);
  });
  run("drinfeld_relations", [&](CheckReport& rep) {
    for (const auto& w : weights)
      absorb(rep, drinfeld_suite(VermaModule(w.hw, opts), kMaxR + 1, kMaxLevel, kMaxDegree), w.name);
  });
  run("h_routes", [&](CheckReport& rep) {
    for (const auto& w : weights)
      absorb(rep, h_route_suite(VermaModule(w.hw, opts), kMaxR, kMaxLevel, kMaxDegree), w.name);
  });
  run("h_highest", [&](CheckReport& rep) {
    for (const auto& w : weights) absorb(rep, h_highest_suite(VermaModule(w.hw, opts), kMaxR), w.name);
  });
  run("recurrence_round_trip", [&](CheckReport& rep) {
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t deg = 1 + rng() % 4;
      RationalFn f(random_monic(rng, deg), random_monic(rng, deg));
      SeriesU s = expand_rational(f, 2 * deg + 4);
      std::vector<Rat> tail;
      for (std::size_t r = 1; r <= 2 * deg + 4; ++r) tail.push_back(s[r]);
      auto w = detect_recurrence(tail, deg);
      rep.record(w && w->recovered == f && recurrence_holds(tail, w->c, w->N), format_rational_fn(f));
    }
  });
  run("singular_dimension", [&](CheckReport& rep) {
    for (const auto& w : weights) {
      if (!w.mu) continue;
      const long p = static_cast<long>(w.mu->degree());
      for (long D = p; D <= std::min<long>(p + 1, kMaxDegree); ++D) {
        auto res = find_singular(*w.mu, 1, D, {.workers = workers});
        bool ok = static_cast<long>(res.basis.size()) == D - p + 1;
        VermaModule mod(realization(*w.mu), opts);
        for (const auto& z : res.basis) ok = ok && verify_singular(z, mod, 2 * kMaxR);
        rep.record(ok, w.name + " D=" + std::to_string(D));
      }
    }
  });
  run("explicit_singular", [&](CheckReport& rep) {
    for (const auto& w : weights) {
      if (!w.mu) continue;
      VermaModule mod(w.hw, opts);
      for (unsigned s = static_cast<unsigned>(w.mu->degree()); s <= w.mu->degree() + 2; ++s)
        rep.record(verify_singular(twisted_singular_vector(*w.mu, s, w.hw).vector, mod, 2 * kMaxR),
                   w.name + " s=" + std::to_string(s));
    }
  });
  run("gram_vs_character", [&](CheckReport& rep) {
    std::vector<long> roots_p{static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)};
    std::vector<long> roots_q{static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)};
    std::vector<RationalFn> mus = {parse_rational_fn("(u+3)/(u+1)"), parse_rational_fn("(u+2)^2/(u+1)^2"),
                                   RationalFn(split_poly(roots_p), split_poly(roots_q))};
    for (const auto& mu : mus) {
      auto ch = character_formula(mu, kMaxLevel);
      auto g = l_weight_dims(mu, kMaxLevel, workers);
      for (std::size_t k = 0; k <= kMaxLevel; ++k)
        rep.record(Integer(static_cast<unsigned long>(g[k].rank)) == ch.dims[k],
                   format_rational_fn(mu) + " level " + std::to_string(k));
    }
  });
  run("root_counts", [&](CheckReport& rep) {
    const std::vector<std::pair<std::string, std::size_t>> expect = {
        {"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4}, {"B3", 9}, {"C3", 9}, {"D4", 12}, {"G2", 6}, {"F4", 24}};
    for (const auto& [label, n] : expect)
      rep.record(positive_roots(cartan_of_type(label)).positive_roots.size() == n, label);
  });
  run("spanning_count_sl2", [&](CheckReport& rep) {
    auto a1 = cartan_of_type("A1");
    for (long p = 1; p <= 4; ++p)
      for (long k = 0; k <= 6; ++k)
        rep.record(spanning_count({p}, {k}, a1) ==
                       binomial(static_cast<unsigned long>(p + k - 1), static_cast<unsigned long>(k)),
                   "p=" + std::to_string(p) + " k=" + std::to_string(k));
  });

  json out = report("selftest");
  out["seed"] = seed;
  out["inject_fault"] = fault;
  out["scale"] = {{"max_level", kMaxLevel}, {"max_degree", kMaxDegree}, {"max_r", kMaxR},
                  {"truncation", kTruncation}};
  out["weights"] = json::array();
  for (const auto& w : weights) out["weights"].push_back(w.name);
  json list = json::array();
  bool all = true;
  for (const auto& p : props) {
    json e = {{"name", p.name}, {"checked", p.rep.checked}, {"failures", p.rep.failures}, {"pass", p.rep.ok()}};
    if (!p.rep.ok()) e["first_failure"] = p.rep.first_failure;
    list.push_back(e);
    all = all && p.rep.ok();
  }
  out["properties"] = list;
  out["pass"] = all;
  if (!all) code = kBreach;
  return out;
}

using Handler = json (*)(const Params&, unsigned, int&);

Handler handler_of(const std::string& name) {
  static const std::map<std::string, Handler> table = {
      {"expand", cmd_expand},   {"detect", cmd_detect}, {"act", cmd_act},         {"singular", cmd_singular},
      {"gram", cmd_gram},       {"character", cmd_character}, {"roots", cmd_roots}, {"verdict", cmd_verdict},
      {"selftest", cmd_selftest}};
  return table.at(name);
}

// ---------------------------------------------------------------------------
// Job assembly: flags plus an optional JSON record.

struct Job {
  std::string command;
  json params = json::object();
  std::string output;
  unsigned workers = 1;
};

json load_json_arg(const std::string& text) {
  try {
    if (!text.empty() && text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw invalid_input("cannot read JSON file " + text.substr(1));
      return json::parse(in);
    }
    return json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("malformed JSON record: ") + e.what());
  }
}

/// Accepts {"command","parameters","output","schema"} or a bare parameter object.
void apply_record(Job& job, const json& rec) {
  if (!rec.is_object()) throw invalid_input("JSON record must be an object");
  json params;
  bool is_job = rec.contains("parameters") || rec.contains("command");
  if (is_job) {
    for (auto it = rec.begin(); it != rec.end(); ++it)
      if (it.key() != "command" && it.key() != "parameters" && it.key() != "output" && it.key() != "schema")
        throw invalid_input("unknown job field \"" + it.key() + "\"");
    if (rec.contains("schema") && rec["schema"] != kSchema)
      throw invalid_input(std::string("unsupported schema; expected ") + kSchema);
    if (rec.contains("command")) {
      if (!rec["command"].is_string()) throw invalid_input("\"command\" must be a string");
      std::string c = rec["command"].get<std::string>();
      if (!job.command.empty() && job.command != c)
        throw invalid_input("JSON record is for command \"" + c + "\", not \"" + job.command + "\"");
      job.command = c;
    }
    if (rec.contains("output")) {
      if (!rec["output"].is_string()) throw invalid_input("\"output\" must be a string");
      if (job.output.empty()) job.output = rec["output"].get<std::string>();
    }
    params = rec.value("parameters", json::object());
    if (!params.is_object()) throw invalid_input("\"parameters\" must be an object");
  } else {
    params = rec;
  }
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (job.params.contains(it.key()))
      throw invalid_input("parameter \"" + it.key() + "\" given both as a flag and in the JSON record");
    job.params[it.key()] = it.value();
  }
}

void validate(const Job& job) {
  const CommandSpec* spec = find_command(job.command);
  if (!spec) throw invalid_input("unknown command \"" + job.command + "\"");
  for (auto it = job.params.begin(); it != job.params.end(); ++it) {
    bool known = std::any_of(spec->flags.begin(), spec->flags.end(), [&](const auto& f) { return f.key == it.key(); });
    if (!known) throw invalid_input("command \"" + job.command + "\" has no parameter \"" + it.key() + "\"");
  }
  for (const auto& r : spec->required)
    if (!job.params.contains(r)) throw invalid_input("command \"" + job.command + "\" requires \"" + r + "\"");
}

unsigned resolve_workers(unsigned flag) {
  const char* env = std::getenv("VERMA_WORKERS");
  if (!env) return std::max(1u, flag);
  std::string s(env);
  if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos)
    throw invalid_input("VERMA_WORKERS must be a positive integer");
  return std::max(1u, static_cast<unsigned>(std::stoul(s)));
}

void emit(const json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("cannot write " + path);
  out << text;
}

int fail(const std::string& command, const std::string& kind, const std::string& message, int code,
         const std::string& output) {
  json e = {{"schema", kSchema}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << "verma: " << kind << ": " << message << "\n";
  try {
    emit(e, output);
  } catch (const std::exception&) {
    std::cout << e.dump(2) << "\n";
  }
  return code;
}

int run_job(Job job) {
  try {
    validate(job);
    int code = kOk;
    json out = handler_of(job.command)(Params(job.params), job.workers, code);
    emit(out, job.output);
    return code;
  } catch (const truncation_error& e) {
    return fail(job.command, "truncation", e.what(), kUndetermined, job.output);
  } catch (const insufficient_data& e) {
    return fail(job.command, "insufficient_data", e.what(), kUndetermined, job.output);
  } catch (const invalid_input& e) {
    return fail(job.command, "invalid_input", e.what(), kInvalid, job.output);
  } catch (const unsupported_input& e) {
    return fail(job.command, "unsupported_input", e.what(), kInvalid, job.output);
  } catch (const non_finite_type& e) {
    return fail(job.command, "non_finite_type", e.what(), kInvalid, job.output);
  } catch (const json::exception& e) {
    return fail(job.command, "invalid_input", e.what(), kInvalid, job.output);
  } catch (const std::exception& e) {
    return fail(job.command, "invariant_breach", e.what(), kBreach, job.output);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verma: Verma modules of the Yangian of gl2, exact arithmetic"};
  app.require_subcommand(1);

  struct Bound {
    CLI::App* sub;
    const CommandSpec* spec;
    std::map<std::string, std::string> values;
    std::map<std::string, std::vector<std::string>> lists;
    std::map<std::string, bool> flags;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  std::string json_arg, output;
  unsigned workers = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", json_arg, "parameter record: JSON text or @file");
    sub->add_option("--workers", workers, "worker threads (VERMA_WORKERS overrides)")->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "write the report to a file instead of standard output");
  };

  for (const auto& spec : commands()) {
    auto b = std::make_unique<Bound>();
    b->spec = &spec;
    b->sub = app.add_subcommand(spec.name, spec.help);
    for (const auto& f : spec.flags) {
      if (f.is_flag) b->sub->add_flag(flag_of(f.key), b->flags[f.key], f.help);
      else if (f.repeatable) b->sub->add_option(flag_of(f.key), b->lists[f.key], f.help)->allow_extra_args(false);
      else b->sub->add_option(flag_of(f.key), b->values[f.key], f.help);
    }
    add_common(b->sub);
    bound.push_back(std::move(b));
  }
  CLI::App* run = app.add_subcommand("run", "execute a JSON job record {\"command\",\"parameters\",\"output\"}");
  add_common(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("", "invalid_input", e.what(), kInvalid, "");
  }

  Job job;
  job.output = output;
  try {
    job.workers = resolve_workers(workers);
    for (const auto& b : bound) {
      if (!b->sub->parsed()) continue;
      job.command = b->spec->name;
      for (const auto& f : b->spec->flags) {
        if (b->sub->get_option(flag_of(f.key))->count() == 0) continue;
        if (f.is_flag) job.params[f.key] = b->flags[f.key];
        else if (f.repeatable) job.params[f.key] = b->lists[f.key];
        else job.params[f.key] = b->values[f.key];
      }
    }
    if (run->parsed() && json_arg.empty()) throw invalid_input("run needs --json");
    if (!json_arg.empty()) apply_record(job, load_json_arg(json_arg));
    if (job.command.empty()) throw invalid_input("JSON job record needs a \"command\"");
  } catch (const invalid_input& e) {
    return fail(job.command, "invalid_input", e.what(), kInvalid, job.output);
  }
  return run_job(std::move(job));
}
