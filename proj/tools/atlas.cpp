#include <atlas/catalog.hpp>
#include <atlas/config.hpp>
#include <atlas/curvature.hpp>
#include <atlas/error.hpp>
#include <atlas/eta_einstein.hpp>
#include <atlas/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace atlas;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kRefused = 3, kIo = 4 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::BoundsTooLarge: return kRefused;
    case ErrorKind::IoFailure: return kIo;
    default: return kInvalid;
  }
}

struct Globals {
  bool json = false;
  std::string catalog, budget, config;
  std::optional<unsigned> threads;
};

Config resolve(const Globals& g) {
  Config cfg = g.config.empty() ? load_default_config() : load_config(g.config);
  if (!g.catalog.empty()) cfg.catalog_path = g.catalog;
  if (!g.budget.empty()) {
    try {
      cfg.budget = Integer(g.budget);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::InvalidInput, "bad --budget '" + g.budget + "'");
    }
  }
  if (g.threads) cfg.threads = *g.threads;
  if (cfg.threads == 0) cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  return cfg;
}

// Integers that fit stay JSON numbers.
ordered_json num(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json str(const Rational& q) { return to_string(q); }

Rational rational_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidInput, "not a rational number: '" + text + "'");
  }
}

BPExponents bp_arg(const std::string& text) {
  const auto link = parse_link(text.find(':') == std::string::npos ? "bp:" + text : text);
  if (!link.exponents) throw Error(ErrorKind::InvalidInput, "expected Brieskorn-Pham exponents");
  return *link.exponents;
}

// Prints an object either as JSON or as aligned "name  value" lines.
void emit(const Globals& g, const ordered_json& out) {
  if (g.json) {
    std::cout << out.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : out.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : out.items()) {
    std::cout << k << std::string(width - k.size() + 2, ' ');
    if (v.is_string()) std::cout << v.get<std::string>();
    else if (v.is_null()) std::cout << "-";
    else std::cout << v.dump();
    std::cout << '\n';
  }
}

void print_records(const Globals& g, const std::vector<InvariantRecord>& records) {
  if (g.json) {
    for (const auto& r : records) std::cout << to_json_line(r) << '\n';
    return;
  }
  std::cout << "key                          sign      betti  sphere                    signature\n";
  for (const auto& r : records) {
    std::string sphere = to_string(r.sphere.kind);
    if (r.sphere.bp8_residue) sphere += " [" + std::to_string(*r.sphere.bp8_residue) + "]";
    std::printf("%-28s %-9s %6s  %-25s %s\n", r.key.c_str(), to_string(r.sign).data(),
                r.middle_betti.get_str().c_str(), sphere.c_str(),
                r.signature ? r.signature->get_str().c_str() : "-");
  }
}

void report_corrupt(const std::vector<CorruptLineReport>& corrupt, const std::string& path) {
  for (const auto& c : corrupt)
    std::cerr << "warning: " << path << ":" << c.line << ": skipped corrupt line (" << c.message << ")\n";
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// ---- link invariants

void cmd_classify(const Globals& g, const std::string& text) {
  const auto link = parse_link(text);
  const auto& ws = link.weights;
  ordered_json out;
  out["key"] = link.key();
  out["weights"] = ws.key();
  out["dimension"] = link.dimension();
  out["sign"] = std::string(to_string(classify_sign(ws)));
  if (ws.nvars() == 3) {
    const auto pi1 = pi1_class(ws);
    out["pi1"] = pi1 == Pi1Class::Finite ? "finite"
                 : pi1 == Pi1Class::InfiniteNilpotent ? "infinite_nilpotent" : "infinite";
    const auto ade = ade_match(ws);
    out["ade"] = ade ? ordered_json(ade->to_string()) : ordered_json(nullptr);
  }
  if (ws.nvars() == 4) out["well_formed"] = is_well_formed(ws);
  emit(g, out);
}

void cmd_betti(const Globals& g, const std::string& text) {
  const auto link = parse_link(text);
  const auto b = betti(link.weights);
  ordered_json out;
  out["key"] = link.key();
  out["link_dim"] = b.link_dim;
  out["middle_betti"] = num(b.middle_betti);
  out["rational_homology_sphere"] = b.middle_betti == 0;
  if (link.exponents) out["torsion"] = torsion_closed_form(*link.exponents).to_string();
  emit(g, out);
}

void cmd_weights_solve(const Globals& g, const std::string& text, const std::string& degree) {
  const auto link = parse_link(text.find(':') == std::string::npos ? "mono:" + text : text);
  if (!link.monomials) throw Error(ErrorKind::InvalidInput, "expected a monomial matrix");
  std::optional<Integer> required;
  if (!degree.empty()) required = parse_integer_list(degree).at(0);
  const auto ws = solve_weights(*link.monomials, required);
  ordered_json out;
  out["key"] = ws.key();
  ordered_json w = ordered_json::array();
  for (const auto& x : ws.weights()) w.push_back(num(x));
  out["weights"] = w;
  out["degree"] = num(ws.degree());
  out["sign"] = std::string(to_string(classify_sign(ws)));
  emit(g, out);
}

void cmd_monomials(const Globals& g, const std::string& text) {
  const auto link = parse_link(text);
  ordered_json out;
  out["key"] = link.weights.key();
  out["monomials"] = num(count_monomials(link.weights));
  emit(g, out);
}

void cmd_sphere(const Globals& g, const std::string& text) {
  const auto link = parse_link(text);
  const auto v = link.exponents ? sphere_verdict(*link.exponents) : sphere_verdict(link.weights);
  ordered_json out;
  out["key"] = link.key();
  out["verdict"] = to_string(v.kind);
  out["bp8_residue"] = optional_json(v.bp8_residue);
  emit(g, out);
}

void cmd_kervaire(const Globals& g, const std::string& r, const std::string& a) {
  const auto res = kervaire_classify(parse_integer_list(r), parse_integer_list(a).at(0));
  ordered_json out;
  out["verdict"] = to_string(res.verdict.kind);
  out["sign"] = std::string(to_string(res.sign));
  emit(g, out);
}

void cmd_casson(const Globals& g, const std::string& text) {
  const auto a = bp_arg(text);
  ordered_json out;
  out["key"] = a.key();
  out["casson"] = num(casson(a));
  emit(g, out);
}

void cmd_signature(const Globals& g, const std::string& text) {
  const auto a = bp_arg(text);
  const auto s = brieskorn_signature(a);
  ordered_json out;
  out["key"] = a.key();
  out["signature"] = num(s.signature);
  out["positive"] = num(s.positive_count);
  out["negative"] = num(s.negative_count);
  out["boundary"] = num(s.boundary_count);
  emit(g, out);
}

void cmd_bp8(const Globals& g, const Config& cfg, const std::string& text, bool sweep, long k_max,
             long p_max) {
  if (!sweep) {
    if (text.empty()) throw Error(ErrorKind::InvalidInput, "bp8 needs exponents or --sweep");
    const auto a = bp_arg(text);
    ordered_json out;
    out["key"] = a.key();
    out["bp8_residue"] = optional_json(bp8_class(a).bp8_residue);
    emit(g, out);
    return;
  }
  const auto r = seven_sphere_sweep(k_max, p_max, cfg.budget, cfg.threads);
  if (g.json) {
    ordered_json w = ordered_json::object();
    for (const auto& [res, a] : r.witnesses) w[std::to_string(res)] = a.key();
    std::cout << ordered_json{{"links_examined", r.links_examined},
                              {"distinct", r.distinct()},
                              {"witnesses", w}}
                     .dump()
              << '\n';
    return;
  }
  for (const auto& [res, a] : r.witnesses) std::printf("%2d  %s\n", res, a.key().c_str());
  std::printf("%zu distinct residues from %zu links\n", r.distinct(), r.links_examined);
}

// ---- eta-Einstein constants

ordered_json constants_json(const EtaConstants& c) {
  return {{"n", c.n()}, {"lambda", str(c.lambda())}, {"nu", str(c.nu())},
          {"sign", std::string(to_string(c.sign()))}};
}

void cmd_eta(const Globals& g, const std::string& what, long n, const std::string& lambda,
             const std::string& scale) {
  ordered_json out;
  if (what == "squash") {
    out["squash"] = to_string(squash_class(HomothetyScale(rational_arg(scale))));
    return emit(g, out);
  }
  const EtaConstants c(n, rational_arg(lambda));
  if (what == "transform") {
    if (scale.empty()) throw Error(ErrorKind::InvalidInput, "transform needs --scale");
    const HomothetyScale a(rational_arg(scale));
    out = constants_json(homothety(c, a));
    out["scale"] = str(a.value());
  } else if (what == "einstein") {
    const auto a = einstein_scale(c);
    out["scale"] = str(a.value());
    out["result"] = constants_json(homothety(c, a));
  } else if (what == "lorentzian") {
    const auto l = lorentzian_scale(c);
    out["a"] = str(l.a);
    out["relation"] = LorentzianScale::relation;
  } else if (what == "ew") {
    const auto ew = ew_mu(c);
    out["mu_squared"] = str(ew.mu_squared);
    out["needs_sqrt"] = ew.needs_sqrt;
  } else if (what == "scalar") {
    out["scalar_curvature"] = str(scalar_curvature(c));
    // only positive structures can be made scalar-flat
    out["scalar_flat_scale"] =
        c.sign() == SignClass::Positive ? str(scalar_flat_scale(c).value()) : ordered_json(nullptr);
  }
  emit(g, out);
}

// ---- curvature

template <class S>
ordered_json fit_json(const curvature::RicciFit<S>& fit) {
  auto val = [](const S& x) -> ordered_json {
    if constexpr (curvature::is_exact_v<S>) return to_string(x);
    else return x;
  };
  ordered_json out;
  out["lambda"] = val(fit.lambda);
  out["nu"] = val(fit.nu);
  out["residual"] = val(fit.residual);
  out["kcontact_residual"] = fit.kcontact_residual ? val(*fit.kcontact_residual) : ordered_json(nullptr);
  return out;
}

void cmd_curvature(const Globals& g, const std::string& what, const std::string& arg, long samples,
                   unsigned seed, double shift) {
  using namespace atlas::curvature;
  if (what == "heisenberg") {
    const long n = parse_integer_list(arg).at(0).get_si();
    emit(g, fit_json(eta_fit(heisenberg<Rational>(n))));
  } else if (what == "berger") {
    // exact for rational scales, double otherwise
    try {
      emit(g, fit_json(eta_fit(berger<Rational>(parse_rational(arg)))));
    } catch (const std::invalid_argument&) {
      double a = 0;
      try {
        a = std::stod(arg);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidInput, "bad scale '" + arg + "'");
      }
      emit(g, fit_json(eta_fit(berger<double>(a))));
    }
  } else {
    const long n = parse_integer_list(arg).at(0).get_si();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> z(-1.3, 1.3);
    std::vector<double> pts(static_cast<std::size_t>(std::max(samples, 1L)));
    for (auto& p : pts) p = z(rng) - shift;
    ordered_json out;
    out["n"] = n;
    out["samples"] = pts.size();
    out["residual"] = ew_function_check(n, pts, shift);
    emit(g, out);
  }
}

// ---- search and catalog

std::vector<std::pair<long, long>> bounds_arg(const std::string& text) {
  std::vector<std::pair<long, long>> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(parse_range(part));
  return out;
}

void cmd_search(const Globals& g, const Config& cfg, const std::string& family,
                const std::string& bounds, const std::string& where, bool append) {
  const auto f = family_from_string(family);
  if (!f) throw Error(ErrorKind::InvalidInput, "unknown family '" + family + "'");
  const auto r = run_search({*f, bounds_arg(bounds), parse_predicate(where)}, cfg.budget, cfg.threads);
  print_records(g, r.records);
  if (!g.json) {
    std::printf("%zu of %zu links match", r.records.size(), r.enumerated);
    for (const auto& [sign, count] : r.sign_counts) std::printf("; %s %zu", sign.c_str(), count);
    std::printf("\n");
  }
  for (const auto& note : r.notes) std::cerr << "note: " << note << '\n';
  if (append) {
    Catalog cat(cfg.catalog_path);
    const auto rep = cat.append(r.records);
    report_corrupt(rep.corrupt, cfg.catalog_path);
    std::cerr << "catalog: " << rep.written << " written, " << rep.skipped << " skipped\n";
  }
}

void cmd_catalog_append(const Globals& g, const Config& cfg, const std::vector<std::string>& links) {
  std::vector<InvariantRecord> records;
  for (const auto& l : links) records.push_back(compute_record(parse_link(l)));
  const auto rep = Catalog(cfg.catalog_path).append(std::move(records));
  report_corrupt(rep.corrupt, cfg.catalog_path);
  emit(g, ordered_json{{"written", rep.written}, {"skipped", rep.skipped}, {"corrupt", rep.corrupt.size()}});
}

void cmd_catalog_query(const Globals& g, const Config& cfg, const std::string& sign,
                       const std::string& betti, const std::string& sphere, long nvars, bool verify) {
  CatalogFilter filter;
  if (!sign.empty()) filter.sign = parse_predicate("sign=" + sign).sign;
  if (!betti.empty()) filter.middle_betti = parse_predicate("betti=" + betti).middle_betti;
  if (!sphere.empty()) {
    filter.sphere = sphere_kind_from_string(sphere);
    if (!filter.sphere) throw Error(ErrorKind::InvalidInput, "unknown sphere kind '" + sphere + "'");
  }
  if (nvars > 0) filter.nvars = static_cast<std::size_t>(nvars);
  const auto rep = Catalog(cfg.catalog_path).query(filter);
  report_corrupt(rep.corrupt, cfg.catalog_path);
  print_records(g, rep.records);
  if (verify) {
    std::size_t bad = 0;
    for (const auto& r : rep.records) {
      if (auto why = verify_record(r)) {
        std::cerr << "mismatch: " << r.key << ": " << *why << '\n';
        ++bad;
      }
    }
    if (bad) throw Error(ErrorKind::InvalidInput, std::to_string(bad) + " records failed verification");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of links of weighted homogeneous singularities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Globals g;
  unsigned threads = 0;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--catalog", g.catalog, "catalog file (JSON Lines)");
  app.add_option("--budget", g.budget, "cost budget in elementary steps");
  auto* threads_opt = app.add_option("--threads", threads, "worker threads, 0 for all cores");
  app.add_option("--config", g.config, std::string("config file (default: $") + kConfigEnv + ")");

  std::string link, extra, degree, family, bounds, where, sign, betti_filter, sphere_kind, scale;
  std::string r_list, a_value;
  std::vector<std::string> links;
  long k_max = 8, p_max = 600, n = 1, nvars = 0, samples = 100;
  unsigned seed = 1;
  double shift = 0;
  bool sweep = false, append = false, verify = false;
  std::function<void(const Config&)> action;

  auto link_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("link", link, "bp:..., w:...@d or mono:[...]")->required();
    sub->callback([&, fn] { action = [&, fn](const Config&) { fn(g, link); }; });
    return sub;
  };
  link_cmd("classify", "sign, fundamental group and ADE type", cmd_classify);
  link_cmd("betti", "middle Betti number", cmd_betti);
  link_cmd("monomials", "number of monomials of the weighted degree", cmd_monomials);
  link_cmd("casson", "Casson invariant of a Brieskorn homology 3-sphere", cmd_casson);
  link_cmd("signature", "signature of the Milnor fiber", cmd_signature);

  auto* solve = app.add_subcommand("weights-solve", "weights and degree of a monomial matrix");
  solve->add_option("matrix", link, "mono:[...] or [...]")->required();
  solve->add_option("--degree", degree, "require this degree");
  solve->callback([&] { action = [&](const Config&) { cmd_weights_solve(g, link, degree); }; });

  auto* sphere = app.add_subcommand("sphere", "sphere verdict");
  sphere->add_option("link", link, "link");
  sphere->add_option("--kervaire", r_list, "r_1,...,r_2m of L(2,2r_1,...,2r_2m,a)");
  sphere->add_option("--a", a_value, "odd exponent a for --kervaire");
  sphere->callback([&] {
    action = [&](const Config&) {
      if (!r_list.empty()) return cmd_kervaire(g, r_list, a_value.empty() ? "0" : a_value);
      if (link.empty()) throw Error(ErrorKind::InvalidInput, "sphere needs a link or --kervaire");
      cmd_sphere(g, link);
    };
  });

  auto* bp8 = app.add_subcommand("bp8", "bP8 class of a homotopy 7-sphere link");
  bp8->add_option("link", link, "five exponents");
  bp8->add_flag("--sweep", sweep, "sweep L(k,k,k,k+1,p)");
  bp8->add_option("--k-max", k_max, "largest k")->capture_default_str();
  bp8->add_option("--p-max", p_max, "largest p")->capture_default_str();
  bp8->callback([&] {
    action = [&](const Config& cfg) { cmd_bp8(g, cfg, link, sweep, k_max, p_max); };
  });

  auto* eta = app.add_subcommand("eta", "eta-Einstein constants");
  eta->require_subcommand(1);
  for (const char* what : {"transform", "einstein", "lorentzian", "ew", "scalar", "squash"}) {
    auto* sub = eta->add_subcommand(what, std::string(what));
    if (std::string(what) == "squash") {
      sub->add_option("scale", scale, "D-homothety scale")->required();
    } else {
      sub->add_option("n", n, "dimension is 2n+1")->required();
      sub->add_option("lambda", link, "lambda as p/q")->required();
      if (std::string(what) == "transform") sub->add_option("--scale", scale, "scale a")->required();
    }
    sub->callback([&, what] { action = [&, what](const Config&) { cmd_eta(g, what, n, link, scale); }; });
  }

  auto* curv = app.add_subcommand("curvature", "left-invariant curvature models");
  curv->require_subcommand(1);
  for (const char* what : {"heisenberg", "berger", "check-ew"}) {
    auto* sub = curv->add_subcommand(what, std::string(what));
    sub->add_option(std::string(what) == "berger" ? "a" : "n", extra)->required();
    if (std::string(what) == "check-ew") {
      sub->add_option("--samples", samples)->capture_default_str();
      sub->add_option("--seed", seed)->capture_default_str();
      sub->add_option("--shift", shift, "the constant c")->capture_default_str();
    }
    sub->callback([&, what] {
      action = [&, what](const Config&) { cmd_curvature(g, what, extra, samples, seed, shift); };
    });
  }

  auto* search = app.add_subcommand("search", "enumerate a family of Brieskorn-Pham links");
  search->add_option("--family", family, "box, 237m, kkk1p, kkkk1p, pqr, kervaire")->required();
  search->add_option("--bounds", bounds, "comma-separated lo..hi ranges")->required();
  search->add_option("--where", where, "predicate, e.g. sign=positive,betti=20");
  search->add_flag("--append", append, "append matches to the catalog");
  search->callback([&] {
    action = [&](const Config& cfg) { cmd_search(g, cfg, family, bounds, where, append); };
  });

  auto* catalog = app.add_subcommand("catalog", "JSON Lines catalog of invariants");
  catalog->require_subcommand(1);
  auto* cat_append = catalog->add_subcommand("append", "compute and append links");
  cat_append->add_option("links", links)->required();
  cat_append->callback([&] { action = [&](const Config& cfg) { cmd_catalog_append(g, cfg, links); }; });
  auto* cat_query = catalog->add_subcommand("query", "filter catalog records");
  cat_query->add_option("--sign", sign);
  cat_query->add_option("--betti", betti_filter);
  cat_query->add_option("--sphere", sphere_kind);
  cat_query->add_option("--nvars", nvars);
  cat_query->add_flag("--verify", verify, "recompute every record and report mismatches");
  cat_query->callback([&] {
    action = [&](const Config& cfg) {
      cmd_catalog_query(g, cfg, sign, betti_filter, sphere_kind, nvars, verify);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  if (threads_opt->count()) g.threads = threads;

  try {
    action(resolve(g));
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
