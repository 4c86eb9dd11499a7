#include "liemf/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "liemf/cache.hpp"
#include "liemf/tables.hpp"

namespace liemf {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string& s) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (...) {
    throw UsageError("bad integer '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("bad integer '" + s + "'");
  return v;
}

// strips one fundamental-weight marker (l, w, L, W, or the UTF-8 greek
// letters) from the front; returns empty if none
size_t marker_len(const std::string& t) {
  if (t.empty()) return 0;
  if (t[0] == 'l' || t[0] == 'w' || t[0] == 'L' || t[0] == 'W') return 1;
  static const std::string lam = "\xce\xbb", om = "\xcf\x89"; // λ ω
  if (t.rfind(lam, 0) == 0) return lam.size();
  if (t.rfind(om, 0) == 0) return om.size();
  return 0;
}

} // namespace

Weight parse_weight(const std::string& text, int rank) {
  if (text.find(',') != std::string::npos ||
      text.find_first_not_of("-0123456789") == std::string::npos) {
    std::vector<Coord> labels;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) labels.push_back(parse_long(tok));
    if (static_cast<int>(labels.size()) != rank)
      throw UsageError("weight '" + text + "' has " + std::to_string(labels.size()) +
                       " labels, expected " + std::to_string(rank));
    return weight_from_labels(labels);
  }
  // sum of fundamental terms
  Weight w = Weight::Zero(rank);
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw UsageError("empty term in '" + text + "'");
    size_t p = 0;
    Coord coef = 1;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      size_t q = 0;
      coef = std::stol(term, &q);
      p = q;
    }
    size_t ml = marker_len(term.substr(p));
    if (ml == 0) throw UsageError("expected a fundamental-weight marker in '" + term + "'");
    p += ml;
    long idx = parse_long(term.substr(p));
    if (idx < 1 || idx > rank)
      throw UsageError("fundamental index out of range in '" + term + "'");
    w[idx - 1] += 2 * coef;
  }
  return w;
}

std::string weight_to_text(const Weight& w) {
  // label-list form; round-trips through parse_weight
  std::ostringstream os;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    if (w[i] % 2) throw UsageError("half-integral weight has no label form");
    os << w[i] / 2;
  }
  return os.str();
}

namespace {

SystemPtr parse_system(const std::string& s) {
  if (s.size() < 2) throw UsageError("bad system '" + s + "'");
  Family f = family_from_char(s[0]);
  return get_system(f, static_cast<int>(parse_long(s.substr(1))));
}

struct Ctx {
  explicit Ctx(std::ostream& o) : out(o) {}
  std::ostream& out;
  bool jsonl = false;
  int threads = 1;
  MfLimits lim;
  Cache cache;
  std::vector<std::string> cap_hits;

  void emit(const std::string& command, const Json& inputs, const Json& result,
            const Json& extra, double seconds) {
    if (!jsonl) return;
    Json rec;
    rec["command"] = command;
    rec["inputs"] = inputs;
    rec["result"] = result;
    for (auto& [k, v] : extra.items()) rec[k] = v;
    rec["timing"] = seconds;
    rec["cap_hits"] = cap_hits;
    out << rec.dump() << "\n";
  }
};

std::string dim_string(const BigInt& b) { return b.str(); }

double elapsed(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_irrep_sum(Ctx& ctx, const std::string& command, const Json& inputs,
                     const IrrepSum& s, double secs) {
  if (ctx.jsonl) {
    Json extra;
    extra["dims"] = dim_string(dim(s));
    ctx.emit(command, inputs, to_json(s), extra, secs);
  } else {
    ctx.out << s.str() << "\n";
    ctx.out << "dim " << dim(s) << (s.is_mf() ? "  [multiplicity free]" : "") << "\n";
  }
}

// Cached plethysm: key on (op, system, k, weight).
IrrepSum cached_power(Ctx& ctx, bool exterior, long k, const SystemPtr& sys, const Weight& w) {
  Json inputs;
  inputs["family"] = to_string(sys->family());
  inputs["rank"] = sys->rank();
  inputs["k"] = k;
  inputs["hw"] = to_json(w);
  Json key = Cache::make_key(exterior ? "extpow" : "sympow", inputs);
  if (auto hit = ctx.cache.get(key)) return irrep_sum_from_json(*hit);
  IrrepSum r = exterior ? ext_power(k, IrrepSum::irrep(sys, w), ctx.lim)
                        : sym_power(k, IrrepSum::irrep(sys, w), ctx.lim);
  ctx.cache.put(key, to_json(r));
  return r;
}

int do_verify(Ctx& ctx, int table, int row, long cap) {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = verify_table(table, row, BigInt(cap), ctx.lim, ctx.threads);
  int failures = 0, skipped = 0;
  for (auto& rep : reports) {
    std::string status = rep.skipped ? "SKIP" : (rep.verdict == Verdict::MF ? "PASS" : "FAIL");
    if (rep.skipped) ++skipped;
    else if (rep.verdict != Verdict::MF) ++failures;
    if (!ctx.jsonl)
      ctx.out << status << " [" << rep.inst.row_id << "] " << rep.inst.text
              << (rep.note.empty() ? "" : "  (" + rep.note + ")") << "\n";
  }
  if (ctx.jsonl) {
    Json result;
    result["instances"] = reports.size();
    result["failures"] = failures;
    result["skipped"] = skipped;
    Json inputs;
    inputs["table"] = table;
    inputs["row"] = row;
    inputs["cap"] = cap;
    ctx.emit("verify", inputs, result, Json::object(), elapsed(t0));
  } else {
    ctx.out << reports.size() << " instances, " << failures << " failures, " << skipped
            << " skipped\n";
  }
  return failures ? 1 : 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with restrictions of classical-group representations"};
  app.require_subcommand(1);

  Ctx ctx(out);
  std::string format = "human";
  std::string cache_dir;
  bool no_cache = false;
  long cap_dim = 2'000'000;
  long cap_dominant = 50'000'000;
  double budget_seconds = 0;
  app.add_option("--format", format)->check(CLI::IsMember({"human", "jsonl"}));
  app.add_option("--threads", ctx.threads)->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir);
  app.add_flag("--no-cache", no_cache);
  app.add_option("--cap-dim", cap_dim, "direct-strategy dimension cap");
  app.add_option("--cap-dominant", cap_dominant, "dominant-support cap");
  app.add_option("--budget", budget_seconds, "wall-clock budget in seconds");

  // ---- charcalc commands ----
  std::string sys_s, w1_s, w2_s;
  long karg = 0;
  auto* c_dim = app.add_subcommand("dim", "dimension of an irreducible");
  c_dim->add_option("system", sys_s)->required();
  c_dim->add_option("weight", w1_s)->required();
  auto* c_char = app.add_subcommand("char", "dominant weight multiplicities");
  c_char->add_option("system", sys_s)->required();
  c_char->add_option("weight", w1_s)->required();
  auto* c_tensor = app.add_subcommand("tensor", "tensor product decomposition");
  c_tensor->add_option("system", sys_s)->required();
  c_tensor->add_option("weight1", w1_s)->required();
  c_tensor->add_option("weight2", w2_s)->required();
  auto* c_sym = app.add_subcommand("sympow", "symmetric power decomposition");
  c_sym->add_option("system", sys_s)->required();
  c_sym->add_option("k", karg)->required();
  c_sym->add_option("weight", w1_s)->required();
  auto* c_ext = app.add_subcommand("extpow", "alternating power decomposition");
  c_ext->add_option("system", sys_s)->required();
  c_ext->add_option("k", karg)->required();
  c_ext->add_option("weight", w1_s)->required();

  // ---- branching ----
  std::string remove_s;
  auto* c_levi = app.add_subcommand("levi", "restriction to a Levi subgroup");
  c_levi->add_option("system", sys_s)->required();
  c_levi->add_option("weight", w1_s)->required();
  c_levi->add_option("--remove", remove_s, "removed simple roots, e.g. 2,5")->required();
  auto* c_levels = app.add_subcommand("levels", "graded pieces under a parabolic");
  c_levels->add_option("system", sys_s)->required();
  c_levels->add_option("weight", w1_s)->required();
  c_levels->add_option("--remove", remove_s)->required();

  // ---- embeddings ----
  long l_arg = 0;
  std::string delta_s, lambda_s, strategy_s = "auto";
  auto* c_embed = app.add_subcommand("embed", "classify the self-dual embedding target");
  c_embed->add_option("l", l_arg)->required();
  c_embed->add_option("delta", delta_s)->required();
  auto* c_restrict = app.add_subcommand("restrict", "restriction along the embedding");
  c_restrict->add_option("l", l_arg)->required();
  c_restrict->add_option("delta", delta_s)->required();
  c_restrict->add_option("lambda", lambda_s)->required();
  c_restrict->add_option("--strategy", strategy_s)
      ->check(CLI::IsMember({"direct", "constructed", "levelpeel", "auto"}));
  auto* c_mf = app.add_subcommand("mf", "multiplicity-freeness verdict");
  c_mf->add_option("l", l_arg)->required();
  c_mf->add_option("delta", delta_s)->required();
  c_mf->add_option("lambda", lambda_s)->required();
  c_mf->add_option("--strategy", strategy_s)
      ->check(CLI::IsMember({"direct", "constructed", "levelpeel", "auto"}));

  // ---- harness ----
  int table = 0, row = -1;
  long cap = 2'000'000, max_s = 2;
  auto* c_verify = app.add_subcommand("verify", "check catalog rows");
  c_verify->add_option("--table", table)->required()->check(CLI::Range(1, 3));
  c_verify->add_option("--row", row);
  c_verify->add_option("--cap", cap);
  auto* c_scan = app.add_subcommand("scan", "bounded classification scan");
  c_scan->add_option("l", l_arg)->required();
  c_scan->add_option("delta", delta_s)->required();
  c_scan->add_option("--max-s", max_s);
  c_scan->add_option("--cap", cap);

  for (auto* sc : app.get_subcommands(/*filter=*/[](const CLI::App*) { return true; }))
    sc->fallthrough(); // allow the global flags after the subcommand too

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  ctx.jsonl = (format == "jsonl");
  ctx.lim.direct_dim_cap = cap_dim;
  ctx.lim.max_dominant_entries = cap_dominant;
  if (budget_seconds > 0) ctx.lim.set_budget_seconds(budget_seconds);
  if (!no_cache) {
    const char* env = std::getenv("LIEMF_CACHE_DIR");
    std::string dir = !cache_dir.empty() ? cache_dir : (env ? env : "");
    if (!dir.empty()) ctx.cache = Cache(dir);
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    auto strategy = [&] {
      if (strategy_s == "direct") return Strategy::Direct;
      if (strategy_s == "constructed") return Strategy::Constructed;
      if (strategy_s == "levelpeel") return Strategy::LevelPeel;
      return Strategy::Auto;
    }();

    if (*c_dim) {
      auto sys = parse_system(sys_s);
      Weight w = parse_weight(w1_s, sys->rank());
      BigInt d = weyl_dim(*sys, w);
      if (ctx.jsonl) {
        Json inputs{{"system", sys_s}, {"weight", to_json(w)}};
        Json extra;
        extra["dims"] = dim_string(d);
        ctx.emit("dim", inputs, dim_string(d), extra, elapsed(t0));
      } else {
        out << d << "\n";
      }
      return 0;
    }
    if (*c_char) {
      auto sys = parse_system(sys_s);
      Weight w = parse_weight(w1_s, sys->rank());
      auto ch = dominant_character(sys, w, ctx.lim);
      if (ctx.jsonl) {
        Json result = Json::array();
        std::vector<std::pair<Weight, Mult>> rows_(ch->table.begin(), ch->table.end());
        std::sort(rows_.begin(), rows_.end(),
                  [](auto& a, auto& b) { return WeightLess{}(a.first, b.first); });
        for (auto& [wt, m] : rows_) result.push_back({{"weight", to_json(wt)}, {"mult", m}});
        Json inputs{{"system", sys_s}, {"weight", to_json(w)}};
        Json extra;
        extra["dims"] = dim_string(char_dim(*ch));
        ctx.emit("char", inputs, result, extra, elapsed(t0));
      } else {
        std::vector<std::pair<Weight, Mult>> rows_(ch->table.begin(), ch->table.end());
        std::sort(rows_.begin(), rows_.end(), [&](auto& a, auto& b) {
          return sys->height2(a.first) > sys->height2(b.first);
        });
        for (auto& [wt, m] : rows_) out << "(" << to_label_string(wt) << ") : " << m << "\n";
        out << "dim " << char_dim(*ch) << "\n";
      }
      return 0;
    }
    if (*c_tensor) {
      auto sys = parse_system(sys_s);
      Weight a = parse_weight(w1_s, sys->rank());
      Weight b = parse_weight(w2_s, sys->rank());
      IrrepSum r = tensor(IrrepSum::irrep(sys, a), IrrepSum::irrep(sys, b), ctx.lim);
      Json inputs{{"system", sys_s}, {"weight1", to_json(a)}, {"weight2", to_json(b)}};
      print_irrep_sum(ctx, "tensor", inputs, r, elapsed(t0));
      return 0;
    }
    if (*c_sym || *c_ext) {
      auto sys = parse_system(sys_s);
      Weight w = parse_weight(w1_s, sys->rank());
      IrrepSum r = cached_power(ctx, static_cast<bool>(*c_ext), karg, sys, w);
      Json inputs{{"system", sys_s}, {"k", karg}, {"weight", to_json(w)}};
      print_irrep_sum(ctx, *c_ext ? "extpow" : "sympow", inputs, r, elapsed(t0));
      return 0;
    }
    if (*c_levi || *c_levels) {
      auto sys = parse_system(sys_s);
      Weight w = parse_weight(w1_s, sys->rank());
      std::vector<int> removed;
      std::stringstream ss(remove_s);
      std::string tok;
      while (std::getline(ss, tok, ',')) removed.push_back(static_cast<int>(parse_long(tok)));
      auto P = ParabolicSpec::make(sys, removed);
      if (*c_levi) {
        auto dec = levi_restrict(w, P, ctx.lim);
        if (ctx.jsonl) {
          Json result = Json::array();
          for (auto& [term, m] : dec)
            result.push_back({{"labels", to_json(term.factor_labels)},
                              {"charge", to_json(term.charge)},
                              {"mult", m}});
          Json inputs{{"system", sys_s}, {"weight", to_json(w)}, {"remove", remove_s}};
          ctx.emit("levi", inputs, result, Json::object(), elapsed(t0));
        } else {
          for (auto& [term, m] : dec)
            out << "(" << to_label_string(term.factor_labels) << ") @ charge ("
                << to_label_string(term.charge) << ") : " << m << "\n";
        }
      } else {
        auto L = levels(w, P, ctx.lim);
        if (ctx.jsonl) {
          Json result = Json::array();
          for (size_t d = 0; d < L.levels.size(); ++d) {
            Json lvl = Json::array();
            for (auto& [labels, m] : L.levels[d])
              lvl.push_back({{"labels", to_json(labels)}, {"mult", m}});
            result.push_back({{"level", d}, {"factors", lvl}});
          }
          Json inputs{{"system", sys_s}, {"weight", to_json(w)}, {"remove", remove_s}};
          ctx.emit("levels", inputs, result, Json::object(), elapsed(t0));
        } else {
          for (size_t d = 0; d < L.levels.size(); ++d) {
            out << "level " << d << " (dim " << level_dim(P, L.levels[d]) << "):\n";
            for (auto& [labels, m] : L.levels[d])
              out << "  (" << to_label_string(labels) << ") : " << m << "\n";
          }
        }
      }
      return 0;
    }
    if (*c_embed) {
      Weight delta = parse_weight(delta_s, static_cast<int>(l_arg) + 1);
      auto E = build_embedding(static_cast<int>(l_arg), delta, ctx.lim);
      if (ctx.jsonl) {
        Json result{{"y", system_name(*E->y_sys)},
                    {"dim_w", dim_string(E->dim_w)},
                    {"steinberg_sign", E->steinberg_sign}};
        Json inputs{{"l", l_arg}, {"delta", to_json(delta)}};
        ctx.emit("embed", inputs, result, Json::object(), elapsed(t0));
      } else {
        out << system_name(*E->y_sys) << "\n";
      }
      return 0;
    }
    if (*c_restrict || *c_mf) {
      Weight delta = parse_weight(delta_s, static_cast<int>(l_arg) + 1);
      auto E = build_embedding(static_cast<int>(l_arg), delta, ctx.lim);
      Weight lambda = parse_weight(lambda_s, E->y_rank());
      MfReport rep = is_mf(E, lambda, strategy, ctx.lim);
      if (rep.verdict == Verdict::Unknown) {
        ctx.cap_hits.push_back(rep.note);
        if (!ctx.jsonl) out << "Unknown (" << rep.note << ")\n";
        else {
          Json inputs{{"l", l_arg}, {"delta", to_json(delta)}, {"lambda", to_json(lambda)}};
          ctx.emit(*c_mf ? "mf" : "restrict", inputs, "Unknown", Json::object(), elapsed(t0));
        }
        return 3;
      }
      Json inputs{{"l", l_arg},
                  {"delta", to_json(delta)},
                  {"lambda", to_json(lambda)},
                  {"strategy", to_string(rep.method)}};
      if (*c_restrict) {
        print_irrep_sum(ctx, "restrict", inputs, rep.factors, elapsed(t0));
      } else if (ctx.jsonl) {
        Json result{{"verdict", to_string(rep.verdict)},
                    {"factors", to_json(rep.factors)},
                    {"method", to_string(rep.method)}};
        Json witnesses = Json::array();
        for (auto& [w, m] : rep.witnesses)
          witnesses.push_back({{"weight", to_json(w)}, {"mult", m}});
        Json extra;
        extra["witnesses"] = witnesses;
        extra["dims"] = dim_string(rep.dimension);
        ctx.emit("mf", inputs, result, extra, elapsed(t0));
      } else {
        out << to_string(rep.verdict) << ", " << rep.factors.terms.size() << " factors\n";
        for (auto& [w, m] : rep.witnesses)
          out << "  witness (" << to_label_string(w) << ")^" << m << "\n";
      }
      return 0;
    }
    if (*c_verify) return do_verify(ctx, table, row, cap);
    if (*c_scan) {
      Weight delta = parse_weight(delta_s, static_cast<int>(l_arg) + 1);
      auto E = build_embedding(static_cast<int>(l_arg), delta, ctx.lim);
      ScanResult sc = scan_candidates(E, max_s, BigInt(cap), ctx.lim, ctx.threads);
      if (ctx.jsonl) {
        Json result = Json::array();
        for (auto& w : sc.mf) result.push_back(to_json(w));
        Json inputs{{"l", l_arg}, {"delta", to_json(delta)}, {"max_s", max_s}, {"cap", cap}};
        Json extra;
        extra["examined"] = sc.examined.size();
        extra["complete"] = sc.complete;
        ctx.emit("scan", inputs, result, extra, elapsed(t0));
      } else {
        for (auto& w : sc.mf) out << "(" << to_label_string(w) << ")\n";
        out << sc.mf.size() << " multiplicity-free of " << sc.examined.size() << " candidates"
            << (sc.complete ? "" : " (incomplete: resource caps hit)") << "\n";
      }
      return sc.complete ? 0 : 3;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.code() == Errc::ResourceLimit) {
      err << "resource cap: " << e.what() << "\n";
      return 3;
    }
    if (e.code() == Errc::Usage) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    err << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

} // namespace liemf
