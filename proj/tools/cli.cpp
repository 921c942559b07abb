#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "repsum/binomial.hpp"
#include "repsum/difference.hpp"
#include "repsum/harmonic.hpp"
#include "repsum/identities.hpp"
#include "repsum/oracle/brute_force.hpp"
#include "repsum/sequence_io.hpp"

namespace repsum::cli {

namespace {

using json = nlohmann::ordered_json;

json rational_row(const Sequence& s) {
  json row = json::array();
  for (const auto& v : s.values()) row.push_back(v.to_string());
  return row;
}

// Loads --sequence; on failure reports and returns nullopt.
std::optional<Sequence> load_sequence(const CliConfig& cfg, std::ostream& err) {
  if (!cfg.sequence_path) {
    err << "error: --sequence is required for this command\n";
    return std::nullopt;
  }
  try {
    return parse_sequence_file(*cfg.sequence_path, cfg.first_index);
  } catch (const std::exception& e) {
    err << "error: " << *cfg.sequence_path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

int report_ceiling(const NaiveCeilingExceeded& e, std::ostream& err) {
  err << "error: " << e.what() << " (raise --naive-ceiling or REPSUM_NAIVE_CEILING)\n";
  return kCeilingExceeded;
}

json report_json(const EvalReport& r) {
  return json{{"method", std::string(to_string(r.method))},
              {"value", r.value.to_string()},
              {"terms_touched", r.terms_touched}};
}

}  // namespace

int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  auto seq = load_sequence(cfg, err);
  if (!seq) return kInputError;
  const SumSpec spec{cfg.order, cfg.lower, cfg.upper};

  std::vector<EvalReport> reports;
  try {
    if (cfg.mode != Mode::reduced) {
      reports.push_back(naive_repeated_sum(*seq, spec, {cfg.naive_ceiling, cfg.literal}));
    }
    if (cfg.mode != Mode::naive) reports.push_back(reduce_repeated_sum(*seq, spec));
  } catch (const NaiveCeilingExceeded& e) {
    return report_ceiling(e, err);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (reports.size() == 2 && reports[0].value != reports[1].value) {
    err << "error: naive value " << reports[0].value << " differs from reduced value "
        << reports[1].value << '\n';
    return kMismatch;
  }

  switch (cfg.output) {
    case Output::json: {
      json doc{{"m", spec.order}, {"q", spec.lower}, {"n", spec.upper}};
      if (reports.size() == 1) {
        const json single = report_json(reports[0]);
        for (const auto& [k, v] : single.items()) doc[k] = v;
      } else {
        doc["value"] = reports[0].value.to_string();
        doc["reports"] = json::array();
        for (const auto& r : reports) doc["reports"].push_back(report_json(r));
      }
      out << doc.dump() << '\n';
      break;
    }
    case Output::csv:
      out << "method,m,q,n,value,terms_touched\n";
      for (const auto& r : reports) {
        out << to_string(r.method) << ',' << spec.order << ',' << spec.lower << ',' << spec.upper
            << ',' << r.value << ',' << r.terms_touched << '\n';
      }
      break;
    case Output::plain:
      for (const auto& r : reports) {
        out << to_string(r.method) << ": " << r.value << " (" << r.terms_touched << " terms)\n";
      }
      break;
  }
  return kOk;
}

int cmd_diff(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  auto seq = load_sequence(cfg, err);
  if (!seq) return kInputError;
  std::optional<DifferenceTable> table;
  try {
    table.emplace(*seq, cfg.order);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  switch (cfg.output) {
    case Output::json: {
      json rows = json::array();
      for (const auto& r : table->rows()) rows.push_back(rational_row(r));
      out << json{{"first_index", seq->first_index()}, {"order", cfg.order}, {"rows", rows}}.dump()
          << '\n';
      break;
    }
    case Output::csv: {
      out << "index";
      for (std::int64_t m = 0; m <= table->max_order(); ++m) out << ",d" << m;
      out << '\n';
      for (std::int64_t i = seq->first_index(); i <= seq->last_index(); ++i) {
        out << i;
        for (const auto& r : table->rows()) out << ',' << r.at(i);
        out << '\n';
      }
      break;
    }
    case Output::plain:
      for (std::int64_t m = 0; m <= table->max_order(); ++m) {
        out << "d" << m << ':';
        for (const auto& v : table->row(m).values()) out << ' ' << v;
        out << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_detect(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  auto seq = load_sequence(cfg, err);
  if (!seq) return kInputError;
  std::optional<RepeatedSequenceSpec> found;
  try {
    found = detect_repeated_degree(*seq, cfg.max_order);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const json result =
      found ? json{{"degree", found->degree}, {"delta", found->delta.to_string()}} : json(nullptr);
  if (cfg.output == Output::plain) {
    if (found) {
      out << "degree " << found->degree << ", delta " << found->delta << '\n';
    } else {
      out << "not a repeated sequence\n";
    }
    return kOk;
  }
  if (!cfg.verbose) {
    out << result.dump() << '\n';
    return kOk;
  }
  const std::int64_t shown =
      found ? found->degree
            : std::min(cfg.max_order, static_cast<std::int64_t>(seq->size()) - 1);
  const DifferenceTable table(*seq, shown);
  json rows = json::array();
  for (const auto& r : table.rows()) rows.push_back(rational_row(r));
  out << json{{"result", result}, {"rows", rows}}.dump() << '\n';
  return kOk;
}

int cmd_harmonic(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Rational value;
  try {
    value = repeated_harmonic_closed(cfg.order, cfg.n);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  json doc{{"order", cfg.order}, {"n", cfg.n}, {"value", value.to_string()}};
  if (cfg.check) {
    const BigInt leaves = binom(cfg.n + cfg.order - 1, cfg.order);
    if (leaves > BigInt(static_cast<unsigned long>(cfg.naive_ceiling))) {
      return report_ceiling(NaiveCeilingExceeded(leaves, cfg.naive_ceiling), err);
    }
    const Rational nested = oracle::nested_sum<Rational>(
        cfg.order, 1, cfg.n, [](std::int64_t i) { return make_rational(1, i); });
    doc["oracle"] = nested.to_string();
    doc["check"] = nested == value ? "pass" : "fail";
    if (nested != value) {
      err << "error: nested evaluation " << nested << " differs from closed form " << value << '\n';
      out << doc.dump() << '\n';
      return kMismatch;
    }
  }
  if (cfg.output == Output::plain) {
    out << value << '\n';
  } else {
    out << doc.dump() << '\n';
  }
  return kOk;
}

int cmd_identity(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.list_identities) {
    for (const auto& info : identity_registry()) out << info.id << '\t' << info.summary << '\n';
    return kOk;
  }
  if (!find_identity(cfg.identity_id)) {
    err << "error: unknown identity id '" << cfg.identity_id << "'; known ids:";
    for (const auto& info : identity_registry()) err << ' ' << info.id;
    err << '\n';
    return kUsage;
  }
  IdentityReport report;
  try {
    report = run_identity(cfg.identity_id, cfg.max_n, cfg.max_m, cfg.max_k);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.output == Output::plain) {
    out << report.id << ": " << report.cases << " cases, " << report.failures.size()
        << " failures\n";
    for (const auto& f : report.failures) {
      out << "  fail";
      for (const auto& [name, v] : f.params) out << ' ' << name << '=' << v;
      out << ": lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
    }
  } else {
    json failures = json::array();
    for (const auto& f : report.failures) {
      json params = json::object();
      for (const auto& [name, v] : f.params) params[name] = v;
      failures.push_back(json{{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    out << json{{"id", report.id},
                {"grid",
                 {{"max_n", report.grid.max_n}, {"max_m", report.grid.max_m}, {"max_k", report.grid.max_k}}},
                {"cases", report.cases},
                {"failures", failures}}
               .dump()
        << '\n';
  }
  return report.passed() ? kOk : kIdentityFailure;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.bench_orders.empty() || cfg.bench_uppers.empty()) {
    err << "error: --orders and --uppers must not be empty\n";
    return kUsage;
  }
  const std::int64_t top = *std::max_element(cfg.bench_uppers.begin(), cfg.bench_uppers.end());
  std::optional<Sequence> seq;
  if (cfg.sequence_path) {
    seq = load_sequence(cfg, err);
    if (!seq) return kInputError;
  } else {
    // a_N = 1/N over [lower, top]; a_0 = 0 keeps q = 0 usable.
    std::vector<Rational> v;
    for (std::int64_t i = cfg.lower; i <= top; ++i) v.push_back(i == 0 ? Rational{} : make_rational(1, i));
    if (v.empty()) {
      err << "error: upper bounds must be >= lower bound\n";
      return kUsage;
    }
    seq.emplace(cfg.lower, std::move(v));
  }

  using Clock = std::chrono::steady_clock;
  const auto elapsed_ns = [](Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
  };

  out << "m,q,n,naive_terms,reduced_terms,naive_wall_ns,reduced_wall_ns\n";
  for (const std::int64_t m : cfg.bench_orders) {
    for (const std::int64_t n : cfg.bench_uppers) {
      const SumSpec spec{m, cfg.lower, n};
      try {
        spec.validate();
        if (!seq->covers(cfg.lower, n)) throw std::domain_error("sequence does not cover the bench range");
      } catch (const std::domain_error& e) {
        err << "error: m=" << m << " n=" << n << ": " << e.what() << '\n';
        return kUsage;
      }
      const BigInt naive_terms = naive_term_count(spec);

      auto t0 = Clock::now();
      const EvalReport reduced = reduce_repeated_sum(*seq, spec);
      const auto reduced_ns = elapsed_ns(t0);

      std::string naive_ns;
      if (naive_terms <= BigInt(static_cast<unsigned long>(cfg.naive_ceiling))) {
        t0 = Clock::now();
        const EvalReport naive = naive_repeated_sum(*seq, spec, {cfg.naive_ceiling, true});
        naive_ns = std::to_string(elapsed_ns(t0));
        if (naive.value != reduced.value) {
          err << "error: naive and reduced values differ at m=" << m << " n=" << n << '\n';
          return kMismatch;
        }
      }
      out << m << ',' << cfg.lower << ',' << n << ',' << naive_terms.get_str() << ','
          << reduced.terms_touched << ',' << naive_ns << ',' << reduced_ns << '\n';
    }
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact repeated-sum evaluation, reduction and identity checks", "repsum"};
  app.require_subcommand(1);

  const std::map<std::string, Mode> modes{{"naive", Mode::naive}, {"reduced", Mode::reduced}, {"both", Mode::both}};
  const std::map<std::string, Output> outputs{{"json", Output::json}, {"csv", Output::csv}, {"plain", Output::plain}};

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "json, csv or plain")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
  };
  const auto add_sequence = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--sequence,-s", cfg.sequence_path, "sequence file (p/q per line or JSON array)");
    if (required) opt->required();
    sub->add_option("--first-index", cfg.first_index, "index of the first value")->capture_default_str();
  };
  const auto add_ceiling = [&](CLI::App* sub) {
    sub->add_option("--naive-ceiling", cfg.naive_ceiling, "max term reads for naive evaluation")
        ->envname("REPSUM_NAIVE_CEILING")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "evaluate a repeated sum of a sequence");
  add_sequence(eval, true);
  eval->add_option("--order,-m", cfg.order, "nesting order m")->required();
  eval->add_option("--lower,-q", cfg.lower, "lower bound q")->required();
  eval->add_option("--upper,-n", cfg.upper, "upper bound n")->required();
  eval->add_option("--mode", cfg.mode, "naive, reduced or both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  eval->add_flag("--literal", cfg.literal, "expand the naive recursion instead of memoizing it");
  add_ceiling(eval);
  add_output(eval);

  auto* diff = app.add_subcommand("diff", "print the difference table of a sequence");
  add_sequence(diff, true);
  diff->add_option("--order,-m", cfg.order, "highest difference order")->required();
  add_output(diff);

  auto* detect = app.add_subcommand("detect", "detect a constant m-th difference");
  add_sequence(detect, true);
  detect->add_option("--max-order", cfg.max_order, "largest degree to try")->capture_default_str();
  detect->add_flag("--verbose,-v", cfg.verbose, "include difference rows");
  add_output(detect);

  auto* harmonic = app.add_subcommand("harmonic", "repeated harmonic sum");
  harmonic->add_option("--order,-m", cfg.order, "nesting order")->required();
  harmonic->add_option("--n,-n", cfg.n, "upper bound")->required();
  harmonic->add_flag("--check", cfg.check, "also evaluate the nested loops");
  add_ceiling(harmonic);
  add_output(harmonic);

  auto* identity = app.add_subcommand("identity", "sweep an identity against brute force");
  auto* id_opt = identity->add_option("--id", cfg.identity_id, "identity key, see --list");
  identity->add_flag("--list", cfg.list_identities, "list identity keys")->excludes(id_opt);
  identity->add_option("--max-n", cfg.max_n, "override the n bound");
  identity->add_option("--max-m", cfg.max_m, "override the m bound");
  identity->add_option("--max-k", cfg.max_k, "override the k bound");
  add_output(identity);

  auto* bench = app.add_subcommand("bench", "naive vs reduced term counts and timings (CSV)");
  add_sequence(bench, false);
  bench->add_option("--orders", cfg.bench_orders, "orders m")->delimiter(',')->capture_default_str();
  bench->add_option("--uppers", cfg.bench_uppers, "upper bounds n")->delimiter(',')->capture_default_str();
  bench->add_option("--lower,-q", cfg.lower, "lower bound q")->capture_default_str();
  add_ceiling(bench);

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*eval) return cmd_eval(cfg, out, err);
  if (*diff) return cmd_diff(cfg, out, err);
  if (*detect) return cmd_detect(cfg, out, err);
  if (*harmonic) return cmd_harmonic(cfg, out, err);
  if (*identity) {
    if (!cfg.list_identities && cfg.identity_id.empty()) {
      err << "error: --id or --list is required\n";
      return kUsage;
    }
    return cmd_identity(cfg, out, err);
  }
  return cmd_bench(cfg, out, err);
}

}  // namespace repsum::cli
