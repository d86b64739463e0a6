#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "wpvol/asympt.hpp"
#include "wpvol/cli.hpp"
#include "wpvol/json_io.hpp"
#include "wpvol/kappa.hpp"

namespace wpvol::cli {

namespace {

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  if (text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
      throw UsageError("--ds expects comma-separated non-negative integers, got '" + text + "'");
    }
    out.push_back(std::stoi(item));
  }
  if (text.empty() || text.back() == ',') throw UsageError("--ds expects comma-separated non-negative integers");
  return out;
}

std::string decimal_of(const Rational& q, int digits) {
  const unsigned precision = static_cast<unsigned>(digits) + 20;
  boost::multiprecision::mpfr_float x(0, precision);
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x.str(digits, std::ios_base::fmtflags(0));
}

void emit_tau(const RunConfig& cfg, TauCalculator& calc, std::ostream& out) {
  const TauKey key(cfg.genus, cfg.ds);
  const Rational value = calc.tau(key);
  switch (cfg.format) {
    case Format::kPlain:
      out << to_string(value);
      if (cfg.digits) out << " " << decimal_of(value, *cfg.digits);
      out << "\n";
      break;
    case Format::kJson: {
      Json j;
      j["g"] = key.genus();
      j["ds"] = key.indices();
      j["value"] = to_string(value);
      if (cfg.digits) j["decimal"] = decimal_of(value, *cfg.digits);
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "g,ds,value" << (cfg.digits ? ",decimal" : "") << "\n";
      out << key.genus() << ",\"" << key.to_string().substr(key.to_string().find('|') + 1) << "\","
          << to_string(value);
      if (cfg.digits) out << "," << decimal_of(value, *cfg.digits);
      out << "\n";
      break;
  }
}

void emit_volume(const RunConfig& cfg, TauCalculator& calc, std::ostream& out) {
  if (cfg.genus < 0) throw UsageError("--genus must be >= 0");
  if (!cfg.n && !cfg.table) throw UsageError("volume needs --n or --table");
  const int first = cfg.n.value_or(0);
  const int last = cfg.table.value_or(first);
  if (first < 0 || last < first) throw UsageError("volume needs 0 <= --n <= --table");

  std::vector<VolumeRecord> records;
  std::vector<std::string> decimals;
  for (int n = first; n <= last; ++n) {
    records.push_back(volume(calc, cfg.genus, n));
    if (cfg.digits) decimals.push_back(wp_volume_display(calc, cfg.genus, n, *cfg.digits).decimal);
  }

  switch (cfg.format) {
    case Format::kPlain:
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << "g=" << r.g << " n=" << r.n << " dim=" << r.dim << " V=" << to_string(r.V) << " v=" << to_string(r.v)
            << " pi_power=" << r.pi_power();
        if (cfg.digits) out << " wp_volume=" << decimals[i];
        out << "\n";
      }
      break;
    case Format::kJson: {
      Json arr = Json::array();
      for (std::size_t i = 0; i < records.size(); ++i) {
        Json j = to_json(records[i]);
        if (cfg.digits) j["wp_volume"] = decimals[i];
        arr.push_back(std::move(j));
      }
      out << (cfg.table ? arr.dump() : arr.front().dump()) << "\n";
      break;
    }
    case Format::kCsv:
      out << "g,n,dim,V,v" << (cfg.digits ? ",wp_volume" : "") << "\n";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << r.g << "," << r.n << "," << r.dim << "," << to_string(r.V) << "," << to_string(r.v);
        if (cfg.digits) out << "," << decimals[i];
        out << "\n";
      }
      break;
  }
}

void emit_series(const RunConfig& cfg, TauCalculator& calc, std::ostream& out) {
  Series phi;
  if (cfg.genus == 0) {
    if (cfg.order < 3) throw UsageError("series --phi 0 needs --order >= 3");
    phi = build_phi0(cfg.order);
  } else if (cfg.genus >= 2) {
    if (cfg.order < 0) throw UsageError("--order must be >= 0");
    const GenusExpansionContext ctx(cfg.order, 3 * cfg.genus - 2);
    phi = build_phi_g(cfg.genus, ctx, calc, cfg.order);
  } else {
    throw UsageError("series --phi supports genus 0 and genus >= 2; genus " + std::to_string(cfg.genus) +
                     " has no generating-function formula here");
  }

  switch (cfg.format) {
    case Format::kJson:
      out << to_json(phi).dump() << "\n";
      break;
    case Format::kPlain:
      out << "order " << phi.order() << "\n";
      for (int k = 0; k <= phi.order(); ++k) out << k << " " << to_string(phi[k]) << "\n";
      break;
    case Format::kCsv:
      out << "power,coeff\n";
      for (int k = 0; k <= phi.order(); ++k) out << k << "," << to_string(phi[k]) << "\n";
      break;
  }
}

int emit_verify(const RunConfig& cfg, TauCalculator& calc, std::ostream& out) {
  const std::vector<CheckReport> reports = run_suite(cfg.suite, cfg.genus, cfg.order, calc);
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.pass; });

  switch (cfg.format) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(1) << "\n";
      break;
    }
    case Format::kPlain:
      for (const auto& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << r.check << " g=" << r.g << " n=" << r.n;
        if (r.first_mismatch) {
          out << " first mismatch at power " << r.first_mismatch->power << ": lhs=" << to_string(r.first_mismatch->lhs)
              << " rhs=" << to_string(r.first_mismatch->rhs);
        }
        out << "\n";
      }
      out << (reports.size() - static_cast<std::size_t>(failed)) << "/" << reports.size() << " checks passed\n";
      break;
    case Format::kCsv:
      out << "check,g,n,pass,power,lhs,rhs\n";
      for (const auto& r : reports) {
        out << r.check << "," << r.g << "," << r.n << "," << (r.pass ? "true" : "false") << ",";
        if (r.first_mismatch) {
          out << r.first_mismatch->power << "," << to_string(r.first_mismatch->lhs) << ","
              << to_string(r.first_mismatch->rhs);
        } else {
          out << ",,";
        }
        out << "\n";
      }
      break;
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

void emit_asympt(const RunConfig& cfg, TauCalculator& calc, std::ostream& out) {
  if (cfg.genus < 0) throw UsageError("--genus must be >= 0");
  const int n_min = cfg.n_min.value_or(cfg.n_max / 2);
  if (n_min < 1 || cfg.n_max - n_min + 1 < 6) throw UsageError("asympt needs at least 6 values of n (n >= 1)");

  const GrowthFit fit = fit_growth(calc, cfg.genus, n_min, cfg.n_max, cfg.threads);
  const GrowthComparison cmp = compare_C({fit});
  const Json j = to_json(cmp.per_genus.front(), cmp.predicted);

  switch (cfg.format) {
    case Format::kJson:
      out << j.dump() << "\n";
      break;
    case Format::kPlain:
      for (const auto& [key, value] : j.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
      break;
    case Format::kCsv: {
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (key == "n_range") {
          out << (first ? "" : ",") << "n_min,n_max";
        } else {
          out << (first ? "" : ",") << key;
        }
        first = false;
      }
      out << "\n";
      first = true;
      for (const auto& [key, value] : j.items()) {
        out << (first ? "" : ",");
        if (key == "n_range") {
          out << value[0].get<int>() << "," << value[1].get<int>();
        } else {
          out << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        first = false;
      }
      out << "\n";
      break;
    }
  }
}

}  // namespace

ParseResult parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Weil-Petersson volumes and genus-expansion checks", "wpvol"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"plain", Format::kPlain}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("plain|json|csv");
  app.add_option("--cache", cfg.cache_path, "Correlator cache file (loaded if present, saved on exit)");
  app.add_option("--digits", cfg.digits, "Also print decimals with this many significant digits")
      ->check(CLI::Range(1, 1000));
  app.add_option("--threads", cfg.threads, "Worker threads for volume tables")->check(CLI::Range(1, 256));

  std::string ds_text;
  auto* tau = app.add_subcommand("tau", "Print the correlator <tau_d1 ... tau_dn>_g");
  tau->add_option("--genus", cfg.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  tau->add_option("--ds", ds_text, "Indices d1,d2,... ('-' for none)")->required();

  auto* vol = app.add_subcommand("volume", "Print V_{g,n} = <kappa_1^{3g-3+n}>");
  vol->add_option("--genus", cfg.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  vol->add_option("--n", cfg.n, "Number of marked points")->check(CLI::NonNegativeNumber);
  vol->add_option("--table", cfg.table, "Print n = --n (default 0) .. N_MAX")->check(CLI::NonNegativeNumber);

  auto* ser = app.add_subcommand("series", "Print the generating function phi_G");
  ser->add_option("--phi", cfg.genus, "Genus G (0 or >= 2)")->required()->check(CLI::NonNegativeNumber);
  ser->add_option("--order", cfg.order, "Truncation order")->required()->check(CLI::NonNegativeNumber);

  const std::map<std::string, Suite> suites{{"lemma", Suite::kLemma},
                                            {"theorem1", Suite::kTheorem1},
                                            {"derivative", Suite::kDerivative},
                                            {"induction", Suite::kInduction},
                                            {"all", Suite::kAll}};
  auto* ver = app.add_subcommand("verify", "Run exact verification suites");
  ver->add_option("--suite", cfg.suite, "Verification suite")
      ->required()
      ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case))
      ->option_text("lemma|theorem1|derivative|induction|all REQUIRED");
  ver->add_option("--genus", cfg.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("--order", cfg.order, "Truncation order")->required()->check(CLI::PositiveNumber);

  auto* asy = app.add_subcommand("asympt", "Fit the large-n growth of v_{g,n}");
  asy->add_option("--genus", cfg.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  asy->add_option("--n-max", cfg.n_max, "Largest n in the fit")->required()->check(CLI::PositiveNumber);
  asy->add_option("--n-min", cfg.n_min, "Smallest n in the fit (default n-max/2)")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (tau->parsed()) {
      cfg.command = Command::kTau;
      cfg.ds = parse_index_list(ds_text);
    } else if (vol->parsed()) {
      cfg.command = Command::kVolume;
    } else if (ser->parsed()) {
      cfg.command = Command::kSeries;
    } else if (ver->parsed()) {
      cfg.command = Command::kVerify;
    } else {
      cfg.command = Command::kAsympt;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kOk : kUsage};
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return {std::nullopt, kUsage};
  }
  return {cfg, kOk};
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    MemoStore store;
    if (cfg.cache_path && std::filesystem::exists(*cfg.cache_path)) store = load_cache(*cfg.cache_path);
    TauCalculator calc(std::move(store));

    // Buffer so that a failing command prints nothing partial.
    std::ostringstream buffer;
    int code = kOk;
    switch (cfg.command) {
      case Command::kTau:
        emit_tau(cfg, calc, buffer);
        break;
      case Command::kVolume:
        emit_volume(cfg, calc, buffer);
        break;
      case Command::kSeries:
        emit_series(cfg, calc, buffer);
        break;
      case Command::kVerify:
        code = emit_verify(cfg, calc, buffer);
        break;
      case Command::kAsympt:
        emit_asympt(cfg, calc, buffer);
        break;
    }
    if (cfg.cache_path) save_cache(calc.store(), *cfg.cache_path);
    out << buffer.str();
    return code;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return execute(*parsed.config, out, err);
}

}  // namespace wpvol::cli
