// pretzelsurg: 0-surgery JSJ table, chain-link filling engine and
// presentation calculator for pretzel knots P(2p+1, 2q+1, 2r+1).

#include <pretzelsurg.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ps = pretzelsurg;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kMismatch = 2, kUndecided = 3, kUsage = 64, kIo = 74 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ps::PretzelParams triple(const std::vector<std::int64_t>& v) { return {v.at(0), v.at(1), v.at(2)}; }

void print_human(const ps::OutputRecord& rec) {
  const auto& j = rec.jsj;
  std::cout << rec.params.knot_name() << "  (p, q, r) = " << rec.params.str() << "\n";
  std::cout << "case " << j.case_label << ", " << j.tori << (j.tori == 1 ? " torus" : " tori") << "\n";
  for (const auto& piece : j.pieces) std::cout << "  " << piece.str() << "\n";
  if (!j.trace.empty()) {
    std::cout << "normalized by:";
    for (const auto& step : j.trace) std::cout << " " << step;
    std::cout << "\n";
  }
  if (rec.oracle) {
    const auto& d = *rec.oracle;
    std::cout << "oracle: " << ps::verdict_name(d.verdict);
    if (d.verdict == ps::Verdict::hyperbolic) std::cout << ", orbit=" << d.states;
    if (d.verdict == ps::Verdict::undecided) std::cout << ", states=" << d.states;
    if (d.pattern) std::cout << ", pattern " << ps::pattern_str(*d.pattern) << ", witness length " << d.witness.size();
    if (!rec.oracle_agrees() && d.verdict != ps::Verdict::undecided) std::cout << "  MISMATCH with the case table";
    std::cout << "\n";
  }
}

int oracle_status(const ps::OutputRecord& rec) {
  if (!rec.oracle) return kOk;
  if (rec.oracle->verdict == ps::Verdict::undecided) return kUndecided;
  return rec.oracle_agrees() ? kOk : kMismatch;
}

/// Records for every triple, computed on `jobs` threads, returned in input order.
std::vector<ps::OutputRecord> compute_records(const std::vector<ps::PretzelParams>& triples, bool with_oracle,
                                              std::size_t budget, unsigned jobs) {
  std::vector<ps::OutputRecord> out(triples.size());
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next == triples.size()) return;
        i = next++;
      }
      auto rec = ps::make_record(triples[i]);
      if (with_oracle) rec.oracle = ps::hyperbolic_oracle(triples[i], budget);
      out[i] = std::move(rec);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

ps::FillingTuple parse_tuple(const std::string& link, const std::string& slopes) {
  ps::LinkKind kind;
  try {
    kind = ps::parse_link(link);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::vector<ps::Slope> parsed;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = slopes.find(',', start);
    const std::string tok = slopes.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      parsed.push_back(ps::Slope::parse(tok));
    } catch (const std::exception&) {
      throw UsageError("unparsable slope '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    return {kind, std::move(parsed)};
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional surgeries and JSJ decompositions for pretzel knots P(2p+1, 2q+1, 2r+1)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pretzelsurg 1.0");

  std::vector<std::int64_t> pqr;
  std::size_t budget = ps::kDefaultStateBudget;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* classify = app.add_subcommand("classify", "JSJ decomposition of the 0-surgery");
  bool json = false, with_oracle = false;
  classify->add_option("pqr", pqr, "p q r")->expected(3)->required();
  classify->add_flag("--json", json, "single-line structured record");
  classify->add_flag("--with-oracle", with_oracle, "cross-check with the 5-chain filling engine");
  classify->add_option("--budget", budget, "state budget for the engine")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "classify every triple in [-B,B]^3");
  std::int64_t range = 0;
  bool check_oracle = false, scan_json = false;
  std::string csv_path;
  scan->add_option("--range", range, "cube bound B")->required()->check(CLI::PositiveNumber);
  scan->add_flag("--check-oracle", check_oracle, "cross-check every triple with the engine");
  scan->add_option("--csv", csv_path, "write a table to this path");
  scan->add_flag("--json", scan_json, "print one record per line");
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--budget", budget, "state budget for the engine")->check(CLI::PositiveNumber);

  auto* fill = app.add_subcommand("fill", "decide a chain-link filling");
  std::string link, slopes;
  fill->add_option("--link", link, "5chain | 4chain | 3chain")->required();
  fill->add_option("--slopes", slopes, "comma-separated: n, n/d, inf, phi")->required();
  fill->add_option("--budget", budget, "state budget")->check(CLI::PositiveNumber);

  auto* polys = app.add_subcommand("polys", "Alexander and Jones polynomials");
  polys->add_option("pqr", pqr, "p q r")->expected(3)->required();

  auto* group = app.add_subcommand("group", "group presentations and abelian invariants");
  group->add_option("pqr", pqr, "p q r")->expected(3)->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance suite");
  ps::AcceptanceOptions opts;
  selfcheck->add_option("--range", opts.range_cap, "cap every cube bound at this value")
      ->check(CLI::PositiveNumber);
  selfcheck->add_option("--budget", opts.budget, "state budget")->check(CLI::PositiveNumber);
  selfcheck->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  selfcheck->add_option("--seed", opts.seed, "seed for the random matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      auto rec = ps::make_record(triple(pqr));
      if (with_oracle) rec.oracle = ps::hyperbolic_oracle(rec.params, budget);
      if (json)
        std::cout << ps::to_json(rec).dump() << "\n";
      else
        print_human(rec);
      return oracle_status(rec);
    }

    if (*scan) {
      std::vector<ps::PretzelParams> triples;
      for (std::int64_t p = -range; p <= range; ++p)
        for (std::int64_t q = -range; q <= range; ++q)
          for (std::int64_t r = -range; r <= range; ++r) triples.push_back({p, q, r});

      std::ofstream csv;
      if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) {
          std::cerr << "pretzelsurg: cannot write " << csv_path << "\n";
          return kIo;
        }
      }
      const auto records = compute_records(triples, check_oracle, budget, jobs);

      std::map<std::string, std::size_t> counts;
      std::size_t mismatches = 0, undecided = 0, unknots = 0;
      for (const auto& rec : records) {
        ++counts[rec.jsj.case_label];
        if (scan_json) std::cout << ps::to_json(rec).dump() << "\n";
        if (!check_oracle) continue;
        if (ps::is_unknot(rec.params)) {
          ++unknots;
          continue;
        }
        if (rec.oracle->verdict == ps::Verdict::undecided)
          ++undecided;
        else if (!rec.oracle_agrees()) {
          ++mismatches;
          std::cerr << "mismatch: " << rec.params.str() << " case " << rec.jsj.case_label << ", engine "
                    << ps::verdict_name(rec.oracle->verdict) << "\n";
        }
      }
      if (csv.is_open()) {
        csv << ps::csv_header() << "\n";
        for (const auto& rec : records) csv << ps::csv_row(rec) << "\n";
        csv.close();
        if (!csv) {
          std::cerr << "pretzelsurg: write to " << csv_path << " failed\n";
          return kIo;
        }
      }

      std::ostream& summary = scan_json ? std::cerr : std::cout;
      summary << triples.size() << " triples in [-" << range << "," << range << "]^3\n";
      for (const auto& [label, n] : counts) summary << "  case " << label << ": " << n << "\n";
      if (check_oracle) {
        summary << records.size() - unknots << " checked against the engine, " << unknots << " unknots skipped\n";
        summary << mismatches << " mismatches, " << undecided << " undecided\n";
      }
      if (mismatches) return kMismatch;
      return undecided ? kUndecided : kOk;
    }

    if (*fill) {
      const auto t = parse_tuple(link, slopes);
      const auto d = ps::orbit_decide(t, budget);
      switch (d.verdict) {
        case ps::Verdict::exceptional: {
          std::cout << "EXCEPTIONAL pattern " << ps::pattern_str(*d.pattern) << " reached " << d.reached->str()
                    << "\nwitness (" << d.witness.size() << " steps):";
          for (const auto& op : d.witness) std::cout << " " << op.str();
          std::cout << "\n";
          return kOk;
        }
        case ps::Verdict::hyperbolic:
          std::cout << "HYPERBOLIC orbit=" << d.states << "\n";
          return kOk;
        case ps::Verdict::undecided:
          std::cout << "UNDECIDED states=" << d.states << " (budget " << budget << ")\n";
          return kUndecided;
      }
    }

    if (*polys) {
      const auto k = triple(pqr);
      const auto a = ps::alexander(k);
      const bool fox_ok = ps::equal_up_to_unit(ps::fox_alexander(k), a);
      const auto v = ps::jones(k);
      std::cout << k.knot_name() << "\n";
      std::cout << "alexander: " << a.str() << " (fox: " << (fox_ok ? "agrees" : "DISAGREES") << ")\n";
      std::cout << "jones: " << v.str() << " (unknot: " << (ps::is_unknot(k) ? "yes" : "no") << ")\n";
      return fox_ok ? kOk : kMismatch;
    }

    if (*group) {
      const auto k = triple(pqr);
      const std::pair<const char*, ps::Presentation> rows[] = {
          {"knot group", ps::lin_presentation(k)},
          {"0-surgery", ps::zero_surgery_presentation(k)},
          {"cut manifold", ps::cut_manifold_presentation(k)},
          {"surgery presentation", ps::xpqr_presentation(k)},
      };
      std::cout << k.knot_name() << "\n";
      for (const auto& [name, pres] : rows) {
        std::cout << name << ": " << pres.str() << "\n";
        std::cout << name << " H1: " << ps::abelian_invariants(pres).str() << "\n";
      }
      return kOk;
    }

    if (*selfcheck) {
      bool all = true;
      std::size_t undecided = 0;
      ps::run_acceptance(opts, [&](const ps::CriterionResult& c) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << ". " << c.title << ": " << c.detail << std::endl;
        all = all && c.passed;
        undecided += c.undecided;
      });
      if (undecided) std::cout << undecided << " undecided engine runs\n";
      std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
      if (undecided) return kUndecided;
      return all ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "pretzelsurg: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "pretzelsurg: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
