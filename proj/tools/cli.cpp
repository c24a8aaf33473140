#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "palsum/budget.hpp"
#include "palsum/decimal.hpp"
#include "palsum/errors.hpp"
#include "palsum/hoffman.hpp"
#include "palsum/palindrome.hpp"
#include "palsum/sums.hpp"

namespace palsum::cli {

namespace {

using Json = nlohmann::ordered_json;

// One result line. Text mode prints `key=value` pairs, or just the answer
// field for single-answer commands; JSON mode prints every field.
struct Record {
  Json fields = Json::object();
  std::string answer;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string text_value(const Json& v) {
  if (v.is_null()) return "NONE";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_object()) return text_value(v.at("p")) + "+" + text_value(v.at("q"));
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += '+';
      out += text_value(item);
    }
    return out.empty() ? "NONE" : out;
  }
  return v.dump();
}

void emit(const Record& r, bool json, std::ostream& out) {
  if (json) {
    out << r.fields.dump() << '\n';
    return;
  }
  if (!r.answer.empty()) {
    out << text_value(r.fields.at(r.answer)) << '\n';
    return;
  }
  std::string line;
  for (const auto& [key, value] : r.fields.items()) {
    if (!line.empty()) line += ' ';
    line += key + '=' + text_value(value);
  }
  out << line << '\n';
}

Json witness_json(const std::optional<PalindromeWitness>& w) {
  if (!w) return nullptr;
  return Json{{"p", w->p().str()}, {"q", w->q().str()}};
}

Record hoffman_record(const HoffmanReport& r) {
  Record rec;
  rec.fields["n"] = r.n.str();
  rec.fields["n_star"] = r.n_star.str();
  rec.fields["n_star_star"] = r.n_star_star.str();
  rec.fields["d1"] = r.d1.str();
  rec.fields["d2"] = r.d2.str();
  rec.fields["w1"] = witness_json(r.w1);
  rec.fields["w2"] = witness_json(r.w2);
  rec.fields["holds"] = r.holds;
  return rec;
}

// Small integer arguments (indices, exponents, offsets) share the canonical
// decimal grammar of the big numbers.
std::size_t small_number(const std::string& text, const char* what) {
  const auto value = DecimalNat::parse(text).to_uint();
  if (!value || *value > 1'000'000) throw UsageError(std::string(what) + " out of range: " + text);
  return static_cast<std::size_t>(*value);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromic-number arithmetic and the Hoffman counterexample family", "palsum"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t budget_limit = Budget{}.max_table_limit;
  std::size_t twin_budget = Budget{}.max_twin_exponent;
  app.add_flag("--json", json, "One JSON object per result instead of text lines");
  app.add_option("--budget", budget_limit, "Largest 2P table / scan width")->capture_default_str();
  app.add_option("--twin-budget", twin_budget, "Largest k for verify-twin")->capture_default_str();

  // Each subcommand installs the action that produces its result records
  // and the exit status.
  std::function<int(std::vector<Record>&)> action;
  std::string a, b;
  std::optional<std::string> m_text;
  std::size_t threads = 1;

  auto* pal = app.add_subcommand("pal", "Palindrome predicate and neighbours");
  pal->require_subcommand(1);
  auto pal_op = [&](const char* name, const char* desc, auto fn) {
    auto* sub = pal->add_subcommand(name, desc);
    sub->add_option("N", a)->required();
    sub->callback([&a, &action, fn, name = std::string(name)] {
      action = [&a, fn, name](std::vector<Record>& recs) {
        const DecimalNat n = DecimalNat::parse(a);
        Record r;
        r.answer = name;
        r.fields["n"] = n.str();
        r.fields[name] = fn(n);
        recs.push_back(std::move(r));
        return kOk;
      };
    });
  };
  pal_op("check", "Is N palindromic?", [](const DecimalNat& n) -> Json { return is_palindrome(n); });
  pal_op("prev", "Largest palindrome < N",
         [](const DecimalNat& n) -> Json { return prev_palindrome(n).str(); });
  pal_op("next", "Smallest palindrome > N",
         [](const DecimalNat& n) -> Json { return next_palindrome(n).str(); });
  pal_op("floor", "Largest palindrome <= N",
         [](const DecimalNat& n) -> Json { return floor_palindrome(n).str(); });

  auto* sum2 = app.add_subcommand("sum2", "Witness N = p + q with p <= q palindromic, or NONE");
  sum2->add_option("N", a)->required();
  sum2->callback([&] {
    action = [&](std::vector<Record>& recs) {
      const DecimalNat n = DecimalNat::parse(a);
      Record r;
      r.answer = "w";
      r.fields["n"] = n.str();
      r.fields["w"] = witness_json(two_palindrome_witness(n));
      recs.push_back(std::move(r));
      return kOk;
    };
  });

  auto* greedy = app.add_subcommand("greedy", "Greedy palindromic partition of N");
  greedy->add_option("N", a)->required();
  greedy->callback([&] {
    action = [&](std::vector<Record>& recs) {
      const GreedyDecomposition g = greedy_decompose(DecimalNat::parse(a));
      Record r;
      r.fields["n"] = g.target.str();
      Json summands = Json::array();
      for (const auto& s : g.summands) summands.push_back(s.str());
      r.fields["summands"] = std::move(summands);
      r.fields["count"] = g.count();
      recs.push_back(std::move(r));
      return kOk;
    };
  });

  auto* a088 = app.add_subcommand("a088601", "Length of the greedy palindromic partition of N");
  a088->add_option("N", a)->required();
  a088->callback([&] {
    action = [&](std::vector<Record>& recs) {
      const DecimalNat n = DecimalNat::parse(a);
      Record r;
      r.answer = "count";
      r.fields["n"] = n.str();
      r.fields["count"] = a088601(n);
      recs.push_back(std::move(r));
      return kOk;
    };
  });

  auto* adversary = app.add_subcommand("adversary", "n(J) whose greedy partition has J summands");
  adversary->add_option("J", a)->required();
  adversary->callback([&] {
    action = [&](std::vector<Record>& recs) {
      const std::size_t j = small_number(a, "J");
      Record r;
      r.answer = "n";
      r.fields["j"] = j;
      r.fields["n"] = greedy_adversary(j).str();
      recs.push_back(std::move(r));
      return kOk;
    };
  });

  auto* twin = app.add_subcommand("twin", "11 * 10^K + OFFSET");
  twin->add_option("K", a)->required();
  twin->add_option("OFFSET", b)->required();
  twin->callback([&] {
    action = [&](std::vector<Record>& recs) {
      const std::size_t k = small_number(a, "K");
      const std::size_t offset = small_number(b, "OFFSET");
      Record r;
      r.answer = "t";
      r.fields["k"] = k;
      r.fields["offset"] = offset;
      r.fields["t"] = make_twin(k, static_cast<unsigned>(offset)).str();
      recs.push_back(std::move(r));
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify-twin", "Exhaustively confirm 11 * 10^K + OFFSET is not in 2P");
  verify->add_option("K", a)->required();
  verify->add_option("OFFSET", b)->required();
  verify->callback([&] {
    action = [&](std::vector<Record>& recs) {
      const std::size_t k = small_number(a, "K");
      const auto offset = static_cast<unsigned>(small_number(b, "OFFSET"));
      Budget budget;
      budget.max_twin_exponent = twin_budget;
      const DecimalNat t = make_twin(k, offset);
      const auto witness = verify_twin_not_2p(k, offset, budget);
      Record r;
      r.fields["k"] = k;
      r.fields["offset"] = offset;
      r.fields["t"] = t.str();
      r.fields["w"] = witness_json(witness);
      recs.push_back(std::move(r));
      if (witness && twin_known_outside_2p(k, offset)) {
        err << "verification surprise: " << t << " = " << witness->p() << " + " << witness->q()
            << '\n';
        return kVerificationSurprise;
      }
      if (witness) err << "note: offset 3 with odd k is not claimed to lie outside 2P\n";
      return kOk;
    };
  });

  auto* cx = app.add_subcommand("counterexample", "J-th member of the Hoffman counterexample family");
  cx->add_option("J", a)->required();
  cx->add_option("--m", m_text, "Exponent m with 10^m > t (default 2J + 2)");
  cx->callback([&] {
    action = [&](std::vector<Record>& recs) {
      const std::size_t j = small_number(a, "J");
      std::optional<std::size_t> m;
      if (m_text) m = small_number(*m_text, "M");
      const CounterexampleRecord c = counterexample(j, m);
      Record r;
      r.fields["j"] = c.j;
      r.fields["n"] = c.n.str();
      r.fields["m"] = c.m;
      r.fields["t"] = c.t.str();
      r.fields["p"] = c.p.str();
      recs.push_back(std::move(r));
      return kOk;
    };
  });

  auto* hoff = app.add_subcommand("hoffman", "Evaluate the Hoffman predicate at non-palindromic N");
  hoff->add_option("N", a)->required();
  hoff->callback([&] {
    action = [&](std::vector<Record>& recs) {
      recs.push_back(hoffman_record(hoffman_check(DecimalNat::parse(a))));
      return kOk;
    };
  });

  auto* scan = app.add_subcommand("scan", "List every Hoffman failure in [LO, HI]");
  scan->add_option("LO", a)->required();
  scan->add_option("HI", b)->required();
  scan->add_option("--threads", threads, "Worker threads (output is independent of this)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  scan->callback([&] {
    action = [&](std::vector<Record>& recs) {
      ScanOptions options;
      options.budget.max_table_limit = budget_limit;
      options.threads = threads;
      const auto failures = scan_hoffman(DecimalNat::parse(a), DecimalNat::parse(b), options);
      for (const auto& f : failures) recs.push_back(hoffman_record(f));
      Record summary;
      summary.fields["count"] = failures.size();
      recs.push_back(std::move(summary));
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::vector<Record> records;
  int status = kOk;
  try {
    status = action(records);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kDomain;
  }
  for (const auto& r : records) emit(r, json, out);
  return status;
}

}  // namespace palsum::cli
