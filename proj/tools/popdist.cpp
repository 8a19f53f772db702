#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include <popdist/closed_forms.hpp>
#include <popdist/io.hpp>
#include <popdist/oracle.hpp>
#include <popdist/pop_solver.hpp>
#include <popdist/separable.hpp>
#include <popdist/stats.hpp>
#include <popdist/verify.hpp>

namespace {

using namespace popdist;
using io::json;

enum Exit { ok = 0, mismatch = 1, usage = 2, limits = 3 };

std::optional<PopPattern> class_pop(const std::optional<int>& k, const std::string& pop_json) {
  if (!pop_json.empty()) return io::pop_from_json(json::parse(pop_json));
  if (k) return flat_pop(*k);
  return std::nullopt;
}

void print_series(const TruncSeries& s, const std::string& format, const json& meta) {
  if (format == "json") {
    auto j = meta;
    j["order"] = s.order();
    j["series"] = io::to_json(s);
    std::cout << j.dump() << '\n';
  } else if (format == "counts") {
    std::cout << io::counts_text(s) << '\n';
  } else {
    std::cout << s << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable permutations avoiding flat POPs: enumeration, statistics and generating functions"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list a class of separable permutations");
  int n = 0;
  std::optional<int> k;
  std::string pop_json, format = "text";
  enumerate->add_option("--n", n, "length")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--k", k, "also avoid the flat POP P_k");
  enumerate->add_option("--pop", pop_json, "also avoid this POP, as JSON");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* stats = app.add_subcommand("stats", "six statistics of one permutation");
  std::string perm;
  stats->add_option("--perm", perm, "one-line notation")->required();
  stats->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* dist = app.add_subcommand("dist", "joint distribution table at one length");
  dist->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  dist->add_option("--k", k);
  dist->add_option("--pop", pop_json);
  dist->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* closed = app.add_subcommand("closed", "closed-form generating functions");
  std::string id_name;
  int order = 10;
  bool counting = false;
  std::vector<std::string> ids;
  for (auto [id, name] : closed_form_names) ids.emplace_back(name);
  closed->add_option("--id", id_name)->required()->check(CLI::IsMember(ids));
  closed->add_option("--order", order)->check(CLI::NonNegativeNumber);
  auto* closed_format = closed->add_option("--format", format)->check(CLI::IsMember({"ratfun", "series", "json", "counts"}));
  closed->add_flag("--counting", counting, "set every statistic variable to 1");

  auto* solve = app.add_subcommand("solve", "F_k from the functional-equation system");
  int solve_k = 2;
  std::string mode = "full";
  solve->add_option("--k", solve_k)->required();
  solve->add_option("--order", order)->check(CLI::NonNegativeNumber);
  solve->add_option("--mode", mode)->check(CLI::IsMember({"full", "uv", "counting"}));
  auto* solve_format = solve->add_option("--format", format)->check(CLI::IsMember({"series", "json", "counts"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int max_n = 8;
  std::vector<std::string> suites(verify::suite_names.begin(), verify::suite_names.end());
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);

  auto* schroder_cmd = app.add_subcommand("schroder", "Schroder numbers");
  bool upto = false;
  schroder_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  schroder_cmd->add_flag("--upto", upto, "print s_0 through s_n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    const Limits lim = Limits::from_env();

    if (*enumerate) {
      const auto perms = enumerate_class(n, class_pop(k, pop_json), lim);
      if (format == "json") {
        json arr = json::array();
        for (const auto& p : perms) arr.push_back(p.to_string());
        std::cout << json{{"schema", io::schema}, {"n", n}, {"count", perms.size()}, {"perms", arr}}.dump() << '\n';
      } else {
        for (const auto& p : perms) std::cout << p.to_string() << '\n';
      }
    } else if (*stats) {
      const auto p = Permutation::parse(perm);
      if (format == "json") std::cout << io::to_json(p).dump() << '\n';
      else std::cout << p.to_string() << ' ' << stat_vector(p) << '\n';
    } else if (*dist) {
      const auto table = distribution_table(n, class_pop(k, pop_json), lim);
      if (format == "json") std::cout << io::to_json(table).dump() << '\n';
      else std::cout << io::to_text(table);
    } else if (*closed) {
      const auto id = *parse_closed_form_id(id_name);
      if (closed_format->count() == 0) format = counting ? "counts" : "series";
      const json meta{{"schema", io::schema}, {"generator", "closed"}, {"id", id_name}};
      if (format == "ratfun") {
        auto gf = closed_form(id);
        if (counting) gf = gf.specialize(verify::all_stats);
        std::cout << io::ratfun_text(gf);
      } else {
        TruncSeries s = id == ClosedFormId::Lmax_separable ? lmax_separable_series(order)
                        : id == ClosedFormId::S_tpq        ? s_tpq_series(order)
                                                           : closed_form(id).expand(order);
        if (counting || format == "counts") s = s.specialize(verify::all_stats);
        print_series(s, format, meta);
      }
    } else if (*solve) {
      if (solve_format->count() == 0) format = mode == "counting" ? "counts" : "series";
      TruncSeries s(0);
      if (mode == "full") s = solve_fk(solve_k, order, SolverOptions{false, lim}).full;
      else if (mode == "uv") s = solve_fk_uv(solve_k, order, lim);
      else s = solve_fk_counting(solve_k, order);
      if (format == "counts") s = s.specialize(verify::all_stats);
      print_series(s, format, {{"schema", io::schema}, {"generator", "thm4"}, {"k", solve_k}, {"mode", mode}});
    } else if (*verify) {
      const auto checks = verify::run_suite(suite, {max_n, lim});
      return verify::report(std::cout, checks) ? ok : mismatch;
    } else if (*schroder_cmd) {
      if (upto) {
        for (int i = 0; i <= n; ++i) std::cout << (i ? "," : "") << schroder(i).get_str();
        std::cout << '\n';
      } else {
        std::cout << schroder(n).get_str() << '\n';
      }
    }
  } catch (const LimitError& e) {
    std::cerr << "popdist: " << e.what() << '\n';
    return limits;
  } catch (const DomainError& e) {
    std::cerr << "popdist: " << e.what() << '\n';
    return limits;
  } catch (const json::exception& e) {
    std::cerr << "popdist: bad JSON: " << e.what() << '\n';
    return usage;
  }
  return ok;
}
