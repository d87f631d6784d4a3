// numcalc: command-line front end to the asynum library.
#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "asynum/error.hpp"
#include "asynum/log.hpp"
#include "asynum/numerosity.hpp"
#include "asynum/oracle.hpp"
#include "asynum/parse.hpp"
#include "asynum/qselect.hpp"
#include "asynum/ramsey.hpp"
#include "asynum/sample.hpp"
#include "asynum/series.hpp"

using namespace asynum;

namespace {

struct Session {
  std::uint64_t horizon = 64;
  std::string budget_text = "10000000";
  std::string oracle_path;
  bool machine = false;
  std::uint64_t seed = 1;

  WorkBudget budget;
  FilterModel model;

  void open() {
    std::uint64_t limit = 0;
    try {
      std::size_t used = 0;
      const double v = std::stod(budget_text, &used);
      if (used != budget_text.size() || !(v >= 1) || v > 1.8e19) throw std::invalid_argument("");
      limit = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "--budget expects a number >= 1, got '" + budget_text + "'");
    }
    budget = WorkBudget(limit);
    if (!oracle_path.empty() && std::filesystem::exists(oracle_path))
      model = FilterModel::load_file(oracle_path);
    else if (!oracle_path.empty())
      model = FilterModel(std::filesystem::path(oracle_path).stem().string());
  }

  void require_oracle_file() const {
    if (!oracle_path.empty() && !std::filesystem::exists(oracle_path))
      throw Error(ErrorCode::InvalidArgument, "oracle file '" + oracle_path + "' does not exist");
  }
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  return FiniteNatSet::parse(text).elements();
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::WorkBudgetExceeded:
    case ErrorCode::HorizonTooSmall:
    case ErrorCode::NoWitnessWithinHorizon: return 3;
    default: return 2;
  }
}

void print_verdict(const Session& s, const Verdict& v) {
  std::cout << (s.machine ? v.line() + "\n" : v.report());
}

void print_witness(const Witness& w) {
  std::cout << "witness={" << join(w.elements) << "} size=" << w.elements.size()
            << " H=" << w.horizon << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Session s;
  CLI::App app{"Exact counting, numerosity comparison and the combinatorial kernels behind them"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--horizon", s.horizon, "Horizon H")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", s.budget_text, "Work budget in elementary steps");
  app.add_option("--oracle", s.oracle_path, "Oracle file (commitments of the model)");
  app.add_flag("--machine", s.machine, "Machine-readable output");
  app.add_option("--seed", s.seed, "Seed for randomized commands");

  std::string x_text, y_text, func_text, set_text, series_text, path;
  std::uint64_t n = 0, m = 0, depth = 0, k = 0, bound = 1, degree = 1, entry_budget = 1'000'000;
  std::optional<std::uint64_t> at;
  bool naive = false, serial = false;
  std::string tail_text = "unknown";

  auto two_sets = [&](CLI::App* c) {
    c->add_option("X", x_text, "Set expression")->required();
    c->add_option("Y", y_text, "Set expression")->required();
  };

  auto* count_cmd = app.add_subcommand("count", "|X_n|");
  count_cmd->add_option("X", x_text)->required();
  count_cmd->add_option("n", n)->required();
  count_cmd->callback([&] { std::cout << count(parse_expr(x_text), n, s.budget) << "\n"; });

  auto* seq_cmd = app.add_subcommand("seq", "Counting sequence up to the horizon, with its tail");
  seq_cmd->add_option("X", x_text)->required();
  seq_cmd->callback([&] {
    std::cout << counting_sequence(parse_expr(x_text), s.horizon, s.budget).to_string() << "\n";
  });

  auto* cmp_cmd = app.add_subcommand("cmp", "Order of the numerosities of X and Y");
  two_sets(cmp_cmd);
  cmp_cmd->callback([&] {
    s.require_oracle_file();
    print_verdict(s, compare(parse_expr(x_text), parse_expr(y_text), s.model, s.horizon, s.budget));
  });

  auto* eq_cmd = app.add_subcommand("equinum", "Are X and Y equinumerous under the model");
  two_sets(eq_cmd);
  eq_cmd->callback([&] {
    s.require_oracle_file();
    print_verdict(s, equinumerous(parse_expr(x_text), parse_expr(y_text), s.model, s.horizon,
                                  s.budget));
  });

  auto arith = [&](bool mul) {
    auto a = numerosity(parse_expr(x_text), s.horizon, s.budget);
    auto b = numerosity(parse_expr(y_text), s.horizon, s.budget);
    auto r = mul ? num_mul(a, b, s.budget) : num_add(a, b, s.budget);
    std::cout << "expr=" << r.provenance.to_string() << "\n";
    std::cout << "seq=" << r.representative.to_string() << "\n";
  };
  auto* add_cmd = app.add_subcommand("add", "Numerosity sum (disjoint tagged union)");
  two_sets(add_cmd);
  add_cmd->callback([&] { arith(false); });
  auto* mul_cmd = app.add_subcommand("mul", "Numerosity product");
  two_sets(mul_cmd);
  mul_cmd->callback([&] { arith(true); });

  auto* rep_cmd = app.add_subcommand("subset-rep", "Z inside Y with the numerosity of X");
  two_sets(rep_cmd);
  rep_cmd->callback([&] {
    s.require_oracle_file();
    auto r = build_subset_representative(parse_expr(x_text), parse_expr(y_text), s.model,
                                         s.horizon, s.budget);
    std::cout << "Z=" << r.z.to_string() << "\n";
    std::cout << "checkpoints={" << join(r.checkpoints) << "}\n";
    std::cout << "cert=" << r.certificate.set.descriptor() << "\n";
    std::cout << "continuation=" << r.continuation << "\n";
  });

  auto* cong_cmd = app.add_subcommand("congruence", "Bijection X -> Y preserving truncations on a member set");
  two_sets(cong_cmd);
  cong_cmd->callback([&] {
    s.require_oracle_file();
    auto c = build_u_congruence(parse_expr(x_text), parse_expr(y_text), s.model, s.horizon, s.budget);
    std::cout << "pairs=" << c.sigma.size() << " witness={" << join(c.witness)
              << "} verified=" << (c.verified ? "yes" : "no") << "\n";
    if (!s.machine)
      for (const auto& [a, b] : c.sigma) std::cout << "  " << a.to_string() << " -> " << b.to_string() << "\n";
  });

  auto engine = [&] {
    return RamseyEngine(naive ? RamseyEngine::Strategy::Naive : RamseyEngine::Strategy::Pruned,
                        !serial);
  };
  auto* nu_cmd = app.add_subcommand("nu", "Ramsey norm of a finite set");
  nu_cmd->add_option("A", set_text, "Finite set, e.g. {0,1,2,3}")->required();
  nu_cmd->add_flag("--naive", naive, "Full enumeration of colorings");
  nu_cmd->add_flag("--serial", serial, "No parallel split");
  nu_cmd->callback([&] {
    auto e = engine();
    std::cout << "nu=" << e.nu(FiniteNatSet::parse(set_text), s.budget) << "\n";
  });

  auto* rho_cmd = app.add_subcommand("rho", "Membership in rho^d L");
  rho_cmd->add_option("A", set_text)->required();
  rho_cmd->add_option("--depth", depth, "d (0 is L itself)");
  rho_cmd->add_flag("--naive", naive);
  rho_cmd->add_flag("--serial", serial);
  rho_cmd->callback([&] {
    auto e = engine();
    const auto a = FiniteNatSet::parse(set_text);
    if (depth == 0) {
      std::cout << "member=" << (in_l(a) ? "yes" : "no") << "\n";
      return;
    }
    auto r = e.in_rho(Family{depth - 1}, a, s.budget);
    std::cout << "member=" << (r.member ? "yes" : "no");
    if (r.counterexample) std::cout << " counterexample=" << r.counterexample->to_string();
    std::cout << "\n";
  });

  auto* gamma_cmd = app.add_subcommand("gamma", "nu(X & I_n) over a partition file");
  gamma_cmd->add_option("X", x_text)->required();
  gamma_cmd->add_option("partition", path, "File of `interval lo hi` lines")->required();
  gamma_cmd->add_option("--entry-budget", entry_budget);
  gamma_cmd->callback([&] {
    auto parts = parse_partition(read_file(path));
    auto g = gamma(parse_expr(x_text), parts, entry_budget);
    for (std::size_t i = 0; i < g.size(); ++i)
      std::cout << "gamma(" << i << ")=" << (g[i] ? std::to_string(*g[i]) : "unknown") << "\n";
  });

  auto* large_cmd = app.add_subcommand("large", "gamma(X)(n) > sqrt(n) + k on a member set");
  large_cmd->add_option("X", x_text)->required();
  large_cmd->add_option("partition", path)->required();
  large_cmd->add_option("--k", k);
  large_cmd->add_option("--entry-budget", entry_budget);
  large_cmd->add_option("--tail", tail_text, "Assumed set beyond the partition")
      ->check(CLI::IsMember({"finite", "cofinite", "unknown"}));
  large_cmd->callback([&] {
    s.require_oracle_file();
    const auto tag = tail_text == "finite"     ? IndexSet::TailTag::Finite
                     : tail_text == "cofinite" ? IndexSet::TailTag::Cofinite
                                               : IndexSet::TailTag::Unknown;
    auto r = is_large_at_horizon(parse_expr(x_text), parse_partition(read_file(path)), s.model, k,
                                 entry_budget, tag);
    std::cout << "large=" << to_string(r.verdict) << " k=" << r.k << " D=" << r.index_set.descriptor()
              << " unknown={" << join(r.unknown) << "}\n";
  });

  auto* reorder_cmd = app.add_subcommand("reorder", "Member-set witness on which f is nondecreasing");
  reorder_cmd->add_option("f", func_text)->required();
  reorder_cmd->callback([&] {
    s.require_oracle_file();
    print_witness(monotone_restriction(FuncSpec::parse(func_text), s.model, s.horizon, s.budget));
  });

  auto* i2o_cmd = app.add_subcommand("interval", "Interval-to-one reduction of f");
  i2o_cmd->add_option("f", func_text)->required();
  i2o_cmd->callback([&] {
    s.require_oracle_file();
    auto r = interval_to_one_reduce(FuncSpec::parse(func_text), s.model, s.horizon, s.budget);
    print_witness(r.witness);
    std::cout << "g=" << r.g.to_string() << " verified=" << (r.verified ? "yes" : "no") << "\n";
  });

  auto* tilde_cmd = app.add_subcommand("tilde", "f iterated f(n) times from n");
  tilde_cmd->add_option("f", func_text)->required();
  tilde_cmd->add_option("n", x_text)->required();
  tilde_cmd->callback([&] {
    std::cout << tilde(FuncSpec::parse(func_text), BigInt(x_text), s.budget) << "\n";
  });

  auto* ack_cmd = app.add_subcommand("ackermann", "A(m, n)");
  ack_cmd->add_option("m", m)->required();
  ack_cmd->add_option("n", x_text)->required();
  ack_cmd->callback([&] { std::cout << ackermann(m, BigInt(x_text), s.budget) << "\n"; });

  auto* rapid_cmd = app.add_subcommand("rapid", "u_{i+1} > f(u_i) inside the model core");
  rapid_cmd->add_option("f", func_text)->required();
  rapid_cmd->callback([&] {
    s.require_oracle_file();
    print_witness(rapid_set(FuncSpec::parse(func_text), s.model, s.horizon, s.budget));
  });

  auto* doubling_cmd = app.add_subcommand("doubling", "u_{i+1} > 2 u_i inside the model core");
  doubling_cmd->callback([&] {
    s.require_oracle_file();
    print_witness(doubling_set(s.model, s.horizon));
  });

  auto* fu_cmd = app.add_subcommand("fu", "f(u_i) < u_{i+1} - u_i along U");
  fu_cmd->add_option("f", func_text)->required();
  fu_cmd->add_option("U", set_text)->required();
  fu_cmd->callback([&] {
    auto r = check_fu_condition(FuncSpec::parse(func_text), parse_list(set_text), s.horizon, s.budget);
    std::cout << "holds=" << (r.holds ? "yes" : "no");
    if (r.violation) std::cout << " violation=" << *r.violation;
    std::cout << "\n";
  });

  auto* gplus_cmd = app.add_subcommand("gplus", "g+ and the enumerator of its range");
  gplus_cmd->add_option("g", func_text)->required();
  gplus_cmd->callback([&] {
    auto r = g_plus_and_enumerator(FuncSpec::parse(func_text), s.horizon, s.budget);
    std::vector<std::string> gp;
    for (const auto& v : r.g_plus) gp.push_back(v ? std::to_string(*v) : "?");
    std::cout << "gplus=" << join(gp) << "\n";
    std::cout << "enumerator=" << join(r.enumerator)
              << " last_class_incomplete=" << (r.last_class_incomplete ? "yes" : "no") << "\n";
  });

  auto* esize_cmd = app.add_subcommand("esize", "|E_n|");
  esize_cmd->add_option("n", n)->required();
  esize_cmd->callback([&] { std::cout << quasi_numerosity_e(n) << "\n"; });

  auto* phi_cmd = app.add_subcommand("phi", "Phi of a series at n, or on 0..H");
  phi_cmd->add_option("S", series_text)->required();
  phi_cmd->add_option("n", at);
  phi_cmd->callback([&] {
    auto sr = parse_series(series_text);
    if (at) {
      std::cout << phi(sr, *at, s.budget) << "\n";
      return;
    }
    auto v = phi_range(sr, s.horizon, s.budget);
    std::vector<std::string> text;
    for (const auto& x : v) text.push_back(x.get_str());
    std::cout << join(text) << "\n";
  });

  auto* dec_cmd = app.add_subcommand("decompose", "Level sets X_ik, Y_ik of a bounded series");
  dec_cmd->add_option("S", series_text)->required();
  dec_cmd->add_option("--bound", bound, "B")->required();
  dec_cmd->callback([&] {
    auto sr = parse_series(series_text);
    std::cout << decompose_bounded(sr.constant(), coefficients_upto(sr, s.horizon, s.budget), bound)
                     .to_string();
  });

  auto* p2c_cmd = app.add_subcommand("pos2char", "Characteristic set congruent to a positive series");
  p2c_cmd->add_option("S", series_text)->required();
  p2c_cmd->add_option("--bound", bound, "B")->required();
  p2c_cmd->add_option("--degree", degree, "d")->required();
  p2c_cmd->callback([&] {
    auto r = positive_to_characteristic(parse_series(series_text), bound, degree, s.horizon, s.budget);
    std::cout << "k=" << r.k << " n0=" << r.n0 << " H=" << r.horizon << "\n";
    std::cout << "X=" << r.x.to_string() << "\n";
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Inspect or extend the model");
  oracle_cmd->require_subcommand(1);
  std::string desc;
  auto* commit_cmd = oracle_cmd->add_subcommand("commit", "Add a commitment and save the oracle file");
  commit_cmd->add_option("set", desc, "periodic descriptor")->required();
  commit_cmd->callback([&] {
    if (s.oracle_path.empty())
      throw Error(ErrorCode::InvalidArgument, "oracle commit needs --oracle PATH");
    s.model = s.model.commit(parse_periodic_descriptor(desc));
    s.model.save_file(s.oracle_path);
    std::cout << "committed=" << s.model.commitments().back().descriptor()
              << " core=" << s.model.core().descriptor() << "\n";
  });
  auto* query_cmd = oracle_cmd->add_subcommand("query", "Member, NonMember or Undecided");
  query_cmd->add_option("set", desc, "index set descriptor")->required();
  query_cmd->callback([&] {
    s.require_oracle_file();
    std::cout << to_string(s.model.query(parse_index_set(desc))) << "\n";
  });
  auto* list_cmd = oracle_cmd->add_subcommand("list", "Print the commitments");
  list_cmd->callback([&] {
    s.require_oracle_file();
    std::cout << s.model.save();
  });
  auto* save_cmd = oracle_cmd->add_subcommand("save", "Write the model to a file");
  save_cmd->add_option("path", path)->required();
  save_cmd->callback([&] {
    s.require_oracle_file();
    s.model.save_file(path);
    std::cout << "saved " << s.model.commitments().size() << " commitment(s) to " << path << "\n";
  });
  auto* load_cmd = oracle_cmd->add_subcommand("load", "Replay an oracle file (into --oracle if given)");
  load_cmd->add_option("path", path)->required();
  load_cmd->callback([&] {
    s.model = FilterModel::load_file(path);
    if (!s.oracle_path.empty()) s.model.save_file(s.oracle_path);
    std::cout << "loaded " << s.model.commitments().size()
              << " commitment(s) core=" << s.model.core().descriptor() << "\n";
  });

  auto* axiom_cmd = app.add_subcommand("axiom-check", "Check E0..E4 on given or random samples");
  std::string axiom_name;
  std::vector<std::string> sets;
  std::size_t random_samples = 0;
  int random_commitments = -1;
  axiom_cmd->add_option("axiom", axiom_name, "E0..E4")->required();
  axiom_cmd->add_option("sets", sets, "Sample sets, two (four for E4) per sample");
  axiom_cmd->add_option("--random", random_samples, "Number of seeded random samples");
  axiom_cmd->add_option("--random-model", random_commitments,
                        "Replace the model by this many random consistent commitments");
  axiom_cmd->callback([&] {
    s.require_oracle_file();
    const Axiom axiom = parse_axiom(axiom_name);
    const std::size_t arity = axiom == Axiom::E4 ? 4 : 2;
    if (sets.size() % arity != 0)
      throw Error(ErrorCode::InvalidArgument, "expected a multiple of " + std::to_string(arity) + " sets");
    std::vector<std::vector<PointSetExpr>> samples;
    for (std::size_t i = 0; i < sets.size(); i += arity) {
      samples.emplace_back();
      for (std::size_t j = 0; j < arity; ++j) samples.back().push_back(parse_expr(sets[i + j]));
    }
    std::mt19937_64 rng(s.seed);
    FilterModel model = random_commitments >= 0 ? sample::random_model(rng, random_commitments) : s.model;
    for (std::size_t i = 0; i < random_samples; ++i) samples.push_back(sample::axiom_sample(axiom, rng));
    auto report = axiom_check(axiom, samples, model, s.horizon, s.budget);
    std::string text = report.to_string();
    std::cout << (s.machine ? text.substr(0, text.find('\n') + 1) : text);
    if (!report.passed()) throw Error(ErrorCode::InvalidArgument, "axiom check failed");
  });

  // Runs once every option is known, before the subcommand callbacks.
  app.parse_complete_callback([&] { s.open(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty())
      for (int i = 1; i < argc; ++i) {
        const std::string word = argv[i];
        if (word.rfind("--", 0) == 0) {
          i += word != "--machine";  // skip the option's value
          continue;
        }
        std::cerr << "error: " << Error(ErrorCode::UnknownCommand, "'" + word + "'").what() << "\n";
        return 2;
      }
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
