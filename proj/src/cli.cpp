#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "toric/errors.hpp"
#include "toric/json_codec.hpp"
#include "toric/period.hpp"
#include "toric/whittaker.hpp"

namespace toric::cli {

using nlohmann::json;
namespace codec = toric::json;

namespace {

struct RunConfig {
  int p = 3;
  int level = 1;
  int trials = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_path;
  std::string input;
  std::string display = "Y";
  std::string check;
  std::string q = "symbolic";
  bool sabotage = false;
};

class Emitter {
 public:
  Emitter(std::ostream& out, const std::string& path) : out_(out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open " + path + " for writing");
    }
  }
  void line(const json& j) {
    const std::string s = j.dump();
    out_ << s << '\n';
    if (file_.is_open()) file_ << s << '\n';
  }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

std::string show(const LaurentA& a, const std::string& display) {
  return display == "X" ? to_X_display(a) : a.str();
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed * 0x100000001b3ULL + static_cast<std::uint64_t>(trial);
}

// ------------------------------------------------------------- identities

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
  const Context ctx = Context::symbolic();
  const Scalar one = ctx.field.one();
  const LaurentA unit = LaurentA::constant(one);
  const LaurentA y1 = LaurentA::monomial(one, 1, 0);
  // The sabotage hook flips the sign of the expected cs factor.
  const LaurentA expected_cs =
      unit + LaurentA::monomial(cfg.sabotage ? ctx.q.inv() : -ctx.q.inv(), 1, -1);
  std::vector<Check> checks;
  auto record = [&](std::string name, bool pass, const std::string& detail) {
    checks.push_back({std::move(name), pass, detail});
  };

  const LaurentA cs = cs_factor_regularized(ctx);
  record("cs_factor", cs == expected_cs, "Lambda(f^sph) = " + show(cs, cfg.display));

  {
    const ZPoly series = zeta_window(PSVector::sph(), -2, 8, ctx);
    ZPoly normalized(ctx.field, -2, 8);
    bool ok = true;
    for (int k = -2; k <= 8; ++k) {
      auto c = divide_exact(series.coeff(k), expected_cs);
      if (!c) ok = false;
      else normalized.set(k, *c);
    }
    const LaurentA lambda = ok ? eval_Z1(zpoly_mul_clear(normalized, 2)) : LaurentA(ctx.field);
    record("lambda_W_sph", ok && lambda == unit, "lambda(W^sph) = " + show(lambda, cfg.display));
  }

  {
    const PeriodWindow win = default_window(1);
    const ZPoly cleared = zpoly_mul_clear(zeta_window(PSVector::phi_w(), win.kmin, win.kmax, ctx), win.bound);
    ZPoly expected(ctx.field, win.kmin, win.kmax);
    expected.set(0, unit);
    expected.set(1, -y1);
    const LaurentA lA = period_lA(PSVector::phi_w(), ctx);
    record("zeta_f0", cleared == expected, "I(W_f0, Z) L(Z)^{-1} = " + cleared.str());
    record("lA_f0", lA == unit - y1, "l_A(f0) = " + show(lA, cfg.display));
  }

  const auto [first, second] = theorem_ideal(ctx);
  {
    const auto cmp = ideal_equal(first, second);
    std::size_t certs = 0;
    for (const auto* v : {&cmp.second_in_first, &cmp.first_in_second})
      for (const auto& c : *v) certs += c.has_value();
    record("presentation_equality", cmp.equal && certs == 4, std::to_string(certs) + " certificates");
  }
  {
    const bool principal = is_principal_pair(first);
    const bool proper = LaurentIdeal(first).is_proper();
    record("non_principal", !principal && proper,
           std::string("principal=") + (principal ? "true" : "false") + " proper=" + (proper ? "true" : "false"));
  }
  {
    const PeriodL1 phi = period_l1(PSVector::phi_w(), ctx);
    const PeriodL1 sph = period_l1(PSVector::sph(), ctx);
    record("l1_escape", !phi.in_A && sph.in_A && *sph.in_A == unit,
           "l_1(f0) = " + phi.value.str() + (phi.in_A ? " (in A)" : " (not in A)"));
  }

  bool all = true;
  std::vector<std::string> failed;
  for (const auto& c : checks) {
    out << json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}}.dump() << '\n';
    if (!c.pass) {
      all = false;
      failed.push_back(c.name);
    }
  }
  out << json{{"summary", {{"checks", checks.size()}, {"failed", failed}}}}.dump() << '\n';
  return all ? kOk : kFalsified;
}

// ---------------------------------------------------------------- theorem

json trial_line(int index, std::uint64_t seed, const json& body) {
  json j = body;
  j["trial"] = index;
  j["seed"] = seed;
  return j;
}

int cmd_theorem(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Context ctx = Context::numeric(cfg.p);
  const LaurentIdeal ideal(theorem_ideal(ctx).first);
  Emitter emit(out, cfg.out_path);

  int not_member = 0, errors = 0;
  // Generators first: l_A of the two distinguished vectors.
  const std::pair<const char*, PSVector> generators[] = {{"sph", PSVector::sph()}, {"phi_w", PSVector::phi_w()}};
  for (const auto& [name, f] : generators) {
    const PeriodReport r = verify_image(f, ctx, &ideal);
    json j = codec::encode(r);
    j["generator"] = name;
    emit.line(j);
    if (!r.member) ++not_member;
  }

  std::vector<json> lines(static_cast<std::size_t>(cfg.trials));
  std::vector<int> status(static_cast<std::size_t>(cfg.trials), 0);  // 0 member, 1 not member, 2 error
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.trials; i = next++) {
      const std::uint64_t s = trial_seed(cfg.seed, i);
      try {
        const PeriodReport r = verify_image(random_table(cfg.p, cfg.level, s), ctx, &ideal);
        lines[i] = trial_line(i, s, codec::encode(r));
        if (!r.member || !r.rational) status[i] = 1;
      } catch (const std::exception& e) {
        lines[i] = trial_line(i, s, {{"error", e.what()}});
        status[i] = 2;
      }
    }
  };
  const int jobs = std::clamp(cfg.jobs, 1, cfg.trials);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (int i = 0; i < cfg.trials; ++i) {
    emit.line(lines[i]);
    if (status[i] == 1) {
      ++not_member;
      err << "FALSIFICATION: trial " << i << " produced a period outside the ideal\n";
    } else if (status[i] == 2) {
      ++errors;
      err << "error in trial " << i << ": " << lines[i]["error"].get<std::string>() << '\n';
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit.line({{"summary",
              {{"p", cfg.p},
               {"level", cfg.level},
               {"trials", cfg.trials},
               {"seed", cfg.seed},
               {"members", cfg.trials - std::count_if(status.begin(), status.end(), [](int s) { return s != 0; })},
               {"not_member", not_member},
               {"errors", errors},
               {"elapsed_ms", ms}}}});
  return not_member == 0 && errors == 0 ? kOk : kFalsified;
}

// ----------------------------------------------------------------- period

int cmd_period(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.input);
  if (!in) throw ParseError("cannot read " + cfg.input);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto file = codec::parse_vector_file(buf.str());
  const Context ctx = file.symbolic ? Context::symbolic() : Context::numeric(*file.vector.prime());
  const PeriodReport r = verify_image(file.vector, ctx);
  const PeriodL1 l1 = period_l1(file.vector, ctx);
  nlohmann::json j = codec::encode(r);
  j["mode"] = file.symbolic ? "symbolic" : "p=" + std::to_string(*ctx.prime);
  j["l1"] = {{"num", codec::encode(l1.value.num())},
             {"den", codec::encode(l1.value.den())},
             {"display", l1.value.str()},
             {"in_A", l1.in_A.has_value()}};
  Emitter emit(out, cfg.out_path);
  emit.line(j);
  return r.member && r.rational ? kOk : kFalsified;
}

// ------------------------------------------------------------------ ideal

int cmd_ideal(const RunConfig& cfg, std::ostream& out) {
  Context ctx = Context::symbolic();
  if (cfg.q != "symbolic") {
    long q = 0;
    try {
      std::size_t used = 0;
      q = std::stol(cfg.q, &used);
      if (used != cfg.q.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("--q expects 'symbolic' or an integer, got '" + cfg.q + "'");
    }
    if (q < 2) throw ParseError("--q must be at least 2");
    ctx = {Field::rationals(), Scalar(Rational(q)), std::nullopt};
  }
  const auto [first, second] = theorem_ideal(ctx);
  json j{{"check", cfg.check}, {"q", cfg.q}, {"first", first.str()}, {"second", second.str()}};
  bool ok = false;
  if (cfg.check == "equality") {
    const auto cmp = ideal_equal(first, second);
    json certs = json::array();
    for (const auto* v : {&cmp.second_in_first, &cmp.first_in_second})
      for (const auto& c : *v) certs.push_back(c ? codec::encode_certificate(*c, true) : nlohmann::json(nullptr));
    j["equal"] = cmp.equal;
    j["certificates"] = certs;
    ok = cmp.equal;
  } else if (cfg.check == "principal") {
    const bool principal = is_principal_pair(first);
    j["principal"] = principal;
    ok = !principal;
  } else {
    const LaurentIdeal ideal(first);
    j["proper"] = ideal.is_proper();
    j["one_is_member"] = ideal.membership(LaurentA::constant(ctx.field.one())).has_value();
    ok = ideal.is_proper();
  }
  out << j.dump() << '\n';
  return ok ? kOk : kFalsified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Toric period checks for the unramified principal series of GL2"};
  app.require_subcommand(1);

  auto* identities = app.add_subcommand("identities", "Symbolic identity checks");
  identities->add_option("--display", cfg.display, "Coordinates for printed values")
      ->check(CLI::IsMember({"X", "Y"}));
  identities->add_flag("--sabotage", cfg.sabotage, "Flip a sign in one expected value (self-test)");

  auto* theorem = app.add_subcommand("theorem", "Random-table membership trials");
  theorem->add_option("--p", cfg.p, "Prime")->required()->check(CLI::IsMember({2, 3, 5, 7}));
  theorem->add_option("--level", cfg.level, "Invariance level n")->required()->check(CLI::Range(1, 3));
  theorem->add_option("--trials", cfg.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  theorem->add_option("--seed", cfg.seed, "Seed")->required();
  theorem->add_option("--out", cfg.out_path, "Also write the report here");
  theorem->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* period = app.add_subcommand("period", "Periods of one vector file");
  period->add_option("--input", cfg.input, "Vector file (JSON)")->required();
  period->add_option("--out", cfg.out_path, "Also write the report here");

  auto* ideal = app.add_subcommand("ideal", "Diagnostics for the theorem ideal");
  ideal->add_option("--check", cfg.check, "equality, principal or proper")
      ->required()
      ->check(CLI::IsMember({"equality", "principal", "proper"}));
  ideal->add_option("--q", cfg.q, "'symbolic' or an integer value of q");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*identities) return cmd_identities(cfg, out);
    if (*theorem) return cmd_theorem(cfg, out, err);
    if (*period) return cmd_period(cfg, out);
    return cmd_ideal(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ClassCoverageError& e) {
    err << "class coverage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFalsified;
  }
}

}  // namespace toric::cli
