#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "macexp/channel_io.hpp"
#include "macexp/channels.hpp"
#include "macexp/curve.hpp"
#include "macexp/errors.hpp"
#include "macexp/figures.hpp"
#include "macexp/gaussian_exponents.hpp"
#include "macexp/linear_codes.hpp"
#include "macexp/sim.hpp"
#include "macexp/su_exponents.hpp"
#include "macexp/transform.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace macexp;

constexpr double ln2 = 0.6931471805599453;

// SNR values accept a dB suffix ("27db"); bare numbers are linear.
double parse_snr(const std::string& text) {
  std::string t = text;
  bool db = false;
  if (t.size() > 2) {
    std::string tail = t.substr(t.size() - 2);
    if (tail == "db" || tail == "dB" || tail == "DB" || tail == "Db") {
      db = true;
      t = t.substr(0, t.size() - 2);
    }
  }
  size_t used = 0;
  double v = std::stod(t, &used);
  while (used < t.size() && t[used] == ' ') ++used;
  if (used != t.size()) throw std::invalid_argument("malformed SNR value: " + text);
  return db ? std::pow(10.0, v / 10.0) : v;
}

std::vector<double> parse_prob_list(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = comma == std::string::npos ? text.substr(pos)
                                                 : text.substr(pos, comma - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

void add_bits(json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    if (j.contains(k) && j[k].is_number()) {
      j[std::string(k) + "_bits"] = j[k].get<double>() / ln2;
    }
  }
}

// ---- shared channel loading -------------------------------------------------

struct channel_flags {
  std::string channel_path;
  double bsc_crossover = -1.0;
  std::string noise_list;
  std::vector<double> binary_example;  // q, p
};

void register_channel_flags(CLI::App* sub, channel_flags& cf, bool allow_mac) {
  sub->add_option("--channel", cf.channel_path, "channel JSON file");
  sub->add_option("--bsc", cf.bsc_crossover, "binary symmetric channel crossover");
  sub->add_option("--noise", cf.noise_list,
                  "additive channel noise pmf, comma separated");
  if (allow_mac) {
    sub->add_option("--binary-example", cf.binary_example,
                    "binary selector family parameters q p")
        ->expected(2);
  }
}

// Single-user channel from flags (dmc plus optional additive form).
struct loaded_channel {
  std::optional<additive_noise_channel> additive;
  std::optional<dmc> single;
};

loaded_channel load_single_channel(const channel_flags& cf) {
  loaded_channel lc;
  int sources = !cf.channel_path.empty() + (cf.bsc_crossover >= 0.0) +
                !cf.noise_list.empty();
  if (sources != 1) {
    throw std::invalid_argument("give exactly one of --channel, --bsc, --noise");
  }
  if (!cf.channel_path.empty()) {
    channel_doc doc = channel_from_json_text(read_text_file(cf.channel_path));
    if (doc.kind == channel_kind::additive) {
      lc.additive = doc.additive;
      lc.single = doc.additive->to_dmc();
    } else if (doc.kind == channel_kind::dmc2) {
      lc.single = doc.single;
    } else {
      throw std::invalid_argument("this command expects a single-user channel");
    }
  } else if (cf.bsc_crossover >= 0.0) {
    lc.additive.emplace(2, pmf::bernoulli(cf.bsc_crossover));
    lc.single = lc.additive->to_dmc();
  } else {
    std::vector<double> probs = parse_prob_list(cf.noise_list);
    lc.additive.emplace(static_cast<int>(probs.size()), pmf(probs));
    lc.single = lc.additive->to_dmc();
  }
  return lc;
}

mac2 load_mac_channel(const channel_flags& cf) {
  int sources = !cf.channel_path.empty() + !cf.binary_example.empty() +
                !cf.noise_list.empty();
  if (sources != 1) {
    throw std::invalid_argument(
        "give exactly one of --channel, --binary-example, --noise");
  }
  if (!cf.channel_path.empty()) {
    channel_doc doc = channel_from_json_text(read_text_file(cf.channel_path));
    if (doc.kind == channel_kind::mac2pair) return *doc.mac;
    if (doc.kind == channel_kind::additive) {
      return mac_from_additive_noise(doc.additive->noise());
    }
    throw std::invalid_argument("this command expects a two-user channel");
  }
  if (!cf.binary_example.empty()) {
    return binary_example_channel(cf.binary_example[0], cf.binary_example[1]);
  }
  return mac_from_additive_noise(pmf(parse_prob_list(cf.noise_list)));
}

// ---- subcommand handlers ----------------------------------------------------

int run_su(const channel_flags& cf, double rate, bool bits,
           const std::string& out_path) {
  loaded_channel lc = load_single_channel(cf);
  const dmc& ch = *lc.single;
  su_exponent_report rep = best_exponent_report(ch, rate);
  double cap = capacity(ch);
  json j;
  j["rate"] = rate;
  j["capacity"] = cap;
  if (cap > 1e-9) {
    j["critical_rate"] = critical_rate(ch);
    j["expurgation_rate"] = expurgation_rate(ch);
  } else {
    j["critical_rate"] = nullptr;
    j["expurgation_rate"] = nullptr;
  }
  j["random_coding"] = rep.e_r;
  j["expurgated"] = rep.e_ex ? json(*rep.e_ex) : json(nullptr);
  j["best"] = rep.e_best;
  j["rho"] = rep.rho;
  j["ex_truncated"] = rep.ex_truncated;
  j["input"] = rep.input;
  if (lc.additive) {
    j["additive_random_coding"] = additive_random_coding_exponent(*lc.additive, rate);
  }
  if (bits) {
    add_bits(j, {"rate", "capacity", "critical_rate", "expurgation_rate",
                 "random_coding", "expurgated", "best"});
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int run_gaussian(const std::string& snr1_text, const std::string& snr2_text,
                 double rate, double rate2, double mu, bool bits,
                 const std::string& out_path) {
  json j;
  if (mu >= 0.0) {
    j["mu"] = mu;
    j["exponent"] = poltyrev_exponent(mu);
  } else if (!snr2_text.empty()) {
    double a1 = parse_snr(snr1_text);
    double a2 = parse_snr(snr2_text);
    gaussian_mac_params p{a1, a2, rate, rate2};
    nesting_result dn = distributed_nesting_exponent(p);
    gallager_ub_state ub = gallager_spherical_ub(rate + rate2, a1, a2);
    j["snr1"] = a1;
    j["snr2"] = a2;
    j["rate1"] = rate;
    j["rate2"] = rate2;
    j["in_r_struct"] = r_struct_contains(p);
    j["mu1"] = dn.mu1;
    j["mu2"] = dn.mu2;
    j["distributed_nesting"] = dn.exponent;
    j["gallager_ub"] = {{"value", ub.value},
                        {"rho", ub.rho},
                        {"theta1", ub.theta1},
                        {"theta2", ub.theta2}};
    j["single_user_merged"] = su_gaussian_best(rate + rate2, a1 + a2);
    if (bits) add_bits(j, {"rate1", "rate2"});
  } else {
    double a = parse_snr(snr1_text);
    j["snr"] = a;
    j["snr_db"] = 10.0 * std::log10(a);
    j["rate"] = rate;
    j["capacity"] = gaussian_capacity(a);
    j["gamma"] = gaussian_gamma(a);
    j["critical_rate"] = gaussian_critical_rate(a);
    j["expurgation_rate"] = gaussian_expurgation_rate(a);
    j["random_coding"] = su_gaussian_random_coding(rate, a);
    j["expurgated"] = su_gaussian_expurgated(rate, a);
    j["best"] = su_gaussian_best(rate, a);
    if (bits) {
      add_bits(j, {"rate", "capacity", "critical_rate", "expurgation_rate",
                   "random_coding", "expurgated", "best"});
    }
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int run_mac(const channel_flags& cf, double r1, double r2, bool time_sharing,
            bool bits, const std::string& out_path) {
  mac2 mac = load_mac_channel(cf);
  sw_exponents sw = slepian_wolf_mac_exponent(mac, r1, r2);
  json j;
  j["rate1"] = r1;
  j["rate2"] = r2;
  j["genie1"] = sw.genie1;
  j["genie2"] = sw.genie2;
  j["joint"] = sw.joint;
  j["exponent"] = sw.value();
  j["input1"] = sw.input1;
  j["input2"] = sw.input2;
  bool additive = is_additive(mac);
  j["additive"] = additive;
  if (additive) {
    additive_noise_channel assoc = associated_single_user(mac);
    j["associated_capacity"] = assoc.capacity();
    j["associated_exponent_at_rate_sum"] =
        additive_best_exponent(assoc, r1 + r2).value;
  }
  if (time_sharing) j["time_sharing"] = time_sharing_exponent(mac, r1, r2);
  if (bits) {
    add_bits(j, {"rate1", "rate2", "genie1", "genie2", "joint", "exponent"});
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int run_transform(const channel_flags& cf, const std::string& spec_path,
                  int identity_m, double rate_sum, const std::string& out_path) {
  mac2 mac = load_mac_channel(cf);
  transform_spec spec;
  if (!spec_path.empty()) {
    spec = transform_spec_from_json_text(read_text_file(spec_path));
  } else if (identity_m > 0) {
    spec = transform_spec::identity(identity_m);
  } else {
    throw std::invalid_argument("give --spec or --identity");
  }
  double dev = independence_deviation(mac, spec);
  virtual_channel vc = apply_transform(mac, spec);
  json j;
  j["deviation"] = dev;
  j["m"] = vc.m;
  j["k1"] = vc.k1;
  j["k2"] = vc.k2;
  j["noise"] = json::array();
  for (int i = 0; i < vc.noise.size(); ++i) j["noise"].push_back(vc.noise[i]);
  j["rate_sum"] = rate_sum;
  j["exponent"] = virtual_exponent(mac, spec, rate_sum);
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int run_search(const channel_flags& cf, int m, std::uint64_t budget,
               std::uint64_t seed, double rate_sum, const std::string& out_path) {
  mac2 mac = load_mac_channel(cf);
  search_result res = search_transform(mac, m, budget, seed, rate_sum);
  json j;
  j["m"] = m;
  j["budget"] = budget;
  j["evaluated"] = res.evaluated;
  j["exhaustive"] = res.exhaustive;
  j["rate_sum"] = rate_sum;
  j["exponent"] = res.exponent;
  j["spec"] = {{"m", res.spec.m},   {"f1", res.spec.f1}, {"f2", res.spec.f2},
               {"k1", res.spec.k1}, {"k2", res.spec.k2}, {"g", res.spec.g}};
  j["noise"] = json::array();
  for (int i = 0; i < res.channel.noise.size(); ++i) {
    j["noise"].push_back(res.channel.noise[i]);
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

json estimate_json(const mc_estimate& e) {
  return {{"trials", e.trials},
          {"errors", e.errors},
          {"p_hat", e.p_hat},
          {"ci", {e.ci_low, e.ci_high}}};
}

struct simulate_flags {
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  // linear code mode
  int p = 0, k = 0, n = 0, k1 = -1;
  std::uint64_t code_seed = 1;
  std::string gen_path;
  std::string noise_list;
  double bsc_crossover = -1.0;
  std::string tie = "lex";
  // pam mode
  bool pam = false;
  int l1 = 0, l2 = 0;
  double sigma = 0.0;
};

int run_simulate(const simulate_flags& sf, const std::string& out_path) {
  json j;
  if (sf.pam) {
    pam_mc_result r = simulate_nested_pam(sf.l1, sf.l2, sf.sigma, sf.trials, sf.seed);
    j["config"] = {{"mode", "pam"},    {"l1", sf.l1},
                   {"l2", sf.l2},      {"sigma", sf.sigma},
                   {"trials", sf.trials}, {"seed", sf.seed}};
    j["estimate"] = {{"joint", estimate_json(r.joint)},
                     {"user1", estimate_json(r.user1)},
                     {"user2", estimate_json(r.user2)}};
    j["predicted_symbol_error"] = r.predicted_symbol_error;
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }

  tie_rule rule = sf.tie == "error" ? tie_rule::tie_is_error : tie_rule::lexicographic_min;
  pmf noise = [&] {
    if (sf.bsc_crossover >= 0.0) return pmf::bernoulli(sf.bsc_crossover);
    if (!sf.noise_list.empty()) return pmf(parse_prob_list(sf.noise_list));
    throw std::invalid_argument("give --noise or --bsc for the code simulation");
  }();
  generator_matrix g = [&] {
    if (!sf.gen_path.empty()) return generator_from_json_text(read_text_file(sf.gen_path));
    if (sf.p < 2 || sf.n < 1) {
      throw std::invalid_argument("give --gen or all of --p/--k/--n");
    }
    return generator_matrix::random_full_rank(sf.p, sf.k, sf.n, sf.code_seed);
  }();

  // Exhaustive comparison values are cheap only for small spaces.
  bool exact_ok = g.n() * std::log(static_cast<double>(g.p())) <= 18.0 * ln2;

  j["config"] = {{"mode", sf.k1 >= 0 ? "split" : "single"},
                 {"p", g.p()},
                 {"k", g.k()},
                 {"n", g.n()},
                 {"tie_rule", sf.tie == "error" ? "error" : "lex"},
                 {"trials", sf.trials},
                 {"seed", sf.seed}};
  if (sf.gen_path.empty()) j["config"]["code_seed"] = sf.code_seed;

  if (sf.k1 >= 0) {
    split_code sc = split(g, sf.k1);
    j["config"]["k1"] = sf.k1;
    split_mc_estimates est = simulate_split_mac(sc, noise, rule, sf.trials, sf.seed);
    j["estimate"] = {{"joint", estimate_json(est.joint)},
                     {"user1", estimate_json(est.user1)},
                     {"user2", estimate_json(est.user2)}};
    if (exact_ok) {
      split_error_probs ex = exact_split_mac_error_probability(sc, noise, rule);
      j["exact_if_available"] = {{"joint", ex.joint},
                                 {"user1", ex.user1},
                                 {"user2", ex.user2}};
    } else {
      j["exact_if_available"] = nullptr;
    }
  } else {
    mc_estimate est = simulate_single_user(g, noise, rule, sf.trials, sf.seed);
    j["estimate"] = estimate_json(est);
    j["exact_if_available"] =
        exact_ok ? json(exact_ml_error_probability(g, noise, rule)) : json(nullptr);
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int run_figure(const std::string& id, int resolution, const std::string& format,
               const std::string& out_path) {
  figure_data f = make_figure(id, resolution);
  std::string content = format == "json" ? figure_to_json(f) : figure_to_csv(f);
  emit(content, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"error exponents, channel transforms, and distributed code tools"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout")
      ->configurable(false);
  bool bits = false;
  app.add_flag("--bits", bits, "also report rates/exponents in bits");

  // su
  auto* su = app.add_subcommand("su", "single-user discrete channel exponents");
  channel_flags su_cf;
  register_channel_flags(su, su_cf, false);
  double su_rate = 0.0;
  su->add_option("--rate", su_rate, "rate in nats")->required();

  // gaussian
  auto* ga = app.add_subcommand("gaussian", "Gaussian channel exponents");
  std::string ga_snr1, ga_snr2;
  double ga_rate = 0.0, ga_rate2 = 0.0, ga_mu = -1.0;
  ga->add_option("--snr", ga_snr1, "SNR, linear or with db suffix");
  ga->add_option("--snr2", ga_snr2, "second user SNR (two-user mode)");
  ga->add_option("--rate", ga_rate, "rate (user 1) in nats");
  ga->add_option("--rate2", ga_rate2, "rate of user 2 in nats");
  ga->add_option("--mu", ga_mu, "evaluate the unconstrained-AWGN exponent at mu");

  // mac
  auto* mc = app.add_subcommand("mac", "two-user discrete channel exponents");
  channel_flags mac_cf;
  register_channel_flags(mc, mac_cf, true);
  double mac_r1 = 0.0, mac_r2 = 0.0;
  bool mac_ts = false;
  mc->add_option("--rate1", mac_r1, "rate of user 1 in nats");
  mc->add_option("--rate2", mac_r2, "rate of user 2 in nats");
  mc->add_flag("--time-sharing", mac_ts, "include the time-sharing exponent");

  // transform
  auto* tr = app.add_subcommand("transform", "apply a dither/precoding transform");
  channel_flags tr_cf;
  register_channel_flags(tr, tr_cf, true);
  std::string tr_spec;
  int tr_identity = 0;
  double tr_rate_sum = 0.0;
  tr->add_option("--spec", tr_spec, "transform spec JSON file");
  tr->add_option("--identity", tr_identity, "use the identity labeling modulo m");
  tr->add_option("--rate-sum", tr_rate_sum, "sum rate for the virtual exponent");

  // search
  auto* se = app.add_subcommand("search", "search transform specs for a channel");
  channel_flags se_cf;
  register_channel_flags(se, se_cf, true);
  int se_m = 2;
  std::uint64_t se_budget = 20000, se_seed = 1;
  double se_rate_sum = 0.0;
  se->add_option("--m", se_m, "virtual channel modulus (prime)");
  se->add_option("--budget", se_budget, "evaluation budget");
  se->add_option("--seed", se_seed, "sampling seed for non-exhaustive search");
  se->add_option("--rate-sum", se_rate_sum, "sum rate for ranking");

  // simulate
  auto* si = app.add_subcommand("simulate", "Monte Carlo decoding experiments");
  simulate_flags sf;
  si->add_option("--seed", sf.seed, "simulation seed")->required();
  si->add_option("--trials", sf.trials, "number of trials");
  si->add_option("--p", sf.p, "field size (prime)");
  si->add_option("--k", sf.k, "code dimension");
  si->add_option("--n", sf.n, "block length");
  si->add_option("--k1", sf.k1, "rows assigned to user 1 (split mode)");
  si->add_option("--code-seed", sf.code_seed, "generator sampling seed");
  si->add_option("--gen", sf.gen_path, "generator matrix JSON file");
  si->add_option("--noise", sf.noise_list, "noise pmf, comma separated");
  si->add_option("--bsc", sf.bsc_crossover, "binary symmetric noise crossover");
  si->add_option("--tie-rule", sf.tie, "lex or error")
      ->check(CLI::IsMember({"lex", "error"}));
  si->add_flag("--pam", sf.pam, "nested PAM experiment");
  si->add_option("--l1", sf.l1, "fine constellation size (user 2)");
  si->add_option("--l2", sf.l2, "coarse constellation size (user 1)");
  si->add_option("--sigma", sf.sigma, "noise standard deviation");

  // figure
  auto* fi = app.add_subcommand("figure", "emit the data behind a reference figure");
  std::string fi_id, fi_format = "csv";
  int fi_resolution = 0;
  fi->add_option("id", fi_id, "figure id")
      ->required()
      ->check(CLI::IsMember(figure_names()));
  fi->add_option("--resolution", fi_resolution, "points per curve (>= 2)");
  fi->add_option("--format", fi_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // Let --out / --bits appear after the subcommand name.
  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    s->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (su->parsed()) return run_su(su_cf, su_rate, bits, out_path);
    if (ga->parsed()) {
      if (ga_mu < 0.0 && ga_snr1.empty()) {
        throw std::invalid_argument("give --snr or --mu");
      }
      return run_gaussian(ga_snr1, ga_snr2, ga_rate, ga_rate2, ga_mu, bits, out_path);
    }
    if (mc->parsed()) return run_mac(mac_cf, mac_r1, mac_r2, mac_ts, bits, out_path);
    if (tr->parsed()) return run_transform(tr_cf, tr_spec, tr_identity, tr_rate_sum, out_path);
    if (se->parsed()) return run_search(se_cf, se_m, se_budget, se_seed, se_rate_sum, out_path);
    if (si->parsed()) return run_simulate(sf, out_path);
    if (fi->parsed()) return run_figure(fi_id, fi_resolution, fi_format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
