/*
   Copyright 2026 The maxmult Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with argument vectors and string streams.

#ifndef MAXMULT_CLI_HPP
#define MAXMULT_CLI_HPP

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "report_json.hpp"

namespace maxmult::cli {

enum ExitCode : int { kPass = 0, kFinding = 1, kUsage = 2, kResource = 3 };

using nlohmann::ordered_json;

struct RunConfig {
  std::uint32_t characteristic = 0;  // 0: take it from the input
  std::string seed_text = "default";
  std::uint64_t seed = kDefaultSeed;
  int replicas = 3;
  bool json = false;
  std::uint64_t budget_pairs = GBLimits{}.max_pairs;
  unsigned budget_degree = GBLimits{}.max_degree;
  bool include_long_running = false;
  bool timing = false;

  GBLimits limits() const { return GBLimits{budget_pairs, budget_degree}; }
  Genericity genericity() const {
    Genericity g;
    g.seed = seed;
    g.replicas = replicas;
    return g;
  }
};

struct Input {
  std::string role;
  std::string file;
  std::string hash;
};

/// What a subcommand hands back for printing.
struct Outcome {
  ordered_json result = ordered_json::object();
  bool finding = false;
  std::string text;  // preformatted text output; empty means "print result keys"
};

namespace detail {

inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) h = (h ^ ch) * 1099511628211ULL;
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::uint64_t parse_seed(const std::string& text) {
  if (text == "default") return kDefaultSeed;
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("--seed expects an unsigned 64-bit integer or 'random'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError("--seed is out of range");
  }
}

inline std::string text_value(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const ordered_json& e) { return e.is_string(); })) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get<std::string>();
    return out + ")";
  }
  return v.dump();
}

}  // namespace detail

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Multiplicity, depth and linkage checks for graded ideals", "maxmult"};
    app.require_subcommand(1);
    app.fallthrough();
    add_global_options(app);
    add_commands(app);

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kPass;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kPass;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
    return dispatch();
  }

 private:
  void add_global_options(CLI::App& app) {
    app.add_option("--char", cfg_.characteristic, "Prime characteristic (overrides the ideal file)");
    app.add_option("--seed", cfg_.seed_text, "Seed: unsigned 64-bit integer or 'random'");
    app.add_option("--replicas", cfg_.replicas, "Independent seeds per generic choice")->check(CLI::Range(1, 64));
    app.add_flag("--json", cfg_.json, "Emit a JSON report");
    app.add_option("--budget-pairs", cfg_.budget_pairs, "Maximum critical pairs per Groebner basis");
    app.add_option("--budget-degree", cfg_.budget_degree, "Maximum degree of a Groebner basis element");
    app.add_flag("--include-long-running", cfg_.include_long_running, "Include long-running corpus entries");
    app.add_flag("--timing", cfg_.timing, "Include elapsed times in suite reports");
  }

  CLI::App* command(CLI::App& app, const std::string& name, const std::string& help,
                    std::function<Outcome()> handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([this, name, handler] {
      command_ = name;
      handler_ = handler;
    });
    return sub;
  }

  void add_commands(CLI::App& app) {
    auto one_file = [&](const std::string& name, const std::string& help, Outcome (Runner::*fn)()) {
      auto* sub = command(app, name, help, [this, fn] { return (this->*fn)(); });
      sub->add_option("file", file_a_, "Ideal file")->required();
    };
    one_file("profile", "Dimension, height, multiplicity and Hilbert series", &Runner::do_profile);
    one_file("s-invariant", "s-invariant of a Cohen-Macaulay quotient", &Runner::do_s_invariant);
    one_file("cm", "Cohen-Macaulay test by artinian reduction length", &Runner::do_cm);
    one_file("depth", "Depth via regular sequences of general linear forms", &Runner::do_depth);
    one_file("unmixed-part", "Unmixed part by double linkage", &Runner::do_unmixed);

    auto jf = [&](const std::string& name, const std::string& help, Outcome (Runner::*fn)()) {
      auto* sub = command(app, name, help, [this, fn] { return (this->*fn)(); });
      sub->add_option("--J", file_a_, "Ideal file for J")->required();
      sub->add_option("--F", poly_, "Homogeneous form F")->required();
    };
    jf("check-bound", "Multiplicity bound for I = J + (F)", &Runner::do_check_bound);
    jf("classify", "Depth classification of a maximal decomposition", &Runner::do_classify);
    jf("colon-structure", "Shape of J : F", &Runner::do_colon_structure);

    auto* construct = command(app, "construct", "Maximal decomposition from C'", [this] { return do_construct(); });
    construct->add_option("--I", file_a_, "Ideal file for I")->required();
    construct->add_option("--C", file_b_, "Ideal file for C'")->required();

    auto* mprimary = command(app, "mprimary", "m-primary decomposition J = I' + F*m", [this] { return do_mprimary(); });
    mprimary->add_option("--I", file_a_, "Ideal file for I")->required();
    mprimary->add_option("--F", poly_, "Minimal generator F")->required();

    auto* lk = command(app, "link", "Link G : I", [this] { return do_link(); });
    lk->add_option("--G", file_a_, "Ideal file for the complete intersection G")->required();
    lk->add_option("--I", file_b_, "Ideal file for I")->required();

    auto* qg = command(app, "qg", "Quasi-Gorenstein construction Q = G : (G + (h))", [this] { return do_qg(); });
    qg->set_help_flag("--help", "Print this help message and exit");
    auto* g_opt = qg->add_option("--G", file_a_, "Ideal file for the complete intersection G");
    auto* d_opt = qg->add_option("--degrees", degrees_, "Degrees of a monomial complete intersection")->delimiter(',');
    qg->add_option("--vars", vars_, "Variables when --degrees is used")->delimiter(',');
    qg->add_option("--h", poly_, "Homogeneous element h")->required();
    g_opt->excludes(d_opt);

    auto* corpus = command(app, "corpus", "Named ideals: list, emit, check, four-quadrics", [this] { return do_corpus(); });
    corpus->add_option("action", corpus_action_, "list | emit | check | four-quadrics | catalecticant")->required();
    corpus->add_option("names", corpus_args_, "Entry names");
    corpus->add_flag("--all", corpus_all_, "All entries of the family");
    corpus->add_option("--out", out_file_, "Write emitted ideal to a file");

    command(app, "suite", "Run the acceptance criteria", [this] { return do_suite(); });
  }

  int dispatch() {
    try {
      cfg_.seed = detail::parse_seed(cfg_.seed_text);
      if (cfg_.characteristic && !is_prime(cfg_.characteristic)) throw ParseError("--char must be a prime");
      Outcome o = handler_();
      emit(o.finding ? "finding" : "pass", o, nullptr, nullptr);
      return o.finding ? kFinding : kPass;
    } catch (const ResourceError& e) {
      return fail(kResource, "resource", e.what());
    } catch (const SeedDisagreement& e) {
      return fail(kResource, "seed_disagreement", e.what());
    } catch (const RetriableError& e) {
      return fail(kResource, "retries_exhausted", e.what());
    } catch (const PreconditionError& e) {
      return fail(kUsage, "precondition", e.what());
    } catch (const ParseError& e) {
      return fail(kUsage, "parse", e.what());
    } catch (const RingMismatch& e) {
      return fail(kUsage, "ring_mismatch", e.what());
    } catch (const Error& e) {
      return fail(kUsage, "error", e.what());
    }
  }

  int fail(int code, const char* kind, const std::string& message) {
    Outcome o;
    emit("error", o, kind, &message);
    return code;
  }

  ordered_json config_json() const {
    return {{"characteristic", characteristic_used_},
            {"seed", cfg_.seed},
            {"seedSource", cfg_.seed_text == "random" ? "random" : "fixed"},
            {"replicas", cfg_.replicas},
            {"budgetPairs", cfg_.budget_pairs},
            {"budgetDegree", cfg_.budget_degree},
            {"includeLongRunning", cfg_.include_long_running}};
  }

  void emit(const char* status, const Outcome& o, const char* error_kind, const std::string* message) {
    if (cfg_.json) {
      ordered_json rep{{"schema", 1}, {"command", command_}};
      ordered_json inputs = ordered_json::array();
      for (const auto& in : inputs_) inputs.push_back({{"role", in.role}, {"file", in.file}, {"hash", in.hash}});
      rep["inputs"] = inputs;
      rep["config"] = config_json();
      rep["status"] = status;
      if (error_kind) {
        rep["result"] = nullptr;
        rep["error"] = {{"kind", error_kind}, {"message", *message}};
      } else {
        rep["result"] = o.result;
      }
      out_ << rep.dump(2) << "\n";
      return;
    }
    if (error_kind) {
      err_ << "error (" << error_kind << "): " << *message << "\n";
      return;
    }
    if (!o.text.empty()) {
      out_ << o.text;
    } else {
      for (const auto& [key, value] : o.result.items()) out_ << key << ": " << detail::text_value(value) << "\n";
    }
    out_ << "status: " << status << "  (characteristic " << characteristic_used_ << ", seed " << cfg_.seed << ")\n";
  }

  // ---- inputs

  IdealFile load(const std::string& role, const std::string& path) {
    std::string bytes = detail::slurp(path);
    IdealFile f = parse_ideal_text(bytes, cfg_.characteristic, cfg_.limits());
    inputs_.push_back({role, path, detail::fnv1a_hex(bytes)});
    characteristic_used_ = f.ring->characteristic();
    return f;
  }

  Ideal load_ideal(const std::string& role, const std::string& path) {
    IdealFile f = load(role, path);
    return Ideal(f.ring, f.generators);
  }

  Polynomial form(const RingPtr& ring, const std::string& role) {
    inputs_.push_back({role, "", detail::fnv1a_hex(poly_)});
    return parse_polynomial(ring, poly_);
  }

  std::uint32_t corpus_characteristic() {
    characteristic_used_ = cfg_.characteristic ? cfg_.characteristic : kDefaultCharacteristic;
    return characteristic_used_;
  }

  // ---- commands

  Outcome do_profile() {
    Ideal I = load_ideal("I", file_a_);
    Outcome o;
    o.result["profile"] = report::to_json(profile(I));
    o.result["hilbertSeries"] = report::to_json(hilbert_series(I));
    return o;
  }

  Outcome do_s_invariant() {
    Ideal J = load_ideal("J", file_a_);
    auto s = s_invariant(J, cfg_.genericity());
    Outcome o;
    o.result = {{"s", s.value}, {"witness", format_polynomial(s.witness)}, {"seedsTried", s.seeds_tried},
                {"socleType", to_string(socle_type(J, cfg_.genericity()))}};
    return o;
  }

  Outcome do_cm() {
    Ideal I = load_ideal("I", file_a_);
    auto cm = analyze_cohen_macaulay(I, cfg_.genericity());
    ordered_json seeds = ordered_json::array();
    for (const auto& A : cm.reductions) seeds.push_back(A.seed);
    Outcome o;
    o.result = {{"cohenMacaulay", cm.cohen_macaulay}, {"multiplicity", cm.profile.multiplicity},
                {"lengths", cm.lengths},             {"minLength", cm.min_length},
                {"seedsAgree", cm.seeds_agree},      {"seeds", seeds}};
    return o;
  }

  Outcome do_depth() {
    Ideal I = load_ideal("I", file_a_);
    auto d = depth_analysis(I, cfg_.genericity());
    Outcome o;
    o.result = {{"depth", d.depth},
                {"dim", d.dim},
                {"pd", static_cast<int>(I.ring()->nvars()) - d.depth},
                {"perSeed", d.per_seed},
                {"seedsAgree", d.seeds_agree}};
    return o;
  }

  Outcome do_unmixed() {
    Ideal I = load_ideal("I", file_a_);
    Ideal U = unmixed_part(I, cfg_.seed);
    Outcome o;
    o.result = {{"unmixedPart", report::ideal(U)},
                {"isUnmixed", ideal_equal(I, U)},
                {"multiplicity", I.is_zero() ? 1 : profile(U).multiplicity}};
    return o;
  }

  Outcome do_check_bound() {
    Ideal J = load_ideal("J", file_a_);
    auto rep = check_bound(J, form(J.ring(), "F"), cfg_.genericity());
    return {report::to_json(rep), !rep.verified};
  }

  Outcome do_classify() {
    Ideal J = load_ideal("J", file_a_);
    auto rep = classify_decomposition(J, form(J.ring(), "F"), cfg_.genericity());
    return {report::to_json(rep), !rep.verified};
  }

  Outcome do_colon_structure() {
    Ideal J = load_ideal("J", file_a_);
    return {report::to_json(colon_structure(J, form(J.ring(), "F"))), false};
  }

  Outcome do_construct() {
    Ideal I = load_ideal("I", file_a_);
    Ideal C = load_ideal("Cprime", file_b_);
    if (!same_ring(I.ring(), C.ring())) throw RingMismatch("I and C' are declared over different rings");
    auto rep = char_construct(I, C, cfg_.genericity());
    return {report::to_json(rep), !rep.verified};
  }

  Outcome do_mprimary() {
    Ideal I = load_ideal("I", file_a_);
    auto rep = mprimary_decomposition(I, form(I.ring(), "F"), cfg_.genericity());
    return {report::to_json(rep), !rep.verified};
  }

  Outcome do_link() {
    Ideal G = load_ideal("G", file_a_);
    Ideal I = load_ideal("I", file_b_);
    if (!same_ring(G.ring(), I.ring())) throw RingMismatch("G and I are declared over different rings");
    auto rec = link(G, I);
    return {report::to_json(rec), !rec.identity_holds};
  }

  Outcome do_qg() {
    QGReport rep = [&] {
      if (!file_a_.empty()) {
        Ideal G = load_ideal("G", file_a_);
        return qg_construct(G, form(G.ring(), "h"), cfg_.genericity());
      }
      if (degrees_.empty() || vars_.empty()) throw ParseError("qg needs --G or both --degrees and --vars");
      auto ring = make_ring(corpus_characteristic(), vars_, MonomialOrder::grevlex(), cfg_.limits());
      return qg_construct(degrees_, form(ring, "h"), cfg_.genericity());
    }();
    return {report::to_json(rep), !rep.verified};
  }

  ordered_json check_entry(const CorpusEntry& e, bool& match) {
    const Expected& x = e.expected;
    ordered_json expected = ordered_json::object(), computed = ordered_json::object();
    match = true;
    auto compare = [&](const char* key, const auto& want, const auto& got) {
      expected[key] = want;
      computed[key] = got;
      if (!(want == got)) match = false;
    };
    auto p = profile(e.ideal);
    if (x.height) compare("height", *x.height, p.height);
    if (x.multiplicity) compare("multiplicity", *x.multiplicity, p.multiplicity);
    if (!x.generator_degrees.empty()) {
      std::vector<int> degs;
      for (const auto& g : e.ideal.generators()) degs.push_back(g.degree());
      compare("generatorDegrees", x.generator_degrees, degs);
    }
    if (x.pd) compare("pd", *x.pd, static_cast<int>(e.ideal.ring()->nvars()) - depth_of(e.ideal, cfg_.genericity()));
    if (x.cohen_macaulay) compare("cohenMacaulay", *x.cohen_macaulay, is_cohen_macaulay(e.ideal, cfg_.genericity()));
    if (x.s) compare("s", *x.s, s_invariant(e.ideal, cfg_.genericity()).value);
    if (x.maximal && e.Cprime) {
      auto cc = char_construct(e.ideal, *e.Cprime, cfg_.genericity());
      bool maximal = cc.outcome == CharConstruction::Outcome::constructed && cc.verified && cc.decomposition &&
                     cc.decomposition->is_maximal;
      compare("maximal", *x.maximal, maximal);
    }
    return {{"name", e.name}, {"provenance", e.provenance}, {"expected", expected}, {"computed", computed},
            {"match", match}};
  }

  Outcome do_corpus() {
    const std::uint32_t p = corpus_characteristic();
    Outcome o;
    if (corpus_action_ == "list") {
      o.result["entries"] = corpus_names(cfg_.include_long_running);
      std::ostringstream os;
      for (const auto& n : corpus_names(cfg_.include_long_running)) os << n << "\n";
      o.text = os.str();
      return o;
    }
    if (corpus_action_ == "emit") {
      if (corpus_args_.size() != 1) throw ParseError("corpus emit takes exactly one entry name");
      auto e = corpus_entry(corpus_args_[0], p, cfg_.limits());
      std::string text = format_ideal_text(e.ideal.ring(), e.ideal.generators());
      if (!out_file_.empty()) {
        std::ofstream f(out_file_);
        if (!f) throw ParseError("cannot write '" + out_file_ + "'");
        f << text;
      }
      o.result = {{"name", e.name}, {"text", text}};
      o.text = out_file_.empty() ? text : "wrote " + out_file_ + "\n";
      return o;
    }

    std::vector<std::string> names;
    if (corpus_action_ == "check") {
      names = corpus_all_ ? corpus_names(cfg_.include_long_running) : corpus_args_;
    } else if (corpus_action_ == "four-quadrics" || corpus_action_ == "catalecticant") {
      for (const auto& n : corpus_names(cfg_.include_long_running))
        if (n.rfind(corpus_action_ + "-", 0) == 0) names.push_back(n);
      if (!corpus_all_ && !corpus_args_.empty()) {
        names.clear();
        for (const auto& a : corpus_args_) names.push_back(corpus_action_ + "-" + a);
      }
    } else {
      throw ParseError("unknown corpus action '" + corpus_action_ + "'");
    }
    if (names.empty()) throw ParseError("no corpus entries selected");

    ordered_json rows = ordered_json::array();
    std::ostringstream os;
    for (const auto& n : names) {
      bool match = true;
      rows.push_back(check_entry(corpus_entry(n, p, cfg_.limits()), match));
      o.finding = o.finding || !match;
      const auto& row = rows.back();
      os << std::left << std::setw(24) << n << (match ? "match   " : "MISMATCH");
      for (const auto& [key, value] : row["computed"].items()) os << "  " << key << "=" << value.dump();
      os << "\n";
    }
    o.result["rows"] = rows;
    o.text = os.str();
    return o;
  }

  Outcome do_suite() {
    AcceptanceConfig acfg;
    acfg.gen = cfg_.genericity();
    acfg.characteristic = corpus_characteristic();
    acfg.limits = cfg_.limits();
    acfg.include_long_running = cfg_.include_long_running;
    std::ostringstream os;
    auto results = run_acceptance(acfg, [&](const CriterionResult& r) {
      os << "criterion " << r.id << " [" << to_string(r.status) << "] " << r.title;
      if (cfg_.timing || !cfg_.json) os << " (" << r.elapsed_ms << " ms)";
      os << ": " << r.detail << "\n";
    });
    Outcome o;
    ordered_json list = ordered_json::array();
    for (const auto& r : results) list.push_back(report::to_json(r, cfg_.timing));
    o.result["criteria"] = list;
    o.finding = !acceptance_passed(results);
    o.text = os.str();
    return o;
  }

  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;
  std::string command_;
  std::function<Outcome()> handler_;
  std::vector<Input> inputs_;
  std::uint32_t characteristic_used_ = 0;

  std::string file_a_, file_b_, poly_, out_file_;
  std::vector<int> degrees_;
  std::vector<std::string> vars_;
  std::string corpus_action_;
  std::vector<std::string> corpus_args_;
  bool corpus_all_ = false;
};

inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(std::move(args));
}

}  // namespace maxmult::cli

#endif  // MAXMULT_CLI_HPP
