#pragma once

// Command-line front end. Each verb parses its arguments, calls one library
// operation or suite and prints the result; exit codes are
//   0 success / all comparisons match
//   1 usage or input error
//   2 verification mismatch
//   3 resource bound exceeded

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steinitz/affine.hpp"
#include "steinitz/descriptor_io.hpp"
#include "steinitz/field.hpp"
#include "steinitz/predict.hpp"
#include "steinitz/report.hpp"
#include "steinitz/subring_lattice.hpp"
#include "steinitz/verify.hpp"

namespace steinitz::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kBound = 3 };

class Printer {
 public:
  Printer(std::ostream& out, bool records) : out_(out), records_(records) {}
  bool records() const { return records_; }
  void text(const std::string& line) { out_ << line << "\n"; }
  void emit(const Json& j) { out_ << j.dump() << "\n"; }

 private:
  std::ostream& out_;
  bool records_;
};

namespace detail {

inline FieldDescriptor field_arg(const std::string& text) { return parse_field(text); }

inline int run_parse(Printer& out, const std::string& text) {
  Descriptor d = parse_descriptor(text);
  if (out.records())
    out.emit({{"verb", "parse"},
              {"type", std::holds_alternative<FieldDescriptor>(d) ? "field" : "affine"},
              {"canonical", render(d)}});
  else
    out.text(render(d));
  return kOk;
}

inline int run_rgmax(Printer& out, const std::string& text, bool list) {
  auto e = field_arg(text);
  auto count = rgmax_count(e);
  std::vector<std::string> listed;
  if (list) {
    for (const auto& m : rgmax_list(e)) listed.push_back(render(m));
  }
  if (out.records()) {
    Json j{{"verb", "rgmax"}, {"field", render(e)}, {"count", count_record(count)}};
    if (list) j["maximal"] = listed;
    out.emit(j);
  } else {
    out.text("maximal subrings: " + count.to_string());
    for (const auto& m : listed) out.text("  " + m);
  }
  return kOk;
}

inline int run_lfield(Printer& out, const std::string& text) {
  auto l = largest_nonsubmaximal(field_arg(text));
  if (out.records()) out.emit({{"verb", "lfield"}, {"field", render(l)}});
  else out.text(render(l));
  return kOk;
}

inline int run_degree(Printer& out, const std::string& f_text, const std::string& e_text) {
  auto f = field_arg(f_text);
  auto e = field_arg(e_text);
  auto d = degree(e, f);
  auto n = natural_value(d);
  if (out.records()) {
    Json j{{"verb", "degree"}, {"degree", render(d)}, {"finite", n.has_value()}};
    if (n) j["value"] = *n;
    out.emit(j);
  } else {
    out.text("degree: " + render(d) + (n ? " = " + std::to_string(*n) : std::string(" (infinite)")));
  }
  return kOk;
}

inline int run_chains(Printer& out, const std::string& text, bool enumerate) {
  auto e = field_arg(text);
  auto report = chain_stats(e, enumerate);
  std::vector<std::string> chains;
  if (report.chains) {
    for (const auto& chain : *report.chains) {
      std::string line;
      for (std::size_t i = 0; i < chain.size(); ++i) line += (i ? " > " : "") + render(chain[i].content);
      chains.push_back(line);
    }
  }
  if (out.records()) {
    Json j{{"verb", "chains"},
           {"length", report.length},
           {"chain_count", report.chain_count},
           {"terminus", render(report.terminus)}};
    if (enumerate) j["chains"] = chains;
    out.emit(j);
  } else {
    out.text("length: " + std::to_string(report.length));
    out.text("chains: " + std::to_string(report.chain_count));
    out.text("terminus: " + render(report.terminus));
    for (const auto& c : chains) out.text("  " + c);
  }
  return kOk;
}

inline int run_intermediate(Printer& out, const std::string& f_text, const std::string& e_text) {
  auto count = intermediate_count(field_arg(e_text), field_arg(f_text));
  if (out.records()) out.emit({{"verb", "intermediate"}, {"count", count_record(count)}});
  else out.text("intermediate fields: " + count.to_string());
  return kOk;
}

inline int run_embed(Printer& out, const std::string& f_text, const std::string& e_text) {
  auto emb = embed_in_maximal(field_arg(e_text), field_arg(f_text));
  if (out.records()) {
    Json j{{"verb", "embed"}, {"embeds", emb.maximal.has_value()}};
    if (emb.maximal) {
      j["maximal"] = render(*emb.maximal);
      j["lowered_prime"] = *emb.lowered_prime;
    }
    if (emb.blocking_prime) j["blocking_prime"] = *emb.blocking_prime;
    out.emit(j);
  } else if (emb.maximal) {
    out.text("contained in maximal subring " + render(*emb.maximal) + " (lowered prime " +
             std::to_string(*emb.lowered_prime) + ")");
  } else {
    out.text("not contained in any maximal subring (blocking prime " + std::to_string(*emb.blocking_prime) +
             " of infinite order)");
  }
  return kOk;
}

inline int run_affine(Printer& out, const std::string& text) {
  auto d = parse_affine(text);
  auto v = decide(d);
  if (out.records()) {
    Json j = record(v);
    j["verb"] = "affine";
    j["descriptor"] = render(d);
    out.emit(j);
  } else {
    out.text(describe(v));
  }
  return kOk;
}

struct RingArgs {
  std::string family;
  std::uint64_t p = 2;
  std::uint64_t n = 1;
  bool lattice = false;
  bool maximal = false;
  bool chains = false;
  std::size_t max_size = 4096;
};

inline int run_ring(Printer& out, const RingArgs& a) {
  Family fam = a.family == "gf" ? Family::Gf : a.family == "dual" ? Family::Dual : Family::Product;
  RingLimits limits{a.max_size};
  FiniteRing ring = make_family_ring({fam, a.p, a.n}, limits);
  SubringLattice lattice = enumerate_subrings(ring);

  if (a.lattice) {
    if (out.records()) {
      for (const auto& j : lattice_records(ring, lattice)) out.emit(j);
    } else {
      {
        std::string text = describe_lattice(ring, lattice);
        text.pop_back();
        out.text(text);
      }
    }
    return kOk;
  }
  if (a.maximal) {
    auto maxes = maximal_subrings(lattice);
    if (out.records()) {
      for (const auto& m : maxes)
        out.emit({{"kind", "maximal"}, {"size", m.count()}, {"elements", element_labels(ring, m)}});
    } else {
      out.text(ring.description() + ": " + std::to_string(maxes.size()) + " maximal subrings");
      for (const auto& m : maxes) out.text("  [" + std::to_string(m.count()) + "] " + braced(element_labels(ring, m)));
    }
    return kOk;
  }
  if (a.chains) {
    auto cs = saturated_chains(lattice);
    if (out.records()) {
      for (const auto& c : cs.chains) out.emit({{"kind", "chain"}, {"subrings", c}});
      Json summary{{"kind", "chains"}, {"count", cs.chains.size()}};
      if (cs.uniform_length) summary["uniform_length"] = *cs.uniform_length;
      out.emit(summary);
    } else {
      for (const auto& c : cs.chains) {
        std::string line;
        for (std::size_t i = 0; i < c.size(); ++i)
          line += (i ? " > " : "") + std::string("S") + std::to_string(c[i]) + "[" +
                  std::to_string(lattice.subrings[c[i]].count()) + "]";
        out.text(line);
      }
      out.text(std::to_string(cs.chains.size()) + " chains" +
               (cs.uniform_length ? (*cs.uniform_length ? ", uniform length" : ", lengths differ") : ""));
    }
    return kOk;
  }
  auto maxes = maximal_subrings(lattice);
  if (out.records()) {
    out.emit({{"kind", "ring"},
              {"ring", ring.description()},
              {"size", ring.size()},
              {"subrings", lattice.subrings.size()},
              {"maximal", maxes.size()}});
  } else {
    out.text(ring.description() + ": " + std::to_string(ring.size()) + " elements, " +
             std::to_string(lattice.subrings.size()) + " subrings, " + std::to_string(maxes.size()) +
             " maximal");
  }
  return kOk;
}

inline int run_verify(Printer& out, const std::string& suite, std::uint64_t seed, std::size_t max_size) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.limits.max_size = max_size;
  bool mismatch = false, bound = false;
  for (const auto& report : run_suite(suite, opts)) {
    if (out.records()) {
      for (const auto& j : records(report)) out.emit(j);
    } else {
      std::string text = describe(report);
      text.pop_back();
      out.text(text);
    }
    mismatch = mismatch || report.any_mismatch();
    bound = bound || report.any_bound_exceeded();
  }
  return mismatch ? kMismatch : bound ? kBound : kOk;
}

}  // namespace detail

/// Runs the tool on argv; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal subrings of absolutely algebraic fields, with a brute-force finite ring oracle",
               "steinitz"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  std::string format = "text";
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "records"}));

  std::function<int(Printer&)> action;
  std::string a1, a2;
  bool flag = false;

  auto* parse = app.add_subcommand("parse", "Parse a field or affine descriptor and print its canonical form");
  parse->add_option("descriptor", a1)->required();
  parse->callback([&] { action = [&](Printer& p) { return detail::run_parse(p, a1); }; });

  auto* rgmax = app.add_subcommand("rgmax", "Count (and optionally list) the maximal subrings of a field");
  rgmax->add_option("field", a1)->required();
  rgmax->add_flag("--list", flag, "List the maximal subrings");
  rgmax->callback([&] { action = [&](Printer& p) { return detail::run_rgmax(p, a1, flag); }; });

  auto* lfield = app.add_subcommand("lfield", "Largest nonsubmaximal subfield L(E)");
  lfield->add_option("field", a1)->required();
  lfield->callback([&] { action = [&](Printer& p) { return detail::run_lfield(p, a1); }; });

  auto* deg = app.add_subcommand("degree", "Degree [E:F] as a supernatural number");
  deg->add_option("subfield", a1)->required();
  deg->add_option("field", a2)->required();
  deg->callback([&] { action = [&](Printer& p) { return detail::run_degree(p, a1, a2); }; });

  auto* chains = app.add_subcommand("chains", "Saturated chains of maximal subrings down to L(E)");
  chains->add_option("field", a1)->required();
  chains->add_flag("--enumerate", flag, "List every chain");
  chains->callback([&] { action = [&](Printer& p) { return detail::run_chains(p, a1, flag); }; });

  auto* inter = app.add_subcommand("intermediate", "Number of fields between F and E");
  inter->add_option("subfield", a1)->required();
  inter->add_option("field", a2)->required();
  inter->callback([&] { action = [&](Printer& p) { return detail::run_intermediate(p, a1, a2); }; });

  auto* embed = app.add_subcommand("embed", "Find a maximal subring of E containing F");
  embed->add_option("subfield", a1)->required();
  embed->add_option("field", a2)->required();
  embed->callback([&] { action = [&](Printer& p) { return detail::run_embed(p, a1, a2); }; });

  auto* affine = app.add_subcommand("affine", "Decide finiteness of maximal subrings of an affine algebra");
  affine->add_option("descriptor", a1)->required();
  affine->callback([&] { action = [&](Printer& p) { return detail::run_affine(p, a1); }; });

  detail::RingArgs ring_args;
  auto* ring = app.add_subcommand("ring", "Build a finite ring and enumerate its subrings");
  ring->add_option("family", ring_args.family)->required()->check(CLI::IsMember({"gf", "dual", "product"}));
  ring->add_option("-p", ring_args.p, "Characteristic")->required();
  ring->add_option("-n", ring_args.n, "Degree of the base field")->required();
  ring->add_option("--max-size", ring_args.max_size, "Ring size bound");
  auto* g_lattice = ring->add_flag("--lattice", ring_args.lattice, "Print the subring lattice");
  auto* g_maximal = ring->add_flag("--maximal", ring_args.maximal, "Print the maximal subrings");
  auto* g_chains = ring->add_flag("--chains", ring_args.chains, "Print the saturated chains");
  g_lattice->excludes(g_maximal)->excludes(g_chains);
  g_maximal->excludes(g_chains);
  ring->callback([&] { action = [&](Printer& p) { return detail::run_ring(p, ring_args); }; });

  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_size = 4096;
  auto* verify = app.add_subcommand("verify", "Run a verification suite against the brute-force oracle");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", seed, "Seed for random suites");
  verify->add_option("--max-size", max_size, "Ring size bound");
  verify->callback([&] { action = [&](Printer& p) { return detail::run_verify(p, suite, seed, max_size); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Printer printer(out, format == "records");
  try {
    return action(printer);
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace steinitz::cli
