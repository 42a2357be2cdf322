#include "fraisse/cli.hpp"

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "fraisse/acceptance.hpp"
#include "fraisse/epi.hpp"
#include "fraisse/families.hpp"
#include "fraisse/family_checks.hpp"
#include "fraisse/io.hpp"
#include "fraisse/limits.hpp"

namespace fraisse::cli {

namespace {

using io::json;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    io::write_text_file(path, text);
}

// Accepts a file path, or a built-in name: arc, singleton, cantor, cantor:L.
json sequence_spec(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::read_json_file(arg);
  if (arg == "arc" || arg == "singleton") return {{"family", arg}};
  if (arg == "cantor" || arg == "cantor-dyadic") return {{"family", "cantor"}};
  auto colon = arg.find(':');
  if (colon != std::string::npos) {
    std::string head = arg.substr(0, colon);
    if (head == "cantor" || head == "cantor-dyadic")
      return {{"family", "cantor"}, {"depth", std::stoi(arg.substr(colon + 1))}};
  }
  throw Error("unknown sequence " + arg + " (not a file or built-in name)");
}

// Accepts a file path, or: chain, singleton, cantor, cantor:L.
json family_spec(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::read_json_file(arg);
  if (arg == "chain" || arg == "singleton") return {{"family", arg}};
  if (arg == "cantor" || arg == "cantor-dyadic") return {{"family", "cantor"}};
  auto colon = arg.find(':');
  if (colon != std::string::npos) {
    std::string head = arg.substr(0, colon);
    if (head == "cantor" || head == "cantor-dyadic")
      return {{"family", "cantor"}, {"depth", std::stoi(arg.substr(colon + 1))}};
  }
  throw Error("unknown family " + arg + " (not a file or built-in name)");
}

// The sequence that generates a built-in family, used when --sequence is
// omitted by check-family.
std::string default_sequence_for(const std::string& family_arg) {
  if (family_arg == "chain") return "arc";
  if (family_arg == "singleton") return "singleton";
  if (family_arg.rfind("cantor", 0) == 0) return family_arg;
  throw Error("cannot derive a sequence from " + family_arg + "; pass --sequence");
}

struct CheckFamilyArgs {
  std::string family = "chain";
  std::string sequence;
  std::string witness_path = "witness.json";
  std::string output;
  bool jpp = false, ap = false, fundseq = false, rigidity = false;
  int pair_bound = 3, search_bound = 9;
  int size_bound = 4, ap_search_bound = 8;
  int depth = 3, member_bound = 4, factor_depth = 6;
  int rigidity_depth = 4;
};

int run_check_family(const CheckFamilyArgs& a, std::ostream& out) {
  int selected = a.jpp + a.ap + a.fundseq + a.rigidity;
  if (selected != 1)
    throw Error("pick exactly one of --jpp, --ap, --fundseq, --rigidity");

  PropertyReport report;
  if (a.jpp) {
    report = check_jpp(io::family_from_json(family_spec(a.family)), a.pair_bound,
                       a.search_bound);
  } else if (a.ap) {
    report = check_ap(io::family_from_json(family_spec(a.family)), a.size_bound,
                      a.ap_search_bound);
  } else if (a.fundseq) {
    std::string seq_arg =
        a.sequence.empty() ? default_sequence_for(a.family) : a.sequence;
    report = check_fundamental_sequence(
        io::sequence_from_json(sequence_spec(seq_arg)),
        io::family_from_json(family_spec(a.family)), a.depth, a.member_bound,
        a.factor_depth);
  } else {
    std::string seq_arg =
        a.sequence.empty() ? default_sequence_for(a.family) : a.sequence;
    report = check_rigidity(io::sequence_from_json(sequence_spec(seq_arg)),
                            a.rigidity_depth);
  }
  std::string text = io::pretty(io::to_json(report));
  emit(text, a.output, out);
  if (!report.verified) {
    io::write_text_file(a.witness_path, text);
    return 1;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite projective Fraisse engine"};
  app.require_subcommand(1);

  // validate ----------------------------------------------------------------
  auto* validate_cmd = app.add_subcommand(
      "validate", "check a structure file for well-formedness");
  std::string validate_input;
  std::string validate_witness = "witness.json";
  validate_cmd->add_option("input", validate_input, "structure JSON file")
      ->required();
  validate_cmd->add_option("--witness", validate_witness,
                           "where to write violations when invalid");

  // relationalize -------------------------------------------------------------
  auto* rel_cmd = app.add_subcommand(
      "relationalize", "replace constants and functions by relations");
  std::string rel_input, rel_output;
  rel_cmd->add_option("input", rel_input, "structure JSON file")->required();
  rel_cmd->add_option("-o,--output", rel_output, "output path (default stdout)");

  // epis ----------------------------------------------------------------------
  auto* epis_cmd =
      app.add_subcommand("epis", "enumerate epimorphisms source -> target");
  std::string epis_a, epis_b, epis_output, epis_witness = "witness.json";
  bool count_only = false, unique = false;
  epis_cmd->add_option("source", epis_a, "source structure JSON")->required();
  epis_cmd->add_option("target", epis_b, "target structure JSON")->required();
  epis_cmd->add_flag("--count-only", count_only, "print only the number found");
  epis_cmd->add_flag("--unique", unique,
                     "verify there is exactly one; exit 1 otherwise");
  epis_cmd->add_option("-o,--output", epis_output, "output path (default stdout)");
  epis_cmd->add_option("--witness", epis_witness,
                       "witness path for a failed --unique check");

  // check-family ---------------------------------------------------------------
  auto* check_cmd = app.add_subcommand(
      "check-family", "bounded family property checks with witnesses");
  CheckFamilyArgs cf;
  check_cmd->add_option("--family", cf.family,
                        "built-in name (chain, singleton, cantor[:L]) or file");
  check_cmd->add_option("--sequence", cf.sequence,
                        "sequence for --fundseq/--rigidity (name or spec file)");
  check_cmd->add_flag("--jpp", cf.jpp, "joint projection property");
  check_cmd->add_flag("--ap", cf.ap, "amalgamation property");
  check_cmd->add_flag("--fundseq", cf.fundseq, "fundamental sequence conditions");
  check_cmd->add_flag("--rigidity", cf.rigidity,
                      "unique epimorphism between comparable levels");
  check_cmd->add_option("--pair-bound", cf.pair_bound, "JPP member size bound");
  check_cmd->add_option("--search-bound", cf.search_bound,
                        "JPP witness size bound");
  check_cmd->add_option("--size-bound", cf.size_bound, "AP cospan size bound");
  check_cmd->add_option("--ap-search-bound", cf.ap_search_bound,
                        "AP witness size bound");
  check_cmd->add_option("--depth", cf.depth, "fundseq level depth");
  check_cmd->add_option("--member-bound", cf.member_bound,
                        "fundseq member size bound");
  check_cmd->add_option("--factor-depth", cf.factor_depth,
                        "fundseq factorization level bound");
  check_cmd->add_option("--rigidity-depth", cf.rigidity_depth,
                        "rigidity level depth");
  check_cmd->add_option("--witness", cf.witness_path,
                        "witness path on counterexample");
  check_cmd->add_option("-o,--output", cf.output, "report path (default stdout)");

  // certify ---------------------------------------------------------------------
  auto* certify_cmd = app.add_subcommand(
      "certify", "certify a level property across a sequence");
  std::string cert_seq = "arc", cert_rel = "R", cert_prop = "reflexive";
  std::string cert_output, cert_witness = "witness.json";
  int cert_depth = 4;
  certify_cmd->add_option("--family", cert_seq, "sequence name or spec file");
  certify_cmd->add_option("--rel", cert_rel, "relation symbol");
  certify_cmd->add_option("--property", cert_prop,
                          "reflexive|symmetric|antisymmetric|transitive|total|"
                          "has-first|has-last|connected");
  certify_cmd->add_option("--depth", cert_depth, "deepest level checked");
  certify_cmd->add_option("--witness", cert_witness,
                          "witness path when the property fails");
  certify_cmd->add_option("-o,--output", cert_output,
                          "certificate path (default stdout)");

  // gen -----------------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "write a built-in family member");
  std::string gen_family = "arc", gen_output;
  int gen_level = 0, gen_depth = -1;
  gen_cmd->add_option("--family", gen_family, "arc|chain|singleton|cantor-dyadic");
  gen_cmd->add_option("--level", gen_level, "level (for chain: the size)");
  gen_cmd->add_option("--depth", gen_depth,
                      "truncation depth for cantor-dyadic (default: level)");
  gen_cmd->add_option("-o,--output", gen_output, "output path (default stdout)");

  // construct -------------------------------------------------------------------
  auto* construct_cmd = app.add_subcommand(
      "construct", "build a sum/product/glue/graph sequence level");
  std::string construct_kind, construct_output;
  std::vector<std::string> construct_inputs;
  int construct_level = 0;
  construct_cmd->add_option("kind", construct_kind, "sum|product|glue|graph")
      ->required();
  construct_cmd
      ->add_option("--inputs", construct_inputs,
                   "sequence names or spec files (one file for glue/graph)")
      ->required();
  construct_cmd->add_option("--level", construct_level, "level to emit");
  construct_cmd->add_option("-o,--output", construct_output,
                            "output path (default stdout)");

  // quotient ---------------------------------------------------------------------
  auto* quotient_cmd = app.add_subcommand(
      "quotient", "export a quotient approximant as a graph");
  std::string quot_seq = "arc", quot_format = "dot", quot_output;
  int quot_level = 0;
  quotient_cmd->add_option("--family", quot_seq, "sequence name or spec file");
  quotient_cmd->add_option("--level", quot_level, "level to export");
  quotient_cmd->add_option("--format", quot_format, "dot|json");
  quotient_cmd->add_option("-o,--output", quot_output,
                           "output path (default stdout)");

  // accept ----------------------------------------------------------------------
  auto* accept_cmd =
      app.add_subcommand("accept", "run the acceptance suite and print a table");
  std::string accept_suite = "core";
  accept_cmd->add_option("--suite", accept_suite, "suite name (core)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) {
      json j = io::read_json_file(validate_input);
      PartialStructure p = io::partial_from_json(j);
      std::vector<Violation> vs = validate(p);
      json report = {{"valid", vs.empty()},
                     {"violations", io::violations_to_json(vs)}};
      out << io::pretty(report);
      if (!vs.empty()) {
        io::write_text_file(validate_witness, io::pretty(report));
        return 1;
      }
      return 0;
    }

    if (*rel_cmd) {
      PartialStructure p = io::partial_from_json(io::read_json_file(rel_input));
      FinStructure s = relationalize(p);
      emit(io::pretty(io::to_json(s)), rel_output, out);
      return 0;
    }

    if (*epis_cmd) {
      FinStructure a = io::structure_from_json(io::read_json_file(epis_a));
      FinStructure b = io::structure_from_json(io::read_json_file(epis_b));
      if (unique) {
        EpiClassification cls = unique_epimorphism(a, b);
        json j = {{"count", cls.count},
                  {"unique", cls.kind == EpiClassification::Kind::unique}};
        if (cls.witness) j["map"] = cls.witness->map();
        emit(io::pretty(j), epis_output, out);
        if (cls.kind != EpiClassification::Kind::unique) {
          EnumOptions two;
          two.max_results = 2;
          json maps = json::array();
          for (const auto& m : enumerate_epimorphisms(a, b, two))
            maps.push_back(m.map());
          io::write_text_file(epis_witness,
                              io::pretty({{"count", cls.count}, {"maps", maps}}));
          return 1;
        }
        return 0;
      }
      std::vector<Morphism> epis = enumerate_epimorphisms(a, b);
      if (count_only) {
        out << epis.size() << "\n";
        return 0;
      }
      json maps = json::array();
      for (const auto& m : epis) maps.push_back(m.map());
      emit(io::pretty({{"count", epis.size()}, {"maps", maps}}), epis_output, out);
      return 0;
    }

    if (*check_cmd) return run_check_family(cf, out);

    if (*certify_cmd) {
      FundamentalSequence seq = io::sequence_from_json(sequence_spec(cert_seq));
      PropertyCertificate c =
          certify(seq, cert_rel, parse_level_property(cert_prop), cert_depth);
      std::string text = io::pretty(io::to_json(c));
      emit(text, cert_output, out);
      if (!c.certified) {
        json witness = io::to_json(c);
        witness["failing_structure"] = io::to_json(seq.level(c.failing_level));
        io::write_text_file(cert_witness, io::pretty(witness));
        return 1;
      }
      return 0;
    }

    if (*gen_cmd) {
      FinStructure s;
      if (gen_family == "arc") {
        s = arc_level(gen_level);
      } else if (gen_family == "chain") {
        s = chain(std::max(1, gen_level));
      } else if (gen_family == "singleton") {
        s = chain(1);
      } else if (gen_family == "cantor-dyadic" || gen_family == "cantor") {
        int depth = gen_depth >= 0 ? gen_depth : gen_level;
        s = cantor_level(dyadic_glue(depth), gen_level);
      } else {
        throw Error("unknown family " + gen_family);
      }
      emit(io::pretty(io::to_json(s)), gen_output, out);
      return 0;
    }

    if (*construct_cmd) {
      json spec;
      if (construct_kind == "sum" || construct_kind == "product") {
        json parts = json::array();
        for (const auto& in : construct_inputs) parts.push_back(sequence_spec(in));
        spec = {{construct_kind, parts}};
      } else if (construct_kind == "glue" || construct_kind == "graph") {
        if (construct_inputs.size() != 1)
          throw Error(construct_kind + " takes exactly one input file");
        json body = io::read_json_file(construct_inputs[0]);
        spec = body.contains(construct_kind) ? body : json{{construct_kind, body}};
      } else {
        throw Error("unknown construction " + construct_kind);
      }
      FundamentalSequence seq = io::sequence_from_json(spec);
      emit(io::pretty(io::to_json(seq.level(construct_level))), construct_output,
           out);
      return 0;
    }

    if (*quotient_cmd) {
      FundamentalSequence seq = io::sequence_from_json(sequence_spec(quot_seq));
      QuotientGraph q = quotient_graph(seq, quot_level);
      GraphFormat fmt;
      if (quot_format == "dot")
        fmt = GraphFormat::dot;
      else if (quot_format == "json")
        fmt = GraphFormat::json;
      else
        throw Error("unknown format " + quot_format);
      emit(export_graph(q, fmt), quot_output, out);
      return 0;
    }

    if (*accept_cmd) {
      if (accept_suite != "core") throw Error("unknown suite " + accept_suite);
      bool all = true;
      for (const auto& c : run_acceptance()) {
        all = all && c.pass;
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " — " << c.detail
            << "\n";
      }
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fraisse::cli
