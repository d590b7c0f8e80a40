// Copyright 2026 The lettergraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lettergraph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "lettergraph/constructions.hpp"
#include "lettergraph/errors.hpp"
#include "lettergraph/graph_io.hpp"
#include "lettergraph/lemmas.hpp"
#include "lettergraph/lettering_io.hpp"
#include "lettergraph/solver.hpp"

namespace lettergraph::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_mapping(const std::vector<Vertex>& vertex_of_position) {
  std::string out = "map";
  for (std::size_t i = 0; i < vertex_of_position.size(); ++i) {
    out += (i == 0 ? " " : ",") + std::to_string(i + 1) + ":" +
           std::to_string(vertex_of_position[i]);
  }
  return out;
}

struct DecodeArgs {
  std::string word;
  std::string decoder;
  std::optional<int> k;
  std::string format = "edges";
};

int cmd_decode(const DecodeArgs& args, std::ostream& out) {
  std::vector<Letter> letters = parse_word_spec(args.word, args.k);
  Word word(std::move(letters));
  const int k = args.k.value_or(word.max_letter());
  if (k < 0) throw DomainError("--k must be non-negative");
  const std::vector<LetterPair> pairs = parse_decoder_spec(args.decoder);
  for (const LetterPair& p : pairs) {
    if (p.first > k || p.second > k) {
      throw DomainError("decoder pair " + std::to_string(p.first) + ":" +
                        std::to_string(p.second) + " exceeds the alphabet 1.." +
                        std::to_string(k) + " (pass --k to enlarge it)");
    }
  }
  const Graph g = decode(Lettering(std::move(word), Decoder(k, pairs)));
  out << (args.format == "dot" ? to_dot(g) : serialize_edge_list(g)) << "\n";
  return kExitOk;
}

int cmd_path(int n, bool verify, std::ostream& out) {
  if (n < 3) {
    throw DomainError("path lettering is defined for n >= 3 (lettericity floor((n+4)/3) "
                      "holds from n = 3); got n=" + std::to_string(n));
  }
  const Lettering lettering = path_lettering(n);
  out << serialize_lettering(lettering) << "\n";
  out << "letters " << lettering.letter_count() << "\n";
  if (verify) {
    const Graph g = decode(lettering);
    if (g.order() != n || !is_path(g)) {
      out << "NOT VERIFIED P_" << n << "\n";
      return kExitDomain;
    }
    out << "VERIFIED P_" << n << "\n";
  }
  return kExitOk;
}

int cmd_matching(int r, bool canonical, std::ostream& out) {
  const Lettering lettering =
      canonical ? matching_canonical_lettering(r) : matching_base_lettering(r);
  out << serialize_lettering(lettering) << "\n";
  out << "letters " << lettering.letter_count() << "\n";
  return kExitOk;
}

struct TargetArgs {
  std::string file;
  std::optional<int> path;
  std::optional<int> matching;
};

Graph load_target(const TargetArgs& args) {
  const int given = (args.file.empty() ? 0 : 1) + (args.path ? 1 : 0) + (args.matching ? 1 : 0);
  if (given != 1) {
    throw DomainError("give exactly one of a graph file, --path n or --matching r");
  }
  if (args.path) return path_graph(*args.path);
  if (args.matching) return matching_graph(*args.matching);
  return parse_edge_list(read_file(args.file));
}

int cmd_lettericity(const TargetArgs& args, std::ostream& out) {
  const Graph g = load_target(args);
  const LettericityResult result = lettericity_exact(g);
  out << "lettericity " << result.lettericity << "\n";
  out << serialize_lettering(result.witness.lettering) << "\n";
  out << format_mapping(result.witness.vertex_of_position) << "\n";
  return kExitOk;
}

int cmd_enumerate(const TargetArgs& args, int k, std::optional<std::size_t> limit,
                  bool fixed_alphabet, std::ostream& out) {
  const Graph g = load_target(args);
  EnumerationOptions options;
  options.limit = limit;
  options.convention =
      fixed_alphabet ? WordConvention::kFixedAlphabet : WordConvention::kCanonical;
  const Enumeration result = enumerate_letterings(g, k, options);
  for (const LetteringWitness& w : result.witnesses) {
    out << "w " << format_word(w.lettering.word()) << " | D "
        << format_decoder(w.lettering.decoder()) << " | "
        << format_mapping(w.vertex_of_position) << "\n";
  }
  out << "count " << result.witnesses.size() << (result.truncated ? " (truncated)" : "")
      << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& lettering_file, const std::string& graph_file,
               std::ostream& out) {
  const Lettering lettering = parse_lettering(read_file(lettering_file));
  const Graph target = parse_edge_list(read_file(graph_file));
  const bool ok = verify_lettering(lettering, target);
  out << (ok ? "VERIFIED" : "NOT VERIFIED") << "\n";
  return ok ? kExitOk : kExitDomain;
}

int cmd_audit(int r, int k, bool kv, std::ostream& out) {
  const MatchingAudit audit = audit_matching_letterings(r, k);
  out << (kv ? render_audit_kv(audit) : render_audit(audit)) << "\n";
  return audit.holds() ? kExitOk : kExitDomain;
}

int cmd_count(int r, bool kv, std::ostream& out) {
  const MatchingWordCount count = count_matching_words(r);
  const std::uint64_t formula = matching_word_formula(r);
  const bool holds = count.fixed_alphabet == formula;
  if (kv) {
    out << "r=" << r << "\n"
        << "fixed_alphabet=" << count.fixed_alphabet << "\n"
        << "canonical=" << count.canonical << "\n"
        << "formula=" << formula << "\n"
        << "status=" << (holds ? "pass" : "fail") << "\n";
  } else {
    out << count.fixed_alphabet << "\n";
  }
  return holds ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Letter graphs: decoding, optimal path letterings and exact lettericity",
               "lettergraph"};
  app.require_subcommand(1);

  DecodeArgs decode_args;
  auto* decode_cmd = app.add_subcommand("decode", "Print the letter graph of a word");
  decode_cmd->add_option("--word", decode_args.word, "Letters, e.g. 2,1,3,2 or 2132")->required();
  decode_cmd->add_option("--decoder", decode_args.decoder, "Ordered pairs, e.g. 2:1,3:2")
      ->required();
  decode_cmd->add_option("--k", decode_args.k, "Alphabet size (default: largest letter)");
  decode_cmd->add_option("--format", decode_args.format, "edges or dot")
      ->check(CLI::IsMember({"edges", "dot"}));

  int path_n = 0;
  bool path_verify = false;
  auto* path_cmd = app.add_subcommand("path", "Optimal lettering of the path P_n");
  path_cmd->add_option("n", path_n, "Number of vertices (>= 3)")->required();
  path_cmd->add_flag("--verify", path_verify, "Decode and check the result is P_n");

  int matching_r = 0;
  bool matching_canonical = false;
  auto* matching_cmd = app.add_subcommand("matching", "Lettering of the matching rK_2");
  matching_cmd->add_option("r", matching_r, "Number of edges (>= 1)")->required();
  matching_cmd->add_flag("--canonical", matching_canonical,
                         "r letters, one per edge, instead of the r+1 letter chain");

  TargetArgs target_args;
  auto add_target = [&target_args](CLI::App* cmd) {
    cmd->add_option("graph", target_args.file, "Edge-list file");
    cmd->add_option("--path", target_args.path, "Use the path P_n");
    cmd->add_option("--matching", target_args.matching, "Use the matching rK_2");
  };
  auto* lettericity_cmd =
      app.add_subcommand("lettericity", "Exact lettericity with a witness lettering");
  add_target(lettericity_cmd);

  int enumerate_k = 0;
  std::optional<std::size_t> enumerate_limit;
  bool enumerate_fixed = false;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "All words over exactly k letters lettering a graph");
  add_target(enumerate_cmd);
  enumerate_cmd->add_option("--k", enumerate_k, "Alphabet size")->required();
  enumerate_cmd->add_option("--limit", enumerate_limit, "Stop after this many words");
  enumerate_cmd->add_flag("--fixed-alphabet", enumerate_fixed,
                          "Count letter relabellings as distinct words");

  std::string verify_lettering_file;
  std::string verify_graph_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a lettering file against a graph file");
  verify_cmd->add_option("lettering", verify_lettering_file, "Lettering file")->required();
  verify_cmd->add_option("graph", verify_graph_file, "Edge-list file")->required();

  int audit_r = 0;
  int audit_k = 0;
  bool audit_kv = false;
  auto* audit_cmd = app.add_subcommand("audit", "Audit all k-letterings of rK_2");
  audit_cmd->add_option("r", audit_r, "Matching size (1..3)")->required();
  audit_cmd->add_option("k", audit_k, "Alphabet size (r..2r)")->required();
  audit_cmd->add_flag("--kv", audit_kv, "Machine-readable key=value output");

  int count_r = 0;
  bool count_kv = false;
  auto* count_cmd = app.add_subcommand("count", "Count words admitting an r-lettering of rK_2");
  count_cmd->add_option("r", count_r, "Matching size (1..3)")->required();
  count_cmd->add_flag("--kv", count_kv, "Both counting conventions as key=value");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  try {
    if (*decode_cmd) return cmd_decode(decode_args, out);
    if (*path_cmd) return cmd_path(path_n, path_verify, out);
    if (*matching_cmd) return cmd_matching(matching_r, matching_canonical, out);
    if (*lettericity_cmd) return cmd_lettericity(target_args, out);
    if (*enumerate_cmd) {
      return cmd_enumerate(target_args, enumerate_k, enumerate_limit, enumerate_fixed, out);
    }
    if (*verify_cmd) return cmd_verify(verify_lettering_file, verify_graph_file, out);
    if (*audit_cmd) return cmd_audit(audit_r, audit_k, audit_kv, out);
    if (*count_cmd) return cmd_count(count_r, count_kv, out);
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace lettergraph::cli
