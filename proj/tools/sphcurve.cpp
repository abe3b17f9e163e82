// Command-line front end: parse, normalize and measure decorated Gauss words,
// generate and search Reidemeister moves, and enumerate curve tables.
//
// Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sphcurve/corpus.hpp"
#include "sphcurve/serialize.hpp"

namespace {

using namespace sphcurve;

/// One word from the positional argument, or batch mode over stdin lines.
std::vector<std::string> word_inputs(const std::optional<std::string>& arg) {
  if (arg) return {*arg};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) lines.push_back(line);
  return lines;
}

CanonicalMode parse_mode(const std::string& mode) {
  if (mode == "based") return CanonicalMode::based;
  if (mode == "unbased") return CanonicalMode::unbased;
  if (mode == "unbased-unoriented") return CanonicalMode::unbased_unoriented;
  throw DomainError("unknown canonical mode '" + mode + "'");
}

MoveKind parse_kind(const std::string& k) {
  if (k == "1a" || k == "r1a") return MoveKind::r1_add;
  if (k == "1b" || k == "r1b") return MoveKind::r1_del;
  if (k == "s2a") return MoveKind::s2_add;
  if (k == "s2b") return MoveKind::s2_del;
  if (k == "w2a") return MoveKind::w2_add;
  if (k == "w2b") return MoveKind::w2_del;
  if (k == "s3") return MoveKind::s3;
  if (k == "w3") return MoveKind::w3;
  throw DomainError("unknown move kind '" + k + "'");
}

std::vector<MoveKind> parse_kind_families(const std::string& csv) {
  std::vector<MoveKind> kinds;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "r1" || item == "1") {
      kinds.push_back(MoveKind::r1_add);
      kinds.push_back(MoveKind::r1_del);
    } else if (item == "s2") {
      kinds.push_back(MoveKind::s2_add);
      kinds.push_back(MoveKind::s2_del);
    } else if (item == "w2") {
      kinds.push_back(MoveKind::w2_add);
      kinds.push_back(MoveKind::w2_del);
    } else {
      kinds.push_back(parse_kind(item));
    }
  }
  if (kinds.empty()) throw DomainError("empty move list");
  return kinds;
}

std::vector<RolfsenEntry> load_names(const std::string& path) {
  if (path.empty()) return default_rolfsen();
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open projection table " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_rolfsen(buf.str());
}

void emit(std::ostream& os, const json& j) { os << j.dump() << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Spherical-curve invariants over decorated Gauss words"};
  app.require_subcommand(1);
  std::string format = "json";

  std::optional<std::string> word_arg;
  std::string mode = "based";
  auto* cmd_normalize = app.add_subcommand("normalize", "Canonical form of a word");
  cmd_normalize->add_option("word", word_arg, "token word; omit to read stdin");
  cmd_normalize->add_option("--mode", mode, "based | unbased | unbased-unoriented");
  cmd_normalize->add_option("--format", format, "text | json");

  bool debug_lr = false;
  auto* cmd_invariants = app.add_subcommand("invariants", "Invariant vector of a word");
  cmd_invariants->add_option("word", word_arg, "token word; omit to read stdin");
  cmd_invariants->add_option("--format", format, "json | csv | text");
  cmd_invariants->add_flag("--debug", debug_lr, "include the separate l and r counts");

  auto* cmd_realizable = app.add_subcommand("realizable", "Genus-0 test");
  cmd_realizable->add_option("word", word_arg, "token word; omit to read stdin");
  cmd_realizable->add_option("--format", format, "text | json");

  auto* cmd_faces = app.add_subcommand("faces", "Face structure of a realizable word");
  cmd_faces->add_option("word", word_arg, "token word; omit to read stdin");
  cmd_faces->add_option("--format", format, "json");

  std::string kind_str;
  auto* cmd_moves = app.add_subcommand("moves", "Valid move instances on a word");
  cmd_moves->add_option("word", word_arg, "token word; omit to read stdin");
  cmd_moves->add_option("--kind", kind_str, "1a 1b s2a s2b w2a w2b s3 w3")->required();
  cmd_moves->add_option("--format", format, "json");

  std::string sum_w1, sum_w2;
  int arc1 = 0, arc2 = 0;
  auto* cmd_sum = app.add_subcommand("sum", "Connected sum of two words");
  cmd_sum->add_option("word1", sum_w1, "first word")->required();
  cmd_sum->add_option("word2", sum_w2, "second word")->required();
  cmd_sum->add_option("--arc1", arc1, "insertion gap in the first word");
  cmd_sum->add_option("--arc2", arc2, "base gap of the second word");
  cmd_sum->add_option("--format", format, "text | json");

  int max_n = 6;
  bool prime = false, reduced = false;
  int threads = 1;
  std::string strategy = "dfs";
  std::string out_path = "-";
  std::string rolfsen_path;
  auto* cmd_enum = app.add_subcommand("enumerate", "All curve classes up to a crossing bound");
  cmd_enum->add_option("--max-crossings", max_n, "crossing bound")->required();
  cmd_enum->add_flag("--prime", prime, "keep prime curves (and the trivial curve)");
  cmd_enum->add_flag("--reduced", reduced, "keep 1-gon-free curves");
  cmd_enum->add_option("--threads", threads, "worker threads for the generation");
  cmd_enum->add_option("--strategy", strategy, "dfs | closure | both (cross-check)");
  cmd_enum->add_option("--out", out_path, "output file, - for stdout");
  cmd_enum->add_option("--rolfsen", rolfsen_path, "projection table for naming");

  std::string columns;
  auto* cmd_table = app.add_subcommand("table", "Invariant table of the corpus");
  cmd_table->add_option("--max-crossings", max_n, "crossing bound")->required();
  cmd_table->add_flag("--prime", prime, "keep prime curves (and the trivial curve)");
  cmd_table->add_flag("--reduced", reduced, "keep 1-gon-free curves");
  cmd_table->add_option("--threads", threads, "worker threads for the generation");
  cmd_table->add_option("--columns", columns, "comma-separated column subset");
  cmd_table->add_option("--format", format, "csv | json");
  cmd_table->add_option("--rolfsen", rolfsen_path, "projection table for naming");
  cmd_table->add_flag("--debug", debug_lr, "include the separate l and r counts");

  std::string moves_csv, bfs_w1, bfs_w2;
  int max_steps = 16;
  auto* cmd_bfs = app.add_subcommand("bfs", "Search a move sequence between two curves");
  cmd_bfs->add_option("--moves", moves_csv, "families r1,s2,w2,s3,w3 or directed kinds")->required();
  cmd_bfs->add_option("--max-crossings", max_n, "crossing bound")->required();
  cmd_bfs->add_option("--max-steps", max_steps, "search depth bound");
  cmd_bfs->add_option("word1", bfs_w1, "source word")->required();
  cmd_bfs->add_option("word2", bfs_w2, "target word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*cmd_normalize) {
    const CanonicalMode m = parse_mode(mode);
    for (const std::string& in : word_inputs(word_arg)) {
      const Word key = canonical_key(Word::parse(in), m).word;
      if (format == "json")
        emit(std::cout, json{{"word", key.str()}, {"tokens", word_to_json(key)}});
      else
        std::cout << key.str() << "\n";
    }
  } else if (*cmd_invariants) {
    bool header_done = false;
    for (const std::string& in : word_inputs(word_arg)) {
      const Word w = Word::parse(in);
      const InvariantVector v = invariant_vector(w);
      const std::string name = curve_key(w).str();
      if (format == "csv") {
        if (!header_done) {
          std::cout << csv_header(debug_lr) << "\n";
          header_done = true;
        }
        std::cout << csv_row(v, name, debug_lr) << "\n";
      } else if (format == "text") {
        std::cout << "n=" << v.n << " u=" << v.u << " b=" << v.b << " lr=" << v.lr
                  << " x=" << v.x << " s=" << v.s << " kappa=" << v.kappa
                  << " inv_s3=" << v.inv_s3 << " inv_s2=" << v.inv_s2
                  << " inv_w3=" << v.inv_w3 << " mu=" << v.mu
                  << " realizable=" << (v.realizable ? "true" : "false") << "\n";
      } else {
        emit(std::cout, invariants_to_json(v, name, debug_lr));
      }
    }
  } else if (*cmd_realizable) {
    for (const std::string& in : word_inputs(word_arg)) {
      const Word w = Word::parse(in);
      const int g = genus(w);
      if (format == "json")
        emit(std::cout, json{{"realizable", g == 0}, {"genus", g}});
      else
        std::cout << (g == 0 ? "true" : "false") << " genus=" << g << "\n";
    }
  } else if (*cmd_faces) {
    for (const std::string& in : word_inputs(word_arg)) {
      json arr = json::array();
      for (const Face& f : faces(Word::parse(in))) arr.push_back(face_to_json(f));
      emit(std::cout, arr);
    }
  } else if (*cmd_moves) {
    const MoveKind kind = parse_kind(kind_str);
    for (const std::string& in : word_inputs(word_arg)) {
      json arr = json::array();
      for (const MoveInstance& m : enumerate_moves(Word::parse(in), kind))
        arr.push_back(move_to_json(m));
      emit(std::cout, arr);
    }
  } else if (*cmd_sum) {
    const Word w = connected_sum(Word::parse(sum_w1), Word::parse(sum_w2), arc1, arc2);
    if (format == "json")
      emit(std::cout, json{{"word", w.str()}, {"tokens", word_to_json(w)}});
    else
      std::cout << w.str() << "\n";
  } else if (*cmd_enum) {
    const auto names = load_names(rolfsen_path);
    if (strategy == "closure" || strategy == "both") {
      const std::vector<Word> closure = move_closure_class_keys(max_n);
      if (strategy == "both") {
        const std::vector<Word> dfs = curve_class_keys(max_n, threads);
        if (dfs != closure)
          throw DomainError("enumeration strategies disagree: dfs " +
                            std::to_string(dfs.size()) + " classes, closure " +
                            std::to_string(closure.size()));
      }
    }
    const auto corpus =
        build_corpus(max_n, CorpusFilters{prime, reduced}, names, threads);
    json classes = json::array();
    for (const CurveClass& c : corpus) classes.push_back(class_to_json(c));
    const json doc = {{"max_crossings", max_n},
                      {"filters", {{"prime", prime}, {"reduced", reduced}}},
                      {"strategy", strategy},
                      {"classes", classes}};
    if (out_path == "-") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream out(out_path);
      if (!out) throw DomainError("cannot write " + out_path);
      out << doc.dump(2) << "\n";
    }
  } else if (*cmd_table) {
    const auto names = load_names(rolfsen_path);
    const auto corpus =
        build_corpus(max_n, CorpusFilters{prime, reduced}, names, threads);
    std::vector<std::string> cols = invariant_columns();
    if (debug_lr) {
      cols.push_back("l");
      cols.push_back("r");
    }
    if (!columns.empty()) {
      cols.clear();
      std::stringstream ss(columns);
      std::string c;
      while (std::getline(ss, c, ',')) cols.push_back(c);
    }
    if (format == "json") {
      json rows = json::array();
      for (const CurveClass& c : corpus) {
        const json full = class_to_json(c);
        json row;
        for (const std::string& col : cols) {
          if (!full.contains(col)) throw DomainError("unknown column '" + col + "'");
          row[col] = full[col];
        }
        rows.push_back(row);
      }
      std::cout << rows.dump(2) << "\n";
    } else {
      std::string header;
      for (const std::string& c : cols) header += (header.empty() ? "" : ",") + c;
      std::cout << header << "\n";
      for (const CurveClass& c : corpus) {
        const json full = class_to_json(c);
        std::string line;
        for (const std::string& col : cols) {
          if (!full.contains(col)) throw DomainError("unknown column '" + col + "'");
          const json& v = full[col];
          line += (line.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        std::cout << line << "\n";
      }
    }
  } else if (*cmd_bfs) {
    const std::vector<MoveKind> kinds = parse_kind_families(moves_csv);
    const SearchResult r = bfs_reachable(Word::parse(bfs_w1), Word::parse(bfs_w2),
                                         kinds, max_n, max_steps);
    emit(std::cout, search_to_json(r));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sphcurve::ParseError& e) {
    std::cerr << sphcurve::error_to_json("parse", e.what()).dump() << "\n";
    return 1;
  } catch (const sphcurve::NonRealizableError& e) {
    std::cerr << sphcurve::error_to_json("non-realizable", e.what()).dump() << "\n";
    return 1;
  } catch (const sphcurve::Error& e) {
    std::cerr << sphcurve::error_to_json("domain", e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << sphcurve::error_to_json("internal", e.what()).dump() << "\n";
    return 1;
  }
}
