#include "lwo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lwo/algebra.hpp"
#include "lwo/error.hpp"
#include "lwo/io.hpp"
#include "lwo/minimize.hpp"
#include "lwo/reason.hpp"

namespace lwo::cli {

namespace {

struct Loaded {
  std::string path;
  ParsedDocument doc;
};

std::string readSource(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ParseError messages already start with "line:col: ".
template <class F>
auto withPath(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Error((path == "-" ? std::string("<stdin>") : path) + ":" + e.what());
  }
}

Loaded load(const std::string& path, bool extended, const PrefixTable& prefixes = {}) {
  const std::string text = readSource(path);
  ParseOptions options;
  options.allowExtended = extended;
  options.prefixes = prefixes;
  auto document = withPath(path, [&] { return parseDocument(text, options); });
  return Loaded{path, std::move(document)};
}

RenamingMap loadRenaming(const std::string& path, const PrefixTable& prefixes) {
  const std::string text = readSource(path);
  std::istringstream lines(text);
  std::string line;
  RenamingMap map;
  int lineNo = 0;
  while (std::getline(lines, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(path + ":" + std::to_string(lineNo) + ":1: expected 'old -> new'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string from = trim(line.substr(0, arrow));
    const std::string to = trim(line.substr(arrow + 2));
    try {
      map.add(parseName(from, prefixes), parseName(to, prefixes));
    } catch (const ParseError& e) {
      throw Error(path + ":" + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return map;
}

Vocabulary keepVocabulary(const Ontology& o, const std::vector<std::string>& names, const PrefixTable& prefixes) {
  Vocabulary w;
  for (const auto& text : names) {
    const Name n = parseName(text, prefixes);
    // Unknown names go to the concepts so that the operation reports them.
    (o.vocabulary().roles.count(n) ? w.roles : w.concepts).insert(n);
  }
  return w;
}

std::vector<std::string> splitNames(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::string token;
    for (char c : item + ",") {
      if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        if (!token.empty()) out.push_back(token);
        token.clear();
      } else {
        token += c;
      }
    }
  }
  return out;
}

std::vector<std::string> readNameFile(const std::string& path) {
  std::istringstream in(readSource(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    lines.push_back(line);
  }
  return splitNames(lines);
}

void emit(const std::string& text, const std::string& outPath, std::ostream& out) {
  if (outPath.empty() || outPath == "-") {
    out << text;
    return;
  }
  std::ofstream file(outPath, std::ios::binary);
  if (!file) throw Error("cannot write '" + outPath + "'");
  file << text;
}

int answer(bool value, std::ostream& out) {
  out << (value ? "true" : "false") << '\n';
  return value ? 0 : 1;
}

PrefixTable combined(const PrefixTable& first, const PrefixTable& second) {
  PrefixTable t = first;
  for (const auto& [k, v] : second) t[k] = v;
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebra and reasoning over lightweight ontologies", "lwo"};
  app.require_subcommand(1);
  bool extended = false;
  std::string outPath;
  app.add_flag("--extended", extended, "Accept Top on the left-hand side of inclusions");
  app.add_option("--out", outPath, "Write ontology output to this file instead of stdout");

  std::string fileA, fileB, constraintText, renamePath, dropPath, dotPath, keepFile;
  std::vector<std::string> keep;

  auto* cImplies = app.add_subcommand("implies", "Decide whether FILE implies CONSTRAINT");
  cImplies->add_option("file", fileA)->required();
  cImplies->add_option("constraint", constraintText)->required();

  auto* cEquiv = app.add_subcommand("equiv", "Decide whether A and B have the same consequences");
  cEquiv->add_option("a", fileA)->required();
  cEquiv->add_option("b", fileB)->required();

  auto* cConsequences = app.add_subcommand("consequences", "List every non-trivial consequence");
  cConsequences->add_option("file", fileA)->required();

  auto* cEmpty = app.add_subcommand("empty", "List the descriptions forced to be empty");
  cEmpty->add_option("file", fileA)->required();

  auto* cMinimize = app.add_subcommand("minimize", "Print a minimal equivalent constraint set");
  cMinimize->add_option("file", fileA)->required();

  auto addKeep = [&](CLI::App* c) {
    c->add_option("file", fileA)->required();
    auto* k = c->add_option("--keep", keep, "Names to keep (comma or space separated)");
    auto* f = c->add_option("--keep-file", keepFile, "File listing the names to keep");
    k->excludes(f);
  };
  auto* cProject = app.add_subcommand("project", "Consequences over a subset of the vocabulary");
  addKeep(cProject);
  auto* cClosed = app.add_subcommand("closed", "Projection plus emptiness of the other names");
  addKeep(cClosed);

  auto* cUnion = app.add_subcommand("union", "Union of two ontologies");
  cUnion->add_option("a", fileA)->required();
  cUnion->add_option("b", fileB)->required();

  auto* cIntersect = app.add_subcommand("intersect", "Consequences shared by A and B");
  cIntersect->add_option("a", fileA)->required();
  cIntersect->add_option("b", fileB)->required();
  cIntersect->add_option("--rename", renamePath, "Renaming applied to B first");

  auto* cDiff = app.add_subcommand("diff", "Consequences of A that B lacks");
  cDiff->add_option("a", fileA)->required();
  cDiff->add_option("b", fileB)->required();
  cDiff->add_option("--rename", renamePath, "Renaming applied to B first");

  auto* cDeprecate = app.add_subcommand("deprecate", "Remove constraints and minimize");
  cDeprecate->add_option("file", fileA)->required();
  cDeprecate->add_option("--drop", dropPath, "File with the constraints to remove")->required();

  auto* cGraph = app.add_subcommand("graph", "Export the constraint graph");
  cGraph->add_option("file", fileA)->required();
  cGraph->add_option("--dot", dotPath, "Graphviz output path ('-' for stdout)")->required();

  auto* cTable = app.add_subcommand("table", "Two-column constraint table");
  cTable->add_option("file", fileA)->required();

  for (auto* c : app.get_subcommands({})) c->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    auto writeOntology = [&](const Ontology& o) {
      emit(serializeOntology(o), outPath, out);
      return 0;
    };
    auto keepList = [&](const Loaded& a) {
      std::vector<std::string> names = keepFile.empty() ? splitNames(keep) : readNameFile(keepFile);
      return keepVocabulary(a.doc.ontology, names, a.doc.prefixes);
    };
    // B is parsed on its own; the renaming sees B's prefixes before A's.
    auto secondOperand = [&](const Loaded& a) {
      Loaded b = load(fileB, extended);
      if (!renamePath.empty()) {
        const RenamingMap m = loadRenaming(renamePath, combined(a.doc.prefixes, b.doc.prefixes));
        b.doc.ontology = rename(b.doc.ontology, m);
      }
      return b;
    };

    if (cImplies->parsed()) {
      const Loaded a = load(fileA, extended);
      ParseOptions options;
      options.allowExtended = true;
      options.prefixes = a.doc.prefixes;
      const ConstraintSet q = withPath("<constraint>", [&] { return parseConstraint(constraintText, options); });
      const Reasoner r(a.doc.ontology.constraints(), occurringDescriptions(q));
      return answer(std::all_of(q.begin(), q.end(), [&](const Inclusion& i) { return r.implies(i); }), out);
    }
    if (cEquiv->parsed()) {
      const Loaded a = load(fileA, extended);
      const Loaded b = load(fileB, extended);
      return answer(equivalentTheories(a.doc.ontology.constraints(), b.doc.ontology.constraints()), out);
    }
    if (cConsequences->parsed()) {
      const Loaded a = load(fileA, extended);
      const auto& o = a.doc.ontology;
      return writeOntology(Ontology(o.vocabulary(), allConsequences(o.constraints())));
    }
    if (cEmpty->parsed()) {
      const Loaded a = load(fileA, extended);
      for (const auto& c : emptyDescriptions(a.doc.ontology.constraints())) out << toString(c) << '\n';
      return 0;
    }
    if (cMinimize->parsed()) {
      const Loaded a = load(fileA, extended);
      const auto& o = a.doc.ontology;
      return writeOntology(Ontology(o.vocabulary(), minimizeConstraints(o.constraints())));
    }
    if (cProject->parsed() || cClosed->parsed()) {
      if (keep.empty() && keepFile.empty()) throw ValidationError("one of --keep or --keep-file is required");
      const Loaded a = load(fileA, extended);
      const Vocabulary w = keepList(a);
      return writeOntology(cProject->parsed() ? project(a.doc.ontology, w) : closedFragment(a.doc.ontology, w));
    }
    if (cUnion->parsed()) {
      const Loaded a = load(fileA, extended);
      const Loaded b = load(fileB, extended);
      return writeOntology(unite(a.doc.ontology, b.doc.ontology));
    }
    if (cIntersect->parsed()) {
      const Loaded a = load(fileA, extended);
      return writeOntology(intersect(a.doc.ontology, secondOperand(a).doc.ontology));
    }
    if (cDiff->parsed()) {
      const Loaded a = load(fileA, extended);
      return writeOntology(difference(a.doc.ontology, secondOperand(a).doc.ontology));
    }
    if (cDeprecate->parsed()) {
      const Loaded a = load(fileA, extended);
      const Loaded drop = load(dropPath, true, a.doc.prefixes);
      const auto result = deprecate(a.doc.ontology, drop.doc.ontology.constraints());
      for (const auto& i : result.absent) err << "warning: '" << toString(i) << "' is not a constraint of " << fileA << '\n';
      return writeOntology(result.ontology);
    }
    if (cGraph->parsed()) {
      const Loaded a = load(fileA, extended);
      emit(exportDot(buildGraph(a.doc.ontology.constraints())), dotPath, out);
      return 0;
    }
    if (cTable->parsed()) {
      const Loaded a = load(fileA, extended);
      emit(exportTable(a.doc.ontology), outPath, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace lwo::cli
