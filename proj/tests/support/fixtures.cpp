#include "fixtures.hpp"

#include <fstream>
#include <sstream>

#include "lwo/error.hpp"

namespace lwo::testing {

std::string fixturePath(const std::string& name) { return std::string(LWO_FIXTURE_DIR) + "/" + name; }

std::string readFixture(const std::string& name) {
  std::ifstream in(fixturePath(name), std::ios::binary);
  if (!in) throw Error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ParsedDocument loadFixture(const std::string& name) { return parseDocument(readFixture(name)); }

Inclusion inc(const std::string& text) {
  ParseOptions options;
  options.allowExtended = true;
  options.prefixes = {{"mo", "http://purl.org/ontology/mo/"},
                      {"foaf", "http://xmlns.com/foaf/0.1/"},
                      {"xsd", "http://www.w3.org/2001/XMLSchema#"}};
  const ConstraintSet s = parseConstraint(text, options);
  if (s.size() != 1) throw Error("'" + text + "' is not a single inclusion");
  return *s.begin();
}

}  // namespace lwo::testing
