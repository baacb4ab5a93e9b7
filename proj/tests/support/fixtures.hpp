#ifndef LWO_TEST_FIXTURES_HPP
#define LWO_TEST_FIXTURES_HPP

#include <string>

#include "lwo/io.hpp"

namespace lwo::testing {

std::string fixturePath(const std::string& name);
std::string readFixture(const std::string& name);
ParsedDocument loadFixture(const std::string& name);

/// Parses one constraint written with the standard mo/foaf/xsd prefixes.
Inclusion inc(const std::string& text);

}  // namespace lwo::testing

#endif
