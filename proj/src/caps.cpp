#include "glinv/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "glinv/errors.hpp"

namespace glinv {

Caps Caps::from_env() {
  const char* env = std::getenv("GLINV_CAPS");
  return env ? parse(env) : Caps{};
}

Caps Caps::parse(const std::string& spec) {
  Caps caps;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("malformed cap setting '" + item + "'");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed cap value in '" + item + "'");
    }
    if (value < 1) throw ParseError("cap values must be positive: '" + item + "'");
    if (key == "degree")
      caps.max_total_degree = static_cast<int>(value);
    else if (key == "n")
      caps.max_n = static_cast<int>(value);
    else if (key == "tuples")
      caps.max_tuples = value;
    else
      throw ParseError("unknown cap '" + key + "'");
  }
  return caps;
}

void Caps::check_degree(int total_degree) const {
  if (total_degree > max_total_degree)
    throw CapError("degree cap exceeded: p+q=" + std::to_string(total_degree) + " > " +
                   std::to_string(max_total_degree));
}

void Caps::check_n(int n) const {
  if (n > max_n)
    throw CapError("matrix size cap exceeded: n=" + std::to_string(n) + " > " +
                   std::to_string(max_n));
}

void Caps::check_tuples(int n, int r) const {
  long long tuples = 1;
  for (int k = 0; k < r; ++k) {
    tuples *= n;
    if (tuples > max_tuples)
      throw CapError("summation cap exceeded: n^r=" + std::to_string(n) + "^" + std::to_string(r) +
                     " > " + std::to_string(max_tuples));
  }
}

}  // namespace glinv
