#include "eigconf/config.hpp"

#include <ostream>
#include <sstream>

namespace eigconf {

int EigenConfig::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::string EigenConfig::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EigenConfig& c) { return os << c.to_string(); }

}  // namespace eigconf
