#include "perm_iso.hpp"

#include <string>

namespace hecke::testing {

Permutation parse_barred(std::string_view text, int plain, int degree) {
  std::string out;
  std::string num;
  auto flush = [&](bool barred) {
    if (num.empty()) return;
    out += std::to_string(std::stoi(num) + (barred ? plain : 0));
    num.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      num += c;
    } else if (c == '\'') {
      flush(true);
    } else {
      flush(false);
      out += c;
    }
  }
  flush(false);
  return Permutation::parse(out, degree);
}

}  // namespace hecke::testing
