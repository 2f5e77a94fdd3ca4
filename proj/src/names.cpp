#include "pscore/names.hpp"

namespace pscore {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::string normalize_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string fold_key(std::string_view raw) {
  std::string out = normalize_name(raw);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

bool folded_less(std::string_view a, std::string_view b) {
  const std::string fa = fold_key(a);
  const std::string fb = fold_key(b);
  if (fa != fb) return fa < fb;
  return a < b;
}

}  // namespace pscore
