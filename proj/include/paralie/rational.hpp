#ifndef PARALIE_RATIONAL_HPP
#define PARALIE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace paralie {

using Rat = mpq_class;
using Weight = std::vector<Rat>;  // coordinates over fundamental weights
using IntVec = std::vector<long>; // coordinates over simple roots

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses "p" or "p/q"; throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

/// Parses a comma-separated rational vector, e.g. "1,0,3,0,-5,1".
inline Weight parse_weight(const std::string& s) {
  Weight w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    w.push_back(parse_rat(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return w;
}

inline std::string to_string(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i].get_str();
  }
  return out;
}

inline bool is_zero(const Weight& w) {
  for (const auto& c : w)
    if (c != 0) return false;
  return true;
}

inline Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight size mismatch");
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight size mismatch");
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Weight operator*(const Rat& s, const Weight& a) {
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

} // namespace paralie

#endif
