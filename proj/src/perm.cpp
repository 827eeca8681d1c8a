#include "hurwitz/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw StructuralError("permutation image array is not a bijection");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::transposition(std::size_t degree, Point a, Point b) {
  if (a >= degree || b >= degree) {
    throw PreconditionError("transposition point out of range");
  }
  Perm p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  Perm result = identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw PreconditionError("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    }
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw PreconditionError("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw PreconditionError("cycle notation: expected a point number");
      unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > degree) {
        throw PreconditionError("cycle notation: point " + std::to_string(v) +
                                " outside 1.." + std::to_string(degree));
      }
      Point p = static_cast<Point>(v - 1);
      if (std::find(cycle.begin(), cycle.end(), p) != cycle.end()) {
        throw PreconditionError("cycle notation: repeated point in a cycle");
      }
      cycle.push_back(p);
    }
    if (cycle.size() > 1) {
      Perm c = identity(degree);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      result = result * c;
    }
    skip_ws();
  }
  return result;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw PreconditionError("permutation degree mismatch");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Perm& Perm::operator*=(const Perm& rhs) {
  *this = *this * rhs;
  return *this;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::conjugate_by(const Perm& g) const { return g.inverse() * *this * g; }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Perm::is_even() const {
  std::size_t even_cycles = 0;
  for (std::size_t len : cycle_type()) {
    if (len % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t Perm::order() const {
  std::uint64_t m = 1;
  for (std::size_t len : cycle_type()) m = std::lcm(m, static_cast<std::uint64_t>(len));
  return m;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace hurwitz
