#include "acyclic/colouring.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace acyclic {

Colouring::Colouring(int n, int palette) : colour_(n, kUnset), palette_(palette) {
  if (n < 0 || palette < 0) throw std::invalid_argument("colouring: negative size");
}

Colouring::Colouring(std::vector<int> colours, int palette)
    : colour_(std::move(colours)), palette_(palette) {
  for (int c : colour_)
    if (c != kUnset && (c < 0 || c >= palette_))
      throw std::invalid_argument("colouring: colour outside palette");
}

int Colouring::colour(int v) const {
  if (v < 0 || v >= num_vertices()) throw std::invalid_argument("colouring: vertex out of range");
  return colour_[v];
}

bool Colouring::is_total() const {
  return std::none_of(colour_.begin(), colour_.end(), [](int c) { return c == kUnset; });
}

void Colouring::assign(int v, int c) {
  if (v < 0 || v >= num_vertices()) throw std::invalid_argument("colouring: vertex out of range");
  if (c < 0 || c >= palette_) throw std::invalid_argument("colouring: colour outside palette");
  colour_[v] = c;
}

void Colouring::clear(int v) {
  if (v < 0 || v >= num_vertices()) throw std::invalid_argument("colouring: vertex out of range");
  colour_[v] = kUnset;
}

int Colouring::colours_used() const {
  std::set<int> used;
  for (int c : colour_)
    if (c != kUnset) used.insert(c);
  return static_cast<int>(used.size());
}

std::vector<std::vector<int>> Colouring::colour_classes() const {
  std::vector<std::vector<int>> classes(palette_);
  for (int v = 0; v < num_vertices(); ++v)
    if (colour_[v] != kUnset) classes[colour_[v]].push_back(v);
  return classes;
}

void write_colouring(const Colouring& phi, std::ostream& out) {
  for (int v = 0; v < phi.num_vertices(); ++v)
    if (phi.is_assigned(v)) out << v << " " << phi.colour(v) << "\n";
}

std::string colouring_to_text(const Colouring& phi) {
  std::ostringstream ss;
  write_colouring(phi, ss);
  return ss.str();
}

Colouring read_colouring(std::istream& in, int n) {
  std::vector<int> colours(n, Colouring::kUnset);
  int max_colour = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    int v, c;
    if (!(ss >> v)) continue;
    if (!(ss >> c) || v < 0 || v >= n || c < 0) {
      std::ostringstream msg;
      msg << "colouring, line " << line_no << ": expected \"v colour\" with v < " << n;
      throw std::runtime_error(msg.str());
    }
    colours[v] = c;
    max_colour = std::max(max_colour, c);
  }
  return Colouring(std::move(colours), max_colour + 1);
}

Colouring read_colouring_text(const std::string& text, int n) {
  std::istringstream ss(text);
  return read_colouring(ss, n);
}

}  // namespace acyclic
