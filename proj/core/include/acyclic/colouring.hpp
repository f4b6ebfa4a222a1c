#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acyclic {

// Partial vertex colouring over a fixed palette [0, palette_size).
class Colouring {
 public:
  static constexpr int kUnset = -1;

  Colouring() = default;
  Colouring(int n, int palette);
  Colouring(std::vector<int> colours, int palette);

  int num_vertices() const { return static_cast<int>(colour_.size()); }
  int palette_size() const { return palette_; }

  int colour(int v) const;
  bool is_assigned(int v) const { return colour(v) != kUnset; }
  bool is_total() const;

  void assign(int v, int c);
  void clear(int v);

  int colours_used() const;  // distinct colours among assigned vertices

  // classes[c] = sorted vertices of colour c; unassigned vertices appear
  // in no class.
  std::vector<std::vector<int>> colour_classes() const;

  const std::vector<int>& values() const { return colour_; }

  bool operator==(const Colouring&) const = default;

 private:
  std::vector<int> colour_;
  int palette_ = 0;
};

// Text format: one "v colour" line per assigned vertex.
void write_colouring(const Colouring& phi, std::ostream& out);
std::string colouring_to_text(const Colouring& phi);
Colouring read_colouring(std::istream& in, int n);
Colouring read_colouring_text(const std::string& text, int n);

}  // namespace acyclic
