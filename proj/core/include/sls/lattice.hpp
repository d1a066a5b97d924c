#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sls/pauli.hpp"

namespace sls {

/// Integer grid coordinate, rows and columns starting at 1.
struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord&) const = default;
};

/// Rectangular vertex grid with a partial qubit placement. Qubit indices are a
/// bijection onto 0..n-1; not every vertex is occupied.
class Lattice2D {
  public:
    Lattice2D() = default;
    Lattice2D(int width, int height) : width_(width), height_(height) {}

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t n_qubits() const { return position_.size(); }

    /// Place the next qubit (index n_qubits()) at the given vertex.
    std::size_t place(Coord c);
    std::optional<std::size_t> qubit_at(Coord c) const;
    Coord position(std::size_t qubit) const { return position_.at(qubit); }
    const std::vector<Coord>& positions() const { return position_; }

  private:
    int width_ = 0;
    int height_ = 0;
    std::map<Coord, std::size_t> index_at_;
    std::vector<Coord> position_;
};

enum class Side { Left, Right };

/// A logical representative confined to a vertical boundary strip, with its
/// support ordered top to bottom for the merging protocol.
struct BoundaryLogical {
    PauliOperator op;
    std::vector<std::size_t> ordered_support;    // Q_I, sorted by row then column
    int strip_width = 0;
    Side side = Side::Right;
};

}  // namespace sls
