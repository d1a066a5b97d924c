#include "sls/lattice.hpp"

#include <stdexcept>

namespace sls {

std::size_t Lattice2D::place(Coord c) {
    if (c.row < 1 || c.row > height_ || c.col < 1 || c.col > width_)
        throw std::out_of_range("lattice coordinate outside [1,L]x[1,L']");
    if (index_at_.count(c)) throw std::invalid_argument("vertex already occupied");
    std::size_t idx = position_.size();
    index_at_[c] = idx;
    position_.push_back(c);
    return idx;
}

std::optional<std::size_t> Lattice2D::qubit_at(Coord c) const {
    auto it = index_at_.find(c);
    if (it == index_at_.end()) return std::nullopt;
    return it->second;
}

}  // namespace sls
