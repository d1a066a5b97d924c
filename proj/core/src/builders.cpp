#include "sls/builders.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sls {

namespace {

struct Face {
    std::vector<Coord> support;
    char type;    // 'X', 'Z' or 'B' (both, color code style)
};

SubsystemCode assemble(std::string name, Lattice2D lattice, const std::vector<Face>& faces) {
    SubsystemCode code;
    code.name = std::move(name);
    code.n = lattice.n_qubits();
    for (const auto& f : faces) {
        std::vector<std::size_t> qubits;
        for (Coord c : f.support) {
            auto q = lattice.qubit_at(c);
            if (!q) throw std::logic_error("face touches an unoccupied vertex");
            qubits.push_back(*q);
        }
        if (f.type == 'B') {
            code.gauge_generators.push_back(PauliOperator::from_support(code.n, qubits, 'X'));
            code.gauge_generators.push_back(PauliOperator::from_support(code.n, qubits, 'Z'));
        } else {
            code.gauge_generators.push_back(PauliOperator::from_support(code.n, qubits, f.type));
        }
    }
    code.geometry = std::move(lattice);
    return code;
}

}  // namespace

SubsystemCode build_surface_code(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("surface code distance must be odd, >= 3");

    // Built in a frame where Z_L is the top row, then rotated so that Z_L is
    // the rightmost column (the orientation the merging protocol consumes).
    auto rot = [d](int r, int c) { return Coord{c, d + 1 - r}; };

    Lattice2D lattice(d, d);
    for (int c = 1; c <= d; ++c)
        for (int r = d; r >= 1; --r) {
            // Row-major in the rotated frame.
            (void)lattice.place(Coord{c, d + 1 - r});
        }

    std::vector<Face> faces;
    for (int r = 1; r < d; ++r)
        for (int c = 1; c < d; ++c)
            faces.push_back({{rot(r, c), rot(r, c + 1), rot(r + 1, c), rot(r + 1, c + 1)},
                             (r + c) % 2 ? 'X' : 'Z'});
    for (int c = 1; c < d; c += 2)    // top X cut-plaquettes
        faces.push_back({{rot(1, c), rot(1, c + 1)}, 'X'});
    for (int c = 2; c < d; c += 2)    // bottom X cut-plaquettes
        faces.push_back({{rot(d, c), rot(d, c + 1)}, 'X'});
    for (int r = 2; r < d; r += 2)    // left Z cut-plaquettes
        faces.push_back({{rot(r, 1), rot(r + 1, 1)}, 'Z'});
    for (int r = 1; r < d; r += 2)    // right Z cut-plaquettes
        faces.push_back({{rot(r, d), rot(r + 1, d)}, 'Z'});

    return assemble("surface-" + std::to_string(d), std::move(lattice), faces);
}

SubsystemCode build_color_code(int d) {
    if (d != 3) throw std::invalid_argument("color code is implemented for d = 3 only");

    Lattice2D lattice(3, 3);
    for (Coord c : {Coord{1, 1}, Coord{1, 2}, Coord{1, 3}, Coord{2, 1}, Coord{2, 2}, Coord{2, 3},
                    Coord{3, 2}})
        (void)lattice.place(c);

    std::vector<Face> faces = {
        {{{1, 1}, {1, 2}, {2, 1}, {2, 2}}, 'B'},
        {{{1, 2}, {1, 3}, {2, 2}, {2, 3}}, 'B'},
        {{{2, 1}, {2, 2}, {2, 3}, {3, 2}}, 'B'},
    };
    return assemble("color-3", std::move(lattice), faces);
}

SubsystemCode build_subsystem_surface_code(int L) {
    if (L != 3) throw std::invalid_argument("subsystem surface code is implemented for L = 3 only");

    Lattice2D lattice(3, 3);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c)
            if (!(r == 2 && c == 2)) (void)lattice.place(Coord{r, c});

    // Triangles G1..G4 (Z for 1 and 4, X for 2 and 3) and weight-2 boundary
    // operators S1..S4 (X for 1 and 4, Z for 2 and 3).
    std::vector<Face> faces = {
        {{{1, 1}, {1, 2}, {2, 1}}, 'Z'},    // G1
        {{{2, 1}, {3, 1}, {3, 2}}, 'X'},    // G2
        {{{1, 2}, {1, 3}, {2, 3}}, 'X'},    // G3
        {{{2, 3}, {3, 2}, {3, 3}}, 'Z'},    // G4
        {{{1, 1}, {2, 1}}, 'X'},            // S1
        {{{1, 2}, {1, 3}}, 'Z'},            // S2
        {{{3, 1}, {3, 2}}, 'Z'},            // S3
        {{{2, 3}, {3, 3}}, 'X'},            // S4
    };
    return assemble("ssc-3", std::move(lattice), faces);
}

SubsystemCode build_bacon_shor(int Lx, int Ly) {
    if (Lx < 2 || Ly < 2) throw std::invalid_argument("Bacon-Shor needs Lx, Ly >= 2");

    Lattice2D lattice(Lx, Ly);
    for (int r = 1; r <= Ly; ++r)
        for (int c = 1; c <= Lx; ++c) (void)lattice.place(Coord{r, c});

    std::vector<Face> faces;
    for (int r = 1; r <= Ly; ++r)
        for (int c = 1; c < Lx; ++c) faces.push_back({{{r, c}, {r, c + 1}}, 'Z'});
    for (int r = 1; r < Ly; ++r)
        for (int c = 1; c <= Lx; ++c) faces.push_back({{{r, c}, {r + 1, c}}, 'X'});

    return assemble("bacon-shor-" + std::to_string(Lx) + "x" + std::to_string(Ly),
                    std::move(lattice), faces);
}

int interaction_range(const SubsystemCode& code) {
    if (!code.geometry) throw std::invalid_argument("code has no geometry");
    const Lattice2D& lat = *code.geometry;
    int r = 1;
    for (const auto& g : code.gauge_generators) {
        int rmin = lat.height() + 1, rmax = 0, cmin = lat.width() + 1, cmax = 0;
        for (std::size_t q = 0; q < code.n; ++q) {
            if (!g.x_bit(q) && !g.z_bit(q)) continue;
            Coord c = lat.position(q);
            rmin = std::min(rmin, c.row);
            rmax = std::max(rmax, c.row);
            cmin = std::min(cmin, c.col);
            cmax = std::max(cmax, c.col);
        }
        if (rmax == 0) continue;    // identity generator
        r = std::max({r, rmax - rmin + 1, cmax - cmin + 1});
    }
    return r;
}

namespace {

bool pure_type(const PauliOperator& p, char pauli) {
    if (p.weight() == 0) return false;
    for (std::size_t q = 0; q < p.n(); ++q) {
        bool x = p.x_bit(q), z = p.z_bit(q);
        if (!x && !z) continue;
        if (pauli == 'Z' && (x || !z)) return false;
        if (pauli == 'X' && (z || !x)) return false;
    }
    return true;
}

/// True iff some dressed logical is supported on a proper subset of `support`
/// (the pathological case Lemma 1 excludes from the merge construction).
bool has_sub_support_logical(const SubsystemCode& code, const CodeAnalysis& analysis,
                             const std::vector<std::size_t>& support) {
    Gf2Space gauge_span(2 * code.n);
    for (const auto& g : code.gauge_generators) gauge_span.add(g.symplectic());

    const std::size_t w = support.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < w; ++i) total *= 4;
    for (std::size_t letters = 1; letters < total; ++letters) {
        PauliOperator cand(code.n);
        std::size_t t = letters;
        bool full_support = true;
        for (std::size_t i = 0; i < w; ++i) {
            static const char tab[4] = {'I', 'X', 'Z', 'Y'};
            char l = tab[t % 4];
            t /= 4;
            if (l == 'I') {
                full_support = false;
                continue;
            }
            cand = cand * PauliOperator::single(code.n, support[i], l);
        }
        if (full_support) continue;    // only strictly smaller supports matter
        bool commutes = true;
        for (const auto& s : analysis.stabilizer_generators)
            if (!cand.commutes_with(s)) {
                commutes = false;
                break;
            }
        if (commutes && !gauge_span.contains(cand.symplectic())) return true;
    }
    return false;
}

}  // namespace

std::optional<BoundaryLogical> boundary_logical(const SubsystemCode& code,
                                                const CodeAnalysis& analysis, Side side,
                                                std::size_t logical_index, char pauli) {
    if (!code.geometry) throw std::invalid_argument("code has no geometry");
    if (logical_index >= analysis.logical_pairs.size())
        throw std::out_of_range("logical index out of range");
    const Lattice2D& lat = *code.geometry;
    const int r = interaction_range(code);
    const auto& pair = analysis.logical_pairs[logical_index];
    const std::vector<PauliOperator> class_reps = {pair.z_like, pair.x_like,
                                                   canonical(pair.x_like * pair.z_like)};

    for (int w = 1; w <= r; ++w) {
        std::set<std::size_t> allowed;
        for (std::size_t q = 0; q < code.n; ++q) {
            int col = lat.position(q).col;
            bool in = side == Side::Left ? col <= w : col > lat.width() - w;
            if (in) allowed.insert(q);
        }
        for (bool use_gauge : {false, true}) {
            for (const auto& rep : class_reps) {
                // Scan the whole affine solution set for a pure-type string.
                std::vector<PauliOperator> basis = analysis.stabilizer_generators;
                if (use_gauge)
                    for (const auto& g : code.gauge_generators) basis.push_back(g);
                std::vector<std::size_t> forbidden;
                for (std::size_t q = 0; q < code.n; ++q)
                    if (!allowed.count(q)) forbidden.push_back(q);
                BinaryMatrix constraints(basis.size());
                BitVec rhs(2 * forbidden.size());
                for (std::size_t i = 0; i < forbidden.size(); ++i) {
                    std::size_t q = forbidden[i];
                    BitVec rx(basis.size()), rz(basis.size());
                    for (std::size_t b = 0; b < basis.size(); ++b) {
                        if (basis[b].x_bit(q)) rx.set(b);
                        if (basis[b].z_bit(q)) rz.set(b);
                    }
                    constraints.add_row(std::move(rx));
                    constraints.add_row(std::move(rz));
                    if (rep.x_bit(q)) rhs.set(2 * i);
                    if (rep.z_bit(q)) rhs.set(2 * i + 1);
                }
                auto sol = constraints.solve(rhs);
                if (!sol) continue;
                if (sol->kernel.size() > 12) continue;    // combinatorial scan cap

                std::optional<PauliOperator> best;
                std::size_t combos = std::size_t(1) << sol->kernel.size();
                for (std::size_t mask = 0; mask < combos; ++mask) {
                    BitVec coeff = sol->particular;
                    for (std::size_t i = 0; i < sol->kernel.size(); ++i)
                        if ((mask >> i) & 1) coeff ^= sol->kernel[i];
                    BitVec bits = rep.symplectic();
                    for (std::size_t b = 0; b < basis.size(); ++b)
                        if (coeff.test(b)) bits ^= basis[b].symplectic();
                    PauliOperator cand = PauliOperator::from_symplectic(code.n, bits);
                    if (!pure_type(cand, pauli)) continue;
                    if (!best || cand.weight() < best->weight() ||
                        (cand.weight() == best->weight() && cand.to_string() < best->to_string()))
                        best = cand;
                }
                if (!best) continue;

                BoundaryLogical bl;
                bl.op = *best;
                bl.strip_width = w;
                bl.side = side;
                for (std::size_t q = 0; q < code.n; ++q)
                    if (best->x_bit(q) || best->z_bit(q)) bl.ordered_support.push_back(q);
                std::sort(bl.ordered_support.begin(), bl.ordered_support.end(),
                          [&](std::size_t a, std::size_t b) {
                              return lat.position(a) < lat.position(b);
                          });
                if (has_sub_support_logical(code, analysis, bl.ordered_support)) continue;
                return bl;
            }
        }
    }
    return std::nullopt;
}

MergedLayout prepare_merged_lattice(const SubsystemCode& a, const BoundaryLogical& la,
                                    const SubsystemCode& b, const BoundaryLogical& lb,
                                    std::size_t ancilla_count) {
    if (!a.geometry || !b.geometry) throw std::invalid_argument("codes need geometry");
    if (la.side != Side::Right || lb.side != Side::Left)
        throw std::invalid_argument("merge expects A's logical on its right, B's on its left");

    const Lattice2D& lat_a = *a.geometry;
    const Lattice2D& lat_b = *b.geometry;

    // Row alignment: the corpus layouts already satisfy the strip-count rule
    // with aligned rows. A constant vertical shift of B is supported; anything
    // else would need the general blank-row relabeling and is rejected.
    int shift = 0;
    std::size_t npairs = std::min(la.ordered_support.size(), lb.ordered_support.size());
    for (std::size_t i = 0; i < npairs; ++i) {
        int d = lat_a.position(la.ordered_support[i]).row - lat_b.position(lb.ordered_support[i]).row;
        if (i == 0)
            shift = d;
        else if (d != shift)
            throw std::invalid_argument("seam rows cannot be aligned by a constant shift");
    }

    MergedLayout out;
    int height = std::max(lat_a.height(), lat_b.height() + shift);
    out.lattice = Lattice2D(lat_a.width() + lat_b.width() + 1, height);
    for (std::size_t q = 0; q < a.n; ++q)
        out.a_to_merged.push_back(out.lattice.place(lat_a.position(q)));
    for (std::size_t q = 0; q < b.n; ++q) {
        Coord c = lat_b.position(q);
        out.b_to_merged.push_back(
            out.lattice.place(Coord{c.row + shift, c.col + lat_a.width() + 1}));
    }
    for (std::size_t i = 0; i < ancilla_count; ++i) {
        if (i >= la.ordered_support.size())
            throw std::invalid_argument("more ancillas than seam rows");
        Coord c{lat_a.position(la.ordered_support[i]).row, lat_a.width() + 1};
        out.ancilla_positions.push_back(c);
        out.q_c.push_back(out.lattice.place(c));
    }
    for (std::size_t q : la.ordered_support) out.q_a.push_back(out.a_to_merged[q]);
    for (std::size_t q : lb.ordered_support) out.q_b.push_back(out.b_to_merged[q]);
    return out;
}

}  // namespace sls
