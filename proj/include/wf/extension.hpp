#pragma once

#include "wf/spectral.hpp"

#include <map>

namespace wf {

/// One extension step inside an ambient face: allele `lost_s` is lost over
/// allele `target_r`; the source face is ambient minus the lost label.
struct ExtensionStep {
    ExtensionStep(Face ambient_face, int target_r, int lost_s);

    Face ambient;
    int r;  // target face index
    int s;  // lost allele

    Face source() const { return ambient.without(s); }
    Face target() const { return ambient.without(r); }
};

/// Pullback of a polynomial on the source facet through the projection
/// pi^{r,s} (the lost coordinate is absorbed into the target one); the result
/// lives on the ambient face. Exact substitution, a ring homomorphism.
MultiPoly compose_projection(const MultiPoly& expr, const ExtensionStep& step);

/// Pullback through the chained projection of a whole path.
MultiPoly compose_projection(const MultiPoly& expr, const PathSpec& path);

/// Interpolated extension of a backward eigenfunction from the source facet
/// into the ambient face: psi(pi^{r,s}(p)) * p^r / (p^s + p^r). The result
/// satisfies the same eigen identity on the ambient face, restricts to psi on
/// the source facet and to 0 on the facet without r.
/// The eigen identity of the input is checked exactly first.
RationalFn extend_eigenfunction(const MultiPoly& psi, const Rational& kappa, const ExtensionStep& step);

/// The same interpolation without the eigen precheck, for iterating over
/// already-extended rational shapes.
RationalFn extend_step(const RationalFn& psi, const ExtensionStep& step);

struct PieceMode {
    Rational kappa;
    Rational coeff;
    RationalFn shape;
};

/// Spatial modes of a backward solution on one open face.
using Piece = std::vector<PieceMode>;

Piece piece_of(const ProperSolution& u);

/// Mode-by-mode extension of a solution through one step; the result solves
/// the backward equation on the open ambient face and attains the input on
/// the source facet, 0 on the facet without the target label.
Piece extend_solution_once(const Piece& piece, const ExtensionStep& step);
Piece extend_solution_once(const ProperSolution& u, const ExtensionStep& step);

/// A backward solution assembled from per-face pieces; faces without a piece
/// carry the zero function.
class PiecewiseSolution {
public:
    PiecewiseSolution() = default;

    void add_mode(const Face& face, PieceMode mode);
    void add_piece(const Face& face, const Piece& piece);
    void merge(const PiecewiseSolution& other);

    const std::map<Face, Piece>& pieces() const { return pieces_; }
    const Piece* find(const Face& face) const;

    /// The t = 0 spatial expression on the face (the extended final
    /// condition); zero when the face carries no piece.
    RationalFn snapshot(const Face& face) const;

    /// Evaluates the piece of the point's own stratum at backward time t.
    double eval(const SimplexPoint& p, double t) const;

    /// Collapses modes with equal eigenvalue into a single shape per face.
    void combine_modes();

private:
    std::map<Face, Piece> pieces_;
};

/// Iterated extension along one path: the piece on the d-th chain face is
/// u(pi_chain(p), t) * prod_j p^{i_j} / (p^{i_j} + ... + p^{i_d}), built in
/// closed form. Includes the base piece.
PiecewiseSolution pathwise_extension(const ProperSolution& u, const PathSpec& path);

/// Closed-form shape of one mode on the m-th face of the path's chain.
RationalFn chain_shape(const MultiPoly& shape_on_base, const PathSpec& path, int stage);

/// Average of all pathwise extensions over every anchor in the base face and
/// every ordering of the complementary labels, scaled by 1/|base|; pieces
/// exist exactly on the faces containing the base.
PiecewiseSolution global_extension(const ProperSolution& u);

}  // namespace wf
