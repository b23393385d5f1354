#include "wf/extension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wf {

ExtensionStep::ExtensionStep(Face ambient_face, int target_r, int lost_s)
    : ambient(std::move(ambient_face)), r(target_r), s(lost_s) {
    if (r == s) throw std::invalid_argument("extension target and lost labels must differ");
    if (!ambient.contains(r) || !ambient.contains(s))
        throw std::invalid_argument("extension labels must lie on the ambient face " + ambient.to_string());
    if (ambient.dim() < 1) throw std::invalid_argument("ambient face of an extension cannot be a vertex");
}

namespace {

void check_source(const Face& have, const Face& want) {
    if (!(have == want))
        throw std::invalid_argument("extension input lives on " + have.to_string() + " (ambient n=" +
                                    std::to_string(have.ambient_n()) + "), expected " + want.to_string() +
                                    " (ambient n=" + std::to_string(want.ambient_n()) + ")");
}

}  // namespace

MultiPoly compose_projection(const MultiPoly& expr, const ExtensionStep& step) {
    check_source(expr.chart().face(), step.source());
    Chart ambient_chart(step.ambient);
    return expr.substitute(ambient_chart, [&](int label) {
        MultiPoly img = MultiPoly::coordinate(ambient_chart, label);
        if (label == step.r) img += MultiPoly::coordinate(ambient_chart, step.s);
        return img;
    });
}

MultiPoly compose_projection(const MultiPoly& expr, const PathSpec& path) {
    check_source(expr.chart().face(), path.base());
    Chart chart(path.top_face());
    return expr.substitute(chart, [&](int label) {
        MultiPoly img = MultiPoly::coordinate(chart, label);
        if (label == path.anchor())
            for (int added : path.added()) img += MultiPoly::coordinate(chart, added);
        return img;
    });
}

RationalFn extend_step(const RationalFn& psi, const ExtensionStep& step) {
    check_source(psi.chart().face(), step.source());
    Chart ambient_chart(step.ambient);
    RationalFn pulled = psi.substitute(ambient_chart, [&](int label) {
        MultiPoly img = MultiPoly::coordinate(ambient_chart, label);
        if (label == step.r) img += MultiPoly::coordinate(ambient_chart, step.s);
        return img;
    });
    MultiPoly pr = MultiPoly::coordinate(ambient_chart, step.r);
    MultiPoly ps = MultiPoly::coordinate(ambient_chart, step.s);
    RationalFn interpolant(pr, {DenomFactor{pr + ps, 1}});
    return pulled * interpolant;
}

RationalFn extend_eigenfunction(const MultiPoly& psi, const Rational& kappa, const ExtensionStep& step) {
    if (!(apply_backward(psi) + psi.scaled(kappa)).is_zero())
        throw std::invalid_argument("input is not a backward eigenfunction for eigenvalue " +
                                    to_string(kappa) + " on " + psi.chart().face().to_string());
    return extend_step(RationalFn(psi), step);
}

Piece piece_of(const ProperSolution& u) {
    Piece piece;
    piece.reserve(u.modes.size());
    for (const auto& mode : u.modes) piece.push_back({mode.kappa, mode.coeff, RationalFn(mode.shape)});
    return piece;
}

Piece extend_solution_once(const Piece& piece, const ExtensionStep& step) {
    Piece out;
    out.reserve(piece.size());
    for (const auto& mode : piece) out.push_back({mode.kappa, mode.coeff, extend_step(mode.shape, step)});
    return out;
}

Piece extend_solution_once(const ProperSolution& u, const ExtensionStep& step) {
    return extend_solution_once(piece_of(u), step);
}

void PiecewiseSolution::add_mode(const Face& face, PieceMode mode) {
    if (mode.coeff == 0 || mode.shape.is_zero()) return;
    pieces_[face].push_back(std::move(mode));
}

void PiecewiseSolution::add_piece(const Face& face, const Piece& piece) {
    for (const auto& mode : piece) add_mode(face, mode);
}

void PiecewiseSolution::merge(const PiecewiseSolution& other) {
    for (const auto& [face, piece] : other.pieces_) add_piece(face, piece);
}

const Piece* PiecewiseSolution::find(const Face& face) const {
    auto it = pieces_.find(face);
    return it == pieces_.end() ? nullptr : &it->second;
}

RationalFn PiecewiseSolution::snapshot(const Face& face) const {
    RationalFn sum = RationalFn::zero(Chart(face));
    const Piece* piece = find(face);
    if (!piece) return sum;
    for (const auto& mode : *piece) sum = sum + mode.shape.scaled(mode.coeff);
    return sum;
}

double PiecewiseSolution::eval(const SimplexPoint& p, double t) const {
    const Piece* piece = find(p.face());
    if (!piece) return 0.0;
    double sum = 0.0;
    for (const auto& mode : *piece)
        sum += to_double(mode.coeff) * std::exp(to_double(mode.kappa) * t) * mode.shape.eval(p);
    return sum;
}

void PiecewiseSolution::combine_modes() {
    for (auto& [face, piece] : pieces_) {
        std::sort(piece.begin(), piece.end(),
                  [](const PieceMode& a, const PieceMode& b) { return a.kappa < b.kappa; });
        Piece combined;
        for (const auto& mode : piece) {
            if (!combined.empty() && combined.back().kappa == mode.kappa) {
                auto& last = combined.back();
                last.shape = last.shape.scaled(last.coeff) + mode.shape.scaled(mode.coeff);
                last.coeff = 1;
            } else {
                combined.push_back(mode);
            }
        }
        Piece cleaned;
        for (auto& mode : combined)
            if (!mode.shape.is_zero() && mode.coeff != 0) cleaned.push_back(std::move(mode));
        piece = std::move(cleaned);
    }
    std::erase_if(pieces_, [](const auto& kv) { return kv.second.empty(); });
}

RationalFn chain_shape(const MultiPoly& shape_on_base, const PathSpec& path, int stage) {
    if (stage < 0 || stage > static_cast<int>(path.added().size()))
        throw std::out_of_range("path stage out of range");
    if (!(shape_on_base.chart().face() == path.base()))
        throw std::invalid_argument("shape must live on the path base face");
    if (stage == 0) return RationalFn(shape_on_base);

    Face face_d = path.face_after(stage);
    Chart chart(face_d);
    // Path label sequence i_k..i_d: anchor followed by the added labels.
    std::vector<int> seq;
    seq.push_back(path.anchor());
    for (int j = 0; j < stage; ++j) seq.push_back(path.added()[static_cast<std::size_t>(j)]);

    MultiPoly pulled = shape_on_base.substitute(chart, [&](int label) {
        MultiPoly img = MultiPoly::coordinate(chart, label);
        if (label == path.anchor())
            for (int j = 1; j < static_cast<int>(seq.size()); ++j)
                img += MultiPoly::coordinate(chart, seq[static_cast<std::size_t>(j)]);
        return img;
    });

    MultiPoly numer = MultiPoly::constant(chart, 1);
    std::vector<DenomFactor> denom;
    for (int j = 0; j + 1 < static_cast<int>(seq.size()); ++j) {
        numer = numer * MultiPoly::coordinate(chart, seq[static_cast<std::size_t>(j)]);
        MultiPoly suffix(chart);
        for (int l = j; l < static_cast<int>(seq.size()); ++l)
            suffix += MultiPoly::coordinate(chart, seq[static_cast<std::size_t>(l)]);
        denom.push_back({std::move(suffix), 1});
    }
    return RationalFn(pulled, {}) * RationalFn(std::move(numer), std::move(denom));
}

PiecewiseSolution pathwise_extension(const ProperSolution& u, const PathSpec& path) {
    if (!(u.face == path.base()))
        throw std::invalid_argument("solution face " + u.face.to_string() + " does not match path base " +
                                    path.base().to_string());
    PiecewiseSolution out;
    for (int stage = 0; stage <= static_cast<int>(path.added().size()); ++stage) {
        Face face = path.face_after(stage);
        for (const auto& mode : u.modes)
            out.add_mode(face, {mode.kappa, mode.coeff, chain_shape(mode.shape, path, stage)});
    }
    out.combine_modes();
    return out;
}

namespace {

void for_each_ordering(std::vector<int>& labels, std::size_t fixed,
                       const std::function<void(const std::vector<int>&)>& visit) {
    if (fixed == labels.size()) {
        visit(labels);
        return;
    }
    for (std::size_t i = fixed; i < labels.size(); ++i) {
        std::swap(labels[fixed], labels[i]);
        for_each_ordering(labels, fixed + 1, visit);
        std::swap(labels[fixed], labels[i]);
    }
}

}  // namespace

PiecewiseSolution global_extension(const ProperSolution& u) {
    const Face& base = u.face;
    int n = base.ambient_n();
    PiecewiseSolution out;
    for (const auto& mode : u.modes) out.add_mode(base, {mode.kappa, mode.coeff, RationalFn(mode.shape)});

    Rational prefactor(1, static_cast<int>(base.indices().size()));
    for (const Face& face : all_faces(n, base.dim() + 1)) {
        if (!face.contains_face(base)) continue;
        std::vector<int> added;
        for (int label : face.indices())
            if (!base.contains(label)) added.push_back(label);

        for (const auto& mode : u.modes) {
            RationalFn sum = RationalFn::zero(Chart(face));
            for (int anchor : base.indices()) {
                for_each_ordering(added, 0, [&](const std::vector<int>& ordering) {
                    PathSpec path(base, anchor, ordering);
                    sum = sum + chain_shape(mode.shape, path, static_cast<int>(ordering.size()));
                });
            }
            out.add_mode(face, {mode.kappa, mode.coeff, sum.scaled(prefactor)});
        }
    }
    out.combine_modes();
    return out;
}

}  // namespace wf
