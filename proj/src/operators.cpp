#include "wf/operators.hpp"

#include <stdexcept>

namespace wf {

MultiPoly apply_backward(const MultiPoly& u) {
    const Chart& chart = u.chart();
    MultiPoly out(chart);
    for (int i : chart.free_labels()) {
        MultiPoly ui = u.partial(i);
        for (int j : chart.free_labels()) {
            MultiPoly uij = ui.partial(j);
            if (uij.is_zero()) continue;
            MultiPoly coeff = MultiPoly::coordinate(chart, i) *
                              (i == j ? MultiPoly::constant(chart, 1) - MultiPoly::coordinate(chart, j)
                                      : -MultiPoly::coordinate(chart, j));
            out += coeff * uij;
        }
    }
    return out.scaled(Rational(1, 2));
}

RationalFn apply_backward(const RationalFn& u) {
    const Chart& chart = u.chart();
    if (u.is_polynomial()) return RationalFn(apply_backward(u.as_polynomial()));
    RationalFn out = RationalFn::zero(chart);
    for (int i : chart.free_labels()) {
        RationalFn ui = u.partial(i);
        for (int j : chart.free_labels()) {
            RationalFn uij = ui.partial(j);
            if (uij.is_zero()) continue;
            MultiPoly coeff = MultiPoly::coordinate(chart, i) *
                              (i == j ? MultiPoly::constant(chart, 1) - MultiPoly::coordinate(chart, j)
                                      : -MultiPoly::coordinate(chart, j));
            out = out + uij * coeff;
        }
    }
    return out.scaled(Rational(1, 2));
}

MultiPoly apply_forward(const MultiPoly& u) {
    const Chart& chart = u.chart();
    MultiPoly out(chart);
    for (int i : chart.free_labels()) {
        for (int j : chart.free_labels()) {
            MultiPoly coeff = MultiPoly::coordinate(chart, i) *
                              (i == j ? MultiPoly::constant(chart, 1) - MultiPoly::coordinate(chart, j)
                                      : -MultiPoly::coordinate(chart, j));
            out += (coeff * u).partial(i).partial(j);
        }
    }
    return out.scaled(Rational(1, 2));
}

MultiPoly omega(const Face& face) {
    if (face.dim() < 1)
        throw std::invalid_argument("omega is undefined on the vertex face " + face.to_string());
    Chart chart(face);
    MultiPoly w = MultiPoly::constant(chart, 1);
    for (int label : face.indices()) w = w * MultiPoly::coordinate(chart, label);
    return w;
}

MultiPoly restriction_defect(const MultiPoly& u, const Face& subface) {
    const Face& face = u.chart().face();
    if (!face.contains_face(subface) || subface == face)
        throw std::invalid_argument("need a proper subface of " + face.to_string());
    MultiPoly lhs = apply_backward(restrict_to_subface(u, subface));
    MultiPoly rhs = restrict_to_subface(apply_backward(u), subface);
    return lhs - rhs;
}

Rational adjointness_defect(const MultiPoly& u, const MultiPoly& phi) {
    if (!(u.chart() == phi.chart())) throw std::invalid_argument("chart mismatch in adjointness defect");
    return inner_product(apply_forward(u), phi) - inner_product(u, apply_backward(phi));
}

}  // namespace wf
