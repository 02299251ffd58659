#include "qconv/fock.hpp"

#include <cmath>

namespace qconv {
namespace fock {

Monomial Monomial::of(ModeLabel x, ModeLabel y) {
    if (y < x) std::swap(x, y);
    return Monomial{x, y};
}

FockPolynomial FockPolynomial::monomial(ModeLabel x, ModeLabel y, Complex coeff) {
    FockPolynomial p;
    p.add(Monomial::of(x, y), coeff);
    return p;
}

void FockPolynomial::add(Monomial m, Complex coeff) {
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
    }
}

Complex FockPolynomial::coeff(ModeLabel x, ModeLabel y) const {
    auto it = terms_.find(Monomial::of(x, y));
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double FockPolynomial::probability_weight() const {
    double w = 0.0;
    for (const auto& [m, c] : terms_) {
        w += std::norm(c) * (m.doubly_occupied() ? 2.0 : 1.0);
    }
    return w;
}

namespace {

ModeLabel pbs_route(ModeLabel in, PbsStage which) {
    if (which == PbsStage::first) {
        // H1->H4, H2->H3, V1->V3, V2->V4
        switch (in.mode) {
            case 1: return {in.pol == Pol::H ? 4 : 3, in.pol};
            case 2: return {in.pol == Pol::H ? 3 : 4, in.pol};
            default:
                throw std::invalid_argument("first PBS expects modes 1,2");
        }
    }
    // H3->H6, H4->H5, V3->V5, V4->V6
    switch (in.mode) {
        case 3: return {in.pol == Pol::H ? 6 : 5, in.pol};
        case 4: return {in.pol == Pol::H ? 5 : 6, in.pol};
        default:
            throw std::invalid_argument("second PBS expects modes 3,4");
    }
}

}  // namespace

FockPolynomial apply_pbs(const FockPolynomial& poly, PbsStage which) {
    FockPolynomial out;
    for (const auto& [m, c] : poly.terms()) {
        out.add(Monomial::of(pbs_route(m.a, which), pbs_route(m.b, which)), c);
    }
    return out;
}

FockPolynomial apply_waveplate(const FockPolynomial& poly, int mode, double theta) {
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    // a†H -> c a†H + s a†V ; a†V -> s a†H - c a†V
    auto images = [&](ModeLabel lab) {
        std::vector<std::pair<Complex, ModeLabel>> img;
        if (lab.mode != mode) {
            img.emplace_back(1.0, lab);
        } else if (lab.pol == Pol::H) {
            img.emplace_back(c, ModeLabel{mode, Pol::H});
            img.emplace_back(s, ModeLabel{mode, Pol::V});
        } else {
            img.emplace_back(s, ModeLabel{mode, Pol::H});
            img.emplace_back(-c, ModeLabel{mode, Pol::V});
        }
        return img;
    };
    FockPolynomial out;
    for (const auto& [m, coeff] : poly.terms()) {
        for (const auto& [ca, la] : images(m.a)) {
            for (const auto& [cb, lb] : images(m.b)) {
                out.add(Monomial::of(la, lb), coeff * ca * cb);
            }
        }
    }
    return out;
}

FockPolynomial apply_hwp(const FockPolynomial& poly, int mode, double theta) {
    if (mode != 3 && mode != 4) {
        throw std::invalid_argument("gate HWPs sit in modes 3 and 4");
    }
    return apply_waveplate(poly, mode, theta);
}

Coincidence postselect_one_per_output(const FockPolynomial& poly) {
    Coincidence result;
    result.amplitudes.setZero();
    result.discarded_weight = 0.0;
    for (const auto& [m, c] : poly.terms()) {
        const bool coincidence = (m.a.mode == 5 && m.b.mode == 6);
        if (coincidence) {
            const int row = 2 * static_cast<int>(m.a.pol) + static_cast<int>(m.b.pol);
            result.amplitudes(row) += c;
        } else {
            result.discarded_weight += std::norm(c) * (m.doubly_occupied() ? 2.0 : 1.0);
        }
    }
    return result;
}

Eigen::Matrix4cd extract_kraus(double theta1, double theta2) {
    constexpr double kQuarter = M_PI / 4.0;
    Eigen::Matrix4cd kraus;
    for (int col = 0; col < 4; ++col) {
        const Pol p1 = (col & 2) ? Pol::V : Pol::H;
        const Pol p2 = (col & 1) ? Pol::V : Pol::H;
        FockPolynomial poly = FockPolynomial::monomial({1, p1}, {2, p2});
        poly = apply_waveplate(poly, 2, kQuarter);  // fixed flip before PBS1
        poly = apply_pbs(poly, PbsStage::first);
        poly = apply_hwp(poly, 3, theta2);  // arm 3: HWP(θ2) then HWP(0) = R(−2θ2)
        poly = apply_hwp(poly, 3, 0.0);
        poly = apply_hwp(poly, 4, 0.0);     // arm 4: HWP(0) then HWP(θ1) = R(+2θ1)
        poly = apply_hwp(poly, 4, theta1);
        poly = apply_pbs(poly, PbsStage::second);
        poly = apply_waveplate(poly, 6, kQuarter);  // fixed flip after PBS2
        kraus.col(col) = postselect_one_per_output(poly).amplitudes;
    }
    return kraus;
}

}  // namespace fock
}  // namespace qconv
