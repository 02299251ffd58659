#include "qconv/states.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace qconv {
namespace states {

namespace {

QubitRegister from_terms(int n, const std::vector<std::pair<int, double>>& terms) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    for (auto [idx, amp] : terms) v(idx) = amp;
    return QubitRegister(n, std::move(v), QubitRegister::Norm::keep);
}

using Builder = std::function<QubitRegister()>;

const std::map<std::string, Builder, std::less<>>& builders() {
    static const std::map<std::string, Builder, std::less<>> table = [] {
        const double r2 = 1.0 / std::sqrt(2.0);
        const double r5 = 1.0 / std::sqrt(5.0);
        const double r6 = 1.0 / std::sqrt(6.0);
        std::map<std::string, Builder, std::less<>> t;
        t["Plus"] = [=] { return from_terms(1, {{0, r2}, {1, r2}}); };
        t["Minus"] = [=] { return from_terms(1, {{0, r2}, {1, -r2}}); };
        t["Phi"] = [=] { return from_terms(1, {{0, 2 * r5}, {1, -r5}}); };
        t["PlusPlus"] = [] { return tensor(make("Plus"), make("Plus")); };
        t["HPlus"] = [] { return tensor(QubitRegister::basis("H"), make("Plus")); };
        t["PsiPlus"] = [=] { return from_terms(2, {{0b01, r2}, {0b10, r2}}); };
        t["PhiPlus"] = [=] { return from_terms(2, {{0b00, r2}, {0b11, r2}}); };
        t["PhiMinus"] = [=] { return from_terms(2, {{0b00, r2}, {0b11, -r2}}); };
        t["C4"] = [] {
            return from_terms(4, {{0b0000, 0.5}, {0b0011, 0.5}, {0b1100, 0.5}, {0b1111, -0.5}});
        };
        t["GHZ4"] = [=] { return from_terms(4, {{0b0000, r2}, {0b1111, r2}}); };
        t["D4_2"] = [=] {
            return from_terms(4, {{0b0110, r6},
                                  {0b1001, r6},
                                  {0b0101, r6},
                                  {0b1010, r6},
                                  {0b0011, r6},
                                  {0b1100, r6}});
        };
        t["D4_2Prime"] = [=] {
            return from_terms(4, {{0b0000, r6},
                                  {0b1111, r6},
                                  {0b0011, -r6},
                                  {0b1100, -r6},
                                  {0b0101, r6},
                                  {0b1010, r6}});
        };
        t["PsiPlus_14_23"] = [] {
            return from_terms(4, {{0b0011, 0.5}, {0b0101, 0.5}, {0b1010, 0.5}, {0b1100, 0.5}});
        };
        return t;
    }();
    return table;
}

}  // namespace

QubitRegister make(std::string_view name) {
    auto it = builders().find(name);
    if (it == builders().end()) {
        throw std::invalid_argument("unknown state name: " + std::string(name));
    }
    return it->second();
}

bool is_known(std::string_view name) { return builders().count(name) > 0; }

const std::vector<std::string>& list_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : builders()) out.push_back(k);
        return out;
    }();
    return names;
}

FidelityReport verify_identity(std::string_view name, const QubitRegister& candidate) {
    const QubitRegister reference = make(name);
    if (reference.qubit_count() != candidate.qubit_count()) {
        throw std::invalid_argument("verify_identity: dimension mismatch");
    }
    const double f = fidelity(reference, candidate);
    return {std::string(name), f, f >= 1.0 - 1e-10};
}

DensityOperator mixed_plus_input() {
    const auto plus = DensityOperator::from_pure(make("Plus")).entries();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m.block(0, 0, 2, 2) = 0.5 * plus;
    m.block(2, 2, 2, 2) = 0.5 * plus;
    return DensityOperator(2, std::move(m));
}

DensityOperator discord_point_output() {
    const auto h_phi = DensityOperator::from_pure(tensor(QubitRegister::basis("H"), make("Phi")));
    const auto v_plus = DensityOperator::from_pure(tensor(QubitRegister::basis("V"), make("Plus")));
    return DensityOperator(2, (5.0 / 7.0) * h_phi.entries() + (2.0 / 7.0) * v_plus.entries());
}

}  // namespace states
}  // namespace qconv
