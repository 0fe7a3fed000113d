#include "dynprop/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "dynprop/errors.hpp"

namespace dynprop {

Perm::Perm(int degree) {
    if (degree < 1) throw ContractError("Perm: degree must be >= 1");
    img_.resize(degree);
    std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
    std::vector<bool> hit(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || hit[v])
            throw ContractError("Perm: image table is not a permutation");
        hit[v] = true;
    }
    Perm p(static_cast<int>(images.size()));
    p.img_ = std::move(images);
    return p;
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
    Perm p(degree);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(') throw ContractError("Perm: expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ContractError("Perm: expected a point in cycle notation: " + text);
            int v = std::stoi(text.substr(start, i - start));
            if (v < 1 || v > degree)
                throw ContractError("Perm: point " + std::to_string(v) + " outside 1.." +
                                    std::to_string(degree));
            cyc.push_back(v - 1);
            skip_ws();
        }
        if (i >= text.size()) throw ContractError("Perm: unterminated cycle in: " + text);
        ++i;  // ')'
        for (size_t j = 0; j < cyc.size(); ++j) {
            int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (j + 1 < cyc.size() || cyc.size() > 1) {
                if (p.img_[from] != from)
                    throw ContractError("Perm: point repeated across cycles in: " + text);
                p.img_[from] = to;
            }
        }
        any = true;
        skip_ws();
    }
    if (!any && !text.empty() && text.find_first_not_of(" \t") != std::string::npos)
        throw ContractError("Perm: malformed cycle notation: " + text);
    return p;
}

Perm Perm::compose(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw ContractError("Perm: degree mismatch");
    Perm out(degree());
    for (int i = 0; i < degree(); ++i) out.img_[i] = img_[rhs.img_[i]];
    return out;
}

Perm Perm::inverse() const {
    Perm out(degree());
    for (int i = 0; i < degree(); ++i) out.img_[img_[i]] = i;
    return out;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.compose(*this).compose(g.inverse()); }

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j);
            j = img_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

long Perm::order() const {
    long ord = 1;
    for (const auto& cyc : cycles()) ord = std::lcm(ord, static_cast<long>(cyc.size()));
    return ord;
}

std::string Perm::to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cs) {
        os << '(';
        for (size_t j = 0; j < cyc.size(); ++j) {
            if (j) os << ' ';
            os << cyc[j] + 1;
        }
        os << ')';
    }
    return os.str();
}

}  // namespace dynprop
