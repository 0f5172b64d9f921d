#include "heightlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace heightlab {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= size() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Perm: images are not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    return Perm(std::move(img));
}

Perm Perm::from_cycles(const std::string& text, int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size() || text == "e" || text == "id") return Perm(std::move(img));
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("Perm parse: expected '('");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                digits += text[pos++];
            if (digits.empty()) throw std::invalid_argument("Perm parse: expected point index");
            int v = std::stoi(digits);
            if (v < 0 || v >= n) throw std::invalid_argument("Perm parse: point out of range");
            cycle.push_back(v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        for (size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            img[static_cast<size_t>(from)] = to;
        }
    }
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("Perm compose: size mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < size(); ++i) img[static_cast<size_t>(i)] = img_[static_cast<size_t>(rhs(i))];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < size(); ++i) img[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
}

bool Perm::is_involution() const { return !is_identity() && compose(*this).is_identity(); }

int Perm::fixed_point_count() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        if (img_[static_cast<size_t>(i)] == i) ++count;
    return count;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> type;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, j = i;
        do {
            seen[static_cast<size_t>(j)] = true;
            j = img_[static_cast<size_t>(j)];
            ++len;
        } while (j != i);
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

std::string Perm::to_cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) {
            seen[static_cast<size_t>(i)] = true;
            continue;
        }
        out += "(";
        int j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j);
            seen[static_cast<size_t>(j)] = true;
            j = img_[static_cast<size_t>(j)];
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

}  // namespace heightlab
