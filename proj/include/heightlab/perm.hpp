#pragma once

#include <string>
#include <vector>

namespace heightlab {

// Permutation of {0..n-1} stored as its image array.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    // Cycle notation on 0-based points: "(0 1 2 3 4)", "(0 1)(2 3)", "()".
    // n is the number of points; cycles may omit fixed points.
    static Perm from_cycles(const std::string& text, int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Perm compose(const Perm& rhs) const;  // (*this)(rhs(i))
    Perm inverse() const;
    bool is_identity() const;
    bool is_involution() const;
    int fixed_point_count() const;
    std::vector<int> cycle_type() const;  // sorted ascending, fixed points included

    std::string to_cycle_string() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

}  // namespace heightlab
