#ifndef DYNPROP_PERM_HPP
#define DYNPROP_PERM_HPP

#include <compare>
#include <string>
#include <vector>

namespace dynprop {

// Permutation of {0..degree-1} stored as an image table. Text I/O uses
// 1-based cycle notation, e.g. "(1 2 3)(4 5)".
class Perm {
public:
    explicit Perm(int degree);  // identity
    static Perm from_images(std::vector<int> images);
    static Perm parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Perm compose(const Perm& rhs) const;  // (this o rhs)(i) = this(rhs(i))
    Perm inverse() const;
    Perm conjugated_by(const Perm& g) const;  // g o this o g^-1

    bool is_identity() const;
    long order() const;  // lcm of cycle lengths
    std::vector<std::vector<int>> cycles() const;  // nontrivial, 0-based
    std::string to_cycle_string() const;           // 1-based; "()" for identity

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

}  // namespace dynprop

#endif
