#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace anc {

/// Eventually constant integer sequence H_0, H_1, ...; text form "1,2,3,2(1)".
/// The polynomial ring's sequence H_i = i + 1 is a separate unbounded value "R".
class OSequence {
public:
    OSequence() = default;
    OSequence(std::vector<int> prefix, int constant);
    static OSequence polynomialRing();
    static OSequence parse(std::string_view text);

    int operator[](int i) const;
    bool isPolynomialRing() const { return unbounded_; }
    int constant() const { return constant_; }
    /// Values before the constant tail starts.
    const std::vector<int>& prefix() const { return prefix_; }
    /// min { i : H_i < i + 1 }.
    int order() const;
    /// min { i : H_i = constant }.
    int stabilization() const { return static_cast<int>(prefix_.size()); }
    std::string toString() const;

    bool operator==(const OSequence&) const = default;
    /// Lexicographic on the values, a total order used only for sorting.
    bool operator<(const OSequence& o) const;

private:
    std::vector<int> prefix_;
    int constant_ = 0;
    bool unbounded_ = false;
};

/// Weakly decreasing positive parts; text form "[3,3,2,1]".
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }
    Partition dual() const;
    std::string toString() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

}  // namespace anc
