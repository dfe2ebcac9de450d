#include "ancestor/osequence.hpp"

#include <algorithm>
#include <charconv>

#include "ancestor/field.hpp"

namespace anc {

namespace {

std::vector<int> parseInts(std::string_view body, std::string_view original) {
    std::vector<int> out;
    if (body.empty()) return out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        auto item = body.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw PreconditionError("malformed sequence: " + std::string(original));
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace

OSequence::OSequence(std::vector<int> prefix, int constant) : prefix_(std::move(prefix)), constant_(constant) {
    while (!prefix_.empty() && prefix_.back() == constant_) prefix_.pop_back();
    for (int v : prefix_)
        if (v < 0) throw PreconditionError("negative sequence value");
    if (constant_ < 0) throw PreconditionError("negative sequence value");
}

OSequence OSequence::polynomialRing() {
    OSequence h;
    h.unbounded_ = true;
    return h;
}

OSequence OSequence::parse(std::string_view text) {
    if (text == "R") return polynomialRing();
    auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw PreconditionError("malformed sequence: " + std::string(text));
    auto head = text.substr(0, open);
    auto tail = text.substr(open + 1, text.size() - open - 2);
    auto prefix = parseInts(head, text);
    auto c = parseInts(tail, text);
    if (c.size() != 1) throw PreconditionError("malformed sequence: " + std::string(text));
    return OSequence(std::move(prefix), c.front());
}

int OSequence::operator[](int i) const {
    if (i < 0) return 0;
    if (unbounded_) return i + 1;
    return static_cast<std::size_t>(i) < prefix_.size() ? prefix_[static_cast<std::size_t>(i)] : constant_;
}

int OSequence::order() const {
    if (unbounded_) throw PreconditionError("the polynomial ring has no order");
    for (int i = 0;; ++i)
        if ((*this)[i] < i + 1) return i;
}

std::string OSequence::toString() const {
    if (unbounded_) return "R";
    std::string out;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(prefix_[i]);
    }
    return out + "(" + std::to_string(constant_) + ")";
}

bool OSequence::operator<(const OSequence& o) const {
    if (unbounded_ != o.unbounded_) return o.unbounded_;
    const int n = std::max(stabilization(), o.stabilization()) + 1;
    for (int i = 0; i < n; ++i)
        if ((*this)[i] != o[i]) return (*this)[i] < o[i];
    return false;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw PreconditionError("partition parts must be positive");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>()))
        throw PreconditionError("partition parts must be weakly decreasing");
}

Partition Partition::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw PreconditionError("malformed partition: " + std::string(text));
    return Partition(parseInts(text.substr(1, text.size() - 2), text));
}

int Partition::weight() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::dual() const {
    std::vector<int> out;
    for (int k = 1; k <= largest(); ++k) {
        int n = 0;
        for (int p : parts_)
            if (p >= k) ++n;
        out.push_back(n);
    }
    return Partition(std::move(out));
}

std::string Partition::toString() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

}  // namespace anc
