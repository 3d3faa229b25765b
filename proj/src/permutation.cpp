#include "permident/permutation.hpp"

#include <cctype>
#include <sstream>

namespace permident {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    if (n == 0) throw DomainError("permutation of empty set");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw DomainError("image list is not a bijection of {1.." +
                              std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw DomainError("permutation of empty set");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const {
    for (int j = 1; j <= size(); ++j)
        if ((*this)(j) != j) return false;
    return true;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (int j = 1; j <= size(); ++j)
        if ((*this)(j) == j) out.push_back(j);
    return out;
}

std::vector<int> Permutation::moved_points() const {
    std::vector<int> out;
    for (int j = 1; j <= size(); ++j)
        if ((*this)(j) != j) out.push_back(j);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int j = 1; j <= size(); ++j)
        img[static_cast<std::size_t>((*this)(j)) - 1] = j;
    return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw DomainError("composing permutations of different sizes");
    std::vector<int> img(img_.size());
    for (int j = 1; j <= size(); ++j)
        img[static_cast<std::size_t>(j) - 1] = (*this)(other(j));
    return Permutation(std::move(img), Unchecked{});
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int j = 1; j <= size(); ++j) {
        if (j > 1) os << ",";
        os << (*this)(j);
    }
    os << "]";
    return os.str();
}

Permutation Permutation::parse(std::string_view text, int n) {
    auto fail = [&]() -> Permutation {
        throw ParseError("invalid permutation \"" + std::string(text) + "\"");
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        return std::stoi(std::string(text.substr(start, i - start)));
    };

    skip_ws();
    if (i < text.size() && text[i] == '[') {
        ++i;
        std::vector<int> img;
        skip_ws();
        if (i < text.size() && text[i] == ']') fail();
        for (;;) {
            img.push_back(read_int());
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            fail();
        }
        skip_ws();
        if (i != text.size()) fail();
        return Permutation(std::move(img));
    }

    // Cycle notation; the ambient size must be supplied.
    if (n < 1) throw ParseError("cycle notation needs an explicit size");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = j + 1;
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') fail();
        ++i;
        std::vector<int> cycle;
        for (;;) {
            cycle.push_back(read_int());
            skip_ws();
            if (i < text.size() && text[i] == ')') { ++i; break; }
        }
        if (cycle.size() < 2) fail();
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            int from = cycle[t];
            int to = cycle[(t + 1) % cycle.size()];
            if (from < 1 || from > n) fail();
            img[static_cast<std::size_t>(from) - 1] = to;
        }
        any = true;
        skip_ws();
    }
    if (!any) fail();
    return Permutation(std::move(img));
}

CycleDecomposition CycleDecomposition::of(const Permutation& tau) {
    const int n = tau.size();
    CycleDecomposition out;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        if (tau(j) == j) {
            seen[static_cast<std::size_t>(j)] = 1;
            out.fixed.push_back(j);
            continue;
        }
        std::vector<int> cycle;
        int cur = j;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            cycle.push_back(cur);
            cur = tau(cur);
        } while (cur != j);
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

Permutation CycleDecomposition::recompose(int n) const {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = j + 1;
    for (const auto& cycle : cycles) {
        for (std::size_t t = 0; t < cycle.size(); ++t)
            img[static_cast<std::size_t>(cycle[t]) - 1] = cycle[(t + 1) % cycle.size()];
    }
    return Permutation(std::move(img));
}

bool CycleDecomposition::all_cycles_even() const {
    for (const auto& cycle : cycles)
        if (cycle.size() % 2 != 0) return false;
    return true;
}

bool PairPartition::covers(int n) const {
    if (n < 0 || n % 2 != 0 || pairs.size() != static_cast<std::size_t>(n) / 2)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n || a == b) return false;
        if (seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
            return false;
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
    }
    return true;
}

} // namespace permident
