#include "cutcover/subsets.hpp"

#include <stdexcept>

namespace cutcover {

std::vector<int> set_elements(SetMask s) {
    std::vector<int> out;
    for (int a = 1; s != 0; ++a, s >>= 1)
        if (s & 1u) out.push_back(a);
    return out;
}

SetMask set_from_elements(const std::vector<int>& elems) {
    SetMask s = 0;
    for (int a : elems) {
        if (a < 1 || a > 32) throw std::invalid_argument("set element out of range: " + std::to_string(a));
        s |= SetMask{1} << (a - 1);
    }
    return s;
}

std::vector<SetMask> subsets_of_size(int k, int s, std::size_t max_count) {
    if (k < 0 || s < 0 || s > k || max_count == 0) return {};
    std::vector<SetMask> out;
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
        SetMask m = 0;
        for (int p : pick) m |= SetMask{1} << p;
        out.push_back(m);
        if (out.size() >= max_count) break;
        if (s == 0) break;
        // next combination in lexicographic order
        int i = s - 1;
        while (i >= 0 && pick[i] == k - s + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<SetMask> subsets_of_size(int k, int s) {
    return subsets_of_size(k, s, ~std::size_t{0});
}

std::vector<SetMask> middle_layer(int k) { return subsets_of_size(k, k / 2); }

std::vector<SetMask> middle_layer(int k, std::size_t max_count) {
    return subsets_of_size(k, k / 2, max_count);
}

std::string set_to_string(SetMask s) {
    std::string out = "{";
    bool first = true;
    for (int a : set_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(a);
        first = false;
    }
    return out + "}";
}

}  // namespace cutcover
