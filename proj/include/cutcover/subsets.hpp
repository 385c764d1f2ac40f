#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cutcover {

// A subset of the ground set {1,...,k}, element a stored as bit (a-1).
using SetMask = std::uint32_t;

inline int set_size(SetMask s) { return std::popcount(s); }

inline SetMask full_set(int k) { return k == 32 ? ~SetMask{0} : (SetMask{1} << k) - 1; }

inline bool set_contains(SetMask s, int a) { return (s >> (a - 1)) & 1u; }

inline bool is_subset(SetMask a, SetMask b) { return (a & ~b) == 0; }

std::vector<int> set_elements(SetMask s);
SetMask set_from_elements(const std::vector<int>& elems);

// All s-subsets of {1,...,k} in lexicographic order of their sorted
// element lists, e.g. {1,2} < {1,3} < {2,3}. With max_count, only the
// first max_count subsets are produced.
std::vector<SetMask> subsets_of_size(int k, int s);
std::vector<SetMask> subsets_of_size(int k, int s, std::size_t max_count);

// The floor(k/2)-layer of the subset lattice: the canonical largest antichain.
std::vector<SetMask> middle_layer(int k);
std::vector<SetMask> middle_layer(int k, std::size_t max_count);

std::string set_to_string(SetMask s);

}  // namespace cutcover
