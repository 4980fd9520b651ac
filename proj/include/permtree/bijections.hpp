#pragma once

#include "permtree/permutation.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace permtree {

/// Input outside the domain of a bijection.
class BijectionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 2-1-3-avoiding permutation of length n to a Dyck path of semilength n,
/// read off the right-to-left maxima (i_j, v_j) as
/// U^{i_1} D^{v_1 - v_2} U^{i_2 - i_1} ... D^{v_m}, positions 1-based.
std::string phi(const Permutation& perm);
Permutation phi_inverse(std::string_view dyck);

/// UDU-free Dyck path of semilength n+1 to a Motzkin path of length n.
std::string callan(std::string_view dyck);
std::string callan_inverse(std::string_view motzkin);

/// UDU-free Dyck path of semilength n+1 to a UUU-free Dyck path of semilength n.
std::string udu_to_uuu(std::string_view dyck);
std::string uuu_to_udu(std::string_view dyck);

/// Member of the class {2-1-3, [2o]-31} of length n to a subdiagonal path
/// ending at (n, floor(n/2)): E^{i_1} N^{a_1} E^{i_2 - i_1} N^{a_2} ... with
/// a_j = (v_j - v_{j+1}) / 2 and a_m = floor(v_m / 2).
std::string subdiag(const Permutation& perm);
Permutation subdiag_inverse(std::string_view path);

} // namespace permtree
