#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace permtree {

/// Paths are plain strings over {U, D, H} or {E, N}.
enum class PathKind { Dyck, Motzkin, UduFree, UuuFree, DddFree, Subdiagonal };

/// "dyck", "motzkin", "udu-free", "uuu-free", "ddd-free", "subdiagonal".
PathKind parse_path_kind(std::string_view name);

/// Dyck: U/D only, balanced, no prefix dips below zero.
/// Motzkin: the same over U/D/H.
/// UduFree, UuuFree, DddFree: no occurrence of the factor (nothing else is checked).
/// Subdiagonal: E/N only, ends at (n, floor(n/2)) with n the number of E steps,
/// and every prefix satisfies 2 * #N <= #E.
bool path_is(std::string_view path, PathKind kind);

/// Dyck path of semilength n with no UDU factor.
bool is_udu_free_dyck(std::string_view path);
/// Dyck path with no UUU factor.
bool is_uuu_free_dyck(std::string_view path);

/// Exhaustive lists, ordered with U before D before H and E before N.
std::vector<std::string> dyck_paths(int semilength);
std::vector<std::string> motzkin_paths(int length);
std::vector<std::string> subdiagonal_paths(int n);

/// Index of the partner of every U and D in a balanced U/D/H word; H maps to itself.
/// Unmatched steps map to npos.
std::vector<std::size_t> match_steps(std::string_view path);

} // namespace permtree
