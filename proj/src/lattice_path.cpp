#include "permtree/lattice_path.hpp"

#include <map>
#include <stdexcept>

namespace permtree {

PathKind parse_path_kind(std::string_view name)
{
    static const std::map<std::string_view, PathKind> names{
        {"dyck", PathKind::Dyck},         {"motzkin", PathKind::Motzkin},   {"udu-free", PathKind::UduFree},
        {"uuu-free", PathKind::UuuFree}, {"ddd-free", PathKind::DddFree}, {"subdiagonal", PathKind::Subdiagonal},
    };
    auto it = names.find(name);
    if (it == names.end()) {
        throw std::invalid_argument("unknown path kind '" + std::string(name) + "'");
    }
    return it->second;
}

namespace {

bool balanced(std::string_view path, std::string_view alphabet)
{
    int height = 0;
    for (char c : path) {
        if (alphabet.find(c) == std::string_view::npos) {
            return false;
        }
        if (c == 'U') {
            ++height;
        } else if (c == 'D' && --height < 0) {
            return false;
        }
    }
    return height == 0;
}

void extend_words(std::string& word, int length, std::string_view alphabet, int height,
                  std::vector<std::string>& out)
{
    const int remaining = length - static_cast<int>(word.size());
    if (height > remaining) {
        return;
    }
    if (remaining == 0) {
        out.push_back(word);
        return;
    }
    for (char c : alphabet) {
        const int next = height + (c == 'U' ? 1 : (c == 'D' ? -1 : 0));
        if (next < 0) {
            continue;
        }
        word.push_back(c);
        extend_words(word, length, alphabet, next, out);
        word.pop_back();
    }
}

void extend_subdiagonal(std::string& word, int e, int north, int n, std::vector<std::string>& out)
{
    if (e == n && north == n / 2) {
        out.push_back(word);
        return;
    }
    if (e < n) {
        word.push_back('E');
        extend_subdiagonal(word, e + 1, north, n, out);
        word.pop_back();
    }
    if (north < n / 2 && 2 * (north + 1) <= e) {
        word.push_back('N');
        extend_subdiagonal(word, e, north + 1, n, out);
        word.pop_back();
    }
}

} // namespace

bool path_is(std::string_view path, PathKind kind)
{
    switch (kind) {
    case PathKind::Dyck: return balanced(path, "UD");
    case PathKind::Motzkin: return balanced(path, "UDH");
    case PathKind::UduFree: return path.find("UDU") == std::string_view::npos;
    case PathKind::UuuFree: return path.find("UUU") == std::string_view::npos;
    case PathKind::DddFree: return path.find("DDD") == std::string_view::npos;
    case PathKind::Subdiagonal: {
        int e = 0;
        int north = 0;
        for (char c : path) {
            if (c == 'E') {
                ++e;
            } else if (c == 'N') {
                ++north;
            } else {
                return false;
            }
            if (2 * north > e) {
                return false;
            }
        }
        return north == e / 2;
    }
    }
    return false;
}

bool is_udu_free_dyck(std::string_view path)
{
    return path_is(path, PathKind::Dyck) && path_is(path, PathKind::UduFree);
}

bool is_uuu_free_dyck(std::string_view path)
{
    return path_is(path, PathKind::Dyck) && path_is(path, PathKind::UuuFree);
}

std::vector<std::string> dyck_paths(int semilength)
{
    std::vector<std::string> out;
    std::string word;
    extend_words(word, 2 * semilength, "UD", 0, out);
    return out;
}

std::vector<std::string> motzkin_paths(int length)
{
    std::vector<std::string> out;
    std::string word;
    extend_words(word, length, "UDH", 0, out);
    return out;
}

std::vector<std::string> subdiagonal_paths(int n)
{
    std::vector<std::string> out;
    std::string word;
    extend_subdiagonal(word, 0, 0, n, out);
    return out;
}

std::vector<std::size_t> match_steps(std::string_view path)
{
    std::vector<std::size_t> partner(path.size(), std::string::npos);
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] == 'U') {
            open.push_back(i);
        } else if (path[i] == 'D' && !open.empty()) {
            partner[i] = open.back();
            partner[open.back()] = i;
            open.pop_back();
        } else if (path[i] == 'H') {
            partner[i] = i;
        }
    }
    return partner;
}

} // namespace permtree
