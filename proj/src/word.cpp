#include "adjoint/word.hpp"

#include "adjoint/errors.hpp"

namespace adjoint {

Word Word::from_letters(std::string_view letters)
{
    if (letters.size() > kMaxDegree)
        throw UsageError("word longer than " + std::to_string(kMaxDegree) + " letters");
    std::uint64_t key = 1;
    for (char c : letters) {
        if (c != 'x' && c != 'y')
            throw UsageError(std::string("word letter must be x or y, got '") + c + "'");
        key = (key << 1U) | (c == 'y' ? 1U : 0U);
    }
    return Word(key);
}

std::string Word::letters() const
{
    std::string s;
    s.reserve(static_cast<std::size_t>(degree()));
    for (int i = 0; i < degree(); ++i)
        s.push_back(letter(i));
    return s;
}

} // namespace adjoint
