#ifndef MMPH_CHARS_HPP
#define MMPH_CHARS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace mmph {

// Vertex labels are written with a fixed 90-character base alphabet: the
// digits 1-9, the uppercase and lowercase letters, and 29 punctuation marks.
// Once the alphabet is exhausted a label is prefixed by '+' (the escape
// character, never a base character), then '++', and so on, so the label
// space is unbounded: index = 90 * prefixes + position.
inline constexpr char kBaseChars[91] =
    "123456789"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "abcdefghijklmnopqrstuvwxyz"
    "!\"#$%&'()*-/:;<=>?@[\\]^_`{|}~";

inline constexpr int kBaseCount = 90;

// Position of c in the base alphabet, or -1 when c is not a base character.
int base_char_pos(char c);

bool is_base_char(char c);

// index -> text form ('+' * (index/90) followed by base char)
std::string label_text(std::uint64_t index);

// text form -> index; nullopt when malformed
std::optional<std::uint64_t> label_index(const std::string& text);

} // namespace mmph

#endif
