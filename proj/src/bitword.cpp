#include "ghw/bitword.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

namespace ghw {

int size_cap() {
    const char* env = std::getenv("GHW_UNSUPPORTED_SIZE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultSizeCap;
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) return kDefaultSizeCap;
    return std::min(value, kMaxWordLength);
}

void require_within_cap(int n, std::string_view what) {
    const int cap = size_cap();
    if (n > cap) {
        throw Error(ErrorKind::CapExceeded, std::string(what) + ": 2^" + std::to_string(n) +
                                                " enumeration exceeds the size cap 2^" + std::to_string(cap) +
                                                " (set GHW_UNSUPPORTED_SIZE_CAP to raise it, at most " +
                                                std::to_string(kMaxWordLength) + ")");
    }
}

BitWord BitWord::from_indices(int n, const std::vector<int>& indices) {
    bits_type bits = 0;
    for (int i : indices) bits |= bits_type{1} << i;
    return {n, bits};
}

BitWord BitWord::parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordLength)) {
        throw Error(ErrorKind::Parse, "bitstring must have between 1 and " + std::to_string(kMaxWordLength) +
                                          " characters: '" + std::string(text) + "'");
    }
    bits_type bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= bits_type{1} << i;
        } else if (text[i] != '0') {
            throw Error(ErrorKind::Parse, "bitstring contains a character other than 0/1: '" + std::string(text) + "'");
        }
    }
    return {static_cast<int>(text.size()), bits};
}

std::vector<int> BitWord::support() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(weight()));
    for (bits_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string BitWord::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) {
        if (test(i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

void canonicalize(std::vector<BitWord>& words) {
    std::sort(words.begin(), words.end(), LexLess{});
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace ghw
