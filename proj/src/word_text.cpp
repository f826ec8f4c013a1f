#include "taulab/word_text.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace taulab {

namespace {

constexpr long long max_expansion = 1000000;

long long parse_amount(const std::string& digits, const std::string& token) {
    if (digits.empty()) throw WordParseError("missing integer in token '" + token + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(digits, &pos);
    } catch (const std::exception&) {
        throw WordParseError("bad integer in token '" + token + "'");
    }
    if (pos != digits.size()) throw WordParseError("bad integer in token '" + token + "'");
    if (v == 0) throw WordParseError("zero amount in token '" + token + "'");
    if (v > max_expansion || v < -max_expansion)
        throw WordParseError("amount too large in token '" + token + "'");
    return v;
}

void append_power(FunctorWord& w, Letter base, long long count) {
    const Letter g = count > 0 ? base : inverse_letter(base);
    for (long long i = 0, n = count > 0 ? count : -count; i < n; ++i) w.letters.push_back(g);
}

}  // namespace

FunctorWord parse_word(const std::string& text) {
    FunctorWord w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.front() == '[') {
            if (token.back() != ']') throw WordParseError("unterminated shift token '" + token + "'");
            append_power(w, Letter::shift_up, parse_amount(token.substr(1, token.size() - 2), token));
            continue;
        }
        Letter base;
        if (token.front() == 'S')
            base = Letter::mukai;
        else if (token.front() == 'T')
            base = Letter::twist;
        else
            throw WordParseError("unknown token '" + token + "'");
        if (token.size() == 1) {
            w.letters.push_back(base);
        } else if (token[1] == '^') {
            append_power(w, base, parse_amount(token.substr(2), token));
        } else {
            throw WordParseError("unknown token '" + token + "'");
        }
    }
    return w;
}

std::string format_word(const FunctorWord& w) {
    std::ostringstream out;
    bool first = true;
    for (Letter g : w.letters) {
        if (!first) out << ' ';
        first = false;
        switch (g) {
            case Letter::mukai: out << "S"; break;
            case Letter::mukai_inv: out << "S^-1"; break;
            case Letter::twist: out << "T"; break;
            case Letter::twist_inv: out << "T^-1"; break;
            case Letter::shift_up: out << "[1]"; break;
            case Letter::shift_down: out << "[-1]"; break;
        }
    }
    return out.str();
}

}  // namespace taulab
