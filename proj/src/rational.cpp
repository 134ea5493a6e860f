#include "posspan/rational.hpp"

namespace posspan {

Rat parseRat(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty rational token");
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(tok));
        }
        Int num(tok.substr(0, slash));
        Int den(tok.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational token: " + tok);
    }
}

std::string formatRat(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace posspan
