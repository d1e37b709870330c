#include "degtab/rational.hpp"

#include <stdexcept>

namespace degtab {

Rational parse_rational(const std::string& text)
{
    auto fail = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
    if (text.empty()) throw fail();
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            std::size_t used = 0;
            const auto num = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw fail();
            const auto rest = text.substr(slash + 1);
            const auto den = std::stoll(rest, &used);
            if (used != rest.size() || den == 0) throw fail();
            return Rational(num, den);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            const bool negative = text[0] == '-';
            const auto whole_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
            const auto frac_part = text.substr(dot + 1);
            if (frac_part.size() > 15) throw fail();
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
            const std::int64_t whole = whole_part.empty() ? 0 : std::stoll(whole_part);
            const std::int64_t frac = frac_part.empty() ? 0 : std::stoll(frac_part);
            Rational q = Rational(whole) + Rational(frac, scale);
            return negative ? -q : q;
        }
        std::size_t used = 0;
        const auto v = std::stoll(text, &used);
        if (used != text.size()) throw fail();
        return Rational(v);
    } catch (const std::logic_error&) {
        throw fail();
    }
}

}  // namespace degtab
