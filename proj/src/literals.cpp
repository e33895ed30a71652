#include "xbinom/literals.hpp"

#include "xbinom/errors.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>

namespace xbinom {

namespace {

double parse_real(std::string_view text, std::string_view whole)
{
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty() || text.front() == '+') {
        throw ParseError(fmt::format("malformed number '{}'", whole));
    }
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v, std::chars_format::general);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw ParseError(fmt::format("malformed number '{}'", whole));
    }
    return v;
}

}  // namespace

Complex parse_complex(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty numeric literal");
    }
    if (text.back() != 'i') {
        return {parse_real(text, whole), 0.0};
    }
    text.remove_suffix(1);

    // Split at the last sign that does not belong to an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
    std::string_view im_text = split == std::string_view::npos ? text : text.substr(split);

    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_text, whole);
    }
    const double re = re_text.empty() ? 0.0 : parse_real(re_text, whole);
    return {re, im};
}

std::int64_t parse_integer(std::string_view text)
{
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(fmt::format("malformed integer '{}'", text));
    }
    return v;
}

std::string format_real(double v)
{
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    return fmt::format("{:.15g}", v);
}

std::string format_complex(Complex v)
{
    const double re = v.real();
    const double im = v.imag();
    if (im == 0.0) {
        return format_real(re);
    }
    if (re == 0.0) {
        return format_real(im) + "i";
    }
    return fmt::format("{}{}{}i", format_real(re), im < 0 ? "-" : "+", format_real(std::abs(im)));
}

std::string format_value(const ExtendedValue& v)
{
    switch (v.tag()) {
    case ExtendedValue::Tag::Infinite: return std::string(kInfToken);
    case ExtendedValue::Tag::Indeterminate: return std::string(kIndeterminateToken);
    case ExtendedValue::Tag::Finite: break;
    }
    return format_complex(v.value());
}

}  // namespace xbinom
