#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "boundary.hpp"
#include "errors.hpp"
#include "series.hpp"

namespace gft::io {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

inline double parse_real(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw ConfigError("cannot parse '" + std::string(s) + "' as a real number");
    return v;
}

// Accepts `re`, `imi`, `re+imi`, `re-imi` (also with j, and a bare `i` for 1i),
// e.g. 0.2, 0+0.2i, -1e-3-2.5i.
inline Complex parse_complex(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty())
        throw ConfigError("empty complex number");
    const char last = s.back();
    if (last != 'i' && last != 'j')
        return {parse_real(s), 0.0};

    const std::string_view body = s.substr(0, s.size() - 1);
    auto imag_part = [](std::string_view t) {
        if (t.empty() || t == "+")
            return 1.0;
        if (t == "-")
            return -1.0;
        return parse_real(t);
    };
    for (std::size_t pos = body.size(); pos-- > 1;) {
        const char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E')
            return {parse_real(body.substr(0, pos)), imag_part(body.substr(pos))};
    }
    return {0.0, imag_part(body)};
}

inline std::vector<Complex> parse_complex_list(std::string_view s)
{
    std::vector<Complex> out;
    for (auto item : split(s, ','))
        out.push_back(parse_complex(item));
    return out;
}

inline std::vector<double> parse_real_list(std::string_view s)
{
    std::vector<double> out;
    for (auto item : split(s, ','))
        out.push_back(parse_real(item));
    return out;
}

// One coefficient per line as `index,re,im`; indices strictly increasing,
// gaps are zero. Blank lines and lines starting with '#' are ignored.
inline PowerPoly parse_coefficient_text(std::string_view text)
{
    std::vector<Complex> coeffs;
    long long last_index = -1;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3)
            throw ConfigError("coefficient line " + std::to_string(line_no) + ": expected index,re,im");
        long long index = -1;
        const auto idx = fields[0];
        const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
        if (ec != std::errc{} || ptr != idx.data() + idx.size() || index < 0)
            throw ConfigError("coefficient line " + std::to_string(line_no) + ": bad index");
        if (index <= last_index)
            throw ConfigError("coefficient line " + std::to_string(line_no) + ": indices must increase");
        if (index > 100000)
            throw ConfigError("coefficient line " + std::to_string(line_no) + ": index too large");
        coeffs.resize(static_cast<std::size_t>(index) + 1);
        coeffs[static_cast<std::size_t>(index)] = {parse_real(fields[1]), parse_real(fields[2])};
        last_index = index;
    }
    if (coeffs.empty())
        throw ConfigError("coefficient file holds no coefficients");
    return PowerPoly(std::move(coeffs));
}

inline PowerPoly read_coefficient_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open coefficient file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_coefficient_text(buf.str());
}

/// Shortest decimal form that reads back to the same double.
inline std::string format_real(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

inline std::string format_coefficient_text(const PowerPoly& p)
{
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == Complex{0.0} && j + 1 != c.size())
            continue;
        out += std::to_string(j) + "," + format_real(c[j].real()) + "," + format_real(c[j].imag()) + "\n";
    }
    return out;
}

/// Boundary points given in turns, mapped onto the circle.
inline std::vector<Complex> points_from_turns(const std::vector<double>& turns)
{
    std::vector<Complex> out;
    for (double t : turns)
        out.push_back(unit_point_from_turns(t));
    return out;
}

/// Explicit points within 1e-9 of the circle are projected onto it, others rejected.
inline std::vector<Complex> normalize_boundary_points(const std::vector<Complex>& pts)
{
    std::vector<Complex> out;
    for (auto z : pts) {
        const double m = std::abs(z);
        if (std::abs(m - 1.0) > 1e-9)
            throw ConfigError("point with |z| = " + format_real(m) + " is not on the unit circle");
        out.push_back(m == 1.0 ? z : z / m);
    }
    return out;
}

} // namespace gft::io
