#include <dicirc/cayley.hpp>
#include <dicirc/error.hpp>

#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace dicirc {

auto to_string(SpecViolation v) -> std::string_view
{
    switch (v) {
    case SpecViolation::ZeroInR: return "ZeroInR";
    case SpecViolation::RNotSymmetric: return "RNotSymmetric";
    case SpecViolation::TNotHalfPeriodic: return "TNotHalfPeriodic";
    case SpecViolation::NotGenerating: return "NotGenerating";
    }
    return "Unknown";
}

auto SpecValidation::valid() const -> bool
{
    for (auto v : violations)
        if (v != SpecViolation::NotGenerating)
            return false;
    return true;
}

auto connection_set(const ConnectionSpec & spec) -> std::vector<Element>
{
    std::vector<Element> s;
    spec.R.for_each([&](int i) { s.push_back({ i, false }); });
    spec.T.for_each([&](int i) { s.push_back({ i, true }); });
    return s;
}

auto validate_spec(const ConnectionSpec & spec) -> SpecValidation
{
    if (spec.n < 1 || spec.R.modulus() != 2 * spec.n || spec.T.modulus() != 2 * spec.n)
        throw Error(ErrorCode::InvalidSpec, "R and T must be subsets of Z_2n with n >= 1");

    SpecValidation result;
    if (spec.R.contains(0))
        result.violations.push_back(SpecViolation::ZeroInR);
    if (spec.R.negated() != spec.R)
        result.violations.push_back(SpecViolation::RNotSymmetric);
    if (spec.T.translated(spec.n) != spec.T)
        result.violations.push_back(SpecViolation::TNotHalfPeriodic);

    auto s = connection_set(spec);
    result.generating = generate_subgroup(s, spec.n).order == 4 * spec.n;
    if (! result.generating)
        result.violations.push_back(SpecViolation::NotGenerating);
    return result;
}

auto require_valid(const ConnectionSpec & spec) -> const ConnectionSpec &
{
    auto v = validate_spec(spec);
    if (! v.valid()) {
        std::string what;
        for (auto x : v.violations)
            if (x != SpecViolation::NotGenerating)
                what += (what.empty() ? "" : ", ") + std::string(to_string(x));
        throw Error(ErrorCode::InvalidSpec, what);
    }
    return spec;
}

auto build_graph(const ConnectionSpec & spec) -> Graph
{
    const int n = spec.n, m = 2 * n;
    auto g = Graph::dicyclic(n);
    for (int i = 0; i < m; ++i) {
        spec.R.for_each([&](int r) {
            g.add_edge(i, mod(i + r, m));
            g.add_edge(m + i, m + mod(i + r, m));
        });
        spec.T.for_each([&](int t) {
            g.add_edge(i, m + mod(i + t, m));
            g.add_edge(m + i, mod(i - t, m));
        });
    }
    return g;
}

auto cayley_graph(int n, const std::vector<Element> & connection) -> Graph
{
    std::set<Element> s(connection.begin(), connection.end());
    auto g = Graph::dicyclic(n);
    for (int a = 0; a < 4 * n; ++a) {
        auto ga_inv = inverse(element_at(a, n), n);
        for (int b = 0; b < 4 * n; ++b)
            if (a != b && s.count(multiply(ga_inv, element_at(b, n), n)))
                g.add_edge(a, b);
    }
    return g;
}

auto canonicalize(const ConnectionSpec & spec) -> ConnectionSpec
{
    const int m = 2 * spec.n;
    ConnectionSpec best = spec;
    for (int u = 1; u < m; ++u) {
        if (std::gcd(u, m) != 1)
            continue;
        auto r = spec.R.scaled(u);
        if (r > best.R)
            continue;
        auto ut = spec.T.scaled(u);
        for (int v = 0; v < m; ++v) {
            ConnectionSpec candidate{ spec.n, r, ut.translated(v) };
            if (candidate < best)
                best = std::move(candidate);
        }
    }
    return best;
}

namespace
{
    struct Parser {
        const std::string & text;
        std::size_t pos = 0;

        [[noreturn]] auto fail(const std::string & what) const -> void
        {
            throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
        }

        auto skip_ws() -> void
        {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
        }

        auto peek() -> char
        {
            skip_ws();
            return pos < text.size() ? text[pos] : '\0';
        }

        auto expect(char c) -> void
        {
            if (peek() != c)
                fail(std::string("expected '") + c + "'");
            ++pos;
        }

        auto integer() -> long long
        {
            skip_ws();
            auto start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
                ++pos;
            auto digits = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == digits) {
                pos = start;
                fail("expected integer");
            }
            if (pos - digits > 9) {
                pos = start;
                fail("integer too large");
            }
            return std::stoll(text.substr(start, pos - start));
        }

        auto list() -> std::vector<long long>
        {
            std::vector<long long> result;
            auto c = peek();
            if (c == ';' || c == '\0')
                return result;
            result.push_back(integer());
            while (peek() == ',') {
                ++pos;
                result.push_back(integer());
            }
            return result;
        }
    };
}

auto parse_spec(const std::string & text) -> ConnectionSpec
{
    Parser p{ text };
    long long n = 0;
    std::vector<long long> r, t;
    bool have_n = false, have_r = false, have_t = false;

    while (p.peek() != '\0') {
        auto key = p.peek();
        auto key_pos = p.pos;
        ++p.pos;
        p.expect('=');
        switch (key) {
        case 'n':
            if (have_n)
                p.fail("duplicate n");
            n = p.integer();
            have_n = true;
            break;
        case 'R':
            if (have_r)
                p.fail("duplicate R");
            r = p.list();
            have_r = true;
            break;
        case 'T':
            if (have_t)
                p.fail("duplicate T");
            t = p.list();
            have_t = true;
            break;
        default:
            p.pos = key_pos;
            p.fail("expected n=, R= or T=");
        }
        auto c = p.peek();
        if (c == ';')
            ++p.pos;
        else if (c != '\0')
            p.fail("expected ';'");
    }

    if (! have_n || ! have_r || ! have_t)
        p.fail("spec needs n, R and T");
    if (n < 1 || n > 4096)
        throw Error(ErrorCode::ParseError, "n must lie in 1..4096 in \"" + text + "\"");

    ConnectionSpec spec{ static_cast<int>(n), ResidueSet(2 * static_cast<int>(n)), ResidueSet(2 * static_cast<int>(n)) };
    for (auto x : r)
        spec.R.insert(x);
    for (auto x : t)
        spec.T.insert(x);
    return spec;
}

auto format_spec(const ConnectionSpec & spec) -> std::string
{
    std::ostringstream out;
    out << "n=" << spec.n << "; R=" << spec.R.to_string() << "; T=" << spec.T.to_string();
    return out.str();
}

} // namespace dicirc
