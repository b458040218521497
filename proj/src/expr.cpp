#include "ladist/expr.hpp"

#include <cctype>
#include <sstream>

#include "ladist/errors.hpp"

namespace ladist {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skipSpace() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool atEnd() {
        skipSpace();
        return pos >= text.size();
    }
    char peek() {
        skipSpace();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool tryConsume(char c) {
        skipSpace();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!tryConsume(c)) fail(std::string(1, c), what);
    }
    bool tryKeyword(const std::string& kw) {
        skipSpace();
        if (text.compare(pos, kw.size(), kw) != 0) return false;
        size_t after = pos + kw.size();
        if (after < text.size() && (std::isalnum((unsigned char)text[after]) || text[after] == '_'))
            return false;
        pos = after;
        return true;
    }
    [[noreturn]] void fail(const std::string& expected, const std::string& what) {
        std::ostringstream os;
        os << "parse error at position " << pos << ": expected " << expected;
        if (!what.empty()) os << " in " << what;
        throw parse_error(pos, expected, os.str());
    }

    std::string identifier() {
        skipSpace();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("identifier", "");
        return text.substr(start, pos - start);
    }

    Rational rational() {
        skipSpace();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        }
        if (pos == start) fail("rational number", "");
        return Rational::parse(text.substr(start, pos - start));
    }

    long long integer() {
        Rational r = rational();
        if (!r.isInteger()) fail("integer", "");
        return r.num();
    }
};

TwistedCuspidal parseLine(Cursor& c) {
    int eta = 0;
    if (c.tryKeyword("eta")) {
        c.expect('*', "eta twist");
        eta = 1;
    }
    return TwistedCuspidal(c.identifier(), Rational(0), eta);
}

Segment parseSegmentItem(Cursor& c) {
    if (c.tryKeyword("Seg")) {
        c.expect('(', "Seg");
        TwistedCuspidal line = parseLine(c);
        c.expect(',', "Seg");
        Rational a = c.rational();
        c.expect(',', "Seg");
        Rational b = c.rational();
        c.expect(')', "Seg");
        return Segment(line, a, b);
    }
    if (c.tryKeyword("St")) {
        c.expect('(', "St");
        TwistedCuspidal line = parseLine(c);
        c.expect(',', "St");
        long long k = c.integer();
        c.expect(')', "St");
        Rational center(0);
        if (c.tryConsume('@')) center = c.rational();
        return Segment::steinberg(line, (int)k, center);
    }
    c.fail("Seg or St", "segment");
}

ExprItem parseItem(Cursor& c) {
    c.skipSpace();
    if (c.tryKeyword("Ladder")) {
        c.expect('[', "Ladder");
        std::vector<Segment> segs;
        segs.push_back(parseSegmentItem(c));
        while (c.tryConsume(',')) segs.push_back(parseSegmentItem(c));
        c.expect(']', "Ladder");
        return Multisegment(std::move(segs));
    }
    if (c.tryKeyword("Speh")) {
        c.expect('(', "Speh");
        Segment delta = parseSegmentItem(c);
        c.expect(',', "Speh");
        long long k = c.integer();
        c.expect(')', "Speh");
        return UnitaryFactor(UnitaryFactor::Kind::Speh, delta, (int)k);
    }
    if (c.tryKeyword("Pair")) {
        c.expect('(', "Pair");
        if (!c.tryKeyword("Speh")) c.fail("Speh", "Pair");
        c.expect('(', "Speh");
        Segment delta = parseSegmentItem(c);
        c.expect(',', "Speh");
        long long k = c.integer();
        c.expect(')', "Speh");
        c.expect(',', "Pair");
        Rational alpha = c.rational();
        c.expect(')', "Pair");
        return UnitaryFactor(UnitaryFactor::Kind::ComplementaryPair, delta, (int)k, alpha);
    }
    return parseSegmentItem(c);
}

} // namespace

bool Expression::operator==(const Expression& o) const {
    if (items.size() != o.items.size()) return false;
    for (size_t i = 0; i < items.size(); ++i) {
        if (items[i].index() != o.items[i].index()) return false;
        bool eq = std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                return a == std::get<T>(o.items[i]);
            },
            items[i]);
        if (!eq) return false;
    }
    return true;
}

Expression parseExpression(const std::string& text) {
    Cursor c{text};
    Expression e;
    e.items.push_back(parseItem(c));
    while (!c.atEnd()) {
        if (!c.tryKeyword("x")) c.fail("x or end of input", "product");
        e.items.push_back(parseItem(c));
    }
    return e;
}

std::string printSegment(const Segment& s) {
    std::string line = (s.line.etaPow ? "eta*" : "") + s.line.base;
    long long k = s.length();
    Rational c = s.center();
    std::ostringstream os;
    os << "St(" << line << "," << k << ")";
    if (!c.isZero()) os << "@" << c.str();
    return os.str();
}

std::string printMultisegment(const Multisegment& ms) {
    std::ostringstream os;
    os << "Ladder[";
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i) os << ", ";
        os << printSegment(ms[i]);
    }
    os << "]";
    return os.str();
}

std::string printUnitaryFactor(const UnitaryFactor& u) {
    std::ostringstream os;
    if (u.kind == UnitaryFactor::Kind::Speh) {
        os << "Speh(" << printSegment(u.delta) << "," << u.k << ")";
    } else {
        os << "Pair(Speh(" << printSegment(u.delta) << "," << u.k << ")," << u.alpha.str() << ")";
    }
    return os.str();
}

std::string printExpression(const Expression& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.items.size(); ++i) {
        if (i) os << " x ";
        std::visit(
            [&](const auto& item) {
                using T = std::decay_t<decltype(item)>;
                if constexpr (std::is_same_v<T, Segment>) os << printSegment(item);
                else if constexpr (std::is_same_v<T, Multisegment>) os << printMultisegment(item);
                else os << printUnitaryFactor(item);
            },
            e.items[i]);
    }
    return os.str();
}

} // namespace ladist
