#include "delpezzo/point_spec.hpp"

#include <cctype>
#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

bool is_minus_one_class_local(const DivisorClass& c) {
    return intersect(c, c) == -1 && deg_anticanonical(c) == 1;
}

Int parse_int(const std::string& s) {
    if (s.empty())
        throw InvalidPointSpecError("empty integer in class spec");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        throw InvalidPointSpecError("malformed integer '" + s + "' in class spec");
    for (size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InvalidPointSpecError("malformed integer '" + s + "' in class spec");
    return Int(s);
}

} // namespace

void validate_point_spec(int r, const PointSpec& p) {
    switch (p.kind) {
    case PointSpec::Kind::General:
        return;
    case PointSpec::Kind::OnDistinguished:
        if (r > 7)
            throw InvalidPointSpecError(
                "distinguished-curve points are only modeled for r <= 7");
        if (p.cls.points() != r)
            throw InvalidPointSpecError(
                "distinguished class " + to_string(p.cls) +
                " does not live on the " + std::to_string(r) + "-point lattice");
        if (!is_minus_one_class_local(p.cls))
            throw InvalidPointSpecError(
                to_string(p.cls) + " is not a (-1)-class, so it is not a "
                "distinguished curve");
        return;
    case PointSpec::Kind::AnticanonicalNode:
        if (r != 8)
            throw InvalidPointSpecError(
                "anticanonical members have nodes only for r = 8");
        return;
    }
    throw InvalidPointSpecError("unknown point kind");
}

std::string to_string(const PointSpec& p) {
    switch (p.kind) {
    case PointSpec::Kind::General:
        return "general";
    case PointSpec::Kind::OnDistinguished:
        return "distinguished " + to_string(p.cls);
    case PointSpec::Kind::AnticanonicalNode:
        return "node";
    }
    return "?";
}

DivisorClass parse_class_spec(const std::string& text, int r) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidPointSpecError(
            "class spec '" + text + "' must look like d:a1,a2,...");
    DivisorClass c;
    c.d = parse_int(text.substr(0, colon));
    c.a.assign(r, 0);
    std::string rest = text.substr(colon + 1);
    std::istringstream is(rest);
    std::string item;
    size_t i = 0;
    while (std::getline(is, item, ',')) {
        if (i >= static_cast<size_t>(r))
            throw InvalidPointSpecError(
                "class spec '" + text + "' has more than r = " +
                std::to_string(r) + " multiplicities");
        c.a[i++] = parse_int(item);
    }
    if (i == 0)
        throw InvalidPointSpecError("class spec '" + text + "' has no multiplicities");
    return c;
}

PointSpec parse_point_spec(const std::string& text, int r) {
    if (text == "general")
        return PointSpec::general();
    if (text == "node")
        return PointSpec::anticanonical_node();
    const std::string prefix = "distinguished:";
    if (text.rfind(prefix, 0) == 0)
        return PointSpec::on_distinguished(parse_class_spec(text.substr(prefix.size()), r));
    throw InvalidPointSpecError(
        "point '" + text + "' is not one of: general, node, distinguished:<d:a1,a2,...>");
}

} // namespace delpezzo
