#include "catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace tetleb {

namespace {

Vec3 vec(const char* x, const char* y, const char* z) {
    return {parse_rational(x), parse_rational(y), parse_rational(z)};
}

VertexSet verts(Vec3 a, Vec3 b, Vec3 c, Vec3 d) {
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

SquaredLengths lengths6(const std::array<const char*, 6>& e) {
    std::array<Rational, 6> q;
    for (std::size_t i = 0; i < 6; ++i)
        q[i] = parse_rational(e[i]);
    return SquaredLengths(std::move(q));
}

ShapeKey key5(const char* z1, const char* z2s, const char* w1, const char* w2z2,
              const char* ts) {
    return {parse_rational(z1), parse_rational(z2s), parse_rational(w1),
            parse_rational(w2z2), parse_rational(ts)};
}

CatalogEntry from_vertices(std::string name, std::string summary, VertexSet v, ShapeKey k) {
    CatalogEntry e;
    e.name = std::move(name);
    e.summary = std::move(summary);
    e.lengths = squared_edge_lengths(v);
    e.vertices = std::move(v);
    e.key = std::move(k);
    return e;
}

CatalogEntry from_lengths(std::string name, std::string summary, SquaredLengths s, ShapeKey k) {
    CatalogEntry e;
    e.name = std::move(name);
    e.summary = std::move(summary);
    e.lengths = std::move(s);
    e.key = std::move(k);
    return e;
}

CatalogEntry from_key(std::string name, std::string summary, ShapeKey k) {
    CatalogEntry e;
    e.name = std::move(name);
    e.summary = std::move(summary);
    e.lengths = key_to_lengths(k);
    e.key = std::move(k);
    return e;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> c;

    c.push_back(from_vertices(
        "sommerville", "space-filling Sommerville tetrahedron; orbit of 4 classes",
        verts(vec("-1", "0", "0"), vec("1", "0", "0"), vec("0", "-1", "1"), vec("0", "1", "1")),
        key5("1/2", "1/2", "1/2", "0", "1/2")));

    c.push_back(from_vertices(
        "path", "path tetrahedron; its 3-class orbit is the attracting cycle",
        verts(vec("0", "0", "0"), vec("1", "0", "0"), vec("1", "1", "0"), vec("1", "1", "1")),
        key5("1/3", "2/9", "2/3", "1/9", "1/6")));

    c.push_back(from_key("halves", "all non-trivial components equal 1/2; lies on the cycle",
                         key5("1/2", "1/4", "1/2", "1/4", "1/4")));

    c.push_back(from_key("path-image", "image of the path tetrahedron under either map",
                         key5("1/2", "1/8", "1/2", "0", "1/4")));

    c.push_back(from_vertices(
        "regular", "regular tetrahedron",
        verts(vec("1", "1", "1"), vec("1", "-1", "-1"), vec("-1", "1", "-1"),
              vec("-1", "-1", "1")),
        key5("1/2", "3/4", "1/2", "1/4", "2/3")));

    c.push_back(from_vertices(
        "cube-corner", "corner simplex of the unit cube",
        verts(vec("0", "0", "0"), vec("1", "0", "0"), vec("0", "1", "0"), vec("0", "0", "1")),
        key5("1/2", "1/4", "1/2", "1/4", "1/2")));

    c.push_back(from_vertices(
        "wedge", "flat wedge: cube corner squashed to height 1/10",
        verts(vec("0", "0", "0"), vec("1", "0", "0"), vec("0", "1", "0"), vec("0", "0", "1/10")),
        key5("1/2", "1/4", "1/2", "1/4", "1/200")));

    // equilateral base with edge 1/10, apex at unit height; side edges
    // squared (1/10)^2/3 + 1 = 301/300
    c.push_back(from_lengths(
        "needle", "near-degenerate needle over a small equilateral base",
        lengths6({"1/100", "1/100", "301/300", "1/100", "301/300", "301/300"}),
        key5("3/602", "3603/362404", "3/602", "1797/362404", "2700/361501")));

    c.push_back(from_vertices(
        "sommerville-perturbed", "Sommerville with one vertex lifted by 1/10; closed orbit of 25",
        verts(vec("-1", "0", "0"), vec("1", "0", "0"), vec("0", "-1", "1"), vec("0", "1", "11/10")),
        key5("190/401", "84200/160801", "190/401", "4000/160801", "88200/168821")));

    // nearly equilateral integer-length family; squared lengths derived
    // exactly from the published coordinates
    c.push_back(from_lengths("T1", "nearly equilateral, integer squared lengths (22,17,17,19,18,20)",
                             lengths6({"22", "17", "17", "19", "18", "20"}),
                             key5("5/11", "137/242", "21/44", "49/484", "12703/24112")));
    c.push_back(from_lengths("T2", "nearly equilateral, integer squared lengths (21,16,17,19,18,20)",
                             lengths6({"21", "16", "17", "19", "18", "20"}),
                             key5("3/7", "85/147", "10/21", "31/294", "12071/21420")));
    c.push_back(from_lengths("T3", "nearly equilateral, integer squared lengths (21,17,17,17,16,19)",
                             lengths6({"21", "17", "17", "17", "16", "19"}),
                             key5("10/21", "236/441", "1/2", "2/21", "2689/4956")));
    c.push_back(from_lengths("T4", "nearly equilateral, integer squared lengths (41,38,38,39,37,40)",
                             lengths6({"41", "38", "38", "39", "37", "40"}),
                             key5("20/41", "1117/1681", "21/41", "318/1681", "29082/45797")));
    c.push_back(from_lengths("T5", "nearly equilateral, integer squared lengths (100,97,97,98,96,99)",
                             lengths6({"100", "97", "97", "98", "96", "99"}),
                             key5("99/200", "28599/40000", "101/200", "9001/40000",
                                  "1870811/2859900")));
    c.push_back(from_lengths("T6", "nearly equilateral, integer squared lengths (100,97,96,98,95,99)",
                             lengths6({"100", "97", "96", "98", "95", "99"}),
                             key5("99/200", "28199/40000", "101/200", "8801/40000",
                                  "1850713/2819900")));

    c.push_back(from_key("halves-variant-a", "two-component variant of halves; closed orbit of 13",
                         key5("1/2", "221/800", "1/2", "1/4", "121/442")));
    c.push_back(from_key("sommerville-variant",
                         "perturbed Sommerville feeding the 13-class variant orbit; 14 classes",
                         key5("100/221", "23150/48841", "100/221", "1050/48841",
                              "48400/102323")));
    c.push_back(from_key("halves-variant-b", "three-component variant of halves; closed orbit of 44",
                         key5("1/2", "1/4", "53/100", "49/200", "9/25")));

    return c;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_get(const std::string& name) {
    const std::string want = lower(name);
    for (const auto& e : catalog())
        if (lower(e.name) == want)
            return e;
    // suggest names sharing a prefix or containing the query
    std::string msg = "unknown catalog name '" + name + "'";
    std::vector<std::string> sugg;
    for (const auto& e : catalog()) {
        std::string n = lower(e.name);
        if (n.find(want) != std::string::npos || want.find(n) != std::string::npos ||
            n.substr(0, 3) == want.substr(0, std::min<std::size_t>(3, want.size())))
            sugg.push_back(e.name);
    }
    if (!sugg.empty()) {
        msg += "; did you mean: ";
        for (std::size_t i = 0; i < sugg.size(); ++i)
            msg += (i ? ", " : "") + sugg[i];
    }
    throw UnknownName(msg);
}

const std::vector<std::string>& perturbation_components() {
    static const std::vector<std::string> comps{"z1", "z2", "w1", "w2", "t"};
    return comps;
}

ShapeKey perturbation_family(const std::string& component, const Rational& alpha) {
    const Rational half(1, 2), quarter(1, 4);
    ShapeKey k{half, quarter, half, quarter, quarter};
    if (component == "z1") {
        k.z1 = half - alpha;
    } else if (component == "z2") {
        Rational z2 = half + alpha;
        k.z2_sq = z2 * z2;
        k.w2_z2 = half * z2;
    } else if (component == "w1") {
        k.w1 = half - alpha;
    } else if (component == "w2") {
        k.w2_z2 = (half + alpha) * half;
    } else if (component == "t") {
        Rational t = half + alpha;
        k.t_sq = t * t;
    } else {
        throw UnknownName("unknown perturbation component '" + component +
                          "' (expected z1, z2, w1, w2 or t)");
    }
    auto viol = validate_key(k);
    if (!viol.empty())
        throw InvalidPerturbation("perturbation " + component + " by " + to_string(alpha) +
                                  " leaves the canonical space: " + viol.front());
    return k;
}

std::function<ShapeKey(const Rational&)> perturbation_family_fn(const std::string& component) {
    if (std::find(perturbation_components().begin(), perturbation_components().end(),
                  component) == perturbation_components().end())
        throw UnknownName("unknown perturbation component '" + component + "'");
    return [component](const Rational& a) { return perturbation_family(component, a); };
}

}  // namespace tetleb
