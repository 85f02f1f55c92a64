#include <bideal/diagram.hpp>

#include <catch_amalgamated.hpp>

using namespace bideal;

namespace {

BPath path(const char* word, int n) {
    auto p = BPath::parse(word, n);
    REQUIRE(p);
    return *p;
}

size_t count_substr(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("path point traces") {
    auto pts = lower_path_points(path("rrrr", 2));
    const std::vector<std::pair<int, int>> expected_p = {{-1, 0}, {0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK(pts == expected_p);
    auto qts = upper_path_points(path("rrrr", 2));
    const std::vector<std::pair<int, int>> expected_q = {{4, 1}, {3, 1}, {2, 1}, {1, 1}, {0, 1}};
    CHECK(qts == expected_q);
    auto zig = lower_path_points(path("rfrf", 2));
    const std::vector<std::pair<int, int>> expected_zig = {
        {-1, 0}, {0, 0}, {0, -1}, {1, -1}, {1, -2}};
    CHECK(zig == expected_zig);
}

TEST_CASE("bare board SVG") {
    const std::string svg = render_svg(2, std::nullopt, std::nullopt);
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                    "viewBox=\"-30 -10 120 120\">",
                    0) == 0);
    CHECK(svg.find("</svg>\n") == svg.size() - 7);
    CHECK(count_substr(svg, "<rect ") == 8);
    CHECK(count_substr(svg, "<line ") == 8);
    CHECK(count_substr(svg, "marker id=\"arrow\"") == 1);
    CHECK(svg.find("<polyline") == std::string::npos);
    CHECK(svg.find("<line x1=\"10\" y1=\"70\" x2=\"30\" y2=\"70\"/>") != std::string::npos);
}

TEST_CASE("pair SVG shades the decoded coideal") {
    const std::string svg = render_svg(2, path("rrrr", 2), path("rrrr", 2));
    CHECK(count_substr(svg, "#dae8fc") == 4);
    CHECK(count_substr(svg, "#f8cecc") == 0);
    CHECK(count_substr(svg, "<rect ") == 12);
    CHECK(svg.find("marker") == std::string::npos);
    CHECK(svg.find("points=\"-20,60 0,60 20,60 40,60 60,60\"") != std::string::npos);
    CHECK(svg.find("points=\"80,40 60,40 40,40 20,40 0,40\"") != std::string::npos);
    CHECK(svg.find("stroke=\"#cc0000\"") != std::string::npos);
    CHECK(svg.find("stroke=\"#0066cc\"") != std::string::npos);

    const std::string full = render_svg(2, path("rfrf", 2), path("rrrr", 2));
    CHECK(count_substr(full, "#f8cecc") == 4);
    CHECK(count_substr(full, "#dae8fc") == 4);
    CHECK(full.find("points=\"-20,60 0,60 0,80 20,80 20,100\"") != std::string::npos);
}

TEST_CASE("single path SVG") {
    const std::string svg = render_svg(2, path("rrff", 2), std::nullopt);
    CHECK(svg.find("stroke=\"#cc0000\"") != std::string::npos);
    CHECK(svg.find("#dae8fc") == std::string::npos);
    CHECK(svg.find("marker") == std::string::npos);
}

TEST_CASE("SVG scales with rank") {
    const std::string svg = render_svg(4, std::nullopt, std::nullopt);
    CHECK(svg.find("viewBox=\"-30 -10 200 200\"") != std::string::npos);
    CHECK(count_substr(svg, "<rect ") == 32);
}

TEST_CASE("bare board TikZ") {
    const std::string tikz = render_tikz(2, std::nullopt, std::nullopt);
    CHECK(tikz.rfind("\\begin{tikzpicture}[scale=0.5]\n", 0) == 0);
    CHECK(tikz.find("\\end{tikzpicture}\n") == tikz.size() - 18);
    CHECK(count_substr(tikz, "\\draw[gray]") == 8);
    CHECK(count_substr(tikz, "\\draw[->]") == 8);
    CHECK(tikz.find("\\draw[->] (0.5,-0.5) -- (1.5,-0.5);") != std::string::npos);
}

TEST_CASE("pair TikZ") {
    const std::string tikz = render_tikz(2, path("rrrr", 2), path("rrrr", 2));
    CHECK(count_substr(tikz, "\\fill[blue!15]") == 4);
    CHECK(count_substr(tikz, "\\fill[red!15]") == 0);
    CHECK(tikz.find("\\draw[very thick,red] (-1,0) -- (0,0) -- (1,0) -- (2,0) -- (3,0);") !=
          std::string::npos);
    CHECK(tikz.find("\\draw[very thick,blue] (4,1) -- (3,1) -- (2,1) -- (1,1) -- (0,1);") !=
          std::string::npos);
    CHECK(tikz.find("\\draw[->]") == std::string::npos);
}

TEST_CASE("rank below two is rejected") {
    CHECK_THROWS_AS(render_svg(1, std::nullopt, std::nullopt), std::domain_error);
    CHECK_THROWS_AS(render_tikz(1, std::nullopt, std::nullopt), std::domain_error);
}
