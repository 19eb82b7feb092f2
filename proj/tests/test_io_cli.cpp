#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fspace/enumeration.hpp"
#include "fspace/errors.hpp"
#include "fspace/io.hpp"
#include "fspace/poset.hpp"
#include "fspace/zero_one_matrix.hpp"

using namespace fspace;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command =
        (env.empty() ? "" : env + " ") + std::string(FSPACE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    return read_poset(in);
}

}  // namespace

TEST_CASE("poset text format") {
    Poset p = parse_poset("# a comment\n3\nlabels: a b c\n1 3\n2 3\n");
    CHECK(p.size() == 3);
    CHECK(p.label(0) == "a");
    CHECK(p.less(0, 2));
    CHECK(p.less(1, 2));

    // closure is taken, labels optional
    Poset q = parse_poset("3\n1 2\n2 3\n");
    CHECK(q.less(0, 2));
    CHECK(q.label(2) == "x3");

    // errors carry line numbers
    try {
        parse_poset("3\n1 4\n");
        CHECK(false);
    } catch (const FormatError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_poset(""), FormatError);
    CHECK_THROWS_AS(parse_poset("2\nlabels: a\n"), FormatError);
    CHECK_THROWS_AS(parse_poset("2\n1 1\n"), FormatError);
    CHECK_THROWS_AS(parse_poset("2\n1 2 3\n"), FormatError);
    // a cycle is a domain error, not a format error
    CHECK_THROWS_AS(parse_poset("2\n1 2\n2 1\n"), Error);
}

TEST_CASE("matrix text format") {
    std::istringstream in("010\n001\n110\n");
    ZeroOneMatrix m = read_matrix(in);
    CHECK(m.order() == 3);
    CHECK(m.at(0, 1) == 1);

    std::istringstream bad_char("01\n0x\n");
    CHECK_THROWS_AS(read_matrix(bad_char), FormatError);
    std::istringstream not_square("010\n000\n");
    CHECK_THROWS_AS(read_matrix(not_square), FormatError);
}

TEST_CASE("complex and action formats") {
    std::istringstream in("a b c\nc d\n");
    SimplicialComplex k = read_complex(in);
    CHECK(k.vertex_count() == 4);
    CHECK(k.facets().size() == 2);

    std::istringstream act("id: 1 2 3 4\nswap: 2 1 4 3\n");
    auto perms = read_action(act);
    REQUIRE(perms.size() == 2);
    CHECK(perms[1] == Permutation{1, 0, 3, 2});

    std::istringstream not_identity("2 1\n1 2\n");
    CHECK_THROWS_AS(read_action(not_identity), FormatError);
    std::istringstream out_of_range("1 2\n1 3\n");
    CHECK_THROWS_AS(read_action(out_of_range), FormatError);
}

TEST_CASE("writers round trip") {
    for (const auto& p : {make_circle8(), make_weakbeat4(), make_chain(5)}) {
        Poset back = parse_poset(write_poset(p));
        CHECK(back.same_relation(p));
        CHECK(back.labels() == p.labels());
    }
    ZeroOneMatrix m = matrix_from_poset(make_sphere_model(1));
    std::istringstream in(write_matrix(m));
    CHECK(read_matrix(in) == m);

    // vertex indices may be renumbered on re-read; compare by name
    auto named_facets = [](const SimplicialComplex& k) {
        std::set<std::set<std::string>> out;
        for (const auto& facet : k.facets()) {
            std::set<std::string> names;
            for (int v : facet) names.insert(k.vertices()[v]);
            out.insert(std::move(names));
        }
        return out;
    };
    SimplicialComplex k = order_complex(make_sphere_model(1));
    std::istringstream kin(write_complex(k));
    SimplicialComplex k2 = read_complex(kin);
    CHECK(named_facets(k2) == named_facets(k));
}

TEST_CASE("cli: matrix/poset round trip and determinism") {
    auto chain = temp_file("fspace_chain.poset", write_poset(make_chain(3)));
    auto first = run_cli("matrix " + chain.string());
    CHECK(first.exit_code == 0);
    CHECK(first.out == "000\n100\n110\n");
    CHECK(run_cli("matrix " + chain.string()).out == first.out);

    auto pm = temp_file("fspace_chain.pm", first.out);
    auto poset_out = run_cli("poset " + pm.string());
    CHECK(poset_out.exit_code == 0);
    CHECK(poset_out.out == "3\nlabels: x1 x2 x3\n1 2\n2 3\n");
}

TEST_CASE("cli: validate reports violations with exit 1") {
    auto bad = temp_file("fspace_bad.pm", "00\n00\n");
    auto r = run_cli("validate " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("condition 2") != std::string::npos);

    auto good = temp_file("fspace_good.pm", "01\n10\n");
    CHECK(run_cli("validate " + good.string()).exit_code == 0);
}

TEST_CASE("cli: exit code 2 for missing files and unknown subcommands") {
    CHECK(run_cli("invariants /nonexistent/file.poset").exit_code == 2);
    CHECK(run_cli("frobnicate x").exit_code == 2);
    CHECK(run_cli("dot somefile.poset --view spiral").exit_code == 2);
}

TEST_CASE("cli: json output is deterministic and carries the schema tag") {
    auto circle = temp_file("fspace_circle.poset", write_poset(make_circle8()));
    auto a = run_cli("invariants " + circle.string() + " --json");
    auto b = run_cli("invariants " + circle.string() + " --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": \"fspace/1\"") != std::string::npos);
    CHECK(a.out.find("\"absDet\": 1") != std::string::npos);
    CHECK(a.out.find("\"rankBar\": 0") != std::string::npos);
    CHECK(a.out.find("\"reducedEuler\": -1") != std::string::npos);
}

TEST_CASE("cli: homeo prints the verdict") {
    auto x = temp_file("fspace_x.poset", write_poset(make_circle8()));
    auto y = temp_file("fspace_y.poset", write_poset(make_twocircles8()));
    auto r = run_cli("homeo " + x.string() + " " + y.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "non-homeomorphic\n");
    auto same = run_cli("homeo " + x.string() + " " + x.string());
    CHECK(same.exit_code == 0);
    CHECK(same.out.find("homeomorphic") == 0);
}

TEST_CASE("cli: enumerate emits files and a csv") {
    auto dir = std::filesystem::temp_directory_path() / "fspace_enum4";
    std::filesystem::remove_all(dir);
    auto r = run_cli("enumerate 4 --emit " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "16\n");
    CHECK(std::filesystem::exists(dir / "poset_0001.poset"));
    CHECK(std::filesystem::exists(dir / "poset_0016.poset"));
    std::ifstream csv(dir / "invariants.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "file,n,absDet,rankBar,width,height,reducedEuler,A2,A3,detPlusI");
    int rows = 0;
    std::string line;
    while (std::getline(csv, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 16);
}

TEST_CASE("cli: action pipeline") {
    auto s1 = temp_file("fspace_s1.poset", write_poset(make_sphere_model(1)));
    auto act = temp_file("fspace_s1.act", "id: 1 2 3 4\nantipodal: 2 1 4 3\n");
    CHECK(run_cli("action validate " + s1.string() + " " + act.string()).exit_code == 0);
    auto z2 = run_cli("action z2 " + s1.string() + " " + act.string() + " --json");
    CHECK(z2.exit_code == 0);
    CHECK(z2.out.find("\"product\": 1") != std::string::npos);

    auto bad_act = temp_file("fspace_bad.act", "id: 1 2 3 4\nfixes: 1 2 4 3\n");
    CHECK(run_cli("action validate " + s1.string() + " " + bad_act.string()).exit_code == 1);
}

TEST_CASE("cli: gamma size caps") {
    auto big = temp_file("fspace_anti15.poset", write_poset(make_antichain(15)));
    CHECK(run_cli("gamma " + big.string()).exit_code == 1);  // over the default cap

    auto small = temp_file("fspace_anti9.poset", write_poset(make_antichain(9)));
    CHECK(run_cli("gamma " + small.string()).exit_code == 0);
    // FSPACE_SIZE_LIMIT tightens the cap, --limit overrides it again
    CHECK(run_cli("gamma " + small.string(), "FSPACE_SIZE_LIMIT=8").exit_code == 1);
    CHECK(run_cli("gamma " + small.string() + " --limit 9", "FSPACE_SIZE_LIMIT=8").exit_code == 0);
}
