#include <doctest.h>

#include <fstream>
#include <sstream>

#include "linkbook/book.hpp"
#include "linkbook/cli.hpp"

using namespace linkbook;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name, const std::string& content) {
    std::string path = "cli_fixture_" + name;
    std::ofstream(path) << content;
    return path;
}

const std::string kUnknot = R"({"slices":[{"w":0,"ev":["cup",1]},{"w":2,"ev":["cap",1]}]})";
const std::string kHopf =
    R"({"slices":[{"w":0,"ev":["cup",1]},{"w":2,"ev":["cup",3]},)"
    R"({"w":4,"ev":["xg",2,1,2,"cw"]},{"w":4,"ev":["cap",3]},{"w":2,"ev":["cap",1]}]})";

} // namespace

TEST_CASE("encode reports layout data") {
    auto r = run({"encode", fixture("unknot.json", kUnknot)});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"q\":1,\"N\":4,\"boundaries\":[[1,1],[3,2],[2,1]],"
                   "\"strips\":[[],[2,3]],\"hooks\":[],\"booksum\":[]}\n");
}

TEST_CASE("linking emits the exact rational matrix") {
    auto r = run({"linking", fixture("hopf.json", kHopf)});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"q\":2,\"m\":[[[0,1],[1,1]],[[1,1],[0,1]]]}\n");
}

TEST_CASE("xcoeff closed form") {
    auto r = run({"xcoeff", "-m", "1", "-l", "1", "--type", "plus", "--orient", "same"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"re\":0.5,\"im\":0.0}\n");
}

TEST_CASE("compare-oracle exits 0 on agreement") {
    auto r = run({"compare-oracle", fixture("hopf2.json", kHopf), "-i", "1", "-j", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"match\":true}\n");
}

TEST_CASE("bandsum transforms a book sum") {
    BookSum s;
    s.q = 2;
    s.N = 4;
    Book b;
    b.q = 2;
    b.N = 4;
    b.pages = {encode_chord({2, 1}, {2, 3}, 2, 4)};
    s.terms.emplace_back(Coefficient(1), b);
    std::string path = fixture("sum.json", serialize_book_sum(sum_canonicalize(s)));

    auto r = run({"bandsum", path, "-i", "1", "-j", "2"});
    CHECK(r.code == 0);
    BookSum out = parse_book_sum(r.out);
    CHECK(out.terms.size() == 4);

    auto sub = run({"bandsum", path, "-i", "1", "-j", "2", "--subtract"});
    CHECK(sub.code == 0);
    CHECK(parse_book_sum(sub.out).terms.size() == 4);

    auto bad = run({"bandsum", path, "-i", "1", "-j", "5"});
    CHECK(bad.code == 2);
}

TEST_CASE("orient flips entry signs") {
    BookSum s;
    s.q = 2;
    s.N = 4;
    Book b;
    b.q = 2;
    b.N = 4;
    b.pages = {encode_chord({1, 1}, {2, 3}, 2, 4)};
    s.terms.emplace_back(Coefficient(1), b);
    std::string path = fixture("orient.json", serialize_book_sum(sum_canonicalize(s)));
    auto r = run({"orient", path, "-r", "1"});
    CHECK(r.code == 0);
    BookSum out = parse_book_sum(r.out);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms[0].second.pages[0].entries[0].value == -1);
}

TEST_CASE("reid applies the strip-add matrix and warns on dpi2 needle loss") {
    BookSum s;
    s.q = 1;
    s.N = 6;
    Book b;
    b.q = 1;
    b.N = 6;
    b.pages = {encode_chord({1, 2}, {1, 5}, 1, 6)};
    s.terms.emplace_back(Coefficient(1), b);
    std::string path = fixture("reid.json", serialize_book_sum(sum_canonicalize(s)));

    auto add = run({"reid", path, "--move", "strip-add", "-n", "1"});
    CHECK(add.code == 0);
    BookSum out = parse_book_sum(add.out);
    CHECK(out.N == 7);
    CHECK(out.terms[0].second.pages[0] == encode_chord({1, 3}, {1, 6}, 1, 7));

    auto warn = run({"reid", path, "--move", "dpi2", "-n", "1", "-c", "1"});
    CHECK(warn.code == 0);
    CHECK(warn.err.find("needle strip") != std::string::npos);

    auto bad = run({"reid", path, "--move", "o1f", "-n", "1"});
    CHECK(bad.code == 2);  // N = 6 cannot host strips 1..10
}

TEST_CASE("thread grows the ambient size") {
    std::string path = fixture("empty.json", "[]");
    auto r = run({"thread", path, "--q", "2", "--N", "8", "--steps", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "[]\n");

    auto noq = run({"thread", path});
    CHECK(noq.code == 1);
}

TEST_CASE("plat recovers the permutation") {
    std::string path = fixture(
        "plat.json", R"({"strands":2,"pairs":[[1,2,0.25,3,2]]})");
    auto r = run({"plat", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"perm\":[2,1]") != std::string::npos);
}

TEST_CASE("detect evaluates profiles") {
    std::string path = fixture(
        "prof.json",
        R"({"mu":1,"overall":1,"groups":[[1,1]],"breaks":[0,1],"sep":[[0,2],[1,2]]})");
    auto closed = run({"detect", "--profile", path});
    CHECK(closed.code == 0);
    CHECK(closed.out.find("\"re\":0.0") != std::string::npos);
    auto numeric = run({"detect", "--profile", path, "--numeric"});
    CHECK(numeric.code == 0);
}

TEST_CASE("bad inputs exit 1") {
    CHECK(run({"encode", "no_such_file.json"}).code == 1);
    CHECK(run({"encode", fixture("broken.json", "{oops")}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
}
