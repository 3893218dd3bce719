#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "leavitt/cli.hpp"

using leavitt::run_command;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        char tmpl[] = "/tmp/leavitt_test_XXXXXX";
        int fd = mkstemp(tmpl);
        REQUIRE(fd >= 0);
        close(fd);
        path = tmpl;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("normalize") {
    Result r = run({"normalize", "--rose", "2", "--field", "Q", "e1'*e2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    r = run({"normalize", "--rose", "2", "--field", "Q", "e1'*e1"});
    CHECK(r.out == "v\n");
    r = run({"normalize", "--rose", "2", "--field", "Q", "(e1+e2)*(e1'+e2')"});
    CHECK(r.out == "v + e1*e2' + e2*e1'\n");
}

TEST_CASE("normalize over a graph file") {
    TempFile gf("vertex u\nvertex w\nedge a u w\nedge b u w\n");
    Result r = run({"normalize", "--graph", gf.path, "--field", "Q", "a'*a + b'*b"});
    CHECK(r.code == 0);
    CHECK(r.out == "2*w\n");
}

TEST_CASE("apply with the anick shorthand") {
    Result r = run({"apply", "--rose", "2", "--field", "Q", "--auto", "anick:p=e1,e1=e1,e2=e2", "e2"});
    CHECK(r.code == 0);
    CHECK(r.out == "e2 + e1*e1\n");
    r = run({"apply", "--rose", "2", "--field", "Q", "--auto", "anick:p=e1", "e1'"});
    CHECK(r.out == "e1' - e1*e2'\n");
}

TEST_CASE("apply with an automorphism file") {
    TempFile af("edge e2 = e2 + e1*e1\nghost e1 = e1' - e1*e2'\n");
    Result r = run({"apply", "--rose", "2", "--field", "Q", "--auto", af.path, "e2"});
    CHECK(r.code == 0);
    CHECK(r.out == "e2 + e1*e1\n");
}

TEST_CASE("act, twisted and untwisted") {
    Result r = run({"act", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x",
                    "--twist", "e1", "e2", "z"});
    CHECK(r.code == 0);
    CHECK(r.out == "[v](1) + [e1*e1](1)\n");
    r = run({"act", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x", "e2", "z"});
    CHECK(r.out == "[v](1)\n");
    r = run({"act", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x,twist=e1", "e2", "z"});
    CHECK(r.out == "[v](1) + [e1*e1](1)\n");
    r = run({"act", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x", "e1'", "z"});
    CHECK(r.out == "0\n");
}

TEST_CASE("equiv") {
    Result r = run({"equiv", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x",
                    "e1", "e1*e2'"});
    CHECK(r.code == 0);
    CHECK(r.out == "equivalent\n");
    r = run({"equiv", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x", "e1", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "not equivalent\n");
}

TEST_CASE("witness") {
    Result r = run({"witness", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x",
                    "2*z + e1*z"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/2*e2'\n");
    r = run({"witness", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x", "z - z"});
    CHECK(r.code == 4);

    // twisted witness acts back to z through the twisted action
    r = run({"witness", "--rose", "2", "--field", "Q",
             "--module", "sfc:c=e2,f=1-x,twist=e1", "e1*z"});
    CHECK(r.code == 0);
    Result check = run({"act", "--rose", "2", "--field", "Q",
                        "--module", "sfc:c=e2,f=1-x,twist=e1",
                        r.out.substr(0, r.out.size() - 1), "e1*z"});
    CHECK(check.code == 0);
    CHECK(check.out == "[v](1)\n");
}

TEST_CASE("check-hom") {
    Result r = run({"check-hom", "--rose", "2", "--field", "Q", "--auto", "anick:p=e1"});
    CHECK(r.code == 0);
    CHECK(r.out == "ok\n");
    TempFile af("edge e1 = v\n");
    r = run({"check-hom", "--rose", "2", "--field", "Q", "--auto", af.path});
    CHECK(r.code == 3);
    CHECK(r.out.find("relation (3)") != std::string::npos);
}

TEST_CASE("iso-cond") {
    Result r = run({"iso-cond", "--rose", "2", "--field", "Q", "--edges", "e1,e2",
                    "--P", "v,e1;0,v", "--Q", "v,-e1;0,v"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    TempFile r1("vertex v\nedge e v v\n");
    r = run({"iso-cond", "--graph", r1.path, "--field", "Q", "--edges", "e",
             "--P", "e'", "--Q", "e"});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");
}

TEST_CASE("oracle verbs") {
    Result r = run({"oracle", "--rose", "2", "--field", "Q", "--suite", "relations"});
    CHECK(r.code == 0);
    r = run({"oracle", "--rose", "2", "--field", "Q", "--suite", "assoc",
             "--samples", "25", "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("assoc: ok") != std::string::npos);
    TempFile af("edge e1 = v\n");
    r = run({"oracle", "--rose", "2", "--field", "Q", "--suite", "hom", "--auto", af.path,
             "--samples", "5"});
    CHECK(r.code == 5);
    CHECK(r.out.find("FAIL hom") != std::string::npos);
}

TEST_CASE("demos") {
    Result r = run({"demo", "--field", "Q", "example-2-4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("phi(e) = v") != std::string::npos);
    CHECK(r.out.find("phi(e') = v") != std::string::npos);
    CHECK(r.out.find("iso-condition: false") != std::string::npos);
    r = run({"demo", "--field", "Q", "example-3-7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("equiv(e1, e1*e2') -> equivalent") != std::string::npos);
    CHECK(r.out.find("equiv(e1, 0) -> not equivalent") != std::string::npos);
}

TEST_CASE("exit codes for malformed inputs") {
    CHECK(run({"normalize", "--rose", "2", "--field", "Q", "e1*"}).code == 2);
    CHECK(run({"normalize", "--rose", "2", "--field", "Q", "e9"}).code == 2);
    CHECK(run({"normalize", "--field", "Q", "v"}).code == 2);          // no graph source
    CHECK(run({"normalize", "--rose", "2", "--graph", "x", "--field", "Q", "v"}).code == 2);
    CHECK(run({"normalize", "--rose", "2", "--field", "R", "v"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    // math-domain errors
    CHECK(run({"act", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x^2",
               "e1", "z"}).code == 4);
    CHECK(run({"act", "--rose", "2", "--field", "Q", "--module", "sfc:c=e1*e1,f=1-x",
               "e1", "z"}).code == 4);
    CHECK(run({"equiv", "--rose", "2", "--field", "Q", "--module", "sfc:c=e2,f=1-x",
               "e2", "0"}).code == 4);
    // graph file problems
    TempFile bad("edge e a b\n");
    CHECK(run({"normalize", "--graph", bad.path, "--field", "Q", "v"}).code == 2);
}
