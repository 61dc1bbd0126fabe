// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>

#include <dbarray/io.hpp>

using namespace dbarray;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run(const std::string& args)
{
    const std::string cmd = std::string(DBARRAY_CLI) + " " + args + " 2>&1";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr)
        r.out += buf.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream os(path);
    os << text;
}

} // namespace

TEST(Io, JsonRoundTrip)
{
    CodeDocument doc;
    doc.code = ArrayCode{CodeKind::PRAC, 3, 7, 2, 3,
                         {CyclicArray::from_rows({"0000000", "1001011", "1001011"}),
                          CyclicArray::from_rows({"0111001", "1110010", "1001011"})}};
    doc.meta["source_poly"] = "x^6+x^5+x^4+x^2+1";
    doc.meta["verified"] = false;
    const std::string text = dump_json(doc);
    const CodeDocument back = parse_json(text);
    EXPECT_EQ(back.code.kind, doc.code.kind);
    EXPECT_EQ(back.code.label(), doc.code.label());
    EXPECT_EQ(back.code.arrays, doc.code.arrays);
    EXPECT_EQ(back.meta, doc.meta);
    EXPECT_EQ(dump_json(back), text);
}

TEST(Io, MalformedDocuments)
{
    EXPECT_THROW(parse_json("{\"kind\": \"PRA\", \"r\": 3"), error);
    EXPECT_THROW(parse_json("{\"kind\": \"XYZ\", \"r\": 1, \"t\": 1, \"n\": 1, \"m\": 1, \"arrays\": []}"), error);
    EXPECT_THROW(parse_json("{\"kind\": \"PM\", \"r\": 2, \"t\": 1, \"n\": 1, \"m\": 1, \"arrays\": [[\"0\"]]}"), error);
    EXPECT_THROW(parse_json("{\"kind\": \"PM\", \"r\": 1, \"t\": 2, \"n\": 1, \"m\": 1, \"arrays\": [[\"0a\"]]}"), error);
}

TEST(Io, TextRoundTrip)
{
    const ArrayCode code{CodeKind::DBAC, 2, 3, 1, 1,
                         {CyclicArray::from_rows({"010", "110"}), CyclicArray::from_rows({"111", "000"})}};
    const auto arrays = parse_text_arrays(dump_text(code));
    EXPECT_EQ(arrays, code.arrays);
    EXPECT_THROW(parse_text_arrays("# nothing\n"), error);
}

TEST(Cli, FoldExamples)
{
    const CliResult pr = run("fold --poly x^4+x^3+1 --r 3 --t 5");
    EXPECT_EQ(pr.status, 0);
    EXPECT_NE(pr.out.find("01010\n10001\n11011\n"), std::string::npos) << pr.out;

    const CliResult three = run("fold --poly x^6+x^5+x^4+x^2+1 --r 3 --t 7 --format json");
    EXPECT_EQ(three.status, 0);
    EXPECT_EQ(parse_json(three.out).code.arrays.size(), 3U);

    const CliResult bad = run("fold --poly x^4+x+1 --r 2 --t 4");
    EXPECT_EQ(bad.status, 2);
    EXPECT_NE(bad.out.find("r and t are not coprime"), std::string::npos);
}

TEST(Cli, VerifyExitCodes)
{
    const std::string good = temp_path("folded.json");
    ASSERT_EQ(run("fold --poly x^4+x^3+1 --r 3 --t 5 --format json --out " + good).status, 0);
    EXPECT_EQ(run("verify --in " + good).status, 0);

    CodeDocument doc = parse_json(run("fold --poly x^4+x^3+1 --r 3 --t 5 --format json").out);
    doc.code.arrays[0].set(0, 0, 1);
    const std::string flipped = temp_path("flipped.json");
    write_file(flipped, dump_json(doc));
    const CliResult v = run("verify --in " + flipped);
    EXPECT_EQ(v.status, 1);
    EXPECT_NE(v.out.find("duplicated window"), std::string::npos) << v.out;

    const std::string truncated = temp_path("truncated.json");
    write_file(truncated, "{\"kind\": \"PRA\", \"r\": 3,");
    EXPECT_EQ(run("verify --in " + truncated).status, 2);

    const std::string text = temp_path("folded.txt");
    write_file(text, "01010\n10001\n11011\n");
    EXPECT_EQ(run("verify --in " + text + " --kind PRA --n 2 --m 2").status, 0);
    EXPECT_EQ(run("verify --in " + text).status, 2);
}

TEST(Cli, Construct)
{
    const CliResult prac = run("construct prac-fold --poly x^6+x^5+x^4+x^2+1 --n 2 --m 3 --format json");
    EXPECT_EQ(prac.status, 0);
    const CodeDocument doc = parse_json(prac.out);
    EXPECT_EQ(doc.code.arrays.size(), 3U);
    EXPECT_EQ(doc.meta.at("min_distance").get<int>(), 8);
    EXPECT_TRUE(doc.meta.at("verified").get<bool>());

    EXPECT_EQ(run("construct pf --n 4 --k 2").status, 2);
    EXPECT_EQ(run("construct pf --n 3 --k 2").status, 0);
    EXPECT_EQ(run("construct pmc-odd --n 3 --k 2 --m 2").status, 0);
    EXPECT_EQ(run("construct pmc-odd --n 2 --k 2 --m 1").status, 2);
}

TEST(Cli, WrittenDocumentsVerify)
{
    const std::string out = temp_path("sd.json");
    ASSERT_EQ(run("construct pmc-sd --n 3 --k 2 --m 1 --format json --out " + out).status, 0);
    EXPECT_EQ(run("verify --in " + out).status, 0);
    const std::string lifted = temp_path("lifted.json");
    const std::string pair = temp_path("pair.json");
    // the even PF(4,3) cycles 00001111 and 00101101 as two columns
    write_file(pair, R"({"kind":"DBAC","r":8,"t":2,"n":4,"m":1,"arrays":[["00","00","01","00","11","11","10","11"]]})");
    ASSERT_EQ(run("verify --in " + pair).status, 0);
    const CliResult db = run("construct db-direct --in " + pair + " --m 1 --format json --out " + lifted);
    std::ifstream is(lifted);
    const CodeDocument doc = parse_json(std::string(std::istreambuf_iterator<char>(is), {}));
    EXPECT_EQ(db.status == 0, doc.meta.at("verified").get<bool>());
    EXPECT_TRUE(doc.meta.at("experimental").get<bool>());
    EXPECT_EQ(run("verify --in " + lifted).status, db.status);
}

TEST(Cli, Experiments)
{
    const CliResult fam = run("experiment exponent-family --deg 8 --e 85 --r 5 --t 17 --n 4 --m 2");
    EXPECT_EQ(fam.status, 0);
    EXPECT_EQ(std::count(fam.out.begin(), fam.out.end(), '\n'), 9) << fam.out;
    const CliResult prod = run("experiment product-fold --f x^4+x^3+1 --g x^4+x+1 --r 3 --t 5 --n 2 --m 4");
    EXPECT_EQ(prod.status, 0);
    EXPECT_NE(prod.out.find("\t17\t(3,5;2,4)-PRAC\tverified"), std::string::npos) << prod.out;
    EXPECT_EQ(run("experiment exponent-family --deg 4 --e 15 --r 3 --t 5 --n 2 --m 2").status, 0);
}

TEST(Cli, PolyQueries)
{
    const CliResult info = run("poly info --poly x^4+x^3+1");
    EXPECT_EQ(info.status, 0);
    EXPECT_NE(info.out.find("primitive: true"), std::string::npos);
    const CliResult list = run("poly list --n 4 --primitive");
    EXPECT_EQ(list.out, "x^4+x+1\nx^4+x^3+1\n");
    EXPECT_EQ(run("poly list --n 8 --e 85").out.size() > 0, true);
}

TEST(Cli, UsageErrorsAndDeterminism)
{
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("fold --poly x^4+x^3+1").status, 2);
    EXPECT_EQ(run("--help").status, 0);
    const std::string args = "construct pmc-sd --n 3 --k 2 --m 2 --format json";
    EXPECT_EQ(run(args).out, run(args).out);
}
