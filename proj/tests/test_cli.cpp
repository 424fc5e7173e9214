#include "cli_runner.hpp"

#include <doctest.h>

using namespace qgp::test;

namespace {

const std::string kCyclic3 = "3\n1 2 3\n2 3 1\n3 1 2\n";
const std::string kQc4 = "4\n2 1 3 4\n3 2 4 1\n4 3 1 2\n1 4 2 3\n";
const std::string kBruck = "4\n1 2 4 3\n4 3 1 2\n3 4 2 1\n2 1 3 4\n";

std::string file(const std::string& name, const std::string& text)
{
    return quote(temp_file(name, text));
}

} // namespace

TEST_CASE("verify")
{
    const auto ok = run_cli("verify " + file("c3.lsq", kCyclic3));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "ok: Latin square of order 3\n");

    const auto bad = run_cli("verify -", "2\n1 2\n1 2\n");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "column 1 duplicates symbol 1\ncolumn 2 duplicates symbol 2\n");

    CHECK(run_cli("verify -", "2\n1 .\n. 1\n").exit_code == 1);

    const auto parse = run_cli("verify - 2>&1", "2\n1 2\n2 x\n");
    CHECK(parse.exit_code == 2);
    CHECK(parse.out.find("line 3") != std::string::npos);

    CHECK(run_cli("verify /nonexistent/file.lsq").exit_code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("prolong " + file("c3.lsq", kCyclic3)).exit_code == 2);
    CHECK(run_cli("prolong " + file("c3.lsq", kCyclic3) + " --method nope").exit_code == 2);
    CHECK(run_cli("prolong " + file("c3.lsq", kCyclic3) + " --method bruck").exit_code == 2);
    CHECK(run_cli("prolong " + file("c3.lsq", kCyclic3) + " --method bruck --transversal '1 3 2'").exit_code == 2);
    CHECK(run_cli("transversals " + file("c3.lsq", kCyclic3) + " --disjoint 4").exit_code == 2);
    CHECK(run_cli("gen --order 0 --seed 1").exit_code == 2);
}

TEST_CASE("gen is deterministic")
{
    const auto a = run_cli("gen --order 6 --seed 42");
    const auto b = run_cli("gen --order 6 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(reverifies(a.out));
    CHECK(run_cli("gen --order 3 --seed 0 --cyclic").out == kCyclic3);
}

TEST_CASE("complete")
{
    const std::string empty3 = "3\n. . .\n. . .\n. . .\n";
    const auto one = run_cli("complete -", empty3);
    CHECK(one.exit_code == 0);
    CHECK(one.out == kCyclic3);

    const auto count = run_cli("complete - --all --count", empty3);
    CHECK(count.out == "12\n");

    const auto some = run_cli("complete - --limit 3", empty3);
    CHECK(split_squares(some.out).size() == 3);
    CHECK(reverifies(some.out));

    CHECK(run_cli("complete -", "2\n1 .\n. 2\n").exit_code == 3);
}

TEST_CASE("transversals and qcmappings")
{
    const auto c4 = run_cli("gen --order 4 --seed 0 --cyclic").out;
    const auto none = run_cli("transversals - --count", c4);
    CHECK(none.exit_code == 0);
    CHECK(none.out == "0\n");

    const auto list = run_cli("transversals " + file("c3.lsq", kCyclic3) + " --list");
    CHECK(list.out == "1 2 3\n2 3 1\n3 1 2\n");
    CHECK(run_cli("transversals " + file("c3.lsq", kCyclic3) + " --disjoint 3 --count").out == "1\n");

    CHECK(run_cli("qcmappings " + file("qc4.lsq", kQc4) + " --count").out == "16\n");
    const auto capped = run_cli("qcmappings " + file("qc4.lsq", kQc4) + " --list --budget 2 2>&1");
    CHECK(capped.exit_code == 0);
    CHECK(capped.out.find("budget") != std::string::npos);
    CHECK(capped.out.find("1 3 2 4  # image 2 4 3 3; quasicomplete, special 1, duplicate rows 3 4") !=
          std::string::npos);
}

TEST_CASE("prolong methods")
{
    const std::string c3 = file("c3.lsq", kCyclic3);
    const std::string qc4 = file("qc4.lsq", kQc4);

    const auto bruck = run_cli("prolong " + c3 + " --method bruck --transversal '3 1 2'");
    CHECK(bruck.exit_code == 0);
    CHECK(bruck.out == kBruck);

    const auto disjoint = run_cli("prolong " + c3 +
                                  " --method disjoint --transversal '1 2 3' --transversal '2 3 1' --fill 4,5 "
                                  "--rows '2 1' --bottom " + file("bottom.lsq", "2\n2 1\n1 2\n"));
    CHECK(disjoint.out == "5\n4 5 3 1 2\n2 4 5 3 1\n5 1 4 2 3\n3 2 1 5 4\n1 3 2 4 5\n");

    const auto bel = run_cli("prolong " + c3 + " --method belyavskaya --transversal '3 1 2' --except 2");
    CHECK(bel.out == "4\n1 2 4 3\n2 3 1 4\n3 4 2 1\n4 1 3 2\n");

    const auto gen_bel = run_cli("prolong " + c3 +
                                 " --method gen-belyavskaya --transversal '1 2 3' --except 2 --transversal '2 3 1' "
                                 "--except 3 --transversal '3 1 2' --except 3 --all");
    CHECK(gen_bel.exit_code == 0);
    CHECK(gen_bel.out.find("4 5 6 1 2 3\n6 3 5 4 1 2\n3 1 4 2 5 6\n1 4 2 3 6 5\n5 2 1 6 3 4\n2 6 3 5 4 1\n") !=
          std::string::npos);
    CHECK(reverifies(gen_bel.out));

    const auto dd = run_cli("prolong " + qc4 + " --method dd --sigma '1 3 2 4' --keep 4");
    CHECK(dd.out == "5\n5 1 3 4 2\n3 2 5 1 4\n4 5 1 2 3\n1 4 2 3 5\n2 3 4 5 1\n");

    const auto gen_dd = run_cli("prolong " + qc4 + " --method gen-dd --sigma '1 3 2 4' --sigma '2 1 4 3' --all");
    CHECK(gen_dd.out == "6\n5 6 3 4 2 1\n6 2 5 1 4 3\n4 5 1 6 3 2\n1 4 2 3 6 5\n2 3 4 5 1 6\n3 1 6 2 5 4\n");

    const auto two = run_cli("prolong " + c3 + " --method two-step --t1 '3 1 2' --t2 '1 2 3' --first belyavskaya "
                                                "--except 2");
    CHECK(two.out == "5\n5 2 4 3 1\n2 5 1 4 3\n3 4 5 1 2\n4 1 3 2 5\n1 3 2 5 4\n");

    const auto prov = run_cli("prolong " + qc4 + " --method dd --sigma '1 3 2 4' --provenance");
    CHECK(prov.out.rfind("# V...C\n", 0) == 0);
    CHECK(reverifies(prov.out));

    CHECK(run_cli("prolong " + qc4 + " --method dd --sigma '1 2 4 3'").exit_code == 2);
}

TEST_CASE("contract")
{
    const auto bruck = run_cli("contract " + file("bruck.lsq", kBruck) + " --method bruck --deleted 4");
    CHECK(bruck.exit_code == 0);
    CHECK(split_squares(bruck.out) == std::vector<std::string>{kCyclic3});
    CHECK(bruck.out.find("# transversal 3 1 2") != std::string::npos);

    const auto dd = run_cli("contract - --method except --deleted 5",
                            "5\n5 1 3 4 2\n3 2 5 1 4\n4 5 1 2 3\n1 4 2 3 5\n2 3 4 5 1\n");
    CHECK(dd.exit_code == 0);
    CHECK(split_squares(dd.out) == std::vector<std::string>{kQc4});
    CHECK(dd.out.find("quasicomplete") != std::string::npos);

    CHECK(run_cli("contract " + file("c3.lsq", kCyclic3) + " --method bruck --deleted 3").exit_code == 3);
    const auto all = run_cli("contract " + file("bruck.lsq", kBruck) + " --method bruck --try-all");
    CHECK(all.exit_code == 0);
    CHECK(reverifies(all.out));
}

TEST_CASE("output is byte-identical across runs")
{
    const std::string args = "complete - --limit 5";
    const std::string empty = "4\n. . . .\n. . . .\n. . . .\n. . . .\n";
    CHECK(run_cli(args, empty).out == run_cli(args, empty).out);
}
