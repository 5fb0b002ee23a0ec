#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "weldkit/cli.hpp"
#include "weldkit/corpus.hpp"

using namespace weld;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome call(RunConfig c) {
  std::ostringstream out, err;
  const int status = run(c, out, err);
  return {status, out.str(), err.str()};
}

RunConfig config(Subcommand s, std::vector<std::string> inputs) {
  RunConfig c;
  c.subcommand = s;
  c.inputs = std::move(inputs);
  return c;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("weldkit_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

std::string corpus_file(const std::string& name) { return (bundled_corpus_dir() / name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("invariants report") {
    const Outcome o = call(config(Subcommand::Invariants, {corpus_file("figures.txt")}));
    CHECK(o.status == kExitOk);
    CHECK(o.out.find("virtual_parity=1") != std::string::npos);
    CHECK(o.out.find("hom_count[s3]=6") != std::string::npos);
    CHECK(o.out.find("alexander=1") != std::string::npos);
  }

  TEST_CASE("surface report") {
    const std::string f = write_temp("tref.txt", "O1+ U2+ O3+ U1+ O2+ U3+\n");
    const Outcome o = call(config(Subcommand::Surface, {f}));
    CHECK(o.status == kExitOk);
    CHECK(o.out.find("genus=0") != std::string::npos);
    CHECK(o.out.find("F=5") != std::string::npos);
  }

  TEST_CASE("movie check exit codes") {
    RunConfig c = config(Subcommand::MovieCheck, {corpus_file("vkink_unknot.movie")});
    c.theory = Theory::RotationalWelded;
    const Outcome rej = call(c);
    CHECK(rej.status == kExitReject);
    CHECK(rej.out == "REJECT frame=0 reason=move-kind-not-in-theory\n");
    c.theory = Theory::Welded;
    const Outcome acc = call(c);
    CHECK(acc.status == kExitOk);
    CHECK(acc.out == "ACCEPT\n");
  }

  TEST_CASE("search output re-checks") {
    const std::string a = write_temp("a.txt", "V1+ V1+\n"), b = write_temp("b.txt", "\n");
    const std::string movie = (std::filesystem::temp_directory_path() / "weldkit_cli_s.movie").string();
    RunConfig c = config(Subcommand::Search, {a, b});
    c.out = movie;
    const Outcome s = call(c);
    REQUIRE(s.status == kExitOk);
    const Outcome chk = call(config(Subcommand::MovieCheck, {movie}));
    CHECK(chk.status == kExitOk);

    c.out.reset();
    c.theory = Theory::RotationalWelded;
    const Outcome d = call(c);
    CHECK(d.status == kExitDomain);
    CHECK(d.err.find("virtual_parity") != std::string::npos);
  }

  TEST_CASE("tsv output is stable") {
    RunConfig c = config(Subcommand::Invariants, {corpus_file("generated.txt")});
    c.format = ReportFormat::Tsv;
    c.groups = {"s3", "d4"};
    const Outcome first = call(c), second = call(c);
    CHECK(first.status == kExitOk);
    CHECK(first.out == second.out);
    CHECK(first.out.rfind("subject\tkey\tvalue\n", 0) == 0);
    CHECK(first.out.find("trefoil\thom_count[s3]\t12\n") != std::string::npos);
    CHECK(first.out.find("hom_count[s4]") == std::string::npos);
  }

  TEST_CASE("other subcommands") {
    const std::string f = write_temp("vk.txt", "V1+ V1+\n");
    CHECK(call(config(Subcommand::Parse, {f})).out.find("canonical_code=V1- V1-") !=
          std::string::npos);
    CHECK(call(config(Subcommand::Census, {f})).out.find("virtual-crossing=disjoint-pair x1") !=
          std::string::npos);
    CHECK(call(config(Subcommand::HomCount, {f})).out.find("presentation=") != std::string::npos);
    const Outcome r = call(config(Subcommand::Render, {f}));
    CHECK(r.status == kExitOk);
    CHECK(r.out.rfind("<svg", 0) == 0);
  }

  TEST_CASE("errors") {
    const std::string bad = write_temp("bad.txt", "O1+ U2+\n");
    const Outcome p = call(config(Subcommand::Parse, {bad}));
    CHECK(p.status == kExitDomain);
    CHECK(p.err.find("line 1, column") != std::string::npos);
    CHECK(call(config(Subcommand::Parse, {"/nonexistent/x.txt"})).status == kExitDomain);
    CHECK(call(config(Subcommand::Parse, {})).status == kExitUsage);
    const std::string one = write_temp("one.txt", "O1+ U1+\n");
    CHECK(call(config(Subcommand::Search, {one})).status == kExitUsage);
    const std::string two = write_temp("two.txt", "diagram a\nO1+ U1+\ndiagram b\nV1+ V1+\n");
    CHECK(call(config(Subcommand::Render, {two})).status == kExitUsage);
  }
}
