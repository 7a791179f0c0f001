// Drives the installed binary end to end through a shell, checking exit
// codes and output on the documented command forms.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef WIDEALLOC_CLI_PATH
#error "WIDEALLOC_CLI_PATH must point at the binary under test"
#endif

namespace {

using nlohmann::ordered_json;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "widealloc_cli_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = temp_path("stdout");
  const std::string cmd = std::string(WIDEALLOC_CLI_PATH) + " " + args + " >" +
                          out_path + " 2>" + temp_path("stderr");
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  return r;
}

}  // namespace

TEST(CheckWideCli, VerdictsAndExitCodes) {
  const RunResult wide = run_cli("check-wide \"5 4 3 3\"");
  EXPECT_EQ(wide.code, 0);
  EXPECT_EQ(wide.out, "wide\n");

  const RunResult narrow = run_cli("check-wide \"2 2 2\"");
  EXPECT_EQ(narrow.code, 1);
  EXPECT_EQ(narrow.out.rfind("not wide", 0), 0u);

  const RunResult all = run_cli("check-wide \"5 4 3 3\" --method all --json");
  EXPECT_EQ(all.code, 0);
  const ordered_json j = ordered_json::parse(all.out);
  EXPECT_EQ(j.at("wide"), true);
  EXPECT_EQ(j.at("methods").size(), 3u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").code, 2);                        // no subcommand
  EXPECT_EQ(run_cli("check-wide").code, 2);              // missing input
  EXPECT_EQ(run_cli("check-wide 2 --method bogus").code, 2);
  EXPECT_EQ(run_cli("no-such-command").code, 2);
  EXPECT_EQ(run_cli("--help").code, 0);
  EXPECT_EQ(run_cli("check-wide \"1 x\"").code, 2);      // bad diagram text
}

TEST(AllocateCli, TextAndJsonForms) {
  const RunResult text = run_cli("allocate \"5 4 3 3\"");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("z(1,1,1) = 6"), std::string::npos);

  const RunResult json = run_cli("allocate \"5 4 3 3\" --json --residuals");
  EXPECT_EQ(json.code, 0);
  const ordered_json j = ordered_json::parse(json.out);
  EXPECT_EQ(j.at("z").at("1,1,1"), 6);
  EXPECT_EQ(j.at("residuals").at("column_block_totals"),
            (ordered_json{3, 3, 4}));

  EXPECT_EQ(run_cli("allocate \"2 2 2\"").code, 1);      // not wide
  EXPECT_EQ(run_cli("allocate \"4 3 2 1\"").code, 2);    // four blocks
}

TEST(FillCli, BothMethodsAndRefusals) {
  const RunResult pipeline = run_cli("fill \"5 4 3 3\" --json");
  EXPECT_EQ(pipeline.code, 0);
  const ordered_json j = ordered_json::parse(pipeline.out);
  EXPECT_EQ(j.at("rows").size(), 4u);
  EXPECT_EQ(j.at("rows")[0].size(), 5u);

  const RunResult exact = run_cli("fill \"2 2 2\" --method exact");
  EXPECT_EQ(exact.code, 1);
  EXPECT_EQ(exact.out, "no Latin filling\n");

  const RunResult refused = run_cli("fill \"2 2 2\"");
  EXPECT_EQ(refused.code, 1);
  EXPECT_EQ(refused.out.rfind("no Latin filling: ", 0), 0u);

  const RunResult svg = run_cli("fill \"5 4 3 3\" --render svg");
  EXPECT_EQ(svg.code, 0);
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);
}

TEST(VerifyCli, ChecksArtifactsAgainstDiagram) {
  const std::string fill_path = temp_path("fill.json");
  spit(fill_path, run_cli("fill \"5 4 3 3\" --json").out);

  const RunResult ok =
      run_cli("verify --diagram \"5 4 3 3\" --filling " + fill_path);
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "filling: ok\n");

  // Same artifact against the wrong diagram.
  const RunResult wrong =
      run_cli("verify --diagram \"5 4 4 2\" --filling " + fill_path);
  EXPECT_EQ(wrong.code, 2);  // row lengths no longer match: malformed input

  // Corrupt one symbol so the shape fits but the Latin property breaks.
  ordered_json j = ordered_json::parse(slurp(fill_path));
  j["rows"][0][0] = j["rows"][0][1];
  const std::string broken_path = temp_path("broken.json");
  spit(broken_path, j.dump());
  const RunResult broken =
      run_cli("verify --diagram \"5 4 3 3\" --filling " + broken_path +
              " --json");
  EXPECT_EQ(broken.code, 1);
  const ordered_json report = ordered_json::parse(broken.out);
  EXPECT_EQ(report.at("filling").at("ok"), false);
  EXPECT_TRUE(report.at("filling").contains("violation"));

  // An allocation verifies alongside.
  const std::string alloc_path = temp_path("alloc.json");
  spit(alloc_path, run_cli("allocate \"5 4 3 3\" --json").out);
  const RunResult both =
      run_cli("verify --diagram \"5 4 3 3\" --filling " + fill_path +
              " --allocation " + alloc_path);
  EXPECT_EQ(both.code, 0);

  // Artifact flags demand a diagram; bare verify demands an artifact.
  EXPECT_EQ(run_cli("verify --filling " + fill_path).code, 2);
  EXPECT_EQ(run_cli("verify --diagram \"5 4 3 3\"").code, 2);
}

TEST(SearchCli, DeterministicAcrossJobCounts) {
  const RunResult one = run_cli("search --max-cells 12 --jobs 1");
  const RunResult three = run_cli("search --max-cells 12 --jobs 3");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);

  const ordered_json j = ordered_json::parse(one.out);
  EXPECT_EQ(j.at("counts").at("diagrams"), 271);
  EXPECT_EQ(j.at("counts").at("wide"), 96);
  EXPECT_EQ(j.at("counts").at("latin"), 96);
  EXPECT_EQ(j.at("counts").at("allocated"), 92);
  EXPECT_TRUE(j.at("disagreements").empty());

  EXPECT_EQ(run_cli("search --max-cells 100").code, 2);  // scale gate
}

TEST(OutlineCli, ReduceVerifyReconstructRoundTrip) {
  const std::string latin_path = temp_path("latin.txt");
  spit(latin_path, "1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n");
  const std::string part_path = temp_path("part.json");
  spit(part_path, R"({"rows":[2,2],"cols":[1,3],"symbols":[2,2]})");

  const RunResult reduced = run_cli("outline reduce --latin " + latin_path +
                                    " --partition " + part_path);
  EXPECT_EQ(reduced.code, 0);
  const std::string outline_path = temp_path("outline.json");
  spit(outline_path, reduced.out);

  EXPECT_EQ(run_cli("outline verify " + outline_path).code, 0);

  const RunResult rec = run_cli("outline reconstruct " + outline_path);
  EXPECT_EQ(rec.code, 0);
  const std::string rec_latin_path = temp_path("rec_latin.txt");
  spit(rec_latin_path, rec.out);

  // Reducing the reconstruction by the same partition recovers the outline
  // byte for byte.
  const RunResult again = run_cli("outline reduce --latin " + rec_latin_path +
                                  " --partition " + part_path);
  EXPECT_EQ(again.out, reduced.out);

  // A corrupted outline is rejected with the violation text.
  ordered_json j = ordered_json::parse(reduced.out);
  j["cells"][0][0]["1"] = 7;
  const std::string bad_path = temp_path("bad_outline.json");
  spit(bad_path, j.dump());
  const RunResult bad = run_cli("outline verify " + bad_path);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("total"), std::string::npos);
}

TEST(RenderCli, AsciiAndSvgForms) {
  const RunResult ascii = run_cli("render \"3 2\"");
  EXPECT_EQ(ascii.code, 0);
  EXPECT_EQ(ascii.out, "###\n##\n");

  const RunResult svg = run_cli("render \"3 2\" --format svg");
  EXPECT_EQ(svg.code, 0);
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);

  // A filling payload is recognized by its array-of-arrays rows.
  const std::string fill_path = temp_path("render_fill.json");
  spit(fill_path, run_cli("fill \"4 3\" --json").out);
  const RunResult filled = run_cli("render " + fill_path);
  EXPECT_EQ(filled.code, 0);
  EXPECT_NE(filled.out.find('1'), std::string::npos);

  // --out writes the rendering to a file instead of stdout.
  const std::string out_path = temp_path("render.svg");
  const RunResult to_file =
      run_cli("render \"3 2\" --format svg --out " + out_path);
  EXPECT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_NE(slurp(out_path).find("<svg"), std::string::npos);
}
