// Copyright 2026 The lddqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded and returns its exit status and stdout.
Result lddqec(const std::string &args) {
    std::string cmd = std::string(LDDQEC_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string &name) { return (fs::path(LDDQEC_TEST_DATA_DIR) / name).string(); }

std::string steane_args() {
    return "--code " + data("steane.code") + " --decoder " + data("steane.dec") + " --dd " + data("ldd_standard_7.dd");
}

// Drops '#' provenance lines.
std::string body(const std::string &text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '#') {
            out += line + "\n";
        }
    }
    return out;
}

fs::path temp_file(const std::string &name, const std::string &content) {
    fs::path p = fs::temp_directory_path() / ("lddqec_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST(cli, validate_exit_codes) {
    EXPECT_EQ(lddqec("validate " + steane_args()).code, 0);
    fs::path bad = temp_file("bad.code", "n 1\nk 0\nstabilizer X\nstabilizer Z\n");
    EXPECT_EQ(lddqec("validate --code " + bad.string()).code, 1);
    EXPECT_EQ(lddqec("validate --code /nonexistent/none.code").code, 2);
    fs::path partial = temp_file("partial.dec", "000000 IIIIIII\n");
    EXPECT_EQ(lddqec("validate --code " + data("steane.code") + " --decoder " + partial.string()).code, 1);
}

TEST(cli, wep_json_has_provenance_and_tags) {
    Result r = lddqec("wep " + steane_args() + " --out - --threads 1");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j.begin().key(), "provenance");
    EXPECT_EQ(j["provenance"]["inputs"].size(), 3u);
    EXPECT_EQ(j["setting"], "qec");
    EXPECT_EQ(j["coeffs"]["C"][1], 21);
    Result q = lddqec("wep --setting qed --code " + data("steane.code") + " --dd " + data("ldd_standard_7.dd") + " --out -");
    ASSERT_EQ(q.code, 0);
    EXPECT_EQ(nlohmann::json::parse(q.out)["coeffs"].size(), 18u);
}

TEST(cli, fidelity_csv_and_exact_mode) {
    Result r = lddqec("fidelity " + steane_args() + " --p 1e-3 --p-dd 0.1 --p-qec 0 --strategy hybrid,qec_only --out -");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("# lddqec fidelity", 0), 0u);
    std::string b = body(r.out);
    EXPECT_EQ(b.substr(0, b.find('\n')), "strategy,p,p_dd,p_qec,p_qed,F,P_A");
    EXPECT_NE(b.find("hybrid,0.001,0.1,0,0,"), std::string::npos);
    Result e = lddqec("fidelity " + steane_args() + " --p 1/1000 --p-dd 1 --p-qec 0 --strategy hybrid,qec_only --exact --out -");
    ASSERT_EQ(e.code, 0);
    std::istringstream in(body(e.out));
    std::string header, hyb, qec;
    std::getline(in, header);
    std::getline(in, hyb);
    std::getline(in, qec);
    // At p_dd = 1 the hybrid reduces to QEC-only, exactly.
    EXPECT_EQ(hyb.substr(hyb.find(',')), qec.substr(qec.find(',')));
    EXPECT_NE(hyb.find('/'), std::string::npos);
}

TEST(cli, bad_arguments_exit_one) {
    EXPECT_EQ(lddqec("fidelity " + steane_args() + " --p 2 --out -").code, 1);
    EXPECT_EQ(lddqec("sweep " + steane_args() + " --p 1e-3 --p-dd 0.1 --p-qec 0 --comparator hybrid --out -").code, 1);
    EXPECT_EQ(lddqec("fidelity " + steane_args() + " --strategy nope --p 0.1 --out -").code, 1);
}

TEST(cli, sweep_and_scan) {
    Result s = lddqec("sweep " + steane_args() + " --p 1e-3 --p-dd 0.01:0.9:3:log --p-qec 0:1:3 --comparator qec --out -");
    ASSERT_EQ(s.code, 0);
    std::string b = body(s.out);
    EXPECT_EQ(b.substr(0, b.find('\n')), "p,p_dd,p_qec,comparator,R,degenerate");
    EXPECT_EQ(std::count(b.begin(), b.end(), '\n'), 10);
    Result scan = lddqec("scan-ldd --code " + data("steane.code") + " --decoder " + data("steane.dec") +
                      " --p 1e-4 --p-dd 0.01 --p-qec 0.01 --out -");
    ASSERT_EQ(scan.code, 0);
    EXPECT_NE(body(scan.out).find("YXYXYXY XZXZXZX"), std::string::npos);
}

TEST(cli, config_file_with_command_line_precedence) {
    fs::path cfg = temp_file("run.cfg", "# defaults\ncode = " + data("steane.code") + "\ndecoder = " + data("steane.dec") +
                                            "\ndd = " + data("ldd_standard_7.dd") +
                                            "\np = 0.5\np_dd = 0.1\np-qec = 0\nstrategy = hybrid\n");
    Result a = lddqec("--config " + cfg.string() + " fidelity --p 1e-3 --out -");
    ASSERT_EQ(a.code, 0);
    EXPECT_NE(body(a.out).find("hybrid,0.001,0.1,0,0,"), std::string::npos) << a.out;
    Result b = lddqec("fidelity --config " + cfg.string() + " --out -");
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(body(b.out).find("hybrid,0.5,0.1,0,0,"), std::string::npos) << b.out;
    EXPECT_EQ(lddqec("--config /nonexistent/run.cfg fidelity --out -").code, 2);
}

TEST(cli, mc_is_reproducible) {
    std::string args = "mc " + steane_args() + " --strategy qed_hybrid --p 0.1 --p-dd 0.3 --p-qed 0.05 --shots 20000 --seed 5 --threads 2 --out -";
    Result a = lddqec(args), b = lddqec(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(body(a.out), body(b.out));
    EXPECT_NE(body(a.out).find("qed_hybrid,0.1,0.3,"), std::string::npos);
}

TEST(cli, asymptotics_and_dress) {
    std::string c13 = "--code " + data("code13.code") + " --decoder " + data("code13.dec") + " --dd " + data("ldd_13.dd");
    Result a = lddqec("asymptotics " + c13 + " --out -");
    ASSERT_EQ(a.code, 0);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["alpha"], 2);
    EXPECT_EQ(j["beta"], 3);
    EXPECT_EQ(j["dressing_available"], true);
    fs::path out = fs::temp_directory_path() / "lddqec_cli_dressed.dd";
    ASSERT_EQ(lddqec("dress " + c13 + " --out " + out.string()).code, 0);
    Result v = lddqec("asymptotics --code " + data("code13.code") + " --decoder " + data("code13.dec") + " --dd " +
                   out.string() + " --out -");
    ASSERT_EQ(v.code, 0);
    auto k = nlohmann::json::parse(v.out);
    EXPECT_EQ(k["beta"], 2);
    EXPECT_EQ(k["criterion_part1"], true);
}
