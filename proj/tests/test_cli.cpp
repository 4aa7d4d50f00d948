#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(PQELL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s)
{
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

} // namespace

TEST(Cli, EvalClassical)
{
    const auto r = run("eval K 2 2 0.5");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("function,p,q,r,method,value,error_estimate\nK,2,2,0.5,hyp-series,1.68575035481259"),
              std::string::npos)
        << r.out;
}

TEST(Cli, EvalAtZeroModulus)
{
    const auto r = run("eval E 1.5 2.25 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("E,1.5,2.25,0,closed-form,1.99371"), std::string::npos) << r.out;
}

TEST(Cli, EvalDivergent)
{
    const auto r = run("eval K 1.5 2.25 1");
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.out.find("DIVERGES"), std::string::npos);
    EXPECT_EQ(run("eval K 1.5 2.25 1 --method quad").code, 4);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("eval K 0.5 2 0.5").code, 3);
    EXPECT_EQ(run("eval K 2 2 1.5").code, 3);
    EXPECT_EQ(run("eval Z 2 2 0.5").code, 2);
    EXPECT_EQ(run("eval K 2 2").code, 2);
    EXPECT_EQ(run("eval K 2 2 0.5 --method bogus").code, 2);
    EXPECT_EQ(run("verify nope").code, 2);
    EXPECT_EQ(run("table K 2 2 0.9:0.1:0.1").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("eval K 1.5 2.25 0.5 --method agm").code, 3);
}

TEST(Cli, Methods)
{
    for (const char* m : {"quad", "series", "lambda", "agm"}) {
        const auto r = run(std::string("eval K 2 2 0.5 --method ") + m);
        EXPECT_EQ(r.code, 0) << m;
        EXPECT_NE(r.out.find(",1.68575035481259"), std::string::npos) << m << "\n" << r.out;
    }
    EXPECT_NE(run("eval K 2 2 0.5 --method lambda --lambda 0.4").out.find("lambda-series"), std::string::npos);
}

TEST(Cli, TrigFunctions)
{
    EXPECT_NE(run("eval sin 2 2 0.5").out.find("sin,2,2,0.5,quadrature,0.47942553860420"), std::string::npos);
    EXPECT_NE(run("eval pi 2 2 0").out.find(",3.14159265358979"), std::string::npos);
    EXPECT_EQ(run("eval sn 2 2 0.5").code, 2);
    EXPECT_EQ(run("eval arcsn 1.5 2.25 0.7 --x 0.5").code, 0);
    EXPECT_EQ(run("eval tan 2 2 1.5707963267948966").code, 3);
}

TEST(Cli, TableClassical)
{
    const auto r = run("table K 2 2 0:0.9:0.1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 11);
    const auto first = r.out.find("K,2,2,0,closed-form,");
    ASSERT_NE(first, std::string::npos) << r.out;
    EXPECT_NEAR(std::stod(r.out.substr(first + 20)), M_PI / 2, 1e-14);
    EXPECT_NE(r.out.find("K,2,2,0.3,"), std::string::npos);
}

TEST(Cli, TableMonotoneColumns)
{
    for (const char* fn : {"K", "E"}) {
        const auto r = run(std::string("table ") + fn + " 1.5 2.25 0:0.99:0.01");
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(count_lines(r.out), 101);
        double prev = std::nan("");
        std::size_t pos = r.out.find('\n') + 1;
        while (pos < r.out.size()) {
            const auto end = r.out.find('\n', pos);
            const std::string line = r.out.substr(pos, end - pos);
            const auto v_start = line.find(',', line.find(',', line.find(',', line.find(',', line.find(',') + 1) + 1) + 1) + 1) + 1;
            const double v = std::stod(line.substr(v_start));
            if (!std::isnan(prev)) {
                if (std::string(fn) == "K")
                    EXPECT_GT(v, prev) << line;
                else
                    EXPECT_LT(v, prev) << line;
            }
            prev = v;
            pos = end + 1;
        }
    }
}

TEST(Cli, TableCarriesDivergenceMarker)
{
    const auto r = run("table K 2 2 0.99:1:0.01");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("K,2,2,1,auto,DIVERGES,DIVERGES"), std::string::npos) << r.out;
}

TEST(Cli, VerifyReportsAndCsv)
{
    const auto text = run("verify r-convexity");
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("CLAIMS"), std::string::npos);
    EXPECT_NE(text.out.find("ERRATA"), std::string::npos);
    const auto csv = run("verify turan --csv --grid-p 1.5:2:0.5 --grid-q 1.5:2:0.5 --grid-r 0.3:0.6:0.3");
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("claim_id,kind,status", 0), 0u);
    EXPECT_NE(csv.out.find("turan.p.K,printed,sign-reversed,yes"), std::string::npos) << csv.out;
    EXPECT_EQ(run("verify turan --grid-r 0:1:0.5").code, 2);
}

TEST(Cli, FigureShape)
{
    const auto r = run("figure");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("# pi_{1.5,2.25}/2 = 1.9937", 0), 0u) << r.out.substr(0, 200);
    EXPECT_NE(r.out.find("r,K_1.5_2.25,E_1.5_2.25,K_2_2,E_2_2\n0,1.9937"), std::string::npos);
    EXPECT_NE(r.out.find("\n0.999,"), std::string::npos);
}
