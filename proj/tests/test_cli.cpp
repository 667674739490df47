#include "sqhe/cli/commands.hpp"
#include "sqhe/cli/config.hpp"
#include "sqhe/cli/figures.hpp"
#include "sqhe/cli/table.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace sqhe;
using namespace sqhe::cli;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SQHE_TOOL_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::vector<double> parse_row(const std::string& l) {
    std::vector<double> v;
    std::istringstream in(l);
    for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
    return v;
}

}  // namespace

TEST(Config, DefaultsAndTypedAccess) {
    Config c;
    EXPECT_EQ(c.number("Th"), 2.0);
    EXPECT_EQ(c.integer("grid_points"), 256);
    EXPECT_EQ(c.raw("variable"), "x");
    EXPECT_FALSE(c.is_explicit("Th"));
    EXPECT_NO_THROW(c.engine());
    EXPECT_NO_THROW(c.squeeze());
}

TEST(Config, AssignmentsAndErrors) {
    Config c;
    c.set_assignment(" Th = 3.5 ");
    EXPECT_EQ(c.number("Th"), 3.5);
    EXPECT_TRUE(c.is_explicit("Th"));
    EXPECT_THROW(c.set_assignment("Th3"), ConfigError);
    EXPECT_THROW(c.set("nonsense", "1"), ConfigError);
    c.set("Tc", "cold");
    EXPECT_THROW(c.number("Tc"), ConfigError);
    c.set("Tc", "-1");
    EXPECT_THROW(c.engine(), ConfigError);
    c.set("grid_points", "2.5");
    EXPECT_THROW(c.integer("grid_points"), ConfigError);
}

TEST(Config, StreamWithComments) {
    Config c;
    std::istringstream in("# engine\nTh = 4\n\n  # squeezing\nx=1.25\n");
    c.load_stream(in, "test");
    EXPECT_EQ(c.number("Th"), 4.0);
    EXPECT_EQ(c.number("x"), 1.25);
    std::istringstream bad("Th = 4\nbogus = 1\n");
    try {
        c.load_stream(bad, "file.cfg");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("file.cfg:2"), std::string::npos);
    }
}

TEST(Config, OverlayKeepsOnlyExplicitKeys) {
    Config base;
    base.set("Th", "5");
    Config user;
    user.set("Tc", "0.25");
    base.overlay(user);
    EXPECT_EQ(base.number("Th"), 5.0);
    EXPECT_EQ(base.number("Tc"), 0.25);
}

TEST(Config, EtaCGridValidation) {
    Config c;
    EXPECT_EQ(c.etaC_grid().size(), 12u);
    c.set("etaC_points", "0");
    EXPECT_THROW(c.etaC_grid(), ConfigError);
    c.set("etaC_points", "3");
    c.set("etaC_max", "1");
    EXPECT_THROW(c.etaC_grid(), ConfigError);
}

TEST(Config, OptimizationAutoBounds) {
    Config c;
    c.set("variable", "Ea");
    const auto p = c.engine();
    const auto s = c.optimization(p);
    EXPECT_DOUBLE_EQ(s.lower, p.Eb + 0.01);
    c.set("lower", "0.5");
    EXPECT_EQ(c.optimization(p).lower, 0.5);
    c.set("variable", "Tq");
    EXPECT_THROW(c.optimization(p), ConfigError);
}

TEST(Table, NumberFormat) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(123456789012345.0), "1.23456789012e+14");
    EXPECT_EQ(format_number(NAN), "nan");
}

TEST(Table, CsvLayout) {
    Table t;
    t.add_meta("tool", "sqhe 1.0.0");
    t.columns = {"a", "b"};
    t.add_row({1.0, 2.5});
    t.footer.emplace_back("fit", "1 2");
    EXPECT_THROW(t.add_row({1.0}), std::logic_error);
    std::ostringstream out;
    write_csv(out, t);
    EXPECT_EQ(out.str(), "# tool = sqhe 1.0.0\na,b\n1,2.5\n# fit = 1 2\n");
}

TEST(Commands, SweepMetadataCoversParameters) {
    Config c;
    c.set("sweep_points", "3");
    const auto t = cmd_sweep(c, 1);
    for (const auto& k : physical_keys()) {
        bool found = false;
        for (const auto& [mk, mv] : t.meta) found = found || mk == k;
        EXPECT_TRUE(found) << k;
    }
    EXPECT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.columns.front(), "x");
}

TEST(Commands, SweepRejectsInvalidPoints) {
    Config c;
    c.set("sweep_var", "Tc");
    c.set("sweep_from", "-1");
    EXPECT_THROW(cmd_sweep(c, 1), ConfigError);
    c.set("sweep_var", "Tz");
    EXPECT_THROW(cmd_sweep(c, 1), ConfigError);
}

TEST(Commands, FigureTableIsComplete) {
    for (const char* id : {"fig1b", "fig2a", "fig3", "fig3b", "fig4d", "fig5b", "fig6b", "fig7d",
                           "fig8"}) {
        EXPECT_TRUE(is_figure(id)) << id;
    }
    EXPECT_THROW(cmd_figure("fig99", Config{}, 1), ConfigError);
}

TEST(Tool, SteadyConvergesToLinearSolve) {
    const auto r = run("steady --stride 1000");
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_FALSE(ls.empty());
    EXPECT_EQ(ls.front(), std::string("# tool = sqhe ") + kToolVersion);
    std::vector<double> ss;
    std::string header;
    for (const auto& l : ls) {
        if (l.rfind("# steady_state = ", 0) == 0) {
            std::istringstream in(l.substr(17));
            for (double v; in >> v;) ss.push_back(v);
        } else if (header.empty() && l[0] != '#') {
            header = l;
        }
    }
    EXPECT_EQ(header, "t,rho11,rho22,rhoaa,rhobb,rho12,trace");
    ASSERT_EQ(ss.size(), 5u);
    const auto last = parse_row(ls.back());
    ASSERT_EQ(last.size(), 7u);
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(last[i + 1], ss[i], 1e-8);
    EXPECT_NEAR(last[6], 1.0, 1e-10);
}

TEST(Tool, FlagsOverrideSetAndFile) {
    const std::string cfg = testing::TempDir() + "sqhe_cli.cfg";
    {
        FILE* f = std::fopen(cfg.c_str(), "w");
        ASSERT_NE(f, nullptr);
        std::fputs("Th = 3\nTc = 0.4\nsweep_points = 2\n", f);
        std::fclose(f);
    }
    const auto r = run("sweep --config " + cfg + " --set Tc=0.3 --Th 4");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# Th = 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("# Tc = 0.3\n"), std::string::npos);
    EXPECT_NE(r.out.find("# sweep_points = 2\n"), std::string::npos);
}

TEST(Tool, ExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("steady --no-such-flag 1").code, 2);
    EXPECT_EQ(run("figure fig99").code, 2);
    EXPECT_EQ(run("emp --etaC_points 0").code, 2);
    EXPECT_EQ(run("sweep --Th -1").code, 2);
    EXPECT_EQ(run("steady --config /nonexistent/sqhe.cfg").code, 2);
    EXPECT_EQ(run("steady --jobs 0").code, 2);
    EXPECT_EQ(run("steady --dt 5 --t_final 100").code, 3);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Tool, WritesOutFile) {
    const std::string path = testing::TempDir() + "sqhe_cli_out.csv";
    std::remove(path.c_str());
    ASSERT_EQ(run("sweep --sweep_points 2 --out " + path).code, 0);
    FILE* f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    std::fclose(f);
}

TEST(Tool, EmpWithFitFooter) {
    const auto r = run("emp --variable xc --Th 1 --Tl 1 --x 1 --fit linear --etaC_points 6");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# fit_linear m c = "), std::string::npos);
    EXPECT_NE(r.out.find("# etaC_convention = Tc = Th (1 - etaC)"), std::string::npos);
}
