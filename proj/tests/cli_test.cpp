// End-to-end tests for the command-line tool. The binary path arrives in
// HEFFTER_CLI; fixture files in HEFFTER_DATA_DIR.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"

namespace {

int failures = 0;

#define EXPECT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            ++failures;                                                   \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": "   \
                      << #cond << "\n";                                   \
        }                                                                 \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string cli;

RunResult run(const std::string& args) {
    std::string tag = std::to_string(getpid());
    std::string out_file = "/tmp/heffter_cli_out." + tag;
    std::string err_file = "/tmp/heffter_cli_err." + tag;
    std::string cmd = cli + " " + args + " >" + out_file + " 2>" + err_file;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = testsupport::slurp(out_file);
    r.err = testsupport::slurp(err_file);
    return r;
}

std::string tmp(const std::string& name) {
    return "/tmp/" + std::to_string(getpid()) + "." + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = tmp(name);
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

}  // namespace

int main() {
    const char* env = std::getenv("HEFFTER_CLI");
    if (!env) {
        std::cerr << "HEFFTER_CLI not set\n";
        return 1;
    }
    cli = env;

    // construct
    auto r = run("construct --n 19 --k 17 --format csv");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out == testsupport::slurp(testsupport::data_path("h19_17.csv")));
    EXPECT(r.out.rfind("18,93,,311", 0) == 0);

    r = run("construct --n 20 --k 17 --format csv");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out == testsupport::slurp(testsupport::data_path("h20_17.csv")));

    r = run("construct --n 18 --k 13");
    EXPECT(r.exit_code == 2);

    r = run("construct --n 19 --k 9");
    EXPECT(r.exit_code == 2);
    r = run("construct --n 19 --k 9 --force");
    EXPECT(r.exit_code == 0);
    r = run("construct --n 12 --k 9 --force");  // valid array, not globally simple
    EXPECT(r.exit_code == 1);

    r = run("construct --n 19 --k 5 --format json");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out.find("\"cells\"") != std::string::npos);
    {
        std::size_t count = 0, pos = 0;
        while ((pos = r.out.find("\"row\"", pos)) != std::string::npos) {
            ++count;
            pos += 5;
        }
        EXPECT(count == 95);
    }

    // verify
    std::string h86 = testsupport::data_path("h8_6.json");
    r = run("verify " + h86);
    EXPECT(r.exit_code == 0);  // fill, support, modular sums all hold
    r = run("verify " + h86 + " --global-simple");
    EXPECT(r.exit_code == 1);
    EXPECT(r.out.find("repeated partial sum -1") != std::string::npos);
    r = run("verify " + h86 + " --global-simple --json");
    EXPECT(r.exit_code == 1);
    EXPECT(r.out.find("\"globally_simple\": false") != std::string::npos);

    r = run("construct --n 20 --k 17 -o " + tmp("h2017.json"));
    EXPECT(r.exit_code == 0);
    r = run("verify " + tmp("h2017.json") + " --integer --global-simple --support");
    EXPECT(r.exit_code == 0);

    std::string truncated = write_temp("truncated.json", "{\"m\": 19, \"n\":");
    r = run("verify " + truncated);
    EXPECT(r.exit_code == 2);

    // table
    r = run("construct --n 19 --k 17 -o " + tmp("h1917.json"));
    EXPECT(r.exit_code == 0);
    r = run("table " + tmp("h1917.json") + " --axis cols --class n3");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out == testsupport::slurp(testsupport::data_path("h19_17_colsums.csv")));
    r = run("table " + tmp("h1917.json") + " --axis rows --class n3");
    EXPECT(r.out == testsupport::slurp(testsupport::data_path("h19_17_rowsums.csv")));
    r = run("table " + tmp("h2017.json") + " --axis cols --class n0");
    EXPECT(r.out == testsupport::slurp(testsupport::data_path("h20_17_colsums.csv")));
    r = run("table " + tmp("h2017.json") + " --axis rows --class n0");
    EXPECT(r.out == testsupport::slurp(testsupport::data_path("h20_17_rowsums.csv")));
    r = run("table " + tmp("h1917.json") + " --axis rows --class n0");
    EXPECT(r.exit_code == 2);

    // decompose
    r = run("decompose " + tmp("h1917.json") + " --check-orthogonal --check-compatible");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out.find("edge partition of K_647: ok (208981 edges)") != std::string::npos);
    EXPECT(r.out.find("orthogonality: ok") != std::string::npos);
    EXPECT(r.out.find("compatible: no") != std::string::npos);
    r = run("decompose " + h86);
    EXPECT(r.exit_code == 1);
    EXPECT(r.err.find("row 1") != std::string::npos);

    // search
    r = run("search --m 3 --n 3 --h 3 --k 3 --limit 1");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out.find("solutions: 1") != std::string::npos);
    r = run("search --m 3 --n 3 --h 3 --k 3 --limit 1 --budget 0");
    EXPECT(r.exit_code == 3);
    r = run("search --m 2 --n 3 --h 3 --k 2");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out.find("solutions: 0") != std::string::npos);

    // usage errors
    r = run("construct --n 19");
    EXPECT(r.exit_code == 2);
    r = run("bogus");
    EXPECT(r.exit_code == 2);

    if (failures == 0) {
        std::cout << "cli tests passed\n";
        return 0;
    }
    std::cerr << failures << " cli test(s) failed\n";
    return 1;
}
