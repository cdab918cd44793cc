// Drives the installed CLI binary (path given as argv[1]) and checks output
// text and exit codes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct Run {
    std::string output;
    int exit_code;
};

Run run(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed\n";
        std::exit(2);
    }
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {out, code};
}

void expect(bool cond, const std::string& what, const Run& r) {
    if (!cond) {
        ++failures;
        std::cerr << "[FAIL] " << what << "\n  exit=" << r.exit_code << "\n  output:\n"
                  << r.output << "\n";
    } else {
        std::cout << "[ok] " << what << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-latsym>\n";
        return 2;
    }
    const std::string bin = argv[1];

    Run r = run(bin + " compute --family G --lambda 2,0 --mu 0 --n 2 --set u=0 --set v=0");
    expect(r.exit_code == 0 && r.output == "x1^2 + x1*x2*q + x1*x2 + x2^2\n",
           "q-Whittaker value in text form", r);

    r = run(bin + " compute --family J --lambda 0 --mu 0 --n 0");
    expect(r.exit_code == 0 && r.output == "1\n", "empty skew with no rows", r);

    r = run(bin + " compute --family G --lambda 1 --mu 0 --n 1 --set v=0");
    expect(r.exit_code == 0 && r.output == "x1\n", "single box stays symbolic in u", r);

    r = run(bin + " compute --family J --lambda 1 --mu 0 --n 1 --format json");
    expect(r.exit_code == 0 && contains(r.output, "\"num\"") && contains(r.output, "\"den\"") &&
               contains(r.output, "\"u1\""),
           "json polynomial schema", r);

    // identical flags give byte-identical output
    Run r2 = run(bin + " compute --family J --lambda 1 --mu 0 --n 1 --format json");
    expect(r.output == r2.output, "reproducible output", r2);

    r = run(bin + " oracle --family q-whittaker --lambda 2 --n 2");
    expect(r.exit_code == 0 && r.output == "x1^2 + x1*x2*q + x1*x2 + x2^2\n",
           "chain oracle agrees", r);

    r = run(bin + " verify --suite fusion --L 2 --M 2 --columns 1");
    expect(r.exit_code == 0 && contains(r.output, "PASS"), "fusion suite", r);

    r = run(bin + " verify --suite gauge --max-label 2");
    expect(r.exit_code == 0 && contains(r.output, "PASS"), "gauge suite", r);

    r = run(bin + " verify --suite cauchy-j --degree 2 --n 1 --m 1 --box 1x1");
    expect(r.exit_code == 0 && contains(r.output, "PASS"), "small Cauchy suite", r);

    r = run(bin + " verify --suite ybe --L 1 --M 1 --N 1 --max-label 1 --jobs 2");
    expect(r.exit_code == 0 && contains(r.output, "PASS"), "small YBE suite", r);

    r = run(bin + " verify --suite stochastic --L 2 --M 2 --format json");
    expect(r.exit_code == 0 && contains(r.output, "\"pass\": true"), "json report", r);

    r = run(bin +
            " expand --source q-whittaker --target inhom-f --lambda 2,0 --n 2 --certify positive");
    expect(r.exit_code == 0 && contains(r.output, "2,1: q + 1"), "positive expansion", r);

    r = run(bin +
            " expand --source inhom-f --target q-whittaker --lambda 2,0 --n 2 "
            "--certify alternating");
    expect(r.exit_code == 0, "alternating expansion", r);

    r = run(bin +
            " expand --source inhom-f --target q-whittaker --lambda 2,0 --n 2 "
            "--certify positive");
    expect(r.exit_code == 1, "failed certification exits 1", r);

    r = run(bin + " expand --source schur --target schur --lambda 1 --n 1 --format json");
    expect(r.exit_code == 0 && contains(r.output, "\"partition\": \"1\""), "identity expansion",
           r);

    r = run(bin + " compute --family J --lambda 1,2 --mu 0 --n 1");
    expect(r.exit_code == 2, "bad partition exits 2", r);

    r = run(bin + " verify --suite no-such-suite");
    expect(r.exit_code == 2, "unknown suite exits 2", r);

    r = run(bin + " compute --family J --lambda 1 --mu 0 --n 1 --set u1=-1 --set x1=1");
    expect(r.exit_code == 3 && contains(r.output, "u1=-1"),
           "vanishing denominator exits 3 and names the binding", r);

    if (failures == 0) std::cout << "all cli checks passed\n";
    return failures == 0 ? 0 : 1;
}
