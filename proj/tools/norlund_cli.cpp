/*
   Copyright 2026 The norlund authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "norlund/bernoulli.hpp"
#include "norlund/dilcher.hpp"
#include "norlund/meixner_pollaczek.hpp"
#include "norlund/output.hpp"
#include "norlund/verify.hpp"

namespace {

using namespace norlund;

// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit_records(const std::vector<OutputRecord>& records, OutputFormat format,
                  std::ostream& out) {
    if (format == OutputFormat::csv && !records.empty()) {
        out << csv_header(records.front()) << "\n";
    }
    for (const auto& record : records) {
        out << (format == OutputFormat::csv ? to_csv_row(record) : to_json_line(record)) << "\n";
    }
}

GenBernoulliMethod parse_genbern_method(const std::string& name) {
    if (name == "gf") return GenBernoulliMethod::gf;
    if (name == "lucas") return GenBernoulliMethod::lucas;
    if (name == "stirling") return GenBernoulliMethod::stirling;
    if (name == "recurrence") return GenBernoulliMethod::recurrence;
    if (name == "auto") return GenBernoulliMethod::auto_;
    throw DomainError("unknown method: " + name);
}

DilcherMethod parse_dilcher_method(const std::string& name) {
    if (name == "auto") return DilcherMethod::auto_;
    if (name == "brute") return DilcherMethod::brute;
    if (name == "prop1") return DilcherMethod::prop1;
    if (name == "prop2") return DilcherMethod::prop2;
    if (name == "hyper") return DilcherMethod::hyper;
    if (name == "mp") return DilcherMethod::mp;
    if (name == "coeff") return DilcherMethod::coeff;
    if (name == "small") return DilcherMethod::small;
    throw DomainError("unknown method: " + name);
}

void run_bern(int n, OutputFormat format) {
    const Rational value = classical_bernoulli(n);
    if (format == OutputFormat::plain) {
        std::cout << to_string(value) << "\n";
        return;
    }
    emit_records({{"bernoulli", {{"n", n}}, "egf", value}}, format, std::cout);
}

void run_genbern(int n, int p, const std::string& method_name, OutputFormat format) {
    GenBernoulliMethod method = parse_genbern_method(method_name);
    const Rational value = gen_bernoulli(n, p, method);
    if (method == GenBernoulliMethod::auto_) {
        method = GenBernoulliMethod::recurrence;
    }
    if (format == OutputFormat::plain) {
        std::cout << to_string(value) << "\n";
        return;
    }
    emit_records({{"genbern", {{"n", n}, {"p", p}}, to_string(method), value}}, format, std::cout);
}

void run_norlund(int n, OutputFormat format) {
    const NorlundPoly np = norlund_polynomial(n);
    if (format == OutputFormat::plain) {
        std::cout << to_coefficient_list(np.poly) << "\n";
        return;
    }
    std::vector<OutputRecord> records;
    for (int k = 0; k <= std::max(np.poly.degree(), 0); ++k) {
        records.push_back({"norlund", {{"n", n}, {"k", k}}, "lagrange", np.poly.coefficient(k)});
    }
    emit_records(records, format, std::cout);
}

void run_stirling1(int p, OutputFormat format) {
    const StirlingRow row = stirling_first_row(p);
    if (format == OutputFormat::plain) {
        std::string line = "[";
        for (int k = 1; k <= p; ++k) {
            if (k > 1) {
                line += ", ";
            }
            line += to_string(row.at(k));
        }
        std::cout << line << "]\n";
        return;
    }
    std::vector<OutputRecord> records;
    for (int k = 1; k <= p; ++k) {
        records.push_back({"stirling1", {{"p", p}, {"k", k}}, "falling-product", row.at(k)});
    }
    emit_records(records, format, std::cout);
}

void run_mp(int n, OutputFormat format) {
    const MPFamily family = mp_family(n);
    if (format == OutputFormat::plain) {
        std::cout << to_coefficient_list(family.poly(n)) << "\n";
        return;
    }
    std::vector<OutputRecord> records;
    for (int k = 0; k <= n; ++k) {
        records.push_back({"mp", {{"n", n}, {"k", k}}, "recurrence", family.coeff(n, k)});
    }
    emit_records(records, format, std::cout);
}

void run_dilcher(int N, int n, const std::string& method_name, OutputFormat format) {
    const DilcherMethod method = parse_dilcher_method(method_name);
    const Rational value = dilcher_sum(N, n, method);
    std::string resolved = method_name;
    if (method == DilcherMethod::auto_) {
        if (2 * n <= N - 1) {
            resolved = "small";
        } else if (2 * n == N) {
            resolved = "prop1";
        } else {
            resolved = "coeff";
        }
    }
    if (format == OutputFormat::plain) {
        std::cout << to_string(value) << "\n";
        return;
    }
    emit_records({{"dilcher_sum", {{"N", N}, {"n", n}}, resolved, value}}, format, std::cout);
}

void run_dilcher_table(int max_N, OutputFormat format) {
    const DilcherTriangle triangle = dilcher_triangle(max_N);
    if (format == OutputFormat::plain) {
        for (int N = 1; N <= max_N; ++N) {
            for (int k = 0; 2 * k <= N - 1; ++k) {
                std::cout << (k > 0 ? " " : "") << to_string(triangle.at(N, k));
            }
            std::cout << "\n";
        }
        return;
    }
    std::vector<OutputRecord> records;
    for (int N = 1; N <= max_N; ++N) {
        for (int k = 0; 2 * k <= N - 1; ++k) {
            records.push_back({"dilcher_table", {{"N", N}, {"k", k}}, "recurrence", triangle.at(N, k)});
        }
    }
    emit_records(records, format, std::cout);
}

int run_verify(const VerifyOptions& options) {
    const std::vector<CheckResult> results = run_verification(options);
    bool all_pass = true;
    for (const auto& result : results) {
        if (result.pass) {
            std::cout << "PASS " << result.suite << "\n";
        } else {
            all_pass = false;
            std::cout << "FAIL " << result.suite << ": " << result.detail << "\n";
        }
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bernoulli, Norlund, Stirling, Dilcher and Meixner-Pollaczek values"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")
            ->transform(CLI::IsMember({"plain", "json", "csv"}));
    };

    int n = 0, p = 0, big_n = 1;
    std::string method = "auto";

    CLI::App* bern = app.add_subcommand("bern", "Classical Bernoulli number B_n");
    bern->add_option("n", n, "Index n >= 0")->required();
    add_format(bern);

    CLI::App* genbern =
        app.add_subcommand("genbern", "Generalized Bernoulli number B_n^(p)");
    genbern->add_option("n", n, "Index n >= 0")->required();
    genbern->add_option("p", p, "Order p >= 0")->required();
    genbern->add_option("--method", method, "Algorithm")
        ->transform(CLI::IsMember({"gf", "lucas", "stirling", "recurrence", "auto"}));
    add_format(genbern);

    CLI::App* norlund_cmd =
        app.add_subcommand("norlund", "B_n^(p) as a polynomial in p (ascending coefficients)");
    norlund_cmd->add_option("n", n, "Index n >= 0")->required();
    add_format(norlund_cmd);

    CLI::App* stirling = app.add_subcommand(
        "stirling1", "Signed Stirling numbers of the first kind s_1^(p)..s_p^(p)");
    stirling->add_option("p", p, "Order p >= 1")->required();
    add_format(stirling);

    CLI::App* mp = app.add_subcommand(
        "mp", "Meixner-Pollaczek polynomial P_n^(1)(x; pi/2) coefficients");
    mp->add_option("n", n, "Degree n >= 0")->required();
    add_format(mp);

    CLI::App* dilcher = app.add_subcommand("dilcher", "Dilcher sum S_N(n)");
    dilcher->add_option("N", big_n, "Number of factors N >= 1")->required();
    dilcher->add_option("n", n, "Half weight n >= 0")->required();
    dilcher->add_option("--method", method, "Algorithm")
        ->transform(
            CLI::IsMember({"auto", "brute", "prop1", "prop2", "hyper", "mp", "coeff", "small"}));
    add_format(dilcher);

    CLI::App* table = app.add_subcommand("dilcher-table", "Dilcher coefficient triangle rows 1..N");
    table->add_option("N", big_n, "Last row N >= 1")->required();
    add_format(table);

    VerifyOptions verify_options;
    CLI::App* verify = app.add_subcommand("verify", "Run all cross-method consistency suites");
    verify->add_option("--max-N", verify_options.max_N, "Dilcher sum bound")
        ->capture_default_str();
    verify->add_option("--max-n", verify_options.max_n, "Index bound")->capture_default_str();
    verify->add_option("--max-p", verify_options.max_p, "Order bound")->capture_default_str();
    verify->add_flag("--corrupt-triangle", verify_options.corrupt_triangle)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const OutputFormat format = parse_output_format(format_name);
        if (*bern) {
            run_bern(n, format);
        } else if (*genbern) {
            run_genbern(n, p, method, format);
        } else if (*norlund_cmd) {
            run_norlund(n, format);
        } else if (*stirling) {
            run_stirling1(p, format);
        } else if (*mp) {
            run_mp(n, format);
        } else if (*dilcher) {
            run_dilcher(big_n, n, method, format);
        } else if (*table) {
            run_dilcher_table(big_n, format);
        } else if (*verify) {
            return run_verify(verify_options);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
