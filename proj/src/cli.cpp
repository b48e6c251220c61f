#include "jsonstats/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jsonstats/document.hpp"
#include "jsonstats/report.hpp"
#include "jsonstats/taxonomy.hpp"
#include "jsonstats/version.hpp"

namespace jsonstats::cli {

namespace {

std::optional<std::string> read_input(const std::string& path, std::istream& in, std::string& reason) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        reason = std::strerror(errno);
        return std::nullopt;
    }
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    if (file.bad()) {
        reason = "read error";
        return std::nullopt;
    }
    return text;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const std::string program = args.empty() ? "json-taxonomy" : args.front();

    CLI::App app{"Classify a JSON document by size, content, redundancy and nesting", program};
    app.set_version_flag("--version", version);

    std::string path;
    bool report = false;
    bool acronym_only = false;
    app.add_option("path", path, "JSON document to analyze, or - for standard input")->required();
    auto* report_flag = app.add_flag("--report", report, "Print the full analysis report as JSON");
    auto* acronym_flag = app.add_flag("--acronym", acronym_only, "Print only the acronym");
    report_flag->excludes(acronym_flag);

    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForVersion&) {
        out << version << '\n';
        return success;
    } catch (const CLI::ParseError& e) {
        err << program << ": " << e.what() << "\n\n" << app.help();
        return usage_error;
    }

    std::string reason;
    const auto text = read_input(path, in, reason);
    if (!text) {
        err << program << ": cannot read '" << path << "': " << reason << '\n';
        return failure;
    }

    const auto parsed = parse(*text);
    if (!parsed) {
        const auto& e = parsed.error();
        err << (path == "-" ? std::string("<stdin>") : path) << ':' << e.line << ':' << e.column << ": "
            << e.message << '\n';
        return failure;
    }

    const DocumentStats stats = compute_stats(parsed.value());
    if (report) {
        out << serialize_report(build_report(stats)) << '\n';
        return success;
    }

    const TaxonomyLabel label = classify(stats);
    if (!acronym_only) {
        for (const auto& q : label.qualifiers) {
            out << q << '\n';
        }
    }
    out << label.acronym.value_or(std::string(no_acronym_marker)) << '\n';
    return success;
}

} // namespace jsonstats::cli
