#include <csignal>
#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "jsonstats/service.hpp"
#include "jsonstats/version.hpp"

namespace {

httplib::Server* running_server = nullptr;

extern "C" void handle_signal(int) {
    if (running_server != nullptr) {
        running_server->stop();
    }
}

} // namespace

int main(int argc, char** argv) {
    jsonstats::service::Config config;

    CLI::App app{"HTTP service for JSON document analysis", "json-taxonomy-server"};
    app.set_version_flag("--version", jsonstats::version);
    app.add_option("--host", config.host, "Address to bind")->envname("JSON_TAXONOMY_HOST")->capture_default_str();
    app.add_option("--port", config.port, "Port to listen on")
        ->envname("JSON_TAXONOMY_PORT")
        ->check(CLI::Range(0, 65535))
        ->capture_default_str();
    app.add_option("--assets", config.asset_dir, "Directory of static UI assets served at /")
        ->envname("JSON_TAXONOMY_ASSETS")
        ->check(CLI::ExistingDirectory);
    app.add_option("--body-limit", config.body_limit, "Maximum request body in bytes")
        ->envname("JSON_TAXONOMY_BODY_LIMIT")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    httplib::Server server;
    try {
        jsonstats::service::configure(server, config);
    } catch (const std::exception& e) {
        std::cerr << "json-taxonomy-server: " << e.what() << '\n';
        return 1;
    }

    running_server = &server;
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);

    std::cerr << "listening on " << config.host << ':' << config.port << '\n';
    if (!server.listen(config.host, config.port)) {
        std::cerr << "json-taxonomy-server: cannot listen on " << config.host << ':' << config.port << '\n';
        return 1;
    }
    return 0;
}
