#include "jsonstats/service.hpp"

#include <stdexcept>

#include <httplib.h>

#include "jsonstats/document.hpp"
#include "jsonstats/report.hpp"

namespace jsonstats::service {

namespace {

constexpr const char* json_type = "application/json";

void send(httplib::Response& res, const Reply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
}

Reply error_reply(int status, std::string_view message) {
    return Reply{status,
                 minify(Value::object({{"error", Value::object({{"message", Value::string(std::string(message))}})}})),
                 json_type};
}

httplib::Server::Handler method_not_allowed(std::string allow) {
    return [allow = std::move(allow)](const httplib::Request&, httplib::Response& res) {
        res.set_header("Allow", allow);
        send(res, error_reply(405, "method not allowed"));
    };
}

} // namespace

Reply analyze(std::string_view document) {
    const auto parsed = parse(document);
    if (!parsed) {
        return Reply{422, serialize_failure(parsed.error()), json_type};
    }
    return Reply{200, serialize_report(build_report(parsed.value())), json_type};
}

Reply health() {
    return Reply{200,
                 minify(Value::object({{"status", Value::string("ok")},
                                       {"schemaVersion", Value::number(report_schema_version)}})),
                 json_type};
}

void configure(httplib::Server& server, const Config& config) {
    server.set_payload_max_length(config.body_limit);

    server.Post("/api/analyze", [](const httplib::Request& req, httplib::Response& res) {
        send(res, analyze(req.body));
    });
    const auto analyze_405 = method_not_allowed("POST, OPTIONS");
    server.Get("/api/analyze", analyze_405);
    server.Put("/api/analyze", analyze_405);
    server.Patch("/api/analyze", analyze_405);
    server.Delete("/api/analyze", analyze_405);

    // HEAD is answered by the GET handler with the body stripped.
    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) { send(res, health()); });
    const auto health_405 = method_not_allowed("GET, HEAD, OPTIONS");
    server.Post("/api/health", health_405);
    server.Put("/api/health", health_405);
    server.Patch("/api/health", health_405);
    server.Delete("/api/health", health_405);

    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server.set_post_routing_handler([](const httplib::Request& req, httplib::Response& res) {
        if (req.path.rfind("/api/", 0) == 0) {
            res.set_header("Access-Control-Allow-Origin", "*");
            res.set_header("Access-Control-Allow-Methods", "GET, HEAD, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
        }
    });

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) {
            send(res, error_reply(res.status, httplib::status_message(res.status)));
        }
    });

    if (!config.asset_dir.empty() && !server.set_mount_point("/", config.asset_dir)) {
        throw std::runtime_error("cannot serve assets from '" + config.asset_dir + "'");
    }
}

} // namespace jsonstats::service
