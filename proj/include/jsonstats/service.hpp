#ifndef JSONSTATS_SERVICE_HPP
#define JSONSTATS_SERVICE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace jsonstats::service {

inline constexpr std::size_t default_body_limit = 10 * 1024 * 1024;

struct Config {
    std::string host = "0.0.0.0";
    int port = 8080;
    /// Directory served at "/"; empty disables static files.
    std::string asset_dir;
    std::size_t body_limit = default_body_limit;
};

struct Reply {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// POST /api/analyze: 200 with the report, or 422 with the parse error.
Reply analyze(std::string_view document);

/// GET /api/health
Reply health();

/// Installs routes, limits, CORS headers and the static mount on `server`.
/// Throws std::runtime_error if the asset directory cannot be mounted.
void configure(httplib::Server& server, const Config& config);

} // namespace jsonstats::service

#endif
