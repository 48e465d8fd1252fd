#pragma once

#include <memory>
#include <string>

#include "cnr/service.hpp"

namespace cnr {

/// HTTP + JSON front end for a SessionManager.
///
///   POST /sessions                 {graph, role, strategy, convention} -> {id, state}
///   GET  /sessions/{id}/state      ?x0&y0&x1&y1
///   POST /sessions/{id}/moves      {x, y}
///   GET  /sessions/{id}/hint
///   GET  /healthz
///
/// Failures answer {code, message} with a 4xx status.
class HttpService {
public:
    explicit HttpService(SessionManager& sessions);
    ~HttpService();
    HttpService(const HttpService&) = delete;
    HttpService& operator=(const HttpService&) = delete;

    /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after a successful bind().
    bool serve();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cnr
