#include "cnr/http_service.hpp"

#include <httplib.h>

namespace cnr {

using nlohmann::json;

namespace {

void send_json(httplib::Response& res, const json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message) {
    send_json(res, {{"code", code}, {"message", message}}, status);
}

std::optional<std::string> param(const httplib::Request& req, const char* name) {
    if (!req.has_param(name)) return std::nullopt;
    return req.get_param_value(name);
}

std::optional<Box> viewport_of(const httplib::Request& req) {
    return parse_viewport(param(req, "x0"), param(req, "y0"), param(req, "x1"), param(req, "y1"));
}

json body_of(const httplib::Request& req) {
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) throw ServiceError(400, "bad_request", "request body is not valid JSON");
    return body;
}

Coord coordinate(const json& body, const char* name) {
    const auto it = body.find(name);
    if (it == body.end() || !it->is_number_unsigned())
        throw ServiceError(400, "bad_request", std::string("field '") + name + "' must be a natural number");
    return it->get<Coord>();
}

// Runs a handler, mapping ServiceError and stray exceptions onto {code, message}.
template <class F>
httplib::Server::Handler guarded(F handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
        try {
            handler(req, res);
        } catch (const ServiceError& e) {
            send_error(res, e.status(), e.code(), e.what());
        } catch (const std::exception& e) {
            send_error(res, 500, "internal", e.what());
        }
    };
}

}  // namespace

struct HttpService::Impl {
    SessionManager& sessions;
    httplib::Server server;

    explicit Impl(SessionManager& s) : sessions(s) {
        server.Get("/healthz", guarded([](const httplib::Request&, httplib::Response& res) {
            send_json(res, {{"status", "ok"}});
        }));
        server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
            send_json(res, sessions.create(session_spec_from_json(body_of(req))), 201);
        }));
        server.Get(R"(/sessions/([0-9a-f]+)/state)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            send_json(res, sessions.find(req.matches[1])->state(viewport_of(req)));
        }));
        server.Post(R"(/sessions/([0-9a-f]+)/moves)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const json body = body_of(req);
            if (!body.is_object()) throw ServiceError(400, "bad_request", "move must be an object {x, y}");
            const Vertex to{coordinate(body, "x"), coordinate(body, "y")};
            send_json(res, sessions.find(req.matches[1])->post_move(to, viewport_of(req)));
        }));
        server.Get(R"(/sessions/([0-9a-f]+)/hint)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            send_json(res, sessions.find(req.matches[1])->hint());
        }));
        server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
            if (res.body.empty()) send_error(res, res.status, "not_found", "no such route");
        });
    }
};

HttpService::HttpService(SessionManager& sessions) : impl_(std::make_unique<Impl>(sessions)) {}
HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::serve() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace cnr
