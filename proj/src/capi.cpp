#include "../include/nilform.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "nilform/session.hpp"

#if defined(__GNUC__)
#define NF_EXPORT __attribute__((visibility("default")))
#else
#define NF_EXPORT
#endif

struct nf_session {
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

}  // namespace

extern "C" {

NF_EXPORT nf_session* nf_session_new(void) { return new (std::nothrow) nf_session(); }

NF_EXPORT void nf_session_free(nf_session* s) { delete s; }

NF_EXPORT int nf_run(nf_session* s, const char* request_json, char** response_json) {
    using nilform::Json;
    using nilform::Status;
    if (response_json) *response_json = nullptr;
    std::string err;
    int code = 0;
    try {
        Json request = Json::parse(request_json ? request_json : "");
        auto [status, response] = nilform::run_request_caught(request);
        code = static_cast<int>(status);
        if (code != 0) err = response.value("message", "error");
        if (response_json) *response_json = dup_string(response.dump(2));
    } catch (const Json::exception& e) {
        code = static_cast<int>(Status::ParseFailure);
        err = e.what();
        Json response;
        response["status"] = "error";
        response["kind"] = "parse";
        response["message"] = err;
        if (response_json) *response_json = dup_string(response.dump(2));
    } catch (const std::exception& e) {
        code = static_cast<int>(Status::MathDomain);
        err = e.what();
        Json response;
        response["status"] = "error";
        response["kind"] = "internal";
        response["message"] = err;
        if (response_json) *response_json = dup_string(response.dump(2));
    }
    if (s) s->last_error = err;
    return code;
}

NF_EXPORT const char* nf_last_error(const nf_session* s) {
    return s ? s->last_error.c_str() : "";
}

NF_EXPORT void nf_free(char* p) { std::free(p); }

NF_EXPORT const char* nf_version(void) { return "0.1.0"; }

}  // extern "C"
