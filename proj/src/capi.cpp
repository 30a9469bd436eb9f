#include "mgfil.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "mgfil/bundle.hpp"
#include "mgfil/error.hpp"

using namespace mgfil;

struct mgfil_document {
  SpecDocument doc;
};

struct mgfil_bundle {
  ResultBundle bundle;
};

namespace {

thread_local std::string g_last_error;

mgfil_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse: return MGFIL_ERR_PARSE;
    case ErrorKind::unsupported: return MGFIL_ERR_UNSUPPORTED;
    case ErrorKind::internal: return MGFIL_ERR_INTERNAL;
    case ErrorKind::no_stabilization: return MGFIL_ERR_INTERNAL;
    default: return MGFIL_ERR_INVALID_ARGUMENT;
  }
}

template <typename Fn>
mgfil_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MGFIL_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MGFIL_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

void mgfil_options_init(mgfil_options* opt) {
  if (!opt) return;
  opt->box = -1;
  opt->margin = -1;
  opt->offset = -1;
  opt->threads = 1;
}

mgfil_status mgfil_document_parse(const char* text, size_t len, mgfil_document** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return MGFIL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto doc = std::make_unique<mgfil_document>();
    doc->doc = parse_spec(std::string(text, len));
    *out = doc.release();
  });
}

void mgfil_document_free(mgfil_document* doc) { delete doc; }

mgfil_status mgfil_run(const mgfil_document* doc, const char* command,
                       const mgfil_options* opt, mgfil_bundle** out) {
  if (!doc || !out) {
    g_last_error = "null argument";
    return MGFIL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    RunOptions ro;
    if (opt) {
      ro.box = opt->box;
      ro.margin = opt->margin;
      ro.offset = opt->offset;
      ro.threads = opt->threads > 0 ? opt->threads : 1;
    }
    if (command) ro.command = command;
    auto b = std::make_unique<mgfil_bundle>();
    b->bundle = run(doc->doc, ro);
    *out = b.release();
  });
}

void mgfil_bundle_free(mgfil_bundle* bundle) { delete bundle; }

mgfil_verdict mgfil_bundle_verdict(const mgfil_bundle* bundle) {
  if (!bundle) return MGFIL_VERDICT_INCONSISTENT;
  switch (bundle->bundle.exit_code) {
    case 0: return MGFIL_VERDICT_CONSISTENT;
    case 2: return MGFIL_VERDICT_NOT_APPLICABLE;
    default: return MGFIL_VERDICT_INCONSISTENT;
  }
}

mgfil_status mgfil_emit(const mgfil_bundle* bundle, const char* format, char** out,
                        size_t* out_len) {
  if (!bundle || !out) {
    g_last_error = "null argument";
    return MGFIL_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    std::string bytes = emit(bundle->bundle, format ? format : "table");
    char* buf = static_cast<char*>(std::malloc(bytes.size() + 1));
    if (!buf) fail(ErrorKind::internal, "out of memory");
    std::memcpy(buf, bytes.data(), bytes.size());
    buf[bytes.size()] = '\0';
    *out = buf;
    if (out_len) *out_len = bytes.size();
  });
}

void mgfil_buffer_free(char* buffer) { std::free(buffer); }

const char* mgfil_last_error(void) { return g_last_error.c_str(); }

const char* mgfil_version(void) { return "mgfil 1.0.0"; }

}  // extern "C"
