#include "tempdual/tempdual.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "tempdual/catalog.hpp"
#include "tempdual/ktheory.hpp"

struct tempdual_document {
  nlohmann::json doc;
  std::string json_text;
  std::string table_text;
};

namespace {

thread_local std::string last_error;

tempdual_status fail(tempdual_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating engine exceptions into status codes.
template <class F>
tempdual_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const std::domain_error& e) {
    return fail(TEMPDUAL_ERROR_DOMAIN, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(TEMPDUAL_ERROR_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TEMPDUAL_ERROR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TEMPDUAL_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TEMPDUAL_ERROR_INTERNAL, e.what());
  }
}

bool valid_kind(int kind) {
  return kind >= TEMPDUAL_KIND_PARTITIONS && kind <= TEMPDUAL_KIND_KMAP;
}

// tempdual_kind values mirror DocumentKind order.
tempdual::DocumentKind to_cpp(tempdual_kind kind) {
  return static_cast<tempdual::DocumentKind>(kind);
}

}  // namespace

extern "C" {

const char* tempdual_version(void) {
  return tempdual::kToolVersion;
}

const char* tempdual_last_error(void) {
  return last_error.c_str();
}

tempdual_status tempdual_kind_from_name(const char* name, tempdual_kind* out) {
  return guarded([&] {
    if (!name || !out)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "null argument");
    auto kind = tempdual::document_kind_from_string(name);
    if (!kind)
      return fail(TEMPDUAL_ERROR_ARGUMENT, std::string("unknown document kind '") + name + "'");
    *out = static_cast<tempdual_kind>(*kind);
    return TEMPDUAL_OK;
  });
}

const char* tempdual_kind_name(tempdual_kind kind) {
  return valid_kind(kind) ? tempdual::to_string(to_cpp(kind)) : "unknown";
}

tempdual_status tempdual_document_build(tempdual_kind kind, int n, int cutoff, tempdual_document** out) {
  return guarded([&] {
    if (!out)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!valid_kind(kind))
      return fail(TEMPDUAL_ERROR_ARGUMENT, "unknown document kind " + std::to_string(static_cast<int>(kind)));
    auto doc = std::make_unique<tempdual_document>();
    doc->doc = tempdual::build_document(to_cpp(kind), n, cutoff);
    doc->json_text = tempdual::to_json_text(doc->doc);
    doc->table_text = tempdual::render_table(doc->doc);
    *out = doc.release();
    return TEMPDUAL_OK;
  });
}

void tempdual_document_free(tempdual_document* doc) {
  delete doc;
}

const char* tempdual_document_json(const tempdual_document* doc) {
  return doc ? doc->json_text.c_str() : nullptr;
}

const char* tempdual_document_table(const tempdual_document* doc) {
  return doc ? doc->table_text.c_str() : nullptr;
}

tempdual_status tempdual_document_k_rank(const tempdual_document* doc, int degree, uint64_t* out) {
  return guarded([&] {
    if (!doc || !out)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "null argument");
    if (degree != 0 && degree != 1)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "degree must be 0 or 1");
    auto kind = doc->doc.at("kind").get<std::string>();
    if (kind != "k_real" && kind != "k_complex")
      return fail(TEMPDUAL_ERROR_ARGUMENT, "document of kind '" + kind + "' has no K-groups");
    for (const auto& g : doc->doc.at("payload").at("groups"))
      if (g.at("degree").get<int>() == degree) {
        *out = g.at("rank").get<uint64_t>();
        return TEMPDUAL_OK;
      }
    return fail(TEMPDUAL_ERROR_INTERNAL, "degree missing from document");
  });
}

tempdual_status tempdual_document_kmap_support(const tempdual_document* doc, uint64_t* out) {
  return guarded([&] {
    if (!doc || !out)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "null argument");
    if (doc->doc.at("kind").get<std::string>() != "kmap")
      return fail(TEMPDUAL_ERROR_ARGUMENT, "not a kmap document");
    *out = doc->doc.at("payload").at("nonzero_assignments").get<uint64_t>();
    return TEMPDUAL_OK;
  });
}

tempdual_status tempdual_k_ranks(tempdual_field field, int n, int cutoff, uint64_t* deg0, uint64_t* deg1) {
  return guarded([&] {
    if (!deg0 || !deg1)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "null argument");
    if (field != TEMPDUAL_FIELD_REAL && field != TEMPDUAL_FIELD_COMPLEX)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "unknown field");
    auto g = field == TEMPDUAL_FIELD_REAL ? tempdual::k_real(n, cutoff) : tempdual::k_complex(n, cutoff);
    *deg0 = g.k0.rank();
    *deg1 = g.k1.rank();
    return TEMPDUAL_OK;
  });
}

tempdual_status tempdual_json_reserialize(const char* text, char** out) {
  return guarded([&] {
    if (!text || !out)
      return fail(TEMPDUAL_ERROR_ARGUMENT, "null argument");
    *out = nullptr;
    auto s = tempdual::to_json_text(nlohmann::json::parse(text));
    auto* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return TEMPDUAL_OK;
  });
}

void tempdual_string_free(char* s) {
  delete[] s;
}

}  // extern "C"
