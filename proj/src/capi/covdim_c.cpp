#include "covdim/covdim.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "common/error.hpp"
#include "dsl/group_spec.hpp"
#include "engine/catalog.hpp"
#include "group/finite_group.hpp"
#include "io/report.hpp"

struct covdim_group {
  covdim::dsl::BuiltGroup built;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

template <class F>
int guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return COVDIM_OK;
  } catch (const covdim::Error& e) {
    last_error = covdim::io::error_json(e).dump();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = R"({"error":{"code":"CapExceeded","message":"out of memory","position":null}})";
    return COVDIM_CAP_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = nlohmann::json{{"error", {{"code", "InternalError"}, {"message", e.what()}, {"position", nullptr}}}}.dump();
    return COVDIM_INTERNAL_ERROR;
  }
}

int null_arg(const char* what) {
  last_error = nlohmann::json{{"error", {{"code", "InvalidArgument"}, {"message", std::string(what) + " is null"}, {"position", nullptr}}}}.dump();
  return COVDIM_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

int covdim_group_parse(const char* spec, covdim_group** out) {
  if (!spec || !out) return null_arg("argument");
  return guarded([&] { *out = new covdim_group{covdim::dsl::build(spec)}; });
}

void covdim_group_free(covdim_group* group) { delete group; }

int covdim_group_order(const covdim_group* group, uint64_t* out) {
  if (!group || !out) return null_arg("argument");
  *out = group->built.group.order();
  return COVDIM_OK;
}

const char* covdim_group_text(const covdim_group* group) { return group ? group->built.text.c_str() : ""; }

int covdim_analyze_json(const covdim_group* group, char** out) {
  if (!group || !out) return null_arg("argument");
  return guarded([&] { *out = copy_out(covdim::io::render(covdim::io::analyze_report(group->built))); });
}

int covdim_faithful_json(const covdim_group* group, char** out) {
  if (!group || !out) return null_arg("argument");
  return guarded([&] { *out = copy_out(covdim::io::render(covdim::io::faithful_report(group->built))); });
}

int covdim_table_json(const covdim_group* group, char** out) {
  if (!group || !out) return null_arg("argument");
  return guarded([&] { *out = copy_out(covdim::io::render(covdim::io::table_report(group->built))); });
}

int covdim_covariant_json(const char* op, const char* file_json, const uint64_t* beta, size_t beta_len, uint64_t seed,
                          char** out) {
  if (!op || !file_json || !out || (!beta && beta_len)) return null_arg("argument");
  return guarded([&] {
    std::vector<std::uint64_t> b(beta, beta + beta_len);
    *out = copy_out(covdim::io::render(covdim::io::covariant_report(op, file_json, b, seed)));
  });
}

int covdim_catalog_json(char** out) {
  if (!out) return null_arg("argument");
  return guarded([&] {
    auto entries = covdim::engine::golden_catalog();
    auto ab = covdim::engine::abelian_catalog(64);
    entries.insert(entries.end(), ab.begin(), ab.end());
    *out = copy_out(covdim::io::render(covdim::io::catalog_report(covdim::engine::verify_catalog(entries))));
  });
}

void covdim_string_free(char* s) { std::free(s); }

const char* covdim_last_error(void) { return last_error.c_str(); }

void covdim_set_order_cap(size_t cap) { covdim::set_default_order_cap(cap); }

}  // extern "C"
