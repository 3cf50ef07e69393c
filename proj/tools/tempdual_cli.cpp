// tempdual: tables and JSON catalogs of tempered duals of GL(n, R) and
// GL(n, C), their K-theory, and archimedean base change.
//
// Exit status: 0 on success, 1 on a domain error (the message names the
// violated precondition), 2 on invalid usage.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "tempdual/tempdual.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  int cutoff = 4;
  std::string field = "real";
  std::string format = "table";
};

struct DocumentDeleter {
  void operator()(tempdual_document* d) const { tempdual_document_free(d); }
};
using DocumentPtr = std::unique_ptr<tempdual_document, DocumentDeleter>;

void add_common_options(CLI::App* sub, Options& opt, bool with_field) {
  sub->add_option("--n", opt.n, "rank n of GL(n)")->required();
  sub->add_option("--cutoff", opt.cutoff, "bound on discrete labels")->capture_default_str();
  if (with_field)
    sub->add_option("--field", opt.field, "real or complex")
        ->check(CLI::IsMember({"real", "complex"}))
        ->capture_default_str();
  sub->add_option("--format", opt.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

tempdual_kind resolve_kind(const std::string& command, const std::string& field) {
  bool complex = field == "complex";
  if (command == "partitions")
    return TEMPDUAL_KIND_PARTITIONS;
  if (command == "components")
    return complex ? TEMPDUAL_KIND_COMPLEX_COMPONENTS : TEMPDUAL_KIND_REAL_COMPONENTS;
  if (command == "ktheory")
    return complex ? TEMPDUAL_KIND_K_COMPLEX : TEMPDUAL_KIND_K_REAL;
  if (command == "bc")
    return TEMPDUAL_KIND_BC;
  return TEMPDUAL_KIND_KMAP;
}

// The complex K-theory is concentrated in degree n mod 2.
bool complex_parity_holds(const tempdual_document* doc, int n) {
  uint64_t off = 0;
  if (tempdual_document_k_rank(doc, (n + 1) % 2, &off) != TEMPDUAL_OK)
    return false;
  return off == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tempdual: tempered duals of GL(n), their K-theory, and base change"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tempdual_version());

  Options opt;
  add_common_options(app.add_subcommand("partitions", "Levi shapes n = 2q + r with Weyl groups"), opt, false);
  add_common_options(app.add_subcommand("components", "components of the tempered dual"), opt, true);
  add_common_options(app.add_subcommand("ktheory", "K-groups of the reduced C*-algebra"), opt, true);
  add_common_options(app.add_subcommand("bc", "base change on components with parameter maps"), opt, false);
  add_common_options(app.add_subcommand("kmap", "base change on K-theory"), opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  tempdual_kind kind = resolve_kind(command, opt.field);

  tempdual_document* raw = nullptr;
  tempdual_status status = tempdual_document_build(kind, opt.n, opt.cutoff, &raw);
  DocumentPtr doc(raw);
  if (status != TEMPDUAL_OK) {
    std::cerr << "tempdual " << command << ": " << tempdual_last_error() << "\n";
    return status == TEMPDUAL_ERROR_DOMAIN ? kExitDomain : kExitUsage;
  }

  if (kind == TEMPDUAL_KIND_K_COMPLEX && !complex_parity_holds(doc.get(), opt.n)) {
    std::cerr << "tempdual " << command << ": self-check failed: complex K-theory not concentrated in degree "
              << opt.n % 2 << "\n";
    return kExitDomain;
  }

  const char* text = opt.format == "json" ? tempdual_document_json(doc.get()) : tempdual_document_table(doc.get());
  std::fputs(text, stdout);
  return std::fflush(stdout) == 0 ? 0 : kExitDomain;
}
